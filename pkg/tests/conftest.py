"""Pytest rootdir marker; test helpers live in helpers.py next to the tests."""
