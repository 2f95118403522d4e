"""Hash-consed DAG representation and the DAG-building interpreter.

A compiled program is a dense array of flat nodes where structurally equal
subexpressions occupy exactly one slot and every node's children sit at
smaller ids. Construction works bottom-up: consing a node first looks it up
in the bijection between nodes and ids, and only inserts on a miss. The
explicit sharing form runs its bound expression once and replicates the
resulting id, which is what makes compact programs build in time
proportional to the DAG rather than to the expanded tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .builders import FullBuilder, Program, require_name

NodeId = int


class Node:
    """Base of the flat node variants; children are ids of earlier nodes."""


@dataclass(frozen=True)
class NConst(Node):
    value: int

    def __str__(self):
        return f"NConst {self.value}"


@dataclass(frozen=True)
class NVar(Node):
    name: str

    def __str__(self):
        return f'NVar "{self.name}"'


@dataclass(frozen=True)
class NAdd(Node):
    left: NodeId
    right: NodeId

    def __str__(self):
        return f"NAdd {self.left} {self.right}"


@dataclass(frozen=True)
class NNeg(Node):
    operand: NodeId

    def __str__(self):
        return f"NNeg {self.operand}"


@dataclass(frozen=True)
class NSub(Node):
    left: NodeId
    right: NodeId

    def __str__(self):
        return f"NSub {self.left} {self.right}"


class BiMap:
    """Bijection between values and dense integer keys issued from 0 upward.

    Both directions are O(1): a dict indexes value to key, a list indexes
    key to value.
    """

    def __init__(self) -> None:
        self._key_of: dict = {}
        self._val_of: list = []

    def __len__(self) -> int:
        return len(self._val_of)

    def lookup_key(self, value) -> NodeId | None:
        """The key of a present value, or None."""
        return self._key_of.get(value)

    def lookup_val(self, key: NodeId):
        """The value at a key; a missing key is a hard error."""
        if not 0 <= key < len(self._val_of):
            raise KeyError(key)
        return self._val_of[key]

    def insert(self, value) -> NodeId:
        """Associate a new value with the next key and return that key.

        Inserting a value that is already present is a contract violation;
        callers are expected to check with lookup_key first.
        """
        assert value not in self._key_of, f"value already present: {value!r}"
        key = len(self._val_of)
        self._key_of[value] = key
        self._val_of.append(value)
        return key

    def items(self) -> list[tuple[NodeId, object]]:
        return list(enumerate(self._val_of))


class Dag:
    """A sharing-maximal node store.

    Ids are dense, children always live at smaller ids, and no two ids hold
    equal nodes. Instances returned by build_dag/build_forest are frozen:
    nothing mutates them afterwards.
    """

    def __init__(self, nodes: BiMap | None = None):
        self._nodes = BiMap() if nodes is None else nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def node(self, node_id: NodeId) -> Node:
        return self._nodes.lookup_val(node_id)

    def items(self) -> list[tuple[NodeId, Node]]:
        return self._nodes.items()

    def __eq__(self, other):
        if not isinstance(other, Dag):
            return NotImplemented
        return self.items() == other.items()

    def __repr__(self):
        return f"Dag({self.items()!r})"


class BuildSession:
    """Single-owner construction state: one growing Dag, frozen on handoff."""

    def __init__(self) -> None:
        self._dag = Dag()
        self._frozen = False

    def hashcons(self, node: Node) -> NodeId:
        """Return the id of an equal existing node, inserting on a miss.

        The node's children must already be allocated in this session.
        """
        if self._frozen:
            raise RuntimeError("session is frozen")
        nodes = self._dag._nodes
        key = nodes.lookup_key(node)
        if key is None:
            key = nodes.insert(node)
        return key

    def freeze(self) -> Dag:
        self._frozen = True
        return self._dag


@dataclass(frozen=True)
class DagTerm:
    """Deferred build step: running it conses this term's nodes into a
    session and yields the term's node id.

    Keeping terms deferred (rather than already-built ids) means a term that
    appears twice is built twice unless the program shares it with let_;
    hash-consing still collapses the duplicates in the result.
    """

    run: Callable[[BuildSession], NodeId]


class DagBuilder(FullBuilder[DagTerm]):
    """Builds hash-consed DAGs bottom-up, left to right.

    let_ is the one construct that forces a computation exactly once and
    hands every use in the body the already-allocated id.
    """

    def constant(self, value):
        return DagTerm(lambda session: session.hashcons(NConst(value)))

    def variable(self, name):
        require_name(name)
        return DagTerm(lambda session: session.hashcons(NVar(name)))

    def add(self, left, right):
        def run(session):
            lhs = left.run(session)
            rhs = right.run(session)
            return session.hashcons(NAdd(lhs, rhs))

        return DagTerm(run)

    def neg(self, operand):
        def run(session):
            return session.hashcons(NNeg(operand.run(session)))

        return DagTerm(run)

    def sub(self, left, right):
        def run(session):
            lhs = left.run(session)
            rhs = right.run(session)
            return session.hashcons(NSub(lhs, rhs))

        return DagTerm(run)

    def let_(self, bound, body):
        def run(session):
            shared = bound.run(session)
            return body(DagTerm(lambda _session: shared)).run(session)

        return DagTerm(run)


def build_dag(program: Program) -> tuple[NodeId, Dag]:
    """Compile a program to its root id and frozen Dag."""
    term = program(DagBuilder())
    session = BuildSession()
    root = term.run(session)
    return root, session.freeze()


def build_forest(program: Callable[[DagBuilder], Sequence[DagTerm]]) -> tuple[list[NodeId], Dag]:
    """Compile a program yielding several terms against one shared Dag.

    All terms are built in list order within a single session, so equal
    subexpressions are shared across independent roots.
    """
    terms = program(DagBuilder())
    session = BuildSession()
    roots = [term.run(session) for term in terms]
    return roots, session.freeze()


def format_dag(roots: NodeId | Iterable[NodeId], dag: Dag) -> str:
    """Association-list display, e.g. (2,DAG BiMap[(0,NVar "i1"),...])."""
    if isinstance(roots, int):
        head = str(roots)
    else:
        head = "[" + ",".join(str(r) for r in roots) + "]"
    body = ",".join(f"({i},{node})" for i, node in dag.items())
    return f"({head},DAG BiMap[{body}])"
