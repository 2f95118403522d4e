"""Backends over frozen Dags: evaluation, netlist text, three-address text.

Both emitters lean on the topological id order: one line per node, in id
order, can only ever reference earlier lines.
"""

from __future__ import annotations

from typing import Iterable

from .dag import Dag, NAdd, NConst, NNeg, NodeId, NSub, NVar
from .interp import Env, UnboundVariableError, wrap64


def eval_dag(dag: Dag, root: NodeId, env: Env) -> int:
    """Evaluate bottom-up in id order; every node is computed exactly once."""
    dag.node(root)
    values: list[int] = []
    for node_id, node in dag.items():
        if node_id > root:
            break
        match node:
            case NConst(value):
                values.append(wrap64(value))
            case NVar(name):
                try:
                    values.append(wrap64(env[name]))
                except KeyError:
                    raise UnboundVariableError(name) from None
            case NAdd(left, right):
                values.append(wrap64(values[left] + values[right]))
            case NNeg(operand):
                values.append(wrap64(-values[operand]))
            case NSub(left, right):
                values.append(wrap64(values[left] - values[right]))
    return values[root]


def emit_netlist(dag: Dag, roots: Iterable[NodeId]) -> str:
    """One line per node in id order, then one "out" line per root."""
    lines = []
    for node_id, node in dag.items():
        match node:
            case NConst(value):
                rhs = f"const {value}"
            case NVar(name):
                rhs = f"input {name}"
            case NAdd(left, right):
                rhs = f"add n{left} n{right}"
            case NNeg(operand):
                rhs = f"neg n{operand}"
            case NSub(left, right):
                rhs = f"sub n{left} n{right}"
        lines.append(f"n{node_id} = {rhs}")
    for root in roots:
        dag.node(root)
        lines.append(f"out n{root}")
    return "".join(line + "\n" for line in lines)


def emit_threeaddr(dag: Dag, root: NodeId) -> str:
    """Naive pseudo-assembly: one virtual register per node id, no register
    allocation, finished by a RET of the root's register."""
    dag.node(root)
    lines = []
    for node_id, node in dag.items():
        match node:
            case NConst(value):
                lines.append(f"LOADI r{node_id}, {value}")
            case NVar(name):
                lines.append(f"LOADV r{node_id}, {name}")
            case NAdd(left, right):
                lines.append(f"ADD r{node_id}, r{left}, r{right}")
            case NNeg(operand):
                lines.append(f"NEG r{node_id}, r{operand}")
            case NSub(left, right):
                lines.append(f"SUB r{node_id}, r{left}, r{right}")
    lines.append(f"RET r{root}")
    return "".join(line + "\n" for line in lines)
