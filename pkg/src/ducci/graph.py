"""Transition graphs: each tuple has one outgoing edge (to its image), and
a connected component is a set of trees hanging off a single cycle.

The forward map is cheap; the interesting direction is backwards.  A
predecessor v of u must satisfy v_i + v_{i+1} = u_i cyclically, so fixing
v_1 forces the rest by v_{i+1} = u_i - v_i, and the candidate survives iff
the wrap-around equation v_n + v_1 = u_n also holds.  That gives at most m
predecessors, found in O(n m) per node, and lets us grow the full
component of a tuple by reverse search from its cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO

from .core import BudgetExceeded, Params, Tuple, ducci_step

DEFAULT_NODE_BUDGET = 100_000


@dataclass(frozen=True)
class TransitionGraph:
    """One connected component: every node's image is also a node, and
    cycle_nodes marks the unique cycle the component drains into."""

    params: Params
    nodes: tuple[Tuple, ...]  # sorted by state index
    edges: dict[Tuple, Tuple]  # u -> D(u), one entry per node
    cycle_nodes: frozenset[Tuple]


def predecessors(u: Tuple) -> list[Tuple]:
    """All v with D(v) = u, in increasing state-index order."""
    n, m = u.params.n, u.params.m
    out = []
    for v1 in range(m):
        v = [v1]
        for i in range(n - 1):
            v.append((u[i] - v[i]) % m)
        if (v[n - 1] + v[0]) % m == u[n - 1]:
            out.append(u.params.tuple(v))
    return out


def component_of(u: Tuple, node_budget: int = DEFAULT_NODE_BUDGET) -> TransitionGraph:
    """The whole connected component containing u: walk forward to find
    the cycle, then search backwards through predecessors until the trees
    are exhausted.  Raises BudgetExceeded if the component (or even just
    the forward orbit) outgrows node_budget."""
    seen: dict[Tuple, int] = {}
    cur = u
    step = 0
    while cur not in seen:
        seen[cur] = step
        cur = ducci_step(cur)
        step += 1
        if step > node_budget:
            raise BudgetExceeded(
                f"forward orbit exceeded {node_budget} nodes before cycling"
            )
    # cur is the first repeated tuple; everything from its first visit on
    # is the cycle
    cycle_start = seen[cur]
    cycle = [v for v, s in seen.items() if s >= cycle_start]

    visited: set[Tuple] = set(cycle)
    frontier = list(cycle)
    while frontier:
        nxt = []
        for node in frontier:
            for p in predecessors(node):
                if p not in visited:
                    visited.add(p)
                    nxt.append(p)
                    if len(visited) > node_budget:
                        raise BudgetExceeded(
                            f"component exceeded {node_budget} nodes"
                        )
        frontier = nxt

    nodes = tuple(sorted(visited, key=lambda t: t.index()))
    edges = {v: ducci_step(v) for v in nodes}
    return TransitionGraph(
        params=u.params,
        nodes=nodes,
        edges=edges,
        cycle_nodes=frozenset(cycle),
    )


def _label(t: Tuple) -> str:
    return "(" + ",".join(str(x) for x in t.entries) + ")"


def export_dot(g: TransitionGraph, fh: IO[str] | None = None) -> str:
    """DOT text for the component; byte-identical across runs: nodes are
    emitted in state-index order, cycle nodes drawn as double circles."""
    lines = ["digraph ducci {"]
    for v in g.nodes:
        shape = "doublecircle" if v in g.cycle_nodes else "circle"
        lines.append(f'  "{_label(v)}" [shape={shape}];')
    for v in g.nodes:
        lines.append(f'  "{_label(v)}" -> "{_label(g.edges[v])}";')
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if fh is not None:
        fh.write(text)
    return text
