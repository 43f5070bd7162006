"""Down-sets of the morphism poset generated by iterated covering maps."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple

from .bits import DomainError, ResourceError
from .code import Code, canonical_key, format_key, is_reduced, key_to_code, trunk_count
from .covering import covering_map

MAX_ENUM_N = 4


class Node(NamedTuple):
    t: int
    d: int
    lam: int
    code: Code


class Edge(NamedTuple):
    parent: tuple
    child: tuple
    neuron: int
    bmf: bool
    reduced_bmf: bool


@dataclass
class PosetGraph:
    """Isomorphism classes keyed by :func:`canonical_key`, with covering edges."""

    nodes: dict = field(default_factory=dict)
    edges: list = field(default_factory=list)
    truncated: bool = False

    def ordered_keys(self) -> list:
        return sorted(self.nodes, key=lambda k: (-self.nodes[k].t, self.nodes[k].d, k))

    def lambda_growth(self) -> tuple:
        """Largest ``lam(child) - lam(parent)`` over edges, with one edge attaining it."""
        best = None
        for e in sorted(self.edges):
            g = self.nodes[e.child].lam - self.nodes[e.parent].lam
            if best is None or g > best[0]:
                best = (g, e)
        return best if best is not None else (0, None)

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {"label": format_key(k), "t": v.t, "d": v.d, "lambda": v.lam}
                for k, v in ((k, self.nodes[k]) for k in self.ordered_keys())
            ],
            "edges": [
                {"from": format_key(e.parent), "to": format_key(e.child), "neuron": e.neuron + 1, "bmf": e.bmf, "reduced_bmf": e.reduced_bmf}
                for e in sorted(self.edges)
            ],
            "truncated": self.truncated,
            "max_lambda_growth": self.lambda_growth()[0],
        }


def enumerate_reduced_codes(n: int) -> list[Code]:
    """One reduced representative per isomorphism class with exactly ``n`` neurons."""
    if n > MAX_ENUM_N:
        raise ResourceError(f"enumerating all codes on {n} neurons means 2**{1 << n} subsets; limit is n <= {MAX_ENUM_N}")
    if n < 0:
        raise DomainError("neuron count must be non-negative")
    seen: dict = {}
    for mask in range(1 << (1 << n)):
        words = frozenset(w for w in range(1 << n) if (mask >> w) & 1)
        C = Code(n, words)
        if not is_reduced(C):
            continue
        key = canonical_key(C)
        if key not in seen:
            seen[key] = key_to_code(key)
    return [seen[k] for k in sorted(seen)]


def _node(C: Code) -> Node:
    t = trunk_count(C)
    return Node(t, t - len(C), C.n, C)


def downset(seeds: Iterable[Code], limit: int | None = None) -> PosetGraph:
    """Breadth-first closure of ``seeds`` under covering maps at every neuron.

    Nodes are stored with their canonical representative, which is reduced,
    so ``lam`` is its neuron count.  Stops early (``truncated``) once
    ``limit`` nodes exist.
    """
    G = PosetGraph()
    queue: deque = deque()
    for C in seeds:
        key = canonical_key(C)
        if key not in G.nodes:
            G.nodes[key] = _node(key_to_code(key))
            queue.append(key)
    while queue:
        key = queue.popleft()
        C = G.nodes[key].code
        for i in range(C.n):
            step = covering_map(C, i)
            child = canonical_key(step.image)
            if child not in G.nodes:
                if limit is not None and len(G.nodes) >= limit:
                    G.truncated = True
                    continue
                G.nodes[child] = _node(key_to_code(child))
                queue.append(child)
            G.edges.append(Edge(key, child, i, step.is_bmf_step, step.reduced_bmf))
    return G


def export_dot(G: PosetGraph, path=None) -> str:
    """Graphviz text: one rank per trunk count, BMF edges solid, others dashed."""
    ids = {k: f"n{idx}" for idx, k in enumerate(G.ordered_keys())}
    lines = ["digraph pcode {", "  rankdir=TB;", "  node [shape=box, fontsize=10];"]
    by_t: dict = {}
    for k in G.ordered_keys():
        v = G.nodes[k]
        by_t.setdefault(v.t, []).append(k)
        rows = "\\n".join("".join(str(b) for b in row) for row in v.code.matrix()) or "(empty)"
        lines.append(f'  {ids[k]} [label="{rows}\\nt={v.t}, d={v.d}, λ={v.lam}"];')
    for t in sorted(by_t, reverse=True):
        lines.append("  { rank=same; " + " ".join(ids[k] for k in by_t[t]) + "; }")
    for e in sorted(G.edges):
        style = "solid" if e.bmf else "dashed"
        lines.append(f'  {ids[e.parent]} -> {ids[e.child]} [style={style}, label="{e.neuron + 1}"];')
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def export_json(G: PosetGraph, path=None) -> str:
    text = json.dumps(G.to_dict(), indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


#: JSON schema for :func:`export_json` output.
POSET_SCHEMA = {
    "type": "object",
    "required": ["nodes", "edges"],
    "properties": {
        "nodes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["label", "t", "d", "lambda"],
                "properties": {
                    "label": {"type": "string"},
                    "t": {"type": "integer", "minimum": 0},
                    "d": {"type": "integer", "minimum": 0},
                    "lambda": {"type": "integer", "minimum": 0},
                },
            },
        },
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to", "neuron", "bmf"],
                "properties": {
                    "from": {"type": "string"},
                    "to": {"type": "string"},
                    "neuron": {"type": "integer", "minimum": 1},
                    "bmf": {"type": "boolean"},
                    "reduced_bmf": {"type": "boolean"},
                },
            },
        },
        "truncated": {"type": "boolean"},
        "max_lambda_growth": {"type": "integer"},
    },
}
