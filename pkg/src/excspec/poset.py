"""Finite poset value object shared by the spectrum modules: node list,
full order relation, and Hasse cover edges obtained by transitive
reduction.  The relation is the source of truth; covers exist for
readable diagram output."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

__all__ = ["Poset", "build_poset", "transitive_reduction"]


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset.  `relation` holds every ordered pair
    (a, b) with node a <= node b and a != b, as indices into `nodes`;
    `covers` is its transitive reduction."""

    nodes: tuple
    relation: frozenset = field(default_factory=frozenset)
    covers: tuple = ()

    def __len__(self) -> int:
        return len(self.nodes)

    def leq(self, a, b) -> bool:
        if a == b:
            return a in self.nodes
        ia, ib = self.nodes.index(a), self.nodes.index(b)
        return (ia, ib) in self.relation

    def minimal(self) -> list:
        has_below = {b for _, b in self.relation}
        return [n for i, n in enumerate(self.nodes) if i not in has_below]

    def maximal(self) -> list:
        has_above = {a for a, _ in self.relation}
        return [n for i, n in enumerate(self.nodes) if i not in has_above]


def transitive_reduction(n: int, relation: frozenset) -> tuple:
    """Cover pairs of a strict order given as index pairs: (a, b) is a
    cover iff a < b with no c strictly between."""
    covers = []
    for a, b in sorted(relation):
        if any(
            (a, c) in relation and (c, b) in relation
            for c in range(n)
            if c != a and c != b
        ):
            continue
        covers.append((a, b))
    return tuple(covers)


def build_poset(nodes: Sequence, leq: Callable) -> Poset:
    """Assemble a Poset from an ordered node sequence and a reflexive
    order predicate.  Node order is preserved, so deterministic input
    order yields deterministic serialization downstream."""
    nodes = tuple(nodes)
    n = len(nodes)
    relation = frozenset(
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and leq(nodes[i], nodes[j])
    )
    return Poset(nodes=nodes, relation=relation, covers=transitive_reduction(n, relation))
