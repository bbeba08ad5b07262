# matroid.py
"""
Matroids given by an explicit basis family on the ground set 0..n-1.

Minors relabel the surviving elements densely (ascending) and keep a label
map back to the ground set of the matroid the chain of minors started from.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain, combinations

import networkx as nx

from errors import EmptyFamily, NotAMatroid, ParseError

logger = logging.getLogger(__name__)


def powerset(iterable):
    s = list(iterable)
    return chain.from_iterable(combinations(s, r) for r in range(len(s) + 1))


def _canonical(family):
    return tuple(sorted({tuple(sorted(set(subset))) for subset in family}))


# ---------- Types ----------

@dataclass(frozen=True)
class Matroid:
    n: int
    bases: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n)))

    @property
    def rank(self):
        return len(self.bases[0])

    @cached_property
    def independent(self):
        """Every independent set, as frozensets."""
        return frozenset(frozenset(s) for basis in self.bases for s in powerset(basis))

    @cached_property
    def circuits(self):
        found = []
        for size in range(1, min(self.rank + 1, self.n) + 1):
            for subset in combinations(range(self.n), size):
                candidate = frozenset(subset)
                if candidate in self.independent:
                    continue
                if all(candidate - {e} in self.independent for e in candidate):
                    found.append(subset)
        return tuple(sorted(found))

    def to_dict(self):
        return {"n": self.n, "rank": self.rank, "bases": [list(b) for b in self.bases]}


@dataclass(frozen=True)
class ElementOrder:
    """A linear order on 0..n-1, listed from least to greatest."""

    sequence: tuple

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(int(e) for e in self.sequence))
        if sorted(self.sequence) != list(range(len(self.sequence))):
            raise ParseError(f"order {list(self.sequence)} is not a permutation")

    @classmethod
    def natural(cls, n):
        return cls(tuple(range(n)))

    @cached_property
    def position(self):
        return {e: k for k, e in enumerate(self.sequence)}

    def least(self, subset):
        return min(subset, key=self.position.__getitem__)

    def greatest(self, subset):
        return max(subset, key=self.position.__getitem__)

    def induced(self, removed):
        """Order on the minor that drops `removed` and relabels survivors ascending."""
        removed = set(removed)
        keep = [e for e in range(len(self.sequence)) if e not in removed]
        new_label = {old: new for new, old in enumerate(keep)}
        return ElementOrder(tuple(new_label[e] for e in self.sequence if e not in removed))


# ---------- Construction ----------

def check_bases(family):
    """
    First violation of the basis axioms in a canonical family, or None.
    A violation is a dict naming the offending bases (and element, for exchange).
    """
    sizes = {len(b) for b in family}
    if len(sizes) > 1:
        small = min(family, key=len)
        large = max(family, key=len)
        return {"reason": "unequal basis sizes", "b1": list(small), "b2": list(large)}

    basis_sets = {frozenset(b) for b in family}
    for b1 in family:
        s1 = set(b1)
        for b2 in family:
            s2 = set(b2)
            if s1 == s2:
                continue
            for e in sorted(s1 - s2):
                if not any(frozenset((s1 - {e}) | {f}) in basis_sets for f in s2 - s1):
                    return {"reason": "exchange fails", "b1": list(b1), "b2": list(b2), "e": e}
    return None


def _check_range(n, family, what):
    for subset in family:
        for e in subset:
            if not 0 <= e < n:
                raise NotAMatroid(f"{what} {list(subset)} has element {e} outside 0..{n - 1}")


def from_bases(n, bases):
    family = _canonical(bases)
    if not family:
        raise EmptyFamily("basis family is empty")
    _check_range(n, family, "basis")

    violation = check_bases(family)
    if violation:
        raise NotAMatroid(violation["reason"], witness=violation)
    return Matroid(n, family)


def check_circuits(n, circuits):
    """First violation of the circuit axioms, or None."""
    family = _canonical(circuits)
    if any(len(c) == 0 for c in family):
        return {"reason": "empty circuit"}

    sets = [frozenset(c) for c in family]
    for c1, c2 in combinations(sets, 2):
        if c1 < c2 or c2 < c1:
            return {"reason": "circuit contains another", "c1": sorted(c1), "c2": sorted(c2)}

    for c1, c2 in combinations(sets, 2):
        for e in sorted(c1 & c2):
            rest = (c1 | c2) - {e}
            if not any(c3 <= rest for c3 in sets):
                return {
                    "reason": "circuit elimination fails",
                    "c1": sorted(c1),
                    "c2": sorted(c2),
                    "e": e,
                }
    return None


def from_circuits(n, circuits):
    family = _canonical(circuits)
    _check_range(n, family, "circuit")
    violation = check_circuits(n, family)
    if violation:
        raise NotAMatroid(violation["reason"], witness=violation)

    sets = [frozenset(c) for c in family]
    independent = [
        subset for subset in powerset(range(n))
        if not any(c <= set(subset) for c in sets)
    ]
    top = max(len(s) for s in independent)
    return from_bases(n, [s for s in independent if len(s) == top])


def uniform(r, n):
    if not 0 <= r <= n:
        raise NotAMatroid(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, tuple(combinations(range(n), r)))


def circuit(j):
    """The j-element circuit C(j)."""
    return uniform(j - 1, j)


def from_graph(vertices, edges):
    """Cycle matroid of a multigraph; element k is edges[k]."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(vertices))
    for key, (u, v) in enumerate(edges):
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise ParseError(f"edge {key} = ({u}, {v}) has an endpoint outside 0..{vertices - 1}")
        graph.add_edge(u, v, key=key)

    r = vertices - nx.number_connected_components(graph)
    bases = [subset for subset in combinations(range(len(edges)), r) if _is_forest(edges, subset)]
    logger.debug("graph on %d vertices: rank %d, %d spanning forests", vertices, r, len(bases))
    return Matroid(len(edges), tuple(bases))


def _is_forest(edges, subset):
    if not subset:
        return True
    forest = nx.MultiGraph()
    for k in subset:
        forest.add_edge(*edges[k], key=k)
    return nx.is_forest(forest)


def m_s(s):
    """
    Cycle matroid of s parallel u-v edges, each subdivided once.
    Vertices u = 0, v = 1, w_t = 2 + t; edge 2t = (u, w_t), edge 2t+1 = (w_t, v).
    """
    if s < 1:
        raise ParseError(f"s must be at least 1, got {s}")
    edges = []
    for t in range(s):
        edges.append((0, 2 + t))
        edges.append((2 + t, 1))
    return from_graph(s + 2, edges)


# ---------- Queries ----------

def rank_of(m, subset):
    subset = set(subset)
    return max(len(subset.intersection(b)) for b in m.bases)


def is_independent(m, subset):
    return frozenset(subset) in m.independent


def independent_sets(m):
    return sorted((tuple(sorted(s)) for s in m.independent), key=lambda s: (len(s), s))


def loops(m):
    covered = set().union(*m.bases)
    return tuple(e for e in range(m.n) if e not in covered)


def coloops(m):
    common = set(m.bases[0]).intersection(*m.bases)
    return tuple(sorted(common))


def circuits_of(m):
    return m.circuits


def series_classes(m):
    """
    Classes of e ~ f iff the same circuits contain e and f, over elements lying
    in some circuit of size at least two.
    """
    membership = {}
    for index, c in enumerate(m.circuits):
        if len(c) < 2:
            continue
        for e in c:
            membership.setdefault(e, set()).add(index)

    classes = {}
    for e in sorted(membership):
        classes.setdefault(frozenset(membership[e]), []).append(e)
    return tuple(sorted(tuple(members) for members in classes.values()))


def components(m):
    graph = nx.Graph()
    graph.add_nodes_from(range(m.n))
    for c in m.circuits:
        nx.add_path(graph, c)
    return nx.number_connected_components(graph)


# ---------- Minors ----------

def _relabel(m, keep, bases):
    position = {old: new for new, old in enumerate(keep)}
    family = _canonical(tuple(position[e] for e in b) for b in bases)
    return Matroid(len(keep), family, labels=tuple(m.labels[e] for e in keep))


def delete(m, removed):
    removed = set(removed)
    keep = [e for e in range(m.n) if e not in removed]
    r = rank_of(m, keep)
    bases = [set(b) - removed for b in m.bases if len(set(b) - removed) == r]
    return _relabel(m, keep, bases)


def contract(m, removed):
    removed = set(removed)
    keep = [e for e in range(m.n) if e not in removed]
    r = rank_of(m, removed)
    bases = [set(b) - removed for b in m.bases if len(removed.intersection(b)) == r]
    return _relabel(m, keep, bases)


def restrict(m, subset):
    return delete(m, set(range(m.n)) - set(subset))


def strip_coloops(m):
    return delete(m, coloops(m))


def direct_sum(m1, m2):
    bases = [b1 + tuple(m1.n + e for e in b2) for b1 in m1.bases for b2 in m2.bases]
    return Matroid(m1.n + m2.n, _canonical(bases))
