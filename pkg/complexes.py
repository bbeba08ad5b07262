# complexes.py
"""
Simplicial complexes stored by facets, their f/h/g-vectors, and the two
complexes attached to a matroid: independence and broken-circuit.

h-vectors follow h(t) = sum h_i t^(s-i) with h(1+t) = f(t), where
s = 1 + dim. The deletion-contraction recursion works directly on these
polynomials: a coloop is a cone point (factor t), a non-coloop e gives
h(M) = h(M-e) + h(M/e).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb

from sympy import Poly, symbols

from config import MAX_VERTICES
from errors import ComplexTooLarge, HasLoops, InconsistentResult
from matroid import ElementOrder, coloops, contract, delete, loops

logger = logging.getLogger(__name__)

T = symbols("t")

INDEPENDENCE = "independence"
BROKEN_CIRCUIT = "broken-circuit"


# ---------- Types ----------

@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    facets: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(range(self.n_vertices)))

    @classmethod
    def from_faces(cls, n_vertices, faces, labels=None):
        """Keep the maximal members of a face family; no faces means {∅}."""
        candidates = sorted({tuple(sorted(f)) for f in faces}, key=len, reverse=True)
        kept = []
        for face in candidates:
            if not any(set(face) <= set(other) for other in kept):
                kept.append(face)
        facets = tuple(sorted(kept)) if kept else ((),)
        return cls(n_vertices, facets, labels)

    @property
    def rank(self):
        """s = 1 + dim, the number of forms in an l.s.o.p."""
        return max(len(f) for f in self.facets)

    @property
    def dimension(self):
        return self.rank - 1

    @cached_property
    def facet_sets(self):
        return tuple(frozenset(f) for f in self.facets)

    def is_face(self, face):
        face = set(face)
        return any(face <= f for f in self.facet_sets)

    def faces(self):
        """All faces, ordered by cardinality then lexicographically."""
        if self.n_vertices > MAX_VERTICES:
            raise ComplexTooLarge(
                f"{self.n_vertices} vertices exceeds the enumeration cap of {MAX_VERTICES}"
            )
        found = set()
        for facet in self.facets:
            for size in range(len(facet) + 1):
                found.update(combinations(facet, size))
        return sorted(found, key=lambda f: (len(f), f))


@dataclass(frozen=True)
class HVector:
    entries: tuple

    @classmethod
    def from_polynomial(cls, poly, s):
        """Read h_i off the coefficient of t^(s-i)."""
        coeffs = Poly(poly, T).all_coeffs()[::-1] if poly != 0 else []
        if len(coeffs) > s + 1:
            raise InconsistentResult(f"h-polynomial {poly} has degree above {s}")
        coeffs = list(coeffs) + [0] * (s + 1 - len(coeffs))
        return cls(tuple(int(coeffs[s - i]) for i in range(s + 1)))

    @property
    def s(self):
        return len(self.entries) - 1

    @property
    def top_degree(self):
        """Index of the last nonzero entry, -1 for the zero vector."""
        nonzero = [i for i, h in enumerate(self.entries) if h]
        return nonzero[-1] if nonzero else -1

    def trimmed(self):
        return self.entries[: self.top_degree + 1]

    def polynomial(self):
        return Poly(sum(h * T ** (self.s - i) for i, h in enumerate(self.entries)), T)

    def __getitem__(self, i):
        if 0 <= i < len(self.entries):
            return self.entries[i]
        return 0

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


# ---------- Matroid complexes ----------

def independence_complex(m):
    """Independent sets on the non-loop elements; labels map vertices to elements of m."""
    looped = set(loops(m))
    keep = [e for e in range(m.n) if e not in looped]
    position = {old: new for new, old in enumerate(keep)}
    facets = tuple(sorted(tuple(position[e] for e in b) for b in m.bases))
    return SimplicialComplex(len(keep), facets, labels=tuple(keep))


def broken_circuits(m, order=None):
    order = order or ElementOrder.natural(m.n)
    broken = {tuple(sorted(set(c) - {order.least(c)})) for c in m.circuits}
    return tuple(sorted(broken))


def broken_circuit_complex(m, order=None):
    """
    Subsets of the ground set containing no broken circuit. Every element is a
    vertex; an element parallel to a smaller one is a nonface singleton.
    """
    if loops(m):
        raise HasLoops("broken-circuit complex of a matroid with loops is void", loops=list(loops(m)))
    order = order or ElementOrder.natural(m.n)

    broken = [frozenset(b) for b in broken_circuits(m, order)]
    level = [()]
    faces = [()]
    while level:
        grown = []
        for face in level:
            start = face[-1] + 1 if face else 0
            for v in range(start, m.n):
                candidate = frozenset(face + (v,))
                if not any(v in b and b <= candidate for b in broken):
                    grown.append(face + (v,))
        faces.extend(grown)
        level = grown
    logger.debug("broken-circuit complex: %d faces", len(faces))
    return SimplicialComplex.from_faces(m.n, faces)


def complex_for(m, target, order=None):
    if target == BROKEN_CIRCUIT:
        return broken_circuit_complex(m, order)
    return independence_complex(m)


# ---------- Vectors ----------

def f_vector(c):
    counts = [0] * (c.rank + 1)
    for face in c.faces():
        counts[len(face)] += 1
    return tuple(counts)


def h_vector(c):
    s = c.rank
    f = f_vector(c)
    entries = tuple(
        sum((-1) ** (i + k) * f[k] * comb(s - k, i - k) for k in range(i + 1))
        for i in range(s + 1)
    )
    h = HVector(entries)

    f_poly = Poly(sum(fk * T ** (s - k) for k, fk in enumerate(f)), T)
    if h.polynomial().compose(Poly(T + 1, T)) != f_poly:
        raise InconsistentResult("h(1+t) does not equal f(t)", h=list(entries), f=list(f))
    return h


def g_vector(h, r):
    h = h if isinstance(h, HVector) else HVector(tuple(h))
    return tuple([h[0]] + [h[i] - h[i - 1] for i in range(1, r // 2 + 1)])


def h_recursive(m, target=INDEPENDENCE, order=None):
    """
    h-vector by deletion and contraction alone. The broken-circuit target
    always splits off the order-greatest element, with the induced order on
    the minors; a minor with a loop contributes nothing.
    """
    if target == BROKEN_CIRCUIT:
        if loops(m):
            raise HasLoops("broken-circuit complex of a matroid with loops is void", loops=list(loops(m)))
        order = order or ElementOrder.natural(m.n)
    else:
        order = None
    poly = _h_polynomial(m, target, order)
    return HVector.from_polynomial(poly.as_expr(), m.rank)


@lru_cache(maxsize=4096)
def _h_polynomial(m, target, order):
    if m.n == 0:
        return Poly(1, T)

    looped = loops(m)
    if looped:
        if target == BROKEN_CIRCUIT:
            return Poly(0, T)
        return _h_polynomial(delete(m, {looped[-1]}), target, None)

    e = order.greatest(range(m.n)) if order else m.n - 1
    rest = order.induced({e}) if order else None
    if e in coloops(m):
        return Poly(T, T) * _h_polynomial(delete(m, {e}), target, rest)
    return _h_polynomial(delete(m, {e}), target, rest) + _h_polynomial(contract(m, {e}), target, rest)


def check_h_vectors(m, target=INDEPENDENCE, order=None):
    """Direct and recursive h-vectors, raising if they disagree."""
    c = complex_for(m, target, order)
    direct = h_vector(c)
    recursive = h_recursive(m, target, order)
    if direct.entries != recursive.entries:
        raise InconsistentResult(
            "recursive h-vector disagrees with the constructed complex",
            direct=list(direct.entries),
            recursive=list(recursive.entries),
        )
    return c, direct


# ---------- Faces and links ----------

def minimal_nonfaces(c):
    """Minimal non-faces: G + {v} is not a face while every proper subset is."""
    face_set = set(c.faces())
    found = set()
    for face in face_set:
        for v in range(c.n_vertices):
            if v in face:
                continue
            candidate = tuple(sorted(face + (v,)))
            if candidate in face_set:
                continue
            if all(tuple(x for x in candidate if x != w) in face_set for w in candidate):
                found.add(candidate)
    return tuple(sorted(found, key=lambda n: (len(n), n)))


def link(c, v):
    faces = [tuple(x for x in f if x != v) for f in c.facets if v in f]
    return SimplicialComplex.from_faces(c.n_vertices, faces, labels=c.labels)


def delete_vertex(c, v):
    faces = [tuple(x for x in face if x != v) for face in c.facets]
    return SimplicialComplex.from_faces(c.n_vertices, faces, labels=c.labels)


def cone_apex(order):
    """The order-least element, a cone point of every broken-circuit complex."""
    return order.sequence[0]
