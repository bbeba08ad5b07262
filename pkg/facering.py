# facering.py
"""
Graded pieces of R(Δ,Θ) = k[Δ]/<Θ> by monomial enumeration and linear algebra.

Monomials are exponent tuples; within a degree they are listed in graded
reverse lexicographic order, greatest first.

The pieces are presented after eliminating Θ against a pivot facet F of
full size s. K_F is invertible for an l.s.o.p., so modulo Θ each x_v with
v in F is a linear form in the free variables y = V \\ F, and

    R(Δ,Θ) = k[y] / σ(I_Δ),   σ(I_Δ)_d = span{ σ(x^N) y^ν : N minimal nonface }.

σ is scaled by the lcm D of the denominators of K_F^-1 K_Y (x_v -> D y_v on
the free variables), which keeps every image integral and changes nothing
up to an automorphism of k[y]. D divides det K_F, so the pivot facet is the
one with the smallest |det K_F|.

Over F_p a relation rank can only drop. For an l.s.o.p. on a matroid
complex the exact dimension of R_d is h_d, so a modular dimension equal to
h_d is exact; any other modular dimension is recomputed over Q.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, combinations_with_replacement

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from complexes import complex_for, h_vector, minimal_nonfaces
from config import LSOP_ATTEMPTS
from errors import DimensionMismatch, InconsistentResult, InvalidDegree, LsopNotFound
from linalg import (
    ExactMatrix,
    abs_determinant,
    hstack,
    pivot_columns,
    pivot_columns_mod,
    rank,
    rank_exact,
    solve,
    to_mod,
)

logger = logging.getLogger(__name__)

# face monomials tried per elimination when growing a quotient basis
_BASIS_CHUNK = 16
# full facets whose determinant is compared when choosing the pivot facet
_PIVOT_SCAN = 256


# ---------- Monomials ----------

def grevlex_key(exponents):
    """Sort key listing same-degree monomials from greatest to least in grevlex."""
    return tuple(reversed(exponents))


def monomials_of_degree(nvars, d):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return sorted(out, key=grevlex_key)


def support(exponents):
    return tuple(v for v, power in enumerate(exponents) if power)


def face_monomials(c, d):
    if d < 0:
        raise InvalidDegree(f"degree must be nonnegative, got {d}")
    n = c.n_vertices
    if d == 0:
        return [(0,) * n]
    out = []
    for face in c.faces():
        k = len(face)
        if k == 0 or k > d:
            continue
        # compositions of d into k positive parts
        for cuts in combinations(range(1, d), k - 1):
            bounds = (0,) + cuts + (d,)
            e = [0] * n
            for v, lo, hi in zip(face, bounds, bounds[1:]):
                e[v] = hi - lo
            out.append(tuple(e))
    return sorted(out, key=grevlex_key)


def reduce_mod_ideal(poly, c, d, index=None):
    """
    Project a homogeneous degree-d polynomial {exponents: coefficient} onto
    the face monomials of degree d. Nonface monomials lie in I_Δ and drop out.
    """
    if index is None:
        index = {mono: k for k, mono in enumerate(face_monomials(c, d))}
    vector = [Fraction(0)] * len(index)
    for exponents, coeff in poly.items():
        if sum(exponents) != d:
            raise InvalidDegree(f"monomial {exponents} is not of degree {d}")
        if c.is_face(support(exponents)):
            vector[index[exponents]] += Fraction(coeff)
    return vector


# ---------- Linear forms ----------

@dataclass(frozen=True)
class LinearForms:
    """s linear forms on n variables; row i holds the coefficients of θ_i."""

    n: int
    K: tuple
    omega: tuple | None = None

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.K)
        for row in rows:
            if len(row) != self.n:
                raise DimensionMismatch(f"form has {len(row)} coefficients, expected {self.n}")
        object.__setattr__(self, "K", rows)
        if self.omega is not None:
            omega = tuple(int(x) for x in self.omega)
            if len(omega) != self.n:
                raise DimensionMismatch(f"omega has {len(omega)} coefficients, expected {self.n}")
            object.__setattr__(self, "omega", omega)

    @property
    def s(self):
        return len(self.K)

    def columns(self, vertices):
        return ExactMatrix.from_rows([[row[v] for v in vertices] for row in self.K], cols=len(vertices))

    def to_dict(self):
        body = {"K": [list(row) for row in self.K]}
        if self.omega is not None:
            body["omega"] = list(self.omega)
        return body


def _check_shape(c, forms):
    if forms.s != c.rank or forms.n != c.n_vertices:
        raise DimensionMismatch(
            f"need {c.rank} forms on {c.n_vertices} variables, got {forms.s} on {forms.n}"
        )


def lsop_verify(c, forms):
    """True iff the columns of K on every facet are independent."""
    _check_shape(c, forms)
    return all(rank_exact(forms.columns(facet)) == len(facet) for facet in c.facets)


def random_form(rng, n, bound):
    return tuple(int(x) for x in rng.integers(-bound, bound, size=n, endpoint=True))


def lsop_random(c, bound, rng, attempts=LSOP_ATTEMPTS):
    """Sample K with entries in [-bound, bound] until it is an l.s.o.p.; returns (forms, attempts used)."""
    for attempt in range(1, attempts + 1):
        draw = rng.integers(-bound, bound, size=(c.rank, c.n_vertices), endpoint=True)
        forms = LinearForms(c.n_vertices, tuple(tuple(int(x) for x in row) for row in draw))
        if lsop_verify(c, forms):
            logger.debug("l.s.o.p. found on attempt %d", attempt)
            return forms, attempt
    logger.warning("no l.s.o.p. in %d attempts with bound %d", attempts, bound)
    raise LsopNotFound(
        f"no l.s.o.p. found in {attempts} attempts with bound {bound}",
        attempts=attempts,
        bound=bound,
    )


# ---------- Quotient ring ----------

def _pivot_facet(c, forms):
    """The full facet F with the smallest nonzero |det K_F| among the first few."""
    full = [f for f in c.facets if len(f) == c.rank]
    best, best_det = full[0], None
    for facet in full[:_PIVOT_SCAN]:
        det = abs_determinant(forms.columns(facet))
        if det and (best_det is None or det < best_det):
            best, best_det = facet, det
    logger.debug("pivot facet %s with |det| %s", best, best_det)
    return best


class QuotientRing:
    """R(Δ,Θ) for one complex and one l.s.o.p., with graded pieces built on demand."""

    def __init__(self, c, forms, modulus=None):
        _check_shape(c, forms)
        self.complex = c
        self.forms = forms
        self.modulus = modulus
        self.pivot_facet = _pivot_facet(c, forms)
        pivot = set(self.pivot_facet)
        self.free = tuple(v for v in range(c.n_vertices) if v not in pivot)
        # PolyRing needs at least one generator; a placeholder never appears in any image
        names = [f"y{v}" for v in self.free] or ["y"]
        self.ring = PolyRing(names, ZZ, grevlex)
        self.images = self._eliminate()
        self.nonfaces = minimal_nonfaces(c)
        self._pieces = {}
        self._sigma = {}
        self._free_monomials = {}
        self._indices = {}

    @property
    def arithmetic(self):
        return "exact" if self.modulus is None else f"mod {self.modulus}"

    @cached_property
    def h(self):
        return h_vector(self.complex)

    @cached_property
    def is_lsop(self):
        return lsop_verify(self.complex, self.forms)

    def _eliminate(self):
        gens = self.ring.gens[: len(self.free)]
        x = solve(self.forms.columns(self.pivot_facet), self.forms.columns(self.free))
        scale = math.lcm(*(q.denominator for q in x.entries.flat))
        images = [self.ring.zero] * self.complex.n_vertices
        for a, v in enumerate(self.free):
            images[v] = scale * gens[a]
        for row, v in enumerate(self.pivot_facet):
            images[v] = sum(
                (int(-q * scale) * g for q, g in zip(x.entries[row], gens)), self.ring.zero
            )
        logger.debug("eliminated %d forms, %d free variables, scale %d", self.forms.s, len(self.free), scale)
        return images

    # ----- polynomials in the free variables -----

    def sigma(self, exponents):
        """Image of the monomial x^exponents."""
        image = self._sigma.get(exponents)
        if image is None:
            image = self.ring.one
            for v, power in enumerate(exponents):
                if power:
                    image = image * self.images[v] ** power
            self._sigma[exponents] = image
        return image

    def linear(self, coefficients):
        return sum((int(a) * self.images[v] for v, a in enumerate(coefficients) if a), self.ring.zero)

    def free_monomials(self, d):
        if d not in self._free_monomials:
            self._free_monomials[d] = monomials_of_degree(len(self.free), d)
        return self._free_monomials[d]

    def free_monomial(self, nu):
        mono = self.ring.one
        for g, power in zip(self.ring.gens, nu):
            if power:
                mono = mono * g ** power
        return mono

    def coordinates(self, poly, d):
        index = self._index(d)
        vector = [0] * len(index)
        width = len(self.free)
        for monom, coeff in poly.items():
            vector[index[monom[:width]]] += int(coeff)
        return vector

    def _index(self, d):
        if d not in self._indices:
            self._indices[d] = {nu: k for k, nu in enumerate(self.free_monomials(d))}
        return self._indices[d]

    # ----- graded pieces -----

    def relation_generators(self, d):
        """(nonface, ν) for each column of relations(d), in column order."""
        generators = []
        for nonface in self.nonfaces:
            if len(nonface) > d or not self.sigma(self._indicator(nonface)):
                continue
            generators.extend((nonface, nu) for nu in self.free_monomials(d - len(nonface)))
        return generators

    def relations(self, d):
        """σ(I_Δ)_d: rows are degree-d monomials in y, columns σ(x^N) y^ν."""
        columns = [
            self.coordinates(self.sigma(self._indicator(nonface)) * self.free_monomial(nu), d)
            for nonface, nu in self.relation_generators(d)
        ]
        return ExactMatrix.from_columns(columns, len(self.free_monomials(d)))

    def _indicator(self, face):
        return tuple(int(v in face) for v in range(self.complex.n_vertices))

    def piece(self, d):
        if d < 0:
            raise InvalidDegree(f"degree must be nonnegative, got {d}")
        if d not in self._pieces:
            relations = self.relations(d)
            self._pieces[d] = GradedPiece(self, d, relations, rank(relations, self.modulus))
        return self._pieces[d]

    def top_degree(self):
        """Last degree with a nonzero piece."""
        for d in range(self.complex.rank, -1, -1):
            if self.piece(d).exact_dim > 0:
                return d
        return -1

    def hilbert_function(self, up_to=None):
        up_to = self.complex.rank + 1 if up_to is None else up_to
        return tuple(self.piece(d).quotient_dim for d in range(up_to + 1))


class GradedPiece:
    """
    R(Δ,Θ)_d. `relations` lives on the degree-d monomials in the free
    variables; `monomials` are the degree-d face monomials and
    `quotient_basis` indexes the greedy prefix of them independent modulo
    the relations.
    """

    def __init__(self, ring, degree, relations, relations_rank):
        self.ring = ring
        self.degree = degree
        self.relations = relations
        self.relations_rank = relations_rank
        self.basis_monomials = tuple(ring.free_monomials(degree))
        self.quotient_dim = len(self.basis_monomials) - relations_rank

    @cached_property
    def monomials(self):
        return tuple(face_monomials(self.ring.complex, self.degree))

    @cached_property
    def certified(self):
        """True when relations_rank is the rank over Q."""
        if self.ring.modulus is None:
            return True
        return self.ring.is_lsop and self.quotient_dim == self.ring.h[self.degree]

    @cached_property
    def exact_rank(self):
        if self.certified:
            return self.relations_rank
        logger.debug("degree %d: modular dimension %d is not h, ranking over Q", self.degree, self.quotient_dim)
        return rank_exact(self.relations)

    @cached_property
    def exact_dim(self):
        return len(self.basis_monomials) - self.exact_rank

    def _pivots(self, matrix):
        if self.ring.modulus is not None and self.certified:
            return pivot_columns_mod(to_mod(matrix, self.ring.modulus))
        return pivot_columns(matrix)

    @cached_property
    def quotient_basis(self):
        target = self.exact_dim
        if target == 0:
            return ()
        rows = len(self.basis_monomials)
        spanning = self.relations.select_columns(self._pivots(self.relations))
        monomials = self.monomials
        chosen, chosen_columns = [], []
        for start in range(0, len(monomials), _BASIS_CHUNK):
            chunk = range(start, min(start + _BASIS_CHUNK, len(monomials)))
            images = [self.image(k) for k in chunk]
            stacked = hstack(spanning, ExactMatrix.from_columns(chosen_columns + images, rows))
            offset = spanning.cols + len(chosen_columns)
            fresh = [p - offset for p in self._pivots(stacked) if p >= offset]
            chosen.extend(chunk[p] for p in fresh)
            chosen_columns.extend(images[p] for p in fresh)
            if len(chosen) == target:
                break
        if len(chosen) != target:
            raise InconsistentResult(
                f"face monomials of degree {self.degree} span {len(chosen)} dimensions, expected {target}"
            )
        return tuple(chosen)

    def image(self, k):
        """Coordinates of the k-th face monomial in the free-variable monomials."""
        return self.ring.coordinates(self.ring.sigma(self.monomials[k]), self.degree)


def graded_piece(c, forms, d, modulus=None):
    return QuotientRing(c, forms, modulus).piece(d)


def face_relations(c, forms, d):
    """The literal relation matrix: columns reduce θ_j·m for m of degree d-1."""
    _check_shape(c, forms)
    monomials = face_monomials(c, d)
    if d == 0:
        return ExactMatrix.zeros(len(monomials), 0)
    index = {mono: k for k, mono in enumerate(monomials)}
    columns = []
    for row in forms.K:
        for mono in face_monomials(c, d - 1):
            product = {}
            for v, coeff in enumerate(row):
                if coeff:
                    e = list(mono)
                    e[v] += 1
                    product[tuple(e)] = product.get(tuple(e), 0) + coeff
            columns.append(reduce_mod_ideal(product, c, d, index))
    return ExactMatrix.from_columns(columns, len(monomials))


def face_quotient_dim(c, forms, d):
    relations = face_relations(c, forms, d)
    return relations.rows - rank_exact(relations)


# ---------- Multiplication maps ----------

@dataclass(frozen=True)
class InjectivityCertificate:
    from_degree: int
    to_degree: int
    source_dim: int
    relations_rank: int | None
    stacked_rank: int | None
    injective: bool
    arithmetic: str

    def to_dict(self):
        return {
            "from_degree": self.from_degree,
            "to_degree": self.to_degree,
            "source_dim": self.source_dim,
            "relations_rank": self.relations_rank,
            "stacked_rank": self.stacked_rank,
            "injective": self.injective,
            "arithmetic": self.arithmetic,
        }


def power_images(ring, omega, i, j):
    """Columns σ(m)·σ(ω)^(j-i) for the quotient basis m of degree i."""
    source = ring.piece(i)
    target = ring.piece(j)
    w = ring.linear(omega) ** (j - i)
    columns = [ring.coordinates(ring.sigma(source.monomials[k]) * w, j) for k in source.quotient_basis]
    return ExactMatrix.from_columns(columns, len(target.basis_monomials))


def mult_injective(c, forms, omega, i, j, ring=None, modulus=None):
    """
    Is multiplication by ω^(j-i) from degree i to degree j injective?
    A modular answer is accepted only when the relation rank matches
    N_j - h_j and the stacked rank adds the full source dimension; anything
    else is decided exactly.
    """
    if j < i:
        raise InvalidDegree(f"target degree {j} is below source degree {i}")
    if len(omega) != c.n_vertices:
        raise DimensionMismatch(f"omega has {len(omega)} coefficients, expected {c.n_vertices}")
    ring = ring or QuotientRing(c, forms, modulus)

    source_dim = len(ring.piece(i).quotient_basis)
    if source_dim == 0 or i == j:
        return InjectivityCertificate(i, j, source_dim, None, None, True, "trivial")

    target = ring.piece(j)
    block = power_images(ring, omega, i, j)
    stacked = hstack(target.relations, block)

    if ring.modulus is not None:
        expected = len(target.basis_monomials) - ring.h[j]
        stacked_rank = rank(stacked, ring.modulus)
        if target.relations_rank == expected and stacked_rank == expected + source_dim:
            return InjectivityCertificate(
                i, j, source_dim, target.relations_rank, stacked_rank, True, ring.arithmetic
            )
        logger.warning("degree %d -> %d inconclusive %s, deciding exactly", i, j, ring.arithmetic)

    stacked_rank = rank_exact(stacked)
    injective = stacked_rank == target.exact_rank + source_dim
    return InjectivityCertificate(i, j, source_dim, target.exact_rank, stacked_rank, injective, "exact")


# ---------- Hilbert function ----------

@dataclass(frozen=True)
class HilbertTable:
    lsop: bool
    rows: tuple

    @property
    def ok(self):
        return self.lsop and all(row["match"] for row in self.rows)

    def to_dict(self):
        return {"lsop": self.lsop, "ok": self.ok, "rows": [dict(row) for row in self.rows]}


def hilbert_table(c, forms, modulus=None):
    """Quotient dimensions against h in degrees 0..s+1; not run unless K is an l.s.o.p."""
    if not lsop_verify(c, forms):
        logger.warning("forms are not an l.s.o.p.; Hilbert check not run")
        return HilbertTable(False, ())
    h = h_vector(c)
    ring = QuotientRing(c, forms, modulus)
    rows = []
    for d in range(c.rank + 2):
        dim = ring.piece(d).exact_dim
        rows.append({"degree": d, "quotient_dim": dim, "h": h[d], "match": dim == h[d]})
    return HilbertTable(True, tuple(rows))


def hilbert_check(m, target, forms, order=None, modulus=None):
    return hilbert_table(complex_for(m, target, order), forms, modulus)
