# gelement.py
"""
g-elements of R(Δ,Θ): verification, seeded witness search, the quotient by
ω, and the broken-circuit obstruction on m_s(s).

Trial t of a run seeded S draws everything (Θ, then ω, then the prime for
modular ranks) from np.random.default_rng([S, t]), so a witness is
reproduced from (S, t, bound) alone.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from complexes import BROKEN_CIRCUIT, broken_circuit_complex, check_h_vectors, independence_complex
from config import COUNTEREXAMPLE_TRIALS, DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS, PRIME_BITS
from errors import HasColoops, InvalidDegree, LsopNotFound, ParseError, WitnessNotFound
from facering import (
    LinearForms,
    QuotientRing,
    lsop_random,
    mult_injective,
    power_images,
    random_form,
)
from linalg import ExactMatrix, hstack, kernel_basis, random_prime, rank_exact
from macaulay import check_h_inequalities
from matroid import ElementOrder, coloops, contract, m_s

logger = logging.getLogger(__name__)

# below this many parallel paths the degree-2 obstruction does not apply
OBSTRUCTION_MIN_S = 5


def trial_rng(seed, trial):
    return np.random.default_rng([seed, trial])


def draw_trial(c, seed, trial, bound, exact=True):
    """(forms with ω, l.s.o.p. attempts, prime or None) for one trial."""
    rng = trial_rng(seed, trial)
    forms, attempts = lsop_random(c, bound, rng)
    omega = random_form(rng, c.n_vertices, bound)
    modulus = None if exact else random_prime(rng, PRIME_BITS)
    return LinearForms(forms.n, forms.K, omega), attempts, modulus


# ---------- Verification ----------

def g_element_verify(c, forms, omega, r=None, ring=None, modulus=None):
    """
    ω is a g-element iff ω^(r-2i) is injective from degree i for 0 <= i <= r/2.
    r defaults to the top degree of h, which is the socle degree of R(Δ,Θ)
    for an l.s.o.p. on a matroid complex.
    """
    ring = ring or QuotientRing(c, forms, modulus)
    if r is None:
        r = ring.h.top_degree
    certificates = tuple(
        mult_injective(c, forms, omega, i, r - i, ring=ring) for i in range(r // 2 + 1)
    )
    return all(cert.injective for cert in certificates), certificates


def quotient_by_omega(c, forms, omega, d, ring=None):
    """dim (R/ωR)_d."""
    if d < 0:
        raise InvalidDegree(f"degree must be nonnegative, got {d}")
    if d == 0:
        return 1
    ring = ring or QuotientRing(c, forms)
    piece = ring.piece(d)
    w = ring.linear(omega)
    multiples = [ring.coordinates(w * ring.free_monomial(nu), d) for nu in ring.free_monomials(d - 1)]
    stacked = hstack(piece.relations, ExactMatrix.from_columns(multiples, len(piece.basis_monomials)))
    return len(piece.basis_monomials) - rank_exact(stacked)


def omega_quotient_dims(c, forms, omega, up_to, ring=None):
    ring = ring or QuotientRing(c, forms)
    return tuple(quotient_by_omega(c, forms, omega, d, ring=ring) for d in range(up_to + 1))


def strong_lefschetz_ranks(c, forms, omega, r=None, ring=None):
    """Ranks of ω^(r-2i) from degree i to r-i. Informational only."""
    ring = ring or QuotientRing(c, forms)
    if r is None:
        r = ring.h.top_degree
    rows = []
    for i in range(r // 2 + 1):
        source = ring.piece(i)
        target = ring.piece(r - i)
        block = power_images(ring, omega, i, r - i)
        image_rank = rank_exact(hstack(target.relations, block)) - target.exact_rank
        rows.append(
            {"degree": i, "source_dim": source.exact_dim, "target_dim": target.exact_dim, "rank": image_rank}
        )
    return tuple(rows)


# ---------- Search ----------

@dataclass(frozen=True)
class GWitness:
    seed: int
    trial: int
    bound: int
    forms: object
    certificates: tuple
    arithmetic: str
    lsop_attempts: int
    failures: tuple = field(default=())

    @property
    def omega(self):
        return self.forms.omega

    def to_dict(self):
        return {
            "seed": self.seed,
            "trial": self.trial,
            "bound": self.bound,
            "forms": self.forms.to_dict(),
            "certificates": [cert.to_dict() for cert in self.certificates],
            "arithmetic": self.arithmetic,
            "lsop_attempts": self.lsop_attempts,
            "failures": [dict(f) for f in self.failures],
        }


def g_element_search(m, trials=DEFAULT_TRIALS, bound=DEFAULT_BOUND, seed=DEFAULT_SEED, exact=False):
    if coloops(m):
        raise HasColoops("g-element search needs a matroid without coloops", coloops=list(coloops(m)))
    c = independence_complex(m)
    failures = []
    for t in range(trials):
        try:
            forms, attempts, modulus = draw_trial(c, seed, t, bound, exact)
        except LsopNotFound as exc:
            failures.append({"trial": t, "reason": exc.message})
            continue

        ring = QuotientRing(c, forms, modulus)
        ok, certificates = g_element_verify(c, forms, forms.omega, ring=ring)
        if ok:
            logger.info("g-element found on trial %d (%s)", t, ring.arithmetic)
            return GWitness(seed, t, bound, forms, certificates, ring.arithmetic, attempts, tuple(failures))

        failed = [cert.from_degree for cert in certificates if not cert.injective]
        logger.debug("trial %d: not injective from degrees %s", t, failed)
        failures.append({"trial": t, "reason": "not injective", "degrees": failed})

    logger.warning("no g-element in %d trials", trials)
    raise WitnessNotFound(f"no g-element found in {trials} trials", trials=failures)


# ---------- Broken-circuit obstruction ----------

def subdivision_pair(order):
    """
    Growing E_l by the greatest remaining element, the first pair of edges
    {2t, 2t+1} subdividing one parallel edge to lie inside E_l.
    """
    seen = set()
    for e in reversed(order.sequence):
        if e ^ 1 in seen:
            return tuple(sorted((e, e ^ 1)))
        seen.add(e)
    raise ParseError("order has no subdivision pair")


def _fraction_text(x):
    return str(Fraction(x))


def _membership_witness(ring, vector, d):
    """Coefficients on the relation generators expressing `vector`, or None."""
    relations = ring.piece(d).relations
    column = ExactMatrix.from_columns([vector], relations.rows)
    for k in kernel_basis(hstack(relations, column)):
        if k[-1]:
            coefficients = [-x / k[-1] for x in k[:-1]]
            generators = ring.relation_generators(d)
            return [
                {"nonface": list(generators[g][0]), "shift": list(generators[g][1]), "coefficient": _fraction_text(a)}
                for g, a in enumerate(coefficients)
                if a
            ]
    return None


def _kernel_vector(ring, omega):
    """A nonzero class of degree 2 killed by ω, in quotient-basis coordinates, or None."""
    source = ring.piece(2)
    block = power_images(ring, omega, 2, 3)
    offset = ring.piece(3).relations.cols
    for k in kernel_basis(hstack(ring.piece(3).relations, block)):
        mu = k[offset:]
        if any(mu):
            return [
                {"monomial": list(source.monomials[b]), "coefficient": _fraction_text(a)}
                for b, a in zip(source.quotient_basis, mu)
                if a
            ]
    return None


@dataclass(frozen=True)
class CounterexampleResult:
    s: int
    order: tuple
    pair: tuple
    h: tuple
    inequalities: object
    minor_is_simplex: bool
    obstruction_applies: bool
    trials: tuple
    membership_witness: list | None
    kernel_vector: list | None
    note: str | None

    @property
    def unexpected(self):
        """Trials contradicting the obstruction (only meaningful when it applies)."""
        if not self.obstruction_applies:
            return ()
        return tuple(t["trial"] for t in self.trials if not t["obstructed"])

    @property
    def alert(self):
        if not self.obstruction_applies:
            return False
        return bool(self.unexpected) or not self.inequalities.ok or not self.minor_is_simplex

    def to_dict(self):
        return {
            "s": self.s,
            "order": list(self.order),
            "pair": list(self.pair),
            "h_vector": list(self.h),
            "inequalities": self.inequalities.to_dict(),
            "minor_is_simplex": self.minor_is_simplex,
            "obstruction_applies": self.obstruction_applies,
            "trials": [dict(t) for t in self.trials],
            "unexpected_trials": list(self.unexpected),
            "membership_witness": self.membership_witness,
            "kernel_vector": self.kernel_vector,
            "note": self.note,
        }


def counterexample_m_s(
    s=OBSTRUCTION_MIN_S,
    order=None,
    trials=COUNTEREXAMPLE_TRIALS,
    bound=DEFAULT_BOUND,
    seed=DEFAULT_SEED,
):
    """
    On the broken-circuit complex of m_s(s): the class of x_i x_j for the
    subdivision pair is nonzero in degree 2, yet ω x_i x_j vanishes in
    degree 3 for every sampled (Θ, ω). All checks are exact.
    """
    if s < 2:
        raise InvalidDegree(f"s must be at least 2, got {s}")
    m = m_s(s)
    order = order or ElementOrder.natural(m.n)
    if len(order.sequence) != m.n:
        raise ParseError(f"order lists {len(order.sequence)} elements, m_s({s}) has {m.n}")

    c, h = check_h_vectors(m, BROKEN_CIRCUIT, order)
    r = h.top_degree
    pair = subdivision_pair(order)
    inequalities = check_h_inequalities(h.entries, r)

    minor = broken_circuit_complex(contract(m, pair), order.induced(pair))
    minor_is_simplex = len(minor.facets) == 1 and minor.rank == s - 1

    product = tuple(int(v in pair) for v in range(c.n_vertices))
    records = []
    membership = kernel = None
    for t in range(trials):
        forms, attempts, _ = draw_trial(c, seed, t, bound)
        omega = forms.omega
        ring = QuotientRing(c, forms)

        piece = ring.piece(2)
        target = ring.coordinates(ring.sigma(product), 2)
        stacked = hstack(piece.relations, ExactMatrix.from_columns([target], piece.relations.rows))
        nonzero = rank_exact(stacked) == piece.exact_rank + 1

        image = ring.coordinates(ring.sigma(product) * ring.linear(omega), 3)
        relations_3 = ring.piece(3)
        stacked = hstack(relations_3.relations, ExactMatrix.from_columns([image], relations_3.relations.rows))
        annihilated = rank_exact(stacked) == relations_3.exact_rank

        single = mult_injective(c, forms, omega, 2, 3, ring=ring)
        record = {
            "trial": t,
            "lsop_attempts": attempts,
            "class_nonzero": nonzero,
            "annihilated": annihilated,
            "single_map_injective": single.injective,
        }
        obstructed = nonzero and annihilated and not single.injective
        if s > OBSTRUCTION_MIN_S:
            power = mult_injective(c, forms, omega, 2, r - 2, ring=ring)
            record["power_map"] = {"to_degree": r - 2, "power": r - 4, "injective": power.injective}
            obstructed = obstructed and not power.injective
        record["obstructed"] = obstructed
        records.append(record)
        logger.debug("trial %d: %s", t, record)

        if t == 0:
            membership = _membership_witness(ring, image, 3) if annihilated else None
            kernel = _kernel_vector(ring, omega)

    note = None
    if s < OBSTRUCTION_MIN_S:
        note = f"rank {s + 1} is too small for a degree-2 obstruction; no claim is made"
    return CounterexampleResult(
        s=s,
        order=order.sequence,
        pair=pair,
        h=h.entries,
        inequalities=inequalities,
        minor_is_simplex=minor_is_simplex,
        obstruction_applies=s >= OBSTRUCTION_MIN_S,
        trials=tuple(records),
        membership_witness=membership,
        kernel_vector=kernel,
        note=note,
    )
