# macaulay.py
"""
Binomial (Macaulay) expansions, the pseudopower j^<i>, O-sequence checks and
the three inequality families for h-vectors of complexes with a g-element.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

from errors import InvalidDegree


@dataclass(frozen=True)
class MacaulayExpansion:
    """j = C(a_i, i) + C(a_(i-1), i-1) + ... + C(a_l, l), a_i > ... > a_l >= l >= 1."""

    i: int
    terms: tuple

    def to_dict(self):
        return {"i": self.i, "terms": [list(t) for t in self.terms]}


def expand(j, i):
    if i < 1 or j < 1:
        raise InvalidDegree(f"expansion needs j >= 1 and i >= 1, got j={j}, i={i}")
    terms = []
    rest, k = j, i
    while rest > 0:
        # largest a with C(a, k) <= rest; C(k + rest, k) > rest bounds the search
        candidates = range(k, k + rest + 1)
        a = k + bisect_right(candidates, rest, key=lambda x: comb(x, k)) - 1
        terms.append((a, k))
        rest -= comb(a, k)
        k -= 1
    return MacaulayExpansion(i, tuple(terms))


def reconstruct(expansion):
    return sum(comb(a, k) for a, k in expansion.terms)


def pseudopower(j, i):
    if i < 1:
        raise InvalidDegree(f"pseudopower needs i >= 1, got {i}")
    if j == 0:
        return 0
    return sum(comb(a + 1, k + 1) for a, k in expand(j, i).terms)


@dataclass(frozen=True)
class OSequenceVerdict:
    ok: bool
    violation: int | None = None
    starts_with_one: bool = True

    def to_dict(self):
        return {"ok": self.ok, "violation": self.violation, "starts_with_one": self.starts_with_one}


def is_o_sequence(h):
    h = list(h)
    starts_with_one = bool(h) and h[0] == 1
    if len(h) > 1 and h[1] < 0:
        return OSequenceVerdict(False, 0, starts_with_one)
    for i in range(1, len(h) - 1):
        if h[i] < 0 or h[i + 1] > pseudopower(h[i], i):
            return OSequenceVerdict(False, i, starts_with_one)
    return OSequenceVerdict(True, None, starts_with_one)


@dataclass(frozen=True)
class InequalityVerdict:
    monotone: bool
    symmetric_bound: bool
    g_growth: bool
    violations: tuple = field(default=())

    @property
    def ok(self):
        return self.monotone and self.symmetric_bound and self.g_growth

    def to_dict(self):
        return {
            "monotone": self.monotone,
            "symmetric_bound": self.symmetric_bound,
            "g_growth": self.g_growth,
            "violations": [dict(v) for v in self.violations],
        }


def check_h_inequalities(h, r):
    """
    For h indexed 0..r (zero padded):
      monotone        h_0 <= h_1 <= ... <= h_(r//2)
      symmetric_bound h_i <= h_(r-i) for i <= r/2
      g_growth        g_(i+1) <= g_i^<i> for 1 <= i < r/2, g_i = h_i - h_(i-1)
    """
    h = list(h)[: r + 1] + [0] * max(0, r + 1 - len(h))
    violations = []

    for i in range(r // 2):
        if h[i] > h[i + 1]:
            violations.append({"family": "monotone", "i": i + 1, "detail": f"h_{i} = {h[i]} > h_{i + 1} = {h[i + 1]}"})

    for i in range(r // 2 + 1):
        if h[i] > h[r - i]:
            violations.append({"family": "symmetric_bound", "i": i, "detail": f"h_{i} = {h[i]} > h_{r - i} = {h[r - i]}"})

    g = [h[0]] + [h[i] - h[i - 1] for i in range(1, r // 2 + 1)]
    i = 1
    while 2 * i < r:
        if g[i] < 0:
            violations.append({"family": "g_growth", "i": i, "detail": f"g_{i} = {g[i]} is negative"})
        elif i + 1 < len(g) and g[i + 1] > pseudopower(g[i], i):
            violations.append(
                {"family": "g_growth", "i": i, "detail": f"g_{i + 1} = {g[i + 1]} > g_{i}^<{i}> = {pseudopower(g[i], i)}"}
            )
        i += 1

    families = {v["family"] for v in violations}
    return InequalityVerdict(
        monotone="monotone" not in families,
        symmetric_bound="symmetric_bound" not in families,
        g_growth="g_growth" not in families,
        violations=tuple(violations),
    )


def lex_growth(j, i, nvars=None):
    """
    Number of degree-(i+1) monomials all of whose degree-i divisors lie among
    the j lex-least degree-i monomials (x_0 > x_1 > ...). Enumerates exhaustively.
    """
    if nvars is None:
        nvars = 1
        while comb(nvars + i - 1, i) < j:
            nvars += 1

    def exponents(degree):
        out = []
        for combo in combinations_with_replacement(range(nvars), degree):
            e = [0] * nvars
            for v in combo:
                e[v] += 1
            out.append(tuple(e))
        return sorted(out)

    segment = set(exponents(i)[:j])
    count = 0
    for mono in exponents(i + 1):
        divisors = [
            tuple(x - (k == v) for k, x in enumerate(mono)) for v in range(nvars) if mono[v]
        ]
        if all(d in segment for d in divisors):
            count += 1
    return count
