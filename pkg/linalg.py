# linalg.py
"""
Exact and modular dense linear algebra.

Every rank, dimension, injectivity and membership claim in the package is
decided here. ExactMatrix keeps Fractions in a numpy object array; ranks are
computed by fraction-free (Bareiss) elimination on an integer copy.
ModMatrix keeps residues modulo a prime, in int64 when products of two
residues fit, otherwise in an object array.

Elimination always scans columns left to right and takes the first nonzero
entry at or below the current row as pivot, so pivot sets are reproducible
for a fixed column order.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from sympy import isprime, nextprime

from errors import DimensionMismatch, InconsistentResult, InvalidModulus

logger = logging.getLogger(__name__)

# residues below 2**31 multiply without overflowing int64
_INT64_BITS = 31
_MAX_MODULUS_BITS = 62


# ---------- Matrix types ----------

@dataclass(frozen=True, eq=False)
class ExactMatrix:
    rows: int
    cols: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (self.rows, self.cols):
            raise DimensionMismatch(
                f"entries have shape {self.entries.shape}, "
                f"expected ({self.rows}, {self.cols})"
            )
        self.entries.flags.writeable = False

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = np.full((len(rows), cols), Fraction(0), dtype=object)
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {cols}")
            for j, x in enumerate(row):
                entries[i, j] = Fraction(x)
        return cls(len(rows), cols, entries)

    @classmethod
    def from_columns(cls, columns, rows):
        """Build a rows x len(columns) matrix; each column is a sequence of length rows."""
        entries = np.full((rows, len(columns)), Fraction(0), dtype=object)
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise DimensionMismatch(
                    f"column {j} has {len(column)} entries, expected {rows}"
                )
            for i, x in enumerate(column):
                if x:
                    entries[i, j] = Fraction(x)
        return cls(rows, len(columns), entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, np.full((rows, cols), Fraction(0), dtype=object))

    @classmethod
    def identity(cls, n):
        entries = np.full((n, n), Fraction(0), dtype=object)
        for i in range(n):
            entries[i, i] = Fraction(1)
        return cls(n, n, entries)

    def column(self, j):
        return tuple(self.entries[:, j])

    def select_columns(self, indices):
        indices = list(indices)
        return ExactMatrix(self.rows, len(indices), self.entries[:, indices].copy())

    def dot(self, vector):
        """Matrix-vector product, exact."""
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector has {len(vector)} entries, expected {self.cols}")
        if self.rows == 0:
            return ()
        if self.cols == 0:
            return tuple(Fraction(0) for _ in range(self.rows))
        return tuple(self.entries.dot(np.array(vector, dtype=object)))

    def tolist(self):
        return [list(row) for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(
            np.all(self.entries == other.entries)
        )

    __hash__ = None


@dataclass(frozen=True, eq=False)
class ModMatrix:
    modulus: int
    rows: int
    cols: int
    entries: np.ndarray

    def __post_init__(self):
        if self.modulus.bit_length() > _MAX_MODULUS_BITS or not isprime(self.modulus):
            raise InvalidModulus(f"{self.modulus} is not a prime of at most 62 bits")
        if self.entries.shape != (self.rows, self.cols):
            raise DimensionMismatch(
                f"entries have shape {self.entries.shape}, "
                f"expected ({self.rows}, {self.cols})"
            )
        self.entries.flags.writeable = False

    @classmethod
    def from_integers(cls, rows, modulus, cols=None):
        rows = [[int(x) % modulus for x in row] for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        entries = np.zeros((len(rows), cols), dtype=_residue_dtype(modulus))
        for i, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionMismatch(f"row {i} has {len(row)} entries, expected {cols}")
            if cols:
                entries[i, :] = row
        return cls(modulus, len(rows), cols, entries)


def hstack(*matrices):
    """Concatenate ExactMatrix blocks side by side."""
    if not matrices:
        return ExactMatrix.zeros(0, 0)
    rows = matrices[0].rows
    for m in matrices:
        if m.rows != rows:
            raise DimensionMismatch(f"cannot stack {m.rows} rows onto {rows}")
    entries = np.concatenate([m.entries for m in matrices], axis=1)
    return ExactMatrix(rows, entries.shape[1], entries.copy())


def to_mod(m, modulus):
    """Scale each row of m to integers, then reduce modulo a prime."""
    return ModMatrix.from_integers(_integer_rows(m.entries).tolist(), modulus, cols=m.cols)


def random_prime(rng, bits=_INT64_BITS):
    """A random prime with exactly `bits` bits, drawn from a numpy Generator."""
    low = 1 << (bits - 1)
    high = (1 << bits) - (1 << max(bits - 11, 1))
    return int(nextprime(int(rng.integers(low, high))))


# ---------- Helpers ----------

def _residue_dtype(modulus):
    return np.int64 if modulus.bit_length() <= _INT64_BITS else object


def _integer_rows(entries):
    """Copy of a Fraction array with every row multiplied by its denominators' lcm."""
    out = np.empty(entries.shape, dtype=object)
    for i, row in enumerate(entries):
        scale = math.lcm(*(x.denominator for x in row))
        for j, x in enumerate(row):
            out[i, j] = x.numerator * (scale // x.denominator)
    return out


def _bareiss(a):
    """
    Fraction-free forward elimination in place on an object array of ints.
    Entries below each pivot are cleared; every division is exact.
    Returns the pivot columns.
    """
    rows, cols = a.shape
    pivots = []
    previous = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        pivot = a[r, c]
        if r + 1 < rows:
            a[r + 1:, c + 1:] = (
                pivot * a[r + 1:, c + 1:] - np.outer(a[r + 1:, c], a[r, c + 1:])
            ) // previous
            a[r + 1:, c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return pivots


def _eliminate_mod(a, modulus):
    """Gaussian elimination over F_p in place. Returns the pivot columns."""
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        inverse = pow(int(a[r, c]), -1, modulus)
        a[r, c:] = (a[r, c:] * inverse) % modulus
        below = np.flatnonzero(a[r + 1:, c]) + r + 1
        if below.size:
            factors = a[below, c].reshape(-1, 1)
            a[below, c:] = (a[below, c:] - factors * a[r, c:]) % modulus
        pivots.append(c)
        r += 1
    return pivots


# ---------- Operations ----------

def pivot_columns(m):
    """
    Pivot columns of a row-echelon form of m under left-to-right elimination.
    Each pivot column is independent of all earlier pivot columns.
    """
    if m.rows == 0 or m.cols == 0:
        return []
    return _bareiss(_integer_rows(m.entries))


def rank_exact(m):
    return len(pivot_columns(m))


def abs_determinant(m):
    """|det m| for a square ExactMatrix, as a Fraction."""
    if m.rows != m.cols:
        raise DimensionMismatch(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    scales = [math.lcm(*(x.denominator for x in row)) for row in m.entries]
    a = _integer_rows(m.entries)
    if len(_bareiss(a)) < m.rows:
        return Fraction(0)
    # the last Bareiss pivot is the determinant up to the sign of the row swaps
    return Fraction(abs(int(a[-1, -1])), math.prod(scales))


def pivot_columns_mod(m):
    if m.rows == 0 or m.cols == 0:
        return []
    return _eliminate_mod(m.entries.copy(), m.modulus)


def rank_mod(m):
    """Rank over F_p. Never exceeds the rational rank of an integer lift."""
    return len(pivot_columns_mod(m))


def rank(m, modulus=None):
    """Rank of an ExactMatrix, exactly or modulo the given prime."""
    if modulus is None:
        return rank_exact(m)
    return rank_mod(to_mod(m, modulus))


def row_reduce(m):
    """
    Reduced row echelon form over Q by Gauss-Jordan elimination.
    Returns (reduced matrix, pivot columns).
    """
    a = m.entries.copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.flatnonzero(a[r:, c])
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r, :] = a[r, :] / a[r, c]
        others = np.flatnonzero(a[:, c])
        others = others[others != r]
        if others.size:
            a[others, :] = a[others, :] - np.outer(a[others, c], a[r, :])
        pivots.append(c)
        r += 1
    return ExactMatrix(rows, cols, a), pivots


def kernel_basis(m):
    """
    Basis of the right null space of m, one vector per free column.
    Each returned vector v satisfies m.v = 0 exactly.
    """
    reduced, pivots = row_reduce(m)
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -reduced.entries[k, free]
        basis.append(tuple(v))

    for v in basis:
        if any(x != 0 for x in m.dot(v)):
            raise InconsistentResult("kernel vector does not annihilate the matrix")
    logger.debug("kernel of %dx%d matrix has dimension %d", m.rows, m.cols, len(basis))
    return basis


def solve(a, b):
    """X with a.X = b, for square invertible a."""
    if a.rows != a.cols or b.rows != a.rows:
        raise DimensionMismatch(f"cannot solve {a.rows}x{a.cols} against {b.rows} rows")
    n = a.rows
    reduced, pivots = row_reduce(hstack(a, b))
    if pivots[:n] != list(range(n)):
        raise DimensionMismatch("coefficient matrix is singular")
    return ExactMatrix(n, b.cols, reduced.entries[:n, n:].copy())
