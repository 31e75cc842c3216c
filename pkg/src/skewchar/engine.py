"""Symbolic and numeric treatment of the determinant polynomial det(A - L).

For a symmetric matrix A and a skew-symmetric matrix L whose strict upper
entries l_ij act as independent variables, det(A - L) is a polynomial of
degree at most two in each l_ij.  This module expands it exactly, evaluates
it at concrete skew matrices, computes Pfaffians, and builds weighted
sum-of-squares certificates for positive definite A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrices import (
    DimensionMismatch,
    SkewMatrix,
    SymmetricMatrix,
    TransitionMatrix,
    congruence_skew,
    congruence_sym,
    det_rational,
    lagrange_diagonalize,
    random_skew,
)
from .polynomials import MultiPoly, Var

DEFAULT_MAX_DIM = 7

# Seed base for the sampled certificate verification at dimensions where the
# full symbolic replay would be too large.
_CERT_CHECK_SEED = 90001


class ExpansionTooLarge(ValueError):
    """The requested dimension exceeds the configured expansion cap."""


class OddSubset(ValueError):
    """Pfaffians of odd-dimensional principal submatrices do not exist."""


class NotPositiveDefinite(ValueError):
    """Certificates exist only for positive definite forms."""


@dataclass(frozen=True)
class SymbolicMatrix:
    """The matrix A - L with symbolic strict-triangle entries.

    Above the diagonal entry (i, j) is a_ij - l_ij, below it a_ij + l_ij,
    and the diagonal carries the plain a_ii.
    """

    n: int
    entries: tuple

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i][j]


def build_symbolic(a: SymmetricMatrix) -> SymbolicMatrix:
    """Assemble A - L with the upper triangle carrying -l_ij."""
    n = a.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            base = MultiPoly.constant(a.entry(i, j))
            if i < j:
                row.append(base - MultiPoly.variable(Var(i + 1, j + 1)))
            elif i > j:
                row.append(base + MultiPoly.variable(Var(j + 1, i + 1)))
            else:
                row.append(base)
        rows.append(tuple(row))
    return SymbolicMatrix(n, tuple(rows))


def det_symbolic(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Fraction-free Bareiss determinant over the polynomial ring.

    Intermediate entries stay genuine minors of the input, so every division
    by the previous pivot is exact (divexact raises otherwise, which would
    indicate a bug here rather than bad input).
    """
    n = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev: MultiPoly | None = None
    for k in range(n - 1):
        if m[k][k].is_zero:
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero), None)
            if swap is None:
                return MultiPoly.zero()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            factor = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - factor * m[k][j]
                row_i[j] = num if prev is None else num.divexact(prev)
            row_i[k] = MultiPoly.zero()
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result


def expand_skewchar(a: SymmetricMatrix, max_dim: int = DEFAULT_MAX_DIM) -> MultiPoly:
    """Fully expanded det(A - L) as a canonical polynomial in the l_ij."""
    if a.n > max_dim:
        raise ExpansionTooLarge(
            f"dimension {a.n} exceeds the expansion cap {max_dim}")
    return det_symbolic(build_symbolic(a).entries)


def _difference_rows(a: SymmetricMatrix, l: SkewMatrix):
    if a.n != l.n:
        raise DimensionMismatch(f"form has n={a.n}, skew matrix has n={l.n}")
    return [
        [a.entry(i, j) - l.entry(i, j) for j in range(a.n)] for i in range(a.n)
    ]


def eval_skewchar(a: SymmetricMatrix, l: SkewMatrix) -> Fraction:
    """Exact value det(A - L) at a concrete skew matrix."""
    return det_rational(_difference_rows(a, l))


def covariance_check(
    a: SymmetricMatrix, l: SkewMatrix, s: TransitionMatrix
) -> tuple[Fraction, Fraction]:
    """Both sides of the basis-change law: returns (P(S^T A S, S^T L S), det(S)^2 P(A, L)).

    The two components agree for every valid input; callers assert equality.
    """
    if a.n != s.n or l.n != s.n:
        raise DimensionMismatch("dimensions of A, L and S must agree")
    lhs = eval_skewchar(congruence_sym(a, s), congruence_skew(l, s))
    rhs = s.det ** 2 * eval_skewchar(a, l)
    return lhs, rhs


def _pfaffian_rec(entry, indices: tuple, zero, one):
    """First-row expansion with alternating signs; generic over the scalar ring."""
    if not indices:
        return one
    first, rest = indices[0], indices[1:]
    total = zero
    for t, other in enumerate(rest):
        minor = _pfaffian_rec(entry, rest[:t] + rest[t + 1:], zero, one)
        term = entry(first, other) * minor
        total = total - term if t % 2 else total + term
    return total


def pfaffian(l: SkewMatrix) -> Fraction:
    """Pfaffian of a skew matrix: squares to its determinant; 0 for odd n."""
    if l.n % 2:
        return Fraction(0)
    return _pfaffian_rec(l.entry, tuple(range(l.n)), Fraction(0), Fraction(1))


def sub_pfaffian_poly(n: int, subset: Sequence[int]) -> MultiPoly:
    """Symbolic Pfaffian of the principal submatrix L[subset] (1-based indices).

    The empty subset yields the constant 1; odd subsets are rejected.
    """
    subset = tuple(subset)
    if len(subset) % 2:
        raise OddSubset(f"subset {subset} has odd cardinality")
    if any(not (1 <= s <= n) for s in subset):
        raise ValueError(f"subset {subset} out of range for dimension {n}")
    if any(subset[k] >= subset[k + 1] for k in range(len(subset) - 1)):
        raise ValueError(f"subset {subset} must be strictly increasing")

    def entry(u: int, v: int) -> MultiPoly:
        return MultiPoly.variable(Var(subset[u], subset[v]))

    return _pfaffian_rec(
        entry, tuple(range(len(subset))), MultiPoly.zero(), MultiPoly.constant(1)
    )


@dataclass(frozen=True)
class Certificate:
    """A positivity certificate: scale * sum of weight * square_root^2.

    All weights and the scale are strictly positive rationals, so the
    certified polynomial is positive wherever any square_root is nonzero and
    at least the constant term survives (the empty-subset square root is 1).
    """

    n: int
    detS2inv: Fraction
    terms: tuple  # tuple[tuple[Fraction, MultiPoly], ...]

    def replay_poly(self) -> MultiPoly:
        """Symbolic replay of the certified polynomial."""
        total = MultiPoly.zero()
        for weight, root in self.terms:
            total = total + root * root * weight
        return total * self.detS2inv

    def evaluate(self, l: SkewMatrix) -> Fraction:
        """Exact numeric replay at a concrete skew matrix."""
        assignment = {
            Var(i, j): l.entry(i - 1, j - 1)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
        }
        total = Fraction(0)
        for weight, root in self.terms:
            value = root.evaluate(assignment)
            total += weight * value * value
        return self.detS2inv * total

    def to_text(self) -> str:
        lines = [f"n: {self.n}", f"scale: {self.detS2inv}"]
        lines.extend(
            f"weight: {weight} ; sqroot: {root}" for weight, root in self.terms
        )
        return "\n".join(lines) + "\n"


def _symbolic_congruence_skew(s: TransitionMatrix):
    """Entries of S^T L S with L fully symbolic: each (u, v) is linear in the l_kl."""
    n = s.n
    entries: dict[tuple[int, int], MultiPoly] = {}
    for u in range(n):
        for v in range(u + 1, n):
            acc = MultiPoly.zero()
            for k in range(n):
                for m in range(k + 1, n):
                    coeff = s.entry(k, u) * s.entry(m, v) - s.entry(m, u) * s.entry(k, v)
                    if coeff:
                        acc = acc + MultiPoly.variable(Var(k + 1, m + 1)) * coeff
            entries[(u, v)] = acc
    return entries


def certify_positive(
    a: SymmetricMatrix,
    max_dim: int = DEFAULT_MAX_DIM,
    samples: int = 100,
) -> Certificate:
    """Weighted sum-of-squares certificate for det(A - L) with A positive definite.

    Diagonalize S^T A S = D with all d_i > 0.  Expanding det(D - M) for skew M
    over principal submatrices gives det(D - M) = sum over even index subsets
    U of (prod of d_i outside U) * Pf(M[U])^2.  Substituting M = S^T L S
    symbolically and dividing by det(S)^2 turns that into an identity for
    det(A - L) itself, with every weight positive.

    The identity is re-verified here: symbolically up to dimension 5, by
    exact sampling at `samples` seeded skew matrices above that.
    """
    n = a.n
    if n > max_dim:
        raise ExpansionTooLarge(f"dimension {n} exceeds the certificate cap {max_dim}")
    s, d = lagrange_diagonalize(a)
    diag = d.diagonal_entries()
    if any(x <= 0 for x in diag):
        raise NotPositiveDefinite(
            f"diagonalized form has non-positive entries {tuple(map(str, diag))}")

    tilde = _symbolic_congruence_skew(s)

    terms = []
    for size in range(0, n + 1, 2):
        for subset in itertools.combinations(range(n), size):
            weight = Fraction(1)
            for i in range(n):
                if i not in subset:
                    weight *= diag[i]
            root = _pfaffian_rec(
                lambda u, v, sub=subset: tilde[(sub[u], sub[v])],
                tuple(range(size)),
                MultiPoly.zero(),
                MultiPoly.constant(1),
            )
            terms.append((weight, root))

    cert = Certificate(n=n, detS2inv=1 / s.det ** 2, terms=tuple(terms))

    if n <= 5:
        if cert.replay_poly() != expand_skewchar(a, max_dim=max_dim):
            raise RuntimeError("certificate replay does not match the expansion")
    else:
        for k in range(1, samples + 1):
            probe = random_skew(n, _CERT_CHECK_SEED + k, 10)
            if cert.evaluate(probe) != eval_skewchar(a, probe):
                raise RuntimeError("certificate replay mismatch at a sampled point")
    return cert
