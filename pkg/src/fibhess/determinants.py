"""Exact, division-free determinants over any of the scalar rings.

Two unrelated code paths are kept on purpose: ``hessenberg_det`` runs the
leading-minor recurrence for lower Hessenberg matrices, ``cofactor_det``
expands over column subsets and serves as the independent witness.
"""

from __future__ import annotations

from fibhess import algebra
from fibhess.matrix import SquareMatrix, is_lower_hessenberg, lorentz_mul

COFACTOR_MAX_ORDER = 20


class NotHessenbergError(ValueError):
    pass


class OrderTooLargeError(ValueError):
    pass


class EngineDisagreement(AssertionError):
    """The two determinant engines returned different values."""


def leading_minors(m: SquareMatrix) -> list:
    """[|H_0|, |H_1|, ..., |H_n|] for a lower Hessenberg matrix, |H_0| = 1.

    |H_k| = h_kk |H_{k-1}|
            + sum_{r<k} (-1)^(k-r) h_kr (h_{r,r+1} ... h_{k-1,k}) |H_{r-1}|
    """
    if not is_lower_hessenberg(m):
        raise NotHessenbergError("matrix has nonzero entries above the superdiagonal")
    h = m.rows
    minors = [algebra.one(m.tag)]
    for k in range(1, m.n + 1):
        acc = h[k - 1][k - 1] * minors[k - 1]
        chain = None
        for r in range(k - 1, 0, -1):
            link = h[r - 1][r]
            chain = link if chain is None else link * chain
            term = h[k - 1][r - 1] * chain * minors[r - 1]
            acc = acc - term if (k - r) % 2 else acc + term
        minors.append(acc)
    return minors


def hessenberg_det(m: SquareMatrix):
    return leading_minors(m)[-1]


def cofactor_det(m: SquareMatrix):
    """Laplace expansion along rows, memoized on the set of unused columns."""
    n = m.n
    if n > COFACTOR_MAX_ORDER:
        raise OrderTooLargeError(f"cofactor expansion is capped at order {COFACTOR_MAX_ORDER}")
    rows = m.rows
    zero, one = algebra.zero(m.tag), algebra.one(m.tag)
    nonzero = [[j for j in range(n) if not algebra.is_zero(rows[i][j])] for i in range(n)]
    memo = {}

    # Minor on rows row..n-1 and the columns in mask; its row index is implied
    # by the mask size.
    def expand(mask: int):
        if mask == 0:
            return one
        hit = memo.get(mask)
        if hit is not None:
            return hit
        row = n - bin(mask).count("1")
        acc = zero
        for j in nonzero[row]:
            bit = 1 << j
            if not mask & bit:
                continue
            sub = expand(mask ^ bit)
            if algebra.is_zero(sub):
                continue
            term = rows[row][j] * sub
            # position of column j among the remaining columns
            if bin(mask & (bit - 1)).count("1") % 2:
                acc = acc - term
            else:
                acc = acc + term
        memo[mask] = acc
        return acc

    return expand((1 << n) - 1)


def det_of_lorentz_product(a: SquareMatrix, b: SquareMatrix):
    """-det(a)*det(b), the determinant of ``lorentz_mul(a, b)`` without forming it."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    if a.tag != b.tag:
        raise TypeError(f"scalar mismatch: {a.tag} vs {b.tag}")
    return -(det(a) * det(b))


def det(m: SquareMatrix):
    """Recurrence when the shape allows it, cofactor expansion otherwise."""
    if is_lower_hessenberg(m):
        return hessenberg_det(m)
    return cofactor_det(m)


def checked_det(m: SquareMatrix):
    """Cofactor determinant, cross-checked against the recurrence when applicable."""
    value = cofactor_det(m)
    if is_lower_hessenberg(m):
        other = hessenberg_det(m)
        if other != value:
            raise EngineDisagreement(
                f"hessenberg {algebra.render(other)} != cofactor {algebra.render(value)} on {m}"
            )
    return value


def lorentz_product_det(a: SquareMatrix, b: SquareMatrix):
    """Oracle determinant of the formed product, for symmetry with det_of_lorentz_product."""
    return cofactor_det(lorentz_mul(a, b))
