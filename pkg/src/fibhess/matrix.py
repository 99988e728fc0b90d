"""Square matrices over the exact scalars, the Fibonacci-Hessenberg families,
and the Lorentz product.

Row and column indices in the public API are 1-based.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from fibhess import algebra
from fibhess.algebra import GAUSS, INT, POLY, GaussianInt, Poly

# Families of order n over Z[t]; see build_family.
HESSENBERG_FAMILIES = ("C", "D", "E", "F", "G", "H", "K")
PRODUCT_FAMILIES = {"CD": ("C", "D"), "EF": ("E", "F"), "GH": ("G", "H")}
SUBSTITUTABLE = ("C", "D", "E")
ALL_FAMILIES = ("A", "B") + HESSENBERG_FAMILIES + tuple(PRODUCT_FAMILIES) + ("J",)

_CORNER_ONE = {"E", "G", "H"}
_SUPER_PLUS = {"C", "H", "K"}
_LOWER_ONES = {"C", "D", "E"}


class SubstitutionMode(str, enum.Enum):
    ALL_ONES = "allones"
    BASIS = "basis"


@dataclass(frozen=True)
class SquareMatrix:
    rows: tuple
    tag: str

    @classmethod
    def from_rows(cls, rows, tag: str | None = None) -> SquareMatrix:
        """Build from nested sequences; plain ints are lifted into ``tag``.

        Without ``tag`` the first non-int entry decides it (``int`` if all are ints).
        """
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        if tag is None:
            tag = INT
            for r in rows:
                for x in r:
                    if not isinstance(x, int):
                        tag = algebra.tag_of(x)
                        break
                if tag != INT:
                    break
        return cls(tuple(tuple(algebra.lift(x, tag) for x in r) for r in rows), tag)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i}, {j}) outside a {self.n}x{self.n} matrix")
        return self.rows[i - 1][j - 1]

    def __add__(self, other: SquareMatrix) -> SquareMatrix:
        _check_compatible(self, other)
        return SquareMatrix(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.tag,
        )

    def scale(self, k) -> SquareMatrix:
        k = algebra.lift(k, self.tag)
        return SquareMatrix(tuple(tuple(k * x for x in r) for r in self.rows), self.tag)

    def map(self, f, tag: str) -> SquareMatrix:
        return SquareMatrix(tuple(tuple(f(x) for x in r) for r in self.rows), tag)

    def evaluate(self, t: int) -> SquareMatrix:
        """Substitute an integer for t in a polynomial matrix."""
        if self.tag != POLY:
            raise TypeError("only polynomial matrices can be evaluated")
        return self.map(lambda p: p.eval(t), INT)

    def to_dict(self) -> dict:
        return {
            "order": self.n,
            "tag": self.tag,
            "rows": [[algebra.render(x) for x in r] for r in self.rows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> SquareMatrix:
        tag = d["tag"]
        rows = [[algebra.parse(x, tag) for x in r] for r in d["rows"]]
        if len(rows) != d["order"]:
            raise ValueError("order does not match row count")
        return cls.from_rows(rows, tag)

    @classmethod
    def from_json(cls, text: str) -> SquareMatrix:
        return cls.from_dict(json.loads(text))

    def pretty(self) -> str:
        cells = [[algebra.render(x) for x in r] for r in self.rows]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def compact(self) -> str:
        return "[" + ", ".join("[" + ", ".join(algebra.render(x) for x in r) + "]" for r in self.rows) + "]"

    __str__ = compact


def _check_compatible(a: SquareMatrix, b: SquareMatrix) -> None:
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    if a.tag != b.tag:
        raise TypeError(f"scalar mismatch: {a.tag} vs {b.tag}")


def _check_order(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"order must be a positive integer, got {n!r}")


def identity(n: int, tag: str = INT) -> SquareMatrix:
    _check_order(n)
    z, o = algebra.zero(tag), algebra.one(tag)
    return SquareMatrix(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), tag)


def lorentz_identity(n: int, tag: str = INT) -> SquareMatrix:
    """diag(-1, 1, ..., 1)."""
    _check_order(n)
    z, o = algebra.zero(tag), algebra.one(tag)
    return SquareMatrix(
        tuple(tuple((-o if i == 0 else o) if i == j else z for j in range(n)) for i in range(n)), tag
    )


def transpose(m: SquareMatrix) -> SquareMatrix:
    return SquareMatrix(tuple(zip(*m.rows)), m.tag)


def standard_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    _check_compatible(a, b)
    z = algebra.zero(a.tag)
    cols = list(zip(*b.rows))
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = z
            for x, y in zip(r, c):
                acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return SquareMatrix(tuple(out), a.tag)


def lorentz_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    """Entry (i, k) is -a[i,1]*b[1,k] + sum_{j>=2} a[i,j]*b[j,k]."""
    _check_compatible(a, b)
    n = a.n
    cols = list(zip(*b.rows))
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = -(r[0] * c[0])
            for j in range(1, n):
                acc = acc + r[j] * c[j]
            row.append(acc)
        out.append(tuple(row))
    return SquareMatrix(tuple(out), a.tag)


def is_l_orthogonal(m: SquareMatrix) -> bool:
    """True iff m .L m^T and m^T .L m both equal diag(-1, 1, ..., 1)."""
    j = lorentz_identity(m.n, m.tag)
    mt = transpose(m)
    return lorentz_mul(m, mt) == j and lorentz_mul(mt, m) == j


def is_lower_hessenberg(m: SquareMatrix) -> bool:
    return all(algebra.is_zero(m.rows[i][j]) for i in range(m.n) for j in range(i + 2, m.n))


def is_tridiagonal(m: SquareMatrix) -> bool:
    return all(
        algebra.is_zero(m.rows[i][j])
        for i in range(m.n)
        for j in range(m.n)
        if j > i + 1 or i > j + 1
    )


def build_family(family: str, n: int) -> SquareMatrix:
    """One of the seven t-dependent families C, D, E, F, G, H, K at order n.

    Diagonal 2, except entry (1,1) = 1 for E, G, H and entry (n,n) = t+1
    (so every family is [t+1] at n = 1).  Superdiagonal +1 for C, H, K and
    -1 for D, E, F, G.  Below the diagonal: all ones for C, D, E and
    (-1)^(i+j) for F, G, H, K.
    """
    if family not in HESSENBERG_FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    _check_order(n)
    one, minus = Poly.const(1), Poly.const(-1)
    zero, two = algebra.ZERO_POLY, Poly.const(2)
    sup = one if family in _SUPER_PLUS else minus
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i == j:
                x = Poly.const(1) if (i == 1 and family in _CORNER_ONE) else two
            elif j == i + 1:
                x = sup
            elif j > i + 1:
                x = zero
            elif family in _LOWER_ONES:
                x = one
            else:
                x = one if (i + j) % 2 == 0 else minus
            row.append(x)
        rows.append(row)
    rows[n - 1][n - 1] = Poly.linear(1, 1)
    return SquareMatrix(tuple(tuple(r) for r in rows), POLY)


def build_a(n: int) -> SquareMatrix:
    """Tridiagonal Gaussian-integer matrix: 1 on the diagonal, i beside it."""
    _check_order(n)
    one, i_unit, z = GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(0, 0)
    return SquareMatrix(
        tuple(
            tuple(one if r == c else i_unit if abs(r - c) == 1 else z for c in range(n))
            for r in range(n)
        ),
        GAUSS,
    )


def build_b(n: int) -> SquareMatrix:
    """Integer matrix: diagonal 2 with b_nn = 1, superdiagonal 1, ones below."""
    _check_order(n)
    rows = []
    for i in range(n):
        rows.append(tuple(2 if i == j else 1 if j <= i + 1 else 0 for j in range(n)))
    rows[-1] = rows[-1][:-1] + (1,)
    return SquareMatrix(tuple(rows), INT)


def build_substituted(family: str, n: int, i: int, mode=SubstitutionMode.ALL_ONES) -> SquareMatrix:
    """``build_family(family, n)`` with column i replaced.

    ALL_ONES fills column i with ones; BASIS puts a single 1 at row i.
    """
    if family not in SUBSTITUTABLE:
        raise ValueError(f"column substitution is defined for C, D, E only, not {family!r}")
    mode = SubstitutionMode(mode)
    _check_order(n)
    if not (isinstance(i, int) and 1 <= i <= n):
        raise ValueError(f"column index {i!r} outside 1..{n}")
    base = build_family(family, n)
    one, zero = algebra.ONE_POLY, algebra.ZERO_POLY
    rows = []
    for r, row in enumerate(base.rows, start=1):
        row = list(row)
        if mode is SubstitutionMode.ALL_ONES:
            row[i - 1] = one
        else:
            row[i - 1] = one if r == i else zero
        rows.append(tuple(row))
    return SquareMatrix(tuple(rows), POLY)


def build_product(name: str, n: int) -> SquareMatrix:
    """Lorentz product of a family pair, e.g. ``"CD"`` is C_n .L D_n."""
    try:
        left, right = PRODUCT_FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown product family {name!r}") from None
    return lorentz_mul(build_family(left, n), build_family(right, n))


def build(family: str, n: int, i: int | None = None, mode=SubstitutionMode.ALL_ONES) -> SquareMatrix:
    """Dispatch on a family name: A, B, C..K, CD, EF, GH or J.

    Passing ``i`` selects the column-substituted variant of C, D or E.
    """
    if i is not None:
        return build_substituted(family, n, i, mode)
    if family == "A":
        return build_a(n)
    if family == "B":
        return build_b(n)
    if family in HESSENBERG_FAMILIES:
        return build_family(family, n)
    if family in PRODUCT_FAMILIES:
        return build_product(family, n)
    if family == "J":
        return lorentz_identity(n)
    raise ValueError(f"unknown family {family!r}")
