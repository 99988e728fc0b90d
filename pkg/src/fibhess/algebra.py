"""Exact scalars: Python ints, Gaussian integers and integer polynomials in t.

All three share one informal ring contract (``+``, ``-``, ``*``, unary ``-``,
``==``) plus the helpers :func:`zero`, :func:`one` and :func:`lift`.  Mixing
tags in a single operation raises ``TypeError``; matrices are homogeneous.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

INT = "int"
GAUSS = "gauss"
POLY = "poly"
TAGS = (INT, GAUSS, POLY)


@dataclass(frozen=True)
class GaussianInt:
    """``re + im*i`` with integer parts."""

    re: int
    im: int = 0

    def __add__(self, other):
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        if not isinstance(other, GaussianInt):
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        if not isinstance(other, GaussianInt):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}i"
        if self.re == 0:
            return imag
        return f"{self.re}{imag}" if imag.startswith("-") else f"{self.re}+{imag}"

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        s = text.replace(" ", "")
        m = re.fullmatch(r"([+-]?\d+(?=[+-]|$))?(?:([+-]?\d*)i)?", s)
        if not s or m is None:
            raise ValueError(f"not a Gaussian integer: {text!r}")
        real, imag = m.group(1), m.group(2)
        if imag is None:
            im = 0
        elif imag in ("", "+"):
            im = 1
        elif imag == "-":
            im = -1
        else:
            im = int(imag)
        return cls(int(real) if real else 0, im)


class Poly:
    """Dense integer polynomial in ``t``; ``coeffs[k]`` is the coefficient of t^k.

    Canonical form has a nonzero leading coefficient; the zero polynomial has
    no coefficients at all and ``degree`` ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c: int) -> Poly:
        return cls((c,))

    @classmethod
    def linear(cls, slope: int, intercept: int) -> Poly:
        """``slope*t + intercept``."""
        return cls((intercept, slope))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] += v
        return Poly(out)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    def __call__(self, t: int) -> int:
        return self.eval(t)

    def eval(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    @classmethod
    def parse(cls, text: str) -> Poly:
        """Inverse of ``str``: accepts e.g. ``"-15t^2-34t-16"``, ``"t+1"``, ``"0"``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"not a polynomial: {text!r}")
        coeffs: dict[int, int] = {}
        for term in terms:
            m = re.fullmatch(r"([+-]?)(\d*)(?:(t)(?:\^(\d+))?)?", term)
            if m is None or (not m.group(2) and not m.group(3)):
                raise ValueError(f"bad term {term!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            power = 0 if not m.group(3) else int(m.group(4) or 1)
            coeffs[power] = coeffs.get(power, 0) + sign * mag
        top = max(coeffs)
        return cls(coeffs.get(k, 0) for k in range(top + 1))


ZERO_POLY = Poly()
ONE_POLY = Poly((1,))
T = Poly((0, 1))


def tag_of(x) -> str:
    if isinstance(x, Poly):
        return POLY
    if isinstance(x, GaussianInt):
        return GAUSS
    if isinstance(x, int) and not isinstance(x, bool):
        return INT
    raise TypeError(f"not a ring value: {x!r}")


def zero(tag: str):
    return {INT: 0, GAUSS: GaussianInt(0, 0), POLY: ZERO_POLY}[tag]


def one(tag: str):
    return {INT: 1, GAUSS: GaussianInt(1, 0), POLY: ONE_POLY}[tag]


def lift(x, tag: str):
    """Embed an int (or an already-tagged value) into ``tag``."""
    if isinstance(x, int) and not isinstance(x, bool):
        if tag == INT:
            return x
        if tag == GAUSS:
            return GaussianInt(x, 0)
        if tag == POLY:
            return Poly.const(x)
    if tag_of(x) != tag:
        raise TypeError(f"cannot use {x!r} as a {tag} value")
    return x


def is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    return x.is_zero()


def render(x) -> str:
    """Canonical text of a scalar, or of a tuple of scalars as ``[a, b]``."""
    if isinstance(x, tuple):
        return "[" + ", ".join(render(v) for v in x) + "]"
    return str(x)


def parse(text: str, tag: str):
    if tag == INT:
        return int(text)
    if tag == GAUSS:
        return GaussianInt.parse(text)
    if tag == POLY:
        return Poly.parse(text)
    raise ValueError(f"unknown tag {tag!r}")


@lru_cache(maxsize=None)
def fib(n: int) -> int:
    """Fibonacci number with F_1 = F_2 = 1, extended to n <= 0 backwards."""
    if n in (1, 2):
        return 1
    if n > 2:
        a, b = 1, 1
        for _ in range(n - 2):
            a, b = b, a + b
        return b
    # F_{k-2} = F_k - F_{k-1}, walking down from (F_2, F_1)
    hi, lo = 1, 1
    for _ in range(1 - n):
        hi, lo = lo, hi - lo
    return lo


@lru_cache(maxsize=None)
def lucas(n: int) -> int:
    """Lucas-type numbers seeded L_1 = 2, L_2 = 1 (so 2, 1, 3, 4, 7, ...)."""
    if n == 1:
        return 2
    if n == 2:
        return 1
    if n > 2:
        a, b = 2, 1
        for _ in range(n - 2):
            a, b = b, a + b
        return b
    hi, lo = 1, 2
    for _ in range(1 - n):
        hi, lo = lo, hi - lo
    return lo
