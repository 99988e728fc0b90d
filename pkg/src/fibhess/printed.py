"""Values and formulas as printed in the source article: the hypotheses under audit.

Nothing here is computed from matrices.  Formulas are kept as functions of n
returning exact values, each paired with the formula text it transcribes.
"""

from __future__ import annotations

from fibhess.algebra import Poly, fib as F, lucas as L

T_ROWS = (-1, 0, 1, 2)


def lin(slope: int, intercept: int) -> Poly:
    return Poly.linear(slope, intercept)


def quad(a: int, b: int, c: int) -> Poly:
    """a*t^2 + b*t + c."""
    return Poly((c, b, a))


# family -> (formula text, general term as a function of n)
GENERAL_TERMS = {
    "C": ("|C_{n,t}|=F_{n+1} t+F_{n}", lambda n: lin(F(n + 1), F(n))),
    "D": ("|D_{n,t}|=F_{2n-1} t+F_{2n}", lambda n: lin(F(2 * n - 1), F(2 * n))),
    "E": ("|E_{n,t}|=F_{2n-2} t+F_{2n-1}", lambda n: lin(F(2 * n - 2), F(2 * n - 1))),
    "F": ("|F_{n,t}|=F_{n}+tF_{n+1}", lambda n: lin(F(n + 1), F(n))),
    "G": ("|G_{n,t}|=F_{n-2}+tF_{n-1}", lambda n: lin(F(n - 1), F(n - 2))),
    "H": ("|H_{n,t}|=F_{2n-1}+tF_{2n-2}", lambda n: lin(F(2 * n - 2), F(2 * n - 1))),
    # the inline text is truncated ("tF_{2n-}"); the table column is complete
    "K": ("F_{2n}+tF_{2n-1}", lambda n: lin(F(2 * n - 1), F(2 * n))),
}

A_TERM = ("|A_n| = F_{n+1}, n in N", lambda n: F(n + 1))
B_TERM = ("|B_n|=F_n", lambda n: F(n))

# first three determinants as listed next to each family
LISTED = {
    "C": ("t+1", "2t+1", "3t+2"),
    "D": ("t+1", "2t+3", "3t+5"),
    "E": ("t+1", "2t+3", "3t+5"),
    "F": ("t+1", "2t+1", "3t+2"),
    "G": ("t+1", "2t+1", "3t+2"),
    "H": ("t+1", "2t+3", "5t+8"),
    "K": ("t+1", "2t+3", "5t+8"),
}


class Row:
    """One printed table row: cells for n = 1, 2, 3 and the n-th term column."""

    def __init__(self, cells, term_text, term, lucas_index=None):
        self.cells = tuple(cells)
        self.term_text = term_text
        self.term = term
        # for L-labelled cells: the Lucas index k as a function of n
        self.lucas_index = lucas_index


def _fib_rows(neg1, zero, one, two):
    return dict(zip(T_ROWS, (neg1, zero, one, two)))


_C_LIKE = _fib_rows(
    Row((0, -1, -1), "-F_{n-1}", lambda n: -F(n - 1)),
    Row((1, 1, 2), "F_{n}", lambda n: F(n)),
    Row((2, 3, 5), "F_{n+2}", lambda n: F(n + 2)),
    Row((3, 5, 8), "F_{n+3}", lambda n: F(n + 3)),
)

# family -> {t: Row}; L-labelled terms carry the label's Lucas index
TABLE1 = {
    "C": _C_LIKE,
    "D": _fib_rows(
        Row((0, 1, 2), "F_{2n-2}", lambda n: F(2 * n - 2)),
        Row((1, 3, 5), "F_{2n}", lambda n: F(2 * n)),
        Row((2, 5, 8), "F_{2n+1}", lambda n: F(2 * n + 1)),
        Row((3, 7, 11), "L_{2n}", None, lucas_index=lambda n: 2 * n),
    ),
    "E": _fib_rows(
        Row((0, 1, 2), "F_{2n-3}", lambda n: F(2 * n - 3)),
        Row((1, 3, 5), "F_{2n-1}", lambda n: F(2 * n - 1)),
        Row((2, 5, 8), "F_{2n}", lambda n: F(2 * n)),
        Row((3, 7, 11), "L_{2n-1}", None, lucas_index=lambda n: 2 * n - 1),
    ),
    "F": _C_LIKE,
    "G": _fib_rows(
        Row((0, -1, -1), "-F_{n-3}", lambda n: -F(n - 3)),
        Row((1, 1, 2), "F_{n-2}", lambda n: F(n - 2)),
        Row((2, 3, 5), "F_{n}", lambda n: F(n)),
        Row((3, 5, 8), "F_{n+1}", lambda n: F(n + 1)),
    ),
    "H": _fib_rows(
        Row((0, 1, 3), "F_{2n-3}", lambda n: F(2 * n - 3)),
        Row((1, 3, 8), "F_{2n-1}", lambda n: F(2 * n - 1)),
        Row((2, 5, 13), "F_{2n}", lambda n: F(2 * n)),
        Row((3, 7, 18), "L_{2n-1}", None, lucas_index=lambda n: 2 * n - 1),
    ),
    "K": _fib_rows(
        Row((0, 1, 3), "F_{2n-2}", lambda n: F(2 * n - 2)),
        Row((1, 3, 8), "F_{2n}", lambda n: F(2 * n)),
        Row((2, 5, 13), "F_{2n+1}", lambda n: F(2 * n + 1)),
        Row((3, 7, 18), "L_{2n}", None, lucas_index=lambda n: 2 * n),
    ),
}
# symbolic-t row of each block: the listed values and the general term
TABLE1_T_ROW = {f: LISTED[f] for f in TABLE1}
TABLE1_T_TERM = {
    "C": "F_{n+1} t+F_{n}",
    "D": "F_{2n-1} t+F_{2n}",
    "E": "F_{2n-2} t+F_{2n-1}",
    "F": "F_{n}+tF_{n+1}",
    "G": "F_{n-2}+tF_{n-1}",
    "H": "F_{2n-1}+tF_{2n-2}",
    "K": "F_{2n}+tF_{2n-1}",
}

# substituted-column determinants: family -> i -> (text, f(n))
TABLE2 = {
    "C": {
        1: ("tF_{n-1}+F_{n-2}", lambda n: lin(F(n - 1), F(n - 2))),
        2: ("tF_{n-2}+F_{n-3}", lambda n: lin(F(n - 2), F(n - 3))),
        3: ("tF_{n-3}+F_{n-4}", lambda n: lin(F(n - 3), F(n - 4))),
    },
    "D": {
        1: ("F_{2n-1}+tF_{2n-2}", lambda n: lin(F(2 * n - 2), F(2 * n - 1))),
        2: ("F_{2n-3}+tF_{2n-4}", lambda n: lin(F(2 * n - 4), F(2 * n - 3))),
        3: ("F_{2n-5}+tF_{2n-6}", lambda n: lin(F(2 * n - 6), F(2 * n - 5))),
    },
    "E": {
        1: ("tF_{n-1}+F_{n}", lambda n: lin(F(n - 1), F(n))),
        2: ("tF_{n-2}+F_{n-1}", lambda n: lin(F(n - 2), F(n - 1))),
        3: ("tF_{n-3}+F_{n-2}", lambda n: lin(F(n - 3), F(n - 2))),
    },
}

# general substituted-column formulas, as functions of (n, i), with the least valid i
SUBSTITUTED = {
    "C": ("|C_{n,t}^{i}|=tF_{n-i}+F_{n-i-1}, n>=i>=1", lambda n, i: lin(F(n - i), F(n - i - 1)), 1),
    "D": (
        "|D_{n,t}^{i}|=F_{2(n-i)+1}+tF_{2(n-i)}, n>=i>=1",
        lambda n, i: lin(F(2 * (n - i)), F(2 * (n - i) + 1)),
        1,
    ),
    "E": ("|E_{n,t}^{i}|=tF_{n-i}+F_{n-i+1}, n>=i>=2", lambda n, i: lin(F(n - i), F(n - i + 1)), 2),
}
SUMMATION = {
    "C": "|C_{n,t}|=t+sum_{i=1}^{n}|C_{n,t}^{i}|",
    "D": "|D_{n,t}|=t+sum_{i=1}^{n}|D_{n,t}^{i}|",
    "E": "2|E_{n,t}|=(t+1)+sum_{i=1}^{n}|E_{n,t}^{i}|, n>=2",
}


def _cd_term(n):
    return quad(-F(n + 1) * F(2 * n - 1), -(F(n + 1) * F(2 * n) + F(n) * F(2 * n - 1)), -F(n) * F(2 * n))


def _ef_parts(n):
    a = F(2 * n - 2) * F(n + 1)
    b = F(2 * n - 2) * F(n) + F(n + 1) * F(2 * n - 1)
    c = F(2 * n - 1) * F(n)
    return a, b, c


def _gh_parts(n):
    a = F(n - 1) * F(2 * n - 2)
    b = F(n - 2) * F(2 * n - 2) + F(n - 1) * F(2 * n - 1)
    c = F(n - 2) * F(2 * n - 1)
    return a, b, c


def _ef_with_t(n):
    a, b, c = _ef_parts(n)
    return quad(-a, -b, -c)


def _ef_without_t(n):
    # the middle bracket carries no t in the stated sequence
    a, b, c = _ef_parts(n)
    return quad(-a, 0, -b - c)


def _gh_proof(n):
    a, b, c = _gh_parts(n)
    return quad(-a, -b, -c)


PRODUCT_LISTED = ("-t^2-2t-1", "-4t^2-8t-3", "-15t^2-34t-16")

# product -> list of (claim suffix, formula text, f(n))
PRODUCT_TERMS = {
    "CD": [
        (
            "general",
            "-F_{n+1}F_{2n-1} t^{2}-(F_{n+1}F_{2n}+F_{n}F_{2n-1})t-F_{n} F_{2n}",
            _cd_term,
        ),
    ],
    "EF": [
        (
            "statement",
            "-F_{2n-2} F_{n+1} t^{2}-(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})-F_{2n-1}F_{n}",
            _ef_without_t,
        ),
        (
            "proof",
            "-F_{2n-2}F_{n+1}t^{2}-(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})t-F_{2n-1}F_{n}",
            _ef_with_t,
        ),
    ],
    "GH": [
        (
            "statement",
            "-F_{2n-2} F_{n+1}t^{2}-(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})t-F_{2n-1}F_{n}",
            _ef_with_t,
        ),
        (
            "proof",
            "-F_{n-1}F_{2n-2}t^{2}-(F_{n-2}F_{2n-2}+F_{n-1} F_{2n-1})t-F_{n-2}F_{2n-1}",
            _gh_proof,
        ),
    ],
}


def _row3(cells, text, parts, weights):
    wa, wb = weights

    def term(n):
        a, b, c = parts(n)
        return -wa * a - wb * b - c

    return Row(cells, text, term)


def _cd_parts(n):
    return F(n + 1) * F(2 * n - 1), F(n + 1) * F(2 * n) + F(n) * F(2 * n - 1), F(n) * F(2 * n)


# product -> {t: Row}; n-th term columns with the row's t already substituted
TABLE3 = {
    "CD": {
        -1: _row3((0, 1, 3), "-F_{n+1}F_{2n-1}+(F_{n+1}F_{2n}+F_{n}F_{2n-1})-F_{n}F_{2n}", _cd_parts, (1, -1)),
        0: _row3((-1, -3, -16), "-F_{n}F_2{n}", _cd_parts, (0, 0)),
        1: _row3((-4, -15, -65), "-F_{n+1} F_{2n-1}-(F_{n+1}F_{2n}+F_{n}F_{2n-1})-F_{n} F_{2n}", _cd_parts, (1, 1)),
        2: _row3((-9, -35, -144), "-4F_{n+1} F_{2n-1}-2(F_{n+1}F_{2n}+F_{n}F_{2n-1})-F_{n} F_{2n}", _cd_parts, (4, 2)),
    },
    "EF": {
        -1: _row3((0, 1, 3), "-F_{2n-2} F_{n+1}+(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})-F_{2n-1}F_{n}", _ef_parts, (1, -1)),
        0: _row3((-1, -3, -16), "-F_{2n-1}F_{n}", _ef_parts, (0, 0)),
        1: _row3((-2, -15, -65), "-F_{2n-2}F_{n+1}-(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})-F_{2n-1}F_{n}", _ef_parts, (1, 1)),
        2: _row3((-9, -35, -144), "-4F_{2n-2} F_{n+1}-2(F_{2n-2}F_{n}+F_{n+1}F_{2n-1})-F_{2n-1}F_{n}", _ef_parts, (4, 2)),
    },
    "GH": {
        -1: _row3((0, 1, 3), "-F_{n-1} F_{2n-2}+(F_{n-2}F_{2n-2}+F_{n-1}F_{2n-1})-F_{n-2}F_{2n-1}", _gh_parts, (1, -1)),
        0: _row3((-1, -3, -16), "-F_{n-2} F_{2n-1}", _gh_parts, (0, 0)),
        1: _row3((-2, -15, -65), "-F_{n-1} F_{2n-2}t^{2}-(F_{n-2}F_{2n-2}+F_{n-1}F_{2n-1})-F_{n-2}F_{2n-1}", _gh_parts, (1, 1)),
        2: _row3((-9, -35, -144), "-F_{n-1}F_{2n-2}t^{2}-2(F_{n-2}F_{2n-2}+F_{n-1} F_{2n-1})-F_{n-2}F_{2n-1}", _gh_parts, (4, 2)),
    },
}

# Matrices displayed inside the product derivations, with the determinant the
# derivation attributes to them (None when it names none).
# (label, family, n, rows, attributed determinant)
FACTOR_DISPLAYS = [
    ("C1", "C", 1, [["t+1"]], "t+1"),
    ("D1", "D", 1, [["t+1"]], "t+1"),
    ("C2", "C", 2, [["2", "1"], ["1", "t+1"]], "2t+1"),
    ("D2", "D", 2, [["2", "-1"], ["1", "t+1"]], "2t+3"),
    ("C3", "C", 3, [["2", "1", "0"], ["1", "2", "1"], ["1", "1", "t+1"]], "3t+2"),
    ("D3", "D", 3, [["2", "1", "0"], ["1", "2", "1"], ["1", "1", "t+1"]], "5t+8"),
    ("E1", "E", 1, [["t+1"]], "t+1"),
    ("F1", "F", 1, [["t+1"]], "t+1"),
    ("E2", "E", 2, [["2", "-1"], ["1", "t+1"]], None),
    ("F2", "F", 2, [["2", "-1"], ["-1", "t+1"]], None),
    ("E3", "E", 3, [["2", "1", "0"], ["1", "2", "1"], ["1", "1", "t+1"]], "5t+8"),
    ("F3", "F", 3, [["2", "-1", "0"], ["1", "2", "-1"], ["1", "-1", "t+1"]], "3t+2"),
    ("G1", "G", 1, [["t+1"]], "t+1"),
    ("H1", "H", 1, [["t+1"]], "t+1"),
    ("G2", "G", 2, [["2", "-1"], ["-1", "t+1"]], "2t+1"),
    ("H2", "H", 2, [["2", "1"], ["-1", "t+1"]], "2t+3"),
    ("G3", "G", 3, [["2", "-1", "0"], ["-1", "2", "-1"], ["1", "-1", "t+1"]], "3t+2"),
    ("H3", "H", 3, [["2", "1", "0"], ["1", "2", "1"], ["1", "-1", "t+1"]], "5t+8"),
]

# (label, product, n, rows)
PRODUCT_DISPLAYS = [
    ("CD1", "CD", 1, [["-t^2-2t-1"]]),
    ("CD2", "CD", 2, [["-3", "t+3"], ["t-1", "t^2+2t+2"]]),
    ("CD3", "CD", 3, [["-3", "4", "-1"], ["1", "6", "t-1"], ["t", "t+4", "t^2+2t"]]),
    ("EF1", "EF", 1, [["-t^2-2t-1"]]),
    ("EF2", "EF", 2, [["-3", "-t+1"], ["-t-3", "t^2+2t+2"]]),
    ("EF3", "EF", 3, [["-3", "0", "1"], ["-5", "6", "-t-3"], ["t-2", "-t+2", "t^2+2t"]]),
    ("GH1", "GH", 1, [["-t^2-2t-1"]]),
    ("GH2", "GH", 2, [["-3", "-t-3"], ["-t+1", "t^2+2t+2"]]),
    ("GH3", "GH", 3, [["-3", "-4", "-1"], ["-1", "6", "-t+1"], ["t", "-t-4", "t^2+2t"]]),
]
