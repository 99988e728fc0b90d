"""Registry of published determinant claims and the exact sweep that audits them.

Computed values always come from the cofactor oracle (cross-checked against
the Hessenberg recurrence whenever the matrix has that shape); printed
formulas are only ever hypotheses.  A claim holds on a range of n from its
minimal index onward, or not at all.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Any, Callable

from fibhess import printed
from fibhess.algebra import GaussianInt, Poly, lucas, render
from fibhess.determinants import checked_det, det_of_lorentz_product
from fibhess.matrix import (
    SquareMatrix,
    SubstitutionMode,
    build,
    build_family,
    build_product,
    build_substituted,
    lorentz_mul,
)

DEFAULT_T_SAMPLES = (-3, -2, -1, 0, 1, 2, 3)
MAX_COUNTEREXAMPLES = 5

VERIFIED = "VERIFIED"
VERIFIED_FROM_M = "VERIFIED_FROM_M"
MISMATCH = "MISMATCH"

KINDS = ("general-term", "table-cell", "product-law", "summation-recurrence", "text-value")

SECTIONS = (
    "family determinants",
    "family listed values",
    "table 1",
    "substituted columns",
    "table 2",
    "Lorentz determinant law",
    "CD product",
    "EF product",
    "GH product",
    "derivation displays",
    "table 3",
)


class ClaimError(RuntimeError):
    pass


@dataclass(frozen=True)
class Claim:
    id: str
    section: str
    quote: str
    kind: str
    family: str
    computed: Callable[[int], Any] = field(repr=False, compare=False)
    predicted: Callable[[int], Any] = field(repr=False, compare=False)
    n_start: int = 1
    n_stop: int | None = None

    @property
    def anchor(self) -> str:
        return f"{self.section}: {self.quote}"


@dataclass(frozen=True)
class Counterexample:
    n: int
    computed: str
    predicted: str


@dataclass(frozen=True)
class ClaimResult:
    id: str
    anchor: str
    status: str
    minimal_m: int | None
    counterexamples: tuple = ()

    @property
    def section(self) -> str:
        return self.anchor.split(": ", 1)[0]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "minimal_m": self.minimal_m,
            "counterexamples": [asdict(c) for c in self.counterexamples],
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClaimResult:
        return cls(
            d["id"],
            d["anchor"],
            d["status"],
            d["minimal_m"],
            tuple(Counterexample(**c) for c in d["counterexamples"]),
        )


@dataclass(frozen=True)
class Report:
    n_max: int
    t_samples: tuple
    claims: tuple

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "t_samples": list(self.t_samples),
            "claims": [c.to_dict() for c in self.claims],
        }

    @classmethod
    def from_dict(cls, d: dict) -> Report:
        return cls(d["n_max"], tuple(d["t_samples"]), tuple(ClaimResult.from_dict(c) for c in d["claims"]))

    def counts(self) -> dict:
        out = {VERIFIED: 0, VERIFIED_FROM_M: 0, MISMATCH: 0}
        for c in self.claims:
            out[c.status] += 1
        return out

    def by_id(self, claim_id: str) -> ClaimResult:
        for c in self.claims:
            if c.id == claim_id:
                return c
        raise KeyError(claim_id)


# --- cached determinants ------------------------------------------------------


@lru_cache(maxsize=None)
def family_det(family: str, n: int):
    return checked_det(build(family, n))


@lru_cache(maxsize=None)
def substituted_det(family: str, n: int, i: int, mode: str):
    return checked_det(build_substituted(family, n, i, mode))


@lru_cache(maxsize=None)
def product_det(name: str, n: int):
    return checked_det(build_product(name, n))


def _poly_matrix(rows) -> SquareMatrix:
    return SquareMatrix.from_rows([[Poly.parse(x) for x in r] for r in rows], "poly")


# --- registry -----------------------------------------------------------------


def _at(t: int, f):
    return lambda n: f(n).eval(t)


def _t_label(t: int) -> str:
    return f"tm{-t}" if t < 0 else f"t{t}"


def _fixed(value):
    return lambda n: value


def _family_claims():
    out = []
    text, term = printed.A_TERM
    out.append(
        Claim("A-general", "family determinants", text, "general-term", "A",
              lambda n: family_det("A", n), lambda n, term=term: GaussianInt(term(n), 0))
    )
    text, term = printed.B_TERM
    out.append(
        Claim("B-general", "family determinants", text, "general-term", "B",
              lambda n: family_det("B", n), term)
    )
    for fam, (text, term) in printed.GENERAL_TERMS.items():
        out.append(
            Claim(f"{fam}-general", "family determinants", text, "general-term", fam,
                  lambda n, fam=fam: family_det(fam, n), term)
        )
    for fam, values in printed.LISTED.items():
        for n, value in enumerate(values, start=1):
            out.append(
                Claim(f"{fam}-text-n{n}", "family listed values", f"|{fam}_{{{n},t}}|={value}",
                      "text-value", fam, lambda n, fam=fam: family_det(fam, n),
                      _fixed(Poly.parse(value)), n, n)
            )
    return out


def _table1_claims():
    out = []
    for fam, rows in printed.TABLE1.items():
        general = printed.GENERAL_TERMS[fam][1]
        for t, row in rows.items():
            tag = _t_label(t)
            computed = _at(t, lambda n, fam=fam: family_det(fam, n))
            cells = row.cells
            out.append(
                Claim(f"T1-{fam}-{tag}-cells", "table 1", f"matrix {fam}, t={t}: {' '.join(map(str, cells))}",
                      "table-cell", fam, computed, lambda n, cells=cells: cells[n - 1], 1, 3)
            )
            if row.lucas_index is None:
                out.append(
                    Claim(f"T1-{fam}-{tag}-term", "table 1", f"matrix {fam}, t={t}: {row.term_text}",
                          "table-cell", fam, computed, row.term)
                )
                continue
            # L-labelled column: the row's own general term decides, the label is informational
            out.append(
                Claim(f"T1-{fam}-{tag}-term", "table 1",
                      f"matrix {fam}, t={t}: {row.term_text} read as ({printed.TABLE1_T_TERM[fam]}) at t={t}",
                      "table-cell", fam, computed, _at(t, general))
            )
            k = row.lucas_index
            out.append(
                Claim(f"T1-{fam}-{tag}-lucas", "table 1",
                      f"matrix {fam}, t={t}: {row.term_text} with L_1=2, L_2=1",
                      "table-cell", fam, computed, lambda n, k=k: lucas(k(n)))
            )
    return out


def _substitution_claims():
    out = []
    modes = {
        "C": (SubstitutionMode.ALL_ONES,),
        "D": (SubstitutionMode.ALL_ONES,),
        "E": (SubstitutionMode.ALL_ONES, SubstitutionMode.BASIS),
    }
    for fam, fam_modes in modes.items():
        text, formula, i_min = printed.SUBSTITUTED[fam]
        for mode in fam_modes:
            suffix = "" if fam != "E" else f"-{mode.value}"
            m = mode.value

            def computed(n, fam=fam, m=m, i_min=i_min):
                return tuple(substituted_det(fam, n, i, m) for i in range(i_min, n + 1))

            def predicted(n, formula=formula, i_min=i_min):
                return tuple(formula(n, i) for i in range(i_min, n + 1))

            out.append(
                Claim(f"{fam}sub-formula{suffix}", "substituted columns", f"{text} [{m}]",
                      "general-term", f"{fam}sub[{m}]", computed, predicted, i_min)
            )

            if fam == "E":
                def lhs(n):
                    return Poly.const(2) * family_det("E", n)

                def rhs(n, m=m):
                    acc = Poly.linear(1, 1)
                    for i in range(1, n + 1):
                        acc = acc + substituted_det("E", n, i, m)
                    return acc

                start = 2
            else:
                def lhs(n, fam=fam):
                    return family_det(fam, n)

                def rhs(n, fam=fam, m=m):
                    acc = Poly.linear(1, 0)
                    for i in range(1, n + 1):
                        acc = acc + substituted_det(fam, n, i, m)
                    return acc

                start = 1
            out.append(
                Claim(f"{fam}-summation{suffix}", "substituted columns", f"{printed.SUMMATION[fam]} [{m}]",
                      "summation-recurrence", f"{fam}sub[{m}]", lhs, rhs, start)
            )

            for i, (row_text, row_f) in printed.TABLE2[fam].items():
                out.append(
                    Claim(f"T2-{fam}-i{i}{suffix}", "table 2", f"matrix {fam}^i, i={i}: {row_text} [{m}]",
                          "table-cell", f"{fam}sub[{m}]",
                          lambda n, fam=fam, i=i, m=m: substituted_det(fam, n, i, m), row_f, i)
                )
    return out


def _product_claims():
    out = []
    for name, (left, right) in (("CD", "CD"), ("EF", "EF"), ("GH", "GH")):
        out.append(
            Claim(f"det-law-{name}", "Lorentz determinant law", "det(A .L B) = -det A . det B",
                  "product-law", name, lambda n, name=name: product_det(name, n),
                  lambda n, a=left, b=right: det_of_lorentz_product(build_family(a, n), build_family(b, n)))
        )
        section = f"{name} product"
        for n, value in enumerate(printed.PRODUCT_LISTED, start=1):
            out.append(
                Claim(f"{name}-listed-n{n}", section, f"|{name}_{{{n},t}}|={value}", "text-value", name,
                      lambda n, name=name: product_det(name, n), _fixed(Poly.parse(value)), n, n)
            )
        for suffix, text, term in printed.PRODUCT_TERMS[name]:
            out.append(
                Claim(f"{name}-{suffix}", section, f"|{name}_{{n,t}}|={text}", "general-term", name,
                      lambda n, name=name: product_det(name, n), term)
            )
    return out


def _display_claims():
    out = []
    shown = {}
    for label, fam, n, rows, attributed in printed.FACTOR_DISPLAYS:
        m = _poly_matrix(rows)
        shown[label] = m
        quote = f"{fam}_{{{n},t}}={m.compact()}"
        out.append(
            Claim(f"disp-{label}-matrix", "derivation displays", quote, "text-value", fam,
                  lambda n, fam=fam: build_family(fam, n), _fixed(m), n, n)
        )
        if attributed is not None:
            out.append(
                Claim(f"disp-{label}-det", "derivation displays", f"{quote}, det {attributed}",
                      "text-value", fam, lambda n, m=m: checked_det(m), _fixed(Poly.parse(attributed)), n, n)
            )
    for label, name, n, rows in printed.PRODUCT_DISPLAYS:
        m = _poly_matrix(rows)
        quote = f"{name}_{{{n},t}}={m.compact()}"
        out.append(
            Claim(f"disp-{label}-matrix", "derivation displays", quote, "text-value", name,
                  lambda n, name=name: build_product(name, n), _fixed(m), n, n)
        )
        a, b = name
        out.append(
            Claim(f"disp-{label}-product", "derivation displays", f"{a}{n} .L {b}{n} as displayed = {m.compact()}",
                  "product-law", name,
                  lambda n, a=shown[f"{a}{n}"], b=shown[f"{b}{n}"]: lorentz_mul(a, b), _fixed(m), n, n)
        )
    return out


def _table3_claims():
    out = []
    for name, rows in printed.TABLE3.items():
        for t, row in rows.items():
            tag = _t_label(t)
            computed = _at(t, lambda n, name=name: product_det(name, n))
            cells = row.cells
            out.append(
                Claim(f"T3-{name}-{tag}-cells", "table 3", f"|{name}|, t={t}: {' '.join(map(str, cells))}",
                      "table-cell", name, computed, lambda n, cells=cells: cells[n - 1], 1, 3)
            )
            out.append(
                Claim(f"T3-{name}-{tag}-term", "table 3", f"|{name}|, t={t}: {row.term_text}",
                      "table-cell", name, computed, row.term)
            )
    return out


@lru_cache(maxsize=1)
def _registry() -> tuple:
    claims = (
        _family_claims()
        + _table1_claims()
        + _substitution_claims()
        + _product_claims()
        + _display_claims()
        + _table3_claims()
    )
    ids = [c.id for c in claims]
    assert len(ids) == len(set(ids)), "duplicate claim ids"
    return tuple(claims)


def registered_claims() -> list:
    return list(_registry())


def get_claim(claim_id: str) -> Claim:
    for c in _registry():
        if c.id == claim_id:
            return c
    raise KeyError(claim_id)


# --- verification -------------------------------------------------------------


def values_equal(computed, predicted, t_samples) -> bool:
    """Exact comparison; a polynomial against an integer is compared at every t sample."""
    if isinstance(computed, tuple) and isinstance(predicted, tuple):
        return len(computed) == len(predicted) and all(
            values_equal(c, p, t_samples) for c, p in zip(computed, predicted)
        )
    if isinstance(computed, Poly) and isinstance(predicted, int):
        return all(computed.eval(t) == predicted for t in t_samples)
    if isinstance(computed, int) and isinstance(predicted, Poly):
        return all(predicted.eval(t) == computed for t in t_samples)
    return computed == predicted


def _show(x) -> str:
    if isinstance(x, SquareMatrix):
        return x.compact()
    return render(x)


def verify_claim(claim: Claim, n_max: int, t_samples=DEFAULT_T_SAMPLES) -> ClaimResult:
    t_samples = tuple(t_samples)
    if not t_samples:
        raise ValueError("t_samples must be nonempty")
    start = claim.n_start
    stop = n_max if claim.n_stop is None else min(claim.n_stop, n_max)
    if stop < start:
        raise ValueError(f"{claim.id}: n_max={n_max} is below the claim's first index {start}")
    holds = {}
    failures = []
    for n in range(start, stop + 1):
        try:
            c = claim.computed(n)
            p = claim.predicted(n)
        except Exception as exc:
            raise ClaimError(f"{claim.id} at n={n}: {exc}") from exc
        holds[n] = values_equal(c, p, t_samples)
        if not holds[n]:
            failures.append(Counterexample(n, _show(c), _show(p)))
    m = None
    for n in range(stop, start - 1, -1):
        if not holds[n]:
            break
        m = n
    if m is None:
        status = MISMATCH
    elif m == start:
        status = VERIFIED
    else:
        status = VERIFIED_FROM_M
    return ClaimResult(claim.id, claim.anchor, status, m, tuple(failures[:MAX_COUNTEREXAMPLES]))


def verify_all(n_max: int = 12, t_samples=DEFAULT_T_SAMPLES, claim_ids=None) -> Report:
    claims = _registry()
    if claim_ids is not None:
        claims = [get_claim(i) for i in claim_ids]
    results = sorted((verify_claim(c, n_max, t_samples) for c in claims), key=lambda r: r.id)
    return Report(n_max, tuple(t_samples), tuple(results))


# --- report encodings ---------------------------------------------------------


def to_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> Report:
    return Report.from_dict(json.loads(text))


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "anchor", "status", "minimal_m", "first_counterexample"])
    for c in report.claims:
        first = ""
        if c.counterexamples:
            x = c.counterexamples[0]
            first = f"n={x.n}: computed {x.computed}, predicted {x.predicted}"
        w.writerow([c.id, c.anchor, c.status, "" if c.minimal_m is None else c.minimal_m, first])
    return buf.getvalue()


def to_text(report: Report) -> str:
    counts = report.counts()
    lines = [
        f"claims audit: n <= {report.n_max}, t samples {list(report.t_samples)}",
        f"{counts[VERIFIED]} verified, {counts[VERIFIED_FROM_M]} verified from m, {counts[MISMATCH]} mismatched",
    ]
    grouped = {}
    for c in report.claims:
        grouped.setdefault(c.section, []).append(c)
    order = [s for s in SECTIONS if s in grouped] + sorted(s for s in grouped if s not in SECTIONS)
    for section in order:
        lines.append("")
        lines.append(f"== {section}")
        for c in grouped[section]:
            tail = f" (m={c.minimal_m})" if c.status == VERIFIED_FROM_M else ""
            lines.append(f"  {c.status:<15} {c.id}{tail}")
            if c.status != VERIFIED:
                lines.append(f"      {c.anchor.split(': ', 1)[1]}")
                for x in c.counterexamples:
                    lines.append(f"      n={x.n}: computed {x.computed} | printed {x.predicted}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    if fmt == "text":
        return to_text(report)
    raise ValueError(f"unknown report format {fmt!r}")

