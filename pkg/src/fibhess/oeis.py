"""Offline sequence identification against an OEIS "stripped" dump.

Data lines look like ``A000045 ,0,1,1,2,3,5,8,`` and comment lines start
with ``#``.  Matching is exact, at any offset, and optionally up to sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType

_LINE = re.compile(r"(A\d{6}) ,(-?\d+(?:,-?\d+)*),")
KEY_LENGTH = 3


@dataclass(frozen=True)
class OeisEntry:
    id: str
    terms: tuple


@dataclass(frozen=True)
class Match:
    id: str
    offset: int
    negated: bool


class OeisIndex:
    def __init__(self, entries, malformed: int = 0):
        self.entries = tuple(entries)
        self.malformed = malformed
        windows: dict[tuple, list] = {}
        for k, entry in enumerate(self.entries):
            terms = entry.terms
            for off in range(len(terms) - KEY_LENGTH + 1):
                windows.setdefault(terms[off : off + KEY_LENGTH], []).append((k, off))
        self._windows = MappingProxyType({w: tuple(v) for w, v in windows.items()})

    def __len__(self):
        return len(self.entries)

    def ids(self) -> set:
        return {e.id for e in self.entries}

    def _first_offset(self, observed: tuple):
        found: dict[int, int] = {}
        size = len(observed)
        if size >= KEY_LENGTH:
            candidates = self._windows.get(observed[:KEY_LENGTH], ())
        else:
            candidates = ((k, off) for k, e in enumerate(self.entries) for off in range(len(e.terms)))
        for k, off in candidates:
            terms = self.entries[k].terms
            if terms[off : off + size] == observed and off < found.get(k, off + 1):
                found[k] = off
        return found

    def lookup(self, observed, min_match: int = 4) -> list:
        """Entries containing ``observed`` (or its negation) as a consecutive run."""
        observed = tuple(int(x) for x in observed)
        if min_match < 1:
            raise ValueError("min_match must be positive")
        if len(observed) < min_match:
            raise ValueError(f"need at least {min_match} terms, got {len(observed)}")
        out = []
        for negated, seq in ((False, observed), (True, tuple(-x for x in observed))):
            for k, off in self._first_offset(seq).items():
                out.append(Match(self.entries[k].id, off, negated))
        return sorted(out, key=lambda m: (m.id, m.negated, m.offset))


def parse_line(line: str):
    """An OeisEntry, ``None`` for comments and blank lines; ValueError otherwise."""
    text = line.rstrip("\r\n")
    if not text.strip() or text.startswith("#"):
        return None
    m = _LINE.fullmatch(text.rstrip())
    if m is None:
        raise ValueError(f"malformed stripped line: {text[:40]!r}")
    return OeisEntry(m.group(1), tuple(int(x) for x in m.group(2).split(",")))


def ingest_stripped(source) -> OeisIndex:
    """Build an index from an open text stream; malformed lines are counted and skipped."""
    entries, malformed = [], 0
    for line in source:
        try:
            entry = parse_line(line)
        except ValueError:
            malformed += 1
            continue
        if entry is not None:
            entries.append(entry)
    return OeisIndex(entries, malformed)


def load(path) -> OeisIndex:
    with open(path, encoding="utf-8") as fh:
        return ingest_stripped(fh)
