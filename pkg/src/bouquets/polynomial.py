"""Partial-dual genus polynomials of bouquets.

For a bouquet ``B`` and an edge subset ``A`` the Euler genus of the partial
dual splits as ``eps(B^A) = eps(A) + eps(A^c)`` where ``A`` and ``A^c`` are
the induced sub-bouquets, so no partial dual is ever constructed.
"""

from __future__ import annotations

import csv
import io
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .rotation import (
    RotationError,
    SignedRotation,
    _count_boundaries,
    is_orientable,
    subset_mask,
)

TABLE_MAX_EDGES = 20


class PolynomialError(ValueError):
    pass


class GenusPolynomial:
    """Sparse polynomial ``sum count * z**exponent`` with exact integer counts."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for g, c in items:
            g, c = int(g), int(c)
            if g < 0 or c < 0:
                raise PolynomialError(f"negative term {c}z^{g}")
            acc[g] = acc.get(g, 0) + c
        self._terms = {g: acc[g] for g in sorted(acc) if acc[g]}

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, g: int) -> int:
        return self._terms.get(g, 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, GenusPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def merge(self, other: GenusPolynomial) -> GenusPolynomial:
        """Add counts termwise (used to combine partial enumerations)."""
        return GenusPolynomial(list(self.items()) + list(other.items()))

    def mass(self) -> int:
        return sum(self._terms.values())

    def exponents(self) -> list[int]:
        return list(self._terms)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"GenusPolynomial({format_polynomial(self)!r})"

    def to_json(self) -> list[list]:
        return [[g, str(c)] for g, c in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> GenusPolynomial:
        return cls((int(g), int(c)) for g, c in data)


def format_polynomial(poly: GenusPolynomial) -> str:
    if not poly:
        return "0"
    parts = []
    for g, c in poly.items():
        if g == 0:
            parts.append(f"{c}")
        elif g == 1:
            parts.append(f"{c}z")
        else:
            parts.append(f"{c}z^{g}")
    return " + ".join(parts)


_TERM = re.compile(r"(\d+)?\s*(?:(z)(?:\s*\^\s*\{?\s*(\d+)\s*\}?)?)?")


def parse_polynomial(text: str) -> GenusPolynomial:
    """Inverse of :func:`format_polynomial`; a missing coefficient means 1."""
    if not text.strip():
        raise PolynomialError("empty polynomial")
    terms = []
    for piece in text.split("+"):
        piece = piece.strip()
        m = _TERM.fullmatch(piece)
        if not piece or m is None or (m.group(1) is None and m.group(2) is None):
            raise PolynomialError(f"bad term {piece!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        if m.group(2) is None:
            exp = 0
        else:
            exp = int(m.group(3)) if m.group(3) is not None else 1
        terms.append((exp, coeff))
    return GenusPolynomial(terms)


def is_interpolating(poly: GenusPolynomial) -> bool:
    """True iff the exponents with nonzero counts are consecutive integers."""
    return not gap_exponents(poly)


def gap_exponents(poly: GenusPolynomial) -> list[int]:
    if not poly:
        raise PolynomialError("empty polynomial has no support")
    exps = poly.exponents()
    present = set(exps)
    return [g for g in range(exps[0] + 1, exps[-1]) if g not in present]


def _subset_genera(word: tuple[int, ...], m: int) -> list[int]:
    """Euler genus of every induced sub-bouquet, indexed by subset mask."""
    out = [0] * (1 << m)
    for mask in range(1, 1 << m):
        sub = tuple(t for t in word if mask >> (abs(t) - 1) & 1)
        out[mask] = 1 + mask.bit_count() - _count_boundaries(sub)
    return out


def _require_standard_labels(rot: SignedRotation) -> None:
    if rot.edges != tuple(range(1, rot.m + 1)):
        raise RotationError("partial-dual enumeration needs labels 1..m")


def partial_dual_euler_genus(rot: SignedRotation, A: Iterable[int]) -> int:
    mask = subset_mask(rot, A)
    full = subset_mask(rot, rot.edges)
    genus = 0
    for side in (mask, full & ~mask):
        sub = tuple(t for t in rot.word if side >> (abs(t) - 1) & 1)
        genus += 1 + side.bit_count() - _count_boundaries(sub)
    return genus


def partial_dual_genera(rot: SignedRotation) -> list[int]:
    """``eps(B^A)`` for every subset ``A``, indexed by mask (edge 1 = bit 0)."""
    _require_standard_labels(rot)
    m = rot.m
    eps = _subset_genera(rot.word, m)
    full = (1 << m) - 1
    return [eps[mask] + eps[full ^ mask] for mask in range(1 << m)]


def partial_dual_euler_polynomial(rot: SignedRotation) -> GenusPolynomial:
    counts: dict[int, int] = {}
    for g in partial_dual_genera(rot):
        counts[g] = counts.get(g, 0) + 1
    return GenusPolynomial(counts)


def partial_dual_orientable_polynomial(rot: SignedRotation) -> GenusPolynomial:
    if not is_orientable(rot):
        raise PolynomialError("non-orientable input: orientable genus is undefined")
    poly = partial_dual_euler_polynomial(rot)
    # every partial dual of an orientable bouquet is orientable, eps = 2 * gamma
    assert all(g % 2 == 0 for g in poly.exponents())
    return GenusPolynomial((g // 2, c) for g, c in poly.items())


@dataclass(frozen=True)
class SubsetRow:
    A: tuple[int, ...]
    eps_A: int
    eps_Ac: int
    eps_BA: int


@dataclass(frozen=True)
class SubsetGenusTable:
    rotation: SignedRotation
    rows: tuple[SubsetRow, ...]

    def polynomial(self) -> GenusPolynomial:
        counts: dict[int, int] = {}
        for row in self.rows:
            counts[row.eps_BA] = counts.get(row.eps_BA, 0) + 1
        return GenusPolynomial(counts)


def subset_table(rot: SignedRotation, max_edges: int = TABLE_MAX_EDGES) -> SubsetGenusTable:
    """Per-subset genera, rows ordered by size then lexicographically."""
    if rot.m > max_edges:
        raise PolynomialError(
            f"table for {rot.m} edges exceeds size guard of {max_edges} edges"
        )
    _require_standard_labels(rot)
    m = rot.m
    eps = _subset_genera(rot.word, m)
    full = (1 << m) - 1
    masks = sorted(
        range(1 << m),
        key=lambda x: (x.bit_count(), [k + 1 for k in range(m) if x >> k & 1]),
    )
    rows = []
    for mask in masks:
        members = tuple(k + 1 for k in range(m) if mask >> k & 1)
        a, c = eps[mask], eps[full ^ mask]
        rows.append(SubsetRow(members, a, c, a + c))
    return SubsetGenusTable(rot, tuple(rows))


TABLE_HEADER = ("A", "ε(A)", "ε(A^c)", "ε(B^A)")
ASCII_HEADER = ("A", "eps(A)", "eps(A^c)", "eps(B^A)")


def format_subset(A: tuple[int, ...], ascii: bool = False) -> str:
    if not A:
        return "{}" if ascii else "∅"
    return "{" + ", ".join(map(str, A)) + "}"


def _cells(table: SubsetGenusTable, ascii: bool) -> list[tuple[str, ...]]:
    head = ASCII_HEADER if ascii else TABLE_HEADER
    body = [
        (format_subset(r.A, ascii), str(r.eps_A), str(r.eps_Ac), str(r.eps_BA))
        for r in table.rows
    ]
    return [head, *body]


def format_table(table: SubsetGenusTable, ascii: bool = False) -> str:
    cells = _cells(table, ascii)
    widths = [max(len(row[i]) for row in cells) for i in range(4)]
    lines = []
    for row in cells:
        first = row[0].ljust(widths[0])
        rest = [row[i].rjust(widths[i]) for i in range(1, 4)]
        lines.append("  ".join([first, *rest]).rstrip())
    return "\n".join(lines) + "\n"


def table_csv(table: SubsetGenusTable, ascii: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(_cells(table, ascii))
    return buf.getvalue()
