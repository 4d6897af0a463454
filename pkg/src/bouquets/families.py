"""The two infinite families of non-interpolating bouquets.

``B_{2n+1}``: edge 1 is twisted and interlaced with every other edge, and the
pairs ``(2i, 2i+1)`` are interlaced with each other.

``C_{2n+2}``: edges 1 and 2 are twisted, interlaced with every other edge but
not with each other, and the pairs ``(2i+1, 2i+2)`` are interlaced.

Within a subset ``A`` a paired edge present without its partner is a *single*
ribbon, a pair fully inside ``A`` is a *double* ribbon.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .polynomial import GenusPolynomial
from .rotation import RotationError, SignedRotation, interlaced


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyKind:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("B", "C"):
            raise FamilyError(f"unknown family {self.kind!r}")
        if self.n < 1:
            raise FamilyError(f"family parameter must be >= 1, got {self.n}")

    @property
    def edge_count(self) -> int:
        return 2 * self.n + (1 if self.kind == "B" else 2)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        off = 0 if self.kind == "B" else 1
        return [(2 * i + off, 2 * i + 1 + off) for i in range(1, self.n + 1)]

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.edge_count}"


@dataclass(frozen=True)
class RibbonClassification:
    singles: frozenset[int]
    doubles: frozenset[tuple[int, int]]

    @property
    def s(self) -> int:
        return len(self.singles)


def family_rotation(fam: FamilyKind, check: bool = False) -> SignedRotation:
    n = fam.n
    tail = [k for i in range(n, 0, -1) for k in fam.pairs[i - 1]]
    if fam.kind == "B":
        word = [1, *range(2, 2 * n + 2), -1, *tail]
    else:
        word = [1, 2, *range(3, 2 * n + 3), -2, -1, *tail]
    rot = SignedRotation(word)
    if check:
        _check_structure(fam, rot)
    return rot


def _check_structure(fam: FamilyKind, rot: SignedRotation) -> None:
    hubs = (1,) if fam.kind == "B" else (1, 2)
    for h in hubs:
        for e in rot.edges:
            if e not in hubs and not interlaced(rot, h, e):
                raise AssertionError(f"{fam.name}: edge {h} not interlaced with {e}")
    if fam.kind == "C" and interlaced(rot, 1, 2):
        raise AssertionError(f"{fam.name}: edges 1 and 2 must not be interlaced")
    for a, b in fam.pairs:
        if not interlaced(rot, a, b):
            raise AssertionError(f"{fam.name}: pair ({a}, {b}) not interlaced")


def _as_set(fam: FamilyKind, A: Iterable[int]) -> frozenset[int]:
    A = frozenset(A)
    bad = [k for k in A if not 1 <= k <= fam.edge_count]
    if bad:
        raise RotationError(f"edge {min(bad)} is not an edge of {fam.name}")
    return A


def classify_ribbons(fam: FamilyKind, A: Iterable[int]) -> RibbonClassification:
    A = _as_set(fam, A)
    singles, doubles = set(), set()
    for a, b in fam.pairs:
        if a in A and b in A:
            doubles.add((a, b))
        elif a in A:
            singles.add(a)
        elif b in A:
            singles.add(b)
    return RibbonClassification(frozenset(singles), frozenset(doubles))


def lemma_epsilon_B(n: int, A: Iterable[int]) -> int:
    fam = FamilyKind("B", n)
    s = classify_ribbons(fam, A).s
    return 2 * n + 1 if s == 0 else 2 * n - 2 * s + 2


def lemma_epsilon_C(n: int, A: Iterable[int]) -> int:
    fam = FamilyKind("C", n)
    A = _as_set(fam, A)
    s = classify_ribbons(fam, A).s
    if (1 in A) != (2 in A):
        return 2 * n + 2 if s == 0 else 2 * n - 2 * s + 4
    return 2 * n - 2 * s + 2


def closed_form_B(n: int) -> GenusPolynomial:
    FamilyKind("B", n)
    w = 2 ** (n + 1)
    terms = [(2 * n + 1, w)]
    terms += [(2 * n - 2 * s + 2, w * comb(n, s)) for s in range(1, n + 1)]
    return GenusPolynomial(terms)


def closed_form_C(n: int) -> GenusPolynomial:
    FamilyKind("C", n)
    w = 2 ** (n + 1)
    terms = [(2 * n + 2, w * (n + 2)), (2, w)]
    terms += [
        (2 * n - 2 * s + 4, w * (comb(n, s) + comb(n, s - 1)))
        for s in range(2, n + 1)
    ]
    return GenusPolynomial(terms)


def closed_form(fam: FamilyKind) -> GenusPolynomial:
    return closed_form_B(fam.n) if fam.kind == "B" else closed_form_C(fam.n)


def lemma_epsilon(fam: FamilyKind, A: Iterable[int]) -> int:
    if fam.kind == "B":
        return lemma_epsilon_B(fam.n, A)
    return lemma_epsilon_C(fam.n, A)
