"""Signed rotations of one-vertex ribbon graphs (bouquets).

A bouquet with ``m`` edges is stored as a cyclic word of ``2m`` nonzero
integers.  The absolute value is the edge label and a negative entry marks
the ``-`` half of a twisted edge.  An untwisted edge has both half-edges
positive, a twisted edge has exactly one negative half-edge.

The number of boundary components is obtained by tracing strands around the
ribbon surface; everything else (Euler genus, partial-dual genera) is built
on that count.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class RotationError(ValueError):
    """Raised for malformed or invalid signed rotations."""


class RotationSyntaxError(RotationError):
    pass


class HalfEdge(NamedTuple):
    label: int
    sign: int  # +1 or -1

    def __str__(self) -> str:
        return f"-{self.label}" if self.sign < 0 else str(self.label)


def _check_word(word: tuple[int, ...], labels: frozenset[int] | None) -> None:
    counts = Counter(abs(t) for t in word)
    if 0 in counts:
        raise RotationError("label 0 is not allowed")
    for label, c in sorted(counts.items()):
        if c != 2:
            raise RotationError(f"label {label} appears {c} times (expected 2)")
    negatives = Counter(-t for t in word if t < 0)
    for label, c in sorted(negatives.items()):
        if c == 2:
            raise RotationError(f"label {label} has two '-' half-edges")
    if labels is not None and set(counts) != labels:
        missing = sorted(labels - set(counts))
        extra = sorted(set(counts) - labels)
        bad = missing[0] if missing else extra[0]
        raise RotationError(
            f"label set must be exactly 1..{len(labels)}; offending label {bad}"
        )


@dataclass(frozen=True)
class SignedRotation:
    """Cyclic word of signed half-edge labels.

    The default constructor requires the labels to be exactly ``1..m``.
    Sub-rotations produced by :func:`induced_sub_rotation` keep their
    original labels; they are built with ``strict_labels=False``.
    """

    word: tuple[int, ...]

    def __init__(self, word: Iterable[int] = (), *, strict_labels: bool = True):
        word = tuple(int(t) for t in word)
        m = len(word) // 2
        _check_word(word, frozenset(range(1, m + 1)) if strict_labels else None)
        object.__setattr__(self, "word", word)

    @classmethod
    def _trusted(cls, word: tuple[int, ...]) -> SignedRotation:
        # internal fast path: caller guarantees validity
        obj = object.__new__(cls)
        object.__setattr__(obj, "word", word)
        return obj

    @property
    def m(self) -> int:
        return len(self.word) // 2

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted({abs(t) for t in self.word}))

    def half_edges(self) -> Iterator[HalfEdge]:
        for t in self.word:
            yield HalfEdge(abs(t), -1 if t < 0 else 1)

    def twisted_edges(self) -> frozenset[int]:
        return frozenset(-t for t in self.word if t < 0)

    def positions(self) -> dict[int, tuple[int, int]]:
        pos: dict[int, list[int]] = {}
        for i, t in enumerate(self.word):
            pos.setdefault(abs(t), []).append(i)
        return {k: (v[0], v[1]) for k, v in pos.items()}

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return format_rotation(self)

    def __repr__(self) -> str:
        return f"SignedRotation({format_rotation(self)!r})"


_TOKEN = re.compile(r"\s*(-?\d+)\s*")


def parse_rotation(text: str) -> SignedRotation:
    """Parse ``"(-1, -2, 3, 4, 2, 1, 3, 4)"``-style notation.

    Surrounding parentheses are optional.  Labels are validated, never
    renumbered.
    """
    s = text.strip()
    if s.startswith("(") != s.endswith(")"):
        raise RotationSyntaxError(f"unbalanced parentheses in {text!r}")
    if s.startswith("("):
        s = s[1:-1]
    if not s.strip():
        return SignedRotation(())
    tokens = []
    for piece in s.split(","):
        match = _TOKEN.fullmatch(piece)
        if match is None:
            raise RotationSyntaxError(f"bad token {piece.strip()!r}")
        value = int(match.group(1))
        if value == 0:
            raise RotationError("label 0 is not allowed")
        tokens.append(value)
    return SignedRotation(tokens)


def format_rotation(rot: SignedRotation) -> str:
    return "(" + ", ".join(str(t) for t in rot.word) + ")"


def subset_mask(rot: SignedRotation, A: Iterable[int]) -> int:
    """Bitmask of an edge subset, edge ``k`` at bit ``k - 1``."""
    edges = set(rot.edges)
    mask = 0
    for k in A:
        if k not in edges:
            raise RotationError(f"edge {k} is not an edge of {format_rotation(rot)}")
        mask |= 1 << (k - 1)
    return mask


def induced_sub_rotation(rot: SignedRotation, A: Iterable[int]) -> SignedRotation:
    """Restrict ``rot`` to the edges in ``A``, keeping cyclic order and signs."""
    mask = subset_mask(rot, A)
    return SignedRotation._trusted(
        tuple(t for t in rot.word if mask >> (abs(t) - 1) & 1)
    )


def _count_boundaries(word: tuple[int, ...]) -> int:
    n = len(word)
    if n == 0:
        return 1
    # Strand endpoints: 2*p is the left corner of slot p, 2*p + 1 the right.
    # Two perfect matchings on the 2n corners: vertex-boundary arcs join the
    # right corner of p to the left corner of p + 1; each ribbon joins its two
    # slots, right-to-left when untwisted and right-to-right when twisted.
    arc = [0] * (2 * n)
    for p in range(n):
        q = (p + 1) % n
        arc[2 * p + 1] = 2 * q
        arc[2 * q] = 2 * p + 1
    rib = [0] * (2 * n)
    first: dict[int, int] = {}
    for p, t in enumerate(word):
        k = abs(t)
        if k not in first:
            first[k] = p
            continue
        a = first[k]
        twisted = (word[a] < 0) != (t < 0)
        if twisted:
            rib[2 * a], rib[2 * p] = 2 * p, 2 * a
            rib[2 * a + 1], rib[2 * p + 1] = 2 * p + 1, 2 * a + 1
        else:
            rib[2 * a + 1], rib[2 * p] = 2 * p, 2 * a + 1
            rib[2 * a], rib[2 * p + 1] = 2 * p + 1, 2 * a
    seen = bytearray(2 * n)
    cycles = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        cycles += 1
        x = start
        while not seen[x]:
            seen[x] = 1
            y = arc[x]
            seen[y] = 1
            x = rib[y]
    return cycles


def boundary_components(rot: SignedRotation) -> int:
    """Number of boundary components of the bouquet's ribbon surface."""
    return _count_boundaries(rot.word)


def euler_genus(rot: SignedRotation) -> int:
    # one vertex, m edges, f faces: 2 - eps = 1 - m + f
    return 1 + rot.m - _count_boundaries(rot.word)


def is_orientable(rot: SignedRotation) -> bool:
    return all(t > 0 for t in rot.word)


def _alternate(pa: tuple[int, int], pb: tuple[int, int]) -> bool:
    a0, a1 = pa
    return (a0 < pb[0] < a1) != (a0 < pb[1] < a1)


def interlaced(rot: SignedRotation, e1: int, e2: int) -> bool:
    """True iff the half-edges of ``e1`` and ``e2`` alternate cyclically."""
    pos = rot.positions()
    for e in (e1, e2):
        if e not in pos:
            raise RotationError(f"edge {e} is not an edge of {format_rotation(rot)}")
    if e1 == e2:
        raise RotationError("interlacement needs two distinct edges")
    return _alternate(pos[e1], pos[e2])


def interlacement_graph(rot: SignedRotation) -> dict[int, set[int]]:
    pos = rot.positions()
    graph: dict[int, set[int]] = {k: set() for k in pos}
    keys = sorted(pos)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            if _alternate(pos[a], pos[b]):
                graph[a].add(b)
                graph[b].add(a)
    return graph


def is_prime(rot: SignedRotation) -> bool:
    """True iff no cut into two nonempty arcs keeps every edge on one side.

    Rotations with at most one edge are prime.
    """
    word = rot.word
    n = len(word)
    labels = [abs(t) for t in word]
    # An arc word[i:j] (non-wrapping is enough: the complement of a wrapping
    # arc is a non-wrapping one) is closed iff every label in it occurs twice.
    for i in range(n):
        open_labels: set[int] = set()
        for j in range(i, n - 1 if i == 0 else n):
            k = labels[j]
            if k in open_labels:
                open_labels.remove(k)
            else:
                open_labels.add(k)
            if not open_labels:
                return False
    return True


def _dihedral_images(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(word)
    rev = word[::-1]
    for r in range(n):
        yield word[r:] + word[:r]
        yield rev[r:] + rev[:r]


def _normalize(word: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel by first occurrence; a twisted edge carries '-' on its second half."""
    relabel: dict[int, int] = {}
    twisted = {-t for t in word if t < 0}
    out = []
    for t in word:
        k = abs(t)
        if k in relabel:
            new = relabel[k]
            out.append(-new if k in twisted else new)
        else:
            new = relabel[k] = len(relabel) + 1
            out.append(new)
    return tuple(out)


def token_key(word: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Sort key for words: position-wise (label, sign) with + before -."""
    return tuple((abs(t), t < 0) for t in word)


def canonical_word(word: tuple[int, ...]) -> tuple[int, ...]:
    if not word:
        return word
    return min((_normalize(w) for w in _dihedral_images(word)), key=token_key)


def canonical_form(rot: SignedRotation) -> SignedRotation:
    """Minimal representative under rotation, reversal, sign-side swap, relabeling."""
    return SignedRotation._trusted(canonical_word(rot.word))
