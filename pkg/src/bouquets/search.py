"""Exhaustive search for bouquets with non-interpolating polynomials.

Canonical words are generated in two stages.  Unsigned chord diagrams are
reduced modulo the dihedral group first.  Every signed orbit lies over exactly
one unsigned orbit, so the twist patterns of each surviving diagram can be
canonicalized and deduplicated locally, without a global seen-set.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .polynomial import (
    GenusPolynomial,
    gap_exponents,
    partial_dual_euler_polynomial,
    parse_polynomial,
)
from .rotation import (
    SignedRotation,
    canonical_form,
    format_rotation,
    is_prime,
    parse_rotation,
    token_key,
)

log = logging.getLogger(__name__)

DEFAULT_GUARD = 6
OVERRIDE_GUARD = 7


class SearchError(ValueError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    max_edges: int
    prime_only: bool = True
    nonorientable_only: bool = True
    worker_count: int = 1
    allow_large: bool = False

    def __post_init__(self):
        if self.max_edges < 1:
            raise SearchError("max_edges must be >= 1")
        if self.worker_count < 1:
            raise SearchError("worker_count must be >= 1")
        limit = OVERRIDE_GUARD if self.allow_large else DEFAULT_GUARD
        if self.max_edges > limit:
            hint = "" if self.allow_large else f" (override allows up to {OVERRIDE_GUARD})"
            raise SearchError(f"max_edges={self.max_edges} exceeds guard of {limit}{hint}")


@dataclass(frozen=True)
class CounterexampleRecord:
    rotation: SignedRotation
    polynomial: GenusPolynomial
    gaps: tuple[int, ...]
    edge_count: int

    @classmethod
    def from_rotation(cls, rot: SignedRotation) -> CounterexampleRecord:
        rot = canonical_form(rot)
        poly = partial_dual_euler_polynomial(rot)
        return cls(rot, poly, tuple(gap_exponents(poly)), rot.m)

    def to_json(self) -> str:
        return json.dumps({
            "edges": self.edge_count,
            "rotation": format_rotation(self.rotation),
            "polynomial": self.polynomial.to_json(),
            "gaps": list(self.gaps),
        })

    @classmethod
    def from_json(cls, line: str) -> CounterexampleRecord:
        data = json.loads(line)
        return cls(
            parse_rotation(data["rotation"]),
            GenusPolynomial.from_json(data["polynomial"]),
            tuple(data["gaps"]),
            int(data["edges"]),
        )


@dataclass
class SearchReport:
    records: list[CounterexampleRecord]
    orbit_counts: dict[int, int] = field(default_factory=dict)

    def counterexample_counts(self) -> dict[int, int]:
        out = {m: 0 for m in self.orbit_counts}
        for r in self.records:
            out[r.edge_count] = out.get(r.edge_count, 0) + 1
        return out

    def summary(self) -> str:
        cx = self.counterexample_counts()
        parts = [
            f"edges={m}: orbits={self.orbit_counts[m]} counterexamples={cx[m]}"
            for m in sorted(self.orbit_counts)
        ]
        return "; ".join(parts)


# -- chord diagrams ---------------------------------------------------------

def chord_diagrams(m: int) -> Iterator[tuple[int, ...]]:
    """All label words with ``m`` chords, labels in first-occurrence order."""
    n = 2 * m
    word = [0] * n

    def place(label: int) -> Iterator[tuple[int, ...]]:
        if label > m:
            yield tuple(word)
            return
        i = word.index(0)
        word[i] = label
        for j in range(i + 1, n):
            if word[j] == 0:
                word[j] = label
                yield from place(label + 1)
                word[j] = 0
        word[i] = 0

    yield from place(1)


def _relabel_map(word: tuple[int, ...]) -> dict[int, int]:
    out: dict[int, int] = {}
    for k in word:
        if k not in out:
            out[k] = len(out) + 1
    return out


def _dihedral(word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    rev = word[::-1]
    for r in range(len(word)):
        yield word[r:] + word[:r]
        yield rev[r:] + rev[:r]


def diagram_images(diagram: tuple[int, ...]) -> list[tuple[tuple[int, ...], dict[int, int]]] | None:
    """Relabeled dihedral images of ``diagram`` with their edge permutations.

    Returns ``None`` when ``diagram`` is not the minimal relabeled image in
    its dihedral orbit, so each unsigned orbit is handled once.
    """
    images = []
    for image in _dihedral(diagram):
        relabel = _relabel_map(image)
        normalized = tuple(relabel[k] for k in image)
        if normalized < diagram:
            return None
        images.append((normalized, relabel))
    return images


def _encoders(images) -> list[tuple[list[int], dict[int, int]]]:
    # A signed word is encoded as 2*label + (1 if '-'), which orders tuples
    # exactly like token_key.  For each image keep the unsigned encoding and
    # where the '-' of each original edge lands.
    out = []
    for normalized, relabel in images:
        second = {}
        seen = set()
        for i, k in enumerate(normalized):
            if k in seen:
                second[k] = i
            seen.add(k)
        base = [2 * k for k in normalized]
        out.append((base, {k: second[v] for k, v in relabel.items()}))
    return out


def _decode(code: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-(c >> 1) if c & 1 else c >> 1 for c in code)


def _canonical_twists(diagram: tuple[int, ...], images,
                      cfg: SearchConfig) -> Iterator[tuple[int, ...]]:
    """Canonical words of every signed orbit over the unsigned orbit of ``diagram``."""
    m = len(diagram) // 2
    encoders = _encoders(images)
    start = 1 if cfg.nonorientable_only else 0
    found = set()
    for twist in range(start, 1 << m):
        twisted = [k for k in range(1, m + 1) if twist >> (k - 1) & 1]
        best = None
        for base, minus_at in encoders:
            code = base[:]
            for k in twisted:
                code[minus_at[k]] += 1
            code = tuple(code)
            if best is None or code < best:
                best = code
        found.add(best)
    for code in sorted(found):
        yield _decode(code)


def _diagram_reps(m: int, cfg: SearchConfig) -> list[tuple[tuple[int, ...], list]]:
    reps = []
    for d in chord_diagrams(m):
        images = diagram_images(d)
        if images is None:
            continue
        if cfg.prime_only and not is_prime(SignedRotation._trusted(d)):
            continue
        reps.append((d, images))
    return reps


def _check_m(m: int, cfg: SearchConfig) -> None:
    if not 1 <= m <= cfg.max_edges:
        raise SearchError(f"edge count {m} outside 1..{cfg.max_edges}")


def enumerate_canonical(m: int, cfg: SearchConfig) -> Iterator[SignedRotation]:
    """One canonical representative per orbit, in ascending canonical order."""
    _check_m(m, cfg)
    words = [
        w for d, images in _diagram_reps(m, cfg) for w in _canonical_twists(d, images, cfg)
    ]
    words.sort(key=token_key)
    for w in words:
        yield SignedRotation._trusted(w)


def _scan_chunk(args) -> tuple[int, list[tuple[tuple[int, ...], list, tuple]]]:
    chunk, cfg = args
    count = 0
    found = []
    for d, images in chunk:
        for w in _canonical_twists(d, images, cfg):
            count += 1
            poly = partial_dual_euler_polynomial(SignedRotation._trusted(w))
            gaps = gap_exponents(poly)
            if gaps:
                found.append((w, poly.to_json(), tuple(gaps)))
    return count, found


def _chunks(items: list, parts: int) -> list[list]:
    return [items[i::parts] for i in range(parts)]


def run_search(cfg: SearchConfig) -> SearchReport:
    """Scan every edge count up to ``cfg.max_edges``; merge is order-insensitive."""
    merged: dict[tuple[int, ...], CounterexampleRecord] = {}
    orbit_counts: dict[int, int] = {}
    pool = ProcessPoolExecutor(cfg.worker_count) if cfg.worker_count > 1 else None
    try:
        for m in range(1, cfg.max_edges + 1):
            reps = _diagram_reps(m, cfg)
            # 4 chunks per worker keeps the pool busy on uneven chunks
            jobs = [(c, cfg) for c in _chunks(reps, 4 * cfg.worker_count) if c]
            results = pool.map(_scan_chunk, jobs) if pool else map(_scan_chunk, jobs)
            total = 0
            for count, found in results:
                total += count
                for w, poly, gaps in found:
                    merged[w] = CounterexampleRecord(
                        SignedRotation._trusted(w), GenusPolynomial.from_json(poly), gaps, m
                    )
            orbit_counts[m] = total
            log.info("edges=%d orbits=%d", m, total)
    finally:
        if pool:
            pool.shutdown()
    records = sorted(merged.values(), key=lambda r: (r.edge_count, token_key(r.rotation.word)))
    return SearchReport(records, orbit_counts)


def find_counterexamples(cfg: SearchConfig) -> list[CounterexampleRecord]:
    return run_search(cfg).records


# Counterexamples reported in the literature, verbatim.
KNOWN_COUNTEREXAMPLES = [
    ("(-1, 2, 3, 4, 5, 1, 4, 5, 2, 3)", "8z^2 + 16z^4 + 8z^5"),
    ("(-1, -2, 3, 1, 4, 2, 5, 4, 3, 5)", "2z + 10z^3 + 8z^4 + 12z^5"),
    ("(-1, 2, 3, 2, 4, 5, 6, 1, 5, 6, 3, 4)", "8z^2 + 32z^4 + 16z^5 + 8z^6"),
    ("(-1, 2, 1, 3, 4, 5, 6, 2, 5, 6, 3, 4)", "16z^3 + 40z^5 + 8z^6"),
    ("(-1, -2, 3, 1, 4, 2, 5, 4, 3, 6, 5, 6)", "2z + 14z^3 + 12z^4 + 28z^5 + 8z^6"),
    ("(-1, -2, 3, 4, 5, 6, 2, 1, 5, 6, 3, 4)", "8z^2 + 24z^4 + 32z^6"),
    ("(-1, 2, 3, 2, 4, 3, 5, 6, 7, 1, 6, 7, 4, 5)", "8z^2 + 48z^4 + 16z^5 + 40z^6 + 16z^7"),
    ("(-1, 2, 3, 4, 5, 6, 7, 1, 6, 7, 4, 5, 2, 3)", "16z^2 + 48z^4 + 48z^6 + 16z^7"),
    ("(-1, 2, 1, 3, 4, 3, 5, 6, 7, 2, 6, 7, 4, 5)", "16z^3 + 80z^5 + 16z^6 + 16z^7"),
    ("(-1, 2, 3, 4, 5, 6, 7, 1, 4, 5, 6, 7, 2, 3)", "32z^4 + 64z^6 + 32z^7"),
]


@dataclass(frozen=True)
class RowCheck:
    rotation: str
    expected: GenusPolynomial
    found: GenusPolynomial | None

    @property
    def passed(self) -> bool:
        return self.found == self.expected

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        got = "missing" if self.found is None else str(self.found)
        return f"{status} {self.rotation}: expected {self.expected}, found {got}"


def verify_known_counterexamples(records: list[CounterexampleRecord],
                                 rows=KNOWN_COUNTEREXAMPLES) -> list[RowCheck]:
    """Look up each listed rotation's orbit in ``records``; never raises on a miss."""
    by_word = {r.rotation.word: r for r in records}
    out = []
    for text, poly in rows:
        rec = by_word.get(canonical_form(parse_rotation(text)).word)
        out.append(RowCheck(text, parse_polynomial(poly), rec.polynomial if rec else None))
    return out
