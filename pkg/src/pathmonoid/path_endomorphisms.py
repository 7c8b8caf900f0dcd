"""Endomorphism monoids of the directed path on vertices 1..n.

The only edges are ``(i, i + 1)``. Five classes of maps are distinguished:
endomorphisms, weak, strong, strong weak endomorphisms and automorphisms.
For the directed path, the first, third and fifth collapse to the identity
and strong weak endomorphisms are the constants plus the identity. The
interesting monoid is the one of weak endomorphisms (``wEnd``), which is
what most of this module is about.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .transformations import (
    BRUTE_FORCE_LIMIT,
    PathTransformation,
    all_transformations,
    image_set,
    is_interval,
    is_order_preserving,
    rank_of,
)

__all__ = [
    "ClassificationReport",
    "NotAWeakEndomorphism",
    "NotRegular",
    "WEndEncoding",
    "classify",
    "compositions",
    "count_idempotents",
    "count_wend",
    "count_wend_closed_form",
    "decode",
    "encode",
    "enumerate_wend",
    "is_automorphism",
    "is_endomorphism",
    "is_idempotent",
    "is_regular",
    "is_strong_endomorphism",
    "is_strong_weak_endomorphism",
    "is_weak_endomorphism",
    "is_weak_endomorphism_by_characterization",
    "pseudo_inverse",
    "regular_normal_form",
    "StructureCensus",
    "structure_census",
]


class NotAWeakEndomorphism(ValueError):
    pass


class NotRegular(ValueError):
    pass


def _is_edge(u: int, v: int) -> bool:
    return v == u + 1


# Membership predicates. The four "literal" ones scan every ordered pair
# (u, v); they double as the brute-force reference for the fast checks.


def is_weak_endomorphism(f: PathTransformation) -> bool:
    im = f.images
    return all(b == a or b == a + 1 for a, b in zip(im, im[1:]))


def is_weak_endomorphism_by_characterization(f: PathTransformation) -> bool:
    """Order-preserving with an interval image."""
    return is_order_preserving(f) and is_interval(f.images)


def is_endomorphism(f: PathTransformation) -> bool:
    im = f.images
    n = f.n
    return all(
        _is_edge(im[u - 1], im[v - 1])
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if _is_edge(u, v)
    )


def is_strong_endomorphism(f: PathTransformation) -> bool:
    im = f.images
    n = f.n
    return all(
        _is_edge(u, v) == _is_edge(im[u - 1], im[v - 1])
        for u in range(1, n + 1)
        for v in range(1, n + 1)
    )


def is_strong_weak_endomorphism(f: PathTransformation) -> bool:
    im = f.images
    n = f.n
    return all(
        (_is_edge(u, v) and im[u - 1] != im[v - 1]) == _is_edge(im[u - 1], im[v - 1])
        for u in range(1, n + 1)
        for v in range(1, n + 1)
    )


def is_automorphism(f: PathTransformation) -> bool:
    return rank_of(f) == f.n and is_strong_endomorphism(f)


def _is_weak_endomorphism_by_pairs(f: PathTransformation) -> bool:
    im = f.images
    n = f.n
    return all(
        _is_edge(im[u - 1], im[v - 1])
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if _is_edge(u, v) and im[u - 1] != im[v - 1]
    )


def _require_wend(f: PathTransformation) -> None:
    if not is_weak_endomorphism(f):
        raise NotAWeakEndomorphism(f"{f} is not a weak endomorphism")


# Encoding of weak endomorphisms: an offset j and the fiber sizes of
# j+1, ..., j+k, which form a composition of n into k parts.


@dataclass(frozen=True)
class WEndEncoding:
    n: int
    offset_j: int
    composition: tuple[int, ...]

    def __post_init__(self):
        comp = tuple(self.composition)
        object.__setattr__(self, "composition", comp)
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if not comp or any(part < 1 for part in comp):
            raise ValueError(f"composition must have positive parts: {comp}")
        if sum(comp) != self.n:
            raise ValueError(f"composition {comp} does not sum to {self.n}")
        if not 0 <= self.offset_j <= self.n - len(comp):
            raise ValueError(
                f"offset {self.offset_j} out of range 0..{self.n - len(comp)}"
            )

    @property
    def k(self) -> int:
        return len(self.composition)


def encode(f: PathTransformation) -> WEndEncoding:
    _require_wend(f)
    j = min(f.images) - 1
    sizes = [0] * rank_of(f)
    for y in f.images:
        sizes[y - j - 1] += 1
    return WEndEncoding(f.n, j, tuple(sizes))


def decode(e: WEndEncoding) -> PathTransformation:
    images: list[int] = []
    for t, size in enumerate(e.composition, start=1):
        images.extend([e.offset_j + t] * size)
    return PathTransformation(tuple(images))


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into ``k`` positive parts, in colex order.

    Colex: ordered lexicographically on the reversed tuples, so the last
    part varies slowest.
    """
    if k < 1 or n < k:
        return
    if k == 1:
        yield (n,)
        return
    for last in range(1, n - k + 2):
        for head in compositions(n - last, k - 1):
            yield head + (last,)


def enumerate_wend(n: int, k: int | None = None, j: int | None = None) -> Iterator[PathTransformation]:
    """Every weak endomorphism exactly once, ordered by (rank, offset, colex).

    Passing ``k`` and/or ``j`` restricts the stream to that slice, so
    disjoint slices can be consumed independently.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    ranks = range(1, n + 1) if k is None else [k]
    for kk in ranks:
        offsets = range(n - kk + 1) if j is None else [j]
        for jj in offsets:
            if not 0 <= jj <= n - kk:
                continue
            for comp in compositions(n, kk):
                yield decode(WEndEncoding(n, jj, comp))


def count_wend(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return sum((n - k + 1) * comb(n - 1, k - 1) for k in range(1, n + 1))


def count_wend_closed_form(n: int) -> int:
    """``(n + 1) * 2**(n - 2)``, valid for n >= 2; returns 1 for n = 1."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n == 1:
        return 1
    return (n + 1) << (n - 2)


def count_idempotents(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return n * (n + 1) // 2


def is_idempotent(f: PathTransformation) -> bool:
    """True if ``f`` fixes every point of its image."""
    return all(f.images[y - 1] == y for y in set(f.images))


def is_regular(f: PathTransformation) -> bool:
    """Regularity inside wEnd: only the extreme image points may have big fibers."""
    _require_wend(f)
    lo, hi = min(f.images), max(f.images)
    sizes: dict[int, int] = {}
    for y in f.images:
        sizes[y] = sizes.get(y, 0) + 1
    return all(y in (lo, hi) for y, size in sizes.items() if size > 1)


def regular_normal_form(f: PathTransformation) -> tuple[int, int, int]:
    """Parameters ``(i, j, k)`` of a regular element.

    Such an element sends 1..i to j, then i+1..i+k to j+1..j+k one to one,
    and everything after i+k to j+k.
    """
    if not is_regular(f):
        raise NotRegular(f"{f} is not regular in wEnd")
    j = min(f.images)
    k = rank_of(f) - 1
    i = f.images.count(j)
    return i, j, k


def _normal_form_map(n: int, i: int, j: int, k: int) -> PathTransformation:
    images = [j] * i + [j + t for t in range(1, k + 1)]
    images += [j + k] * (n - len(images))
    return PathTransformation(tuple(images))


def pseudo_inverse(f: PathTransformation) -> PathTransformation:
    """Some ``b`` in wEnd with ``f * b * f == f``; the normal form with i and j swapped."""
    i, j, k = regular_normal_form(f)
    if _normal_form_map(f.n, i, j, k) != f:
        raise AssertionError(f"normal form ({i}, {j}, {k}) does not reproduce {f}")
    return _normal_form_map(f.n, j, i, k)


@dataclass(frozen=True)
class ClassificationReport:
    """Flags for one map.

    ``is_idempotent`` and ``is_regular`` are taken inside wEnd, so both are
    False for maps outside it.
    """

    n: int
    images: tuple[int, ...]
    is_end: bool
    is_wend: bool
    is_send: bool
    is_swend: bool
    is_aut: bool
    is_idempotent: bool
    is_regular: bool
    rank: int
    image_min: int
    image_max: int
    image_is_interval: bool

    def as_dict(self) -> dict:
        return {
            "image": "[" + ",".join(map(str, self.images)) + "]",
            "n": self.n,
            "end": self.is_end,
            "wend": self.is_wend,
            "send": self.is_send,
            "swend": self.is_swend,
            "aut": self.is_aut,
            "idempotent": self.is_idempotent,
            "regular": self.is_regular,
            "rank": self.rank,
            "image_min": self.image_min,
            "image_max": self.image_max,
            "image_interval": self.image_is_interval,
        }


def classify(f: PathTransformation) -> ClassificationReport:
    wend = is_weak_endomorphism(f)
    im = image_set(f)
    return ClassificationReport(
        n=f.n,
        images=f.images,
        is_end=is_endomorphism(f),
        is_wend=wend,
        is_send=is_strong_endomorphism(f),
        is_swend=is_strong_weak_endomorphism(f),
        is_aut=is_automorphism(f),
        is_idempotent=wend and is_idempotent(f),
        is_regular=wend and is_regular(f),
        rank=len(im),
        image_min=im[0],
        image_max=im[-1],
        image_is_interval=is_interval(im),
    )


@dataclass
class StructureCensus:
    n: int
    total: int
    end: set
    wend: set
    wend_by_characterization: set
    send: set
    swend: set
    aut: set


def structure_census(
    n: int, limit: int = BRUTE_FORCE_LIMIT, allow_large: bool = False
) -> StructureCensus:
    """Sort every map on {1..n} into the five classes from the raw definitions."""
    census = StructureCensus(n, 0, set(), set(), set(), set(), set(), set())
    for f in all_transformations(n, limit=limit, allow_large=allow_large):
        census.total += 1
        if _is_weak_endomorphism_by_pairs(f):
            census.wend.add(f)
        if is_weak_endomorphism_by_characterization(f):
            census.wend_by_characterization.add(f)
        if is_endomorphism(f):
            census.end.add(f)
        if is_strong_endomorphism(f):
            census.send.add(f)
        if is_strong_weak_endomorphism(f):
            census.swend.add(f)
        if is_automorphism(f):
            census.aut.add(f)
    return census
