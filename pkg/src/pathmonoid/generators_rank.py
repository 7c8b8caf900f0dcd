"""Generators of wEnd for the directed path and the rank certificate.

For n >= 3 the monoid is generated by ``a1, ..., a(n-2), b(n-1)`` where

* ``a(i)`` fixes 1..i and shifts i+1..n down by one,
* ``b(i)`` shifts 1..i up by one and fixes i+1..n.

:func:`factorize` writes any weak endomorphism as a word in these
generators: rank n-1 elements are handled directly, lower ranks are split
into two factors of rank one higher until everything has rank n-1.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .path_endomorphisms import (
    NotAWeakEndomorphism,
    count_wend,
    encode,
    enumerate_wend,
    is_weak_endomorphism,
)
from .transformations import PathTransformation, compose, identity, kernel, rank_of

__all__ = [
    "A",
    "B",
    "GeneratorSymbol",
    "GeneratorWord",
    "RankCertificate",
    "canonical_generators",
    "closure",
    "evaluate",
    "express_rank_n_minus_1",
    "factorize",
    "generating_subset_exists",
    "kernel_lower_bound",
    "make_alpha",
    "make_beta",
    "minimum_generating_set_size",
    "rank_n_minus_1_elements",
    "split",
]


def make_alpha(n: int, i: int) -> PathTransformation:
    if n < 3:
        raise ValueError(f"generators are defined for n >= 3, got n={n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range 1..{n - 1}")
    return PathTransformation(tuple(x if x <= i else x - 1 for x in range(1, n + 1)))


def make_beta(n: int, i: int) -> PathTransformation:
    if n < 3:
        raise ValueError(f"generators are defined for n >= 3, got n={n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range 1..{n - 1}")
    return PathTransformation(tuple(x + 1 if x <= i else x for x in range(1, n + 1)))


@dataclass(frozen=True)
class GeneratorSymbol:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"generator kind must be 'A' or 'B', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index must be positive, got {self.index}")

    def transformation(self, n: int) -> PathTransformation:
        make = make_alpha if self.kind == "A" else make_beta
        return make(n, self.index)

    def __str__(self) -> str:
        return f"{self.kind.lower()}{self.index}"


def A(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("A", i)


def B(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("B", i)


_SYMBOL = re.compile(r"([abAB])(\d+)")


@dataclass(frozen=True)
class GeneratorWord:
    """A product of generators, read left to right."""

    n: int
    symbols: tuple[GeneratorSymbol, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if s.index > self.n - 1:
                raise ValueError(f"symbol {s} out of range for n={self.n}")

    def __add__(self, other: GeneratorWord) -> GeneratorWord:
        if self.n != other.n:
            raise ValueError("cannot concatenate words for different n")
        return GeneratorWord(self.n, self.symbols + other.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.symbols)

    @classmethod
    def parse(cls, n: int, text: str) -> GeneratorWord:
        """Parse whitespace-separated symbols such as ``"b2 a1"``."""
        symbols = []
        for token in text.split():
            m = _SYMBOL.fullmatch(token)
            if not m:
                raise ValueError(f"bad generator symbol {token!r}")
            symbols.append(GeneratorSymbol(m.group(1).upper(), int(m.group(2))))
        return cls(n, tuple(symbols))


def evaluate(word: GeneratorWord) -> PathTransformation:
    result = identity(word.n)
    for s in word.symbols:
        result = compose(result, s.transformation(word.n))
    return result


def canonical_generators(n: int) -> list[PathTransformation]:
    """``[a1, ..., a(n-2), b(n-1)]``."""
    return [make_alpha(n, i) for i in range(1, n - 1)] + [make_beta(n, n - 1)]


def rank_n_minus_1_elements(n: int) -> set[PathTransformation]:
    if n < 3:
        raise ValueError(f"defined for n >= 3, got n={n}")
    return {make_alpha(n, i) for i in range(1, n)} | {make_beta(n, i) for i in range(1, n)}


def express_rank_n_minus_1(f: PathTransformation) -> GeneratorWord:
    n = f.n
    if n < 3:
        raise ValueError(f"defined for n >= 3, got n={n}")
    if not is_weak_endomorphism(f):
        raise NotAWeakEndomorphism(f"{f} is not a weak endomorphism")
    if rank_of(f) != n - 1:
        raise ValueError(f"{f} has rank {rank_of(f)}, expected {n - 1}")
    for i in range(1, n):
        if f == make_alpha(n, i):
            syms = (A(i),) if i <= n - 2 else (B(n - 1), A(1))
            return GeneratorWord(n, syms)
        if f == make_beta(n, i):
            syms = (A(i), B(n - 1)) if i <= n - 2 else (B(n - 1),)
            return GeneratorWord(n, syms)
    raise AssertionError(f"rank {n - 1} weak endomorphism {f} matched no generator")


def _blocks_map(sizes: Sequence[int], values: Sequence[int]) -> PathTransformation:
    images: list[int] = []
    for size, value in zip(sizes, values):
        images.extend([value] * size)
    return PathTransformation(tuple(images))


def split(f: PathTransformation) -> tuple[PathTransformation, PathTransformation]:
    """Write ``f`` (rank k <= n-2) as ``g1 * g2`` with both factors of rank k+1."""
    n = f.n
    if n < 3:
        raise ValueError(f"defined for n >= 3, got n={n}")
    e = encode(f)
    k, j, sizes = e.k, e.offset_j, e.composition
    if k > n - 2:
        raise ValueError(f"{f} has rank {k}; split needs rank <= {n - 2}")

    if k == 1:
        if j == n - 1:
            g1 = PathTransformation((2,) * (n - 1) + (3,))
            g2 = PathTransformation((n - 1,) + (n,) * (n - 1))
        else:
            g1 = PathTransformation((1,) * (n - 1) + (2,))
            g2 = PathTransformation((j + 1, j + 1) + (j + 2,) * (n - 2))
        return g1, g2

    p = max(t for t in range(1, k + 1) if sizes[t - 1] >= 2)
    # block p loses its last point to a new singleton block
    g1_sizes = list(sizes[: p - 1]) + [sizes[p - 1] - 1, 1] + list(sizes[p:])
    if j == n - k:
        g1 = _blocks_map(g1_sizes, range(2, k + 3))
        g2 = PathTransformation(
            tuple(
                n - k + x - 1 if x <= p + 1 else min(n - k + x - 2, n)
                for x in range(1, n + 1)
            )
        )
    else:
        g1 = _blocks_map(g1_sizes, range(1, k + 2))
        g2 = PathTransformation(
            tuple(
                j + x if x <= p else j + x - 1 if x <= k + 1 else j + k + 1
                for x in range(1, n + 1)
            )
        )
    return g1, g2


def factorize(f: PathTransformation) -> GeneratorWord:
    """A word over ``a1..a(n-2), b(n-1)`` that evaluates to ``f``.

    Not shortest: the recursion can double the length for every rank level
    below n-1.
    """
    n = f.n
    if n < 3:
        raise ValueError(
            f"no canonical generators for n={n}: wEnd has rank 0 for n=1 "
            "and rank 2 for n=2 (its two constant maps)"
        )
    if not is_weak_endomorphism(f):
        raise NotAWeakEndomorphism(f"{f} is not a weak endomorphism")
    r = rank_of(f)
    if r == n:
        return GeneratorWord(n)
    if r == n - 1:
        return express_rank_n_minus_1(f)
    g1, g2 = split(f)
    return factorize(g1) + factorize(g2)


def closure(gens: Iterable[PathTransformation], n: int | None = None) -> set[PathTransformation]:
    """Submonoid generated by ``gens``, by breadth-first right multiplication.

    ``n`` is required only when ``gens`` is empty.
    """
    gens = list(gens)
    if not gens and n is None:
        raise ValueError("pass n when the generating set is empty")
    if n is None:
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("all generators must act on the same number of points")
    gen_images = [g.images for g in gens]
    start = tuple(range(1, n + 1))
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in gen_images:
            nxt = tuple(g[y - 1] for y in current)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return {PathTransformation(t) for t in seen}


@dataclass(frozen=True)
class RankCertificate:
    n: int
    generating_set_size: int
    distinct_rank_n_minus_1_kernels: int
    closure_size: int
    expected_size: int
    identity_unique_of_rank_n: bool
    verdict: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "generating_set_size": self.generating_set_size,
            "distinct_kernels": self.distinct_rank_n_minus_1_kernels,
            "closure_size": self.closure_size,
            "expected_size": self.expected_size,
            "identity_unique_of_rank_n": self.identity_unique_of_rank_n,
            "verdict": self.verdict,
        }


def kernel_lower_bound(n: int) -> RankCertificate:
    """Certify that wEnd has rank n-1.

    Any generating set needs one element per kernel of a rank n-1 element
    (this relies on the identity being the only element of full rank, which
    is checked too). The canonical n-1 generators meet the bound.
    """
    if n < 3:
        raise ValueError(f"defined for n >= 3, got n={n}")
    top = rank_n_minus_1_elements(n)
    kernels = {kernel(f) for f in top}
    gens = canonical_generators(n)
    generated = closure(gens)
    full_rank = [f for f in enumerate_wend(n, k=n)]
    only_identity = full_rank == [identity(n)]
    expected = count_wend(n)
    return RankCertificate(
        n=n,
        generating_set_size=len(gens),
        distinct_rank_n_minus_1_kernels=len(kernels),
        closure_size=len(generated),
        expected_size=expected,
        identity_unique_of_rank_n=only_identity,
        verdict=len(generated) == expected and len(gens) == len(kernels),
    )


def generating_subset_exists(n: int, size: int) -> bool:
    """Exhaustively test whether some ``size``-element subset of wEnd generates it."""
    elements = list(enumerate_wend(n))
    target = len(elements)
    for subset in itertools.combinations(elements, size):
        if len(closure(subset, n=n)) == target:
            return True
    return False


def minimum_generating_set_size(n: int) -> int:
    """Rank of wEnd by exhaustive search. Only practical for small n."""
    size = 0
    while not generating_subset_exists(n, size):
        size += 1
    return size
