"""Full transformations of {1, ..., n}.

Maps act on the right and compose left to right: ``x(fg) = (xf)g``.
Vertex labels are 1-based everywhere in the public interface.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "KernelPartition",
    "ParseError",
    "PathTransformation",
    "all_transformations",
    "compose",
    "format_transformation",
    "identity",
    "image_set",
    "is_interval",
    "is_order_preserving",
    "kernel",
    "parse_transformation",
    "rank_of",
    "transformation",
]

# n**n grows fast; 6**6 = 46656 keeps exhaustive checks in the seconds range.
BRUTE_FORCE_LIMIT = 6


class ParseError(ValueError):
    """Malformed transformation text. ``position`` is a 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at column {position})")
        self.position = position


@dataclass(frozen=True)
class PathTransformation:
    """A total map on {1..n}; ``images[x - 1]`` is the image of ``x``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise ValueError("a transformation needs at least one point")
        for x, y in enumerate(images, start=1):
            if isinstance(y, bool) or not isinstance(y, int):
                raise TypeError(f"image of {x} is not an integer: {y!r}")
            if not 1 <= y <= n:
                raise ValueError(f"image of {x} is {y}, outside 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"{x} is outside 1..{self.n}")
        return self.images[x - 1]

    def __mul__(self, other: PathTransformation) -> PathTransformation:
        if not isinstance(other, PathTransformation):
            return NotImplemented
        return compose(self, other)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format_transformation(self)


@dataclass(frozen=True)
class KernelPartition:
    """Fibers of a map, each sorted, listed by increasing minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def refines(self, other: KernelPartition) -> bool:
        """True if every block of ``self`` lies inside a block of ``other``."""
        if self.n != other.n:
            return False
        owner = {}
        for idx, block in enumerate(other.blocks):
            for x in block:
                owner[x] = idx
        return all(len({owner[x] for x in block}) == 1 for block in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


def identity(n: int) -> PathTransformation:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return PathTransformation(tuple(range(1, n + 1)))


def compose(f: PathTransformation, g: PathTransformation) -> PathTransformation:
    """Return ``fg``: apply ``f`` first, then ``g``."""
    if f.n != g.n:
        raise ValueError(f"cannot compose maps on {f.n} and {g.n} points")
    gi = g.images
    return PathTransformation(tuple(gi[y - 1] for y in f.images))


def image_set(f: PathTransformation) -> tuple[int, ...]:
    return tuple(sorted(set(f.images)))


def kernel(f: PathTransformation) -> KernelPartition:
    fibers: dict[int, list[int]] = {}
    for x, y in enumerate(f.images, start=1):
        fibers.setdefault(y, []).append(x)
    blocks = sorted((tuple(b) for b in fibers.values()), key=lambda b: b[0])
    return KernelPartition(f.n, tuple(blocks))


def rank_of(f: PathTransformation) -> int:
    return len(set(f.images))


def is_order_preserving(f: PathTransformation) -> bool:
    im = f.images
    return all(a <= b for a, b in zip(im, im[1:]))


def is_interval(values: Iterable[int]) -> bool:
    """True if ``values`` is a nonempty run of consecutive integers."""
    s = set(values)
    return bool(s) and max(s) - min(s) + 1 == len(s)


def all_transformations(
    n: int, limit: int = BRUTE_FORCE_LIMIT, allow_large: bool = False
) -> Iterator[PathTransformation]:
    """Yield all n**n maps on {1..n} in lexicographic order of image lists."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > limit and not allow_large:
        raise ValueError(
            f"refusing to enumerate {n}**{n} maps (limit n <= {limit}); "
            "pass allow_large=True to override"
        )
    for images in itertools.product(range(1, n + 1), repeat=n):
        yield PathTransformation(images)


def format_transformation(f: PathTransformation) -> str:
    return "[" + ",".join(str(y) for y in f.images) + "]"


_TOKEN = re.compile(r"\s*([^,\s\]]*)\s*")


def parse_transformation(text: str) -> PathTransformation:
    """Parse ``"[1,1,2,3]"`` into a transformation on 4 points."""
    start = len(text) - len(text.lstrip())
    body_end = len(text.rstrip())
    if start >= body_end or text[start] != "[":
        raise ParseError("expected '['", start)
    if text[body_end - 1] != "]":
        raise ParseError("expected ']'", body_end - 1 if body_end else 0)
    inner_start = start + 1
    inner = text[inner_start : body_end - 1]
    if not inner.strip():
        raise ParseError("empty transformation", inner_start)

    values: list[int] = []
    positions: list[int] = []
    pos = 0
    for piece in inner.split(","):
        m = _TOKEN.fullmatch(piece)
        token = m.group(1) if m else piece.strip()
        col = inner_start + pos + (m.start(1) if m else 0)
        if not token:
            raise ParseError("missing value", col)
        if not re.fullmatch(r"[+-]?\d+", token):
            raise ParseError(f"not an integer: {token!r}", col)
        values.append(int(token))
        positions.append(col)
        pos += len(piece) + 1

    n = len(values)
    for v, col in zip(values, positions):
        if not 1 <= v <= n:
            raise ParseError(f"value {v} out of range 1..{n}", col)
    return PathTransformation(tuple(values))


def transformation(images: Sequence[int] | str) -> PathTransformation:
    """Convenience constructor accepting a sequence or the bracketed text form."""
    if isinstance(images, str):
        return parse_transformation(images)
    return PathTransformation(tuple(images))
