"""Game geometry, cut rules, nim arithmetic, and base-2 partial sums.

A position {x, y, z} stands for a chocolate bar of length x+1, height y+1
and width z+1 whose column at (u, w) is min(f(u, w), y) + 1 boxes tall,
with the bitter box at (0, 0).  All values here are immutable and every
function is pure, so they are safe to share between threads and worker
processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator

from .errors import IllegalMoveError

# Coordinates are capped so signed partial sums stay well inside 128 bits
# even for the largest supported k.
MAX_COORD = 1 << 40

# The height function contract: a monotone map (u, w) -> non-negative int.
# Instances used with the solver cache must also be hashable.
HeightFunction = Callable[[int, int], int]


class Axis(str, Enum):
    X = "x"
    Y = "y"
    Z = "z"

    @property
    def order(self) -> int:
        return _AXIS_ORDER[self]


_AXIS_ORDER = {Axis.X: 0, Axis.Y: 1, Axis.Z: 2}


@dataclass(frozen=True, slots=True)
class Position:
    """A game state; the terminal position is {0, 0, 0}."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        for name, value in (("x", self.x), ("y", self.y), ("z", self.z)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"coordinate {name} must be an int, got {value!r}")
            if value < 0:
                raise ValueError(f"coordinate {name} must be >= 0, got {value}")
            if value >= MAX_COORD:
                raise ValueError(f"coordinate {name} exceeds the supported cap 2**40")

    @property
    def is_terminal(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    @property
    def dims(self) -> tuple[int, int, int]:
        """Bar dimensions (length, height, width) = (x+1, y+1, z+1)."""
        return (self.x + 1, self.y + 1, self.z + 1)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def as_dict(self) -> dict[str, int]:
        return {"x": self.x, "y": self.y, "z": self.z}

    def __str__(self) -> str:
        # Canonical textual form, shared by the CLI and the service.
        return f"{self.x},{self.y},{self.z}"

    @classmethod
    def parse(cls, text: str) -> "Position":
        """Parse the canonical "x,y,z" form (decimal, no spaces)."""
        parts = text.split(",")
        if len(parts) != 3 or not all(p.isascii() and p.isdigit() for p in parts):
            raise ValueError(f"position must look like 'x,y,z' (decimal, no spaces), got {text!r}")
        x, y, z = (int(p, 10) for p in parts)
        return cls(x, y, z)


class SlopeFamily(str, Enum):
    ODD_4M3 = "odd-4m+3"
    ODD_4M1 = "odd-4m+1"
    EVEN = "even"


@dataclass(frozen=True, slots=True)
class SlopeParams:
    """The divisor k of the slope f(x, z) = floor((x + z) / k).

    Every k >= 1 belongs to exactly one family: 4m+3, 4m+1, or the even
    family k = 2^(a+2) m + 2^(a+1).
    """

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    @property
    def family(self) -> SlopeFamily:
        if self.k % 4 == 3:
            return SlopeFamily.ODD_4M3
        if self.k % 4 == 1:
            return SlopeFamily.ODD_4M1
        return SlopeFamily.EVEN

    @property
    def m(self) -> int:
        """The m of the family decomposition of k."""
        if self.k % 4 == 3:
            return (self.k - 3) // 4
        if self.k % 4 == 1:
            return (self.k - 1) // 4
        a = self.a
        return (self.k // (1 << (a + 1)) - 1) // 2

    @property
    def a(self) -> int:
        """The a of k = 2^(a+2) m + 2^(a+1); only defined for even k."""
        if self.k % 2 == 1:
            raise ValueError(f"k={self.k} is odd; the (a, m) decomposition is for even k")
        val = 0
        k = self.k
        while k % 2 == 0:
            k //= 2
            val += 1
        return val - 1

    @classmethod
    def odd_4m3(cls, m: int) -> "SlopeParams":
        if m < 0:
            raise ValueError("m must be >= 0")
        return cls(4 * m + 3)

    @classmethod
    def odd_4m1(cls, m: int) -> "SlopeParams":
        if m < 0:
            raise ValueError("m must be >= 0")
        return cls(4 * m + 1)

    @classmethod
    def even(cls, a: int, m: int) -> "SlopeParams":
        if a < 0 or m < 0:
            raise ValueError("a and m must be >= 0")
        return cls((1 << (a + 2)) * m + (1 << (a + 1)))


@dataclass(frozen=True, slots=True)
class FloorSlope:
    """The shipped height function f(u, w) = floor((u + w) / k)."""

    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")

    def __call__(self, u: int, w: int) -> int:
        return (u + w) // self.k

    @property
    def params(self) -> SlopeParams:
        return SlopeParams(self.k)


@dataclass(frozen=True, slots=True)
class Move:
    """A single cut: reduce one axis to `target`, clamping the height."""

    axis: Axis
    target: int
    result: Position

    def sort_key(self) -> tuple[int, int]:
        return (self.axis.order, self.target)

    def as_dict(self) -> dict:
        return {"axis": self.axis.value, "target": self.target, "result": self.result.as_dict()}


def eval_f(params: SlopeParams, x: int, z: int) -> int:
    """floor((x + z) / k), exact integer division."""
    if x < 0 or z < 0:
        raise ValueError("coordinates must be >= 0")
    return (x + z) // params.k


def nim_sum(values: Iterable[int]) -> int:
    """Bitwise xor fold; the empty fold is 0."""
    total = 0
    for v in values:
        if v < 0:
            raise ValueError("nim_sum is defined for non-negative integers")
        total ^= v
    return total


def height_at(f: HeightFunction, pos: Position, u: int, w: int) -> int:
    """Height of the column at (u, w): min(f(u, w), y) + 1."""
    if not (0 <= u <= pos.x and 0 <= w <= pos.z):
        raise ValueError(f"column ({u}, {w}) outside the bar footprint of {pos}")
    return min(f(u, w), pos.y) + 1


def successor_tuples(f: HeightFunction, x: int, y: int, z: int) -> Iterator[tuple[int, int, int]]:
    """All positions reachable in one cut, as plain tuples.

    Yields the x family, then the y family, then the z family, each with
    ascending target.  Distinct cuts always yield distinct positions, so
    no deduplication is needed.
    """
    for u in range(x):
        yield (u, min(f(u, z), y), z)
    for v in range(y):
        yield (x, v, z)
    for w in range(z):
        yield (x, min(y, f(x, w)), w)


def iter_moves(f: HeightFunction, pos: Position) -> Iterator[Move]:
    x, y, z = pos.x, pos.y, pos.z
    for u in range(x):
        yield Move(Axis.X, u, Position(u, min(f(u, z), y), z))
    for v in range(y):
        yield Move(Axis.Y, v, Position(x, v, z))
    for w in range(z):
        yield Move(Axis.Z, w, Position(x, min(y, f(x, w)), w))


def moves(f: HeightFunction, pos: Position) -> list[Move]:
    """Every legal cut from `pos`, in deterministic order (x, y, z; ascending target)."""
    return list(iter_moves(f, pos))


def result_positions(f: HeightFunction, pos: Position) -> set[Position]:
    """The set of positions reachable in one cut."""
    return {m.result for m in iter_moves(f, pos)}


def apply_move(f: HeightFunction, pos: Position, axis: Axis, target: int) -> Position:
    """Apply a single cut, clamping the height coordinate where the rules require.

    The target must be strictly below the current coordinate on the chosen
    axis; anything else raises IllegalMoveError.
    """
    axis = Axis(axis)
    if target < 0:
        raise IllegalMoveError(f"cut target must be >= 0, got {target}")
    x, y, z = pos.x, pos.y, pos.z
    if axis is Axis.X:
        if target >= x:
            raise IllegalMoveError(f"x cut needs target < {x}, got {target}")
        return Position(target, min(f(target, z), y), z)
    if axis is Axis.Y:
        if target >= y:
            raise IllegalMoveError(f"y cut needs target < {y}, got {target}")
        return Position(x, target, z)
    if target >= z:
        raise IllegalMoveError(f"z cut needs target < {z}, got {target}")
    return Position(x, min(y, f(x, target)), target)


def in_valid_region(f: HeightFunction, pos: Position) -> bool:
    """True when y <= f(x, z); the region is closed under cuts."""
    return pos.y <= f(pos.x, pos.z)


# --- base-2 digits and signed partial sums -------------------------------


def shared_bit_width(x: int, y: int, z: int) -> int:
    """Number of base-2 digits shared by the three coordinates (at least 1)."""
    return max(x.bit_length(), y.bit_length(), z.bit_length(), 1)


def bits_of(value: int, width: int) -> tuple[int, ...]:
    """Little-endian binary digits of `value`, zero-padded to `width`."""
    if value < 0:
        raise ValueError("bits_of is defined for non-negative integers")
    if value.bit_length() > width:
        raise ValueError(f"{value} does not fit in {width} digits")
    return tuple((value >> i) & 1 for i in range(width))


def value_of(bits: Iterable[int]) -> int:
    """Inverse of bits_of: sum of bits[i] * 2^i."""
    total = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("digits must be 0 or 1")
        total += b << i
    return total


@dataclass(frozen=True, slots=True)
class PartialSumContext:
    """Digits of x, y, z at shared width n+1 and the signed sums S_0..S_n.

    S_t sums (x_i + z_i - k*y_i) * 2^i over the top t+1 digit positions,
    i = n-t .. n; S_n equals x + z - k*y.  Python integers keep every value
    exact for the full supported coordinate range.
    """

    k: int
    n: int
    x_bits: tuple[int, ...]
    y_bits: tuple[int, ...]
    z_bits: tuple[int, ...]
    sums: tuple[int, ...]

    def s(self, t: int) -> int:
        if not 0 <= t <= self.n:
            raise ValueError(f"t must be in 0..{self.n}, got {t}")
        return self.sums[t]

    @property
    def s_n(self) -> int:
        return self.sums[self.n]


def partial_sums(k: int, pos: Position) -> PartialSumContext:
    """Compute the signed partial sums of `pos` for divisor `k`."""
    if k < 1:
        raise ValueError("k must be >= 1")
    width = shared_bit_width(pos.x, pos.y, pos.z)
    n = width - 1
    xb = bits_of(pos.x, width)
    yb = bits_of(pos.y, width)
    zb = bits_of(pos.z, width)
    sums = []
    acc = 0
    for t in range(width):
        i = n - t
        acc += (xb[i] + zb[i] - k * yb[i]) << i
        sums.append(acc)
    return PartialSumContext(k=k, n=n, x_bits=xb, y_bits=yb, z_bits=zb, sums=tuple(sums))


def spot_check_monotone(f: HeightFunction, limit: int = 64, samples: int = 256, seed: int = 0) -> None:
    """Debug assertion: sample the grid and verify f never decreases.

    Raises ValueError on the first violating pair found.
    """
    rng = random.Random(seed)
    for _ in range(samples):
        x = rng.randrange(limit)
        z = rng.randrange(limit)
        u = rng.randrange(x + 1)
        w = rng.randrange(z + 1)
        if f(u, w) > f(x, z):
            raise ValueError(f"height function is not monotone: f({u},{w}) > f({x},{z})")
