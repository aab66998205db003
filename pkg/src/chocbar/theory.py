"""Closed-form P-position rules and the constructive winning-move procedure.

For k = 4m+3 the rule "P exactly when x xor y xor z = 0" is proved on the
region y <= f(x, z).  For k = 4m+1 and for even k (with an x,z bound) the
analogous rules are conjectured only; nothing in the engine's play relies
on them, and every report that uses them says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .core import (
    Axis,
    FloorSlope,
    Move,
    Position,
    SlopeParams,
    apply_move,
    bits_of,
    in_valid_region,
    nim_sum,
    partial_sums,
    shared_bit_width,
    value_of,
)
from .errors import FamilyMismatchError, NotApplicableError, OutOfDomainError


class SBand(str, Enum):
    """Where S_n falls relative to the band [0, k)."""

    BELOW = "below"        # S_n < 0, equivalently y > f(x, z)
    IN_RANGE = "in-range"  # 0 <= S_n < k, equivalently y = f(x, z)
    ABOVE = "above"        # S_n >= k, equivalently y < f(x, z)


@dataclass(frozen=True, slots=True)
class SRelation:
    band: SBand
    s_n: int


def s_relation(k: int, pos: Position) -> SRelation:
    """Classify y against f(x, z) through the sign band of S_n.

    S_n = x + z - k*y for every k >= 1, so the tag always matches the
    direct comparison of y with floor((x + z) / k).
    """
    ctx = partial_sums(k, pos)
    s_n = ctx.s_n
    if s_n < 0:
        band = SBand.BELOW
    elif s_n < k:
        band = SBand.IN_RANGE
    else:
        band = SBand.ABOVE
    return SRelation(band=band, s_n=s_n)


# --- closed-form predicates ----------------------------------------------


@dataclass(frozen=True, slots=True)
class ConjectureFamily:
    """One of the three closed-form rule families.

    name is "theorem" (k = 4m+3, proved on the valid region),
    "conj-4m1" (k = 4m+1, conjectured) or "conj-even"
    (k = 2^(a+2) m + 2^(a+1), conjectured for x, z up to `bound`).
    """

    name: str
    params: SlopeParams
    bound: int | None = None

    @classmethod
    def theorem(cls, k: int) -> "ConjectureFamily":
        params = SlopeParams(k)
        if k % 4 != 3:
            raise FamilyMismatchError(f"the proved rule needs k = 4m+3, got k={k}")
        return cls(name="theorem", params=params)

    @classmethod
    def conj_4m1(cls, k: int) -> "ConjectureFamily":
        params = SlopeParams(k)
        if k % 4 != 1:
            raise FamilyMismatchError(f"the 4m+1 rule needs k = 4m+1, got k={k}")
        return cls(name="conj-4m1", params=params)

    @classmethod
    def conj_even(cls, a: int, m: int) -> "ConjectureFamily":
        params = SlopeParams.even(a, m)
        return cls(name="conj-even", params=params, bound=even_family_bound(a, m))

    @property
    def conjectural(self) -> bool:
        return self.name != "theorem"

    def describe(self) -> str:
        k = self.params.k
        if self.name == "theorem":
            return f"k={k}: P iff x^y^z=0 on y<=f(x,z) (proved)"
        if self.name == "conj-4m1":
            return f"k={k}: P iff (x+1)^y^(z+1)=0 (conjectured)"
        return f"k={k}: P iff x^y^z=0 for x,z<={self.bound} (conjectured)"


def even_family_bound(a: int, m: int) -> int:
    """Domain cap on x and z for the even-k rule: (2^(2a+2) - 2^(a+1)) m + 2^(2a+1) - 1."""
    if a < 0 or m < 0:
        raise ValueError("a and m must be >= 0")
    return ((1 << (2 * a + 2)) - (1 << (a + 1))) * m + (1 << (2 * a + 1)) - 1


def p_closed_form_odd(params: SlopeParams, pos: Position) -> bool:
    """Proved rule for k = 4m+3: P exactly when x ^ y ^ z = 0.

    The proof covers the region y <= f(x, z); outside it this is just the
    raw nim-sum test (see `predict` for the scope flag).
    """
    if params.k % 4 != 3:
        raise FamilyMismatchError(f"k={params.k} is not of the form 4m+3")
    return nim_sum(pos.as_tuple()) == 0


def p_closed_form_4m1(params: SlopeParams, pos: Position) -> bool:
    """Conjectured rule for k = 4m+1: P exactly when (x+1) ^ y ^ (z+1) = 0."""
    if params.k % 4 != 1:
        raise FamilyMismatchError(f"k={params.k} is not of the form 4m+1")
    return nim_sum((pos.x + 1, pos.y, pos.z + 1)) == 0


def p_closed_form_even(family: ConjectureFamily, pos: Position) -> bool:
    """Conjectured rule for even k: P exactly when x ^ y ^ z = 0, for x, z within the bound."""
    if family.name != "conj-even":
        raise FamilyMismatchError(f"expected a conj-even family, got {family.name!r}")
    assert family.bound is not None
    if pos.x > family.bound or pos.z > family.bound:
        raise OutOfDomainError(
            f"position {pos} is outside the even-k rule domain x,z <= {family.bound}"
        )
    return nim_sum(pos.as_tuple()) == 0


@dataclass(frozen=True, slots=True)
class Prediction:
    """A closed-form call plus the honesty flags the reports carry."""

    is_p: bool
    in_scope: bool
    conjectural: bool


def predict(params: SlopeParams, pos: Position) -> Prediction:
    """Closed-form prediction for any k, with scope and proof-status flags."""
    f = FloorSlope(params.k)
    in_region = in_valid_region(f, pos)
    k = params.k
    if k % 4 == 3:
        return Prediction(
            is_p=nim_sum(pos.as_tuple()) == 0,
            in_scope=in_region,
            conjectural=False,
        )
    if k % 4 == 1:
        return Prediction(
            is_p=nim_sum((pos.x + 1, pos.y, pos.z + 1)) == 0,
            in_scope=in_region,
            conjectural=True,
        )
    bound = even_family_bound(params.a, params.m)
    return Prediction(
        is_p=nim_sum(pos.as_tuple()) == 0,
        in_scope=in_region and pos.x <= bound and pos.z <= bound,
        conjectural=True,
    )


# --- constructive winning move (k = 4m+3, valid region) ------------------


class CutCase(IntEnum):
    """Which of the five constructive outcomes fired."""

    X_PLAIN = 1        # cut x, height untouched
    X_WITH_Y_DROP = 2  # cut x, height clamps down to f(u, z)
    Y_ONLY = 3         # cut y directly
    Z_PLAIN = 4        # cut z, height untouched
    Z_WITH_Y_DROP = 5  # cut z, height clamps down to f(x, w)


@dataclass(frozen=True, slots=True)
class ConstructedMove:
    move: Move
    case: CutCase


def construct_winning_move(params: SlopeParams, pos: Position) -> ConstructedMove:
    """Build a winning cut from digits alone, without searching the game tree.

    Requires k = 4m+3, x ^ y ^ z != 0 and y <= f(x, z).  Walks the shared
    binary digits top-down: the highest digit where the xor parity breaks
    picks the axis to cut, and the remaining digits are chosen so the
    signed partial sum stays pinned in a band that forces the height clamp
    to land exactly where the nim-sum cancels.  The result always has
    nim-sum zero and stays inside the valid region.
    """
    k = params.k
    if k % 4 != 3:
        raise FamilyMismatchError(f"constructive cuts need k = 4m+3, got k={k}")
    f = FloorSlope(k)
    if nim_sum(pos.as_tuple()) == 0:
        raise NotApplicableError(f"{pos} already has nim-sum zero; no winning cut exists")
    if not in_valid_region(f, pos):
        raise NotApplicableError(f"{pos} lies outside the region y <= f(x, z)")

    width = shared_bit_width(pos.x, pos.y, pos.z)
    xb = list(bits_of(pos.x, width))
    yb = list(bits_of(pos.y, width))
    zb = list(bits_of(pos.z, width))

    # Highest digit where the xor parity is odd; it exists because the
    # nim-sum is non-zero.
    t = max(i for i in range(width) if xb[i] ^ yb[i] ^ zb[i])

    if yb[t] == 1:
        # Cut the height axis: zero this digit, then mirror x xor z below.
        vb = yb[:]
        vb[t] = 0
        for i in range(t):
            vb[i] = xb[i] ^ zb[i]
        v = value_of(vb)
        return ConstructedMove(
            move=Move(Axis.Y, v, apply_move(f, pos, Axis.Y, v)),
            case=CutCase.Y_ONLY,
        )

    if xb[t] == 1:
        u, dropped = _descend(k, xb, yb, zb, t)
        case = CutCase.X_WITH_Y_DROP if dropped else CutCase.X_PLAIN
        return ConstructedMove(move=Move(Axis.X, u, apply_move(f, pos, Axis.X, u)), case=case)

    # The partial sums are symmetric in x and z, so the z-axis walk is the
    # x-axis walk with the two roles swapped.
    w, dropped = _descend(k, zb, yb, xb, t)
    case = CutCase.Z_WITH_Y_DROP if dropped else CutCase.Z_PLAIN
    return ConstructedMove(move=Move(Axis.Z, w, apply_move(f, pos, Axis.Z, w)), case=case)


def _descend(k: int, ab: list[int], yb: list[int], cb: list[int], t: int) -> tuple[int, bool]:
    """Digit walk that cuts the axis with digits `ab`, keeping `cb` fixed.

    Returns the new value for the cut axis and whether the height will be
    clamped down by the cut.  Invariant kept on the running sum T over the
    digits chosen so far (an even multiple of the current digit weight):
    either 0 <= T < k * weight, or T has escaped above, in which case it
    stays above for any completion and the height clamp is a no-op.
    """
    m = (k - 3) // 4
    ub = ab[:]
    ub[t] = 0
    vb: list[int] | None = None  # height digits, once the clamp is engaged

    T = 0
    for i in range(t + 1, len(ab)):
        T += (ab[i] + cb[i] - k * yb[i]) << i

    for j in range(t - 1, -1, -1):
        if T >= k << (j + 1):
            # Escaped high: any completion leaves y strictly under the new
            # slope value, so finish with plain parity digits.
            for i in range(j, -1, -1):
                ub[i] = yb[i] ^ cb[i]
            break
        low = (T >> (j + 1)) <= 2 * m
        if vb is None:
            if low:
                if yb[j] == 1:
                    vb = yb[:]
                    vb[j] = 0
                ub[j] = cb[j]
                T += (ub[j] + cb[j]) << j
            else:
                if yb[j] == 1:
                    ub[j] = 1 ^ cb[j]
                else:
                    # Parity forces a step above the band; the next
                    # iteration escapes.
                    ub[j] = cb[j]
                T += (ub[j] + cb[j] - k * yb[j]) << j
        else:
            if low:
                vb[j] = 0
                ub[j] = cb[j]
            else:
                vb[j] = 1
                ub[j] = 1 ^ cb[j]
            T += (ub[j] + cb[j] - k * vb[j]) << j

    return value_of(ub), vb is not None
