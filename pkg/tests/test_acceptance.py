"""Acceptance suite: one test per shipping criterion, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v` to see the per-criterion lines.
The two closed-form rules that are only conjectured are checked under the
`conjecture` marker: a disagreement there is reported as a finding and does
not break the build.  The 4m+1 rule is in fact refuted by the oracle (see
the xfail below for the smallest counterexample), so that tier is expected
to fail until the rule itself is repaired.
"""

from __future__ import annotations

import random
import time

import pytest

from chocbar.core import (
    FloorSlope,
    Position,
    SlopeParams,
    eval_f,
    nim_sum,
    partial_sums,
    result_positions,
)
from chocbar.solver import OutcomeClass, classify, classify_tuple, grundy, winning_moves
from chocbar.theory import ConjectureFamily, CutCase, construct_winning_move
from chocbar.verify import RegionPolicy, SweepSpec, sweep

SEED = 20260810
RANDOM_CONFIGS = 12_000  # each randomized suite must clear 10^4


def report(line: str) -> None:
    print(f"\n[acceptance] {line}")


# --- criterion: closed form equals oracle for k = 4m+3 ----------------------


def test_theorem_equivalence_full_grid():
    """k in {3, 7, 11}, x,z <= 40, y <= f(x,z): P exactly when x^y^z = 0."""
    started = time.monotonic()
    total = 0
    for k in (3, 7, 11):
        result = sweep(SweepSpec(family=ConjectureFamily.theorem(k), x_max=40, z_max=40))
        assert result.mismatches == (), f"k={k}: {result.mismatches[:3]}"
        total += result.positions_checked
    elapsed = time.monotonic() - started
    assert elapsed < 120.0
    report(f"PASS theorem equivalence: {total} positions across k=3,7,11 in {elapsed:.1f}s, 0 mismatches")


# --- criterion: the counterexample outside the valid region -----------------


def test_scope_counterexample_above_slope(cache):
    """{1,1,0} with k=3 has nim-sum 0 yet is N; the all-positions sweep flags it."""
    pos = Position(1, 1, 0)
    assert nim_sum(pos.as_tuple()) == 0
    assert classify(FloorSlope(3), pos, cache) is OutcomeClass.N
    result = sweep(
        SweepSpec(family=ConjectureFamily.theorem(3), x_max=5, z_max=5, region=RegionPolicy.ALL)
    )
    flagged = {mm.position.as_tuple() for mm in result.mismatches}
    assert (1, 1, 0) in flagged
    report("PASS scope counterexample: {1,1,0} is oracle-N with nim-sum 0 and is reported by the all-policy sweep")


# --- conjecture tier ---------------------------------------------------------


@pytest.mark.conjecture
@pytest.mark.xfail(
    strict=True,
    reason="finding: the oracle refutes the 4m+1 rule under the shipped move rules; "
    "smallest counterexample k=1 {0,2,2} (rule says P, a z-cut to 0 wins on the spot)",
)
def test_conjecture_4m1_valid_region_agreement():
    """k in {1, 5, 9}, x,z <= 30, y <= f(x,z): oracle P iff (x+1)^y^(z+1) = 0."""
    findings = {}
    for k in (1, 5, 9):
        result = sweep(SweepSpec(family=ConjectureFamily.conj_4m1(k), x_max=30, z_max=30))
        if result.mismatches:
            findings[k] = result.mismatches
    for k, mismatches in findings.items():
        first = ", ".join(str(mm.position) for mm in mismatches[:5])
        report(f"FINDING conj-4m1 k={k}: {len(mismatches)} disagreements, first at {first}")
    assert not findings, f"4m+1 rule disagrees with the oracle for k={sorted(findings)}"
    report("PASS conjecture 4m+1: no disagreements")


@pytest.mark.conjecture
def test_conjecture_even_k_agreement_within_bound():
    """(a,m) in {(0,1),(1,0),(1,1)} (k=6,4,12; bounds 3,7,19): oracle P iff x^y^z = 0."""
    checked = 0
    for a, m in ((0, 1), (1, 0), (1, 1)):
        family = ConjectureFamily.conj_even(a, m)
        result = sweep(SweepSpec(family=family, x_max=family.bound, z_max=family.bound))
        assert result.mismatches == (), (
            f"k={family.params.k}: {[str(mm.position) for mm in result.mismatches[:5]]}"
        )
        checked += result.positions_checked
    report(f"PASS conjecture even-k: {checked} in-bound positions for k=6,4,12, 0 mismatches")


# --- criterion: constructive winning cuts match search -----------------------


def test_constructive_cut_agrees_with_search(cache):
    """k in {3, 7}, x,z <= 30: on every valid-region N-position the built cut is
    legal, lands on an oracle P-position, and appears in the searched list."""
    tested = 0
    for k in (3, 7):
        params = SlopeParams(k)
        f = FloorSlope(k)
        for x in range(31):
            for z in range(31):
                for y in range(f(x, z) + 1):
                    if nim_sum((x, y, z)) == 0:
                        continue
                    pos = Position(x, y, z)
                    built = construct_winning_move(params, pos)
                    searched = winning_moves(f, pos, cache)
                    assert built.move in searched, (k, pos, built)
                    assert classify(f, built.move.result, cache) is OutcomeClass.P
                    if built.case in (CutCase.X_PLAIN, CutCase.X_WITH_Y_DROP, CutCase.Y_ONLY):
                        assert nim_sum(built.move.result.as_tuple()) == 0
                    tested += 1
    report(f"PASS constructive cuts: {tested} N-positions, every built cut is a searched winning cut")


# --- criterion: nim-zero region positions admit no winning cut ---------------


def test_nim_zero_positions_have_no_winning_cut(cache):
    """k in {3, 7}, x,z <= 25: every valid-region nim-zero position has an
    empty winning-move list."""
    tested = 0
    for k in (3, 7):
        f = FloorSlope(k)
        for x in range(26):
            for z in range(26):
                for y in range(f(x, z) + 1):
                    if nim_sum((x, y, z)) != 0:
                        continue
                    assert winning_moves(f, Position(x, y, z), cache) == []
                    tested += 1
    report(f"PASS nim-zero converse: {tested} positions, none has a winning cut")


# --- criterion: partial-sum lemma suites --------------------------------------


def _digit_string(rng: random.Random, width: int) -> tuple[list[int], list[int], list[int]]:
    xb = [rng.randrange(2) for _ in range(width)]
    yb = [rng.randrange(2) for _ in range(width)]
    zb = [rng.randrange(2) for _ in range(width)]
    return xb, yb, zb


def _s_values(k: int, xb, yb, zb) -> list[int]:
    # independent oracle: S_t straight from the digit strings
    n = len(xb) - 1
    acc = 0
    out = []
    for t in range(n + 1):
        i = n - t
        acc += (xb[i] + zb[i] - k * yb[i]) << i
        out.append(acc)
    return out


def _value(bits) -> int:
    return sum(b << i for i, b in enumerate(bits))


def test_band_equivalence_suite():
    """S_n < 0 / in [0,k) / >= k matches y > f / y = f / y < f on random digits."""
    rng = random.Random(SEED)
    for _ in range(RANDOM_CONFIGS):
        k = 2 * rng.randrange(16) + 1
        width = rng.randrange(1, 25)
        xb, yb, zb = _digit_string(rng, width)
        x, y, z = _value(xb), _value(yb), _value(zb)
        s_n = _s_values(k, xb, yb, zb)[-1]
        assert s_n == x + z - k * y
        f_val = (x + z) // k
        assert (y == f_val) == (0 <= s_n < k)
        assert (y > f_val) == (s_n < 0)
        assert (y < f_val) == (s_n >= k)
        # the shipped partial sums agree with the independent digit oracle
        ctx = partial_sums(k, Position(x, y, z))
        assert ctx.s_n == s_n
    report(f"PASS band equivalence: {RANDOM_CONFIGS} random digit configurations")


def _forced_parity_digits(rng: random.Random, width: int, t: int):
    """Digits where the top t+1 triples have zero xor parity."""
    xb, yb, zb = _digit_string(rng, width)
    n = width - 1
    for i in range(n - t, width):
        yb[i] = xb[i] ^ zb[i]
    return xb, yb, zb


def test_even_multiple_suite():
    """With zero parity on the top digits and odd k, S_t is an even multiple of 2^(n-t)."""
    rng = random.Random(SEED + 1)
    for _ in range(RANDOM_CONFIGS):
        k = 2 * rng.randrange(16) + 1
        width = rng.randrange(1, 25)
        t = rng.randrange(width)
        xb, yb, zb = _forced_parity_digits(rng, width, t)
        s_t = _s_values(k, xb, yb, zb)[t]
        weight = 1 << (width - 1 - t)
        assert s_t % weight == 0
        assert (s_t // weight) % 2 == 0
    report(f"PASS even-multiple form: {RANDOM_CONFIGS} random digit configurations")


def test_persistence_suites():
    """Once S dips negative (under the parity condition) it stays negative;
    once S clears k*2^(n-t) it stays above k*2^(n-j) with no side condition."""
    rng = random.Random(SEED + 2)
    negative_hits = high_hits = 0
    attempts = 0
    while (negative_hits < RANDOM_CONFIGS or high_hits < RANDOM_CONFIGS) and attempts < 60 * RANDOM_CONFIGS:
        attempts += 1
        k = 2 * rng.randrange(16) + 1
        width = rng.randrange(2, 25)
        n = width - 1
        t = rng.randrange(width - 1)
        if negative_hits < RANDOM_CONFIGS:
            xb, yb, zb = _forced_parity_digits(rng, width, t)
            sums = _s_values(k, xb, yb, zb)
            if sums[t] < 0:
                negative_hits += 1
                assert all(sums[j] < 0 for j in range(t + 1, width)), (k, xb, yb, zb, t)
        if high_hits < RANDOM_CONFIGS:
            xb, yb, zb = _digit_string(rng, width)
            sums = _s_values(k, xb, yb, zb)
            for t_high in range(width - 1):
                if sums[t_high] >= k << (n - t_high):
                    high_hits += 1
                    assert all(
                        sums[j] >= k << (n - j) for j in range(t_high + 1, width)
                    ), (k, xb, yb, zb, t_high)
                    break
    assert negative_hits >= RANDOM_CONFIGS and high_hits >= RANDOM_CONFIGS
    report(
        f"PASS persistence: {negative_hits} negative-side and {high_hits} high-side digit configurations"
    )


def _banded_prefix(rng: random.Random, k: int, width: int, t: int) -> tuple[list, list, list, int]:
    """Random zero-parity prefix whose S_t stays inside [0, k*2^(n-t))."""
    m = (k - 3) // 4
    n = width - 1
    xb, yb, zb = [0] * width, [0] * width, [0] * width
    s = 0
    for i in range(n, n - t - 1, -1):
        low = (s >> (i + 1)) <= 2 * m if i < n else True
        if low:
            triple = rng.choice(((0, 0, 0), (1, 0, 1)))
        else:
            triple = rng.choice(((1, 1, 0), (0, 1, 1)))
        xb[i], yb[i], zb[i] = triple
        s += (triple[0] + triple[2] - k * triple[1]) << i
    return xb, yb, zb, s


STEP_TRIPLES = ((1, 1, 0), (0, 1, 1), (1, 0, 1), (0, 0, 0))


def _check_step(k: int, weight: int, s_t: int, low_band: bool) -> None:
    """One step of the band classification at digit weight 2^(n-t-1)."""
    half = weight // 2
    for triple in STEP_TRIPLES:
        s_next = s_t + (triple[0] + triple[2] - k * triple[1]) * half
        drops = triple in ((1, 1, 0), (0, 1, 1))
        if low_band:
            if drops:
                assert s_next < 0, (k, s_t, triple)
            else:
                assert 0 <= s_next < k * half, (k, s_t, triple)
        else:
            if drops:
                assert 0 <= s_next < k * half, (k, s_t, triple)
            else:
                assert s_next >= k * half, (k, s_t, triple)


def test_step_classification_suite():
    """Extending a low-band (resp. high-band) prefix by each zero-parity digit
    triple moves S exactly as the band rules say, for k = 4m+3."""
    rng = random.Random(SEED + 3)
    low_hits = high_hits = 0
    attempts = 0
    while (low_hits < RANDOM_CONFIGS or high_hits < RANDOM_CONFIGS) and attempts < 60 * RANDOM_CONFIGS:
        attempts += 1
        k = 4 * rng.randrange(8) + 3
        m = (k - 3) // 4
        width = rng.randrange(2, 25)
        t = rng.randrange(width - 1)
        xb, yb, zb, s_t = _banded_prefix(rng, k, width, t)
        assert _s_values(k, xb, yb, zb)[t] == s_t
        weight = 1 << (width - 1 - t)
        if 0 <= s_t <= 2 * m * weight and low_hits < RANDOM_CONFIGS:
            low_hits += 1
            _check_step(k, weight, s_t, low_band=True)
        elif (2 * m + 2) * weight <= s_t < k * weight and high_hits < RANDOM_CONFIGS:
            high_hits += 1
            _check_step(k, weight, s_t, low_band=False)
        # numeric sampling of the full hypothesis bands, digits aside
        s_low = rng.randrange(2 * m * weight + 1)
        _check_step(k, weight, s_low, low_band=True)
        a_even = 2 * rng.randrange(m + 1) + 2 * m + 2
        _check_step(k, weight, a_even * weight, low_band=False)
    assert low_hits >= RANDOM_CONFIGS and high_hits >= RANDOM_CONFIGS
    report(f"PASS step classification: {low_hits} low-band and {high_hits} high-band prefixes")


def test_lemma_suites_exhaustive_small_cases():
    """Every digit string of width <= 3, k in {1,3,5,7,9,11}: all four suites."""
    checked = 0
    for k in (1, 3, 5, 7, 9, 11):
        m = (k - 3) // 4 if k % 4 == 3 else None
        for width in (1, 2, 3):
            n = width - 1
            for code in range(8**width):
                xb, yb, zb = [], [], []
                c = code
                for _ in range(width):
                    xb.append(c & 1)
                    yb.append((c >> 1) & 1)
                    zb.append((c >> 2) & 1)
                    c >>= 3
                sums = _s_values(k, xb, yb, zb)
                x, y, z = _value(xb), _value(yb), _value(zb)
                f_val = (x + z) // k
                assert (y == f_val) == (0 <= sums[-1] < k)
                parity_ok_down_to = width
                for t in range(width):
                    i = n - t
                    if xb[i] ^ yb[i] ^ zb[i]:
                        parity_ok_down_to = t
                        break
                for t in range(width):
                    weight = 1 << (n - t)
                    if t < parity_ok_down_to:
                        assert sums[t] % (2 * weight) == 0
                        if sums[t] < 0:
                            assert all(s < 0 for s in sums[t + 1:])
                    if sums[t] >= k * weight:
                        assert all(sums[j] >= k << (n - j) for j in range(t + 1, width))
                    if m is not None and t < width - 1:
                        if 0 <= sums[t] <= 2 * m * weight:
                            _check_step(k, weight, sums[t], low_band=True)
                        even_multiple = sums[t] % (2 * weight) == 0
                        if t < parity_ok_down_to and even_multiple and (2 * m + 2) * weight <= sums[t] < k * weight:
                            _check_step(k, weight, sums[t], low_band=False)
                checked += 1
    report(f"PASS exhaustive small digit strings: {checked} configurations across six k values")


# --- criterion: the worked-example fixtures hold verbatim ---------------------


def test_fixture_fidelity():
    f3 = FloorSlope(3)
    assert Position(9, 3, 10) in result_positions(f3, Position(14, 3, 10))
    assert Position(4, 3, 7) in result_positions(f3, Position(13, 6, 7))
    assert nim_sum((14, 3, 10)) == 7
    assert nim_sum((13, 6, 7)) == 12
    assert nim_sum((9, 3, 10)) == 0
    assert nim_sum((4, 3, 7)) == 0
    assert eval_f(SlopeParams(3), 9, 10) == 6
    assert eval_f(SlopeParams(3), 4, 7) == 3
    report("PASS fixture fidelity: cuts, nim-sums and slope values match the worked examples")


# --- criterion: the two oracle routes agree ----------------------------------


def test_oracle_routes_agree_everywhere(cache):
    """Grundy recursion and the boolean retrograde pass agree on every swept
    position, in and out of the valid region; zero Grundy exactly at P."""
    positions = 0
    for k in (3, 7, 11):
        f = FloorSlope(k)
        for x in range(41):
            for z in range(41):
                for y in range(f(x, z) + 1):
                    pos = Position(x, y, z)
                    g = grundy(f, pos, cache)
                    is_p = classify_tuple(f, (x, y, z), cache)
                    assert (g == 0) == is_p, (k, pos)
                    positions += 1
    # out-of-region band around the counterexample
    f3 = FloorSlope(3)
    for x in range(6):
        for z in range(6):
            for y in range(f3(5, 5) + 3 + 1):
                pos = Position(x, y, z)
                assert (grundy(f3, pos, cache) == 0) == (
                    classify(f3, pos, cache) is OutcomeClass.P
                ), pos
                positions += 1
    report(f"PASS oracle self-consistency: both routes agree on {positions} positions")
