"""Grid-sweep harness: closed-form rules against the brute-force oracle.

A sweep enumerates a rectangle of positions, asks the rule and the oracle
for each one, and returns a machine-readable report.  Reports are
reproducible: the same spec always yields the same counts and the same
mismatch list, whether the grid is swept serially or split across worker
processes.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from . import __version__
from .core import FloorSlope, Position, nim_sum
from .errors import BudgetExceededError, OutOfDomainError
from .solver import OutcomeClass, SolveCache, classify_tuple, default_budget
from .theory import ConjectureFamily


class RegionPolicy(str, Enum):
    VALID_ONLY = "valid-region-only"
    ALL = "all"
    OUT_ONLY = "out-of-region-only"


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: rule family, grid bounds, and which y values to visit.

    The valid-region policy walks y = 0..f(x, z) per column.  The other two
    policies cap y at f(x_max, z_max) + k, which covers the whole
    out-of-region band that a finite sweep can say anything about.  For the
    even-k family the grid is capped at the rule's domain bound unless
    `allow_beyond_bound` is set, in which case positions beyond the bound
    are scored with the raw nim-sum test and reported as findings.
    """

    family: ConjectureFamily
    x_max: int
    z_max: int
    region: RegionPolicy = RegionPolicy.VALID_ONLY

    allow_beyond_bound: bool = False

    def __post_init__(self) -> None:
        if self.x_max < 0 or self.z_max < 0:
            raise ValueError("grid bounds must be >= 0")
        bound = self.family.bound
        if bound is not None and not self.allow_beyond_bound:
            if self.x_max > bound or self.z_max > bound:
                raise OutOfDomainError(
                    f"grid exceeds the even-k domain x,z <= {bound}; "
                    "pass allow_beyond_bound to sweep past it"
                )

    @property
    def k(self) -> int:
        return self.family.params.k

    def y_cap(self) -> int:
        """Global y ceiling used by the all / out-of-region policies."""
        f = FloorSlope(self.k)
        return f(self.x_max, self.z_max) + self.k

    def predicted_p(self, x: int, y: int, z: int) -> bool:
        if self.family.name == "conj-4m1":
            return nim_sum((x + 1, y, z + 1)) == 0
        return nim_sum((x, y, z)) == 0

    def spec_echo(self) -> dict:
        params = self.family.params
        return {
            "family": self.family.name,
            "k": params.k,
            "a": params.a if params.k % 2 == 0 else None,
            "m": params.m,
            "bound": self.family.bound,
            "x_max": self.x_max,
            "z_max": self.z_max,
            "region": self.region.value,
            "allow_beyond_bound": self.allow_beyond_bound,
        }


@dataclass(frozen=True)
class Mismatch:
    position: Position
    predicted: OutcomeClass
    oracle: OutcomeClass


@dataclass(frozen=True)
class VerificationReport:
    spec: SweepSpec
    positions_checked: int
    mismatches: tuple[Mismatch, ...]
    elapsed_ms: int
    version: str

    @property
    def clean(self) -> bool:
        return not self.mismatches


def _column_y_range(spec: SweepSpec, f: FloorSlope, x: int, z: int, y_cap: int) -> range:
    top = f(x, z)
    if spec.region is RegionPolicy.VALID_ONLY:
        return range(top + 1)
    if spec.region is RegionPolicy.ALL:
        return range(y_cap + 1)
    return range(top + 1, y_cap + 1)


def _grid_state_estimate(spec: SweepSpec) -> int:
    # Everything a sweep can touch: the swept cells themselves plus, for
    # out-of-region starts, the region cells their solves fall back into.
    f = FloorSlope(spec.k)
    y_cap = spec.y_cap()
    total = 0
    for x in range(spec.x_max + 1):
        for z in range(spec.z_max + 1):
            top = f(x, z)
            swept = _column_y_range(spec, f, x, z, y_cap)
            total += max(len(swept), 0) + (top + 1 if spec.region is not RegionPolicy.VALID_ONLY else 0)
    return total


def _sweep_stripe(spec: SweepSpec, x_lo: int, x_hi: int) -> tuple[int, list[tuple[int, int, int, bool, bool]]]:
    """Sweep columns with x in [x_lo, x_hi); independent cache per call."""
    f = FloorSlope(spec.k)
    cache = SolveCache()
    y_cap = spec.y_cap()
    checked = 0
    raw: list[tuple[int, int, int, bool, bool]] = []
    for x in range(x_lo, x_hi):
        for z in range(spec.z_max + 1):
            for y in _column_y_range(spec, f, x, z, y_cap):
                checked += 1
                predicted = spec.predicted_p(x, y, z)
                actual = classify_tuple(f, (x, y, z), cache)
                if predicted != actual:
                    raw.append((x, y, z, predicted, actual))
    return checked, raw


def sweep(spec: SweepSpec, workers: int = 1, budget: int | None = None) -> VerificationReport:
    """Run the sweep and report; raises before any work if it cannot fit the budget."""
    cap = default_budget() if budget is None else budget
    estimate = _grid_state_estimate(spec)
    if estimate > cap:
        raise BudgetExceededError(
            f"sweep would touch an estimated {estimate} states, over the budget of {cap}",
            budget=cap,
            estimate=estimate,
        )

    started = time.monotonic()
    if workers <= 1 or spec.x_max == 0:
        stripes = [_sweep_stripe(spec, 0, spec.x_max + 1)]
    else:
        count = min(workers, spec.x_max + 1)
        edges = [round(i * (spec.x_max + 1) / count) for i in range(count + 1)]
        with ProcessPoolExecutor(max_workers=count) as pool:
            futures = [
                pool.submit(_sweep_stripe, spec, lo, hi)
                for lo, hi in zip(edges, edges[1:])
                if lo < hi
            ]
            stripes = [fut.result() for fut in futures]

    checked = sum(c for c, _ in stripes)
    raw = sorted(entry for _, entries in stripes for entry in entries)
    mismatches = tuple(
        Mismatch(
            position=Position(x, y, z),
            predicted=OutcomeClass.P if predicted else OutcomeClass.N,
            oracle=OutcomeClass.P if actual else OutcomeClass.N,
        )
        for x, y, z, predicted, actual in raw
    )
    elapsed_ms = int((time.monotonic() - started) * 1000)
    return VerificationReport(
        spec=spec,
        positions_checked=checked,
        mismatches=mismatches,
        elapsed_ms=elapsed_ms,
        version=__version__,
    )


# --- serialization --------------------------------------------------------


def report_as_dict(report: VerificationReport) -> dict:
    return {
        "spec": report.spec.spec_echo(),
        "positions_checked": report.positions_checked,
        "mismatches": [
            {
                "x": mm.position.x,
                "y": mm.position.y,
                "z": mm.position.z,
                "predicted": mm.predicted.value,
                "oracle": mm.oracle.value,
            }
            for mm in report.mismatches
        ],
        "elapsed_ms": report.elapsed_ms,
        "version": report.version,
    }


def export_report(report: VerificationReport, format: str) -> bytes:
    """Serialize a report; JSON carries everything, CSV just the mismatch rows."""
    if format == "json":
        return (json.dumps(report_as_dict(report), indent=2) + "\n").encode()
    if format == "csv":
        lines = ["x,y,z,predicted,oracle"]
        lines += [
            f"{mm.position.x},{mm.position.y},{mm.position.z},{mm.predicted.value},{mm.oracle.value}"
            for mm in report.mismatches
        ]
        return ("\n".join(lines) + "\n").encode()
    raise ValueError(f"unsupported report format {format!r}; use json or csv")


def parse_report(data: bytes) -> VerificationReport:
    """Inverse of the JSON export."""
    doc = json.loads(data.decode())
    echo = doc["spec"]
    name = echo["family"]
    k = echo["k"]
    if name == "theorem":
        family = ConjectureFamily.theorem(k)
    elif name == "conj-4m1":
        family = ConjectureFamily.conj_4m1(k)
    elif name == "conj-even":
        family = ConjectureFamily.conj_even(echo["a"], echo["m"])
    else:
        raise ValueError(f"unknown family {name!r} in report")
    spec = SweepSpec(
        family=family,
        x_max=echo["x_max"],
        z_max=echo["z_max"],
        region=RegionPolicy(echo["region"]),
        allow_beyond_bound=echo["allow_beyond_bound"],
    )
    mismatches = tuple(
        Mismatch(
            position=Position(entry["x"], entry["y"], entry["z"]),
            predicted=OutcomeClass(entry["predicted"]),
            oracle=OutcomeClass(entry["oracle"]),
        )
        for entry in doc["mismatches"]
    )
    return VerificationReport(
        spec=spec,
        positions_checked=doc["positions_checked"],
        mismatches=mismatches,
        elapsed_ms=doc["elapsed_ms"],
        version=doc["version"],
    )


def grundy_nim_comparison(k: int, x_max: int, z_max: int) -> dict:
    """Exploratory census: does the Grundy number equal x ^ y ^ z in-region?

    Nothing is claimed or asserted; this only counts agreements so the
    question can be eyeballed.
    """
    from .solver import grundy  # local import keeps module load light

    f = FloorSlope(k)
    cache = SolveCache()
    agree = 0
    differ = 0
    examples: list[tuple[int, int, int, int, int]] = []
    for x in range(x_max + 1):
        for z in range(z_max + 1):
            for y in range(f(x, z) + 1):
                g = grundy(f, Position(x, y, z), cache)
                n = nim_sum((x, y, z))
                if g == n:
                    agree += 1
                else:
                    differ += 1
                    if len(examples) < 10:
                        examples.append((x, y, z, g, n))
    return {"k": k, "agree": agree, "differ": differ, "examples": examples}
