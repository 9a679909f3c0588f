"""Timing harness for the longest-path table fill.

Generation and the LDFS+ pass are excluded from the timings; the table fill
and the final unwinding are timed separately.  One CSV row per
``(size, seed)``, then ``#``-prefixed summary lines.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from statistics import median
from typing import Sequence

import numpy as np

from .generators import GenSpec, generate
from .longest_path import check_size, build_dp, reconstruct
from .search import ldfs_plus


@dataclass(frozen=True)
class BenchRecord:
    n: int
    family: str
    p: float
    seed: int
    dp_build_s: float
    reconstruct_s: float
    length: int
    checks: bool


COLUMNS = tuple(f.name for f in fields(BenchRecord))


def run_instance(spec: GenSpec, checks: bool = False) -> BenchRecord:
    g, pi = generate(spec)
    if g.n == 0:
        return BenchRecord(spec.n, spec.family, spec.p, spec.seed, 0.0, 0.0, 0, checks)
    sigma = ldfs_plus(g, pi)
    t0 = time.perf_counter()
    table = build_dp(g, sigma, check=checks, max_n=g.n)
    t1 = time.perf_counter()
    k = int(table.final_lengths().argmax()) + 1
    path = reconstruct(table, 1, g.n, k)
    t2 = time.perf_counter()
    return BenchRecord(spec.n, spec.family, spec.p, spec.seed, t1 - t0, t2 - t1, len(path), checks)


def _run(args):
    return run_instance(*args)


def bench(
    sizes: Sequence[int],
    family: str,
    p: float,
    seeds: Sequence[int],
    checks: bool = False,
    jobs: int = 1,
    max_n: int | None = None,
) -> list[BenchRecord]:
    for n in sizes:
        check_size(n, max_n)
    tasks = [(GenSpec(family, n, p, seed), checks) for n in sizes for seed in seeds]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_run, tasks))
    return [_run(t) for t in tasks]


def scaling_summary(records: Sequence[BenchRecord]) -> dict:
    """Median table-fill time per size, fitted log-log slope, doubling ratios.

    The slope is None when fewer than two distinct sizes have positive
    medians.
    """
    by_n: dict[int, list[float]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r.dp_build_s)
    med = {n: median(ts) for n, ts in sorted(by_n.items())}
    usable = [(n, t) for n, t in med.items() if n > 0 and t > 0]
    slope = None
    if len(usable) >= 2:
        x = np.log([n for n, _ in usable])
        y = np.log([t for _, t in usable])
        slope = float(np.polyfit(x, y, 1)[0])
    ratios = []
    for n, t in med.items():
        if 2 * n in med and t > 0:
            ratios.append((n, 2 * n, med[2 * n] / t))
    return {"medians": med, "slope": slope, "ratios": ratios}


def to_csv(records: Sequence[BenchRecord], summary: dict | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in records:
        row = list(astuple(r))
        row[4] = f"{r.dp_build_s:.6f}"
        row[5] = f"{r.reconstruct_s:.6f}"
        row[7] = int(r.checks)
        w.writerow(row)
    if summary is not None:
        for n, t in summary["medians"].items():
            buf.write(f"# median_dp_build_s n={n} {t:.6f}\n")
        if summary["slope"] is not None:
            buf.write(f"# loglog_slope {summary['slope']:.3f}\n")
        for a, b, ratio in summary["ratios"]:
            buf.write(f"# doubling_ratio n={a}->{b} {ratio:.2f} (theory {2**4})\n")
    return buf.getvalue()


def read_csv(text: str) -> list[BenchRecord]:
    rows = csv.reader(line for line in io.StringIO(text) if not line.startswith("#"))
    header = next(rows)
    if tuple(header) != COLUMNS:
        raise ValueError(f"unexpected header {header}")
    out = []
    for n, family, p, seed, dp, rec, length, checks in rows:
        out.append(BenchRecord(int(n), family, float(p), int(seed), float(dp), float(rec), int(length), checks == "1"))
    return out
