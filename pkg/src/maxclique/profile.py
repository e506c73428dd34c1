"""Performance profiles (Dolan-More) from solver timing records.

For config c and problem p let r = time(c, p) / best time on p.  The curve
of c passes through (log2 x, fraction of problems with r <= x).  Unsolved
runs never count.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class ProfilePoint:
    tau: float
    fraction: float


class ProblemSetMismatch(ValueError):
    pass


def _is_dnf(x) -> bool:
    return x is None or (isinstance(x, str) and x.strip().upper() in ("", "DNF"))


def read_records(text: str) -> list[tuple[str, str, float | None]]:
    """CSV with columns problem, config, seconds (``DNF`` or blank when the
    run did not finish)."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        sec = row["seconds"]
        out.append((row["problem"], row["config"], None if _is_dnf(sec) else float(sec)))
    return out


def performance_profile(records) -> dict[str, list[ProfilePoint]]:
    times: dict[str, dict[str, float | None]] = {}
    for prob, cfg, sec in records:
        times.setdefault(cfg, {})[prob] = None if _is_dnf(sec) else float(sec)
    if not times:
        return {}
    sets = {cfg: set(d) for cfg, d in times.items()}
    allp = set().union(*sets.values())
    missing = {cfg: sorted(allp - s) for cfg, s in sets.items() if s != allp}
    if missing:
        raise ProblemSetMismatch("problem sets differ: " + "; ".join(
            f"{cfg} lacks {', '.join(ps)}" for cfg, ps in sorted(missing.items())))

    best = {}
    for p in allp:
        solved = [d[p] for d in times.values() if d[p] is not None]
        best[p] = min(solved) if solved else None

    def ratio(t, b):
        if t is None or b is None:
            return None
        if b == 0:
            return 1.0 if t == 0 else math.inf
        return t / b

    ratios = {cfg: [ratio(d[p], best[p]) for p in sorted(allp)] for cfg, d in times.items()}
    breaks = sorted({r for rs in ratios.values() for r in rs if r is not None and r != math.inf})
    N = len(allp)
    curves = {}
    for cfg, rs in sorted(ratios.items()):
        solved = [r for r in rs if r is not None]
        curves[cfg] = [ProfilePoint(math.log2(x), sum(1 for r in solved if r <= x) / N)
                       for x in breaks]
    return curves


def profile_csv(curves: dict[str, list[ProfilePoint]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["config", "tau", "fraction"])
    for cfg, pts in curves.items():
        for pt in pts:
            w.writerow([cfg, repr(pt.tau), repr(pt.fraction)])
    return buf.getvalue()
