#!/usr/bin/env python3
"""Regenerate the tabled X(m)/X0(m)/X1(m) cusp data shipped with the package.

Classical facts only, computed from scratch:
  * X(m): degree |PSL2(Z/m)|, every cusp of width m.
  * X0(m): cosets are P^1(Z/m); T acts by (c:d) -> (c:c+d); cusp widths are
    the T-cycle lengths.
  * X1(m): cosets are +-(c,d) with gcd(c,d,m)=1, same T action.
All three coset actions are faithful, so the monodromy order of the j-line
cover is |PSL2(Z/m)| in each case.

Usage: python scripts/generate_modular_data.py [outfile]
"""

from __future__ import annotations

import json
import sys
from math import gcd
from pathlib import Path

LEVELS = sorted(
    set(range(1, 37))
    | {40, 45, 48, 49, 50, 54, 60, 64, 72, 81, 96, 100, 108, 121, 125}
)


def prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def sl2_order(m: int) -> int:
    if m == 1:
        return 1
    n = m**3
    for p in prime_factors(m):
        n = n // (p * p) * (p * p - 1)
    return n


def psl2_order(m: int) -> int:
    n = sl2_order(m)
    return n if m <= 2 else n // 2


def t_cycle_widths(points: list[tuple[int, int]], rep, m: int) -> list[int]:
    """Cycle lengths of (c,d) -> (c, c+d) on canonical representatives."""
    index = {pt: i for i, pt in enumerate(points)}
    succ = [index[rep((c % m, (c + d) % m))] for c, d in points]
    seen = [False] * len(points)
    widths = []
    for i in range(len(points)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = succ[j]
            n += 1
        widths.append(n)
    return sorted(widths)


def x0_data(m: int) -> tuple[int, list[int]]:
    units = [u for u in range(1, m) if gcd(u, m) == 1] or [1 % max(m, 1)]

    def rep(v):
        c, d = v
        return min(((u * c) % m, (u * d) % m) for u in units)

    pts = sorted(
        {
            rep((c, d))
            for c in range(m)
            for d in range(m)
            if gcd(gcd(c, d), m) == 1
        }
    )
    return len(pts), t_cycle_widths(pts, rep, m)


def x1_data(m: int) -> tuple[int, list[int]]:
    def rep(v):
        c, d = v
        return min((c, d), ((-c) % m, (-d) % m))

    pts = sorted(
        {
            rep((c, d))
            for c in range(m)
            for d in range(m)
            if gcd(gcd(c, d), m) == 1
        }
    )
    return len(pts), t_cycle_widths(pts, rep, m)


def build() -> dict:
    entries = []
    for m in LEVELS:
        mono = psl2_order(m)
        deg_full = psl2_order(m)
        entries.append(
            {
                "family": "X",
                "level": m,
                "degree": deg_full,
                "widths": [m] * (deg_full // m) if m > 1 else [1],
                "monodromy_order": mono,
            }
        )
        if m > 1:
            d0, w0 = x0_data(m)
            entries.append(
                {
                    "family": "X0",
                    "level": m,
                    "degree": d0,
                    "widths": w0,
                    "monodromy_order": mono,
                }
            )
            d1, w1 = x1_data(m)
            entries.append(
                {
                    "family": "X1",
                    "level": m,
                    "degree": d1,
                    "widths": w1,
                    "monodromy_order": mono,
                }
            )
    return {"version": "v1", "levels": LEVELS, "entries": entries}


def main() -> None:
    out = (
        Path(sys.argv[1])
        if len(sys.argv) > 1
        else Path(__file__).resolve().parents[1]
        / "src"
        / "nielsen_forge"
        / "data"
        / "modular_cusp_data_v1.json"
    )
    data = build()
    # sanity: widths always sum to the degree
    for e in data["entries"]:
        assert sum(e["widths"]) == e["degree"], e
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {out} ({len(data['entries'])} entries)")


if __name__ == "__main__":
    main()
