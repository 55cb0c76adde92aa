"""Tabulate SPEX results over a range of orders for one or more families.

    python3 scripts/spex_table.py --families K4 C5 K5,C7,P8 --n-range 5..8 --json out.json

The free* column counts free graphs among those that reached the containment
check; pass --audit to check (and count) every graph.
"""
from __future__ import annotations

import argparse
import json
import warnings
from dataclasses import dataclass

from spexlab.families import parse_family
from spexlab.search import FamilyHypothesisError, spex_search


@dataclass
class TableConfig:
    families: list[str]
    lo: int
    hi: int
    audit: bool = False
    jobs: int = 1
    json_path: str | None = None


def parse_args() -> TableConfig:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--families", nargs="+", default=["K4", "C5"])
    ap.add_argument("--n-range", default="5..7")
    ap.add_argument("--audit", action="store_true")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json")
    a = ap.parse_args()
    lo, hi = (int(x) for x in a.n_range.split(".."))
    return TableConfig(a.families, lo, hi, a.audit, a.jobs, a.json)


def main() -> None:
    cfg = parse_args()
    rows = []
    header = f"{'family':<12} {'n':>3} {'gamma':>5} {'spex':>10} {'book rho':>10} {'#ext':>4} {'book?':>6} {'cor1':>5} {'thm5':>5} {'free*':>6} {'secs':>7}"
    print(header)
    print("-" * len(header))
    for name in cfg.families:
        fam = parse_family(name)
        for n in range(cfg.lo, cfg.hi + 1):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                try:
                    r = spex_search(n, fam, audit=cfg.audit, jobs=cfg.jobs)
                except FamilyHypothesisError as exc:
                    print(f"{name:<12} {n:>3} skipped: {exc}")
                    continue
            book = all(v["verdict"] for v in r.contains_spanning_book)
            thm5 = all(v["verdict"] for v in r.theorem5_verdicts)
            print(
                f"{name:<12} {n:>3} {r.gamma_family:>5} {r.spex_value:>10.6f} {r.book_rho:>10.6f} "
                f"{len(r.extremal):>4} {str(book):>6} {str(r.corollary1_holds):>5} {str(thm5):>5} "
                f"{r.stats['free_graphs']:>6} {r.runtime_s:>7.2f}"
            )
            rows.append({"family_name": name, **r.to_json(timing=True)})
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
