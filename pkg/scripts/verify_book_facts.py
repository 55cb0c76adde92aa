"""Check the book lower bound and the book/bipartite containment facts for a list of patterns.

For each pattern H: gamma_H, alpha_H, whether B_{gamma+1, alpha} and
K_{gamma+1, alpha + C(gamma+1, 2)} contain a subdivision of H, and for every
n up to --max-n whether B_{gamma, n-gamma} is H-subdivision-free with
rho >= sqrt(gamma (n - gamma)).
"""
from __future__ import annotations

import argparse
import math
from math import comb

from spexlab.families import parse_family
from spexlab.graph import build_book, complete_bipartite
from spexlab.invariants import family_profile, gamma_of, independence_number
from spexlab.spectral import spectral_radius
from spexlab.subdivision import contains_subdivision, is_family_subdivision_free


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--patterns", default="K4,K5,C5,C7,P6,P8")
    ap.add_argument("--max-n", type=int, default=12)
    a = ap.parse_args()
    pats = parse_family(a.patterns)
    names = a.patterns.split(",")
    print(f"{'H':<6} {'gamma':>5} {'alpha':>5} {'in book':>8} {'in K_st':>8} {'book free & rho bound (n)':>28}")
    for name, h in zip(names, pats):
        g, al = gamma_of(h), independence_number(h)
        in_book = contains_subdivision(build_book(g + 1, al), h) is not None
        in_bip = contains_subdivision(complete_bipartite(g + 1, al + comb(g + 1, 2)), h) is not None
        gam = family_profile([h]).gamma_family
        ok_ns = []
        for n in range(gam + 1, a.max_n + 1):
            book = build_book(gam, n - gam)
            if is_family_subdivision_free(book, [h]) and spectral_radius(book).rho >= math.sqrt(gam * (n - gam)) - 1e-9:
                ok_ns.append(n)
        span = f"{ok_ns[0]}..{ok_ns[-1]}" if ok_ns else "none"
        print(f"{name:<6} {g:>5} {al:>5} {str(in_book):>8} {str(in_bip):>8} {span:>28}")


if __name__ == "__main__":
    main()
