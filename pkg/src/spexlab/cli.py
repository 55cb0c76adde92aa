"""``spexlab`` command line: parse inputs, dispatch, print JSON.

Exit status is 0 on success, 1 on domain errors (a family with
gamma_family < 1, an invalid transform request, ...) and 2 on bad flags,
unparsable graph6 or unreadable files.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .enumeration import EnumerationLimitError, enumerate_graphs, graphs_from_corpus
from .families import FamilySyntaxError, parse_family, read_family_file
from .graph import Graph
from .graph6 import Graph6Error, parse_graph_line, to_graph6
from .invariants import family_profile
from .search import SCHEMA, FamilyHypothesisError, contains_spanning_book, spex_search
from .spectral import DEFAULT_TOL, SpectralError, spectral_radius
from .subdivision import first_contained, gamma_family_subgraphs, is_subdivision_saturated
from .transforms import TransformError, partition_by_dominators, transform_G0, transform_G1, transform_G2

FAMILY_COMMANDS = {"spex", "profile", "check-free", "saturated", "gamma-family"}


class InputError(Exception):
    """Unparsable or unreadable input; maps to exit status 2."""


@dataclass
class RunConfig:
    command: str
    ns: list[int] = field(default_factory=list)
    family: list[Graph] = field(default_factory=list)
    graph: Graph | None = None
    tol: float = DEFAULT_TOL
    jobs: int = 1
    out: Path | None = None
    corpus: Path | None = None
    connected_only: bool = False
    audit: bool = False
    timing: bool = False
    variant: str | None = None
    L: list[int] = field(default_factory=list)
    k: int | None = None
    jk: int | None = None
    p0: list[int] = field(default_factory=list)
    gamma: int | None = None


def _int_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from exc


def _n_range(text: str) -> list[int]:
    a, sep, b = text.partition("..")
    if not sep:
        raise InputError(f"--n-range expects A..B, got {text!r}")
    try:
        lo, hi = int(a), int(b)
    except ValueError as exc:
        raise InputError(f"--n-range expects integers, got {text!r}") from exc
    if lo > hi:
        raise InputError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _default_jobs() -> int:
    raw = os.environ.get("SPEXLAB_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--n-range")
    common.add_argument("--family")
    common.add_argument("--family-file")
    common.add_argument("--graph", help="graph6 string")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--jobs", type=int, default=None)
    common.add_argument("--out")
    common.add_argument("--corpus", help="graph6 file replacing the built-in enumeration")
    common.add_argument("--connected-only", action="store_true")
    common.add_argument("--timing", action="store_true", help="include runtime in the JSON")

    p = argparse.ArgumentParser(prog="spexlab", description="Spectral extremal search over subdivision-free families.")
    sub = p.add_subparsers(dest="command", required=True)
    spex = sub.add_parser("spex", parents=[common], help="exhaustive SPEX search")
    spex.add_argument("--audit", action="store_true", help="containment-check every graph")
    sub.add_parser("profile", parents=[common], help="family profile")
    sub.add_parser("check-free", parents=[common], help="is the graph family-subdivision-free")
    sub.add_parser("saturated", parents=[common], help="is the graph family-subdivision-saturated")
    sub.add_parser("gamma-family", parents=[common], help="irreducible induced subgraphs Gamma(family)")
    sb = sub.add_parser("spanning-book", parents=[common], help="find a spanning generalized book")
    sb.add_argument("--gamma", type=int)
    tr = sub.add_parser("transform", parents=[common], help="apply G0, G1 or G2")
    tr.add_argument("variant", choices=["g0", "g1", "g2"])
    tr.add_argument("--L", required=True)
    tr.add_argument("--k", type=int)
    tr.add_argument("--jk", type=int)
    tr.add_argument("--p0")
    sub.add_parser("spectrum", parents=[common], help="spectral radius and Perron vector")
    sub.add_parser("enumerate", parents=[common], help="list graphs up to isomorphism")
    return p


def make_config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, tol=ns.tol, connected_only=ns.connected_only, timing=ns.timing)
    cfg.jobs = ns.jobs if ns.jobs is not None else _default_jobs()
    if cfg.tol <= 0:
        raise InputError("--tol must be positive")
    if ns.n is not None and ns.n_range:
        raise InputError("--n and --n-range are mutually exclusive")
    if ns.n is not None:
        cfg.ns = [ns.n]
    elif ns.n_range:
        cfg.ns = _n_range(ns.n_range)
    if ns.family and ns.family_file:
        raise InputError("--family and --family-file are mutually exclusive")
    try:
        if ns.family:
            cfg.family = parse_family(ns.family)
        elif ns.family_file:
            cfg.family = read_family_file(ns.family_file)
        if ns.graph:
            cfg.graph = parse_graph_line(ns.graph)
    except (FamilySyntaxError, Graph6Error, ValueError) as exc:
        raise InputError(str(exc)) from exc
    except OSError as exc:
        raise InputError(f"cannot read family file: {exc}") from exc
    cfg.out = Path(ns.out) if ns.out else None
    cfg.corpus = Path(ns.corpus) if ns.corpus else None
    cfg.audit = getattr(ns, "audit", False)
    cfg.gamma = getattr(ns, "gamma", None)
    if cfg.command == "transform":
        cfg.variant = ns.variant
        cfg.L = _int_list(ns.L)
        cfg.k, cfg.jk = ns.k, ns.jk
        cfg.p0 = _int_list(ns.p0)

    if cfg.command in FAMILY_COMMANDS and not cfg.family:
        raise InputError(f"{cfg.command} needs --family or --family-file")
    if cfg.command in {"check-free", "saturated", "spanning-book", "transform", "spectrum"} and cfg.graph is None:
        raise InputError(f"{cfg.command} needs --graph")
    if cfg.command in {"spex", "enumerate"} and not cfg.ns:
        raise InputError(f"{cfg.command} needs --n or --n-range")
    if cfg.command == "spanning-book" and cfg.gamma is None and not cfg.family:
        raise InputError("spanning-book needs --gamma or a family")
    return cfg


# -- commands ---------------------------------------------------------------

def _spex(cfg: RunConfig) -> dict:
    reports = []
    for n in cfg.ns:
        graphs = None
        if cfg.corpus is not None:
            try:
                graphs = list(graphs_from_corpus(cfg.corpus, n, cfg.connected_only))
            except (OSError, Graph6Error) as exc:
                raise InputError(f"cannot read corpus: {exc}") from exc
        rep = spex_search(n, cfg.family, graphs=graphs, connected_only=cfg.connected_only,
                          jobs=cfg.jobs, audit=cfg.audit, tol=cfg.tol)
        reports.append(rep)
    if cfg.out is not None:
        sidecar = cfg.out.with_suffix(".g6")
        lines = sorted({s for r in reports for s in r.extremal})
        sidecar.write_text("".join(s + "\n" for s in lines))
    if len(reports) == 1:
        return reports[0].to_json(cfg.timing)
    return {"schema": SCHEMA, "reports": [r.to_json(cfg.timing) for r in reports]}


def _profile(cfg: RunConfig) -> dict:
    return {"schema": SCHEMA, **family_profile(cfg.family).to_json()}


def _check_free(cfg: RunConfig) -> dict:
    model = first_contained(cfg.graph, cfg.family)
    return {
        "schema": SCHEMA,
        "graph": to_graph6(cfg.graph),
        "family": [to_graph6(h) for h in cfg.family],
        "free": model is None,
        "witness": model.to_json() if model is not None else None,
    }


def _saturated(cfg: RunConfig) -> dict:
    return {
        "schema": SCHEMA,
        "graph": to_graph6(cfg.graph),
        "family": [to_graph6(h) for h in cfg.family],
        "free": first_contained(cfg.graph, cfg.family) is None,
        "saturated": is_subdivision_saturated(cfg.graph, cfg.family),
    }


def _gamma_family(cfg: RunConfig) -> dict:
    gamma = family_profile(cfg.family).gamma_family
    gam = gamma_family_subgraphs(cfg.family, gamma)
    return {"schema": SCHEMA, "gamma_family": gamma, "members": [to_graph6(h) for h in gam]}


def _spanning_book(cfg: RunConfig) -> dict:
    gamma = cfg.gamma if cfg.gamma is not None else family_profile(cfg.family).gamma_family
    L = contains_spanning_book(cfg.graph, gamma)
    return {
        "schema": SCHEMA,
        "graph": to_graph6(cfg.graph),
        "gamma": gamma,
        "found": L is not None,
        "L": sorted(L) if L is not None else None,
    }


def _transform(cfg: RunConfig) -> dict:
    g = cfg.graph
    p = partition_by_dominators(g, cfg.L)
    out = {
        "schema": SCHEMA,
        "variant": cfg.variant,
        "input": to_graph6(g),
        "L": sorted(p.L),
        "Sprime": sorted(p.Sprime),
        "Sdoubleprime": sorted(p.Sdoubleprime),
    }
    if cfg.variant == "g0":
        res = transform_G0(g, p)
    else:
        if cfg.k is None or cfg.jk is None:
            raise InputError(f"transform {cfg.variant} needs --k and --jk")
        res = transform_G1(g, p, cfg.k, cfg.jk)
        if cfg.variant == "g2":
            if not cfg.p0:
                raise InputError("transform g2 needs --p0")
            out["g1"] = to_graph6(res)
            res = transform_G2(res, p, cfg.k, cfg.jk, cfg.p0)
    out["output"] = to_graph6(res)
    out["edges_before"] = g.num_edges()
    out["edges_after"] = res.num_edges()
    return out


def _spectrum(cfg: RunConfig) -> dict:
    return {"schema": SCHEMA, "graph": to_graph6(cfg.graph), **spectral_radius(cfg.graph, cfg.tol).to_json()}


def _enumerate(cfg: RunConfig) -> dict:
    counts = {}
    listing = {}
    for n in cfg.ns:
        gs = [to_graph6(g) for g in enumerate_graphs(n, cfg.connected_only)]
        counts[str(n)] = len(gs)
        listing[str(n)] = gs
    if cfg.out is not None:
        cfg.out.write_text("".join(s + "\n" for n in cfg.ns for s in listing[str(n)]))
        return {"schema": SCHEMA, "connected_only": cfg.connected_only, "counts": counts, "out": str(cfg.out)}
    return {"schema": SCHEMA, "connected_only": cfg.connected_only, "counts": counts, "graphs": listing}


DISPATCH = {
    "spex": _spex,
    "profile": _profile,
    "check-free": _check_free,
    "saturated": _saturated,
    "gamma-family": _gamma_family,
    "spanning-book": _spanning_book,
    "transform": _transform,
    "spectrum": _spectrum,
    "enumerate": _enumerate,
}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = make_config(ns)
        with warnings.catch_warnings():
            # profile warnings are carried in the JSON itself
            warnings.simplefilter("ignore", UserWarning)
            result = DISPATCH[cfg.command](cfg)
        text = json.dumps(result, indent=2, allow_nan=False) + "\n"
        if cfg.out is not None and cfg.command == "spex":
            cfg.out.write_text(text)
        stdout.write(text)
    except InputError as exc:
        print(f"spexlab: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"spexlab: error: {exc}", file=sys.stderr)
        return 2
    except (FamilyHypothesisError, TransformError, EnumerationLimitError, SpectralError, ValueError) as exc:
        print(f"spexlab: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
