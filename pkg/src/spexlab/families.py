"""Family shorthand: ``K<r>``, ``C<n>``, ``P<n>``, ``K<s>,<t>``, or raw graph6, comma-separated.

A bare integer token directly after a ``K<s>`` token is read as the second
part of ``K<s>,<t>``, so ``K2,3,C5`` is {K_{2,3}, C_5}. To list K_s and
something numeric-looking next to each other, put the other member first.
"""
from __future__ import annotations

import re
from pathlib import Path

from .graph import Graph, complete, complete_bipartite, cycle, path
from .graph6 import Graph6Error, parse_graph_line, read_graph6_file

_TOKEN = re.compile(r"^([KCP])(\d+)$")


class FamilySyntaxError(ValueError):
    pass


def named_graph(kind: str, a: int, b: int | None = None) -> Graph:
    if kind == "K":
        return complete(a) if b is None else complete_bipartite(a, b)
    if kind == "C":
        return cycle(a)
    if kind == "P":
        return path(a)
    raise FamilySyntaxError(f"unknown graph kind {kind!r}")


def parse_family(text: str) -> list[Graph]:
    tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise FamilySyntaxError("empty family")
    out: list[Graph] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        m = _TOKEN.match(tok)
        if m:
            kind, a = m.group(1), int(m.group(2))
            if kind == "K" and i + 1 < len(tokens) and tokens[i + 1].isdigit():
                out.append(named_graph("K", a, int(tokens[i + 1])))
                i += 2
                continue
            try:
                out.append(named_graph(kind, a))
            except ValueError as exc:
                raise FamilySyntaxError(f"bad family member {tok!r}: {exc}") from exc
        else:
            try:
                out.append(parse_graph_line(tok))
            except Graph6Error as exc:
                raise FamilySyntaxError(f"{tok!r} is neither shorthand nor graph6: {exc}") from exc
        i += 1
    return out


def read_family_file(path: str | Path) -> list[Graph]:
    fam = list(read_graph6_file(path))
    if not fam:
        raise FamilySyntaxError(f"no graphs in {path}")
    return fam
