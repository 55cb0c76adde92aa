"""Spectral radius, Perron vectors and eigenvector-shift certificates."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

DEFAULT_TOL = 1e-10
MAX_ITER = 10**6
TIE_TOL = 1e-8


class SpectralError(ValueError):
    pass


class EmptyGraphError(SpectralError):
    pass


class ConvergenceError(SpectralError):
    pass


class DegenerateOverlapError(SpectralError):
    """Raised when two eigenvectors are (numerically) orthogonal."""


@dataclass(frozen=True, eq=False)
class SpectrumResult:
    rho: float
    perron: np.ndarray
    residual: float
    iterations: int
    max_entry_vertex: int

    def to_json(self) -> dict:
        return {
            "rho": self.rho,
            "perron": [float(v) for v in self.perron],
            "residual": self.residual,
            "iterations": self.iterations,
            "max_entry_vertex": self.max_entry_vertex,
        }


def _power_iteration(a: np.ndarray, tol: float, max_iter: int) -> tuple[float, np.ndarray, float, int]:
    # iterate on A + I so bipartite components do not oscillate
    k = a.shape[0]
    x = np.full(k, 1.0 / np.sqrt(k))
    for it in range(1, max_iter + 1):
        ax = a @ x
        rho = float(x @ ax)
        res = float(np.max(np.abs(ax - rho * x)))
        if res <= tol:
            return rho, x, res, it
        y = ax + x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not reach residual {tol} in {max_iter} iterations")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectrumResult:
    """Largest adjacency eigenvalue with a non-negative unit eigenvector.

    Disconnected graphs are solved per component; the winning component's
    vector is zero-extended (lowest component index wins ties within ``tol``).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if g.n == 0:
        raise EmptyGraphError("spectral radius of the null graph is undefined")
    a = g.adjacency_matrix()
    best = None
    total_iters = 0
    for comp in g.components():
        if len(comp) == 1:
            rho, vec, res, it = 0.0, np.ones(1), 0.0, 0
        else:
            sub = a[np.ix_(comp, comp)]
            rho, vec, res, it = _power_iteration(sub, tol, max_iter)
        total_iters += it
        if best is None or rho > best[0] + tol:
            best = (rho, comp, vec, res)
    rho, comp, vec, res = best
    x = np.zeros(g.n)
    x[comp] = np.abs(vec)
    x /= np.linalg.norm(x)
    full_res = float(np.max(np.abs(a @ x - rho * x)))
    return SpectrumResult(
        rho=rho,
        perron=x,
        residual=full_res,
        iterations=total_iters,
        max_entry_vertex=int(np.argmax(x)),
    )


def _check_pair(g: Graph, g2: Graph) -> None:
    if g.n != g2.n:
        raise ValueError(f"graphs have different orders {g.n} and {g2.n}")


def _check_unit(x: np.ndarray, n: int, name: str) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"{name} has shape {x.shape}, expected ({n},)")
    if abs(np.linalg.norm(x) - 1.0) > 1e-9:
        raise ValueError(f"{name} is not a unit vector (norm {np.linalg.norm(x)})")
    return x


def rayleigh_shift_lower_bound(g: Graph, g2: Graph, x) -> float:
    """x^T (A(g2) - A(g)) x; a lower bound on rho(g2) - rho(g) when x is Perron(g)."""
    _check_pair(g, g2)
    x = _check_unit(x, g.n, "x")
    total = 0.0
    for u in range(g.n):
        added = g2.rows[u] & ~g.rows[u]
        removed = g.rows[u] & ~g2.rows[u]
        for v in range(u + 1, g.n):
            if added >> v & 1:
                total += 2.0 * x[u] * x[v]
            elif removed >> v & 1:
                total -= 2.0 * x[u] * x[v]
    return total


def two_vector_shift(g1: Graph, g2: Graph, y, z) -> float:
    """y^T (A(g2) - A(g1)) z / (y^T z).

    With y = Perron(g1) and z = Perron(g2) this equals rho(g2) - rho(g1).
    """
    _check_pair(g1, g2)
    y = _check_unit(y, g1.n, "y")
    z = _check_unit(z, g1.n, "z")
    overlap = float(y @ z)
    if overlap <= 1e-12:
        raise DegenerateOverlapError(f"y^T z = {overlap} is too small to divide by")
    diff = g2.adjacency_matrix() - g1.adjacency_matrix()
    return float(y @ diff @ z) / overlap


def co_extremal(rho1: float, rho2: float, tol: float = TIE_TOL) -> bool:
    return abs(rho1 - rho2) <= tol
