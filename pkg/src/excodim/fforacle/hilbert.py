"""Hilbert functions of graded ideals by rank computation, and projective
dimension read off from the growth of the Hilbert function.

The degree-t piece of the ideal generated by forms g_i is spanned by the
products m * g_i over monomials m of degree t - deg(g_i); its rank gives
h(t) = C(t+r, r) - rank for the quotient.  The dimension detector evaluates
h on a window and infers the degree of the eventual Hilbert polynomial from
successive finite differences, widening the window until the inferred degree
is stable.  The window start is a heuristic (rigorous regularity bounds are
impractical here), which is why experiments cross-check against point counts.
"""

from __future__ import annotations

import numpy as np

from ..combinatorics import binomial
from ..errors import BudgetError, ParameterError
from .fields import Field
from .linalg import matrix_rank
from .polynomials import MultiPoly, monomial_index, monomials, n_monomials

MAX_MATRIX_ENTRIES = 4_000_000
MAX_WINDOW_STEPS = 48


def _live_generators(generators) -> list[MultiPoly]:
    return [g for g in generators if not g.is_zero]


def _ring_of(generators, field, r):
    gens = list(generators)
    if gens:
        field = gens[0].field
        r = gens[0].r
        for g in gens:
            if g.field is not field or g.r != r:
                raise ParameterError("generators live over different rings")
    if field is None or r is None:
        raise ParameterError("field and r are required when no generators are given")
    return field, r


class GradedIdealPiece:
    """The degree-t graded piece of the ideal spanned by the generators."""

    def __init__(self, generators, t: int, field: Field | None = None, r: int | None = None,
                 max_entries: int = MAX_MATRIX_ENTRIES):
        self.field, self.r = _ring_of(generators, field, r)
        self.t = t
        self.generators = _live_generators(generators)
        ncols = n_monomials(self.r, t)
        nrows = sum(
            n_monomials(self.r, t - g.d) for g in self.generators if g.d <= t
        )
        if nrows * ncols > max_entries:
            raise BudgetError(
                f"degree-{t} piece needs a {nrows}x{ncols} matrix, over the budget"
            )
        self.ncols = ncols
        self.matrix = self._build(nrows, ncols)
        self._rank: int | None = None

    def _build(self, nrows: int, ncols: int) -> np.ndarray:
        index = monomial_index(self.r, self.t)
        matrix = np.zeros((nrows, ncols), dtype=np.uint16)
        row = 0
        for g in self.generators:
            if g.d > self.t:
                continue
            support = list(g.support())
            for m in monomials(self.r, self.t - g.d):
                for exp, code in support:
                    col = index[tuple(a + b for a, b in zip(m, exp))]
                    # multiplying by a monomial leaves the coefficient alone
                    matrix[row, col] = code
                row += 1
        return matrix

    def rank(self) -> int:
        if self._rank is None:
            self._rank = matrix_rank(self.field, self.matrix)
        return self._rank


def hilbert_function(generators, t: int, field: Field | None = None, r: int | None = None,
                     max_entries: int = MAX_MATRIX_ENTRIES) -> int:
    """Dimension of the degree-t graded piece of the quotient ring."""
    if t < 0:
        raise ParameterError(f"need t >= 0, got {t}")
    piece = GradedIdealPiece(generators, t, field=field, r=r, max_entries=max_entries)
    return n_monomials(piece.r, t) - piece.rank()


def _tail_degree(values) -> int | None:
    """Degree of the polynomial interpolating the window, or None when the
    differences do not vanish within the window (not yet polynomial)."""
    cur = list(values)
    level = 0
    while True:
        if all(v == 0 for v in cur):
            return level - 1
        if len(cur) < 2:
            return None
        cur = [b - a for a, b in zip(cur, cur[1:])]
        level += 1


def projective_dim_hilbert(generators, field: Field | None = None, r: int | None = None,
                           max_steps: int = MAX_WINDOW_STEPS,
                           max_entries: int = MAX_MATRIX_ENTRIES) -> int:
    """Projective dimension of the common vanishing locus, in {-1, 0, ..., r}.

    -1 encodes the empty scheme.  The window starts at
    t0 = sum(deg g_i - 1) + 1 and widens until the inferred Hilbert
    polynomial degree agrees across r + 2 consecutive window ends.
    """
    field, r = _ring_of(generators, field, r)
    gens = _live_generators(generators)
    if not gens:
        return r
    t0 = sum(g.d - 1 for g in gens) + 1
    window = r + 2

    values: list[int] = []
    estimates: list[int | None] = []
    for step in range(max_steps):
        t = t0 + step
        values.append(hilbert_function(gens, t, max_entries=max_entries))
        if len(values) >= window:
            est = _tail_degree(values[-window:])
            if est is not None and est > r:
                est = None  # projective dimension cannot exceed r: keep widening
            estimates.append(est)
            tail = estimates[-window:]
            if (
                len(tail) == window
                and tail[0] is not None
                and all(e == tail[0] for e in tail)
            ):
                return tail[0]
    raise BudgetError(
        f"Hilbert dimension did not stabilize within {max_steps} steps "
        f"(generators of degrees {[g.d for g in gens]})"
    )
