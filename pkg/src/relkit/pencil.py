"""The two linear relations attached to a matrix pencil ``sE - F``."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeMismatch
from .field import as_scalar
from .linalg import Subspace, kernel
from .relation import LinearRelation


@dataclass(frozen=True)
class Pencil:
    E: tuple
    F: tuple

    def __post_init__(self):
        if len(self.E) != len(self.F):
            raise ShapeMismatch("E and F have different row counts")
        widths = {len(r) for r in self.E} | {len(r) for r in self.F}
        if len(widths) > 1:
            raise ShapeMismatch("E and F must be matrices of equal shape")

    @classmethod
    def of(cls, E, F) -> "Pencil":
        conv = lambda M: tuple(tuple(as_scalar(a) for a in row) for row in M)
        return cls(conv(E), conv(F))

    @property
    def shape(self) -> tuple[int, int]:
        rows = len(self.E)
        return rows, (len(self.E[0]) if rows else 0)


def kernel_rep(P: Pencil) -> LinearRelation:
    """``{(x, y) : Fx = Ey}`` in ``F^m``."""
    n, m = P.shape
    rows = [list(P.F[i]) + [-a for a in P.E[i]] for i in range(n)]
    K = kernel(rows, 2 * m) if rows else Subspace.full(2 * m)
    return LinearRelation(m, K)


def range_rep(P: Pencil) -> LinearRelation:
    """``{(Ex, Fx) : x in F^m}`` in ``F^n``."""
    n, m = P.shape
    cols = [tuple(P.E[i][j] for i in range(n)) + tuple(P.F[i][j] for i in range(n)) for j in range(m)]
    return LinearRelation(n, Subspace.span(cols, 2 * n))
