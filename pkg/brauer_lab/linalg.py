"""Exact sparse linear algebra over the rationals and prime fields.

Vectors are sparse dicts ``column -> scalar`` without stored zeros. The
workhorse is :class:`EchelonBasis`, an incrementally grown echelon basis;
:class:`Subspace` is its canonical (reduced row echelon) frozen form, so two
equal subspaces compare equal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

try:
    from . import config
    from .scalars import FieldSpec, Scalar
except ImportError:
    import brauer_lab.config as config
    from brauer_lab.scalars import FieldSpec, Scalar

logger = config.get_file_logger(__name__)

Vector = dict


def add_scaled(target: dict, source: Mapping, factor) -> None:
    """In place ``target += factor * source`` dropping zeros."""
    for col, val in source.items():
        cur = target.get(col)
        new = factor * val if cur is None else cur + factor * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


def clean(vec: Mapping) -> dict:
    return {c: v for c, v in vec.items() if v}


class EchelonBasis:
    """Row echelon basis grown one vector at a time.

    Every stored row has a leading coefficient 1 at its pivot and zeros to
    the left of it. Rows are not reduced against later pivots until
    :meth:`to_subspace` is called.
    """

    def __init__(self, fld: FieldSpec):
        self.field = fld
        self._rows: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def reduce(self, vec: Mapping) -> dict:
        """Return the remainder of ``vec`` modulo the stored rows."""
        rows = self._rows
        r = clean(vec)
        heap = [c for c in r if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = r.get(c)
            if not coef:
                continue
            for col, val in rows[c].items():
                cur = r.get(col)
                new = -coef * val if cur is None else cur - coef * val
                if new:
                    if cur is None and col in rows:
                        heapq.heappush(heap, col)
                    r[col] = new
                else:
                    r.pop(col, None)
        return r

    def add(self, vec: Mapping) -> bool:
        """Add ``vec``; return True when it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        pivot = min(r)
        inv = self.field.one / r[pivot]
        self._rows[pivot] = {c: v * inv for c, v in r.items()}
        return True

    def extend(self, vectors: Iterable[Mapping]) -> int:
        added = 0
        for vec in vectors:
            added += self.add(vec)
        return added

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def reduced_rows(self) -> list[tuple[int, dict]]:
        """Fully reduced rows sorted by pivot (the RREF)."""
        reduced: dict[int, dict] = {}
        for p in sorted(self._rows, reverse=True):
            row = dict(self._rows[p])
            for c in sorted(col for col in row if col != p and col in reduced):
                coef = row.get(c)
                if coef:
                    add_scaled(row, reduced[c], -coef)
            reduced[p] = row
        return [(p, reduced[p]) for p in sorted(reduced)]

    def to_subspace(self, ambient: int) -> "Subspace":
        rows = self.reduced_rows()
        return Subspace(
            ambient=ambient,
            field=self.field,
            rows=tuple(tuple(sorted(row.items())) for _, row in rows),
            pivots=tuple(p for p, _ in rows),
        )


@dataclass(frozen=True)
class Subspace:
    """Canonical reduced-row-echelon basis of a subspace of ``field**ambient``."""

    ambient: int
    field: FieldSpec
    rows: tuple = ()
    pivots: tuple = ()

    @classmethod
    def zero(cls, ambient: int, fld: FieldSpec) -> "Subspace":
        return cls(ambient=ambient, field=fld)

    @classmethod
    def full(cls, ambient: int, fld: FieldSpec) -> "Subspace":
        one = fld.one
        return cls(
            ambient=ambient,
            field=fld,
            rows=tuple(((i, one),) for i in range(ambient)),
            pivots=tuple(range(ambient)),
        )

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @cached_property
    def vectors(self) -> list[dict]:
        return [dict(row) for row in self.rows]

    def reduce(self, vec: Mapping) -> dict:
        """Remainder of ``vec`` after clearing every pivot coordinate."""
        r = clean(vec)
        for p, row in zip(self.pivots, self.vectors):
            coef = vec.get(p)
            if coef:
                add_scaled(r, row, -coef)
        return r

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def coordinates(self, vec: Mapping) -> dict[int, Scalar]:
        """Coefficients of ``vec`` on the basis rows, keyed by row number."""
        if not self.contains(vec):
            raise ValueError("vector does not lie in the subspace")
        return {k: vec[p] for k, p in enumerate(self.pivots) if vec.get(p)}

    def echelon(self) -> EchelonBasis:
        basis = EchelonBasis(self.field)
        basis._rows = {p: dict(row) for p, row in zip(self.pivots, self.rows)}
        return basis

    def summary(self) -> dict:
        return {"dim": self.dim, "pivots": list(self.pivots)}


@dataclass
class ExactMatrix:
    """Sparse matrix over an exact field, one dict per row."""

    ncols: int
    field: FieldSpec
    rows: list = dc_field(default_factory=list)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], fld: FieldSpec, ncols: int | None = None):
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        sparse = []
        for row in rows:
            if len(row) != ncols:
                raise ValueError(f"row of length {len(row)} in a {ncols}-column matrix")
            sparse.append(clean({j: fld(x) for j, x in enumerate(row)}))
        return cls(ncols=ncols, field=fld, rows=sparse)

    @classmethod
    def from_sparse(cls, rows: Iterable[Mapping], ncols: int, fld: FieldSpec):
        return cls(ncols=ncols, field=fld, rows=[clean(r) for r in rows])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i].get(j, self.field.zero)

    def to_dense(self) -> np.ndarray:
        out = np.empty((self.nrows, self.ncols), dtype=object)
        out.fill(self.field.zero)
        for i, row in enumerate(self.rows):
            for j, val in row.items():
                out[i, j] = val
        return out

    def transpose(self) -> "ExactMatrix":
        cols: list[dict] = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, val in row.items():
                cols[j][i] = val
        return ExactMatrix(ncols=self.nrows, field=self.field, rows=cols)


def rref(m: ExactMatrix) -> tuple[ExactMatrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns."""
    basis = EchelonBasis(m.field)
    basis.extend(m.rows)
    reduced = basis.reduced_rows()
    rows = [row for _, row in reduced] + [{} for _ in range(m.nrows - len(reduced))]
    return ExactMatrix(ncols=m.ncols, field=m.field, rows=rows), len(reduced), [p for p, _ in reduced]


def rank(m: ExactMatrix) -> int:
    basis = EchelonBasis(m.field)
    basis.extend(m.rows)
    return basis.rank


def span(vectors: Iterable[Mapping], ambient: int, fld: FieldSpec) -> Subspace:
    basis = EchelonBasis(fld)
    basis.extend(vectors)
    return basis.to_subspace(ambient)


def kernel(m: ExactMatrix) -> Subspace:
    """Null space ``{x : M x = 0}`` as a canonical subspace of ``field**ncols``."""
    basis = EchelonBasis(m.field)
    basis.extend(m.rows)
    reduced = basis.reduced_rows()
    pivot_set = {p for p, _ in reduced}
    one = m.field.one
    vectors = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = {free: one}
        for p, row in reduced:
            coef = row.get(free)
            if coef:
                vec[p] = -coef
        vectors.append(vec)
    return span(vectors, m.ncols, m.field)


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise ValueError(f"ambient dimension mismatch: {a.ambient} vs {b.ambient}")
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field} vs {b.field}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return span(list(a.vectors) + list(b.vectors), a.ambient, a.field)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection via the kernel of the stacked system ``[A | -B]``."""
    _check_compatible(a, b)
    if not a.dim or not b.dim:
        return Subspace.zero(a.ambient, a.field)
    columns: dict[int, dict] = {}
    for i, vec in enumerate(a.vectors):
        for c, val in vec.items():
            columns.setdefault(c, {})[i] = val
    for j, vec in enumerate(b.vectors):
        for c, val in vec.items():
            columns.setdefault(c, {})[a.dim + j] = -val
    system = ExactMatrix(ncols=a.dim + b.dim, field=a.field, rows=list(columns.values()))
    combos = kernel(system)
    vectors = []
    for combo in combos.vectors:
        vec: dict = {}
        for i, coef in combo.items():
            if i < a.dim:
                add_scaled(vec, a.vectors[i], coef)
        vectors.append(vec)
    return span(vectors, a.ambient, a.field)


def contains(s: Subspace, vec: Mapping) -> bool:
    return s.contains(vec)


def is_subspace(a: Subspace, b: Subspace) -> bool:
    """True when ``a`` is contained in ``b``."""
    _check_compatible(a, b)
    return all(b.contains(v) for v in a.vectors)


def quotient_dimension(a: Subspace, b: Subspace) -> int:
    if not is_subspace(b, a):
        raise ValueError("quotient requires the second space inside the first")
    return a.dim - b.dim


def gram_rank(s: Sequence[Mapping], t: Sequence[Mapping], pairing: Callable, fld: FieldSpec) -> int:
    """Rank of the matrix ``[pairing(s_i, t_j)]``."""
    basis = EchelonBasis(fld)
    for vec in s:
        row = {}
        for j, other in enumerate(t):
            val = pairing(vec, other)
            if val:
                row[j] = val
        basis.add(row)
    logger.debug("gram_rank %d x %d -> %d", len(s), len(t), basis.rank)
    return basis.rank


class Subquotient:
    """The space ``sub / quot`` with representatives and coordinates.

    Representatives are the reduced echelon rows of ``sub`` taken modulo
    ``quot``; they have zeros at every pivot column of ``quot``.
    """

    def __init__(self, sub: Subspace, quot: Subspace | None = None):
        self.sub = sub
        self.quot = quot if quot is not None else Subspace.zero(sub.ambient, sub.field)
        _check_compatible(self.sub, self.quot)
        if not is_subspace(self.quot, self.sub):
            raise ValueError("quotient space is not contained in the subspace")
        basis = EchelonBasis(sub.field)
        basis.extend(self.quot.reduce(v) for v in sub.vectors)
        reduced = basis.reduced_rows()
        self.pivots = [p for p, _ in reduced]
        self.representatives = [row for _, row in reduced]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def coordinates(self, vec: Mapping) -> dict[int, Scalar]:
        """Coordinates of the class of ``vec``; ``vec`` must lie in ``sub``."""
        r = self.quot.reduce(vec)
        coords = {k: r[p] for k, p in enumerate(self.pivots) if r.get(p)}
        for k, coef in coords.items():
            add_scaled(r, self.representatives[k], -coef)
        if r:
            raise RuntimeError("vector leaves the subquotient; the space is not stable")
        return coords
