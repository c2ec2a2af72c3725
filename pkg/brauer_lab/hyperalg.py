"""Divided-power Chevalley operators of sp_2m on V^{(x)n}.

``raise_i = E_{i,i+1} - E_{(i+1)',i'}`` for ``i < m`` and
``raise_m = E_{m,m'}``; lowering operators are the transposes. Each
squares to zero on ``V``, so the divided power ``e^{(k)}`` acts on a
tensor as the sum over ``k``-subsets of positions of the one-box operator
applied at every position of the subset.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

try:
    from . import config
    from .characters import Partition
    from .linalg import EchelonBasis, ExactMatrix, Subquotient, Subspace, rank
    from .scalars import QQ, FieldSpec
    from .tensor import SymplecticSpace, TensorVector, alpha, index_at, operator_kernel, weight_of
except ImportError:
    import brauer_lab.config as config
    from brauer_lab.characters import Partition
    from brauer_lab.linalg import EchelonBasis, ExactMatrix, Subquotient, Subspace, rank
    from brauer_lab.scalars import QQ, FieldSpec
    from brauer_lab.tensor import SymplecticSpace, TensorVector, alpha, index_at, operator_kernel, weight_of

logger = config.get_file_logger(__name__)

KINDS = ("raise", "lower")


@dataclass(frozen=True)
class ChevalleyOp:
    """``raise_i^{(k)}`` or ``lower_i^{(k)}``."""

    kind: str
    i: int
    k: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.i < 1:
            raise ValueError(f"simple root index must be positive, got {self.i}")
        if self.k < 1:
            raise ValueError(f"divided power must be at least 1, got {self.k}")


@lru_cache(maxsize=None)
def one_box(kind: str, i: int, m: int) -> dict[int, tuple[int, int]]:
    """The operator on ``V`` as ``source index -> (target index, coefficient)``."""
    if kind not in KINDS:
        raise ValueError(f"unknown operator kind {kind!r}")
    if not 1 <= i <= m:
        raise ValueError(f"simple root index {i} is out of range 1..{m}")
    prime = lambda a: 2 * m + 1 - a  # noqa: E731
    if i < m:
        moves = {i + 1: (i, 1), prime(i): (prime(i + 1), -1)}
    else:
        moves = {prime(m): (m, 1)}
    if kind == "raise":
        return moves
    return {target: (source, coeff) for source, (target, coeff) in moves.items()}


def chevalley_matrix(kind: str, i: int, m: int) -> np.ndarray:
    """The ``2m x 2m`` integer matrix of the one-box operator (column convention)."""
    out = np.zeros((2 * m, 2 * m), dtype=int)
    for source, (target, coeff) in one_box(kind, i, m).items():
        out[target - 1, source - 1] = coeff
    return out


@lru_cache(maxsize=None)
def validate_chevalley(m: int) -> bool:
    """Check every generator preserves the form and kills ``alpha``.

    Raises :class:`config.ConfigurationError` on the first failure.
    """
    space = SymplecticSpace(m)
    j = space.j_matrix()
    a = alpha(space)
    for kind in KINDS:
        for i in range(1, m + 1):
            x = chevalley_matrix(kind, i, m)
            if np.any(x.T @ j + j @ x):
                raise config.ConfigurationError(f"{kind}_{i} does not preserve the form for m={m}")
            if np.any(x @ x):
                raise config.ConfigurationError(f"{kind}_{i} does not square to zero for m={m}")
            if act_divided(a, ChevalleyOp(kind, i, 1)):
                raise config.ConfigurationError(f"{kind}_{i} does not annihilate alpha for m={m}")
    logger.debug("Chevalley generators validated for m=%d", m)
    return True


def _divided_images(idx: tuple, op: ChevalleyOp, m: int):
    moves = one_box(op.kind, op.i, m)
    eligible = [p for p, a in enumerate(idx) if a in moves]
    for subset in itertools.combinations(eligible, op.k):
        new = list(idx)
        coeff = 1
        for p in subset:
            new[p], c = moves[idx[p]]
            coeff *= c
        yield tuple(new), coeff


def act_divided(v: TensorVector, op: ChevalleyOp) -> TensorVector:
    """``v`` acted on by the divided power ``op``."""
    if op.i > v.space.m:
        raise ValueError(f"simple root index {op.i} is out of range 1..{v.space.m}")
    out: dict = {}
    for idx, c in v.coeffs.items():
        for new, coeff in _divided_images(idx, op, v.space.m):
            val = c * coeff
            out[new] = out[new] + val if new in out else val
    return TensorVector(v.space, v.n, out, v.ring, validate=False)


def operators(m: int, n: int, kinds: Sequence[str] = KINDS) -> list[ChevalleyOp]:
    """Every divided power that can be nonzero on ``V^{(x)n}``."""
    return [ChevalleyOp(kind, i, k) for kind in kinds for i in range(1, m + 1) for k in range(1, n + 1)]


def _as_weight(lam, m: int) -> tuple[int, ...]:
    if isinstance(lam, Partition):
        return lam.padded(m)
    w = tuple(lam)
    if len(w) > m:
        if any(w[m:]):
            raise ValueError(f"weight {list(w)} has more than m={m} coordinates")
        w = w[:m]
    return w + (0,) * (m - len(w))


def maximal_vectors(space: SymplecticSpace, n: int, lam, fld: FieldSpec = QQ) -> Subspace:
    """Vectors of weight ``lam`` killed by every raising divided power."""
    validate_chevalley(space.m)
    w = _as_weight(lam, space.m)
    if list(w) != sorted(w, reverse=True) or (w and w[-1] < 0):
        raise ValueError(f"weight {list(w)} is not dominant")
    ops = operators(space.m, n, ("raise",))

    def images(idx):
        for number, op in enumerate(ops):
            out: dict = {}
            for new, coeff in _divided_images(idx, op, space.m):
                out[(number, new)] = out.get((number, new), 0) + coeff
            yield from out.items()

    result = operator_kernel(space, n, images, fld, weights=[w])
    logger.debug("maximal vectors m=%d n=%d weight=%s over %s: dim %d", space.m, n, w, fld, result.dim)
    return result


def _induced(quotient: Subquotient, space: SymplecticSpace, n: int, op: ChevalleyOp) -> list[dict[int, object]]:
    m = space.m
    fld = quotient.sub.field
    columns = []
    for rep in quotient.representatives:
        vec = TensorVector(space, n, {index_at(p, m, n): c for p, c in rep.items()}, fld, validate=False)
        columns.append(quotient.coordinates(act_divided(vec, op).positions()))
    return columns


def commutant_dimension(space: SymplecticSpace, n: int, sub: Subspace,
                        quotient_of: Subspace | None = None) -> int:
    """Dimension of the weight-preserving maps of ``sub / quotient_of`` commuting with every divided power.

    Both spaces must be stable under the operators; a :class:`RuntimeError`
    is raised when an image leaves them.
    """
    validate_chevalley(space.m)
    m = space.m
    fld = sub.field
    quotient = Subquotient(sub, quotient_of)
    dim = quotient.dim
    if not dim:
        return 0
    weights = [weight_of(index_at(p, m, n), m) for p in quotient.pivots]
    same: dict[tuple, list[int]] = {}
    for k, w in enumerate(weights):
        same.setdefault(w, []).append(k)
    variables: dict[tuple[int, int], int] = {}
    for members in same.values():
        for c in members:
            for d in members:
                variables[(c, d)] = len(variables)

    equations = EchelonBasis(fld)
    for op in operators(m, n):
        cols = _induced(quotient, space, n, op)
        rows: dict[tuple[int, int], dict] = {}
        for b in range(dim):
            for d, a in cols[b].items():
                for c in same[weights[d]]:
                    row = rows.setdefault((c, b), {})
                    var = variables[(c, d)]
                    row[var] = row[var] + a if var in row else a
            for e in same[weights[b]]:
                for c, a in cols[e].items():
                    row = rows.setdefault((c, b), {})
                    var = variables[(e, b)]
                    row[var] = row[var] - a if var in row else -a
        equations.extend(rows.values())
    result = len(variables) - equations.rank
    logger.info("commutant m=%d n=%d quotient dim %d: %d variables, dim %d", m, n, dim, len(variables), result)
    return result


def induced_rank(matrices: Sequence[Sequence[dict[int, object]]], dim: int, fld: FieldSpec) -> int:
    """Rank of a family of induced operators, each given as a list of sparse columns."""
    flat = []
    for columns in matrices:
        vec = {}
        for b, col in enumerate(columns):
            for c, val in col.items():
                vec[c * dim + b] = val
        flat.append(vec)
    return rank(ExactMatrix(ncols=dim * dim, field=fld, rows=flat))


def weight_shift(op: ChevalleyOp, m: int) -> tuple[int, ...]:
    """Weight added by ``op`` (``k`` times a simple root, negated for lowering)."""
    shift = [0] * m
    if op.i < m:
        shift[op.i - 1], shift[op.i] = 1, -1
    else:
        shift[m - 1] = 2
    sign = op.k if op.kind == "raise" else -op.k
    return tuple(sign * s for s in shift)
