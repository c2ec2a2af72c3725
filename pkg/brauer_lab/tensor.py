"""The symplectic tensor space V^{(x)n} and the right Brauer action on it.

Basis vectors of ``V`` are indexed ``1..2m``; ``i' = 2m + 1 - i`` and the
skew form is ``<v_i, v_{i'}> = +1`` for ``i <= m`` and ``-1`` otherwise.
Tensor basis vectors are index tuples. For linear algebra, a tuple is
addressed by its position in lexicographic order.

Generators act on the right: ``s_j`` is the negated swap of factors ``j``
and ``j + 1``; ``e_j`` multiplies by ``-<v_{i_j}, v_{i_{j+1}}>`` and puts
``alpha`` in positions ``j, j + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

try:
    from . import config
    from .characters import as_partition
    from .diagrams import AlgebraElement, BrauerDiagram, Permutation, diagram_word, w_lambda, young_subgroup
    from .linalg import EchelonBasis, ExactMatrix, Subspace, kernel
    from .scalars import QQ, FieldSpec, Ring, render_scalar
except ImportError:
    import brauer_lab.config as config
    from brauer_lab.characters import as_partition
    from brauer_lab.diagrams import AlgebraElement, BrauerDiagram, Permutation, diagram_word, w_lambda, young_subgroup
    from brauer_lab.linalg import EchelonBasis, ExactMatrix, Subspace, kernel
    from brauer_lab.scalars import QQ, FieldSpec, Ring, render_scalar

logger = config.get_file_logger(__name__)

TensorIndex = tuple
Weight = tuple


@dataclass(frozen=True)
class SymplecticSpace:
    """The 2m-dimensional symplectic space ``V``."""

    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be positive, got {self.m}")

    @property
    def dim(self) -> int:
        return 2 * self.m

    def _check(self, i: int) -> None:
        if not 1 <= i <= 2 * self.m:
            raise ValueError(f"basis index {i} is out of range 1..{2 * self.m}")

    def prime(self, i: int) -> int:
        self._check(i)
        return 2 * self.m + 1 - i

    def epsilon(self, i: int) -> int:
        self._check(i)
        return 1 if i <= self.m else -1

    def form(self, i: int, j: int) -> int:
        self._check(i)
        self._check(j)
        return self.epsilon(i) if j == self.prime(i) else 0

    def dual(self, i: int) -> tuple[int, int]:
        """``v_i^* = sign * v_{index}`` so that ``<v_i, v_j^*> = delta_ij``."""
        return self.prime(i), self.epsilon(i)

    def gram_matrix(self) -> np.ndarray:
        size = 2 * self.m
        return np.array([[self.form(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)], dtype=int)

    def j_matrix(self) -> np.ndarray:
        """``sum_{i<=m} E_{i,i'} - sum_{i>m} E_{i,i'}``."""
        size = 2 * self.m
        out = np.zeros((size, size), dtype=int)
        for i in range(1, size + 1):
            out[i - 1, size - i] = 1 if i <= self.m else -1
        return out

    def basis_weight(self, i: int) -> tuple[int, int]:
        """``(coordinate, +-1)``: ``v_i`` has weight ``+-epsilon_coordinate``."""
        self._check(i)
        return (i - 1, 1) if i <= self.m else (2 * self.m - i, -1)


def weight_of(idx: Sequence[int], m: int) -> Weight:
    """Weight of ``v_idx`` as an integer vector of length ``m``."""
    w = [0] * m
    for i in idx:
        if i <= m:
            w[i - 1] += 1
        else:
            w[2 * m - i] -= 1
    return tuple(w)


@lru_cache(maxsize=None)
def weight_blocks(m: int, n: int) -> dict[Weight, tuple[TensorIndex, ...]]:
    """All index tuples grouped by weight, each block in lexicographic order."""
    blocks: dict[Weight, list] = {}
    for idx in itertools.product(range(1, 2 * m + 1), repeat=n):
        blocks.setdefault(weight_of(idx, m), []).append(idx)
    return {w: tuple(b) for w, b in blocks.items()}


def weight_subspace(n: int, mu: Sequence[int], m: int) -> list[TensorIndex]:
    return list(weight_blocks(m, n).get(tuple(mu), ()))


def position_of(idx: Sequence[int], m: int, base: int | None = None) -> int:
    """Lexicographic position of ``idx``; digits run over ``1..base`` (``2m`` unless given)."""
    base = 2 * m if base is None else base
    pos = 0
    for i in idx:
        pos = pos * base + (i - 1)
    return pos


def index_at(pos: int, m: int, n: int, base: int | None = None) -> TensorIndex:
    base = 2 * m if base is None else base
    digits = []
    for _ in range(n):
        pos, r = divmod(pos, base)
        digits.append(r + 1)
    return tuple(reversed(digits))


class TensorVector:
    """A sparse vector of ``V^{(x)n}`` with exact coefficients in ``ring``."""

    __slots__ = ("space", "n", "coeffs", "ring")

    def __init__(self, space: SymplecticSpace, n: int, coeffs: Mapping[TensorIndex, object] | None = None,
                 ring: Ring = QQ, validate: bool = True):
        self.space = space
        self.n = n
        self.ring = ring
        clean = {}
        top = 2 * space.m
        for idx, c in (coeffs or {}).items():
            if validate:
                idx = tuple(idx)
                if len(idx) != n or any(not 1 <= i <= top for i in idx):
                    raise ValueError(f"index {idx} is not valid for m={space.m}, n={n}")
                c = ring(c)
            if c:
                clean[idx] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, space: SymplecticSpace, idx: Sequence[int], ring: Ring = QQ) -> "TensorVector":
        return cls(space, len(idx), {tuple(idx): 1}, ring)

    @classmethod
    def zero(cls, space: SymplecticSpace, n: int, ring: Ring = QQ) -> "TensorVector":
        return cls(space, n, {}, ring)

    @classmethod
    def from_positions(cls, space: SymplecticSpace, n: int, vec: Mapping[int, object], ring: Ring = QQ):
        return cls(space, n, {index_at(p, space.m, n): c for p, c in vec.items()}, ring, validate=False)

    def _like(self, coeffs: Mapping, n: int | None = None) -> "TensorVector":
        return TensorVector(self.space, self.n if n is None else n, coeffs, self.ring, validate=False)

    def _check(self, other: "TensorVector") -> None:
        if self.space != other.space or self.n != other.n:
            raise ValueError(f"size mismatch: (m={self.space.m}, n={self.n}) vs (m={other.space.m}, n={other.n})")

    def __add__(self, other: "TensorVector") -> "TensorVector":
        self._check(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            out[idx] = out[idx] + c if idx in out else c
        return self._like(out)

    def __neg__(self) -> "TensorVector":
        return self._like({idx: -c for idx, c in self.coeffs.items()})

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def scale(self, c) -> "TensorVector":
        c = self.ring(c) if isinstance(c, int) else c
        return self._like({idx: c * v for idx, v in self.coeffs.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def tensor(self, other: "TensorVector") -> "TensorVector":
        """``self (x) other``."""
        if self.space != other.space:
            raise ValueError("tensor factors live in different spaces")
        out = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                out[a + b] = ca * cb
        return self._like(out, n=self.n + other.n)

    def map_coefficients(self, fn, ring: Ring) -> "TensorVector":
        return TensorVector(self.space, self.n, {idx: fn(c) for idx, c in self.coeffs.items()}, ring, validate=False)

    def positions(self) -> dict[int, object]:
        m = self.space.m
        return {position_of(idx, m): c for idx, c in self.coeffs.items()}

    def to_dense(self) -> np.ndarray:
        out = np.empty((2 * self.space.m) ** self.n, dtype=object)
        out.fill(self.ring.zero)
        for pos, c in self.positions().items():
            out[pos] = c
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.space == other.space and self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        body = ", ".join(
            f"({','.join(map(str, idx))}): {render_scalar(c)}" for idx, c in sorted(self.coeffs.items()))
        return f"m={self.space.m};n={self.n};{{{body}}}"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Right action of the Brauer algebra
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _generator_image(idx: TensorIndex, kind: str, j: int, m: int) -> tuple[tuple[TensorIndex, int], ...]:
    a, b = idx[j - 1], idx[j]
    head, tail = idx[:j - 1], idx[j + 1:]
    if kind == "s":
        return ((head + (b, a) + tail, -1),)
    space = SymplecticSpace(m)
    pair = space.form(a, b)
    if not pair:
        return ()
    return tuple((head + (k, space.prime(k)) + tail, -pair * space.epsilon(k)) for k in range(1, 2 * m + 1))


def _apply_letter(v: TensorVector, kind: str, j: int) -> TensorVector:
    m = v.space.m
    out: dict = {}
    for idx, c in v.coeffs.items():
        for new, sign in _generator_image(idx, kind, j, m):
            val = c * sign
            out[new] = out[new] + val if new in out else val
    return v._like(out)


def act_generator(v: TensorVector, kind: str, j: int) -> TensorVector:
    """``v . s_j`` or ``v . e_j``."""
    if kind not in ("s", "e"):
        raise ValueError(f"unknown generator kind {kind!r}")
    if not 1 <= j <= v.n - 1:
        raise ValueError(f"generator index {j} is out of range for n={v.n}")
    return _apply_letter(v, kind, j)


def act_word(v: TensorVector, word: Iterable[tuple[str, int]]) -> TensorVector:
    for kind, j in word:
        v = act_generator(v, kind, j)
    return v


def act_diagram(v: TensorVector, d: BrauerDiagram) -> TensorVector:
    if d.n != v.n:
        raise ValueError(f"size mismatch: diagram n={d.n}, tensor n={v.n}")
    return act_word(v, diagram_word(d))


def act_element(v: TensorVector, a: AlgebraElement) -> TensorVector:
    """Right action of an algebra element whose loop value is ``-2m``."""
    expected = v.ring(-2 * v.space.m)
    if a.delta != expected:
        raise ValueError(f"delta mismatch: element has {a.delta}, the action needs {expected}")
    result = TensorVector.zero(v.space, v.n, v.ring)
    for d, c in a.terms.items():
        result = result + act_diagram(v, d).scale(c)
    return result


def act_permutation(v: TensorVector, sigma: Permutation) -> TensorVector:
    """Signed place action: factor ``k`` moves to position ``sigma(k)``, times ``(-1)^length``."""
    if sigma.n != v.n:
        raise ValueError(f"size mismatch: permutation n={sigma.n}, tensor n={v.n}")
    sign = sigma.sign()
    targets = [sigma(k) - 1 for k in range(1, v.n + 1)]
    out = {}
    for idx, c in v.coeffs.items():
        new = [0] * v.n
        for k, t in enumerate(targets):
            new[t] = idx[k]
        out[tuple(new)] = c if sign == 1 else -c
    return v._like(out)


def contraction(v: TensorVector, s: int, t: int) -> TensorVector:
    """``C_{s,t}``: pair factors ``s`` and ``t`` with the form and delete them."""
    if not 1 <= s < t <= v.n:
        raise ValueError(f"contraction positions ({s},{t}) out of range for n={v.n}")
    space = v.space
    out: dict = {}
    for idx, c in v.coeffs.items():
        pair = space.form(idx[s - 1], idx[t - 1])
        if not pair:
            continue
        new = idx[:s - 1] + idx[s:t - 1] + idx[t:]
        val = c * pair
        out[new] = out[new] + val if new in out else val
    return v._like(out, n=v.n - 2)


def contract_pairs(v: TensorVector, pairs: Sequence[tuple[int, int]]) -> TensorVector:
    """Contract along several disjoint position pairs at once."""
    space = v.space
    used = {p for pair in pairs for p in pair}
    keep = [k for k in range(1, v.n + 1) if k not in used]
    out: dict = {}
    for idx, c in v.coeffs.items():
        coeff = 1
        for s, t in pairs:
            coeff *= space.form(idx[s - 1], idx[t - 1])
            if not coeff:
                break
        if not coeff:
            continue
        new = tuple(idx[k - 1] for k in keep)
        val = c * coeff
        out[new] = out[new] + val if new in out else val
    return v._like(out, n=len(keep))


def expansion(w: TensorVector, s: int, t: int) -> TensorVector:
    """``D_{s,t}``: insert ``sum_k v_k`` at position ``s`` and ``v_k^*`` at position ``t``."""
    n = w.n + 2
    if not 1 <= s < t <= n:
        raise ValueError(f"expansion positions ({s},{t}) out of range for n={n}")
    space = w.space
    out: dict = {}
    for idx, c in w.coeffs.items():
        for k in range(1, 2 * space.m + 1):
            kd, sign = space.dual(k)
            rest = iter(idx)
            new = tuple(k if pos == s else kd if pos == t else next(rest) for pos in range(1, n + 1))
            val = c * sign
            out[new] = out[new] + val if new in out else val
    return w._like(out, n=n)


def bilinear(v: TensorVector, w: TensorVector) -> object:
    """``<v, w>`` extended from ``<v_I, v_J> = prod_s <v_{i_s}, v_{j_s}>``."""
    v._check(w)
    space = v.space
    total = v.ring.zero
    for idx, c in v.coeffs.items():
        partner = tuple(space.prime(i) for i in idx)
        d = w.coeffs.get(partner)
        if not d:
            continue
        sign = 1
        for i in idx:
            sign *= space.epsilon(i)
        total = total + (c * d if sign == 1 else -(c * d))
    return total


def pairing_dual(vec: Mapping[TensorIndex, object], space: SymplecticSpace) -> dict:
    """The functional ``<vec, .>`` as a sparse coefficient map on index tuples."""
    out = {}
    for idx, c in vec.items():
        sign = 1
        for i in idx:
            sign *= space.epsilon(i)
        out[tuple(space.prime(i) for i in idx)] = c if sign == 1 else -c
    return out


# ---------------------------------------------------------------------------
# Distinguished vectors
# ---------------------------------------------------------------------------


def alpha(space: SymplecticSpace, ring: Ring = QQ) -> TensorVector:
    """``sum_k v_k (x) v_k^*``."""
    coeffs = {}
    for k in range(1, 2 * space.m + 1):
        kd, sign = space.dual(k)
        coeffs[(k, kd)] = sign
    return TensorVector(space, 2, coeffs, ring)


def v_lambda(space: SymplecticSpace, lam, ring: Ring = QQ) -> TensorVector:
    """``v_1^{lam_1} (x) v_2^{lam_2} (x) ...``."""
    lam = as_partition(lam)
    if lam.length > space.m:
        raise ValueError(f"{lam} has more than m={space.m} parts")
    idx = tuple(r + 1 for r, part in enumerate(lam.parts) for _ in range(part))
    return TensorVector(space, len(idx), {idx: 1}, ring)


def alpha_power(space: SymplecticSpace, g: int, ring: Ring = QQ) -> TensorVector:
    result = TensorVector(space, 0, {(): 1}, ring)
    a = alpha(space, ring)
    for _ in range(g):
        result = result.tensor(a)
    return result


def z_vector(space: SymplecticSpace, g: int, lam, ring: Ring = QQ) -> TensorVector:
    """``alpha^{g} (x) v_lam`` acted on by ``w_lam`` and ``x_{lam'}`` on the last strands."""
    lam = as_partition(lam)
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    if lam.length > space.m:
        raise ValueError(f"{lam} has more than m={space.m} parts")
    n = 2 * g + lam.size
    if n < 1:
        raise ValueError("z needs at least one tensor factor")
    base = alpha_power(space, g, ring).tensor(v_lambda(space, lam, ring))
    base = act_permutation(base, w_lambda(lam.parts, n, offset=2 * g))
    result = TensorVector.zero(space, n, ring)
    for sigma in young_subgroup(lam.conjugate().parts, n, offset=2 * g):
        result = result + act_permutation(base, sigma)
    return result


# ---------------------------------------------------------------------------
# Weight-blocked subspaces of V^{(x)n}
# ---------------------------------------------------------------------------


def _assemble(bases: Iterable[EchelonBasis], ambient: int, fld: FieldSpec) -> Subspace:
    rows = []
    for basis in bases:
        rows.extend(basis.reduced_rows())
    rows.sort(key=lambda item: item[0])
    return Subspace(
        ambient=ambient,
        field=fld,
        rows=tuple(tuple(sorted(row.items())) for _, row in rows),
        pivots=tuple(p for p, _ in rows),
    )


def span_tensors(vectors: Iterable[TensorVector], m: int, n: int, fld: FieldSpec) -> Subspace:
    """Span of weight-homogeneous tensors, reduced one weight block at a time."""
    blocks: dict[Weight, EchelonBasis] = {}
    for vec in vectors:
        if not vec:
            continue
        w = weight_of(next(iter(vec.coeffs)), m)
        basis = blocks.get(w)
        if basis is None:
            basis = blocks[w] = EchelonBasis(fld)
        basis.add(vec.positions())
    return _assemble(blocks.values(), (2 * m) ** n, fld)


def operator_kernel(space: SymplecticSpace, n: int, images, fld: FieldSpec,
                    weights: Iterable[Weight] | None = None) -> Subspace:
    """Joint kernel of weight-preserving maps, solved per weight block.

    ``images(idx)`` yields one sparse dict ``target -> coefficient`` per map;
    targets of different maps must not collide. Only the listed ``weights``
    are solved; the kernel is zero on the other blocks.
    """
    m = space.m
    table = weight_blocks(m, n)
    chosen = table.keys() if weights is None else [tuple(w) for w in weights]
    bases = []
    for w in chosen:
        block = table.get(w, ())
        if not block:
            continue
        rows: dict = {}
        for col, idx in enumerate(block):
            for target, coeff in images(idx):
                if not coeff:
                    continue
                row = rows.setdefault(target, {})
                row[col] = row[col] + fld(coeff) if col in row else fld(coeff)
        local = kernel(ExactMatrix(ncols=len(block), field=fld, rows=list(rows.values())))
        basis = EchelonBasis(fld)
        for vec in local.vectors:
            basis.add({position_of(block[c], m): val for c, val in vec.items()})
        bases.append(basis)
    logger.debug("operator kernel for m=%d n=%d over %s", m, n, fld)
    return _assemble(bases, (2 * m) ** n, fld)


def dual_functional(vec: Mapping[int, object], space: SymplecticSpace, n: int) -> dict[int, object]:
    """Position-keyed version of :func:`pairing_dual`."""
    m = space.m
    indexed = {index_at(p, m, n): c for p, c in vec.items()}
    return {position_of(idx, m): c for idx, c in pairing_dual(indexed, space).items()}


def dot(a: Mapping[int, object], b: Mapping[int, object]):
    if len(a) > len(b):
        a, b = b, a
    total = 0
    for k, v in a.items():
        w = b.get(k)
        if w:
            total = v * w + total
    return total
