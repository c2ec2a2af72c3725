"""The quantized layer over Z[q, q^-1].

Matrices act on row vectors: ``v_row . M = sum_col M[row, col] v_col``, so
the matrix of a word is the product of its letters read left to right.
``T_j`` and ``E_j`` act through the local two-factor matrices ``beta'`` and
``gamma'``; at ``q = 1`` they become ``-s_j`` and ``e_j`` of the Brauer
action.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Mapping

try:
    from . import config
    from .characters import as_partition
    from .diagrams import Permutation, w_lambda, young_subgroup
    from .scalars import LAURENT, QQ, LaurentPoly, specialize_q1
    from .tensor import SymplecticSpace, TensorVector, act_generator, index_at, position_of, z_vector
except ImportError:
    import brauer_lab.config as config
    from brauer_lab.characters import as_partition
    from brauer_lab.diagrams import Permutation, w_lambda, young_subgroup
    from brauer_lab.scalars import LAURENT, QQ, LaurentPoly, specialize_q1
    from brauer_lab.tensor import SymplecticSpace, TensorVector, act_generator, index_at, position_of, z_vector

logger = config.get_file_logger(__name__)

Q = LaurentPoly.q(1)
Q_INV = LaurentPoly.q(-1)
ONE = LaurentPoly.constant(1)


@dataclass(frozen=True)
class RhoData:
    """``rho = (m, ..., 1, -1, ..., -m)`` and ``epsilon_i = sign(rho_i)``."""

    m: int

    @property
    def rho(self) -> tuple[int, ...]:
        return tuple(self.m + 1 - i if i <= self.m else -(i - self.m) for i in range(1, 2 * self.m + 1))

    @property
    def epsilon(self) -> tuple[int, ...]:
        return tuple(1 if r > 0 else -1 for r in self.rho)

    def prime(self, i: int) -> int:
        return 2 * self.m + 1 - i


@dataclass
class LaurentMatrix:
    """Sparse square matrix over Z[q, q^-1], one dict per nonempty row."""

    size: int
    rows: dict = dc_field(default_factory=dict)

    @classmethod
    def identity(cls, size: int) -> "LaurentMatrix":
        return cls(size, {i: {i: ONE} for i in range(size)})

    @classmethod
    def zero(cls, size: int) -> "LaurentMatrix":
        return cls(size)

    def entry(self, i: int, j: int) -> LaurentPoly:
        return self.rows.get(i, {}).get(j, LaurentPoly())

    def _check(self, other: "LaurentMatrix") -> None:
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        out = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            target = out.setdefault(i, {})
            for j, val in row.items():
                target[j] = target[j] + val if j in target else val
        return LaurentMatrix(self.size, _prune(out))

    def __neg__(self) -> "LaurentMatrix":
        return self.scale(-ONE)

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        return self + (-other)

    def scale(self, c) -> "LaurentMatrix":
        c = LAURENT(c)
        return LaurentMatrix(self.size, _prune({i: {j: c * v for j, v in row.items()} for i, row in self.rows.items()}))

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._check(other)
        out: dict = {}
        for i, row in self.rows.items():
            acc: dict = {}
            for k, a in row.items():
                for j, b in other.rows.get(k, {}).items():
                    acc[j] = acc[j] + a * b if j in acc else a * b
            out[i] = acc
        return LaurentMatrix(self.size, _prune(out))

    def apply(self, vec: Mapping[int, LaurentPoly]) -> dict[int, LaurentPoly]:
        """Row vector times matrix, on position-keyed sparse vectors."""
        out: dict = {}
        for i, c in vec.items():
            for j, a in self.rows.get(i, {}).items():
                out[j] = out[j] + c * a if j in out else c * a
        return {j: v for j, v in out.items() if v}

    def specialize(self) -> dict[int, dict[int, int]]:
        """Entrywise ``q -> 1`` with zeros dropped."""
        out = {}
        for i, row in self.rows.items():
            vals = {j: specialize_q1(v) for j, v in row.items()}
            vals = {j: v for j, v in vals.items() if v}
            if vals:
                out[i] = vals
        return out

    def first_difference(self, other: "LaurentMatrix") -> tuple[int, int, str, str] | None:
        self._check(other)
        for i in sorted(set(self.rows) | set(other.rows)):
            a, b = self.rows.get(i, {}), other.rows.get(i, {})
            for j in sorted(set(a) | set(b)):
                x, y = self.entry(i, j), other.entry(i, j)
                if x != y:
                    return i, j, str(x), str(y)
        return None

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.size == other.size and self.first_difference(other) is None

    __hash__ = None


def _prune(rows: dict) -> dict:
    out = {}
    for i, row in rows.items():
        clean = {j: v for j, v in row.items() if v}
        if clean:
            out[i] = clean
    return out


def _add(local: dict, src: tuple, dst: tuple, val: LaurentPoly) -> None:
    row = local.setdefault(src, {})
    row[dst] = row[dst] + val if dst in row else val


@lru_cache(maxsize=None)
def _beta_local(m: int) -> dict:
    data = RhoData(m)
    rho, eps = data.rho, data.epsilon
    local: dict = {}
    for i in range(1, 2 * m + 1):
        ip = data.prime(i)
        _add(local, (i, i), (i, i), Q)
        _add(local, (i, ip), (ip, i), Q_INV)
        for j in range(1, 2 * m + 1):
            if j not in (i, ip):
                _add(local, (i, j), (j, i), ONE)
    gap = Q - Q_INV
    for i in range(1, 2 * m + 1):
        for j in range(i + 1, 2 * m + 1):
            _add(local, (i, j), (i, j), gap)
            coeff = LaurentPoly.q(rho[j - 1] - rho[i - 1]) * (eps[i - 1] * eps[j - 1])
            _add(local, (i, data.prime(i)), (data.prime(j), j), -gap * coeff)
    return _prune(local)


@lru_cache(maxsize=None)
def _gamma_local(m: int) -> dict:
    data = RhoData(m)
    rho, eps = data.rho, data.epsilon
    local: dict = {}
    for i in range(1, 2 * m + 1):
        for j in range(1, 2 * m + 1):
            coeff = LaurentPoly.q(rho[j - 1] - rho[i - 1]) * (eps[i - 1] * eps[j - 1])
            _add(local, (i, data.prime(i)), (data.prime(j), j), coeff)
    return _prune(local)


@lru_cache(maxsize=None)
def _hecke_local(m: int) -> dict:
    local: dict = {}
    for i in range(1, m + 1):
        _add(local, (i, i), (i, i), Q)
        for j in range(1, m + 1):
            if i != j:
                _add(local, (i, j), (j, i), ONE)
            if i < j:
                _add(local, (i, j), (i, j), Q - Q_INV)
    return _prune(local)


def _local_matrix(local: dict, dim: int) -> LaurentMatrix:
    rows = {}
    for (a, b), row in local.items():
        rows[(a - 1) * dim + (b - 1)] = {(c - 1) * dim + (d - 1): v for (c, d), v in row.items()}
    return LaurentMatrix(dim * dim, rows)


def beta_prime(m: int) -> LaurentMatrix:
    """``beta'`` on ``V (x) V`` (size ``4m^2``), basis ordered lexicographically."""
    return _local_matrix(_beta_local(m), 2 * m)


def gamma_prime(m: int) -> LaurentMatrix:
    return _local_matrix(_gamma_local(m), 2 * m)


def hecke_beta(m: int) -> LaurentMatrix:
    """``beta-hat`` on the span of ``v_1 .. v_m`` tensored twice (size ``m^2``)."""
    return _local_matrix(_hecke_local(m), m)


def _place(local: dict, j: int, n: int, m: int, base: int) -> LaurentMatrix:
    """``Id^{j-1} (x) local (x) Id^{n-j-1}`` on ``base^n`` coordinates."""
    if not 1 <= j <= n - 1:
        raise ValueError(f"generator index {j} is out of range for n={n}")
    rows = {}
    for idx in itertools.product(range(1, base + 1), repeat=n):
        pair = (idx[j - 1], idx[j])
        images = local.get(pair)
        if not images:
            continue
        src = position_of(idx, m, base=base)
        rows[src] = {position_of(idx[:j - 1] + tgt + idx[j + 1:], m, base=base): v for tgt, v in images.items()}
    return LaurentMatrix(base ** n, rows)


@lru_cache(maxsize=None)
def phi_c(gen: str, j: int, n: int, m: int) -> LaurentMatrix:
    """Matrix of ``T_j`` or ``E_j`` on ``V^{(x)n}``."""
    if gen == "T":
        local = _beta_local(m)
    elif gen == "E":
        local = _gamma_local(m)
    else:
        raise ValueError(f"unknown BMW generator {gen!r}")
    return _place(local, j, n, m, 2 * m)


@lru_cache(maxsize=None)
def phi_a(j: int, n: int, m: int) -> LaurentMatrix:
    """Matrix of the Hecke generator ``T-hat_j`` on ``V-hat^{(x)n}``."""
    return _place(_hecke_local(m), j, n, m, m)


def word_matrix(word: Iterable[tuple[str, int]], n: int, m: int) -> LaurentMatrix:
    result = LaurentMatrix.identity((2 * m) ** n)
    for gen, j in word:
        result = result @ phi_c(gen, j, n, m)
    return result


def delta_q(m: int) -> LaurentPoly:
    """``1 - sum_{a=-m}^{m} q^{2a}``."""
    return ONE - LaurentPoly({2 * a: 1 for a in range(-m, m + 1)})


def _relation_instances(n: int, m: int):
    """Yield ``(relation id, indices, lhs, rhs)`` for every instance of the eight families."""
    T = lambda j: phi_c("T", j, n, m)  # noqa: E731
    E = lambda j: phi_c("E", j, n, m)  # noqa: E731
    size = (2 * m) ** n
    ident = LaurentMatrix.identity(size)
    gap = Q - Q_INV
    twist = LaurentPoly.monomial(-1, -2 * m - 1)
    untwist = LaurentPoly.monomial(-1, 2 * m + 1)
    for i in range(1, n):
        # T - T^{-1} = (q - q^-1)(1 - E), multiplied through by T
        yield "1", (i,), T(i) @ T(i) - ident, (T(i) - E(i) @ T(i)).scale(gap)
        yield "2", (i,), E(i) @ E(i), E(i).scale(delta_q(m))
        yield "7", (i, "ET"), E(i) @ T(i), E(i).scale(twist)
        yield "7", (i, "TE"), T(i) @ E(i), E(i).scale(twist)
    for i in range(1, n - 1):
        yield "3", (i,), T(i) @ T(i + 1) @ T(i), T(i + 1) @ T(i) @ T(i + 1)
        yield "5", (i, "a"), E(i) @ E(i + 1) @ E(i), E(i)
        yield "5", (i, "b"), E(i + 1) @ E(i) @ E(i + 1), E(i + 1)
        yield "6", (i, "a"), T(i) @ T(i + 1) @ E(i), E(i + 1) @ E(i)
        yield "6", (i, "b"), T(i + 1) @ T(i) @ E(i + 1), E(i) @ E(i + 1)
        yield "8", (i, "a"), E(i) @ T(i + 1) @ E(i), E(i).scale(untwist)
        yield "8", (i, "b"), E(i + 1) @ T(i) @ E(i + 1), E(i + 1).scale(untwist)
    for i in range(1, n):
        for j in range(i + 2, n):
            yield "4", (i, j), T(i) @ T(j), T(j) @ T(i)


def check_bmw_relations(n: int, m: int) -> list[dict]:
    """Evaluate the eight relation families at every valid index.

    Returns one row per instance: ``relation``, ``indices``, ``pass`` and,
    on failure, ``witness`` (the first differing matrix entry).
    """
    if n < 2:
        raise ValueError(f"BMW relations need n >= 2, got {n}")
    rows = []
    for rel, indices, lhs, rhs in _relation_instances(n, m):
        diff = lhs.first_difference(rhs)
        row = {"relation": rel, "indices": list(indices), "pass": diff is None}
        if diff is not None:
            i, j, x, y = diff
            row["witness"] = {"row": list(index_at(i, m, n)), "col": list(index_at(j, m, n)), "lhs": x, "rhs": y}
            logger.warning("BMW relation %s failed at %s: %s", rel, indices, row["witness"])
        rows.append(row)
    return rows


def brauer_matrix(kind: str, j: int, n: int, m: int) -> dict[int, dict[int, int]]:
    """Integer matrix of the Brauer generator ``s_j`` or ``e_j`` in the row convention."""
    space = SymplecticSpace(m)
    out = {}
    for pos in range((2 * m) ** n):
        image = act_generator(TensorVector.basis(space, index_at(pos, m, n), QQ), kind, j)
        row = {p: int(c) for p, c in image.positions().items()}
        if row:
            out[pos] = row
    return out


def check_specialization(n: int, m: int) -> dict[str, bool]:
    """``T_j -> -s_j`` and ``E_j -> e_j`` at ``q = 1`` for every ``j``."""
    results = {}
    for j in range(1, n):
        swap = {i: {k: -v for k, v in row.items()} for i, row in brauer_matrix("s", j, n, m).items()}
        results[f"T{j}"] = phi_c("T", j, n, m).specialize() == swap
        results[f"E{j}"] = phi_c("E", j, n, m).specialize() == brauer_matrix("e", j, n, m)
    return results


# ---------------------------------------------------------------------------
# Quantized vectors
# ---------------------------------------------------------------------------


def _laurent_vector(space: SymplecticSpace, n: int, vec: Mapping[int, LaurentPoly]) -> TensorVector:
    return TensorVector(space, n, {index_at(p, space.m, n): c for p, c in vec.items()}, LAURENT, validate=False)


def act_bmw(v: TensorVector, word: Iterable[tuple[str, int]]) -> TensorVector:
    """Right action of a BMW word on a Laurent tensor."""
    vec = {position_of(idx, v.space.m): LAURENT(c) for idx, c in v.coeffs.items()}
    for gen, j in word:
        vec = phi_c(gen, j, v.n, v.space.m).apply(vec)
    return _laurent_vector(v.space, v.n, vec)


def alpha_q(space: SymplecticSpace) -> TensorVector:
    """``sum_k q^{-rho_k} epsilon_k v_k (x) v_k'``."""
    data = RhoData(space.m)
    coeffs = {}
    for k in range(1, 2 * space.m + 1):
        coeffs[(k, data.prime(k))] = LaurentPoly.monomial(data.epsilon[k - 1], -data.rho[k - 1])
    return TensorVector(space, 2, coeffs, LAURENT)


def _t_word(sigma: Permutation, last: bool = False) -> list[tuple[str, int]]:
    word = sigma.reduced_word_last() if last else sigma.reduced_word()
    return [("T", j) for j in word]


def z_q(space: SymplecticSpace, g: int, lam) -> TensorVector:
    """``alpha_q^{g} (x) v_lam`` acted on by ``T_{w_lam}`` and ``Y_{lam'}`` on the last strands."""
    lam = as_partition(lam)
    if g < 0:
        raise ValueError(f"g must be non-negative, got {g}")
    if lam.length > space.m:
        raise ValueError(f"{lam} has more than m={space.m} parts")
    n = 2 * g + lam.size
    if n < 1:
        raise ValueError("Z needs at least one tensor factor")
    base = TensorVector(space, 0, {(): LaurentPoly.constant(1)}, LAURENT)
    a = alpha_q(space)
    for _ in range(g):
        base = base.tensor(a)
    idx = tuple(r + 1 for r, part in enumerate(lam.parts) for _ in range(part))
    base = base.tensor(TensorVector(space, len(idx), {idx: LaurentPoly.constant(1)}, LAURENT))
    base = act_bmw(base, _t_word(w_lambda(lam.parts, n, offset=2 * g)))
    result = TensorVector.zero(space, n, LAURENT)
    for w in young_subgroup(lam.conjugate().parts, n, offset=2 * g):
        length = w.length()
        coeff = LaurentPoly.monomial((-1) ** length, -length)
        result = result + act_bmw(base, _t_word(w)).scale(coeff)
    return result


def specialize_vector(v: TensorVector) -> TensorVector:
    return v.map_coefficients(lambda c: QQ(specialize_q1(c)), QQ)


def check_z_specialization(space: SymplecticSpace, g: int, lam) -> bool:
    """``Z_q(g, lam)`` at ``q = 1`` equals ``(-1)^{length(w_lam)} z(g, lam)``."""
    lam = as_partition(lam)
    n = 2 * g + lam.size
    sign = w_lambda(lam.parts, n, offset=2 * g).sign()
    return specialize_vector(z_q(space, g, lam)) == z_vector(space, g, lam).scale(sign)


# ---------------------------------------------------------------------------
# Hecke algebra on V-hat
# ---------------------------------------------------------------------------


def _hecke_apply(vec: dict, word: Iterable[int], n: int, m: int) -> dict:
    for j in word:
        vec = phi_a(j, n, m).apply(vec)
    return vec


def _v_lambda_hat(lam, m: int) -> tuple[dict, int]:
    lam = as_partition(lam)
    if lam.length > m:
        raise ValueError(f"{lam} has more than m={m} parts")
    idx = tuple(r + 1 for r, part in enumerate(lam.parts) for _ in range(part))
    return {position_of(idx, m, base=m): LaurentPoly.constant(1)}, lam.size


def check_hecke(lam, m: int, samples: int = 20, seed: int = 0) -> bool:
    """``v_lam . T-hat_sigma = q^{length(sigma)} v_lam`` for generators and random elements of ``S_lam``."""
    lam = as_partition(lam)
    vec, n = _v_lambda_hat(lam, m)
    if n < 2:
        return True
    group = young_subgroup(lam.parts, n)
    rng = random.Random(seed)
    chosen = [w for w in group if w.length() == 1]
    chosen += [rng.choice(group) for _ in range(samples)]
    for sigma in chosen:
        image = _hecke_apply(dict(vec), sigma.reduced_word(), n, m)
        expected = {p: c * LaurentPoly.q(sigma.length()) for p, c in vec.items()}
        if image != expected:
            logger.warning("Hecke check failed for %s at %s", lam, sigma)
            return False
    return True


def check_hecke_relations(n: int, m: int) -> dict[str, bool]:
    """Quadratic, braid and far-commutation relations of ``T-hat`` on ``V-hat^{(x)n}``."""
    size = m ** n
    ident = LaurentMatrix.identity(size)
    out = {"quadratic": True, "braid": True, "commute": True}
    for i in range(1, n):
        t = phi_a(i, n, m)
        if (t - ident.scale(Q)) @ (t + ident.scale(Q_INV)) != LaurentMatrix.zero(size):
            out["quadratic"] = False
        if i + 1 < n:
            u = phi_a(i + 1, n, m)
            if t @ u @ t != u @ t @ u:
                out["braid"] = False
        for j in range(i + 2, n):
            u = phi_a(j, n, m)
            if t @ u != u @ t:
                out["commute"] = False
    return out


def x_q(lam, n: int) -> list[tuple[LaurentPoly, Permutation]]:
    """``X_lam = sum_w q^{length(w)} T_w`` as ``(coefficient, w)`` terms."""
    return [(LaurentPoly.q(w.length()), w) for w in young_subgroup(as_partition(lam).parts, n)]


def y_q(lam, n: int, offset: int = 0) -> list[tuple[LaurentPoly, Permutation]]:
    """``Y_lam = sum_w (-q)^{-length(w)} T_w``."""
    return [(LaurentPoly.monomial((-1) ** w.length(), -w.length()), w)
            for w in young_subgroup(as_partition(lam).parts, n, offset)]


def check_hat_agreement(lam, m: int) -> bool:
    """``v_lam T_{w_lam} Y_{lam'}`` computed with ``beta'`` and with ``beta-hat`` agree."""
    lam = as_partition(lam)
    space = SymplecticSpace(m)
    n = lam.size
    if n < 1:
        return True
    full = z_q(space, 0, lam)
    vec, _ = _v_lambda_hat(lam, m)
    vec = _hecke_apply(vec, w_lambda(lam.parts, n).reduced_word(), n, m)
    total: dict = {}
    for coeff, w in y_q(lam.conjugate().parts, n):
        for p, c in _hecke_apply(dict(vec), w.reduced_word(), n, m).items():
            total[p] = total[p] + coeff * c if p in total else coeff * c
    hat = {}
    for p, c in total.items():
        if c:
            idx = index_at(p, m, n, base=m)
            hat[idx] = c
    return full.coeffs == hat


def check_word_independence(sigma: Permutation, m: int) -> bool:
    """``T_w`` built from two different reduced words gives the same matrix."""
    n = sigma.n
    return word_matrix(_t_word(sigma), n, m) == word_matrix(_t_word(sigma, last=True), n, m)
