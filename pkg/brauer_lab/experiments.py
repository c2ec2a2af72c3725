"""Verification checks over the tensor representation and the suite runner.

Each ``check_*`` function computes one identity over one coefficient field
and returns a :class:`CheckResult`. Suites group checks; :func:`run_suite`
expands an :class:`ExperimentSpec` into tasks, runs them on a thread pool
and consults the result cache.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, wraps
from typing import Any, Callable, Iterable, Sequence

try:
    from . import cache_utils, config
    from .bmw import (check_bmw_relations, check_hat_agreement, check_hecke, check_hecke_relations,
                      check_specialization, check_z_specialization)
    from .characters import (Partition, as_partition, dim_weyl, partitions, pi_f, standard_tableaux_count,
                             tensor_multiplicity, updown_count)
    from .diagrams import AlgebraElement, Permutation, all_diagrams, e_st, ideal_basis
    from .hyperalg import commutant_dimension, induced_rank, maximal_vectors
    from .linalg import EchelonBasis, Subquotient, Subspace, gram_rank, intersect, is_subspace
    from .scalars import QQ, FieldSpec
    from .tensor import (SymplecticSpace, TensorVector, act_diagram, act_generator, act_permutation, act_word,
                         alpha_power, contract_pairs, contraction, dot, dual_functional, operator_kernel,
                         span_tensors, z_vector)
except ImportError:
    import brauer_lab.cache_utils as cache_utils
    import brauer_lab.config as config
    from brauer_lab.bmw import (check_bmw_relations, check_hat_agreement, check_hecke, check_hecke_relations,
                                check_specialization, check_z_specialization)
    from brauer_lab.characters import (Partition, as_partition, dim_weyl, partitions, pi_f,
                                       standard_tableaux_count, tensor_multiplicity, updown_count)
    from brauer_lab.diagrams import AlgebraElement, Permutation, all_diagrams, e_st, ideal_basis
    from brauer_lab.hyperalg import commutant_dimension, induced_rank, maximal_vectors
    from brauer_lab.linalg import EchelonBasis, Subquotient, Subspace, gram_rank, intersect, is_subspace
    from brauer_lab.scalars import QQ, FieldSpec
    from brauer_lab.tensor import (SymplecticSpace, TensorVector, act_diagram, act_generator, act_permutation,
                                   act_word, alpha_power, contract_pairs, contraction, dot, dual_functional,
                                   operator_kernel, span_tensors, z_vector)

logger = config.get_file_logger(__name__)

PROVENANCE = ("THEOREM", "TRIVIAL", "DERIVED")
FAULTS = ("wrong-delta",)
EXPLORATORY_LIMIT = 24


@dataclass(frozen=True)
class ExperimentSpec:
    m: int
    n: int
    f: int | None = None
    g: int | None = None
    lam: tuple[int, ...] | None = None
    fields: tuple[FieldSpec, ...] = (QQ,)
    suite: str = "all"
    fault: str | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be positive, got m={self.m}, n={self.n}")
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.f is not None and not 0 <= self.f <= self.n // 2:
            raise ValueError(f"f={self.f} is out of range 0..{self.n // 2}")
        if self.g is not None and not 0 <= 2 * self.g <= self.n:
            raise ValueError(f"g={self.g} is out of range 0..{self.n // 2}")
        if self.lam is not None:
            lam = as_partition(self.lam)
            if lam.length > self.m:
                raise ValueError(f"{lam} has more than m={self.m} parts")
            if self.g is not None and lam.size != self.n - 2 * self.g:
                raise ValueError(f"{lam} is not a partition of n-2g={self.n - 2 * self.g}")
        if not self.fields:
            raise ValueError("at least one field is required")
        if self.fault is not None and self.fault not in FAULTS:
            raise ValueError(f"unknown fault {self.fault!r}")

    def f_values(self, start: int = 0) -> list[int]:
        if self.f is not None:
            return [self.f]
        return list(range(start, self.n // 2 + 1))

    def maximal_pairs(self) -> list[tuple[int, Partition]]:
        """``(g, lam)`` pairs to examine, all of them unless pinned."""
        out = []
        for g in range(self.n // 2 + 1):
            if self.g is not None and g != self.g:
                continue
            for lam in partitions(self.n - 2 * g, max_parts=self.m):
                if self.lam is not None and lam != as_partition(self.lam):
                    continue
                out.append((g, lam))
        return out


@dataclass
class CheckResult:
    check: str
    params: dict
    expected: Any
    expected_provenance: str
    computed: Any
    passed: bool
    millis: int | str = 0
    asserted: bool = True
    witness: Any = None
    details: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "check": self.check,
            "params": self.params,
            "expected": self.expected,
            "expected_provenance": self.expected_provenance,
            "computed": self.computed,
            "pass": self.passed,
            "millis": self.millis,
        }
        if not self.asserted:
            out["asserted"] = False
        if self.details is not None:
            out["details"] = self.details
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(
            check=data["check"],
            params=data["params"],
            expected=data["expected"],
            expected_provenance=data["expected_provenance"],
            computed=data["computed"],
            passed=data["pass"],
            millis=data.get("millis", 0),
            asserted=data.get("asserted", True),
            witness=data.get("witness"),
            details=data.get("details"),
        )


def timed(func: Callable[..., CheckResult]) -> Callable[..., CheckResult]:
    @wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        result.millis = int((time.perf_counter() - start) * 1000)
        return result

    return wrapper


def _field_params(m: int, n: int, fld: FieldSpec, **extra) -> dict:
    params = {"m": m, "n": n}
    params.update({k: v for k, v in extra.items() if v is not None})
    params["field"] = fld.name
    return params


# ---------------------------------------------------------------------------
# Distinguished subspaces
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    return tuple(Permutation(p) for p in itertools.permutations(range(1, n + 1)))


def _basis_vectors(space: SymplecticSpace, n: int, fld: FieldSpec):
    for idx in itertools.product(range(1, 2 * space.m + 1), repeat=n):
        yield TensorVector.basis(space, idx, fld)


@lru_cache(maxsize=64)
def ideal_image(m: int, n: int, f: int, fld: FieldSpec = QQ, method: str = "sweep") -> Subspace:
    """The image of ``V^{(x)n}`` under the ideal spanned by diagrams with ``>= f`` horizontal edges.

    ``method="sweep"`` spans ``(alpha^{f} (x) V^{(x)n-2f}) . sigma`` over all
    permutations; ``method="diagrams"`` acts with every ideal diagram on
    every basis vector.
    """
    if f < 0:
        raise ValueError(f"f must be non-negative, got {f}")
    space = SymplecticSpace(m)
    ambient = (2 * m) ** n
    if f == 0:
        return Subspace.full(ambient, fld)
    if 2 * f > n:
        return Subspace.zero(ambient, fld)
    if method == "diagrams":
        vectors = (act_diagram(v, d) for d in ideal_basis(n, f) for v in _basis_vectors(space, n, fld))
    elif method == "sweep":
        head = alpha_power(space, f, fld)
        heads = [head.tensor(tail) for tail in _basis_vectors(space, n - 2 * f, fld)]
        vectors = (act_permutation(v, sigma) for sigma in symmetric_group(n) for v in heads)
    else:
        raise ValueError(f"unknown method {method!r}")
    result = span_tensors(vectors, m, n, fld)
    logger.info("ideal image m=%d n=%d f=%d over %s: dim %d", m, n, f, fld, result.dim)
    return result


def partial_matchings(n: int, k: int) -> Iterable[tuple[tuple[int, int], ...]]:
    """Every set of ``k`` disjoint pairs of positions ``1..n``."""
    def perfect(points):
        if not points:
            yield ()
            return
        first = points[0]
        for i in range(1, len(points)):
            rest = points[1:i] + points[i + 1:]
            for tail in perfect(rest):
                yield ((first, points[i]),) + tail

    for chosen in itertools.combinations(range(1, n + 1), 2 * k):
        yield from perfect(chosen)


@lru_cache(maxsize=64)
def annihilator(m: int, n: int, f: int, fld: FieldSpec = QQ) -> Subspace:
    """Tensors killed by every diagram with at least ``f + 1`` horizontal edges.

    Such a tensor is exactly one whose contraction along every choice of
    ``f + 1`` disjoint position pairs vanishes.
    """
    space = SymplecticSpace(m)
    k = f + 1
    if 2 * k > n:
        return Subspace.full((2 * m) ** n, fld)
    matchings = list(partial_matchings(n, k))

    def images(idx):
        vec = TensorVector(space, n, {idx: 1}, fld, validate=False)
        for number, pairs in enumerate(matchings):
            for target, coeff in contract_pairs(vec, pairs).coeffs.items():
                yield (number, target), coeff

    return operator_kernel(space, n, images, fld)


@lru_cache(maxsize=64)
def harmonic_space(m: int, n: int, f: int, fld: FieldSpec = QQ) -> Subspace:
    """Partially harmonic tensors of valence ``f``."""
    result = intersect(ideal_image(m, n, f, fld), annihilator(m, n, f, fld))
    logger.info("harmonic space m=%d n=%d f=%d over %s: dim %d", m, n, f, fld, result.dim)
    return result


@lru_cache(maxsize=64)
def harmonic_tensors(m: int, n: int, fld: FieldSpec = QQ) -> Subspace:
    """Tensors killed by every contraction ``C_{s,t}``."""
    space = SymplecticSpace(m)
    pairs = [(s, t) for s in range(1, n + 1) for t in range(s + 1, n + 1)]

    def images(idx):
        vec = TensorVector(space, n, {idx: 1}, fld, validate=False)
        for s, t in pairs:
            for target, coeff in contraction(vec, s, t).coeffs.items():
                yield (s, t, target), coeff

    return operator_kernel(space, n, images, fld)


def diagram_kernel(m: int, n: int, diagrams: Sequence, fld: FieldSpec = QQ) -> Subspace:
    """Joint kernel of the action of ``diagrams``."""
    space = SymplecticSpace(m)

    def images(idx):
        vec = TensorVector(space, n, {idx: 1}, fld, validate=False)
        for number, d in enumerate(diagrams):
            for target, coeff in act_diagram(vec, d).coeffs.items():
                yield (number, target), coeff

    return operator_kernel(space, n, images, fld)


@lru_cache(maxsize=64)
def z_span(m: int, g: int, lam: Partition, fld: FieldSpec = QQ) -> Subspace:
    """The right submodule generated by ``z(g, lam)``, closed under the generators."""
    space = SymplecticSpace(m)
    z = z_vector(space, g, lam, fld)
    n = z.n
    basis = EchelonBasis(fld)
    basis.add(z.positions())
    queue = [z]
    letters = [(kind, j) for kind in ("s", "e") for j in range(1, n)]
    while queue:
        vec = queue.pop()
        for kind, j in letters:
            image = act_generator(vec, kind, j)
            if image and basis.add(image.positions()):
                queue.append(image)
    return basis.to_subspace((2 * m) ** n)


def induced_columns(quotient: Subquotient, space: SymplecticSpace, n: int, d) -> list[dict]:
    """Matrix of a diagram on a subquotient, as coordinate columns of the representatives."""
    fld = quotient.sub.field
    return [quotient.coordinates(act_diagram(TensorVector.from_positions(space, n, rep, fld), d).positions())
            for rep in quotient.representatives]


def quotient_space(m: int, n: int, f: int, fld: FieldSpec = QQ) -> Subquotient:
    """``V^{(x)n}`` modulo the ideal image; ``f = 0`` is the whole space."""
    full = Subspace.full((2 * m) ** n, fld)
    return Subquotient(full, ideal_image(m, n, f, fld) if f > 0 else None)


def quotient_support(n: int, f: int, m: int) -> list[Partition]:
    top = pi_f(n, 0, m)
    if f == 0:
        return top
    lower = set(pi_f(n, f, m))
    return [lam for lam in top if lam not in lower]


def _double_factorial(n: int) -> int:
    out = 1
    for k in range(2 * n - 1, 0, -2):
        out *= k
    return out


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def presentation_relations(n: int):
    """Yield ``(family, indices, lhs word, uses delta, rhs word)`` for the defining relations."""
    s = lambda i: ("s", i)  # noqa: E731
    e = lambda i: ("e", i)  # noqa: E731
    for i in range(1, n):
        yield "s_i^2", (i,), [s(i), s(i)], False, []
        yield "e_i^2", (i,), [e(i), e(i)], True, [e(i)]
        yield "e_i s_i", (i,), [e(i), s(i)], False, [e(i)]
        yield "s_i e_i", (i,), [s(i), e(i)], False, [e(i)]
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                if i < j:
                    yield "s_i s_j", (i, j), [s(i), s(j)], False, [s(j), s(i)]
                    yield "e_i e_j", (i, j), [e(i), e(j)], False, [e(j), e(i)]
                yield "s_i e_j", (i, j), [s(i), e(j)], False, [e(j), s(i)]
    for i in range(1, n - 1):
        yield "braid", (i,), [s(i), s(i + 1), s(i)], False, [s(i + 1), s(i), s(i + 1)]
        yield "e_i e_i+1 e_i", (i,), [e(i), e(i + 1), e(i)], False, [e(i)]
        yield "e_i+1 e_i e_i+1", (i,), [e(i + 1), e(i), e(i + 1)], False, [e(i + 1)]
        yield "s_i e_i+1 e_i", (i,), [s(i), e(i + 1), e(i)], False, [s(i + 1), e(i)]
        yield "e_i+1 e_i s_i+1", (i,), [e(i + 1), e(i), s(i + 1)], False, [e(i + 1), s(i)]


def _window(n: int, words: Iterable, m: int, fld: FieldSpec) -> Iterable[TensorVector]:
    """Basis tensors varying on the positions the words touch, ``1`` elsewhere."""
    space = SymplecticSpace(m)
    touched = sorted({p for word in words for _, j in word for p in (j, j + 1)})
    for values in itertools.product(range(1, 2 * m + 1), repeat=len(touched)):
        idx = [1] * n
        for p, val in zip(touched, values):
            idx[p - 1] = val
        yield TensorVector.basis(space, idx, fld)


@timed
def check_presentation(m: int, n: int, fld: FieldSpec = QQ, delta: int | None = None) -> CheckResult:
    """The defining relations hold for diagrams and on the tensor space."""
    loop = -2 * m if delta is None else delta
    total = diagram_ok = tensor_ok = 0
    witness = None
    for family, indices, lhs, uses_delta, rhs in presentation_relations(n):
        total += 1
        coeff = loop if uses_delta else 1
        left = AlgebraElement.from_word(lhs, n, fld, loop)
        right = AlgebraElement.from_word(rhs, n, fld, loop).scale(coeff)
        if left == right:
            diagram_ok += 1
        elif witness is None:
            witness = {"relation": family, "indices": list(indices), "side": "diagram"}
        good = True
        for v in _window(n, (lhs, rhs), m, fld):
            if act_word(v, lhs) != act_word(v, rhs).scale(coeff):
                good = False
                if witness is None:
                    witness = {"relation": family, "indices": list(indices), "side": "tensor",
                               "vector": list(next(iter(v.coeffs)))}
                break
        tensor_ok += good
    expected = {"diagram": total, "tensor": total}
    computed = {"diagram": diagram_ok, "tensor": tensor_ok}
    params = _field_params(m, n, fld, delta=delta)
    if witness is not None:
        logger.warning("presentation failed m=%d n=%d over %s: %s", m, n, fld, witness)
    return CheckResult("presentation", params, expected, "THEOREM", computed, expected == computed, witness=witness)


@timed
def check_basis_count(n: int) -> CheckResult:
    count = len(all_diagrams(n))
    expected = _double_factorial(n)
    return CheckResult("basis", {"n": n}, expected, "THEOREM", count, count == expected)


@timed
def check_ideal_dimension(m: int, n: int, f: int, fld: FieldSpec = QQ) -> CheckResult:
    expected = sum(dim_weyl(lam, m) * updown_count(lam, n, m) for lam in pi_f(n, f, m))
    computed = ideal_image(m, n, f, fld).dim
    return CheckResult("ideal", _field_params(m, n, fld, f=f), expected, "DERIVED", computed, computed == expected)


@timed
def check_duality(m: int, n: int, f: int, fld: FieldSpec = QQ) -> CheckResult:
    """Harmonic tensors have the quotient dimension and pair perfectly with it.

    Over a prime field only the vanishing of the pairing on the next ideal is
    asserted; the harmonic dimension and the pairing rank can drop or grow
    there (``(m, n, f) = (1, 3, 1)`` over F_3 pairs with rank 2, not 4) and
    are reported in ``details`` with a witness when they differ from the gap.
    """
    space = SymplecticSpace(m)
    upper = ideal_image(m, n, f, fld)
    lower = ideal_image(m, n, f + 1, fld)
    harmonic = harmonic_space(m, n, f, fld)
    duals = [dual_functional(v, space, n) for v in harmonic.vectors]
    gap = upper.dim - lower.dim
    details = {
        "pairing_rank": gram_rank(duals, upper.vectors, dot, fld),
        "pairing_on_lower": gram_rank(duals, lower.vectors, dot, fld),
    }
    params = _field_params(m, n, fld, f=f)
    if fld.characteristic == 0:
        details["meets_lower"] = intersect(harmonic, lower).dim
        passed = (harmonic.dim == gap and details["pairing_rank"] == gap
                  and details["pairing_on_lower"] == 0 and details["meets_lower"] == 0)
        return CheckResult("duality", params, gap, "DERIVED", harmonic.dim, passed, details=details)
    details.update(gap=gap, harmonic_dim=harmonic.dim)
    witness = None
    if harmonic.dim != gap or details["pairing_rank"] != gap:
        witness = {"field": fld.name, "gap": gap, "harmonic_dim": harmonic.dim,
                   "pairing_rank": details["pairing_rank"]}
        logger.info("duality over %s deviates from characteristic zero: %s", fld, witness)
    computed = {"pairing_on_lower": details["pairing_on_lower"]}
    return CheckResult("duality", params, {"pairing_on_lower": 0}, "TRIVIAL", computed,
                       computed["pairing_on_lower"] == 0, witness=witness, details=details)


@timed
def check_maximal(m: int, n: int, g: int, lam, fld: FieldSpec = QQ) -> CheckResult:
    """The submodule generated by ``z(g, lam)`` is the space of maximal vectors of weight ``lam``."""
    lam = as_partition(lam)
    if lam.size != n - 2 * g:
        raise ValueError(f"{lam} is not a partition of n-2g={n - 2 * g}")
    space = SymplecticSpace(m)
    maximal = maximal_vectors(space, n, lam, fld)
    generated = z_span(m, g, lam, fld)
    count = updown_count(lam, n, m)
    expected = {"dim_z_span": count, "dim_maximal": count, "equal": True}
    computed = {"dim_z_span": generated.dim, "dim_maximal": maximal.dim, "equal": generated == maximal}
    if g == 0:
        expected["standard_tableaux"] = standard_tableaux_count(lam.conjugate())
        computed["standard_tableaux"] = generated.dim
    params = _field_params(m, n, fld, g=g, lam=list(lam.parts))
    return CheckResult("maximal", params, expected, "DERIVED", computed, expected == computed)


@timed
def check_surjectivity(m: int, n: int, f: int, fld: FieldSpec = QQ) -> CheckResult:
    """Rank of the diagram image on the quotient equals its commutant dimension."""
    space = SymplecticSpace(m)
    quotient = quotient_space(m, n, f, fld)
    matrices = [induced_columns(quotient, space, n, d) for d in all_diagrams(n)]
    image_rank = induced_rank(matrices, quotient.dim, fld)
    commutant = commutant_dimension(space, n, quotient.sub, quotient.quot)
    prediction = sum(tensor_multiplicity(lam, n, m) ** 2 for lam in quotient_support(n, f, m))
    expected = {"image_rank": prediction, "commutant": prediction}
    computed = {"image_rank": image_rank, "commutant": commutant}
    return CheckResult("surjectivity", _field_params(m, n, fld, f=f), expected, "DERIVED", computed,
                       expected == computed)


@timed
def check_injectivity(m: int, n: int, fld: FieldSpec = QQ) -> CheckResult:
    """For ``m >= n`` the diagrams act by linearly independent operators."""
    if m < n:
        raise ValueError(f"injectivity needs m >= n, got m={m}, n={n}")
    space = SymplecticSpace(m)
    quotient = quotient_space(m, n, 0, fld)
    matrices = [induced_columns(quotient, space, n, d) for d in all_diagrams(n)]
    computed = induced_rank(matrices, quotient.dim, fld)
    expected = _double_factorial(n)
    return CheckResult("injectivity", _field_params(m, n, fld), expected, "THEOREM", computed, computed == expected)


@timed
def check_decomposition_sum(m: int, n: int, fld: FieldSpec = QQ) -> CheckResult:
    """``(2m)^n`` splits as Weyl dimensions times the dimensions of the ``z``-generated modules."""
    total = 0
    for g in range(n // 2 + 1):
        for lam in partitions(n - 2 * g, max_parts=m):
            total += dim_weyl(lam, m) * z_span(m, g, lam, fld).dim
    ideals_expected, ideals_computed = {}, {}
    chain = True
    for f in range(n // 2 + 1):
        ideals_expected[str(f)] = sum(dim_weyl(lam, m) * updown_count(lam, n, m) for lam in pi_f(n, f, m))
        ideals_computed[str(f)] = ideal_image(m, n, f, fld).dim
        chain = chain and is_subspace(ideal_image(m, n, f + 1, fld), ideal_image(m, n, f, fld))
    expected = {"total": (2 * m) ** n, "ideal": ideals_expected, "chain": True}
    computed = {"total": total, "ideal": ideals_computed, "chain": chain}
    return CheckResult("bookkeeping", _field_params(m, n, fld), expected, "DERIVED", computed, expected == computed)


@timed
def check_filtration_layers(m: int, n: int, fld: FieldSpec = QQ) -> CheckResult:
    """Each layer ``I(f) / I(f+1)`` has the dimension of its Weyl summands."""
    expected, computed = {}, {}
    for f in range(n // 2 + 1):
        layer = ideal_image(m, n, f, fld).dim - ideal_image(m, n, f + 1, fld).dim
        computed[str(f)] = layer
        expected[str(f)] = sum(tensor_multiplicity(lam, n, m) * dim_weyl(lam, m)
                               for lam in partitions(n - 2 * f, max_parts=m))
    return CheckResult("layers", _field_params(m, n, fld), expected, "DERIVED", computed, expected == computed)


@timed
def check_harmonic(m: int, n: int, fld: FieldSpec = QQ) -> CheckResult:
    """Kernel of all contractions equals the kernels of all ``e_{s,t}`` and of the ideal."""
    traceless = harmonic_tensors(m, n, fld)
    pairs = [e_st(s, t, n) for s in range(1, n + 1) for t in range(s + 1, n + 1)]
    e_kernel = diagram_kernel(m, n, pairs, fld)
    ideal_kernel = annihilator(m, n, 0, fld)
    expected_dim = sum(dim_weyl(lam, m) * standard_tableaux_count(lam) for lam in partitions(n, max_parts=m))
    expected = {"dim": expected_dim, "e_kernel_equal": True, "ideal_kernel_equal": True}
    computed = {"dim": traceless.dim, "e_kernel_equal": traceless == e_kernel,
                "ideal_kernel_equal": traceless == ideal_kernel}
    if n <= 4:
        literal = diagram_kernel(m, n, ideal_basis(n, 1), fld)
        expected["diagram_kernel_equal"] = True
        computed["diagram_kernel_equal"] = traceless == literal
    return CheckResult("harmonic", _field_params(m, n, fld), expected, "DERIVED", computed, expected == computed)


@timed
def check_field_independence(m: int, n: int, f: int, fields: Sequence[FieldSpec]) -> CheckResult:
    """Ideal and commutant dimensions agree over every field.

    Harmonic dimensions are recorded in ``details`` but not compared: they
    change with the characteristic (85, 86, 85, 87 over Q, F_2, F_3, F_5 for
    ``(m, n, f) = (2, 4, 1)``).
    """
    space = SymplecticSpace(m)
    computed, harmonic = {}, {}
    for fld in fields:
        quotient = quotient_space(m, n, f, fld)
        computed[fld.name] = {
            "ideal": ideal_image(m, n, f, fld).dim,
            "commutant": commutant_dimension(space, n, quotient.sub, quotient.quot),
        }
        harmonic[fld.name] = harmonic_space(m, n, f, fld).dim
    reference = computed[fields[0].name]
    passed = all(v == reference for v in computed.values())
    params = {"m": m, "n": n, "f": f, "fields": [fld.name for fld in fields]}
    details = {"harmonic": harmonic, "harmonic_agrees": len(set(harmonic.values())) == 1}
    return CheckResult("field-independence", params, reference, "THEOREM", computed, passed, details=details)


def brauer_commutant_dimension(quotient: Subquotient, space: SymplecticSpace, n: int) -> int:
    """Dimension of the maps of the quotient commuting with every Brauer generator."""
    dim = quotient.dim
    if dim > EXPLORATORY_LIMIT:
        raise config.BudgetExceededError(f"quotient of dimension {dim} is over the exploratory limit")
    fld = quotient.sub.field
    letters = [(kind, j) for kind in ("s", "e") for j in range(1, n)]
    equations = EchelonBasis(fld)
    for kind, j in letters:
        cols = [quotient.coordinates(act_generator(TensorVector.from_positions(space, n, rep, fld), kind, j)
                                     .positions())
                for rep in quotient.representatives]
        rows: dict = {}
        for b in range(dim):
            for d, a in cols[b].items():
                for c in range(dim):
                    row = rows.setdefault((c, b), {})
                    var = c * dim + d
                    row[var] = row[var] + a if var in row else a
            for e in range(dim):
                for c, a in cols[e].items():
                    row = rows.setdefault((c, b), {})
                    var = e * dim + b
                    row[var] = row[var] - a if var in row else -a
        equations.extend(rows.values())
    return dim * dim - equations.rank


@timed
def check_endomorphism_quotient(m: int, n: int, f: int, fields: Sequence[FieldSpec]) -> CheckResult:
    """Exploratory: Brauer-equivariant endomorphisms of the quotient against the group image."""
    space = SymplecticSpace(m)
    prediction = sum(dim_weyl(lam, m) ** 2 for lam in quotient_support(n, f, m))
    computed = {fld.name: brauer_commutant_dimension(quotient_space(m, n, f, fld), space, n) for fld in fields}
    passed = all(v == prediction for v in computed.values())
    params = {"m": m, "n": n, "f": f, "fields": [fld.name for fld in fields]}
    return CheckResult("endomorphism", params, prediction, "DERIVED", computed, passed, asserted=False)


@timed
def check_bmw(m: int, n: int) -> CheckResult:
    """Quantized relations, specialization at ``q = 1`` and the Hecke comparisons."""
    space = SymplecticSpace(m)
    rows = check_bmw_relations(n, m)
    failed = [row for row in rows if not row["pass"]]
    z_ok = all(check_z_specialization(space, g, lam)
               for size in range(1, n + 1)
               for g in range(size // 2 + 1)
               for lam in partitions(size - 2 * g, max_parts=m))
    small = [lam for size in range(1, n + 1) for lam in partitions(size, max_parts=m)]
    computed = {
        "relations_failed": len(failed),
        "specialization": all(check_specialization(n, m).values()),
        "z_specialization": z_ok,
        "hecke": all(check_hecke(lam, m) for lam in small),
        "hecke_relations": all(check_hecke_relations(n, m).values()),
        "hat_agreement": all(check_hat_agreement(lam, m) for lam in small),
    }
    expected = {"relations_failed": 0, "specialization": True, "z_specialization": True,
                 "hecke": True, "hecke_relations": True, "hat_agreement": True}
    witness = failed[0] if failed else None
    return CheckResult("bmw", {"m": m, "n": n}, expected, "THEOREM", computed, expected == computed, witness=witness)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Task:
    check: str
    params: dict = dc_field(compare=False)
    run: Callable[[], CheckResult] = dc_field(compare=False, repr=False)


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    provenance: str
    checks: tuple[str, ...]
    build: Callable[["ExperimentSpec"], list[Task]]
    asserted: bool = True


def _per_field(spec: ExperimentSpec, check: str, func, **kwargs) -> list[Task]:
    tasks = []
    for fld in spec.fields:
        shown = {k: list(v.parts) if isinstance(v, Partition) else v for k, v in kwargs.items()}
        params = _field_params(spec.m, spec.n, fld, **shown)
        tasks.append(Task(check, params, lambda fld=fld: func(spec.m, spec.n, fld=fld, **kwargs)))
    return tasks


def _build_presentation(spec: ExperimentSpec) -> list[Task]:
    delta = 2 * spec.m if spec.fault == "wrong-delta" else None
    tasks = []
    for fld in spec.fields:
        params = _field_params(spec.m, spec.n, fld, delta=delta)
        if spec.fault:
            params["fault"] = spec.fault
        tasks.append(Task("presentation", params,
                          lambda fld=fld: check_presentation(spec.m, spec.n, fld, delta)))
    return tasks


def _build_basis(spec: ExperimentSpec) -> list[Task]:
    return [Task("basis", {"n": spec.n}, lambda: check_basis_count(spec.n))]


def _build_ideal(spec: ExperimentSpec) -> list[Task]:
    return [t for f in spec.f_values(start=1) for t in _per_field(spec, "ideal", check_ideal_dimension, f=f)]


def _build_duality(spec: ExperimentSpec) -> list[Task]:
    return [t for f in spec.f_values() for t in _per_field(spec, "duality", check_duality, f=f)]


def _build_maximal(spec: ExperimentSpec) -> list[Task]:
    return [t for g, lam in spec.maximal_pairs()
            for t in _per_field(spec, "maximal", check_maximal, g=g, lam=lam)]


def _build_surjectivity(spec: ExperimentSpec) -> list[Task]:
    return [t for f in spec.f_values() for t in _per_field(spec, "surjectivity", check_surjectivity, f=f)]


def _build_injectivity(spec: ExperimentSpec) -> list[Task]:
    if spec.m < spec.n:
        logger.warning("injectivity suite skipped: needs m >= n (m=%d, n=%d)", spec.m, spec.n)
        return []
    return _per_field(spec, "injectivity", check_injectivity)


def _build_bookkeeping(spec: ExperimentSpec) -> list[Task]:
    tasks = [Task("bookkeeping", _field_params(spec.m, spec.n, QQ),
                  lambda: check_decomposition_sum(spec.m, spec.n, QQ))]
    return tasks + _per_field(spec, "layers", check_filtration_layers)


def _build_bmw(spec: ExperimentSpec) -> list[Task]:
    if spec.n < 2:
        return []
    return [Task("bmw", {"m": spec.m, "n": spec.n}, lambda: check_bmw(spec.m, spec.n))]


def _build_harmonic(spec: ExperimentSpec) -> list[Task]:
    return _per_field(spec, "harmonic", check_harmonic)


def _build_field_independence(spec: ExperimentSpec) -> list[Task]:
    names = [fld.name for fld in spec.fields]
    return [Task("field-independence", {"m": spec.m, "n": spec.n, "f": f, "fields": names},
                 lambda f=f: check_field_independence(spec.m, spec.n, f, spec.fields))
            for f in spec.f_values()]


def _build_endomorphism(spec: ExperimentSpec) -> list[Task]:
    names = [fld.name for fld in spec.fields]
    tasks = []
    for f in spec.f_values(start=1):
        if (2 * spec.m) ** spec.n - ideal_image(spec.m, spec.n, f, QQ).dim > EXPLORATORY_LIMIT:
            logger.info("endomorphism check skipped for m=%d n=%d f=%d: quotient too large", spec.m, spec.n, f)
            continue
        tasks.append(Task("endomorphism", {"m": spec.m, "n": spec.n, "f": f, "fields": names},
                          lambda f=f: check_endomorphism_quotient(spec.m, spec.n, f, spec.fields)))
    return tasks


SUITES: dict[str, Suite] = {
    "presentation": Suite("presentation", "defining relations of the Brauer algebra, diagrams and tensors",
                          "THEOREM", ("presentation",), _build_presentation),
    "basis": Suite("basis", "number of diagrams is (2n-1)!!", "THEOREM", ("basis",), _build_basis),
    "ideal": Suite("ideal", "dimension of the ideal image against the character sum", "DERIVED",
                   ("ideal",), _build_ideal),
    "duality": Suite("duality", "harmonic tensors are dual to the ideal layer", "DERIVED",
                     ("duality",), _build_duality),
    "maximal": Suite("maximal", "z-generated modules are the maximal vectors", "DERIVED",
                     ("maximal",), _build_maximal),
    "surjectivity": Suite("surjectivity", "diagram image equals the commutant on the quotient", "DERIVED",
                          ("surjectivity",), _build_surjectivity),
    "injectivity": Suite("injectivity", "diagrams act independently when m >= n", "THEOREM",
                         ("injectivity",), _build_injectivity),
    "bookkeeping": Suite("bookkeeping", "global dimension count and filtration layers", "DERIVED",
                         ("bookkeeping", "layers"), _build_bookkeeping),
    "bmw": Suite("bmw", "quantized relations and specialization at q=1", "THEOREM", ("bmw",), _build_bmw),
    "harmonic": Suite("harmonic", "traceless tensors as kernels of contractions and of the ideal", "DERIVED",
                      ("harmonic",), _build_harmonic),
    "field-independence": Suite("field-independence", "dimensions agree over every configured field",
                                "THEOREM", ("field-independence",), _build_field_independence),
    "endomorphism": Suite("endomorphism", "exploratory: Brauer-equivariant endomorphisms of the quotient",
                          "DERIVED", ("endomorphism",), _build_endomorphism, asserted=False),
}

CHECKS: dict[str, Suite] = {check: suite for suite in SUITES.values() for check in suite.checks}


def describe_check(check: str) -> dict:
    suite = CHECKS.get(check)
    if suite is None:
        raise ValueError(f"unknown check {check!r}")
    return {"check": check, "suite": suite.name, "description": suite.description,
            "provenance": suite.provenance, "asserted": suite.asserted}


def expand(spec: ExperimentSpec) -> list[Task]:
    names = list(SUITES) if spec.suite == "all" else [spec.suite]
    tasks = []
    for name in names:
        tasks.extend(SUITES[name].build(spec))
    logger.info("expanded suite %s for m=%d n=%d into %d tasks", spec.suite, spec.m, spec.n, len(tasks))
    return tasks


def _sort_key(result: CheckResult) -> tuple[str, str]:
    return result.check, json.dumps(result.params, sort_keys=True)


def _run_task(task: Task, cache_path: str | None) -> CheckResult:
    key = cache_utils.cache_key(task.check, task.params)
    if cache_path:
        cached = cache_utils.get_cached(cache_path, key)
        if cached is not None:
            result = CheckResult.from_dict(cached)
            result.millis = "cached"
            return result
    try:
        result = task.run()
    except Exception:
        logger.error("check %s failed with params %s", task.check, task.params, exc_info=True)
        raise
    if cache_path:
        cache_utils.store_result(cache_path, key, result.to_dict())
    return result


def run_suite(spec: ExperimentSpec, cache_path: str | None = None, budget: int | None = None) -> list[CheckResult]:
    """Run every task of ``spec`` and return results ordered by check and parameters."""
    config.check_budget(spec.m, spec.n, budget)
    tasks = expand(spec)
    if not tasks:
        return []
    workers = max(1, min(config.MAX_THREADS, len(tasks)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda task: _run_task(task, cache_path), tasks))
    results.sort(key=_sort_key)
    passed = sum(r.passed for r in results if r.asserted)
    logger.info("suite %s finished: %d of %d asserted checks passed", spec.suite, passed,
                sum(r.asserted for r in results))
    return results
