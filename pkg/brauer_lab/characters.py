"""Symplectic character combinatorics.

Weyl characters of Sp(2m) as exact alternant ratios, the Weyl dimension
formula, tensor-power multiplicities (up-down paths and character
subtraction), the saturated sets ``pi_f``, type C dominance, and
standard tableaux counts.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

try:
    from . import config
except ImportError:
    import brauer_lab.config as config

logger = config.get_file_logger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; the empty partition has no parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"{list(self.parts)} is not a partition")

    @classmethod
    def of(cls, parts: Iterable[int]) -> "Partition":
        """Build from any sequence, dropping zero parts."""
        return cls(tuple(int(p) for p in parts if p))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("[]()")
        return cls.of(int(tok) for tok in body.split(",") if tok.strip())

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def padded(self, m: int) -> tuple[int, ...]:
        if self.length > m:
            raise ValueError(f"{self} has more than {m} parts")
        return self.parts + (0,) * (m - self.length)

    def hooks(self) -> list[int]:
        conj = self.conjugate().parts
        return [
            (part - c - 1) + (conj[c] - r - 1) + 1
            for r, part in enumerate(self.parts)
            for c in range(part)
        ]

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition.of(lam)


def partitions(k: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``k`` in decreasing lexicographic order."""
    if k == 0:
        yield Partition()
        return
    if max_parts == 0:
        return
    top = k if max_part is None else min(k, max_part)
    for first in range(top, 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(k - first, rest_parts, first):
            yield Partition((first,) + rest.parts)


# ---------------------------------------------------------------------------
# Characters
# ---------------------------------------------------------------------------


class CharPoly:
    """Integer Laurent polynomial in ``x_1..x_m`` keyed by exponent vectors."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.m = m
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def vector_character(cls, m: int) -> "CharPoly":
        terms = {}
        for i in range(m):
            for sign in (1, -1):
                exp = [0] * m
                exp[i] = sign
                terms[tuple(exp)] = 1
        return cls(m, terms)

    @classmethod
    def one(cls, m: int) -> "CharPoly":
        return cls(m, {(0,) * m: 1})

    def __add__(self, other: "CharPoly") -> "CharPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CharPoly(self.m, out)

    def __sub__(self, other: "CharPoly") -> "CharPoly":
        return self + other.scale(-1)

    def scale(self, k: int) -> "CharPoly":
        return CharPoly(self.m, {e: k * c for e, c in self.terms.items()})

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        out: dict[tuple[int, ...], int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return CharPoly(self.m, out)

    def __pow__(self, k: int) -> "CharPoly":
        result = CharPoly.one(self.m)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def evaluate_at_one(self) -> int:
        return sum(self.terms.values())

    def act(self, perm: Sequence[int], signs: Sequence[int]) -> "CharPoly":
        """Apply the signed permutation ``x_i -> x_{perm[i]}^{signs[i]}``."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * self.m
            for i, a in enumerate(e):
                new[perm[i]] = signs[i] * a
            out[tuple(new)] = c
        return CharPoly(self.m, out)

    def is_weyl_invariant(self) -> bool:
        return all(self.act(perm, signs) == self for perm, signs, _ in weyl_group(self.m))

    def dominant_exponents(self) -> list[tuple[int, ...]]:
        return [e for e in self.terms if is_dominant(e)]


def is_dominant(exp: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(exp, exp[1:])) and (not exp or exp[-1] >= 0)


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def weyl_group(m: int) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """Signed permutations ``(perm, signs, determinant)`` of the type C_m Weyl group."""
    elements = []
    for perm in itertools.permutations(range(m)):
        for signs in itertools.product((1, -1), repeat=m):
            det = _perm_sign(perm) * (-1) ** signs.count(-1)
            elements.append((perm, signs, det))
    return tuple(elements)


def rho(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def alternant(mu: Sequence[int], m: int) -> CharPoly:
    """``sum_w det(w) x^{w mu}`` over the Weyl group."""
    terms: dict[tuple[int, ...], int] = defaultdict(int)
    for perm, signs, det in weyl_group(m):
        exp = [0] * m
        for i, a in enumerate(mu):
            exp[perm[i]] = signs[i] * a
        terms[tuple(exp)] += det
    return CharPoly(m, terms)


def _divide_exact(num: CharPoly, den: CharPoly, limit: int = 10**6) -> CharPoly:
    """Exact division with respect to the lexicographic monomial order."""
    lead = max(den.terms)
    lead_coef = den.terms[lead]
    rem = dict(num.terms)
    quotient: dict[tuple[int, ...], int] = {}
    steps = 0
    while rem:
        top = max(rem)
        coef, leftover = divmod(rem[top], lead_coef)
        if leftover:
            raise ArithmeticError("character division is not exact")
        shift = tuple(a - b for a, b in zip(top, lead))
        quotient[shift] = quotient.get(shift, 0) + coef
        for e, c in den.terms.items():
            key = tuple(a + b for a, b in zip(shift, e))
            val = rem.get(key, 0) - coef * c
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
        steps += 1
        if steps > limit:
            raise ArithmeticError("character division does not terminate")
    return CharPoly(num.m, quotient)


def _check_length(lam: Partition, m: int) -> None:
    if lam.length > m:
        raise ValueError(f"{lam} has more than m={m} parts")


@lru_cache(maxsize=None)
def _weyl_character(lam: Partition, m: int) -> CharPoly:
    shifted = tuple(a + r for a, r in zip(lam.padded(m), rho(m)))
    return _divide_exact(alternant(shifted, m), alternant(rho(m), m))


def weyl_character(lam, m: int) -> CharPoly:
    """Character of the Weyl module of highest weight ``lam``."""
    lam = as_partition(lam)
    _check_length(lam, m)
    return _weyl_character(lam, m)


def dim_weyl(lam, m: int) -> int:
    """Weyl dimension formula over the positive roots of C_m."""
    lam = as_partition(lam)
    _check_length(lam, m)
    r = rho(m)
    shifted = [a + b for a, b in zip(lam.padded(m), r)]
    value = Fraction(1)
    for i in range(m):
        value *= Fraction(shifted[i], r[i])
        for j in range(i + 1, m):
            value *= Fraction((shifted[i] - shifted[j]) * (shifted[i] + shifted[j]),
                              (r[i] - r[j]) * (r[i] + r[j]))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {value} for {lam}")
    return int(value)


# ---------------------------------------------------------------------------
# Tensor powers of the vector representation
# ---------------------------------------------------------------------------


def neighbours(mu: Partition, m: int) -> list[Partition]:
    """Partitions with at most ``m`` rows obtained by adding or removing a box."""
    parts = list(mu.padded(m))
    out = []
    for i in range(m):
        if i == 0 or parts[i - 1] > parts[i]:
            grown = parts.copy()
            grown[i] += 1
            out.append(Partition.of(grown))
    for i in range(m):
        nxt = parts[i + 1] if i + 1 < m else 0
        if parts[i] > nxt:
            shrunk = parts.copy()
            shrunk[i] -= 1
            out.append(Partition.of(shrunk))
    return out


@lru_cache(maxsize=None)
def _updown_table(n: int, m: int) -> dict[Partition, int]:
    if n == 0:
        return {Partition(): 1}
    counts: dict[Partition, int] = defaultdict(int)
    for mu, c in _updown_table(n - 1, m).items():
        for nu in neighbours(mu, m):
            counts[nu] += c
    return dict(counts)


def tensor_multiplicity(lam, n: int, m: int) -> int:
    """Number of up-down paths of length ``n`` from the empty partition to ``lam``."""
    lam = as_partition(lam)
    _check_length(lam, m)
    if (n - lam.size) % 2 or lam.size > n:
        return 0
    return _updown_table(n, m).get(lam, 0)


def updown_count(lam, n: int, m: int) -> int:
    return tensor_multiplicity(lam, n, m)


def multiplicities(n: int, m: int) -> dict[Partition, int]:
    """All nonzero tensor multiplicities of the ``n``-th power."""
    return dict(sorted(_updown_table(n, m).items(), key=lambda item: (-item[0].size, item[0].parts)))


def decompose_power(n: int, m: int) -> dict[Partition, int]:
    """Decompose ``ch(V)^n`` by repeatedly removing the top dominant character."""
    remainder = CharPoly.vector_character(m) ** n
    result: dict[Partition, int] = {}
    while remainder:
        dominant = remainder.dominant_exponents()
        if not dominant:
            raise ArithmeticError("remainder has no dominant exponent")
        top = max(dominant)
        mult = remainder.terms[top]
        lam = Partition.of(top)
        result[lam] = result.get(lam, 0) + mult
        remainder = remainder - weyl_character(lam, m).scale(mult)
    logger.debug("decompose_power n=%d m=%d -> %d summands", n, m, len(result))
    return result


def pi_f(n: int, f: int, m: int) -> list[Partition]:
    """Partitions of ``n-2f, n-2f-2, ...`` with at most ``m`` parts."""
    if not 0 <= f <= n // 2:
        raise ValueError(f"f={f} is out of range for n={n}")
    out = []
    for size in range(n - 2 * f, -1, -2):
        out.extend(partitions(size, max_parts=m))
    return out


def dominance_leq(lam, mu, m: int) -> bool:
    """``lam <= mu`` iff ``mu - lam`` is a non-negative combination of the simple roots."""
    a = as_partition(lam).padded(m)
    b = as_partition(mu).padded(m)
    diff = [y - x for x, y in zip(a, b)]
    prefix = 0
    for d in diff[:-1]:
        prefix += d
        if prefix < 0:
            return False
    total = sum(diff)
    return total >= 0 and total % 2 == 0


def standard_tableaux_count(lam) -> int:
    """Hook length formula."""
    lam = as_partition(lam)
    hooks = 1
    for h in lam.hooks():
        hooks *= h
    return factorial(lam.size) // hooks
