"""Brauer diagrams, permutations and the Brauer algebra.

Vertices of an n-diagram are encoded as integers: top vertex ``k`` is
``k - 1`` and bottom vertex ``k'`` is ``n + k - 1``. Diagrams are composed
top to bottom: in ``compose(d1, d2)`` the bottom row of ``d1`` is glued to
the top row of ``d2``.

Permutations multiply left to right, ``(p * q)(k) = q(p(k))``, so that
``permutation_diagram(p * q) == compose(permutation_diagram(p),
permutation_diagram(q))[0]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from threading import Lock
from typing import Iterable, Mapping, Sequence

try:
    from . import config
    from .scalars import QQ, Ring, Scalar, render_scalar
except ImportError:
    import brauer_lab.config as config
    from brauer_lab.scalars import QQ, Ring, Scalar, render_scalar

logger = config.get_file_logger(__name__)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{list(self.images)} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, j: int, n: int) -> "Permutation":
        """The simple transposition ``s_j`` swapping ``j`` and ``j + 1``."""
        if not 1 <= j < n:
            raise ValueError(f"s_{j} is out of range for n={n}")
        images = list(range(1, n + 1))
        images[j - 1], images[j] = images[j], images[j - 1]
        return cls(tuple(images))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "Permutation":
        """The product ``s_{j1} * s_{j2} * ...`` of simple transpositions."""
        result = cls.identity(n)
        for j in word:
            result = result * cls.transposition(j, n)
        return result

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(other(self(k)) for k in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for k, image in enumerate(self.images, start=1):
            inv[image - 1] = k
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Number of inversions, the Coxeter length."""
        imgs = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if imgs[a] > imgs[b])

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def _bubble_word(self, last: bool) -> list[int]:
        arr = list(self.images)
        word = []
        while True:
            descents = [j for j in range(len(arr) - 1) if arr[j] > arr[j + 1]]
            if not descents:
                return word
            j = descents[-1] if last else descents[0]
            word.append(j + 1)
            arr[j], arr[j + 1] = arr[j + 1], arr[j]

    def reduced_word(self) -> list[int]:
        """Reduced word by bubble sort, always resolving the first descent."""
        return self._bubble_word(last=False)

    def reduced_word_last(self) -> list[int]:
        """Reduced word by bubble sort, always resolving the last descent."""
        return self._bubble_word(last=True)

    def embed(self, n: int, offset: int) -> "Permutation":
        """Act on ``offset+1 .. offset+self.n`` inside ``S_n``."""
        if offset < 0 or offset + self.n > n:
            raise ValueError(f"cannot embed S_{self.n} at offset {offset} in S_{n}")
        images = list(range(1, n + 1))
        for k, image in enumerate(self.images, start=1):
            images[offset + k - 1] = offset + image
        return Permutation(tuple(images))

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------

_INTERN: dict[tuple, "BrauerDiagram"] = {}
_INTERN_LOCK = Lock()


def _vertex_label(v: int, n: int) -> str:
    return str(v + 1) if v < n else f"{v - n + 1}'"


def _parse_vertex(label: str, n: int) -> int:
    label = label.strip()
    if label.endswith("'"):
        k = int(label[:-1])
        if not 1 <= k <= n:
            raise ValueError(f"bottom vertex {label} out of range for n={n}")
        return n + k - 1
    k = int(label)
    if not 1 <= k <= n:
        raise ValueError(f"top vertex {label} out of range for n={n}")
    return k - 1


@dataclass(frozen=True)
class BrauerDiagram:
    """A perfect matching of the ``2n`` vertices; use :meth:`from_pairs`."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "BrauerDiagram":
        """Build (and intern) a diagram from encoded vertex pairs."""
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        edges = tuple(sorted((min(a, b), max(a, b)) for a, b in pairs))
        seen = [v for edge in edges for v in edge]
        if sorted(seen) != list(range(2 * n)):
            raise ValueError(f"edges {edges} are not a perfect matching on {2 * n} vertices")
        key = (n, edges)
        with _INTERN_LOCK:
            diagram = _INTERN.get(key)
            if diagram is None:
                diagram = cls(n, edges)
                _INTERN[key] = diagram
        return diagram

    @classmethod
    def from_labels(cls, n: int, pairs: Iterable[tuple[str | int, str | int]]) -> "BrauerDiagram":
        """Build from text labels such as ``(1, "2'")``."""
        return cls.from_pairs(n, [(_parse_vertex(str(a), n), _parse_vertex(str(b), n)) for a, b in pairs])

    @classmethod
    def parse(cls, text: str) -> "BrauerDiagram":
        """Parse the text format ``n=3;[(1,2),(3,1'),(2',3')]``."""
        try:
            head, body = text.strip().split(";", 1)
            if not head.startswith("n="):
                raise ValueError("missing n=")
            n = int(head[2:])
            body = body.strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise ValueError("edge list must be bracketed")
            inner = body[1:-1].strip()
            pairs = []
            if inner:
                for chunk in inner.split(")"):
                    chunk = chunk.strip().lstrip(",").strip()
                    if not chunk:
                        continue
                    a, b = chunk.lstrip("(").split(",")
                    pairs.append((_parse_vertex(a, n), _parse_vertex(b, n)))
        except ValueError as exc:
            raise ValueError(f"invalid diagram text {text!r}: {exc}") from exc
        return cls.from_pairs(n, pairs)

    @cached_property
    def mate(self) -> tuple[int, ...]:
        mate = [0] * (2 * self.n)
        for a, b in self.edges:
            mate[a], mate[b] = b, a
        return tuple(mate)

    def top_horizontal(self) -> list[tuple[int, int]]:
        """Top-row horizontal edges as 1-based ``(a, b)``, ``a < b``."""
        return [(a + 1, b + 1) for a, b in self.edges if b < self.n]

    def bottom_horizontal(self) -> list[tuple[int, int]]:
        return [(a - self.n + 1, b - self.n + 1) for a, b in self.edges if a >= self.n]

    def verticals(self) -> list[tuple[int, int]]:
        """Vertical edges as 1-based ``(top, bottom)``."""
        return [(a + 1, b - self.n + 1) for a, b in self.edges if a < self.n <= b]

    @property
    def horizontal_count(self) -> int:
        """Number of horizontal edges in each row."""
        return len(self.top_horizontal())

    def is_permutation(self) -> bool:
        return self.horizontal_count == 0

    def to_permutation(self) -> Permutation:
        if not self.is_permutation():
            raise ValueError(f"{self} has horizontal edges")
        images = [0] * self.n
        for top, bottom in self.verticals():
            images[top - 1] = bottom
        return Permutation(tuple(images))

    def __str__(self):
        body = ",".join(f"({_vertex_label(a, self.n)},{_vertex_label(b, self.n)})" for a, b in self.edges)
        return f"n={self.n};[{body}]"


def permutation_diagram(sigma: Permutation) -> BrauerDiagram:
    """Diagram joining top ``k`` to bottom ``sigma(k)``."""
    n = sigma.n
    return BrauerDiagram.from_pairs(n, [(k - 1, n + sigma(k) - 1) for k in range(1, n + 1)])


def identity_diagram(n: int) -> BrauerDiagram:
    return permutation_diagram(Permutation.identity(n))


def e_st(s: int, t: int, n: int) -> BrauerDiagram:
    """Join top ``s`` to top ``t`` and bottom ``s'`` to bottom ``t'``."""
    if not 1 <= s < t <= n:
        raise ValueError(f"e_({s},{t}) is out of range for n={n}")
    pairs = [(s - 1, t - 1), (n + s - 1, n + t - 1)]
    pairs += [(k - 1, n + k - 1) for k in range(1, n + 1) if k not in (s, t)]
    return BrauerDiagram.from_pairs(n, pairs)


def generator(kind: str, i: int, n: int) -> BrauerDiagram:
    """The generator ``s_i`` or ``e_i`` of the Brauer algebra."""
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} is out of range for n={n}")
    if kind == "s":
        return permutation_diagram(Permutation.transposition(i, n))
    if kind == "e":
        return e_st(i, i + 1, n)
    raise ValueError(f"unknown generator kind {kind!r}")


def e_block(f: int, n: int) -> BrauerDiagram:
    """The product ``e_1 e_3 ... e_{2f-1}`` as a diagram."""
    if not 0 <= 2 * f <= n:
        raise ValueError(f"cannot place {f} horizontal edges in n={n}")
    pairs = []
    for i in range(f):
        pairs.append((2 * i, 2 * i + 1))
        pairs.append((n + 2 * i, n + 2 * i + 1))
    pairs += [(k, n + k) for k in range(2 * f, n)]
    return BrauerDiagram.from_pairs(n, pairs)


@lru_cache(maxsize=1 << 16)
def compose(d1: BrauerDiagram, d2: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """Stack ``d1`` above ``d2``; return the composite and the number of loops.

    Nodes: top row ``0..n-1``, middle row ``n..2n-1``, bottom row
    ``2n..3n-1``. Side 1 edges come from ``d1``, side 2 edges from ``d2``;
    paths alternate between the two sides at every middle node.
    """
    if d1.n != d2.n:
        raise ValueError(f"size mismatch: {d1.n} vs {d2.n}")
    n = d1.n
    m1, m2 = d1.mate, d2.mate

    def step(node: int, side: int) -> int:
        if side == 1:
            return m1[node]
        return n + m2[node - n]

    seen = [False] * (3 * n)
    pairs = []
    for start in itertools.chain(range(n), range(2 * n, 3 * n)):
        if seen[start]:
            continue
        seen[start] = True
        side = 1 if start < n else 2
        node = start
        while True:
            node = step(node, side)
            seen[node] = True
            if node < n or node >= 2 * n:
                break
            side = 3 - side
        pairs.append((start if start < n else start - n, node if node < n else node - n))

    loops = 0
    for mid in range(n, 2 * n):
        if seen[mid]:
            continue
        loops += 1
        node, side = mid, 1
        while True:
            seen[node] = True
            node = step(node, side)
            side = 3 - side
            if node == mid:
                break
    return BrauerDiagram.from_pairs(n, pairs), loops


def star(d: BrauerDiagram) -> BrauerDiagram:
    """Reflect top and bottom rows."""
    n = d.n
    flip = lambda v: v + n if v < n else v - n  # noqa: E731
    return BrauerDiagram.from_pairs(n, [(flip(a), flip(b)) for a, b in d.edges])


def _matchings(vertices: tuple[int, ...]):
    if not vertices:
        yield []
        return
    first = vertices[0]
    for idx in range(1, len(vertices)):
        partner = vertices[idx]
        rest = vertices[1:idx] + vertices[idx + 1:]
        for tail in _matchings(rest):
            yield [(first, partner)] + tail


@lru_cache(maxsize=None)
def all_diagrams(n: int) -> tuple[BrauerDiagram, ...]:
    """Every Brauer n-diagram, in canonical (edge list) order."""
    diagrams = [BrauerDiagram.from_pairs(n, m) for m in _matchings(tuple(range(2 * n)))]
    logger.debug("enumerated %d diagrams for n=%d", len(diagrams), n)
    return tuple(sorted(diagrams, key=lambda d: d.edges))


def ideal_basis(n: int, f: int) -> list[BrauerDiagram]:
    """Diagrams with at least ``f`` horizontal edges in each row."""
    if not 0 <= f <= n // 2 + 1:
        raise ValueError(f"f={f} is out of range for n={n}")
    return [d for d in all_diagrams(n) if d.horizontal_count >= f]


def factor_two_horizontal(d: BrauerDiagram) -> tuple[Permutation, tuple[int, int]]:
    """Write ``d = permutation_diagram(y) o e_(s,t)`` without loops."""
    if d.horizontal_count != 1:
        raise ValueError(f"{d} must have exactly one horizontal edge per row")
    (a, b), = d.top_horizontal()
    (s, t), = d.bottom_horizontal()
    images = [0] * d.n
    images[a - 1], images[b - 1] = s, t
    for top, bottom in d.verticals():
        images[top - 1] = bottom
    return Permutation(tuple(images)), (s, t)


def diagram_to_word(d: BrauerDiagram) -> tuple[Permutation, int, Permutation]:
    """Normal form ``d = sigma1 o E_f o sigma2`` with ``E_f = e_1 e_3 ... e_{2f-1}``.

    Top horizontal edges, sorted by their left end, are sent to the pairs
    ``(1,2), (3,4), ...``; vertical strands keep their left-to-right order.
    """
    n = d.n
    top = sorted(d.top_horizontal())
    bottom = sorted(d.bottom_horizontal())
    verticals = sorted(d.verticals())
    f = len(top)
    first = [0] * n
    second = [0] * n
    for i, ((a, b), (c, e)) in enumerate(zip(top, bottom), start=1):
        first[a - 1], first[b - 1] = 2 * i - 1, 2 * i
        second[2 * i - 2], second[2 * i - 1] = c, e
    for k, (p, q) in enumerate(verticals, start=1):
        first[p - 1] = 2 * f + k
        second[2 * f + k - 1] = q
    return Permutation(tuple(first)), f, Permutation(tuple(second))


@lru_cache(maxsize=1 << 14)
def diagram_word(d: BrauerDiagram) -> tuple[tuple[str, int], ...]:
    """Generator word of ``d``: letters ``("s", j)`` and ``("e", j)``, read left to right."""
    sigma1, f, sigma2 = diagram_to_word(d)
    word = [("s", j) for j in sigma1.reduced_word()]
    word += [("e", 2 * i - 1) for i in range(1, f + 1)]
    word += [("s", j) for j in sigma2.reduced_word()]
    return tuple(word)


# ---------------------------------------------------------------------------
# Algebra elements
# ---------------------------------------------------------------------------


class AlgebraElement:
    """A finite linear combination of n-diagrams over ``ring`` with loop value ``delta``."""

    __slots__ = ("n", "terms", "ring", "delta")

    def __init__(self, n: int, terms: Mapping[BrauerDiagram, Scalar], ring: Ring, delta: Scalar):
        self.n = n
        self.ring = ring
        self.delta = ring(delta) if isinstance(delta, int) else delta
        clean = {}
        for d, c in terms.items():
            if d.n != n:
                raise ValueError(f"diagram of size {d.n} in an element of size {n}")
            c = ring(c) if isinstance(c, int) else c
            if c:
                clean[d] = c
        self.terms = clean

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, ring: Ring = QQ, delta=-2, coeff=1) -> "AlgebraElement":
        return cls(d.n, {d: coeff}, ring, delta)

    @classmethod
    def identity(cls, n: int, ring: Ring = QQ, delta=-2) -> "AlgebraElement":
        return cls.from_diagram(identity_diagram(n), ring, delta)

    @classmethod
    def from_word(cls, word: Sequence[tuple[str, int]], n: int, ring: Ring = QQ, delta=-2) -> "AlgebraElement":
        result = cls.identity(n, ring, delta)
        for kind, j in word:
            result = result * cls.from_diagram(generator(kind, j, n), ring, delta)
        return result

    def _check(self, other: "AlgebraElement") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.delta != other.delta:
            raise ValueError(f"loop parameter mismatch: {self.delta} vs {other.delta}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return AlgebraElement(self.n, out, self.ring, self.delta)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {d: -c for d, c in self.terms.items()}, self.ring, self.delta)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = self.ring(c) if isinstance(c, int) else c
        return AlgebraElement(self.n, {d: c * v for d, v in self.terms.items()}, self.ring, self.delta)

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        return multiply(self, other)

    def star(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {star(d): c for d, c in self.terms.items()}, self.ring, self.delta)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.n, self.ring, self.delta, self.terms) == (other.n, other.ring, other.delta, other.terms)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = sorted(self.terms.items(), key=lambda item: item[0].edges)
        return " + ".join(f"{render_scalar(c)}*{d}" for d, c in parts)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of :func:`compose`, each loop contributing ``delta``."""
    a._check(b)
    out: dict[BrauerDiagram, Scalar] = {}
    for d1, c1 in a.terms.items():
        for d2, c2 in b.terms.items():
            d, loops = compose(d1, d2)
            coeff = c1 * c2 * a.delta ** loops if loops else c1 * c2
            out[d] = out[d] + coeff if d in out else coeff
    return AlgebraElement(a.n, out, a.ring, a.delta)


# ---------------------------------------------------------------------------
# Symmetric group elements attached to a partition
# ---------------------------------------------------------------------------


def _validate_partition(lam: Sequence[int], n: int) -> tuple[int, ...]:
    parts = tuple(int(p) for p in lam if p)
    if any(p < 0 for p in lam) or list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"{list(lam)} is not a partition")
    if sum(parts) > n:
        raise ValueError(f"partition {list(parts)} has more than {n} boxes")
    return parts


def young_subgroup(lam: Sequence[int], n: int, offset: int = 0) -> list[Permutation]:
    """Row stabilizer of the row-reading tableau of ``lam`` on ``offset+1 ..``."""
    parts = _validate_partition(lam, n - offset)
    k = sum(parts)
    blocks, start = [], 0
    for part in parts:
        blocks.append(list(range(start + 1, start + part + 1)))
        start += part
    elements = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = [img for block in choice for img in block]
        elements.append(Permutation(tuple(images)).embed(n, offset) if k else Permutation.identity(n))
    return elements


def w_lambda(lam: Sequence[int], n: int, offset: int = 0) -> Permutation:
    """Permutation sending the row-reading tableau of ``lam`` to the column-reading one."""
    parts = _validate_partition(lam, n - offset)
    k = sum(parts)
    if not k:
        return Permutation.identity(n)
    row_fill, counter = {}, 0
    for r, part in enumerate(parts):
        for c in range(part):
            counter += 1
            row_fill[(r, c)] = counter
    col_fill, counter = {}, 0
    for c in range(parts[0]):
        for r, part in enumerate(parts):
            if c < part:
                counter += 1
                col_fill[(r, c)] = counter
    images = [0] * k
    for cell, entry in row_fill.items():
        images[entry - 1] = col_fill[cell]
    return Permutation(tuple(images)).embed(n, offset)


def group_elements(kind: str, lam: Sequence[int], n: int, m: int = 1, ring: Ring = QQ, offset: int = 0):
    """``x_lam``, ``y_lam`` (algebra elements, loop value ``-2m``) or ``w_lam`` (a permutation)."""
    if kind == "w_lam":
        return w_lambda(lam, n, offset)
    if kind not in ("x_lam", "y_lam"):
        raise ValueError(f"unknown group element kind {kind!r}")
    terms: dict[BrauerDiagram, Scalar] = {}
    for w in young_subgroup(lam, n, offset):
        sign = w.sign() if kind == "y_lam" else 1
        terms[permutation_diagram(w)] = ring(sign)
    return AlgebraElement(n, terms, ring, ring(-2 * m))
