"""Shared vocabulary: Hessenberg functions, diagram fillings, dimension pairs.

Conventions used throughout the package:

* Diagrams are drawn in English orientation, rows top to bottom, boxes flush
  left.  Box coordinates are 1-based ``(row, col)`` pairs with ``(1, 1)`` the
  top-left box.
* A filling is serialized by its row-reading word (left to right within a
  row, top row first) together with its list of row lengths.  One-row
  fillings print as a bare word, e.g. ``54213``.
* ``Monomial`` is an exponent vector over ``x_1 .. x_n``; slot ``i-1`` holds
  the exponent of ``x_i``.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from itertools import permutations

DEFAULT_MAX_N = 9
_MAX_N_ENV = "HESSKIT_MAX_N"


class HesskitError(Exception):
    """Base class for all errors raised by this package."""


class ConstraintViolation(HesskitError, ValueError):
    """A sequence fails one of the two Hessenberg constraints.

    ``constraint`` is ``'a'`` (``i <= h_i <= n``) or ``'b'`` (monotonicity);
    ``index`` is the 1-based position where the check failed.
    """

    def __init__(self, constraint: str, index: int, message: str):
        super().__init__(message)
        self.constraint = constraint
        self.index = index


class NotPermissible(HesskitError, ValueError):
    """A filling violates the horizontal adjacency rule for the given h."""


class NotInBasis(HesskitError, ValueError):
    """A monomial lies outside the basis an inverse map is defined on."""


class SizeLimitExceeded(HesskitError, ValueError):
    """An enumeration was requested beyond the configured size cap."""


def size_cap(override: int | None = None) -> int:
    """Resolve the enumeration size cap: argument, then env var, then default."""
    if override is not None:
        return override
    env = os.environ.get(_MAX_N_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_MAX_N


def _check_cap(n: int, override: int | None, what: str) -> None:
    cap = size_cap(override)
    if n > cap:
        raise SizeLimitExceeded(f"{what} with n={n} exceeds the size cap {cap}")


class HessenbergFunction:
    """A nondecreasing step function h: {1..n} -> {1..n} with h(i) >= i."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ConstraintViolation("a", 1, "empty sequence is not a Hessenberg function")
        n = len(vals)
        for i, v in enumerate(vals, start=1):
            # the step down to a too-small value reads as a monotonicity break
            if i > 1 and vals[i - 2] > v:
                raise ConstraintViolation(
                    "b", i, f"h({i})={v} < h({i - 1})={vals[i - 2]} breaks monotonicity"
                )
            if not i <= v <= n:
                raise ConstraintViolation(
                    "a", i, f"h({i})={v} violates {i} <= h({i}) <= {n}"
                )
        self.values = vals

    @classmethod
    def parse(cls, text: str) -> "HessenbergFunction":
        """Parse a comma-separated value list such as ``"3,3,3,4"``."""
        return cls(int(part) for part in text.split(","))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """Value h(i), 1-based."""
        return self.values[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HessenbergFunction):
            return self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"HessenbergFunction({list(self.values)})"

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)

    @property
    def is_springer(self) -> bool:
        """True for the minimal function h = (1, 2, ..., n)."""
        return all(v == i for i, v in enumerate(self.values, start=1))


def make_hessenberg(values: Iterable[int]) -> HessenbergFunction:
    """Validate a sequence as a Hessenberg function."""
    return HessenbergFunction(values)


def degree_tuple(h: HessenbergFunction) -> tuple[int, ...]:
    """Degrees beta_i = i - #{k : h(k) < i}, returned indexed by i.

    The conventional display order reverses this tuple (beta_n first); use
    ``degree_tuple(h)[::-1]`` for that rendering.  beta_1 is always 1.
    """
    vals = h.values
    return tuple(i - sum(1 for v in vals if v < i) for i in range(1, h.n + 1))


def nu_tuple(h: HessenbergFunction) -> tuple[int, ...]:
    """Column lengths nu_i = h(i) - i + 1 of the staircase diagram of h."""
    return tuple(v - i for i, v in enumerate(h.values, start=0))


class HessenbergDiagram:
    """Shading of the on-or-below-diagonal boxes of an n x n grid.

    Box (row r, col c) with c <= r is shaded when r <= h(c).  Column lengths
    are the nu-tuple, row lengths (top to bottom) the degree tuple indexed
    by i.
    """

    __slots__ = ("h", "column_lengths", "row_lengths")

    def __init__(self, h: HessenbergFunction):
        self.h = h
        self.column_lengths = nu_tuple(h)
        self.row_lengths = degree_tuple(h)

    def is_shaded(self, row: int, col: int) -> bool:
        return col <= row <= self.h(col)

    def render(self) -> str:
        """ASCII grid, ``#`` for shaded boxes, ``.`` for the rest of the staircase."""
        n = self.h.n
        lines = []
        for r in range(1, n + 1):
            cells = ["#" if self.is_shaded(r, c) else "." for c in range(1, r + 1)]
            lines.append("".join(cells))
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"HessenbergDiagram(h={self.h})"


def hessenberg_diagram(h: HessenbergFunction) -> HessenbergDiagram:
    return HessenbergDiagram(h)


def hessenberg_functions(n: int) -> Iterator[HessenbergFunction]:
    """All Hessenberg functions for a given n, in lexicographic order.

    There are Catalan(n) of them; generated as lattice paths with
    h(i) ranging over max(i, h(i-1)) .. n.
    """

    def extend(prefix: list[int]) -> Iterator[HessenbergFunction]:
        i = len(prefix) + 1
        if i > n:
            yield HessenbergFunction(prefix)
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            prefix.append(v)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


# ---------------------------------------------------------------------------
# Monomials


class Monomial(tuple):
    """Exponent vector over x_1 .. x_n.  Tuple comparison is lex order with
    x_1 > x_2 > ... > x_n, so ``sorted`` and ``max`` agree with that order."""

    __slots__ = ()

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def from_exponents(cls, exps: Sequence[int]) -> "Monomial":
        m = cls(int(e) for e in exps)
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {list(m)}")
        return m

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "Monomial":
        """x_i^power in n variables (i is 1-based)."""
        exps = [0] * n
        exps[i - 1] = power
        return cls(exps)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def exponent(self, i: int) -> int:
        """Exponent of x_i (1-based)."""
        return self[i - 1]

    def __mul__(self, other: "Monomial") -> "Monomial":  # type: ignore[override]
        if not isinstance(other, tuple):
            return NotImplemented
        return Monomial(a + b for a, b in zip(self, other, strict=True))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other, strict=True))

    def divide(self, other: "Monomial") -> "Monomial":
        """Quotient self / other; other must divide self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self, other, strict=True))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(max(a, b) for a, b in zip(self, other, strict=True))

    def __str__(self) -> str:
        parts = []
        for i, e in enumerate(self, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r}, n={len(self)})"

    @classmethod
    def parse(cls, text: str, n: int) -> "Monomial":
        """Parse the CLI syntax ``x2*x4^2``; bare ``1`` is the empty monomial."""
        text = text.strip().replace(" ", "")
        exps = [0] * n
        if text in ("1", ""):
            return cls(exps)
        for factor in text.split("*"):
            base, _, power = factor.partition("^")
            if not base.startswith("x"):
                raise ValueError(f"bad monomial factor {factor!r}")
            i = int(base[1:])
            if not 1 <= i <= n:
                raise ValueError(f"variable x{i} out of range for n={n}")
            exps[i - 1] += int(power) if power else 1
        return cls(exps)

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "Monomial":
        return cls.from_exponents(data)


# ---------------------------------------------------------------------------
# Shapes and fillings


def as_shape(rows: Iterable[int]) -> tuple[int, ...]:
    """Normalize a row-length sequence; zero rows are allowed."""
    shape = tuple(int(r) for r in rows)
    if any(r < 0 for r in shape):
        raise ValueError(f"negative row length in {shape}")
    return shape


def is_partition(shape: Sequence[int]) -> bool:
    """Weakly decreasing with all rows positive."""
    return all(r > 0 for r in shape) and all(
        shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
    )


def check_partition(shape: Iterable[int]) -> tuple[int, ...]:
    rows = as_shape(shape)
    if not is_partition(rows):
        raise ValueError(f"{rows} is not a partition (weakly decreasing, positive rows)")
    return rows


class Filling:
    """Injective placement of 1..n into the boxes of a left-justified shape."""

    __slots__ = ("shape", "rows")

    def __init__(self, shape: Iterable[int], rows: Iterable[Iterable[int]]):
        self.shape = as_shape(shape)
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)
        if len(self.rows) != len(self.shape) or any(
            len(row) != length for row, length in zip(self.rows, self.shape)
        ):
            raise ValueError(f"rows {self.rows} do not match shape {self.shape}")
        n = sum(self.shape)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"entries {self.word} are not a bijection with 1..{n}")

    @classmethod
    def from_word(cls, shape: Iterable[int], word: Iterable[int]) -> "Filling":
        shape = as_shape(shape)
        word = list(word)
        rows, start = [], 0
        for length in shape:
            rows.append(word[start : start + length])
            start += length
        if start != len(word):
            raise ValueError(f"word of length {len(word)} does not fill shape {shape}")
        return cls(shape, rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    @property
    def word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def boxes(self) -> dict[tuple[int, int], int]:
        """Mapping (row, col) -> value, both coordinates 1-based."""
        return {
            (r, c): v
            for r, row in enumerate(self.rows, start=1)
            for c, v in enumerate(row, start=1)
        }

    def position(self, value: int) -> tuple[int, int]:
        for r, row in enumerate(self.rows, start=1):
            for c, v in enumerate(row, start=1):
                if v == value:
                    return (r, c)
        raise ValueError(f"value {value} not present")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Filling):
            return self.shape == other.shape and self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __str__(self) -> str:
        sep = "," if self.n > 9 else ""
        return "/".join(sep.join(str(v) for v in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"Filling(shape={list(self.shape)}, word={list(self.word)})"

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "word": list(self.word)}

    @classmethod
    def from_json(cls, data: dict) -> "Filling":
        return cls.from_word(data["shape"], data["word"])


class PartialFilling:
    """Some boxes of a diagram with values; rows may have gaps.

    Produced by :func:`subfilling`.  The box set need not be a composition:
    re-assemble one with :meth:`composition` when the rows are gap-free.
    """

    __slots__ = ("boxes",)

    def __init__(self, boxes: dict[tuple[int, int], int]):
        self.boxes = dict(boxes)

    def row_columns(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for (r, c) in self.boxes:
            out.setdefault(r, []).append(c)
        for cols in out.values():
            cols.sort()
        return out

    def is_composition(self) -> bool:
        """True when every row's boxes are exactly columns 1..k."""
        return all(cols == list(range(1, len(cols) + 1)) for cols in self.row_columns().values())

    def composition(self) -> tuple[int, ...]:
        """Row lengths, including zero rows up to the deepest occupied row."""
        if not self.is_composition():
            raise ValueError("rows contain gaps; not a composition")
        by_row = self.row_columns()
        depth = max(by_row, default=0)
        return tuple(len(by_row.get(r, ())) for r in range(1, depth + 1))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PartialFilling):
            return self.boxes == other.boxes
        return NotImplemented

    def __repr__(self) -> str:
        return f"PartialFilling({self.boxes})"


def subfilling(filling: Filling, i: int) -> PartialFilling:
    """Restriction T^(i): drop the values above i together with their boxes."""
    if not 1 <= i <= filling.n:
        raise ValueError(f"i={i} out of range 1..{filling.n}")
    return PartialFilling({rc: v for rc, v in filling.boxes().items() if v <= i})


def is_row_strict(filling: Filling) -> bool:
    """Entries strictly increase left to right within every row."""
    return all(
        row[k] < row[k + 1] for row in filling.rows for k in range(len(row) - 1)
    )


def has_subfilling_property(filling: Filling) -> bool:
    """Each value i sits in the rightmost box of its row within T^(i)."""
    boxes = filling.boxes()
    for i in range(1, filling.n + 1):
        r, c = filling.position(i)
        rightmost = max(col for (row, col) in boxes if row == r and boxes[(row, col)] <= i)
        if c != rightmost:
            return False
    return True


def dimension_ordering(shape: Sequence[int]) -> list[tuple[int, int]]:
    """Order the far-right boxes of a composition.

    One box per nonzero row, sorted by column from rightmost to leftmost,
    top to bottom within a column.  Returns 1-based (row, col) coordinates.
    """
    shape = as_shape(shape)
    boxes = [(r, length) for r, length in enumerate(shape, start=1) if length > 0]
    boxes.sort(key=lambda rc: (-rc[1], rc[0]))
    return boxes


# ---------------------------------------------------------------------------
# Permissibility, dimension pairs, and the filling -> monomial map


def is_permissible(h: HessenbergFunction, filling: Filling) -> bool:
    """Check every horizontal adjacency: k immediately left of j needs k <= h(j)."""
    if filling.n != h.n:
        raise ValueError(f"filling has {filling.n} boxes but h has n={h.n}")
    for row in filling.rows:
        for k, j in zip(row, row[1:]):
            if k > h(j):
                return False
    return True


def _pairs_of_boxes(
    h: HessenbergFunction, boxes: dict[tuple[int, int], int]
) -> set[tuple[int, int]]:
    """Dimension pairs of an arbitrary box set (gaps allowed, read literally)."""
    items = list(boxes.items())
    pairs = set()
    for (ra, ca), a in items:
        neighbor = boxes.get((ra, ca + 1))
        cap = h(neighbor) if neighbor is not None else None
        for (rb, cb), b in items:
            if b <= a:
                continue
            if not (cb < ca or (cb == ca and rb > ra)):
                continue
            if cap is not None and b > cap:
                continue
            pairs.add((a, b))
    return pairs


class DimensionPairSet:
    """The pairs (a, b) contributing to the cell dimension of a filling."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        self.pairs = frozenset((int(a), int(b)) for a, b in pairs)

    def sorted(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def with_larger(self, y: int) -> set[tuple[int, int]]:
        """The group D_y = {(x, y) in the set}."""
        return {p for p in self.pairs if p[1] == y}

    def larger_counts(self, n: int) -> tuple[int, ...]:
        """|D_y| for y = 1..n; these are the exponents of the image monomial."""
        counts = [0] * n
        for _, b in self.pairs:
            counts[b - 1] += 1
        return tuple(counts)

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.sorted())

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return tuple(pair) in self.pairs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DimensionPairSet):
            return self.pairs == other.pairs
        if isinstance(other, (set, frozenset)):
            return self.pairs == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        return f"DimensionPairSet({self.sorted()})"

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.sorted()]


def dimension_pairs(h: HessenbergFunction, filling: Filling) -> DimensionPairSet:
    """All pairs (a, b) with b > a, b below-in-column or strictly left of a,
    and b <= h(c) whenever a has a right neighbor c."""
    if not is_permissible(h, filling):
        raise NotPermissible(f"{filling} is not permissible for h={h}")
    return DimensionPairSet(_pairs_of_boxes(h, filling.boxes()))


def dimension_pairs_partial(
    h: HessenbergFunction, partial: PartialFilling
) -> DimensionPairSet:
    """Dimension pairs of a partial filling; columns are read literally by index."""
    return DimensionPairSet(_pairs_of_boxes(h, partial.boxes))


def phi(h: HessenbergFunction, filling: Filling) -> Monomial:
    """Map a permissible filling to the monomial prod x_b over its pairs (a, b).

    The exponent of x_b is |D_b|; the degree equals the number of dimension
    pairs, and x_1 never appears.
    """
    pairs = dimension_pairs(h, filling)
    return Monomial(pairs.larger_counts(h.n))


def phi_word(h_values: Sequence[int], word: Sequence[int]) -> tuple[int, ...]:
    """One-row fast path of :func:`phi` on a raw word; returns the exponent tuple.

    Assumes the word is permissible for h; no validation is performed.
    """
    n = len(word)
    exps = [0] * n
    for p in range(1, n):
        a = word[p]
        cap = h_values[word[p + 1] - 1] if p + 1 < n else n
        for q in range(p):
            b = word[q]
            if b > a and b <= cap:
                exps[b - 1] += 1
    return tuple(exps)


# ---------------------------------------------------------------------------
# Brute-force enumeration and Betti numbers


def enumerate_fillings(
    h: HessenbergFunction, shape: Sequence[int], max_n: int | None = None
) -> list[Filling]:
    """All permissible fillings of the shape, in lexicographic word order.

    This is the n!-filter oracle: every placement of 1..n is generated and
    tested against the adjacency rule.
    """
    shape = as_shape(shape)
    n = sum(shape)
    if n != h.n:
        raise ValueError(f"shape {shape} has {n} boxes but h has n={h.n}")
    _check_cap(n, max_n, "filling enumeration")

    # (position of left box, position of right box) per horizontal adjacency
    adjacent = []
    start = 0
    for length in shape:
        adjacent.extend((start + k, start + k + 1) for k in range(length - 1))
        start += length
    hv = h.values

    out = []
    for word in permutations(range(1, n + 1)):
        if all(word[p] <= hv[word[q] - 1] for p, q in adjacent):
            out.append(Filling.from_word(shape, word))
    return out


def betti_numbers(
    h: HessenbergFunction, shape: Sequence[int], max_n: int | None = None
) -> tuple[int, ...]:
    """Even Betti numbers b_0, b_2, ...: fillings counted by dimension-pair count."""
    fillings = enumerate_fillings(h, shape, max_n=max_n)
    dims = [len(dimension_pairs(h, f)) for f in fillings]
    top = max(dims, default=0)
    return tuple(sum(1 for d in dims if d == k) for k in range(top + 1))
