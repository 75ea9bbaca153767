"""The Springer setting: h = (1, 2, ..., n), shape varies.

Permissible fillings here are exactly the row-strict tableaux.  The two tree
constructions both branch on the dimension-ordering of the shrinking
subdiagram; the classical tree deletes boxes (re-sorting rows to stay a
Young diagram), while the modified tree writes the current value into the
box instead and never moves a box.  Leaf labels of either tree are the
Garsia-Procesi monomial basis, and the modified tree pairs each basis
monomial with the row-strict filling that maps to it.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import combinations
from math import factorial, prod

from .core import (
    Filling,
    HesskitError,
    Monomial,
    NotInBasis,
    _check_cap,
    check_partition,
    dimension_ordering,
)
from .trees import LabeledTree, TreeNode


class PartialTableau:
    """A shape with values i..n already written into some far-right boxes.

    ``remaining[r-1]`` unfilled boxes sit flush left in row r; the filled
    boxes of row r are the columns above that.
    """

    __slots__ = ("shape", "remaining", "filled")

    def __init__(
        self,
        shape: tuple[int, ...],
        remaining: tuple[int, ...],
        filled: dict[tuple[int, int], int],
    ):
        self.shape = shape
        self.remaining = remaining
        self.filled = filled

    def place(self, row: int, col: int, value: int) -> "PartialTableau":
        rem = list(self.remaining)
        rem[row - 1] -= 1
        return PartialTableau(self.shape, tuple(rem), {**self.filled, (row, col): value})

    def to_filling(self) -> Filling:
        if any(self.remaining):
            raise ValueError("tableau is not complete")
        rows = [
            tuple(self.filled[(r, c)] for c in range(1, length + 1))
            for r, length in enumerate(self.shape, start=1)
        ]
        return Filling(self.shape, rows)

    def __str__(self) -> str:
        parts = []
        for r, length in enumerate(self.shape, start=1):
            parts.append(
                "".join(
                    str(self.filled[(r, c)]) if (r, c) in self.filled else "."
                    for c in range(1, length + 1)
                )
            )
        return "/".join(parts)

    def __repr__(self) -> str:
        return f"PartialTableau({self})"


def _sorted_rows(rows: Sequence[int]) -> tuple[int, ...]:
    # Deleting a far-right box can leave a column hanging below a shorter
    # row; pushing the column's boxes up restores weakly decreasing rows,
    # which is exactly the descending re-sort of the nonzero row lengths.
    return tuple(sorted((r for r in rows if r > 0), reverse=True))


def build_gp_tree(mu: Sequence[int], max_n: int | None = None) -> LabeledTree:
    """Branching tree on Young diagrams whose leaf labels form the basis B(mu).

    Level i holds diagrams with i boxes; an edge labelled x_i^j deletes the
    box with dimension-order j+1 and re-sorts the rows.  Level-1 vertices
    carry the accumulated edge product instead of a single box.
    """
    mu = check_partition(mu)
    n = sum(mu)
    _check_cap(n, max_n, "GP-tree construction")

    def grow(node: TreeNode, shape: tuple[int, ...], level: int, mono: Monomial) -> None:
        if level == 1:
            node.payload = mono
            return
        for j, (row, _col) in enumerate(dimension_ordering(shape)):
            rows = list(shape)
            rows[row - 1] -= 1
            child_shape = _sorted_rows(rows)
            label = Monomial.variable(n, level, j) if j else Monomial.one(n)
            child = TreeNode(
                f"{node.node_id}.{j}",
                level - 1,
                child_shape,
                label,
            )
            node.children.append(child)
            grow(child, child_shape, level - 1, mono * label)

    root = TreeNode("r", n, mu, None)
    grow(root, mu, n, Monomial.one(n))
    return LabeledTree("gp", n, root, list(range(n, 0, -1)))


def build_modified_gp_tree(mu: Sequence[int], max_n: int | None = None) -> LabeledTree:
    """GP-tree variant that fills boxes instead of deleting them.

    Levels n..1 carry partial tableaux, Level 0 the completed row-strict
    fillings, and Level B the basis monomials, each directly below the
    filling that maps to it.
    """
    mu = check_partition(mu)
    n = sum(mu)
    _check_cap(n, max_n, "modified GP-tree construction")

    def grow(node: TreeNode, state: PartialTableau, level: int, mono: Monomial) -> None:
        if level == 0:
            leaf = TreeNode(f"{node.node_id}.0", "B", mono, Monomial.one(n))
            node.children.append(leaf)
            return
        for j, (row, col) in enumerate(dimension_ordering(state.remaining)):
            child_state = state.place(row, col, level)
            label = Monomial.variable(n, level, j) if j else Monomial.one(n)
            child_level = level - 1
            payload = child_state.to_filling() if child_level == 0 else child_state
            child = TreeNode(f"{node.node_id}.{j}", child_level, payload, label)
            node.children.append(child)
            grow(child, child_state, child_level, mono * label)

    start = PartialTableau(mu, mu, {})
    root = TreeNode("r", n, start, None)
    grow(root, start, n, Monomial.one(n))
    return LabeledTree("modified-gp", n, root, list(range(n, -1, -1)) + ["B"])


def iter_basis_monomials(mu: Sequence[int]) -> Iterator[Monomial]:
    """Stream the leaf monomials of the GP-tree without materializing it."""
    mu = check_partition(mu)
    n = sum(mu)

    def walk(shape: tuple[int, ...], level: int, exps: list[int]) -> Iterator[Monomial]:
        if level == 1:
            yield Monomial(exps)
            return
        for j, (row, _col) in enumerate(dimension_ordering(shape)):
            rows = list(shape)
            rows[row - 1] -= 1
            exps[level - 1] = j
            yield from walk(_sorted_rows(rows), level - 1, exps)
            exps[level - 1] = 0

    yield from walk(mu, n, [0] * n)


def garsia_procesi_basis(mu: Sequence[int], max_n: int | None = None) -> set[Monomial]:
    """Leaf labels of the GP-tree; there are n!/prod(mu_i!) distinct monomials."""
    mu = check_partition(mu)
    _check_cap(sum(mu), max_n, "basis enumeration")
    basis: set[Monomial] = set()
    count = 0
    for mono in iter_basis_monomials(mu):
        basis.add(mono)
        count += 1
    if len(basis) != count:
        raise HesskitError(f"GP-tree for {mu} produced a repeated leaf monomial")
    return basis


def tree_path_count(mu: Sequence[int]) -> int:
    """Number of root-to-leaf paths, n!/(mu_1! ... mu_k!)."""
    mu = check_partition(mu)
    return factorial(sum(mu)) // prod(factorial(r) for r in mu)


def enumerate_row_strict(mu: Sequence[int], max_n: int | None = None) -> list[Filling]:
    """All row-strict fillings of a partition shape, in lexicographic word order."""
    mu = check_partition(mu)
    n = sum(mu)
    _check_cap(n, max_n, "row-strict enumeration")

    def distribute(values: tuple[int, ...], rows_left: tuple[int, ...]) -> Iterator[tuple]:
        if not rows_left:
            yield ()
            return
        take = rows_left[0]
        for chosen in combinations(values, take):
            rest = tuple(v for v in values if v not in chosen)
            for tail in distribute(rest, rows_left[1:]):
                yield (chosen,) + tail

    fillings = [Filling(mu, rows) for rows in distribute(tuple(range(1, n + 1)), mu)]
    fillings.sort(key=lambda f: f.word)
    return fillings


def psi(mu: Sequence[int], monomial: Monomial) -> Filling:
    """Invert the filling -> monomial map on the basis B(mu).

    Values are written in decreasing order: value i goes into the box of the
    current subdiagram with dimension-order alpha_i + 1, which is then
    removed.  Raises NotInBasis when that box does not exist, which happens
    exactly when the monomial lies outside B(mu).
    """
    mu = check_partition(mu)
    n = sum(mu)
    if len(monomial) != n:
        raise ValueError(f"monomial has {len(monomial)} variables, expected {n}")
    if monomial.exponent(1) != 0:
        raise NotInBasis(f"{monomial} has positive x1 exponent")

    remaining = list(mu)
    placed: dict[tuple[int, int], int] = {}
    for i in range(n, 1, -1):
        order = dimension_ordering(remaining)
        alpha = monomial.exponent(i)
        if alpha >= len(order):
            raise NotInBasis(
                f"{monomial} is not in the basis of shape {mu}: "
                f"no box with dimension-order {alpha + 1} at step i={i}"
            )
        row, col = order[alpha]
        placed[(row, col)] = i
        remaining[row - 1] -= 1
    last_row = next(r for r, left in enumerate(remaining, start=1) if left)
    placed[(last_row, remaining[last_row - 1])] = 1

    rows = [
        tuple(placed[(r, c)] for c in range(1, length + 1))
        for r, length in enumerate(mu, start=1)
    ]
    return Filling(mu, rows)
