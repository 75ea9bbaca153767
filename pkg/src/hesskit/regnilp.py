"""The regular nilpotent setting: one-row shape (n), Hessenberg function varies.

Fillings are words; the value i can be inserted into a partial word either
at the far-right end or immediately left of any k with h(k) >= i, giving
exactly beta_i slots.  Growing all words this way yields the h-tableau-tree,
whose bottom row of leaf monomials is the staircase basis of the quotient by
the ideal built in :mod:`hesskit.polyalg`, paired with the filling above it.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import product
from math import prod

from .core import (
    Filling,
    HessenbergFunction,
    HesskitError,
    Monomial,
    NotInBasis,
    _check_cap,
    degree_tuple,
    enumerate_fillings,
    nu_tuple,
    phi_word,
)
from .trees import LabeledTree, TreeNode


def h_permissible_positions(h: HessenbergFunction, word: Sequence[int]) -> list[int]:
    """Insertion slots for the next value i = len(word) + 1, rightmost first.

    Slots are word indices: inserting at the returned index ``p`` puts i
    immediately left of the entry currently at ``p`` (index len(word) is the
    far-right end).  There are always exactly beta_i of them.
    """
    word = tuple(word)
    i = len(word) + 1
    if sorted(word) != list(range(1, i)):
        raise ValueError(f"word {word} does not contain exactly 1..{i - 1}")
    for k, j in zip(word, word[1:]):
        if k > h(j):
            raise ValueError(f"word {word} is not permissible for h={h}")
    return _bullets(h.values, word, i)


def _bullets(h_values: Sequence[int], word: Sequence[int], i: int) -> list[int]:
    slots = [len(word)]
    for p in range(len(word) - 1, -1, -1):
        if h_values[word[p] - 1] >= i:
            slots.append(p)
    return slots


def iter_words(h: HessenbergFunction) -> Iterator[tuple[tuple[int, ...], Monomial]]:
    """Stream (word, monomial) pairs of the h-tableau-tree leaves, left to right."""
    n = h.n
    hv = h.values
    beta = degree_tuple(h)

    def walk(word: tuple[int, ...], i: int, exps: list[int]) -> Iterator:
        if i > n:
            yield word, Monomial(exps)
            return
        slots = _bullets(hv, word, i)
        for e in range(beta[i - 1] - 1, -1, -1):  # left-to-right child order
            p = slots[e]
            exps[i - 1] = e
            yield from walk(word[:p] + (i,) + word[p:], i + 1, exps)
            exps[i - 1] = 0

    yield from walk((1,), 2, [0] * n)


def build_h_tree(h: HessenbergFunction, max_n: int | None = None) -> LabeledTree:
    """Bare branching tree: beta_i edges per vertex between levels i-1 and i,
    labelled x_i^(beta_i - 1) .. x_i^0 left to right; leaf labels are the
    edge products and enumerate the staircase basis."""
    return _build(h, max_n, tableaux=False)


def build_h_tableau_tree(h: HessenbergFunction, max_n: int | None = None) -> LabeledTree:
    """The h-tree with word payloads: the edge x_i^j replaces the (j+1)-th
    insertion slot, counting right to left, with the value i.  Level-n
    vertices are the complete one-row fillings."""
    return _build(h, max_n, tableaux=True)


def _build(h: HessenbergFunction, max_n: int | None, tableaux: bool) -> LabeledTree:
    n = h.n
    _check_cap(n, max_n, "tree construction")
    hv = h.values
    beta = degree_tuple(h)
    seen: set[tuple[int, ...]] = set()

    def grow(node: TreeNode, word: tuple[int, ...], i: int, mono: Monomial) -> None:
        if i > n:
            leaf = TreeNode(f"{node.node_id}.0", n + 1, mono, Monomial.one(n))
            node.children.append(leaf)
            return
        slots = _bullets(hv, word, i)
        if len(slots) != beta[i - 1]:
            raise HesskitError(
                f"h={h}: {len(slots)} slots for i={i}, expected beta_i={beta[i - 1]}"
            )
        for e in range(beta[i - 1] - 1, -1, -1):
            p = slots[e]
            grown = word[:p] + (i,) + word[p:]
            label = Monomial.variable(n, i, e)
            if tableaux:
                payload = Filling.from_word((n,), grown) if i == n else grown
            else:
                payload = None
            child = TreeNode(f"{node.node_id}.{e}", i, payload, label)
            node.children.append(child)
            if tableaux and i == n:
                if grown in seen:
                    raise HesskitError(f"duplicate filling {grown} in tree for h={h}")
                seen.add(grown)
            grow(child, grown, i + 1, mono * label)

    kind = "h-tableau" if tableaux else "h"
    root_payload: object = (1,) if tableaux else None
    if tableaux and n == 1:
        root_payload = Filling.from_word((1,), (1,))
    root = TreeNode("r", 1, root_payload, None)
    grow(root, (1,), 2, Monomial.one(n))
    return LabeledTree(kind, n, root, list(range(1, n + 2)))


def level_n_fillings(tree: LabeledTree) -> list[Filling]:
    """The complete fillings of an h-tableau-tree, left to right."""
    if tree.kind != "h-tableau":
        raise ValueError(f"tree of kind {tree.kind!r} carries no fillings")
    return [node.payload for node in tree.level(tree.n)]


def b_h_basis(h: HessenbergFunction) -> set[Monomial]:
    """The staircase {x^alpha : alpha_i <= beta_i - 1}; its size is prod(beta_i)."""
    beta = degree_tuple(h)
    return {Monomial(exps) for exps in product(*(range(b) for b in beta))}


def psi_h(h: HessenbergFunction, monomial: Monomial) -> Filling:
    """Invert the filling -> monomial map on the staircase basis.

    Follows the unique tree path: at step i the value i replaces insertion
    slot alpha_i + 1, counting right to left.  Degree-r monomials come back
    as fillings with r dimension pairs.
    """
    n = h.n
    if len(monomial) != n:
        raise ValueError(f"monomial has {len(monomial)} variables, expected {n}")
    beta = degree_tuple(h)
    for i in range(1, n + 1):
        if monomial.exponent(i) >= beta[i - 1]:
            raise NotInBasis(
                f"{monomial} is not in the basis for h={h}: "
                f"alpha_{i}={monomial.exponent(i)} >= beta_{i}={beta[i - 1]}"
            )
    word: tuple[int, ...] = (1,)
    hv = h.values
    for i in range(2, n + 1):
        p = _bullets(hv, word, i)[monomial.exponent(i)]
        word = word[:p] + (i,) + word[p:]
    return Filling.from_word((n,), word)


@dataclass
class VerifyReport:
    """Counting identities for one Hessenberg function."""

    h: HessenbergFunction
    fillings: int
    leaves: int
    prod_nu: int
    prod_beta: int
    a_equals_b: bool

    def ok(self) -> bool:
        return (
            self.fillings == self.leaves == self.prod_nu == self.prod_beta
            and self.a_equals_b
        )


def verify_counts(h: HessenbergFunction, max_n: int | None = None) -> VerifyReport:
    """Check the one-row counting identities for h.

    ``fillings`` is the brute-force n!-filter count, ``leaves`` the tree path
    count, and ``a_equals_b`` compares the monomial image of the brute-force
    fillings with the staircase basis, as sets.
    """
    n = h.n
    _check_cap(n, max_n, "count verification")
    brute = enumerate_fillings(h, (n,), max_n=max_n)
    image = {Monomial(phi_word(h.values, f.word)) for f in brute}
    leaves = sum(1 for _ in iter_words(h))
    return VerifyReport(
        h=h,
        fillings=len(brute),
        leaves=leaves,
        prod_nu=prod(nu_tuple(h)),
        prod_beta=prod(degree_tuple(h)),
        a_equals_b=image == b_h_basis(h),
    )
