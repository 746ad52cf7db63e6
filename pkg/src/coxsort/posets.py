"""Finite posets with explicit boolean relation matrices.

Every poset here carries its ground set as an ordered tuple and its
relation as a read-only numpy matrix, so that two posets on the same
ground can be compared, intersected, or united entry by entry.  Element
grounds are always sorted by (length, canonical word); set grounds by
(size, sorted members).  Construction validates reflexivity,
antisymmetry and transitivity, failing loudly on anything that is not a
partial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import hecke
from .coxeter import CoxeterSystem, Element, word_str

__all__ = [
    "Poset",
    "RelationUnion",
    "element_poset",
    "inclusion_poset",
    "bruhat_interval",
    "weak_interval",
    "sorting_order",
    "relation_intersection",
    "relation_union",
]


class Poset:
    """An explicit finite poset: ordered ground tuple plus relation matrix."""

    def __init__(self, ground: Sequence, leq, label: str = "poset"):
        ground = tuple(ground)
        if len(set(ground)) != len(ground):
            raise ValueError(f"ground set of {label!r} contains duplicates")
        matrix = np.array(leq, dtype=bool)
        n = len(ground)
        if matrix.shape != (n, n):
            raise ValueError(f"relation matrix of {label!r} must be {n}x{n}")
        if n and not matrix.diagonal().all():
            raise ValueError(f"relation of {label!r} is not reflexive")
        off = ~np.eye(n, dtype=bool)
        if (matrix & matrix.T & off).any():
            raise ValueError(f"relation of {label!r} is not antisymmetric")
        composed = (matrix.astype(np.uint8) @ matrix.astype(np.uint8)) > 0
        if (composed & ~matrix).any():
            raise ValueError(f"relation of {label!r} is not transitive")
        matrix.setflags(write=False)
        self.ground = ground
        self.leq = matrix
        self.label = label
        self._index = {g: i for i, g in enumerate(ground)}

    def __len__(self) -> int:
        return len(self.ground)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self.leq, other.leq)

    __hash__ = None  # mutable-by-convention container semantics

    def __repr__(self) -> str:
        return f"Poset({self.label!r}, n={len(self.ground)})"

    def index(self, item) -> int:
        try:
            return self._index[item]
        except KeyError:
            raise ValueError(f"{item!r} is not in the ground set of {self.label!r}") from None

    def leq_items(self, a, b) -> bool:
        return bool(self.leq[self.index(a), self.index(b)])

    def covers(self) -> list[tuple]:
        """Cover pairs (a, b): a < b with nothing strictly between."""
        n = len(self.ground)
        strict = self.leq & ~np.eye(n, dtype=bool)
        two_step = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
        cov = strict & ~two_step
        return [(self.ground[i], self.ground[j]) for i, j in np.argwhere(cov)]

    def restrict(self, items: Iterable, label: str | None = None) -> "Poset":
        """Induced subposet; keeps the parent's ground order."""
        wanted = set()
        for item in items:
            self.index(item)
            wanted.add(item)
        idx = [i for i, g in enumerate(self.ground) if g in wanted]
        sub = self.leq[np.ix_(idx, idx)]
        return Poset(tuple(self.ground[i] for i in idx), sub,
                     label or f"{self.label}|restricted")

    def dual(self, label: str | None = None) -> "Poset":
        return Poset(self.ground, self.leq.T, label or f"{self.label}^op")

    def minimal_elements(self) -> list:
        n = len(self.ground)
        strict = self.leq & ~np.eye(n, dtype=bool)
        return [self.ground[i] for i in range(n) if not strict[:, i].any()]

    def maximal_elements(self) -> list:
        n = len(self.ground)
        strict = self.leq & ~np.eye(n, dtype=bool)
        return [self.ground[i] for i in range(n) if not strict[i, :].any()]

    def is_chain(self) -> bool:
        return bool((self.leq | self.leq.T).all())


def element_poset(elements: Iterable[Element], relation: Callable[[Element, Element], bool],
                  label: str = "poset") -> Poset:
    """Poset on group elements, ground sorted by (length, word)."""
    ground = tuple(sorted(set(elements)))
    matrix = [[relation(a, b) for b in ground] for a in ground]
    return Poset(ground, matrix, label)


def _set_sort_key(s: frozenset) -> tuple:
    return (len(s), tuple(sorted(s)))


def inclusion_poset(sets: Iterable[Iterable], label: str = "inclusion") -> Poset:
    """Poset of finite sets under inclusion, ground sorted by (size, members)."""
    ground = tuple(sorted({frozenset(s) for s in sets}, key=_set_sort_key))
    matrix = [[a <= b for b in ground] for a in ground]
    return Poset(ground, matrix, label)


def bruhat_interval(u: Element, w: Element, label: str | None = None) -> Poset:
    """The Bruhat interval [u, w], enumerated from the full group."""
    if u.system != w.system:
        raise ValueError("interval endpoints belong to different Coxeter systems")
    if not hecke.bruhat_leq(u, w):
        raise ValueError(f"{u} is not below {w} in Bruhat order")
    system = u.system
    ground = [z for z in system.elements()
              if hecke.bruhat_leq(u, z) and hecke.bruhat_leq(z, w)]
    return element_poset(ground, hecke.bruhat_leq,
                         label or f"bruhat[{u},{w}]")


def weak_interval(w: Element, label: str | None = None) -> Poset:
    """The right weak order interval [e, w]."""
    system = w.system
    ground = [z for z in system.elements() if hecke.weak_leq(z, w)]
    return element_poset(ground, hecke.weak_leq, label or f"weak[e,{w}]")


def sorting_order(system: CoxeterSystem, Q: Iterable[int], label: str | None = None) -> Poset:
    """The sorting order of the reduced word Q on the Bruhat interval
    [e, product(Q)]: u <= v iff the sorting subword positions of u are a
    subset of those of v."""
    Q = system.check_word(Q)
    if not hecke.is_reduced(system, Q):
        raise ValueError(f"sorting orders need a reduced word; {word_str(Q)} is not")
    w = hecke.demazure(system, Q)
    base = bruhat_interval(system.identity, w)
    keys = {u: set(hecke.sorting_subword(system, Q, u)) for u in base.ground}
    matrix = [[keys[a] <= keys[b] for b in base.ground] for a in base.ground]
    return Poset(base.ground, matrix, label or f"sorting[{word_str(Q)}]")


def _common_ground(posets: Sequence[Poset]) -> tuple:
    if not posets:
        raise ValueError("need at least one poset")
    ground = posets[0].ground
    for p in posets[1:]:
        if p.ground != ground:
            raise ValueError("posets must share an identical ground sequence")
    return ground


def relation_intersection(posets: Sequence[Poset], label: str = "intersection") -> Poset:
    """Entrywise AND of the relations; always a partial order."""
    ground = _common_ground(posets)
    matrix = posets[0].leq.copy()
    for p in posets[1:]:
        matrix &= p.leq
    return Poset(ground, matrix, label)


@dataclass
class RelationUnion:
    """Entrywise OR of order relations, which need not be transitive.

    ``matrix`` is the raw union (no transitive closure is taken);
    ``is_transitive`` records whether it already is one.
    """

    ground: tuple
    matrix: np.ndarray
    is_transitive: bool
    label: str = "union"

    def as_poset(self) -> Poset:
        return Poset(self.ground, self.matrix, self.label)


def relation_union(posets: Sequence[Poset], label: str = "union") -> RelationUnion:
    ground = _common_ground(posets)
    matrix = posets[0].leq.copy()
    for p in posets[1:]:
        matrix |= p.leq
    composed = (matrix.astype(np.uint8) @ matrix.astype(np.uint8)) > 0
    transitive = not (composed & ~matrix).any()
    matrix.setflags(write=False)
    return RelationUnion(ground, matrix, transitive, label)
