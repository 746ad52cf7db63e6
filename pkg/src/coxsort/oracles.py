"""Independent reference models used to cross-check the word machinery.

A :class:`CayleyModel` is a concrete finite group given by explicit
generator states and a composition function.  Lengths come from a
breadth-first search of the Cayley graph, so nothing here touches the
rewriting code in :mod:`coxsort.coxeter`; agreement between the two is a
genuine consistency check, not a tautology.

The models provided are the permutation model of type A (one-line
permutations under composition) and the signed-permutation model of
type B.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Sequence

__all__ = [
    "CayleyModel",
    "permutation_model",
    "signed_permutation_model",
    "canonical_word_bruteforce",
    "bruhat_leq_bruteforce",
    "sorting_subword_bruteforce",
    "contains_reduced_word_bruteforce",
]


class CayleyModel:
    """A finite group with 1-based generators and BFS word lengths."""

    def __init__(self, generators: Sequence, compose: Callable, identity):
        self.generators = tuple(generators)
        self.compose = compose
        self.identity = identity
        lengths = {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for g in frontier:
                for gen in self.generators:
                    h = compose(g, gen)
                    if h not in lengths:
                        lengths[h] = lengths[g] + 1
                        nxt.append(h)
            frontier = nxt
        self.lengths = lengths

    @property
    def rank(self) -> int:
        return len(self.generators)

    def order(self) -> int:
        return len(self.lengths)

    def elements(self) -> list:
        return sorted(self.lengths, key=lambda g: (self.lengths[g], g))

    def product(self, word: Sequence[int]):
        g = self.identity
        for s in word:
            g = self.compose(g, self.generators[s - 1])
        return g

    def length_of_word(self, word: Sequence[int]) -> int:
        return self.lengths[self.product(word)]

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length_of_word(word) == len(word)

    def left_mult(self, s: int, g):
        return self.compose(self.generators[s - 1], g)

    def lexmin_word(self, g) -> tuple[int, ...]:
        """Greedy smallest left descent; yields the lex-minimal reduced word."""
        word = []
        while g != self.identity:
            for s in range(1, self.rank + 1):
                h = self.left_mult(s, g)
                if self.lengths[h] < self.lengths[g]:
                    word.append(s)
                    g = h
                    break
        return tuple(word)

    def artin_order(self, i: int, j: int) -> int:
        """Order of the product of generators i and j (sanity check vs m(i,j))."""
        g = self.compose(self.generators[i - 1], self.generators[j - 1])
        h = g
        n = 1
        while h != self.identity:
            h = self.compose(h, g)
            n += 1
        return n


def permutation_model(rank: int) -> CayleyModel:
    """Type A_rank as one-line permutations of 0..rank."""
    n = rank + 1
    identity = tuple(range(n))

    def compose(p, q):
        return tuple(p[q[i]] for i in range(n))

    gens = []
    for i in range(rank):
        g = list(identity)
        g[i], g[i + 1] = g[i + 1], g[i]
        gens.append(tuple(g))
    return CayleyModel(gens, compose, identity)


def signed_permutation_model(rank: int) -> CayleyModel:
    """Type B_rank as signed permutations in window notation.

    Generators 1..rank-1 swap adjacent window entries; generator ``rank``
    negates the last entry, matching a chain diagram whose double bond
    sits between the last two nodes.
    """
    n = rank
    identity = tuple(range(1, n + 1))

    def compose(u, v):
        out = []
        for i in range(n):
            vi = v[i]
            out.append(u[vi - 1] if vi > 0 else -u[-vi - 1])
        return tuple(out)

    gens = []
    for i in range(rank - 1):
        g = list(identity)
        g[i], g[i + 1] = g[i + 1], g[i]
        gens.append(tuple(g))
    last = list(identity)
    last[-1] = -last[-1]
    gens.append(tuple(last))
    return CayleyModel(gens, compose, identity)


def canonical_word_bruteforce(model: CayleyModel, word: Sequence[int]) -> tuple[int, ...]:
    return model.lexmin_word(model.product(word))


def bruhat_leq_bruteforce(model: CayleyModel, u_word, v_word) -> bool:
    """Subword test by exhaustive scan over one reduced word of v."""
    u = model.product(u_word)
    v = model.product(v_word)
    vword = model.lexmin_word(v)
    k = model.lengths[u]
    if k > len(vword):
        return False
    return any(model.product(sub) == u for sub in itertools.combinations(vword, k))


def contains_reduced_word_bruteforce(model: CayleyModel, Q, u_word) -> bool:
    u = model.product(u_word)
    k = model.lengths[u]
    if k > len(Q):
        return False
    return any(model.product(sub) == u for sub in itertools.combinations(Q, k))


def sorting_subword_bruteforce(model: CayleyModel, Q, u_word):
    """First position subset, in lexicographic order, whose subword is a
    reduced word for u; None when no subset works."""
    u = model.product(u_word)
    k = model.lengths[u]
    if k > len(Q):
        return None
    for subset in itertools.combinations(range(1, len(Q) + 1), k):
        if model.product(tuple(Q[p - 1] for p in subset)) == u:
            return subset
    return None
