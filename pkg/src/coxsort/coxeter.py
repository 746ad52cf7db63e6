"""Finite Coxeter systems with exact word arithmetic.

A system is presented by its matrix of orders ``m(i, j)``: the generators
are involutions and, for ``i != j``, the product ``s_i s_j`` has order
``m(i, j)``.  Elements are identified purely by word rewriting:

* a *nil move* deletes an adjacent equal pair of letters;
* a *braid move* rewrites an alternating run ``s_i s_j s_i ...`` of
  length ``m(i, j)`` as the run ``s_j s_i s_j ...`` of the same length.

By the word property of Coxeter groups these moves suffice to decide
equality, so every element can be stored by its lexicographically
minimal reduced word.  No root-system or matrix arithmetic is involved,
which keeps the non-crystallographic types (``I2(m)``, ``H3``) on
exactly the same footing as the classical series.

Generator indices are 1-based everywhere.

>>> b2 = CoxeterSystem.type_b(2)
>>> b2.element((2, 1, 2, 1))
<1,2,1,2>
>>> b2.longest_element().length
4
>>> CoxeterSystem.type_a(2).element((2, 1, 2))
<1,2,1>

Systems and elements are immutable after construction.  Internal caches
only ever gain entries that any caller would recompute identically, so
instances may be shared between threads or tasks; no result depends on
a cache hit.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import BudgetExceededError

__all__ = ["CoxeterSystem", "Element", "word_str", "parse_word"]

Word = tuple[int, ...]


def word_str(word: Sequence[int]) -> str:
    """Render a word as comma-joined indices, or ``"e"`` when empty.

    >>> word_str((1, 2, 1))
    '1,2,1'
    >>> word_str(())
    'e'
    """
    return ",".join(str(s) for s in word) if word else "e"


def parse_word(text: str) -> Word:
    """Parse ``"1,2,1"`` (or ``""``/``"e"`` for the empty word) into a tuple.

    >>> parse_word("1,2,3,1,2,1")
    (1, 2, 3, 1, 2, 1)
    >>> parse_word("e")
    ()
    """
    text = text.strip()
    if text in ("", "e"):
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(
            f"cannot parse word {text!r}: expected comma-separated generator indices"
        ) from exc


def _nil_sweep(word: Word) -> Word:
    # One stack pass deletes adjacent equal pairs, including pairs exposed
    # by earlier deletions.
    out: list[int] = []
    for s in word:
        if out and out[-1] == s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def _adjacent_pair(word: Word) -> int:
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return -1


class CoxeterSystem:
    """A Coxeter presentation of finite rank, with enumeration budgets.

    ``size_cap`` bounds group enumeration and ``braid_budget`` bounds the
    number of words visited while canonicalizing a single word.  Both are
    generous for desk-scale groups; exceeding either raises
    :class:`~coxsort.errors.BudgetExceededError` rather than truncating.

    Two systems compare equal when their matrices agree, regardless of
    budgets, and elements of equal systems are interchangeable.
    """

    def __init__(self, matrix: Iterable[Iterable[int]], size_cap: int = 50_000,
                 braid_budget: int = 1_000_000):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        n = len(rows)
        if n == 0:
            raise ValueError("a Coxeter matrix must have rank at least 1")
        for row in rows:
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
        for i in range(n):
            if rows[i][i] != 1:
                raise ValueError(f"diagonal entry m({i + 1},{i + 1}) must be 1")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        f"Coxeter matrix must be symmetric; entries ({i + 1},{j + 1}) differ")
                if rows[i][j] < 2:
                    raise ValueError(
                        f"off-diagonal entry m({i + 1},{j + 1}) must be at least 2")
        if size_cap <= 0 or braid_budget <= 0:
            raise ValueError("size_cap and braid_budget must be positive")
        self.matrix = rows
        self.rank = n
        self.size_cap = int(size_cap)
        self.braid_budget = int(braid_budget)
        self._canon: dict[Word, Word] = {}
        self._closures: dict[Word, frozenset[Word]] = {}
        self._all_elements: tuple[Element, ...] | None = None
        self._op_cache: dict[str, dict] = {}

    # ------------------------------------------------------------------
    # named presentations

    @classmethod
    def type_a(cls, n: int, **kwargs) -> "CoxeterSystem":
        """The symmetric group on n+1 letters; m(i, i+1) = 3 along a chain."""
        if n < 1:
            raise ValueError("type A needs rank >= 1")
        return cls(_chain_matrix(n, {}), **kwargs)

    @classmethod
    def type_b(cls, n: int, **kwargs) -> "CoxeterSystem":
        """The hyperoctahedral group; a chain with m(n-1, n) = 4."""
        if n < 2:
            raise ValueError("type B needs rank >= 2")
        return cls(_chain_matrix(n, {(n - 1, n): 4}), **kwargs)

    @classmethod
    def type_d(cls, n: int, **kwargs) -> "CoxeterSystem":
        """Index-two subgroup of type B; generators 1 and 2 both braid with 3."""
        if n < 2:
            raise ValueError("type D needs rank >= 2")
        bonds = {(i, i + 1): 3 for i in range(3, n)}
        if n >= 3:
            bonds[(1, 3)] = 3
            bonds[(2, 3)] = 3
        matrix = [[1 if i == j else bonds.get((min(i, j), max(i, j)), 2)
                   for j in range(1, n + 1)] for i in range(1, n + 1)]
        return cls(matrix, **kwargs)

    @classmethod
    def dihedral(cls, m: int, **kwargs) -> "CoxeterSystem":
        """I2(m): two generators whose product has order m."""
        if m < 2:
            raise ValueError("a dihedral system needs m >= 2")
        return cls(((1, m), (m, 1)), **kwargs)

    @classmethod
    def type_h3(cls, **kwargs) -> "CoxeterSystem":
        """The symmetry group of the icosahedron (order 120)."""
        return cls(((1, 5, 2), (5, 1, 3), (2, 3, 1)), **kwargs)

    # ------------------------------------------------------------------

    def m(self, i: int, j: int) -> int:
        return self.matrix[i - 1][j - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoxeterSystem):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"CoxeterSystem(rank={self.rank}, matrix={self.matrix})"

    def check_word(self, word: Iterable[int]) -> Word:
        """Validate letters and return the word as a tuple."""
        w = tuple(int(s) for s in word)
        for s in w:
            if not 1 <= s <= self.rank:
                raise ValueError(f"letter {s} outside generator range 1..{self.rank}")
        return w

    # ------------------------------------------------------------------
    # canonicalization

    def _braid_neighbors(self, word: Word) -> list[Word]:
        matrix = self.matrix
        out: list[Word] = []
        L = len(word)
        for i in range(L - 1):
            a = word[i]
            b = word[i + 1]
            if a == b:
                continue
            m = matrix[a - 1][b - 1]
            end = i + m
            if end > L:
                continue
            ok = True
            for k in range(2, m):
                if word[i + k] != (a if k % 2 == 0 else b):
                    ok = False
                    break
            if ok:
                run = tuple((b if k % 2 == 0 else a) for k in range(m))
                out.append(word[:i] + run + word[end:])
        return out

    def canonical_word(self, word: Iterable[int]) -> Word:
        """The lexicographically minimal reduced word of the element spelt
        by ``word``.

        Nil moves strip adjacent equal pairs; between deletions a breadth
        first search over braid moves either exposes another pair or, by
        exhausting the braid closure, proves the word reduced.  The
        minimum of the closure is then the canonical form.
        """
        current = _nil_sweep(self.check_word(word))
        hit = self._canon.get(current)
        if hit is not None:
            return hit
        budget = self.braid_budget
        spent = 0
        pending = [current]
        canon: Word | None = None
        while canon is None:
            hit = self._canon.get(current)
            if hit is not None:
                canon = hit
                break
            seen = {current}
            queue = deque((current,))
            shorter: Word | None = None
            while queue:
                w = queue.popleft()
                for nb in self._braid_neighbors(w):
                    if nb in seen:
                        continue
                    pair = _adjacent_pair(nb)
                    if pair >= 0:
                        shorter = _nil_sweep(nb[:pair] + nb[pair + 2:])
                        queue.clear()
                        break
                    seen.add(nb)
                    if spent + len(seen) > budget:
                        raise BudgetExceededError(
                            f"braid closure exceeded the node budget of {budget}")
                    queue.append(nb)
            spent += len(seen)
            if shorter is None:
                canon = min(seen)
                closure = frozenset(seen)
                self._closures.setdefault(canon, closure)
                for member in closure:
                    self._canon.setdefault(member, canon)
            else:
                pending.append(shorter)
                current = shorter
        for w in pending:
            self._canon.setdefault(w, canon)
        return canon

    def reduced_words_of(self, word: Iterable[int]) -> frozenset[Word]:
        """The braid closure of the element spelt by ``word``: all of its
        reduced words."""
        canon = self.canonical_word(word)
        closure = self._closures.get(canon)
        if closure is None:
            # canonical_word stores the closure as a side effect; this
            # fallback only fires for elements built before a cache clear.
            seen = {canon}
            queue = deque((canon,))
            while queue:
                w = queue.popleft()
                for nb in self._braid_neighbors(w):
                    if nb not in seen:
                        seen.add(nb)
                        if len(seen) > self.braid_budget:
                            raise BudgetExceededError(
                                f"braid closure exceeded the node budget of {self.braid_budget}")
                        queue.append(nb)
            closure = frozenset(seen)
            self._closures[canon] = closure
        return closure

    # ------------------------------------------------------------------
    # elements

    @property
    def identity(self) -> "Element":
        return self.element(())

    def generator(self, s: int) -> "Element":
        return self.element((s,))

    def element(self, word: Iterable[int]) -> "Element":
        """The group element spelt by ``word`` (any word, reduced or not)."""
        return Element(self, self.canonical_word(word))

    def elements(self) -> tuple["Element", ...]:
        """Every group element, sorted by (length, canonical word).

        Breadth-first search over right multiplication; raises
        :class:`BudgetExceededError` if the group has more than
        ``size_cap`` elements (in particular for non-finite matrices).
        """
        if self._all_elements is None:
            seen = {self.identity}
            frontier = list(seen)
            while frontier:
                nxt = []
                for e in frontier:
                    for s in range(1, self.rank + 1):
                        f = e.mult_right(s)
                        if f.length > e.length and f not in seen:
                            if len(seen) >= self.size_cap:
                                raise BudgetExceededError(
                                    f"group enumeration exceeded the size cap of {self.size_cap}")
                            seen.add(f)
                            nxt.append(f)
                frontier = nxt
            self._all_elements = tuple(sorted(seen))
        return self._all_elements

    def order(self) -> int:
        return len(self.elements())

    def longest_element(self) -> "Element":
        els = self.elements()
        top = els[-1]
        if len(els) > 1 and els[-2].length == top.length:
            raise RuntimeError("longest element is not unique; "
                               "the presentation is not a finite Coxeter system")
        return top


def _chain_matrix(n: int, overrides: dict[tuple[int, int], int]) -> list[list[int]]:
    bonds = {(i, i + 1): 3 for i in range(1, n)}
    bonds.update(overrides)
    return [[1 if i == j else bonds.get((min(i, j), max(i, j)), 2)
             for j in range(1, n + 1)] for i in range(1, n + 1)]


class Element:
    """A group element, stored by its lexicographically minimal reduced word.

    Instances are created through :class:`CoxeterSystem` methods; the
    ``word`` attribute is always canonical.  Elements sort by
    ``(length, word)``, the ground ordering used by every poset in this
    package.

    >>> a2 = CoxeterSystem.type_a(2)
    >>> w = a2.element((1, 2))
    >>> w.mult_right(1)
    <1,2,1>
    >>> w.inverse()
    <2,1>
    >>> w.is_right_descent(2)
    True
    """

    __slots__ = ("system", "word")

    def __init__(self, system: CoxeterSystem, word: Word):
        self.system = system
        self.word = word

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def mult_right(self, s: int) -> "Element":
        return Element(self.system, self.system.canonical_word(self.word + (int(s),)))

    def mult_left(self, s: int) -> "Element":
        return Element(self.system, self.system.canonical_word((int(s),) + self.word))

    def __mul__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if self.system != other.system:
            raise ValueError("cannot multiply elements of different Coxeter systems")
        return Element(self.system, self.system.canonical_word(self.word + other.word))

    def inverse(self) -> "Element":
        return Element(self.system, self.system.canonical_word(self.word[::-1]))

    def is_right_descent(self, s: int) -> bool:
        """Whether right multiplication by generator ``s`` shortens the element."""
        return self.mult_right(s).length < self.length

    def is_left_descent(self, s: int) -> bool:
        return self.mult_left(s).length < self.length

    def right_descents(self) -> tuple[int, ...]:
        return tuple(s for s in range(1, self.system.rank + 1) if self.is_right_descent(s))

    def left_descents(self) -> tuple[int, ...]:
        return tuple(s for s in range(1, self.system.rank + 1) if self.is_left_descent(s))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.word == other.word and self.system == other.system

    def __hash__(self) -> int:
        return hash((self.system, self.word))

    def __lt__(self, other: "Element") -> bool:
        # ground ordering: by length, then lexicographically by word
        return (self.length, self.word) < (other.length, other.word)

    def __le__(self, other: "Element") -> bool:
        return (self.length, self.word) <= (other.length, other.word)

    def __repr__(self) -> str:
        return f"<{word_str(self.word)}>"

    def __str__(self) -> str:
        return word_str(self.word)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
