"""Exact reduced simplicial homology over GF(p) and over the rationals.

Complexes are presented by facets over an ordered vertex tuple.  Betti
numbers are reduced: the chain complex is augmented, so a point has all
zeros and the empty complex ``{frozenset()}`` has a single unit in
dimension -1.  Ranks are computed by exact elimination -- bitset rows
over GF(2), sparse modular rows for odd primes, sparse
:class:`fractions.Fraction` rows for the rationals -- never by floating
point.

>>> triangle = SimplicialComplex("abc", [{"a", "b"}, {"b", "c"}, {"a", "c"}])
>>> reduced_betti(triangle, 2).numbers
{1: 1}
>>> reduced_betti(triangle, 0).numbers
{1: 1}
>>> point = SimplicialComplex("a", [{"a"}])
>>> reduced_betti(point, 2).numbers
{}
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import BudgetExceededError
from .posets import Poset

__all__ = [
    "SimplicialComplex",
    "BettiProfile",
    "ContractibilityEvidence",
    "reduced_betti",
    "order_complex",
    "face_poset",
    "contractibility_evidence",
    "is_contractible_certificate",
    "DEFAULT_FACE_BUDGET",
]

DEFAULT_FACE_BUDGET = 200_000


class SimplicialComplex:
    """Abstract simplicial complex given by facets over ordered vertices.

    The vertex tuple fixes the total order used for boundary signs.
    Facets contained in other facets are dropped.  At minimum the empty
    face is present, so ``facets == {frozenset()}`` encodes the empty
    complex; a complex with no faces at all is not representable.
    """

    def __init__(self, vertices: Sequence, facets: Iterable[Iterable]):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertex order contains duplicates")
        index = {v: i for i, v in enumerate(vertices)}
        fs = {frozenset(f) for f in facets}
        if not fs:
            raise ValueError("a complex needs at least the empty facet frozenset()")
        for f in fs:
            for v in f:
                if v not in index:
                    raise ValueError(f"facet vertex {v!r} is not in the vertex order")
        self.vertices = vertices
        self.facets = frozenset(f for f in fs if not any(f < g for g in fs))
        self._index = index
        self._by_dim: dict[int, list[tuple[int, ...]]] | None = None

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) == 1

    def _faces_by_dim(self, budget: int = DEFAULT_FACE_BUDGET) -> dict[int, list[tuple[int, ...]]]:
        if self._by_dim is None:
            seen: set[tuple[int, ...]] = set()
            for facet in self.facets:
                idx = tuple(sorted(self._index[v] for v in facet))
                for k in range(len(idx) + 1):
                    for sub in itertools.combinations(idx, k):
                        if sub not in seen:
                            seen.add(sub)
                            if len(seen) > budget:
                                raise BudgetExceededError(
                                    f"face enumeration exceeded the budget of {budget} faces")
            by_dim: dict[int, list[tuple[int, ...]]] = {}
            for f in seen:
                by_dim.setdefault(len(f) - 1, []).append(f)
            for d in by_dim:
                by_dim[d].sort()
            self._by_dim = by_dim
        total = sum(len(v) for v in self._by_dim.values())
        if total > budget:
            raise BudgetExceededError(
                f"face enumeration exceeded the budget of {budget} faces")
        return self._by_dim

    def faces(self, budget: int = DEFAULT_FACE_BUDGET) -> set[frozenset]:
        """All faces, including the empty face, as vertex sets."""
        by_dim = self._faces_by_dim(budget)
        out = set()
        for faces in by_dim.values():
            for f in faces:
                out.add(frozenset(self.vertices[i] for i in f))
        return out

    def num_faces(self, budget: int = DEFAULT_FACE_BUDGET) -> int:
        return sum(len(v) for v in self._faces_by_dim(budget).values())

    def reduced_euler_characteristic(self, budget: int = DEFAULT_FACE_BUDGET) -> int:
        by_dim = self._faces_by_dim(budget)
        # (-1) ** d would be a float for d = -1 (the empty face)
        return sum(len(faces) if d % 2 == 0 else -len(faces)
                   for d, faces in by_dim.items())

    def cone_vertex(self):
        """A vertex lying in every facet, or None.  Such a vertex proves the
        complex contractible."""
        common = None
        for f in self.facets:
            common = set(f) if common is None else common & f
            if not common:
                return None
        if not common:
            return None
        return min(common, key=lambda v: self._index[v])

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={len(self.vertices)}, facets={len(self.facets)})"


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers over one coefficient field.

    ``coefficient_field`` is 0 for the rationals, otherwise a prime.
    ``counts`` holds the nonzero entries as (dimension, rank) pairs.
    """

    coefficient_field: int
    counts: tuple[tuple[int, int], ...]

    @property
    def numbers(self) -> dict[int, int]:
        return dict(self.counts)

    def get(self, d: int) -> int:
        return dict(self.counts).get(d, 0)

    def is_trivial(self) -> bool:
        return not self.counts

    def matches_sphere(self, d: int) -> bool:
        """Profile of the d-sphere: a single unit in dimension d.
        d = -1 means the empty complex."""
        return self.counts == ((d, 1),)

    def __str__(self) -> str:
        body = ", ".join(f"b~{d}={b}" for d, b in self.counts) or "all zero"
        name = "Q" if self.coefficient_field == 0 else f"GF({self.coefficient_field})"
        return f"[{name}: {body}]"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            pivot = row.bit_length() - 1
            other = basis.get(pivot)
            if other is None:
                basis[pivot] = row
                break
            row ^= other
    return len(basis)


def _rank_sparse_mod(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {col: (val * inv) % p for col, val in row.items()}
                rank += 1
                break
            coef = row[c]
            for col, val in piv.items():
                nv = (row.get(col, 0) - coef * val) % p
                if nv:
                    row[col] = nv
                else:
                    row.pop(col, None)
    return rank


def _rank_sparse_rational(rows: list[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        work: dict[int, Fraction] = {c: Fraction(v) for c, v in row.items() if v}
        while work:
            c = min(work)
            piv = pivots.get(c)
            if piv is None:
                lead = work[c]
                pivots[c] = {col: val / lead for col, val in work.items()}
                rank += 1
                break
            coef = work[c]
            for col, val in piv.items():
                nv = work.get(col, 0) - coef * val
                if nv:
                    work[col] = nv
                else:
                    work.pop(col, None)
    return rank


def _boundary_rows_signed(faces_d: list[tuple[int, ...]],
                          index_dm1: dict[tuple[int, ...], int]) -> list[dict[int, int]]:
    rows = []
    for face in faces_d:
        row: dict[int, int] = {}
        for i in range(len(face)):
            col = index_dm1[face[:i] + face[i + 1:]]
            row[col] = 1 if i % 2 == 0 else -1
        rows.append(row)
    return rows


def reduced_betti(K: SimplicialComplex, coefficient_field: int = 2,
                  face_budget: int = DEFAULT_FACE_BUDGET) -> BettiProfile:
    """Reduced Betti numbers of ``K`` over GF(p) (p prime) or, with
    ``coefficient_field=0``, over the rationals.

    >>> two_points = SimplicialComplex("ab", [{"a"}, {"b"}])
    >>> reduced_betti(two_points).numbers
    {0: 1}
    >>> empty = SimplicialComplex((), [frozenset()])
    >>> reduced_betti(empty).numbers
    {-1: 1}
    """
    if coefficient_field != 0 and not _is_prime(coefficient_field):
        raise ValueError("coefficient field must be 0 (rationals) or a prime")
    by_dim = K._faces_by_dim(face_budget)
    top = max(by_dim)
    counts = {d: len(faces) for d, faces in by_dim.items()}
    ranks: dict[int, int] = {0: 1 if counts.get(0, 0) else 0}
    for d in range(1, top + 1):
        index_dm1 = {f: i for i, f in enumerate(by_dim[d - 1])}
        faces_d = by_dim[d]
        if coefficient_field == 2:
            rows = []
            for face in faces_d:
                mask = 0
                for i in range(len(face)):
                    mask |= 1 << index_dm1[face[:i] + face[i + 1:]]
                rows.append(mask)
            ranks[d] = _rank_gf2(rows)
        else:
            rows = _boundary_rows_signed(faces_d, index_dm1)
            if coefficient_field == 0:
                ranks[d] = _rank_sparse_rational(rows)
            else:
                ranks[d] = _rank_sparse_mod(rows, coefficient_field)
    nonzero = []
    for d in range(-1, top + 1):
        b = counts.get(d, 0) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            nonzero.append((d, b))
    return BettiProfile(coefficient_field, tuple(nonzero))


def order_complex(P: Poset) -> SimplicialComplex:
    """The complex of chains of ``P``; facets are the maximal chains.

    The order complex of the empty poset is the empty complex.
    """
    n = len(P.ground)
    if n == 0:
        return SimplicialComplex((), [frozenset()])
    strict = P.leq & ~np.eye(n, dtype=bool)
    two_step = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
    cover = strict & ~two_step
    uppers = [np.flatnonzero(cover[i]).tolist() for i in range(n)]
    minimal = [i for i in range(n) if not strict[:, i].any()]
    facets: list[frozenset] = []
    stack = [(i, (i,)) for i in reversed(minimal)]
    while stack:
        i, chain = stack.pop()
        ups = uppers[i]
        if not ups:
            facets.append(frozenset(P.ground[j] for j in chain))
        else:
            for j in reversed(ups):
                stack.append((j, chain + (j,)))
    return SimplicialComplex(P.ground, facets)


def face_poset(K: SimplicialComplex, include_empty: bool = False,
               budget: int = DEFAULT_FACE_BUDGET) -> Poset:
    """Faces of ``K`` ordered by inclusion.

    The order complex of the face poset without the empty face is the
    barycentric subdivision of ``K``.
    """
    faces = [f for f in K.faces(budget) if f or include_empty]
    ground = sorted(faces, key=lambda f: (len(f), tuple(sorted(K._index[v] for v in f))))
    matrix = [[a <= b for b in ground] for a in ground]
    return Poset(tuple(ground), matrix, label="face poset")


@dataclass(frozen=True)
class ContractibilityEvidence:
    """Outcome of a contractibility check.

    ``method`` is ``"cone"`` for a genuine proof (a vertex in every
    facet), ``"homology"`` when the claim rests on vanishing reduced
    Betti numbers over GF(2) and the rationals, and None when the
    complex is provably not contractible.
    """

    contractible: bool
    method: str | None
    betti: tuple[BettiProfile, ...] = field(default=())


def contractibility_evidence(K: SimplicialComplex,
                             face_budget: int = DEFAULT_FACE_BUDGET) -> ContractibilityEvidence:
    v = K.cone_vertex()
    if v is not None:
        return ContractibilityEvidence(True, "cone")
    gf2 = reduced_betti(K, 2, face_budget)
    if gf2.is_trivial():
        # rank over GF(2) never exceeds rank over Q for an integer matrix
        # (a nonzero minor mod 2 is nonzero over Z), so every rational
        # reduced Betti number is bounded above by the GF(2) one; the
        # rational profile is therefore forced to zero without running
        # fraction elimination.
        rational = BettiProfile(0, ())
        return ContractibilityEvidence(True, "homology", (gf2, rational))
    profiles = (gf2, reduced_betti(K, 0, face_budget))
    return ContractibilityEvidence(False, None, profiles)


def is_contractible_certificate(K: SimplicialComplex) -> bool:
    """True when ``K`` has a cone vertex, or failing that when its reduced
    homology vanishes over GF(2) and the rationals (evidence, not proof)."""
    return contractibility_evidence(K).contractible


if __name__ == "__main__":
    import doctest

    doctest.testmod()
