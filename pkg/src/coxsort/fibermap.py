"""The monoid-product map from subsets of a reduced word to the group.

For a reduced word Q of w, every set S of positions yields an element
f(S) = Demazure product of the subword of Q at S.  The map f is
order-preserving from the boolean lattice onto the interval [e, w] in
Bruhat order, and its upper fibers f^{-1}([u, w]) behave like the
subword complex of (Q, u) turned inside out: they are the complements
of its faces.  This module computes f, its fibers, and the homotopy
certificates attached to them.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable

from .coxeter import CoxeterSystem, Element
from .errors import BudgetExceededError
from .hecke import bruhat_leq, demazure, sorting_subword
from .homology import (BettiProfile, contractibility_evidence, order_complex,
                       reduced_betti)
from .posets import bruhat_interval, inclusion_poset
from .subword import subword_complex

__all__ = [
    "subset_image",
    "subset_images",
    "check_order_preserving",
    "fiber_up",
    "fiber_open",
    "sorting_section",
    "FiberReport",
    "certify_fiber_contractible",
    "IntervalReport",
    "certify_interval_sphere",
]

_MASK_CAP = 16


def _require_reduced(system: CoxeterSystem, Q: tuple[int, ...]) -> Element:
    w = system.element(Q)
    if w.length != len(Q):
        raise ValueError(f"the word {Q} is not reduced")
    return w


def subset_image(system: CoxeterSystem, Q: Iterable[int],
                 positions: Iterable[int]) -> Element:
    """f(S): Demazure product of the subword of Q at the 1-based
    positions S."""
    Q = tuple(Q)
    _require_reduced(system, Q)
    S = sorted(set(positions))
    if S and not (1 <= S[0] and S[-1] <= len(Q)):
        raise ValueError(f"positions must lie in 1..{len(Q)}")
    return demazure(system, tuple(Q[j - 1] for j in S))


def subset_images(system: CoxeterSystem, Q: Iterable[int]) -> dict[frozenset[int], Element]:
    """f on the whole boolean lattice of position sets, by dynamic
    programming over bitmasks (each mask extends mask-without-top-bit
    by one letter)."""
    Q = tuple(Q)
    _require_reduced(system, Q)
    n = len(Q)
    if n > _MASK_CAP:
        raise BudgetExceededError(
            f"boolean lattice on {n} positions exceeds the cap of {_MASK_CAP}")
    cache = system._op_cache.setdefault("subset_images", {})
    if Q not in cache:
        imgs: list[Element] = [system.identity] * (1 << n)
        for mask in range(1, 1 << n):
            top = mask.bit_length() - 1
            prev = imgs[mask ^ (1 << top)]
            s = Q[top]
            imgs[mask] = prev if prev.is_right_descent(s) else prev.mult_right(s)
        cache[Q] = {
            frozenset(j + 1 for j in range(n) if mask >> j & 1): imgs[mask]
            for mask in range(1 << n)
        }
    return cache[Q]


def check_order_preserving(system: CoxeterSystem, Q: Iterable[int],
                           seed: int = 0, samples: int = 2000) -> bool:
    """Verify S <= T implies f(S) <= f(T) in Bruhat order: exhaustively
    through 10 positions, by seeded sampling of pairs above that."""
    Q = tuple(Q)
    imgs = subset_images(system, Q)
    n = len(Q)
    if n <= 10:
        for mask in range(1 << n):
            S = frozenset(j + 1 for j in range(n) if mask >> j & 1)
            sub = (mask - 1) & mask
            while True:
                T = frozenset(j + 1 for j in range(n) if sub >> j & 1)
                if not bruhat_leq(imgs[T], imgs[S]):
                    return False
                if sub == 0:
                    break
                sub = (sub - 1) & mask
        return True
    rng = random.Random(seed)
    full = (1 << n) - 1
    for _ in range(samples):
        a = rng.randint(0, full)
        b = rng.randint(0, full)
        small, big = a & b, a | b
        S = frozenset(j + 1 for j in range(n) if small >> j & 1)
        T = frozenset(j + 1 for j in range(n) if big >> j & 1)
        if not bruhat_leq(imgs[S], imgs[T]):
            return False
    return True


def fiber_up(system: CoxeterSystem, Q: Iterable[int], u: Element) -> set[frozenset[int]]:
    """f^{-1} of the upper interval [u, w]: all position sets whose
    image dominates u.  These are exactly the complements of the faces
    of the subword complex of (Q, u)."""
    Q = tuple(Q)
    imgs = subset_images(system, Q)
    return {S for S, g in imgs.items() if bruhat_leq(u, g)}


def fiber_open(system: CoxeterSystem, Q: Iterable[int], u: Element) -> set[frozenset[int]]:
    """f^{-1} of the open interval (u, w).  Requires u strictly below w."""
    Q = tuple(Q)
    w = _require_reduced(system, Q)
    if u == w or not bruhat_leq(u, w):
        raise ValueError("open-interval fibers need u strictly below the full product")
    imgs = subset_images(system, Q)
    return {S for S, g in imgs.items()
            if g != u and g != w and bruhat_leq(u, g)}


def sorting_section(system: CoxeterSystem, Q: Iterable[int]) -> dict[Element, frozenset[int]]:
    """The canonical section of f: each u in [e, w] is sent to its
    sorting subword positions, and f of those positions returns u."""
    Q = tuple(Q)
    w = _require_reduced(system, Q)
    out: dict[Element, frozenset[int]] = {}
    for u in bruhat_interval(system.identity, w).ground:
        S = frozenset(sorting_subword(system, Q, u))
        if subset_image(system, Q, S) != u:
            raise AssertionError(f"section failed at {u!r}: image of {sorted(S)} differs")
        out[u] = S
    return out


@dataclass(frozen=True)
class FiberReport:
    """Certificate that an upper fiber carries the homotopy type the
    accompanying subword complex predicts."""

    target: tuple[int, ...]
    complex_type: str
    poset_size: int
    contractible: bool
    method: str | None
    betti: tuple[BettiProfile, ...] = field(default=())

    def to_json(self) -> str:
        return json.dumps({
            "target": list(self.target),
            "complex_type": self.complex_type,
            "poset_size": self.poset_size,
            "contractible": self.contractible,
            "method": self.method,
            "betti": [{"field": p.coefficient_field, "numbers": dict(p.counts)}
                      for p in self.betti],
        }, sort_keys=True)


def certify_fiber_contractible(system: CoxeterSystem, Q: Iterable[int],
                               u: Element) -> FiberReport:
    """Certify that the strict part of the upper fiber at u (the fiber
    poset minus its maximum, the full position set) is contractible.

    The fiber poset ordered by inclusion always has the full set as
    maximum; its proper part is what carries the geometry, and matches
    the barycentric subdivision of the subword complex of (Q, u).
    """
    Q = tuple(Q)
    w = _require_reduced(system, Q)
    if not bruhat_leq(u, w):
        raise ValueError("u must lie below the product of Q")
    up = fiber_up(system, Q, u)
    full = frozenset(range(1, len(Q) + 1))
    kind = subword_complex(system, Q, u).classify()
    if u == w:
        # the fiber is {full}; its proper part is empty, so nothing to certify
        return FiberReport(u.word, kind, len(up), True, "singleton")
    proper = inclusion_poset(up - {full}, label="fiber")
    K = order_complex(proper)
    ev = contractibility_evidence(K)
    return FiberReport(u.word, kind, len(up), ev.contractible, ev.method, ev.betti)


@dataclass(frozen=True)
class IntervalReport:
    """Homology check of the order complex of an open interval (u, w)."""

    lower: tuple[int, ...]
    upper: tuple[int, ...]
    expected_dim: int
    profile: BettiProfile
    matches: bool
    size: int

    def to_json(self) -> str:
        return json.dumps({
            "lower": list(self.lower),
            "upper": list(self.upper),
            "expected_dim": self.expected_dim,
            "betti": {"field": self.profile.coefficient_field,
                      "numbers": dict(self.profile.counts)},
            "matches": self.matches,
            "size": self.size,
        }, sort_keys=True)


def certify_interval_sphere(u: Element, w: Element,
                            coefficient_field: int = 2) -> IntervalReport:
    """Check that the order complex of the open Bruhat interval (u, w)
    has the reduced homology of a sphere of dimension l(w)-l(u)-2.

    Needs l(w)-l(u) >= 2 so the open interval is nonempty-or-empty in a
    meaningful way; for length difference exactly 2 the open interval
    is two incomparable points, the 0-sphere.
    """
    if u.system != w.system:
        raise ValueError("elements belong to different systems")
    if not bruhat_leq(u, w):
        raise ValueError("u must lie below w in Bruhat order")
    d = w.length - u.length
    if d < 2:
        raise ValueError("open-interval homology needs length difference at least 2")
    closed = bruhat_interval(u, w)
    inner = [x for x in closed.ground if x != u and x != w]
    open_poset = closed.restrict(inner, label=f"({u}, {w})")
    K = order_complex(open_poset)
    profile = reduced_betti(K, coefficient_field)
    expected = d - 2
    return IntervalReport(u.word, w.word, expected, profile,
                          profile.matches_sphere(expected), len(inner))
