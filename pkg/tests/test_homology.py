from fractions import Fraction

import pytest

from coxsort import BudgetExceededError, CoxeterSystem, subword_complex
from coxsort.homology import (BettiProfile, SimplicialComplex,
                              _boundary_rows_signed, _rank_gf2,
                              _rank_sparse_mod, _rank_sparse_rational,
                              contractibility_evidence, face_poset,
                              is_contractible_certificate, order_complex,
                              reduced_betti)
from coxsort.posets import Poset

EMPTY = SimplicialComplex((), [frozenset()])
POINT = SimplicialComplex("a", [{"a"}])
TWO_POINTS = SimplicialComplex("ab", [{"a"}, {"b"}])
CIRCLE = SimplicialComplex((1, 2, 3), [(1, 2), (1, 3), (2, 3)])
SOLID = SimplicialComplex((1, 2, 3), [(1, 2, 3)])
OCTAHEDRON = SimplicialComplex(
    range(1, 7),
    [(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])
# antipodal quotient of the icosahedron: 6 vertices, 15 edges, 10 triangles
PROJECTIVE_PLANE = SimplicialComplex(
    range(1, 7),
    [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
     (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)])
PATH = SimplicialComplex(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 5)])


def test_constructor_validation():
    with pytest.raises(ValueError, match="duplicates"):
        SimplicialComplex("aa", [{"a"}])
    with pytest.raises(ValueError, match="at least"):
        SimplicialComplex("ab", [])
    with pytest.raises(ValueError, match="not in the vertex order"):
        SimplicialComplex("ab", [{"c"}])


def test_dominated_facets_are_dropped():
    k = SimplicialComplex((1, 2, 3), [(1, 2, 3), (1, 2), (3,)])
    assert k.facets == {frozenset({1, 2, 3})}
    assert k.is_pure()


def test_basic_face_counts():
    assert EMPTY.dim == -1
    assert EMPTY.num_faces() == 1
    assert POINT.num_faces() == 2
    assert SOLID.num_faces() == 8
    assert OCTAHEDRON.num_faces() == 1 + 6 + 12 + 8
    assert CIRCLE.reduced_euler_characteristic() == -1  # -1 + 3 - 3
    assert OCTAHEDRON.reduced_euler_characteristic() == 1  # -1 + 6 - 12 + 8
    assert EMPTY.reduced_euler_characteristic() == -1
    assert isinstance(EMPTY.reduced_euler_characteristic(), int)


def test_cone_vertex():
    assert SOLID.cone_vertex() == 1
    assert CIRCLE.cone_vertex() is None
    assert EMPTY.cone_vertex() is None
    assert POINT.cone_vertex() == "a"
    star = SimplicialComplex("zabc", [("z", "a"), ("z", "b"), ("z", "c")])
    assert star.cone_vertex() == "z"


def test_betti_standard_spaces():
    assert reduced_betti(EMPTY).numbers == {-1: 1}
    assert reduced_betti(POINT).numbers == {}
    assert reduced_betti(TWO_POINTS).numbers == {0: 1}
    assert reduced_betti(CIRCLE).numbers == {1: 1}
    assert reduced_betti(SOLID).numbers == {}
    assert reduced_betti(OCTAHEDRON).numbers == {2: 1}
    for field in (0, 3):
        assert reduced_betti(OCTAHEDRON, field).numbers == {2: 1}
        assert reduced_betti(CIRCLE, field).numbers == {1: 1}


def test_betti_depends_on_field_for_projective_plane():
    assert reduced_betti(PROJECTIVE_PLANE, 2).numbers == {1: 1, 2: 1}
    assert reduced_betti(PROJECTIVE_PLANE, 0).numbers == {}
    assert reduced_betti(PROJECTIVE_PLANE, 3).numbers == {}
    assert PROJECTIVE_PLANE.reduced_euler_characteristic() == 0


def test_profile_helpers():
    p = reduced_betti(OCTAHEDRON)
    assert p.matches_sphere(2)
    assert not p.matches_sphere(1)
    assert not p.is_trivial()
    assert p.get(2) == 1 and p.get(0) == 0
    assert str(p) == "[GF(2): b~2=1]"
    assert str(reduced_betti(SOLID, 0)) == "[Q: all zero]"
    assert reduced_betti(EMPTY).matches_sphere(-1)
    assert BettiProfile(2, ()).is_trivial()


def test_field_validation():
    with pytest.raises(ValueError, match="prime"):
        reduced_betti(POINT, 4)
    with pytest.raises(ValueError, match="prime"):
        reduced_betti(POINT, -1)


def test_face_budget():
    big = SimplicialComplex(range(18), [tuple(range(18))])
    with pytest.raises(BudgetExceededError, match="budget"):
        big.num_faces()
    assert big.num_faces(budget=2 ** 18) == 2 ** 18


def test_rank_backends_agree_on_boundary_matrices():
    for k in (CIRCLE, OCTAHEDRON, PROJECTIVE_PLANE, SOLID):
        by_dim = k._faces_by_dim()
        for d in range(1, max(by_dim) + 1):
            index = {f: i for i, f in enumerate(by_dim[d - 1])}
            rows = _boundary_rows_signed(by_dim[d], index)
            masks = []
            for row in rows:
                m = 0
                for col in row:
                    m |= 1 << col
                masks.append(m)
            r2 = _rank_gf2(masks)
            rq = _rank_sparse_rational(rows)
            assert r2 <= rq  # mod-2 rank is a lower bound for integer matrices
            # the only torsion in these fixtures is 2-torsion, so GF(5) agrees with Q
            assert rq == _rank_sparse_mod(rows, 5)


def test_rank_helpers_small_cases():
    assert _rank_gf2([0b11, 0b01, 0b10]) == 2
    assert _rank_gf2([]) == 0
    assert _rank_sparse_mod([{0: 2, 1: 4}, {0: 1, 1: 2}], 3) == 1
    assert _rank_sparse_rational([{0: Fraction(1, 2)}, {0: Fraction(2, 3)}]) == 1


def test_order_complex_of_chain_is_simplex():
    import numpy as np
    p = Poset(range(3), [[i <= j for j in range(3)] for i in range(3)])
    k = order_complex(p)
    assert k.facets == {frozenset({0, 1, 2})}
    empty = Poset([], np.zeros((0, 0), dtype=bool))
    assert order_complex(empty).facets == {frozenset()}


def test_order_complex_antichain():
    import numpy as np
    p = Poset("ab", np.eye(2, dtype=bool))
    k = order_complex(p)
    assert k.facets == {frozenset("a"), frozenset("b")}
    assert reduced_betti(k).numbers == {0: 1}


def test_face_poset_roundtrip():
    fp = face_poset(CIRCLE)
    assert len(fp) == 6  # empty face excluded by default
    assert len(face_poset(CIRCLE, include_empty=True)) == 7
    # barycentric subdivision preserves homology
    subdivided = order_complex(fp)
    assert reduced_betti(subdivided).numbers == reduced_betti(CIRCLE).numbers


def test_barycentric_invariance_for_subword_complexes():
    b2 = CoxeterSystem.type_b(2)
    for Q, word in (((1, 2, 1, 2), (1, 2, 1)), ((1, 2, 1, 2, 1), (1, 2, 1, 2))):
        k = subword_complex(b2, Q, b2.element(word)).as_simplicial_complex()
        subdivided = order_complex(face_poset(k))
        for field in (2, 0):
            assert (reduced_betti(k, field).numbers
                    == reduced_betti(subdivided, field).numbers)


def test_contractibility_evidence():
    cone = contractibility_evidence(SOLID)
    assert cone.contractible and cone.method == "cone"
    assert cone.betti == ()
    path = contractibility_evidence(PATH)
    assert path.contractible and path.method == "homology"
    fields = [p.coefficient_field for p in path.betti]
    assert fields == [2, 0]
    assert all(p.is_trivial() for p in path.betti)
    hole = contractibility_evidence(CIRCLE)
    assert not hole.contractible and hole.method is None
    assert is_contractible_certificate(PATH)
    assert not is_contractible_certificate(OCTAHEDRON)


def test_euler_characteristic_matches_betti_alternation():
    for k in (EMPTY, POINT, TWO_POINTS, CIRCLE, SOLID, OCTAHEDRON, PATH):
        profile = reduced_betti(k, 0)
        total = sum((1 if d % 2 == 0 else -1) * b for d, b in profile.counts)
        assert total == k.reduced_euler_characteristic()
