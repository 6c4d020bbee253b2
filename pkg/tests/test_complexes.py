import itertools
import random

import pytest

from cellres.complexes import (
    is_acyclic,
    lcm_lattice,
    polyhedral_from_incidence,
    reduced_homology_ranks,
    restrict_leq,
    simplicial_from_facets,
    simplicial_from_faces,
    taylor_complex,
)
from cellres.errors import CapExceededError, InvalidComplexError
from cellres.monomial import Monomial
from conftest import five_gen_nongeneric, hull_specs, mk, random_ideal, xy_square


def labels(*exps):
    return [Monomial(e) for e in exps]


L3 = labels((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_full_simplex_counts():
    X = simplicial_from_facets(L3, [(0, 1, 2)])
    assert [len(X.grade(k)) for k in range(X.num_grades)] == [1, 3, 3, 1]
    assert X.dim == 2
    assert [sorted(f.vertices) for f in X.facets()] == [[0, 1, 2]]


def test_five_vertex_facet_shape():
    # triangle plus a three-edge handle: 7 faces of dim >= 1
    M = five_gen_nongeneric()
    X = simplicial_from_facets(M.gens, [(3, 4), (0, 4), (0, 1), (1, 2, 3)])
    nonempty = [f for f in X.faces if f.dim >= 1]
    assert len(nonempty) == 7
    assert len(X.grade(1)) == 5


def test_isolated_vertices():
    X = simplicial_from_facets(labels((1, 0), (0, 1)), [(0,), (1,)])
    assert X.dim == 0
    assert len(X.grade(1)) == 2
    assert reduced_homology_ranks(X) == [0, 1]


def test_labels_are_lcms():
    M = xy_square()
    X = taylor_complex(M)
    for f in X.faces:
        expect = [0, 0]
        for v in f.vertices:
            expect = [max(a, b) for a, b in zip(expect, X.labels[v].exps)]
        assert f.label.exps == tuple(expect)


def test_boundary_squares_to_zero():
    rng = random.Random(5)
    for _ in range(20):
        M = random_ideal(rng, 3, 5, maxdeg=4)
        X = taylor_complex(M)
        for f in X.faces:
            if f.dim < 1:
                continue
            acc = {}
            for sid, s1 in f.boundary:
                for s2id, s2 in X.face(sid).boundary:
                    acc[s2id] = acc.get(s2id, 0) + s1 * s2
            assert not any(acc.values())


def test_polyhedral_quadrilateral_accepted():
    specs = [s for s in hull_specs() if s["id"] in
             {"v0", "v1", "v3", "v4", "e01", "e13", "e34", "e04", "Q"}]
    X = polyhedral_from_incidence(five_gen_nongeneric().gens, specs)
    assert X.dim == 2
    assert [sorted(f.vertices) for f in X.facets()] == [[0, 1, 3, 4]]
    assert is_acyclic(X)


def test_polyhedral_flipped_sign_rejected():
    specs = [dict(s) for s in hull_specs() if s["id"] in
             {"v0", "v1", "v3", "v4", "e01", "e13", "e34", "e04", "Q"}]
    for s in specs:
        if s["id"] == "Q":
            s["boundary"] = [["e01", 1], ["e13", -1], ["e34", 1], ["e04", -1]]
    with pytest.raises(InvalidComplexError):
        polyhedral_from_incidence(five_gen_nongeneric().gens, specs)


def test_polyhedral_single_vertex():
    X = polyhedral_from_incidence(labels((3, 1)), [{"id": "v", "dim": 0, "vertex": 0}])
    assert X.dim == 0
    assert is_acyclic(X)


def test_polyhedral_non_graded_rejected():
    specs = [
        {"id": "v0", "dim": 0, "vertex": 0},
        {"id": "v1", "dim": 0, "vertex": 1},
        {"id": "bad", "dim": 2, "boundary": [["v0", 1], ["v1", -1]]},
    ]
    with pytest.raises(InvalidComplexError):
        polyhedral_from_incidence(labels((1, 0), (0, 1)), specs)


def test_restrict_examples():
    X = taylor_complex(xy_square())
    # canonical order: 0=y^2, 1=xy, 2=x^2
    Y = restrict_leq(X, Monomial((2, 1)))
    assert [sorted(f.vertices) for f in Y.faces if f.dim >= 0] == [[1], [2], [1, 2]]
    Z = restrict_leq(X, Monomial((9, 9)))
    assert len(Z.faces) == len(X.faces)
    W = restrict_leq(X, Monomial((0, 0)))
    assert not W.has_nonempty_faces()
    assert is_acyclic(W)


def test_restrict_equals_induced_subcomplex():
    rng = random.Random(31)
    for _ in range(10):
        M = random_ideal(rng, 3, 4, maxdeg=3)
        X = taylor_complex(M)
        for beta in lcm_lattice(X):
            Y = restrict_leq(X, beta)
            allowed = {v for v in X.vertices() if X.labels[v].divides(beta)}
            induced = {tuple(sorted(f.vertices)) for f in X.faces
                       if f.dim >= 0 and set(f.vertices) <= allowed}
            got = {tuple(sorted(f.vertices)) for f in Y.faces if f.dim >= 0}
            assert got == induced


def test_homology_simplex_boundaries():
    # hollow d-simplex is a (d-1)-sphere
    for d in (1, 2, 3):
        vs = tuple(range(d + 1))
        lab = [Monomial(tuple(int(i == j) for j in range(d + 1))) for i in vs]
        X = simplicial_from_facets(lab, list(itertools.combinations(vs, d)))
        ranks = reduced_homology_ranks(X)
        assert ranks == [0] * d + [1]
        assert not is_acyclic(X)


def test_homology_cone_and_full_simplex():
    X = simplicial_from_facets(L3, [(0, 1, 2)])
    assert reduced_homology_ranks(X) == [0, 0, 0, 0]
    assert is_acyclic(X)
    # cones over random complexes are acyclic (vertex 0 in every facet)
    rng = random.Random(41)
    for _ in range(10):
        nv = rng.randint(2, 5)
        lab = [Monomial(tuple(int(i == j) for j in range(nv))) for i in range(nv)]
        facets = []
        for _ in range(rng.randint(1, 4)):
            size = rng.randint(1, nv - 1)
            others = rng.sample(range(1, nv), min(size, nv - 1))
            facets.append((0, *others))
        assert is_acyclic(simplicial_from_facets(lab, facets))


def test_homology_two_vertices():
    X = simplicial_from_facets(labels((1, 0), (0, 1)), [(0,), (1,)])
    assert reduced_homology_ranks(X) == [0, 1]


def test_euler_characteristic_matches_homology():
    rng = random.Random(43)
    for _ in range(15):
        M = random_ideal(rng, 3, rng.randint(1, 5), maxdeg=4)
        X = taylor_complex(M)
        faces_side = sum((-1) ** f.dim for f in X.faces)
        ranks = reduced_homology_ranks(X)
        hom_side = sum((-1) ** (k - 1) * r for k, r in enumerate(ranks))
        assert faces_side == hom_side


def test_lcm_lattice_examples():
    X = taylor_complex(xy_square())
    got = {m.exps for m in lcm_lattice(X)}
    # oracle: enumerate all 2^3 - 1 subsets and dedupe
    subsets = set()
    gens = [(0, 2), (1, 1), (2, 0)]
    for k in (1, 2, 3):
        for combo in itertools.combinations(gens, k):
            subsets.add(tuple(max(c) for c in zip(*combo)))
    subsets.add((0, 0))
    assert got == subsets == {(0, 0), (2, 0), (1, 1), (0, 2), (2, 1), (2, 2), (1, 2)}

    single = simplicial_from_facets(labels((3, 1)), [(0,)])
    assert {m.exps for m in lcm_lattice(single)} == {(0, 0), (3, 1)}

    twin = simplicial_from_facets(labels((2, 1), (2, 1)), [(0,), (1,)])
    assert {m.exps for m in lcm_lattice(twin)} == {(0, 0), (2, 1)}


def test_lcm_lattice_cap():
    M = mk(2, *[(i + 1, 22 - i) for i in range(21)])
    X = simplicial_from_facets(M.gens, [(i,) for i in range(21)])
    with pytest.raises(CapExceededError):
        lcm_lattice(X)
    assert len(lcm_lattice(X, cap=21)) > 0


def test_simplicial_from_faces_closure_check():
    with pytest.raises(InvalidComplexError):
        simplicial_from_faces(L3, [(0,), (1,), (2,), (0, 1, 2)])


def test_vertex_index_out_of_range():
    with pytest.raises(InvalidComplexError):
        simplicial_from_facets(L3, [(0, 5)])
