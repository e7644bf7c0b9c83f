import itertools
import random

import pytest

from graver_opt import (
    BudgetExceededError,
    DimensionError,
    FormTensor,
    IntegerMatrix,
    characterize_diagonal_strictness,
    compute_graver_basis,
    compute_matroid,
    degree_generators,
    diagonal_generators,
    in_dual_diagonal_cone,
    in_dual_quadratic_cone,
    in_K_d,
    quadratic_generators,
)
from graver_opt.lattice import same_orthant

from oracles import certified_cubic, certified_quadratic_matrix, family_matrix, random_matrix

E1, E2 = (1, 0), (0, 1)


def G_of(rows):
    return compute_graver_basis(IntegerMatrix(rows))


def test_generators_of_all_ones_row():
    mats = quadratic_generators(G_of([[1, 1, 1]])).matrices()
    assert [[2, -1, -1], [-1, 0, 1], [-1, 1, 0]] in mats


def test_generators_of_zero_row():
    pairs = quadratic_generators(G_of([[0, 0]]))
    as_sets = {frozenset(p) for p in pairs}
    assert as_sets == {
        frozenset({E1, E2}),
        frozenset({E1, (0, -1)}),
        frozenset({(-1, 0), E2}),
        frozenset({(-1, 0), (0, -1)}),
    }
    assert len(quadratic_generators(G_of([[0, 0]]), dedupe_sign=True)) == 2


def test_one_element_per_orthant_gives_no_generators():
    assert len(quadratic_generators(G_of([[1, 1]]))) == 0
    assert in_dual_quadratic_cone([[-5, 3], [3, -7]], G_of([[1, 1]]))


def test_quadratic_membership_examples():
    G = G_of([[1, 1, 1]])
    assert in_dual_quadratic_cone(family_matrix([1, 1, 1]), G)
    assert in_dual_quadratic_cone(IntegerMatrix.zeros(3, 3), G)
    cert = in_dual_quadratic_cone([[1, 1], [1, 1]], G_of([[0, 0]]))
    assert not cert
    assert cert.witness == (E1, (0, -1))
    assert cert.value == -2  # g⊤Vh + h⊤Vg
    with pytest.raises(DimensionError):
        in_dual_quadratic_cone([[1]], G)


def test_diagonal_membership_examples():
    G = G_of([[1, 1, 1]])
    rng = random.Random(4)
    for _ in range(20):
        A = random_matrix(rng, 1, 3)
        assert in_dual_diagonal_cone([rng.randint(0, 5) for _ in range(3)], compute_graver_basis(A))
    assert in_dual_diagonal_cone((-5, -5, -5), G_of([[0, 0, 0]]))
    cert = in_dual_diagonal_cone((-1, 0, 0), G)
    assert not cert
    assert set(cert.witness) == {(1, -1, 0), (1, 0, -1)}
    assert cert.value == -1


def test_diagonal_generators_are_nonnegative_products():
    G = G_of([[1, 2, 1]])
    gens = diagonal_generators(G)
    assert gens and all(all(c >= 0 for c in v) for v in gens)


def test_characterize_examples():
    assert characterize_diagonal_strictness(compute_matroid(IntegerMatrix([[0, 0, 0]]))) == 0
    assert characterize_diagonal_strictness(compute_matroid([[1, 1, 1]])) is None
    moment = [[j ** i for j in range(1, 5)] for i in range(1, 3)]
    assert characterize_diagonal_strictness(compute_matroid(moment)) == 0


def test_degree_generators():
    assert len(degree_generators(G_of([[1, 1]]), 3)) == 0
    gens = degree_generators(G_of([[1, 1, 1]]), 3)
    assert tuple(sorted([(1, -1, 0), (1, -1, 0), (1, 0, -1)])) in {tuple(sorted(t)) for t in gens}
    for t in gens:
        assert len(set(t)) > 1
        assert all(same_orthant(g, h) for g, h in itertools.combinations(t, 2))


def test_degree_two_generators_match_quadratic_pairs():
    G = G_of([[1, 2, 1]])
    pairs = {frozenset(p) for p in quadratic_generators(G)}
    assert {frozenset(t) for t in degree_generators(G, 2)} == pairs


def test_kd_examples():
    G = G_of([[1, 1, 1]])
    assert in_K_d(FormTensor.all_ones(3, 3), G)
    assert in_K_d(FormTensor.zeros(3, 3), G)
    cert = in_K_d(FormTensor.diagonal([-1, 0, 0], 2), G)
    assert not cert and cert.k == 2 and cert.value < 0


def test_kd_checks_every_ordering_of_a_multiset():
    # Regression: a non-symmetric tensor that passes when each generator
    # multiset is tested only in canonical order.
    G = G_of([[1, 2, 1]])
    F = FormTensor.from_terms(3, 2, {(1, 0): -1})
    canonical_only = all(F.inner(t) >= 0 for t in degree_generators(G, 2))
    assert canonical_only
    cert = in_K_d(F, G)
    assert not cert
    assert cert.witness == ((0, -1, 2), (-1, 0, 1)) and cert.value == -1


def test_kd_matches_quadratic_test_for_symmetric_degree_two():
    rng = random.Random(8)
    for _ in range(40):
        A = random_matrix(rng, 1, 3)
        G = compute_graver_basis(A)
        M = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i, 3):
                M[i][j] = M[j][i] = rng.randint(-3, 3)
        assert bool(in_K_d(FormTensor.from_matrix(M), G)) == bool(in_dual_quadratic_cone(M, G))


def test_certified_families_pass():
    rng = random.Random(6)
    for _ in range(30):
        A = random_matrix(rng, rng.randint(1, 2), 3)
        G = compute_graver_basis(A)
        assert in_dual_quadratic_cone(certified_quadratic_matrix(rng, A), G)
    for _ in range(15):
        A = random_matrix(rng, 1, 3, 1, 3)
        assert in_K_d(certified_cubic(rng, A), compute_graver_basis(A))


def test_kd_budget():
    with pytest.raises(BudgetExceededError):
        in_K_d(FormTensor.all_ones(3, 3), G_of([[1, 1, 1]]), budget=10)


def test_certificate_serialization():
    cert = in_dual_diagonal_cone((-1, 0, 0), G_of([[1, 1, 1]]))
    d = cert.to_dict()
    assert d["member"] is False and d["value"] == -1 and len(d["witness"]) == 2
    assert in_dual_diagonal_cone((1, 1, 1), G_of([[1, 1, 1]])).to_dict() == {"member": True}
