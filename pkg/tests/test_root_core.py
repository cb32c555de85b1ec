"""Finite root system construction: matrices, roots, invariants, posets."""
from __future__ import annotations

import math

import pytest

from shilow import CartanType, RootSystem, root_system
from shilow.rootdata import solve_two_unknowns

# (family, rank) -> (positive root count, coxeter number, exponents,
#                    weyl order, catalan number)
_KNOWN = {
    ("A", 2): (3, 3, (1, 2), 6, 5),
    ("A", 3): (6, 4, (1, 2, 3), 24, 14),
    ("A", 4): (10, 5, (1, 2, 3, 4), 120, 42),
    ("B", 2): (4, 4, (1, 3), 8, 6),
    ("B", 3): (9, 6, (1, 3, 5), 48, 20),
    ("C", 3): (9, 6, (1, 3, 5), 48, 20),
    ("D", 4): (12, 6, (1, 3, 3, 5), 192, 50),
    ("F", 4): (24, 12, (1, 5, 7, 11), 1152, 105),
    ("G", 2): (6, 6, (1, 5), 12, 8),
    ("E", 6): (36, 12, (1, 4, 5, 7, 8, 11), 51840, 833),
}


@pytest.fixture(scope="module", params=sorted(_KNOWN),
                ids=lambda p: f"{p[0]}{p[1]}")
def system(request) -> RootSystem:
    return root_system(*request.param)


def test_invalid_types_rejected():
    with pytest.raises(ValueError):
        root_system("A", 0)
    with pytest.raises(ValueError):
        root_system("H", 3)
    with pytest.raises(ValueError):
        root_system("G", 3)
    with pytest.raises(ValueError):
        root_system("E", 9)
    with pytest.raises(ValueError):
        CartanType("A", "2")  # type: ignore[arg-type]


def test_cartan_matrix_shape(system):
    n = system.rank
    for i in range(n):
        assert system.cartan[i][i] == 2
        for j in range(n):
            if i != j:
                assert system.cartan[i][j] <= 0
                assert (system.cartan[i][j] == 0) == (system.cartan[j][i] == 0)


def test_symmetrizer_makes_gram_symmetric(system):
    n = system.rank
    assert min(system.symmetrizer) == 1
    for i in range(n):
        for j in range(n):
            assert system.gram[i][j] == system.gram[j][i]
            assert system.gram[i][j] == system.symmetrizer[i] * system.cartan[i][j]


def test_positive_root_count(system):
    expected = _KNOWN[(system.cartan_type.family, system.rank)][0]
    assert system.nroots == expected
    assert len(system.positive_roots) == expected
    assert len(system._all_roots) == 2 * expected


def test_root_order_simples_first_highest_last(system):
    n = system.rank
    for i in range(n):
        assert system.positive_roots[i] == tuple(
            1 if j == i else 0 for j in range(n))
    heights = system.heights
    assert list(heights) == sorted(heights)
    assert system.positive_roots[-1] == system.highest_root
    assert heights[-1] == max(heights)


def test_roots_closed_under_reflection(system):
    for alpha in system.positive_roots:
        assert system.reflect(alpha, alpha) == tuple(-c for c in alpha)
        for beta in system.positive_roots:
            image = system.reflect(alpha, beta)
            assert system.is_root(image)
            # involution
            assert system.reflect(alpha, image) == beta


def test_reflection_matrix_matches_reflect(system):
    for alpha in system.positive_roots[: system.rank + 2]:
        mat = system.reflection_matrix(alpha)
        for beta in system.positive_roots:
            image = tuple(
                sum(mat[r][c] * beta[c] for c in range(system.rank))
                for r in range(system.rank))
            assert image == system.reflect(alpha, beta)


def test_inner_product_invariant_under_reflection(system):
    roots = system.positive_roots
    for alpha in roots[: system.rank + 2]:
        for beta in roots:
            assert system.norm(system.reflect(alpha, beta)) == system.norm(beta)
            assert system.inner(alpha, beta) == system.inner(beta, alpha)


def test_coxeter_number_and_exponents(system):
    _, h, exponents, order, catalan = _KNOWN[
        (system.cartan_type.family, system.rank)]
    assert system.coxeter_number == h
    assert system.exponents == exponents
    assert system.weyl_order == order
    assert system.catalan_number == catalan
    assert system.region_count == (h + 1) ** system.rank
    # classical identities
    assert sum(exponents) == system.nroots
    assert math.prod(e + 1 for e in exponents) == order
    assert exponents[-1] == h - 1


def test_coweights_dual_to_simples(system):
    n = system.rank
    for i in range(n):
        for j in range(n):
            pairing = system.inner_fraction(system.coweights[i],
                                            system.positive_roots[j])
            assert pairing == (1 if i == j else 0)


def test_barycenter_strictly_inside_alcove(system):
    # every positive-root pairing lies strictly between the walls at 0 and 1
    bary = system.barycenter
    for beta in system.positive_roots:
        value = system.inner_fraction(bary, beta)
        assert 0 < value < 1


def test_poset_leq_is_componentwise_cover_chain(system):
    # i <= j in the root poset iff the difference is a nonnegative sum that
    # descends to i through roots; spot-check reflexivity, antisymmetry,
    # and compatibility with coordinates
    n = system.nroots
    for i in range(n):
        assert system.poset_leq(i, i)
        for j in range(n):
            if system.poset_leq(i, j):
                assert all(
                    a <= b for a, b in zip(system.positive_roots[i],
                                           system.positive_roots[j]))
                if system.poset_leq(j, i):
                    assert i == j


def test_ideal_count_matches_catalan(system):
    ideals = system.poset_ideals()
    assert len(ideals) == system.catalan_number
    seen = set()
    for item in ideals:
        assert item.ideal not in seen
        seen.add(item.ideal)
        members = frozenset(item.antichain)
        assert system.up_closure(members) == frozenset(item.ideal)
        # antichain members pairwise incomparable
        for i in item.antichain:
            for j in item.antichain:
                if i != j:
                    assert not system.poset_leq(i, j)


def test_rank2_subsystems_are_span_intersections(system):
    for sub in system.rank2_subsystems():
        assert sub.kind in {"A2", "B2", "G2"}
        expected_size = {"A2": 3, "B2": 4, "G2": 6}[sub.kind]
        assert len(sub.positions) == expected_size
        s1, s2 = (system.positive_roots[p] for p in sub.simple_positions)
        for p, coords in zip(sub.positions, sub.internal_coords):
            a, b = coords
            combo = tuple(a * x + b * y for x, y in zip(s1, s2))
            assert system.positive_roots[p] == combo
        # span-intersection: membership is exactly rational-span membership
        member_set = set(sub.positions)
        for q, root in enumerate(system.positive_roots):
            in_span = solve_two_unknowns(s1, s2, root) is not None
            assert (q in member_set) == in_span


def test_root_names_and_json(system):
    assert system.root_name(0) == "a1"
    data = system.to_json_dict()
    assert data["rank"] == system.rank
    assert data["coxeter_number"] == system.coxeter_number
    assert len(data["positive_roots"]) == system.nroots
    assert data["region_count_formula"] == system.region_count


def test_a2_names_match_coordinates():
    system = root_system("A", 2)
    assert [system.root_name(i) for i in range(3)] == ["a1", "a2", "a1+a2"]
    b2 = root_system("B", 2)
    assert [b2.root_name(i) for i in range(4)] == [
        "a1", "a2", "a1+a2", "2a1+a2"]
    # B2: first simple root short
    assert b2.norm(b2.positive_roots[0]) < b2.norm(b2.positive_roots[1])
    g2 = root_system("G", 2)
    assert g2.norm(g2.positive_roots[0]) < g2.norm(g2.positive_roots[1])
