"""Bigrading, filtration and rank checks.

The two geometric families used throughout:
    - contact-type blocks 1, n, 1:  sigma_q = {1, n+1}, sigma_p = {1}
    - path-type blocks 1, 1, n:     sigma_q = {1, 2},   sigma_p = {1}
"""

import itertools

import pytest

from relbgg import (
    Bidegree,
    ParabolicPair,
    Root,
    bigrade,
    build_root_system,
    filtration,
    sigma_height,
    subalgebra_profile,
    tangent_ranks,
    verify_bracket_additivity,
)


def _pair(rank, sq, sp):
    return ParabolicPair(
        rs=build_root_system("A", rank), sigma_q=frozenset(sq), sigma_p=frozenset(sp)
    )


def legendrean_pair(n):
    return _pair(n + 1, {1, n + 1}, {1})


def path_pair(n):
    return _pair(n + 1, {1, 2}, {1})


def all_pairs(rank):
    nodes = list(range(1, rank + 1))
    for q_mask in itertools.product((0, 1), repeat=rank):
        sq = frozenset(i for i, b in zip(nodes, q_mask) if b)
        members = sorted(sq)
        for p_mask in itertools.product((0, 1), repeat=len(members)):
            sp = frozenset(i for i, b in zip(members, p_mask) if b)
            yield _pair(rank, sq, sp)


# -- sigma height ------------------------------------------------------------

def test_sigma_height_read_offs():
    assert sigma_height(Root((1, 1, 0, 0)), {1}) == 1
    assert sigma_height(Root((1, 1, 0, 0)), {1, 2}) == 2
    assert sigma_height(Root((-1, -1, -1, -1)), {1, 2}) == -2


# -- bigrading ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 6))
def test_legendrean_component_dims(n):
    bg = bigrade(legendrean_pair(n))
    assert bg.dim_component(Bidegree(-1, 0)) == n
    assert bg.dim_component(Bidegree(0, -1)) == n
    assert bg.dim_component(Bidegree(-1, -1)) == 1
    assert sorted(bg.components) == [
        (-1, -1), (-1, 0), (0, -1), (0, 0), (0, 1), (1, 0), (1, 1),
    ]


@pytest.mark.parametrize("n", range(2, 6))
def test_path_component_dims(n):
    bg = bigrade(path_pair(n))
    assert bg.dim_component(Bidegree(-1, 0)) == 1
    assert bg.dim_component(Bidegree(0, -1)) == n
    assert bg.dim_component(Bidegree(-1, -1)) == n


def test_equal_sets_collapse_to_single_grading():
    bg = bigrade(_pair(4, {2}, {2}))
    assert all(bd.i_dprime == 0 for bd in bg.components)


@pytest.mark.parametrize("rank", range(1, 5))
def test_partition_duality_and_total_dim(rank):
    for pair in all_pairs(rank):
        bg = bigrade(pair)
        assert bg.dim_g == rank * rank + 2 * rank
        root_count = sum(len(c.roots) for c in bg.components.values())
        assert root_count == 2 * len(pair.rs.positive_roots)
        for bd, comp in bg.components.items():
            assert bg.dim_component(Bidegree(-bd.i_prime, -bd.i_dprime)) == comp.dim
            assert comp.includes_cartan == (bd == (0, 0))
            # signs agree and heights recompute
            for root in comp.roots:
                hp = sigma_height(root, pair.sigma_p)
                hq = sigma_height(root, pair.sigma_q)
                assert (hp, hq - hp) == tuple(bd)


# -- bracket additivity ------------------------------------------------------

def test_additivity_on_the_example_geometries():
    for pair in (legendrean_pair(3), path_pair(3), _pair(3, set(), set())):
        rep = verify_bracket_additivity(bigrade(pair))
        assert rep.ok
        assert not rep.violations


def test_additivity_trivial_pair_single_component():
    bg = bigrade(_pair(3, set(), set()))
    assert list(bg.components) == [(0, 0)]
    assert verify_bracket_additivity(bg).ok


@pytest.mark.parametrize("rank", range(1, 7))
def test_additivity_exhaustive(rank):
    for pair in all_pairs(rank):
        assert verify_bracket_additivity(bigrade(pair)).ok


# -- subalgebra profile ------------------------------------------------------

def test_legendrean_profile_dims():
    prof = subalgebra_profile(bigrade(legendrean_pair(3)))
    assert prof["q"].dim == 24 - 7 == 17
    assert prof["q_0"].bidegrees == ((0, 0),)


def test_path_profile_dims():
    prof = subalgebra_profile(bigrade(path_pair(3)))
    assert prof["p_plus"].dim == 4


def test_collapsed_profile():
    prof = subalgebra_profile(bigrade(_pair(4, {2}, {2})))
    assert prof["q"].dim == prof["p"].dim
    assert prof["q_plus"].dim == prof["p_plus"].dim


@pytest.mark.parametrize("rank", range(1, 5))
def test_profile_partitions(rank):
    for pair in all_pairs(rank):
        prof = subalgebra_profile(bigrade(pair))
        assert prof["p"].dim == prof["p_0"].dim + prof["p_plus"].dim
        assert prof["q"].dim == prof["q_0"].dim + prof["q_plus"].dim


# -- filtration --------------------------------------------------------------

@pytest.mark.parametrize("n", range(2, 6))
def test_legendrean_filtration_module(n):
    rep = filtration(bigrade(legendrean_pair(n)))
    assert rep.i_prime_range == (-1, 0, 1)
    mod = rep.modules[-1]
    assert mod.dim == n + 1
    assert mod.filtration_steps == ((-1, n + 1), (0, n))


@pytest.mark.parametrize("n", range(2, 6))
def test_path_filtration_has_line_step(n):
    mod = filtration(bigrade(path_pair(n))).modules[-1]
    assert mod.dim == n + 1
    assert mod.filtration_steps == ((-1, n + 1), (0, 1))


def test_two_step_filtration():
    rep = filtration(bigrade(_pair(4, {1, 2, 3}, {1, 3})))
    assert rep.i_prime_range == (-2, -1, 0, 1, 2)
    assert rep.modules[-1].dim > 0 and rep.modules[-2].dim > 0


def test_filtration_nesting_and_monotone_steps():
    for pair in all_pairs(3):
        bg = bigrade(pair)
        rep = filtration(bg)
        assert set(rep.components[rep.i_prime_range[0]]) == set(bg.components)
        for lo, hi in zip(rep.i_prime_range, rep.i_prime_range[1:]):
            assert set(rep.components[hi]) < set(rep.components[lo])
        for mod in rep.modules.values():
            dims = [d for _, d in mod.filtration_steps]
            assert dims == sorted(dims, reverse=True)
            assert dims[0] == mod.dim


def test_filtration_piece_one_is_p_plus():
    bg = bigrade(legendrean_pair(3))
    rep = filtration(bg)
    assert set(rep.components[1]) == set(subalgebra_profile(bg)["p_plus"].bidegrees)


# -- tangent ranks -----------------------------------------------------------

def test_path_ranks_dimension_seven():
    rep = tangent_ranks(bigrade(path_pair(3)))
    assert rep.dim_M == 7
    assert rep.rank_T_rho == 3
    assert rep.ranks_V == {-1: 4}


def test_legendrean_ranks_n2():
    rep = tangent_ranks(bigrade(legendrean_pair(2)))
    assert rep.dim_M == 5
    assert rep.rank_T_rho == 2
    assert rep.ranks_V == {-1: 3}


def test_collapsed_ranks():
    rep = tangent_ranks(bigrade(_pair(4, {2}, {2})))
    assert rep.rank_T_rho == 0
    assert sum(rep.leaf_graded.values()) == rep.dim_M


def test_ranks_require_nonempty_sigma_p():
    with pytest.raises(ValueError):
        tangent_ranks(bigrade(_pair(3, {1}, set())))


@pytest.mark.parametrize("rank", range(1, 6))
def test_rank_telescoping(rank):
    for pair in all_pairs(rank):
        if not pair.sigma_p:
            continue
        rep = tangent_ranks(bigrade(pair))
        assert sum(rep.ranks_V.values()) == rep.dim_M - rep.rank_T_rho
        assert rep.leaf_graded == rep.ranks_V


def test_pair_validation():
    rs = build_root_system("A", 3)
    with pytest.raises(ValueError):
        ParabolicPair(rs=rs, sigma_q=frozenset({1}), sigma_p=frozenset({2}))
    with pytest.raises(ValueError):
        ParabolicPair(rs=rs, sigma_q=frozenset({5}), sigma_p=frozenset())
