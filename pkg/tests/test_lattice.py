"""Inclusion lattices: axioms, modularity, forbidden sublattices, DOT export."""

from loupe import build_ln, cyclic_group, direct_product, symmetric_group
from loupe.lattice import (
    build_lattice,
    check_distributive,
    check_modular,
    export_dot,
    find_forbidden_sublattice,
    lattice_summary,
)
from loupe.substructures import all_subloops


def subloop_lattice(L):
    return build_lattice(L, all_subloops(L).subloops)


def subgroup_lattice(L):
    return build_lattice(L, all_subloops(L).subgroups())


def test_empty_family_gives_two_chain():
    L = build_ln(5, 2)
    lat = build_lattice(L, [])
    assert lat.size == 2
    assert lat.covers() == [(0, 1)]


def test_lattice_axioms_exhaustively(corpus):
    for name in ("L5(2)", "L15(8)", "Z6", "S3", "klein"):
        L = corpus[name]
        lat = subloop_lattice(L)
        n = lat.size
        assert n <= 40
        for x in range(n):
            assert lat.meet[x][x] == x and lat.join[x][x] == x
            for y in range(n):
                assert lat.meet[x][y] == lat.meet[y][x]
                assert lat.join[x][y] == lat.join[y][x]
                assert lat.meet[x][lat.join[x][y]] == x
                assert lat.join[x][lat.meet[x][y]] == x
                for z in range(n):
                    assert lat.meet[x][lat.meet[y][z]] == lat.meet[lat.meet[x][y]][z]
                    assert lat.join[x][lat.join[y][z]] == lat.join[lat.join[x][y]][z]


def test_order6_member_lattice_modular_not_distributive():
    lat = subloop_lattice(build_ln(5, 2))
    assert lat.size == 7
    assert check_modular(lat).holds
    verdict = check_distributive(lat)
    assert not verdict.holds
    assert find_forbidden_sublattice(lat, "diamond") is not None
    assert find_forbidden_sublattice(lat, "pentagon") is None


def test_order16_member_subgroup_lattice_non_modular():
    lat = subgroup_lattice(build_ln(15, 8))
    assert lat.size == 22
    verdict = check_modular(lat)
    assert not verdict.holds
    assert find_forbidden_sublattice(lat, "pentagon") is not None


def test_modular_scan_agrees_with_pentagon_search(corpus):
    for name in ("L5(2)", "L15(8)", "Z6", "S3", "klein", "L9(5)"):
        L = corpus[name]
        for lat in (subloop_lattice(L), subgroup_lattice(L)):
            assert check_modular(lat).holds == (
                find_forbidden_sublattice(lat, "pentagon") is None
            ), name


def test_distributive_equation_agrees_with_forbidden_shapes(corpus):
    for name in ("L5(2)", "Z6", "klein", "L9(5)"):
        L = corpus[name]
        lat = subloop_lattice(L)
        eq = all(
            lat.join[x][lat.meet[y][z]]
            == lat.meet[lat.join[x][y]][lat.join[x][z]]
            for x in range(lat.size)
            for y in range(lat.size)
            for z in range(lat.size)
        )
        assert eq == check_distributive(lat).holds, name


def test_h_family_diamond():
    from loupe import LnParams, h_subloop

    L = build_ln(15, 8)
    family = [h_subloop(LnParams(15, 8), i, 3) for i in (1, 2, 3)]
    lat = build_lattice(L, family)
    assert lat.size == 5
    assert check_modular(lat).holds
    assert not check_distributive(lat).holds
    assert find_forbidden_sublattice(lat, "diamond") == tuple(range(5))


def test_normal_subgroup_lattice_of_s4_is_modular():
    s4 = symmetric_group(4)
    census = all_subloops(s4)
    lat = build_lattice(s4, census.normal_subloops())
    assert lat.size == 4  # trivial, the doubly even 4-set, the even half, all
    assert check_modular(lat).holds


def test_mixed_product_subgroup_lattice():
    prod = direct_product(build_ln(5, 2), cyclic_group(5))
    census = all_subloops(prod)
    subgroups = census.subgroups()
    assert len(subgroups) == 12
    lat = build_lattice(prod, subgroups)
    assert lat.size == 13  # the full loop tops the lattice without being a group
    assert not check_modular(lat).holds
    assert find_forbidden_sublattice(lat, "pentagon") is not None


def test_export_dot():
    lat = subloop_lattice(build_ln(5, 2))
    dot = export_dot(lat)
    assert dot.startswith("digraph")
    assert dot.count("{") == dot.count("}")
    assert dot.count(" -> ") == 10  # five atoms doubly covered
    assert dot.count("[label=") == 7
    two = build_lattice(build_ln(5, 2), [])
    dot2 = export_dot(two)
    assert dot2.count(" -> ") == 1 and dot2.count("[label=") == 2


def test_lattice_summary_roundtrip():
    lat = subloop_lattice(cyclic_group(4))
    summary = lattice_summary(lat)
    assert summary["modular"] and summary["distributive"]
    assert summary["nodes"] == ["{e}", "{e,2}", "{e,1,2,3}"]
    assert summary["covers"] == [(0, 1), (1, 2)]
