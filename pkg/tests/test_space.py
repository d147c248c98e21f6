from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkmkirwan.catalog import builtin, cpn, point, su3_hexagon
from gkmkirwan.linalg import dot
from gkmkirwan.space import (
    FixedPoint,
    GKMEdge,
    GKMSpace,
    SpaceError,
    Subtorus,
    TorusAction,
    is_boundary_wall,
    is_gkm,
    is_regular_value,
    product,
    project_moment,
    projection_flags,
    space_warnings,
    translate,
    validate,
    wall_normals,
    walls,
)

F = Fraction
BUILTINS = ["point", "cp1", "cp2", "cp3", "cp2xcp2-k3", "su3-hexagon"]


@pytest.mark.parametrize("name", BUILTINS)
def test_builtins_validate(name):
    space = builtin(name)
    assert validate(space) == []
    assert space_warnings(space) == []


def test_cp2_data():
    cp2 = builtin("cp2")
    assert [p.moment for p in cp2.points] == [(0, 0), (1, 0), (0, 1)]
    assert [set(p.weights) for p in cp2.points] == [
        {(1, 0), (0, 1)},
        {(-1, 0), (-1, 1)},
        {(0, -1), (1, -1)},
    ]


def test_zero_weight_reported():
    cp2 = builtin("cp2")
    p = cp2.points[1]
    bad = replace(p, weights=((0, 0), p.weights[1]))
    space = replace(cp2, points=(cp2.points[0], bad, cp2.points[2]), _memo={})
    assert "zero weight at p1" in validate(space)


def test_non_parallel_edge_reported():
    cp2 = builtin("cp2")
    moved = replace(cp2.points[1], moment=(F(1), F(1, 3)))
    space = replace(cp2, points=(cp2.points[0], moved, cp2.points[2]), _memo={})
    problems = validate(space)
    assert any(m.startswith("edge p0-p1") and "not parallel" in m for m in problems)


def test_weight_count_and_unknown_endpoint():
    cp1 = builtin("cp1")
    space = replace(cp1, edges=cp1.edges + (GKMEdge("p0", "q", (1,)),), _memo={})
    assert any("unknown endpoint" in m for m in validate(space))
    space = replace(cp1, complex_dim=2, _memo={})
    assert any("expected 2" in m for m in validate(space))


def test_duplicate_names_rejected():
    with pytest.raises(SpaceError):
        GKMSpace(TorusAction(1), (FixedPoint("a", (0,), ()), FixedPoint("a", (1,), ())), (), 0)


def test_product_counts():
    s = product(cpn(2), cpn(2), 3)
    assert len(s.points) == 9
    assert all(len(p.weights) == 4 for p in s.points)
    assert len(s.edges) == 18
    assert validate(s) == []
    # moment image of (p, q) is Phi(p) + 3 Phi(q)
    assert s.point("p1,p2").moment == (1, 3)


def test_product_with_point_is_identity():
    cp2 = cpn(2)
    s = product(cp2, point(2), 5)
    assert s.points == cp2.points and s.edges == cp2.edges


def test_point_times_space_dilates():
    cp2 = cpn(2)
    s = product(point(2), cp2, 2)
    assert [p.moment for p in s.points] == [tuple(2 * v for v in p.moment) for p in cp2.points]
    assert [p.weights for p in s.points] == [p.weights for p in cp2.points]


def test_product_rank_mismatch():
    with pytest.raises(SpaceError):
        product(cpn(1), cpn(2))
    with pytest.raises(SpaceError):
        product(cpn(2), cpn(2), 0)


def test_diagonal_product_is_not_gkm_but_lifted():
    s = builtin("cp2xcp2-k3")
    assert not is_gkm(s)
    assert s.lift is not None and is_gkm(s.lift.space)
    bare = replace(s, lift=None, _memo={})
    assert any("pairwise independent" in w for w in space_warnings(bare))


def _wall_table(space):
    return {(w.normal, w.offset) for w in walls(space)}


def test_cp2_walls():
    assert _wall_table(builtin("cp2")) == {((0, 1), 0), ((1, 0), 0), ((1, 1), 1)}


def test_cp2xcp2_walls():
    table = _wall_table(builtin("cp2xcp2-k3"))
    by_normal = {}
    for n, c in table:
        by_normal.setdefault(n, set()).add(c)
    assert by_normal == {(1, 0): {0, 1, 3}, (0, 1): {0, 1, 3}, (1, 1): {1, 3, 4}}


def test_hexagon_walls():
    hexagon = builtin("su3-hexagon")
    ws = walls(hexagon)
    assert len({w.normal for w in ws}) == 3
    assert sum(is_boundary_wall(hexagon, w) for w in ws) == 6
    # the three long diagonals of the hexagon are interior walls
    assert len(ws) == 9


def test_wall_normals():
    six = [(0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (-1, -1)]
    assert sorted(wall_normals(builtin("cp2xcp2-k3"))) == sorted(six)
    assert sorted(wall_normals(builtin("cp2"))) == sorted(six)
    assert sorted(wall_normals(builtin("cp1"))) == [(-1,), (1,)]


def test_regular_values():
    s = builtin("cp2xcp2-k3")
    assert is_regular_value(s, (F(5, 4), F(5, 4)))
    assert not is_regular_value(s, (F(3, 2), F(3, 2)))
    assert not is_regular_value(s, (F(1, 2), F(1)))  # on the wall y = 1
    # beyond the end of the segment y = 3, x in [0, 1], the line is harmless
    assert is_regular_value(s, (F(2), F(3, 2)))
    cp1 = builtin("cp1")
    assert is_regular_value(cp1, (F(1, 2),))
    assert not is_regular_value(cp1, (F(1),))
    with pytest.raises(SpaceError):
        is_regular_value(s, (F(1),))


def test_regular_value_for_circle_uses_projected_data():
    s = builtin("cp2xcp2-k3")
    circle = Subtorus.circle((1, 1))
    values = {dot(p.moment, (1, 1)) for p in s.points}
    assert all(not is_regular_value(s, (v,), circle) for v in values)
    assert is_regular_value(s, (F(5, 2),), circle)


def test_project_moment_diagonal_circle():
    s = builtin("cp2xcp2-k3")
    proj = project_moment(s, Subtorus.circle((1, 1)))
    assert proj.rank == 1
    assert [p.moment[0] for p in proj.points] == [sum(p.moment) for p in s.points]
    # (1, 1) kills the weight (-1, 1) of each factor, so this circle is not generic
    assert projection_flags(s, Subtorus.circle((1, 1)))
    generic = project_moment(s, Subtorus.circle((1, 2)))
    assert validate(generic) == []
    assert [p.moment[0] for p in generic.points] == [p.moment[0] + 2 * p.moment[1] for p in s.points]


def test_project_moment_identity_is_unchanged():
    cp2 = builtin("cp2")
    assert project_moment(cp2, Subtorus.full(2)) is cp2


def test_project_moment_flags_non_generic():
    cp2 = builtin("cp2")
    flags = projection_flags(cp2, Subtorus.circle((1, 0)))
    assert any("p2" in f for f in flags)
    proj = project_moment(cp2, Subtorus.circle((1, 0)))
    # weight (0, 1) at p0 and (0, -1) at p2 project to 0
    assert (0,) in proj.point("p0").weights and (0,) in proj.point("p2").weights
    assert projection_flags(cp2, Subtorus.circle((1, 2))) == []


def test_subtorus_needs_full_column_rank():
    with pytest.raises(SpaceError):
        Subtorus(((1, 2), (2, 4)))


@pytest.mark.parametrize("name", ["cp2", "cp2xcp2-k3", "su3-hexagon"])
def test_wall_support_satisfies_equation(name):
    space = builtin(name)
    for w in walls(space):
        assert len(w.support) >= 2
        assert all(dot(space.point(n).moment, w.normal) == w.offset for n in w.support)


@pytest.mark.parametrize("name", ["cp2", "cp2xcp2-k3", "su3-hexagon"])
def test_edges_lie_in_the_walls_they_are_orthogonal_to(name):
    space = builtin(name)
    for w in walls(space):
        for e in space.edges:
            ends_on = {e.source, e.target} <= set(w.support)
            if dot(e.weight, w.normal) == 0 and ends_on:
                assert dot(space.point(e.source).moment, w.normal) == w.offset
            if dot(e.weight, w.normal) != 0:
                # a transverse edge meets the hyperplane in at most one endpoint
                on = [n for n in (e.source, e.target) if dot(space.point(n).moment, w.normal) == w.offset]
                assert len(on) <= 1


shift = st.tuples(st.fractions(-5, 5, max_denominator=7), st.fractions(-5, 5, max_denominator=7))


@given(st.sampled_from(["cp2", "su3-hexagon", "cp2xcp2-k3"]), shift)
def test_normals_invariant_under_translation(name, delta):
    space = builtin(name)
    moved = translate(space, delta)
    assert wall_normals(moved) == wall_normals(space)
    before = sorted(_wall_table(space))
    after = sorted(_wall_table(moved))
    assert after == sorted((n, c + dot(delta, n)) for n, c in before)


@given(st.sampled_from(["cp2", "su3-hexagon"]), st.randoms(use_true_random=False))
def test_normals_invariant_under_relabeling(name, rnd):
    space = builtin(name)
    names = list(space.names)
    shuffled = names[:]
    rnd.shuffle(shuffled)
    ren = dict(zip(names, [f"v{i}" for i in range(len(names))]))
    order = [space.point(n) for n in shuffled]
    pts = tuple(replace(p, name=ren[p.name]) for p in order)
    edges = tuple(GKMEdge(ren[e.source], ren[e.target], e.weight) for e in space.edges)
    other = GKMSpace(space.action, pts, edges, space.complex_dim)
    assert validate(other) == []
    assert wall_normals(other) == wall_normals(space)
    assert _wall_table(other) == _wall_table(space)


def test_hexagon_eigenvalues_must_be_distinct():
    with pytest.raises(SpaceError):
        su3_hexagon((1, 1, 0))
