import json

import pytest

from contspec.algebraic import (
    CayleyTable,
    InvalidCayleyTable,
    NotASubmonoid,
    bijective_members,
    build_compact_realization,
    build_group_realization,
    build_monoid_realization,
    builtin,
    composition_failures,
    continuity_reports,
    cyclic,
    dihedral8,
    family_table,
    find_pair_isomorphism,
    idempotent_monoid,
    is_faithful,
    is_subgroup,
    is_submonoid,
    multiplicative01,
    spectrum_of_family,
    submonoids,
    symmetric3,
    validate,
    verify_composition_law,
)
from contspec.intervals import Interval
from contspec.piecewise import INF, SPLIT, STRIP, compose, identity_map, is_bijection, oracle_disagreements

S3 = symmetric3()
C3 = frozenset({0, 1, 2})  # e, r1, r2


def test_validate():
    assert validate(cyclic(6)) == "group"
    assert validate(idempotent_monoid()) == "monoid"
    assert validate(S3) == "group"
    assert validate(dihedral8()) == "group"
    with pytest.raises(InvalidCayleyTable) as exc:
        validate(CayleyTable(((1, 0), (0, 1)), 0))
    assert exc.value.law == "identity law"


def test_validate_associativity():
    # identity 0, but 1*(1*2) != (1*1)*2
    table = CayleyTable(((0, 1, 2), (1, 2, 0), (2, 2, 2)), 0)
    with pytest.raises(InvalidCayleyTable) as exc:
        validate(table)
    assert exc.value.law == "associativity"


def test_table_shape_checks():
    with pytest.raises(InvalidCayleyTable):
        CayleyTable(((0, 1),), 0)
    with pytest.raises(InvalidCayleyTable):
        CayleyTable(((0, 5), (1, 0)), 0)


def test_json_round_trip(tmp_path):
    path = tmp_path / "m2.json"
    path.write_text(json.dumps(idempotent_monoid().to_json()))
    assert CayleyTable.load(path) == idempotent_monoid()
    assert CayleyTable.from_json({"size": 2, "identity": 0, "op": [[0, 1], [1, 1]]}).op == ((0, 1), (1, 1))


def test_builtins():
    assert builtin("z6") == cyclic(6)
    assert builtin("S3") == S3
    with pytest.raises(KeyError):
        builtin("z9")


def test_submonoid_search():
    assert len(submonoids(cyclic(6))) == 4
    assert len(submonoids(S3)) == 6
    for g in (cyclic(6), S3, dihedral8(), cyclic(8)):
        for s in submonoids(g):
            assert is_subgroup(g, s)  # finite groups: submonoid => subgroup
    assert submonoids(idempotent_monoid()) == [frozenset({0}), frozenset({0, 1})]


def test_group_realization_columns():
    space, fam = build_group_realization(S3, C3)
    for m in (0, 1, 2):
        assert space[m] == STRIP
    for m in (3, 4, 5):
        assert space[m] == SPLIT
    assert len(fam) == 6


def test_whole_group_is_all_shifts():
    space, fam = build_group_realization(S3, range(6))
    for n, f in fam.items():
        assert all(len(ps) == 1 and ps[0].offset == 0 for ps in f.columns.values())
    assert spectrum_of_family(build_group_realization(S3, range(6))) == frozenset(range(6))


def test_z6_even_subgroup():
    real = build_group_realization(cyclic(6), {0, 2, 4})
    reports = continuity_reports(real)
    assert reports[2].continuous
    assert not reports[1].continuous


def test_rotation_subgroup_spectrum():
    real = build_group_realization(S3, C3)
    assert spectrum_of_family(real) == C3
    assert verify_composition_law(real)
    assert is_faithful(real)


def test_identity_member_is_identity_map():
    real = build_group_realization(S3, C3)
    assert real.family[0] == identity_map(real.space)
    for n in S3.elements:
        assert compose(real.family[0], real.family[n]) == real.family[n]


def test_pair_isomorphism_with_map_table():
    real = build_group_realization(S3, C3)
    maps = family_table(real)
    phi = find_pair_isomorphism(S3, C3, maps, spectrum_of_family(real))
    assert phi == {m: m for m in S3.elements}
    assert find_pair_isomorphism(S3, C3, S3, {0, 3}) is None


def test_rejects_non_submonoid():
    with pytest.raises(NotASubmonoid):
        build_group_realization(S3, {0, 3, 4})
    with pytest.raises(NotASubmonoid):
        build_compact_realization(cyclic(6), {1})


def test_monoid_realization_idempotent():
    m = idempotent_monoid()
    real = build_monoid_realization(m, {0})
    f_z = real.family[1]
    assert {p.target for ps in f_z.columns.values() for p in ps} == {1}
    assert not is_bijection(f_z, real.space)
    assert spectrum_of_family(real) == {0}
    assert verify_composition_law(real)
    assert bijective_members(real) == {0}


def test_monoid_realization_multiplicative():
    m = multiplicative01()
    real = build_monoid_realization(m, {1})
    assert not is_bijection(real.family[0], real.space)
    assert real.family[1] == identity_map(real.space)
    assert spectrum_of_family(real) == {1}


def test_monoid_whole_set_all_continuous():
    for m in (idempotent_monoid(), multiplicative01()):
        real = build_monoid_realization(m, m.elements)
        assert spectrum_of_family(real) == frozenset(m.elements)


def test_group_construction_refuses_monoid():
    with pytest.raises(InvalidCayleyTable):
        build_group_realization(idempotent_monoid(), {0})


def test_compact_realization_z6():
    real = build_compact_realization(cyclic(6), {0, 3})
    assert real.space[INF].parts == (Interval.point(0),)
    reports = continuity_reports(real)
    assert reports[3].continuous
    assert not reports[1].continuous
    f1 = real.family[1]
    assert f1(0, 0) == (1, 1)
    assert (0, 0) in reports[1].witnesses
    assert f1(INF, 0) == (INF, 0)
    assert spectrum_of_family(real) == {0, 3}
    assert verify_composition_law(real)


def test_compact_whole_group_no_flips():
    real = build_compact_realization(S3, range(6))
    for f in real.family.values():
        assert all(len(ps) == 1 for ps in f.normalized().values())
    assert spectrum_of_family(real) == frozenset(range(6))


def test_compact_rotations():
    real = build_compact_realization(S3, C3)
    found = spectrum_of_family(real)
    assert found == C3
    assert all(S3.inverse(x) in found for x in found)
    assert all(is_bijection(f, real.space) for f in real.family.values())


@pytest.mark.parametrize("table", [cyclic(4), cyclic(6), S3, dihedral8()])
def test_every_submonoid_realized(table):
    for s in submonoids(table):
        real = build_group_realization(table, s)
        assert spectrum_of_family(real) == s
        assert composition_failures(real) == []
        for f in real.family.values():
            assert oracle_disagreements(f, real.space) == []


@pytest.mark.parametrize("n", range(1, 9))
def test_cyclic_groups(n):
    g = cyclic(n)
    for s in submonoids(g):
        assert spectrum_of_family(build_group_realization(g, s)) == s
        assert spectrum_of_family(build_compact_realization(g, s)) == s
