import json

import pytest

import magiclab as ml


def test_oracle_and_verify():
    report = ml.exhaustive_edge_magic(ml.directed_cycle(3))
    assert report.valences == [9, 10, 11, 12]
    first = report.certificates[0]
    assert ml.valence_if_edge_magic(first) == 9
    assert ml.is_super_edge_magic(first)

    assert ml.exhaustive_super_edge_magic(ml.directed_cycle(4)).valences == []


def test_transforms_round_trip():
    f = ml.exhaustive_super_edge_magic(ml.directed_cycle(5)).certificates[0]
    c = ml.em_complement(f)
    assert ml.valence_if_edge_magic(c) == 3 * 11 - 14
    assert ml.labeled_equal(ml.em_complement(c), f)
    assert ml.odd_even_complement_duality(f)


def test_families_and_product():
    members = ml.enumerate_s1regular(3)
    assert len(members) == 2
    assert all(m.k == 3 for m in members)

    f = ml.exhaustive_super_edge_magic(ml.directed_cycle(3)).certificates[0]
    out = ml.induced_spk(f, members[0])
    assert out.predicted_valence == 3 * (9 - 3) + 3 + 3
    assert ml.is_super_edge_magic(out.labeling)

    t = ml.t_member_from_labeling(f)
    s = ml.make_s_member(ml.directed_cycle(3))
    tq = ml.induced_tqs(s, t)
    assert tq.predicted_valence == 6 * 3 + 9


def test_cycles_and_coverage():
    a = ml.solve_ng(3, 3, 1)
    assert a is not None
    assert a.reversed_count() == 1
    assert ml.cycle_product_structure(a) == [9]
    assert ml.solve_ng(4, 4, 1) is None

    report = json.loads(ml.godbold_slater_report(9, 12))
    achieved = [e["valence"] for e in report["entries"] if e["status"] == "achieved"]
    assert achieved == [24, 27, 28, 29, 30, 33]

    f = ml.exhaustive_super_edge_magic(ml.directed_cycle(3)).certificates[0]
    rotated = ml.em_to_vmt(f)
    assert ml.vertex_magic_weight(rotated) == 9
    assert ml.labeled_equal(ml.vmt_to_em(rotated), f)


def test_json_round_trip():
    f = ml.exhaustive_super_edge_magic(ml.directed_cycle(3)).certificates[0]
    assert ml.labeled_equal(ml.TotalLabeling.from_json(f.to_json()), f)
    d = ml.Digraph.from_json(ml.directed_cycle(4).to_json())
    assert d == ml.directed_cycle(4)
    assert ml.Digraph.from_spec("cycle:6").order == 6


def test_error_mapping():
    with pytest.raises(ValueError):
        ml.solve_ng(2, 3, 0)
    with pytest.raises(ValueError):
        ml.Digraph.from_json('{"n": 1}')
