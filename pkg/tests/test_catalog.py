from fractions import Fraction

import pytest

from sbk import catalog
from sbk.autos import verify_equivalence
from sbk.bialgebra import block_join, block_split, hat_antisymmetrize
from sbk.catalog import algebra, r_template, witness, witness_list
from sbk.catalog.algebras import embed
from sbk.catalog.templates import ExcludedPoint, TemplateError
from sbk.sampling import grid
from sbk.suite import bialgebra_ok, check_r, scan_template
from sbk.superkernel import bracket, verify_lie_superalgebra, zeros


def test_osp22_shape(osp22):
    assert osp22.dim == 8
    assert osp22.parities == (0, 0, 0, 0, 1, 1, 1, 1)
    assert osp22.generator_names == ("H", "X+", "X-", "B", "V+", "V-", "W+", "W-")
    assert verify_lie_superalgebra(osp22).ok


def test_osp12_u1_shape_and_centre(osp12):
    assert osp12.dim == 6
    z = osp12.basis("Z")
    for g in osp12.generator_names:
        assert not any(bracket(osp12, z, osp12.basis(g)))


def test_osp12_brackets_follow_embedding(osp12, osp22):
    names = ["H", "X+", "X-", "Q+", "Q-"]
    for a in names:
        for b in names:
            small = bracket(osp12, osp12.basis(a), osp12.basis(b))
            image = embed({g: v for g, v in zip(osp12.generator_names, small) if v and g != "Z"})
            assert image == bracket(osp22, embed({a: 1}), embed({b: 1}))


def test_q_anticommutator_is_multiple_of_h(osp12):
    q = bracket(osp12, osp12.basis("Q+"), osp12.basis("Q-"))
    assert q[osp12.index("H")] != 0
    assert sum(1 for v in q if v) == 1


def test_unknown_ids():
    with pytest.raises(KeyError):
        algebra("sl3")
    with pytest.raises(KeyError):
        r_template("nosuch")
    with pytest.raises(KeyError):
        witness("nosuch")


def test_case19_printed_values(osp22):
    r = r_template("case19").evaluate(J=2, K=1, F=1)
    h = Fraction(1, 2)
    r_B = [[0, 1, 0, 1], [-1, 0, -h, 1], [0, h, 0, 0], [-1, -1, 0, 0]]
    r_F = [[1, 0, 0, h], [0, 0, -h, 0], [0, -h, 0, 0], [h, 0, 0, 0]]
    assert r == block_join(osp22, r_B, r_F)


def test_b2_is_wedge_of_h_and_x(osp22):
    raw = zeros(8, 8)
    raw[0][1] = 1
    assert r_template("b2").evaluate({}) == hat_antisymmetrize(osp22, raw).scale(2)


def test_template_parameter_checks():
    t = r_template("a2")
    with pytest.raises(TemplateError):
        t.evaluate(alpha=2, beta=0)
    with pytest.raises(TemplateError):
        t.evaluate(alpha=1)
    with pytest.raises(TemplateError):
        t.evaluate(alpha=1, beta=0, gamma=1)
    with pytest.raises(ExcludedPoint):
        r_template("k2~").evaluate(K=1, S=-1)


def test_ids_unique_and_witnesses_resolve():
    ids = catalog.template_ids()
    assert len(ids) == len(set(ids))
    for w in witness_list():
        assert w.source in ids and w.target in ids
    for t in ("case%d" % n for n in range(1, 23)):
        assert t in ids
    for tid in catalog.SUMMARY_IDS + ("g1", "g1.5", "g2", "f0", "i2"):
        assert tid in ids
    assert catalog.template_ids("osp12_u1") == ["o1", "o2", "o3", "o4", "o5", "o6", "o7"]


def test_required_witnesses_present():
    have = {w.id for w in witness_list()}
    for ids in catalog.REQUIRED.values():
        assert set(ids) <= have
    for wid in catalog.SKIPPED_REQUIRED:
        assert witness(wid).status == "skip" and witness(wid).reason


def test_case3_to_b2_step():
    w = witness("3->b2")
    assert w.steps[0].to_dict() == {"a": "1", "b": "-(2*K+L)/Y", "c": "0", "d": "1", "m": 0}
    assert "Y" in w.exclusions


def test_self_witness_for_every_template():
    for w in witness_list(include_self=True):
        if w.source == w.target:
            assert verify_equivalence(w, 3, seed=9).ok, w.id


@pytest.mark.parametrize("tid", [t.id for t in catalog.RAW_CASES + catalog.RESTRICTED_CASES])
def test_raw_case_is_bialgebra(tid):
    t = r_template(tid)
    for values, res in scan_template(t, samples=3, max_grid=27):
        assert bialgebra_ok(res), (tid, values)


@pytest.mark.parametrize("pf", catalog.PRINTED_FORMS, ids=lambda p: p.template.id)
def test_printed_forms(pf):
    from sbk.expr import evaluate
    from sbk.sampling import make_rng
    family = r_template(pf.family)
    rng = make_rng(4)
    from sbk.suite import template_points
    for values in template_points(pf.template, rng):
        env = pf.template.env(values)
        target = family.evaluate({k: evaluate(v, env) for k, v in pf.param_map.items()})
        assert (pf.template.evaluate(values) == target) == pf.agrees


def test_summary_families_are_valid_and_cybe_partition():
    for tid in catalog.SUMMARY_IDS:
        t = r_template(tid)
        for values in grid(t.params):
            res = check_r(t.alg, t.evaluate(values))
            assert bialgebra_ok(res), (tid, values)
            if tid in catalog.CYBE_ALWAYS:
                assert res["cybe"], (tid, values)
            else:
                assert res["cybe"] == (values["x"] == 0), (tid, values)


def test_printed_variants_fail_only_off_zero():
    for t in catalog.PRINTED_INVALID:
        for values in grid(t.params):
            res = check_r(t.alg, t.evaluate(values))
            broken = values["x"] != 0 and values.get("alpha", 1) == 1
            assert bialgebra_ok(res) == (not broken), (t.id, values)


def test_g_and_a1_related_by_swap():
    from sbk.autos import AutoParams, act_on_r, build_automorphism
    S = build_automorphism(AutoParams(1, 0, 0, 1, 1))
    for x in (Fraction(1), Fraction(-2, 3)):
        for alpha in (0, 1):
            g = r_template("g").evaluate(x=x, alpha=alpha)
            assert act_on_r(S, g) == r_template("a1").evaluate(x=x, alpha=alpha)


def test_osp12_list():
    for t in catalog.OSP12_TEMPLATES:
        for values in grid(t.params):
            res = check_r(t.alg, t.evaluate(values))
            assert bialgebra_ok(res)
            if t.id in catalog.X_FAMILIES:
                assert res["cybe"] == (values["x"] == 0)
            else:
                assert res["cybe"]


def test_template_export_shape():
    d = r_template("case19").to_dict()
    assert d["kind"] == "matrix" and len(d["r_B"]) == 4
    d = r_template("e1").to_dict()
    assert d["kind"] == "wedge" and d["terms"][0] == {"coefficient": "2*x", "left": "H",
                                                      "right": "B"}
