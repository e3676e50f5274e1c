import pytest

from qsphere.scalars import ZERO, ONE, Q, QINV, RatFunc, CParam, qpow
from qsphere import linalg
from qsphere.dualfunc import DualEngine, EPSILON
from qsphere.fodc import (CalculusPresentation, chi_functionals, chibar_report,
                          classify_de_generated, emit_json, build_rform_calculus,
                          irreducibility_report, nu_apply, nu_is_admissible,
                          pairing_matrix, parse_json, submodule_Vn,
                          submodule_report, tangent_space, tangent_space_json,
                          verify_freeness)

GENERIC = CParam.generic(1)
INF = CParam.infinity()
EXC_HALF = CParam.generic((qpow(1) - qpow(-1)).inv())


@pytest.fixture(scope="module")
def eng():
    return DualEngine(GENERIC)


@pytest.fixture(scope="module")
def eng_inf():
    return DualEngine(INF)


def test_trivial_tangent_space(eng):
    ts = tangent_space(GENERIC, [], engine=eng)
    assert ts.dim == 1 and ts.certificate["pass"]
    assert pairing_matrix(ts, eng.alg.generators_e()) == []


def test_single_component_tangent_space(eng):
    ts = tangent_space(GENERIC, [(1, 2)], engine=eng)
    assert ts.dim == 4
    assert ts.certificate["pass"]
    assert irreducibility_report(ts)["pass"]


def test_direct_sum_tangent_space(eng):
    ts = tangent_space(GENERIC, [(1, 2), (1, 4)], engine=eng)
    assert ts.dim == 9
    assert ts.certificate["pass"]


def test_tangent_space_rejects_bad_component(eng):
    with pytest.raises(ValueError):
        tangent_space(GENERIC, [(-1, 2)], engine=eng)


def test_pairing_ranks(eng, eng_inf):
    ts = tangent_space(GENERIC, [(1, 2)], engine=eng)
    assert linalg.rank(pairing_matrix(ts, eng.alg.generators_e())) == 3
    ts1 = tangent_space(INF, [(-1, 0)], engine=eng_inf)
    pm = pairing_matrix(ts1, eng_inf.alg.generators_e())
    assert linalg.rank(pm) == 1


def test_classification_counts(eng, eng_inf):
    r = classify_de_generated(GENERIC, Lmax=6, engine=eng)
    assert r["count"] == 1
    assert r["calculi"][0]["components"] == [(1, 2)]
    assert r["calculi"][0]["dim"] == 3

    r = classify_de_generated(INF, Lmax=6, engine=eng_inf)
    assert r["count"] == 3
    assert sorted(e["dim"] for e in r["calculi"]) == [1, 3, 3]

    r = classify_de_generated(EXC_HALF, Lmax=6)
    assert r["count"] == 2
    assert sorted(e["dim"] for e in r["calculi"]) == [2, 3]


def test_classification_exc_r1_still_one():
    # at c = (q - q^-1)^-2 the weight set gains (-1, 2), but that component
    # pairs with rank 2 < 3 against the generators, so the count stays 1
    c = CParam.generic((qpow(2) - qpow(-2)).inv())
    r = classify_de_generated(c, Lmax=4)
    assert r["count"] == 1
    assert r["calculi"][0]["components"] == [(1, 2)]
    assert any(e["components"] == [(-1, 2)] and e["pairing_rank"] == 2
               for e in r["rejected"])


def test_submodule_v1(eng):
    alg = eng.alg
    basis = submodule_Vn(1, GENERIC, alg)
    assert basis[0] == alg.e1()
    assert basis[1] == alg.e0()
    assert basis[2] == -(Q * Q + 1) * alg.em1()
    rep = submodule_report(1, GENERIC, alg)
    assert rep["pass"] and rep["rank"] == 3


def test_submodule_v2(eng):
    rep = submodule_report(2, GENERIC, eng.alg)
    assert rep["pass"] and rep["rank"] == 5


def test_nu_admissibility():
    assert nu_is_admissible("id", GENERIC)
    assert not nu_is_admissible("flip", GENERIC)
    assert nu_is_admissible("flip", INF)
    with pytest.raises(ValueError):
        nu_is_admissible("other", GENERIC)
    with pytest.raises(ValueError):
        build_rform_calculus(1, "flip", GENERIC)


def test_nu_flip_is_endomorphism_at_infinity(eng_inf):
    alg = eng_inf.alg
    x = alg.parse("em1*e1")
    y = alg.parse("A*e1")
    assert nu_apply("flip", x * y) == nu_apply("flip", x) * nu_apply("flip", y)


def test_rform_calculus_n1(eng):
    pres = build_rform_calculus(1, "id", GENERIC, engine=eng)
    alg = eng.alg
    assert pres.N == 3
    assert pres.is_zero_coords(pres.d(alg.unit()))
    table = pres.differential_table()
    for name in ("em1", "e0", "e1"):
        assert not pres.is_zero_coords(table[name])
    assert pres.bimodule_report()["pass"]
    assert pres.leibniz_report(3)["pass"]


def test_left_action_table_shape(eng):
    pres = build_rform_calculus(1, "id", GENERIC, engine=eng)
    table = pres.left_action_table()
    assert set(table) == {"em1", "e0", "e1", "A"}
    assert len(table["A"]) == 3 and len(table["A"][0]) == 3


def test_freeness_n1(eng):
    pres = build_rform_calculus(1, "id", GENERIC, engine=eng)
    rep = verify_freeness(pres, 2)
    assert rep["pass"], rep


def test_rform_calculus_flip_infinity(eng_inf):
    pres = build_rform_calculus(1, "flip", INF, engine=eng_inf)
    assert pres.leibniz_report(2)["pass"]
    chi = chi_functionals(1, "flip", INF, engine=eng_inf)
    assert chi["spans_equal"]


def test_chi_functionals_n1(eng):
    chi = chi_functionals(1, "id", GENERIC, engine=eng)
    assert chi["spans_equal"]
    assert chi["chi_vanish_at_unit"]
    assert chi["rank_chi"] == 3


def test_chibar(eng):
    rep = chibar_report(1, GENERIC, engine=eng)
    assert rep["pass"], rep
    rep = chibar_report(2, GENERIC, engine=eng)
    assert rep["pass"], rep


def test_tangent_space_json_roundtrip(eng):
    ts = tangent_space(GENERIC, [(1, 2)], engine=eng)
    doc = tangent_space_json(ts)
    assert parse_json(emit_json(doc)) == doc
    assert doc["dim_calculus"] == 3


def test_presentation_json_roundtrip(eng):
    pres = build_rform_calculus(1, "id", GENERIC, engine=eng)
    doc = pres.to_json_dict()
    assert parse_json(emit_json(doc)) == doc
    assert doc["dim"] == 3
    assert doc["components"] == [[1, 2]]
    assert set(doc["differential_table"]) == {"em1", "e0", "e1", "A"}
