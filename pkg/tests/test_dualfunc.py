import pytest

from qsphere.scalars import (ZERO, ONE, Q, QINV, QHAT, RatFunc, CParam,
                             qpow, qbinom)
from qsphere import linalg, oqsl2
from qsphere.dualfunc import DualEngine, PsiVector, EPSILON

GENERIC = CParam.generic(1)
EXC_HALF = CParam.generic((qpow(1) - qpow(-1)).inv())


@pytest.fixture(scope="module")
def eng():
    return DualEngine(GENERIC)


@pytest.fixture(scope="module")
def eng_inf():
    return DualEngine(CParam.infinity())


def test_rejects_zero_c():
    with pytest.raises(ValueError):
        DualEngine(CParam.zero())


def test_kappa_is_subscript_multiplication(eng):
    v = PsiVector.symbol(2, qpow(-8))
    assert eng.kappa(v) == qpow(-8) * v


def test_varphi_kills_l0(eng):
    assert eng.varphi(PsiVector.symbol(0, RatFunc.from_int(7))).is_zero()


def test_phi_fixes_counit(eng):
    assert eng.phi(EPSILON).is_zero()
    assert eng.xc_right_action(EPSILON).is_zero()


def test_xc_right_action_l0_formula(eng):
    lam = RatFunc.from_int(3)
    got = eng.xc_right_action(PsiVector.symbol(0, lam))
    a = eng.alpha
    want = (a * (1 - lam)) * PsiVector.symbol(0, qpow(4) * lam) \
        + (Q * (1 - lam * lam)) * PsiVector.symbol(1, qpow(4) * lam) \
        + (a * (lam - 1)) * PsiVector.symbol(0, lam)
    assert got == want


def test_xc_right_action_linear(eng):
    lam = Q * Q
    u = PsiVector.symbol(0, lam)
    v = PsiVector.symbol(1, lam)
    assert eng.xc_right_action(u + v) == eng.xc_right_action(u) + eng.xc_right_action(v)


def test_operator_relations_sample(eng):
    for lam in (ONE, Q, RatFunc.from_int(2)):
        for l in range(0, 5):
            v = PsiVector.symbol(l, lam)
            lhs = eng.phi(eng.varphi(v)) - eng.varphi(eng.phi(v))
            rhs = (eng.kappa(v) - eng.kappa(v, -1)) * QHAT.inv()
            assert lhs == rhs


def test_operator_engine_rejects_m_nonzero(eng):
    v = PsiVector.symbol(1, Q, m=1)
    with pytest.raises(ValueError):
        eng.phi(v)


def test_psi_coproduct(eng):
    lam = RatFunc.from_int(5)
    assert eng.psi_coproduct((0, 0, lam)) == [(ONE, (0, 0, lam), (0, 0, lam))]
    terms = eng.psi_coproduct((0, 1, lam))
    assert terms == [(ONE, (0, 0, lam), (0, 1, lam)),
                     (ONE, (0, 1, lam), (0, 0, qpow(-4) * lam))]
    # counit law: only the r = l term survives evaluation of the right leg at 1
    l = 3
    total = PsiVector()
    for c, s1, s2 in eng.psi_coproduct((0, l, lam)):
        if s2[1] == 0:
            total = total + c * PsiVector({s1: ONE})
    assert total == PsiVector.symbol(l, lam)


def test_psi_eval_examples(eng):
    alg = eng.alg
    assert eng.psi_eval((0, 0, ONE), alg.e1()) == alg.counit(alg.e1())
    lam = Q * Q
    for i, e in ((-1, alg.em1()), (0, alg.e0()), (1, alg.e1())):
        assert eng.psi_eval((0, 0, lam), e) == lam ** i * alg.counit(e)


def test_psi_eval_root_independence(eng):
    # for a square subscript both explicit roots give the evaluation
    alg = eng.alg
    lam = qpow(8)          # mu = ±q^2
    x = alg.parse("A*e1*e1")
    got = eng.psi_eval((0, 2, lam), x)
    for mu in (qpow(4), -qpow(4)):
        word = oqsl2.FunctionalWord(mu, 0, 2)
        assert oqsl2.eval_functional(word, alg.embed(x)) == got


def test_psi_product_pairing(eng):
    alg = eng.alg
    smalls = alg.normal_monomials(2)[:6]
    lam = Q * Q
    for l in (0, 1, 2):
        cop = eng.psi_coproduct((0, l, lam))
        for m1 in smalls:
            for m2 in smalls:
                x, y = alg.element({m1: ONE}), alg.element({m2: ONE})
                lhs = eng.psi_eval((0, l, lam), x * y)
                rhs = ZERO
                for cc, s1, s2 in cop:
                    rhs = rhs + cc * eng.psi_eval(s1, x) * eng.psi_eval(s2, y)
                assert lhs == rhs


def test_xc_action_compatible_with_evaluation(eng):
    alg = eng.alg
    for lam in (ONE, RatFunc.from_int(2)):
        for l in (0, 1):
            v = PsiVector.symbol(l, lam)
            vx = eng.xc_right_action(v)
            for mono in alg.normal_monomials(2):
                x = alg.element({mono: ONE})
                assert eng.eval_vector(vx, x) == eng.eval_vector(v, alg.act_xc(x))


def test_scan_jc(eng, eng_inf):
    assert eng.scan_weights(4) == [(1, 0), (1, 2), (1, 4)]
    assert eng_inf.scan_weights(2) == [(1, 0), (-1, 0), (1, 2), (-1, 2)]
    assert DualEngine(EXC_HALF).scan_weights(3) == [(1, 0), (-1, 1), (1, 2), (-1, 3)]


def test_build_module_trivial(eng):
    mod = eng.build_module(+1, 0)
    assert mod.dim() == 1
    assert mod.basis[0] == EPSILON
    assert mod.matK == [[ONE]]
    assert mod.matE == [[ZERO]] and mod.matF == [[ZERO]]


def test_build_module_weights(eng):
    mod = eng.build_module(+1, 2)
    assert [mod.matK[k][k] for k in range(3)] == [qpow(-4), ONE, qpow(4)]
    # E is the shift, nilpotent of order exactly 3
    p = linalg.matmul(mod.matE, linalg.matmul(mod.matE, mod.matE))
    assert linalg.is_zero_matrix(p)


def test_build_module_exceptional():
    eng = DualEngine(EXC_HALF)
    mod = eng.build_module(-1, 1)
    assert mod.dim() == 2
    assert mod.lambda0 == -qpow(-2)
    assert [mod.matK[k][k] for k in range(2)] == [-qpow(-2), -qpow(2)]


def test_build_module_rejects_non_weights(eng):
    with pytest.raises(ValueError):
        eng.build_module(-1, 2)


def test_module_vectors_are_graded(eng):
    mod = eng.build_module(+1, 4)
    for k, v in enumerate(mod.basis):
        assert v.grades() == {qpow(4 * k) * mod.lambda0}


def test_truncated_independence(eng):
    rep = eng.truncated_independence(degree=4)
    assert rep["full_row_rank"] and rep["rows"] == 18 and rep["monomials"] == 25


def test_nilpotency_dichotomy(eng):
    bad_grid = [RatFunc.from_int(3), Q * Q * Q, -qpow(-2) * 5]
    rep = eng.nilpotency_dichotomy(4, bad_grid)
    assert rep["pass"], rep


def test_phi_matrix_rescaled_matches_display(eng):
    from qsphere.uqsl2rep import xc_matrix
    for l in (0, 1, 3):
        for sign in (+1, -1):
            assert linalg.mat_eq(eng.phi_matrix_rescaled(sign, l),
                                 xc_matrix(l, GENERIC, sign))
