"""Dual-coalgebra functionals on the quantum sphere.

A symbol (m, l, lam) stands for the restriction to the sphere of
f_mu g^m E^l where mu^2 = lam; the classification span uses m = 0 only
(written psi^l_lam).  Evaluation runs in the quadratic extension
Q(t)[mu]/(mu^2 - lam), and the result of evaluating on any sphere element
must be mu-free, which is asserted on every call.

The raising/lowering/weight operators phi, varphi, kappa act on m = 0
symbols by

  phi(psi^l_lam)    = -(q^l [l]/(q-q^-1)) psi^(l-1)_{q^2 lam}
                      + alpha q (q^(2l) - lam) psi^l_{q^2 lam}
                      + q^2 (q^(2l) - lam^2) psi^(l+1)_{q^2 lam}
  varphi(psi^l_lam) = lam^-1 (q^(1-l) [l]/(q-q^-1)) psi^(l-1)_{q^-2 lam}
  kappa(psi^l_lam)  = lam psi^l_lam

and the right action of the twisted primitive element decomposes as
psi X_c = q^-1 phi(psi) + lam varphi(psi) + alpha (1 - lam^-1) kappa(psi).
"""

from .scalars import (ZERO, ONE, Q, QINV, QHAT, RatFunc, CParam, XcData,
                      qint, qbinom, qpow, QuadRing)
from . import linalg, oqsl2, podles, uqsl2rep


class PsiVector:
    """Linear combination of dual-coalgebra symbols (m, l, lam)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def symbol(l, lam, m=0, coeff=ONE):
        lam = RatFunc.coerce(lam)
        if lam is None or lam.is_zero():
            raise ValueError("psi symbols need a nonzero lambda subscript")
        return PsiVector({(m, l, lam): coeff} if coeff else None)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return PsiVector(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return PsiVector({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        c = RatFunc.coerce(other)
        if c is None:
            return NotImplemented
        if not c:
            return PsiVector()
        return PsiVector({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PsiVector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def value_at_unit(self):
        """Evaluation on 1: only the (0, 0, lam) symbols contribute."""
        out = ZERO
        for (m, l, _), v in self.terms.items():
            if m == 0 and l == 0:
                out = out + v
        return out

    def grades(self):
        return {lam for (_, _, lam) in self.terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, l, lam) in sorted(self.terms, key=lambda k: (k[0], k[1], k[2].sort_key())):
            c = self.terms[(m, l, lam)]
            name = "psi^%d_(%s)" % (l, lam) if m == 0 else "psi^{%d,%d}_(%s)" % (m, l, lam)
            cs = str(c)
            if any(op in cs[1:] for op in "+-/") or "*" in cs:
                cs = "(" + cs + ")"
            parts.append(name if cs == "1" else ("-" + name if cs == "-1" else cs + "*" + name))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


EPSILON = PsiVector.symbol(0, ONE)      # psi^0_1 is the counit


def _require_m0(v):
    for (m, _, _) in v.terms:
        if m:
            raise ValueError("operator engine only acts on m = 0 symbols")


class HWModule:
    """A highest weight module: the phi-orbit of psi^0_{±q^(-l)}."""

    __slots__ = ("sign", "l", "lambda0", "basis", "matE", "matF", "matK")

    def __init__(self, sign, l, lambda0, basis, matE, matF, matK):
        self.sign = sign
        self.l = l
        self.lambda0 = lambda0
        self.basis = basis
        self.matE = matE
        self.matF = matF
        self.matK = matK

    def dim(self):
        return self.l + 1


class DualEngine:
    """Operator and evaluation engine over a fixed admissible parameter c."""

    def __init__(self, c: CParam):
        if c.is_zero():
            raise ValueError("c = 0 is excluded (quantum subgroup case)")
        self.c = c
        self.xc = XcData(c)
        self.alpha = self.xc.alpha
        self.alg = podles.PodlesAlgebra(c)
        self._evals = {}

    # -- the three operators

    def phi(self, v):
        _require_m0(v)
        out = PsiVector()
        a = self.alpha
        for (m, l, lam), coeff in v.terms.items():
            q2lam = qpow(4) * lam
            if l >= 1:
                out = out + PsiVector.symbol(
                    l - 1, q2lam, 0, -coeff * qpow(2 * l) * qint(l) / QHAT)
            mid = a * Q * (qpow(4 * l) - lam)
            if mid:
                out = out + PsiVector.symbol(l, q2lam, 0, coeff * mid)
            top = Q * Q * (qpow(4 * l) - lam * lam)
            if top:
                out = out + PsiVector.symbol(l + 1, q2lam, 0, coeff * top)
        return out

    def varphi(self, v):
        _require_m0(v)
        out = PsiVector()
        for (m, l, lam), coeff in v.terms.items():
            if l >= 1:
                out = out + PsiVector.symbol(
                    l - 1, qpow(-4) * lam, 0,
                    coeff * lam.inv() * qpow(2 * (1 - l)) * qint(l) / QHAT)
        return out

    def kappa(self, v, power=1):
        _require_m0(v)
        out = PsiVector()
        for (m, l, lam), coeff in v.terms.items():
            out = out + PsiVector.symbol(l, lam, 0, coeff * lam ** power)
        return out

    def apply_operator(self, kind, v):
        if kind == "phi":
            return self.phi(v)
        if kind == "varphi":
            return self.varphi(v)
        if kind == "kappa":
            return self.kappa(v)
        raise ValueError("unknown operator %r" % kind)

    def xc_right_action(self, v):
        """The right action of X_c, termwise in the lambda-grading."""
        _require_m0(v)
        out = PsiVector()
        a = self.alpha
        for sym, coeff in v.terms.items():
            (m, l, lam) = sym
            term = PsiVector({sym: coeff})
            out = out + QINV * self.phi(term) + lam * self.varphi(term)
            if a:
                out = out + (a * (ONE - lam.inv()) * lam) * term
        return out

    # -- coalgebra structure on symbols

    def psi_coproduct(self, sym):
        """List of (coeff, left symbol, right symbol) for Delta psi^l_lam."""
        m, l, lam = sym
        if m:
            raise ValueError("coproduct implemented for m = 0 symbols")
        out = []
        for r in range(l + 1):
            coeff = qbinom(l, r) * qpow(-2 * r * (l - r))
            out.append((coeff, (0, r, lam), (0, l - r, qpow(-4 * r) * lam)))
        return out

    # -- evaluation against the sphere

    def psi_eval(self, sym, x):
        """Value of psi^{m,l}_lam on a sphere element, exactly in Q(t)."""
        m, l, lam = sym
        key = lam
        ev = self._evals.get(key)
        if ev is None:
            ev = oqsl2.Evaluator(QuadRing(lam))
            self._evals[key] = ev
        letters = (("fs",),) + (("g",),) * m + (("E",),) * l
        val = ev.eval(letters, self.alg.embed(x))
        if not val.im.is_zero():
            raise ArithmeticError("psi evaluation depends on the square root choice")
        return val.re

    def eval_vector(self, v, x):
        out = ZERO
        for sym, coeff in v.terms.items():
            out = out + coeff * self.psi_eval(sym, x)
        return out

    def evaluation_row(self, v, monomials):
        return [self.eval_vector(v, self.alg.element({m: ONE})) for m in monomials]

    # -- highest weight scan (Prop. on local finiteness, both routes)

    def is_nilpotent_weight(self, sign, l):
        """phi^(l+1) kills psi^0_{±q^(-l)}; cross-checked against the matrix kernel."""
        lam0 = qpow(-2 * l) if sign == +1 else -qpow(-2 * l)
        v = PsiVector.symbol(0, lam0)
        for _ in range(l + 1):
            v = self.phi(v)
        op_route = v.is_zero()
        mat_route = uqsl2rep.kernel_dim(l, self.c, sign) > 0
        if op_route != mat_route:
            raise AssertionError(
                "operator and matrix routes disagree at sign=%+d l=%d" % (sign, l))
        return op_route

    def scan_weights(self, Lmax):
        out = []
        for l in range(Lmax + 1):
            for sign in (+1, -1):
                if self.is_nilpotent_weight(sign, l):
                    out.append((sign, l))
        return out

    def build_module(self, sign, l):
        """The (l+1)-dimensional module on the phi-orbit of psi^0_{±q^(-l)}."""
        if not self.is_nilpotent_weight(sign, l):
            raise ValueError("(%+d, %d) is not in J^c" % (sign, l))
        lam0 = qpow(-2 * l) if sign == +1 else -qpow(-2 * l)
        basis = [PsiVector.symbol(0, lam0)]
        for _ in range(l):
            basis.append(self.phi(basis[-1]))
        if any(b.is_zero() for b in basis):
            raise AssertionError("phi-orbit collapsed early")
        if not self.phi(basis[-1]).is_zero():
            raise AssertionError("phi-orbit does not close")
        n = l + 1
        matE = linalg.zeros(n, n)
        for k in range(l):
            matE[k + 1][k] = ONE
        matK = linalg.zeros(n, n)
        for k in range(n):
            grades = basis[k].grades()
            if len(grades) != 1:
                raise AssertionError("orbit vector is not grading-homogeneous")
            (grade,) = grades
            if grade != qpow(4 * k) * lam0:
                raise AssertionError("unexpected grade in phi-orbit")
            matK[k][k] = grade
        matF = linalg.zeros(n, n)
        if not self.varphi(basis[0]).is_zero():
            raise AssertionError("highest weight vector is not varphi-killed")
        for k in range(1, n):
            fv = self.varphi(basis[k])
            prev = basis[k - 1]
            sym = next(iter(prev.terms))
            ck = fv.terms.get(sym, ZERO) / prev.terms[sym]
            if fv != ck * prev:
                raise AssertionError("varphi does not stay on the orbit line")
            matF[k - 1][k] = ck
        mod = HWModule(sign, l, lam0, basis, matE, matF, matK)
        self._check_module_relations(mod)
        return mod

    @staticmethod
    def _check_module_relations(mod):
        E, F, K = mod.matE, mod.matF, mod.matK
        n = mod.l + 1
        Kinv = linalg.zeros(n, n)
        for k in range(n):
            Kinv[k][k] = K[k][k].inv()
        comm = linalg.matsub(linalg.matmul(E, F), linalg.matmul(F, E))
        rhs = linalg.scalmul(QHAT.inv(), linalg.matsub(K, Kinv))
        if not linalg.is_zero_matrix(linalg.matsub(comm, rhs)):
            raise AssertionError("module fails EF - FE relation")
        ke = linalg.matsub(linalg.matmul(K, E),
                           linalg.scalmul(Q * Q, linalg.matmul(E, K)))
        kf = linalg.matsub(linalg.matmul(K, F),
                           linalg.scalmul(qpow(-4), linalg.matmul(F, K)))
        if not (linalg.is_zero_matrix(ke) and linalg.is_zero_matrix(kf)):
            raise AssertionError("module fails K-conjugation relations")
        p = linalg.identity(n)
        for _ in range(mod.l):
            p = linalg.matmul(p, E)
        if linalg.is_zero_matrix(p):
            raise AssertionError("E nilpotent too early")
        p = linalg.matmul(p, E)
        if not linalg.is_zero_matrix(p):
            raise AssertionError("E not nilpotent of order l+1")

    # -- the phi-matrix route to the displayed tridiagonal matrix

    def phi_matrix_rescaled(self, sign, l):
        """Matrix of phi from span{psi^k_{q^(2l) lam0}} in the rescaled bases.

        The rescaling is psi-bar^k = (-(q-q^-1))^k q^(-(l-k)(l-k+1)/2) psi^k;
        the result should reproduce the displayed tridiagonal matrix.
        """
        lam0 = qpow(-2 * l) if sign == +1 else -qpow(-2 * l)
        mu = qpow(4 * l) * lam0
        n = l + 1
        cols = []
        target_syms = [(0, k, qpow(4) * mu) for k in range(n)]
        for k in range(n):
            img = self.phi(PsiVector.symbol(k, mu))
            col = []
            for sym in target_syms:
                col.append(img.terms.get(sym, ZERO))
            leftover = set(img.terms) - set(target_syms)
            if leftover:
                raise AssertionError("phi image leaves the expected span")
            cols.append(col)
        m = [[cols[j][i] for j in range(n)] for i in range(n)]
        scal = [(-QHAT) ** k * qpow(-(l - k) * (l - k + 1)) for k in range(n)]
        out = linalg.zeros(n, n)
        for i in range(n):
            for j in range(n):
                out[i][j] = scal[i].inv() * m[i][j] * scal[j]
        return out

    # -- truncated independence (dual coalgebra basis at desk scale)

    def truncated_independence(self, degree=4, lam_grid=None, max_ml=2):
        """Evaluation rows of {psi^{ml}_lam} against monomials up to `degree`.

        The symbol set {m + l <= 2, lam in a 3-point grid} has 18 members,
        which exceeds the 16 monomials of degree <= 3, so the default
        evaluation degree is 4 (25 monomials).
        """
        if lam_grid is None:
            lam_grid = [ONE, qpow(4), qpow(8)]
        monos = self.alg.normal_monomials(degree)
        rows = []
        labels = []
        for lam in lam_grid:
            for m in range(max_ml + 1):
                for l in range(max_ml + 1 - m):
                    labels.append((m, l, lam))
                    rows.append([self.psi_eval((m, l, lam),
                                               self.alg.element({mono: ONE}))
                                 for mono in monos])
        r = linalg.rank(rows)
        return {"rank": r, "rows": len(rows), "monomials": len(monos),
                "full_row_rank": r == len(rows), "degree": degree,
                "labels": labels}

    def nilpotency_dichotomy(self, Lmax, lam_samples):
        """phi^(Lmax+1) does not kill psi^0_lam for lam off the weight list."""
        witnesses = []
        for lam in lam_samples:
            v = PsiVector.symbol(0, lam)
            for _ in range(Lmax + 1):
                v = self.phi(v)
            if v.is_zero():
                witnesses.append(lam)
        return {"pass": not witnesses, "witnesses": witnesses}
