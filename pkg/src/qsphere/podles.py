"""The Podles sphere O_q(S^2_c) as an abstract algebra.

Internal generators are e_{-1} (letter "m"), A (letter "A") and e_1
(letter "p"); e_0 is parser sugar for 1 - (1+q^2) A, or -(1+q^2) A when
c = infinity.  The four-rule rewriting system of the defining relations
(e_1 A -> q^2 A e_1, e_{-1} A -> q^-2 A e_{-1}, and the two e-e rules)
moves A-letters to the front, so stored normal-form monomials are
A^j e_{-1}^i and A^j e_1^k; no monomial contains both e_{-1} and e_1.
These equal the basis monomials e_{-1}^i A^j and A^j e_1^k up to an
explicit q-power.

Also here: the embedding into O_q(SL2), the left U_q(sl2)-action and the
right coaction (both module-algebra extensions of the generator tables),
the indecomposable representations mu_n at c = c(n), and the localization
check onto the opposite Borel algebra.
"""

import itertools

from .scalars import (ZERO, ONE, Q, QINV, QHAT, RatFunc, qpow, CParam)
from . import oqsl2
from .oqsl2 import SL2Element, pi_coeff
from .scalars import ExprParser
from . import linalg

LETTERS = ("m", "A", "p")
_PRINT = {"m": "em1", "A": "A", "p": "e1"}


def normal_words(max_degree):
    """All normal-form words A^j x^i (x one of e_{-1}, e_1) of degree <= max_degree."""
    out = []
    for d in range(max_degree + 1):
        for j in range(d + 1):
            i = d - j
            if i == 0:
                out.append(("A",) * j)
            else:
                out.append(("A",) * j + ("m",) * i)
                out.append(("A",) * j + ("p",) * i)
    return out


class PodlesAlgebra:
    """The sphere algebra for a fixed parameter c, with caches."""

    def __init__(self, c: CParam):
        self.c = c
        cv = c.c_value()
        q2, q4 = Q * Q, qpow(8)
        if c.is_infinity():
            mp = [(-ONE, ("A", "A")), (ONE, ())]
            pm = [(-q4, ("A", "A")), (ONE, ())]
        else:
            mp = [(ONE, ("A",)), (-ONE, ("A", "A")), (cv, ())]
            pm = [(q2, ("A",)), (-q4, ("A", "A")), (cv, ())]
        self.rules = {
            ("m", "A"): [(qpow(-4), ("A", "m"))],
            ("p", "A"): [(q2, ("A", "p"))],
            ("m", "p"): mp,
            ("p", "m"): pm,
        }
        self._nf = {}
        self._embed_letter = None
        self._embed_cache = {}
        self._act_cache = {}
        self._coact_letter = None
        self._coact_cache = {}

    # -- normal form

    def reduce_word(self, word):
        cached = self._nf.get(word)
        if cached is not None:
            return cached
        for i in range(len(word) - 1):
            rule = self.rules.get((word[i], word[i + 1]))
            if rule is None:
                continue
            acc = {}
            for coeff, rep in rule:
                for m, c in self.reduce_word(word[:i] + rep + word[i + 2:]).items():
                    v = acc.get(m, ZERO) + coeff * c
                    if v:
                        acc[m] = v
                    elif m in acc:
                        del acc[m]
            self._nf[word] = acc
            return acc
        out = {word: ONE}
        self._nf[word] = out
        return out

    # -- element constructors

    def element(self, terms=None):
        return PodlesElement(self, dict(terms) if terms else {})

    def unit(self, coeff=ONE):
        coeff = RatFunc.coerce(coeff)
        return self.element({(): coeff} if coeff else None)

    def gen(self, name):
        return self.element({(name,): ONE})

    def em1(self):
        return self.gen("m")

    def e1(self):
        return self.gen("p")

    def A(self):
        return self.gen("A")

    def e0(self):
        scale = Q * Q + 1
        if self.c.is_infinity():
            return self.element({("A",): -scale})
        return self.element({(): ONE, ("A",): -scale})

    def generators_e(self):
        """[e_{-1}, e_0, e_1] as elements."""
        return [self.em1(), self.e0(), self.e1()]

    def from_word(self, word, coeff=ONE):
        out = {}
        for m, c in self.reduce_word(tuple(word)).items():
            v = coeff * c
            if v:
                out[m] = v
        return self.element(out)

    def parse(self, text):
        symbols = {"em1": self.em1(), "e1": self.e1(), "A": self.A(),
                   "e0": self.e0()}
        v = ExprParser(text, symbols, self.unit()).parse()
        if isinstance(v, RatFunc):
            v = self.unit(v)
        return v

    def normal_monomials(self, max_degree):
        return normal_words(max_degree)

    # -- counit (the AlgebraBase normalization: eps(e_i) used to embed)

    def eps_weights(self):
        """(eps(e_{-1}), eps(e_0), eps(e_1)) for the chosen normalization."""
        if self.c.variant == "generic":
            return (self.c.s, ONE, self.c.s)
        if self.c.is_infinity():
            return (ONE, ZERO, ONE)
        return (ONE, ONE, ZERO)      # c = 0, localization normalization

    def counit(self, x):
        """The restriction of the counit; A has counit (1 - eps(e0))/(1+q^2)."""
        wm, w0, wp = self.eps_weights()
        if self.c.is_infinity():
            epsA = -w0 / (Q * Q + 1)
        else:
            epsA = (ONE - w0) / (Q * Q + 1)
        table = {"m": wm, "A": epsA, "p": wp}
        total = ZERO
        for mono, coeff in x.terms.items():
            v = coeff
            for g in mono:
                v = v * table[g]
                if not v:
                    break
            total = total + v
        return total

    # -- embedding into O_q(SL2)

    def _letter_images(self):
        if self._embed_letter is None:
            wm, w0, wp = self.eps_weights()
            weights = {-1: wm, 0: w0, 1: wp}
            img = {}
            for i, letter in ((-1, "m"), (1, "p")):
                e = SL2Element()
                for j in (-1, 0, 1):
                    e = e + weights[j] * pi_coeff(j, i)
                img[letter] = e
            e0 = SL2Element()
            for j in (-1, 0, 1):
                e0 = e0 + weights[j] * pi_coeff(j, 0)
            scale = (Q * Q + 1).inv()
            if self.c.is_infinity():
                img["A"] = -scale * e0
            else:
                img["A"] = scale * (SL2Element.unit() - e0)
            self._embed_letter = img
        return self._embed_letter

    def embed(self, x):
        img = self._letter_images()
        out = SL2Element()
        for mono, coeff in x.terms.items():
            v = self._embed_cache.get(mono)
            if v is None:
                v = SL2Element.unit()
                for g in mono:
                    v = v * img[g]
                self._embed_cache[mono] = v
            out = out + coeff * v
        return out

    # -- left action of E, F, K^n (module-algebra extension of the tables)

    def _act_letter(self, kind, letter):
        if kind == "E":
            if letter == "m":
                return self.element()
            if letter == "A":
                return self.em1()
            return self.e0()
        if kind == "F":
            if letter == "m":
                return -QINV * self.e0()
            if letter == "A":
                return -QINV * self.e1()
            return self.element()
        raise ValueError(kind)

    _K_WEIGHT = {"m": 2, "A": 0, "p": -2}      # q-exponent of the K-eigenvalue

    def k_weight(self, mono):
        return sum(self._K_WEIGHT[g] for g in mono)

    def act(self, kind, x, power=1):
        """Left action of E, F or K^power on an element."""
        if kind == "K":
            out = {}
            for mono, coeff in x.terms.items():
                out[mono] = coeff * qpow(2 * power * self.k_weight(mono))
            return self.element(out)
        total = self.element()
        for mono, coeff in x.terms.items():
            total = total + coeff * self._act_mono(kind, mono)
        return total

    def _act_mono(self, kind, mono):
        key = (kind, mono)
        v = self._act_cache.get(key)
        if v is not None:
            return v
        if not mono:
            v = self.element()
        else:
            g, rest = mono[0], mono[1:]
            head = self.element({(g,): ONE})
            if kind == "E":
                # E acts by (E x)(K y) + x (E y)
                v = (self._act_letter("E", g) *
                     qpow(2 * self.k_weight(rest)) * self.element({rest: ONE})
                     if rest else self._act_letter("E", g))
                if rest:
                    v = v + head * self._act_mono("E", rest)
            else:
                # F acts by (F x) y + (K^-1 x)(F y)
                v = self._act_letter("F", g) * self.element({rest: ONE})
                v = v + qpow(-2 * self._K_WEIGHT[g]) * head * self._act_mono("F", rest)
        self._act_cache[key] = v
        return v

    def act_xc(self, x):
        """Left action of the twisted primitive element X_c."""
        from .scalars import XcData
        xd = XcData(self.c)
        out = xd.beta * self.act("K", self.act("E", x), -1)
        out = out + xd.gamma * self.act("F", x)
        if xd.alpha:
            out = out + xd.alpha * (self.act("K", x, -1) - x)
        return out

    # -- right coaction B -> B (x) O_q(SL2)

    def _coact_letters(self):
        if self._coact_letter is None:
            ee = {-1: self.em1(), 0: self.e0(), 1: self.e1()}
            def coact_ei(i):
                t = {}
                for j in (-1, 0, 1):
                    pij = pi_coeff(j, i)
                    for pm, pc in ee[j].terms.items():
                        for am, ac in pij.terms.items():
                            k = (pm, am)
                            v = t.get(k, ZERO) + pc * ac
                            if v:
                                t[k] = v
                            elif k in t:
                                del t[k]
                return t
            scale = (Q * Q + 1).inv()
            tA = tens_scal(-scale, coact_ei(0))
            if not self.c.is_infinity():
                tA = tens_add(tA, {((), ()): scale})
            self._coact_letter = {"m": coact_ei(-1), "p": coact_ei(1), "A": tA}
        return self._coact_letter

    def coact(self, x):
        """Right coaction as {(sphere monomial, SL2 monomial): coeff}."""
        letters = self._coact_letters()
        out = {}
        for mono, coeff in x.terms.items():
            t = self._coact_cache.get(mono)
            if t is None:
                t = {((), ()): ONE}
                for g in mono:
                    t = tens_mul(self, t, letters[g])
                self._coact_cache[mono] = t
            out = tens_add(out, tens_scal(coeff, t))
        return out


class PodlesElement:
    """Linear combination of sphere normal-form monomials, tied to its algebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms):
        self.alg = alg
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, PodlesElement):
            if other.alg is not self.alg:
                raise ValueError("mixing sphere algebras with different c")
            return other
        c = RatFunc.coerce(other)
        if c is None:
            return None
        return self.alg.unit(c)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, v in o.terms.items():
            w = out.get(m, ZERO) + v
            if w:
                out[m] = w
            elif m in out:
                del out[m]
        return PodlesElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return PodlesElement(self.alg, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PodlesElement):
            c = RatFunc.coerce(other)
            if c is None:
                return NotImplemented
            if not c:
                return self.alg.element()
            return PodlesElement(self.alg, {m: v * c for m, v in self.terms.items()})
        o = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                c12 = c1 * c2
                for m, c in self.alg.reduce_word(m1 + m2).items():
                    v = out.get(m, ZERO) + c12 * c
                    if v:
                        out[m] = v
                    elif m in out:
                        del out[m]
        return PodlesElement(self.alg, out)

    def __rmul__(self, other):
        c = RatFunc.coerce(other)
        if c is None:
            return NotImplemented
        return self * c

    def __truediv__(self, other):
        c = RatFunc.coerce(other)
        if c is None:
            return NotImplemented
        return self * c.inv()

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("powers must be nonnegative integers")
        out = self.alg.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda w: (len(w), w)):
            word = tuple(_PRINT[g] for g in m)
            parts.append(oqsl2._term_str(self.terms[m], word))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


# tensor helpers for B (x) O_q(SL2), entries keyed (sphere word, SL2 word)

def tens_add(t1, t2):
    out = dict(t1)
    for k, v in t2.items():
        w = out.get(k, ZERO) + v
        if w:
            out[k] = w
        elif k in out:
            del out[k]
    return out


def tens_scal(c, t):
    if not c:
        return {}
    return {k: c * v for k, v in t.items()}


def tens_mul(alg, t1, t2):
    out = {}
    for (p1, a1), c1 in t1.items():
        for (p2, a2), c2 in t2.items():
            c12 = c1 * c2
            for pm, pc in alg.reduce_word(p1 + p2).items():
                for am, ac in oqsl2.reduce_word(a1 + a2).items():
                    k = (pm, am)
                    v = out.get(k, ZERO) + c12 * pc * ac
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
    return out


# ---------------------------------------------------------------------------
# structural reports

def confluence_report(c: CParam, max_len=3):
    """All first rewriting steps of short words lead to the same normal form."""
    alg = PodlesAlgebra(c)
    checked = 0
    for n in range(max_len + 1):
        for word in itertools.product(LETTERS, repeat=n):
            results = []
            for i in range(len(word) - 1):
                rule = alg.rules.get((word[i], word[i + 1]))
                if rule is None:
                    continue
                acc = {}
                for coeff, rep in rule:
                    for m, cc in alg.reduce_word(word[:i] + rep + word[i + 2:]).items():
                        v = acc.get(m, ZERO) + coeff * cc
                        if v:
                            acc[m] = v
                        elif m in acc:
                            del acc[m]
                results.append(acc)
            if results:
                base = alg.reduce_word(word)
                for r in results:
                    if r != base:
                        return {"confluent": False, "witness": word, "checked": checked}
                checked += 1
    return {"confluent": True, "witness": None, "checked": checked}


def embedded_relations_report(c: CParam):
    """The four rewritten defining relations hold for the embedded generators."""
    alg = PodlesAlgebra(c)
    em1 = alg.embed(alg.em1())
    e1 = alg.embed(alg.e1())
    Aim = alg.embed(alg.A())
    one = SL2Element.unit()
    q2, q4 = Q * Q, qpow(8)
    if c.is_infinity():
        rels = [
            ("e-e", em1 * e1 - (-Aim * Aim + one)),
            ("ee-", e1 * em1 - (-q4 * Aim * Aim + one)),
        ]
    else:
        cv = c.c_value()
        rels = [
            ("e-e", em1 * e1 - (Aim - Aim * Aim + cv * one)),
            ("ee-", e1 * em1 - (q2 * Aim - q4 * Aim * Aim + cv * one)),
        ]
    rels.append(("eA", e1 * Aim - q2 * Aim * e1))
    rels.append(("e-A", em1 * Aim - qpow(-4) * Aim * em1))
    failures = [(name, str(res)) for name, res in rels if not res.is_zero()]
    return {"pass": not failures, "failures": failures}


def original_relations_report(c: CParam):
    """The untransformed defining relations, with rho and lambda from the counits."""
    alg = PodlesAlgebra(c)
    em1 = alg.embed(alg.em1())
    e0 = alg.embed(alg.e0())
    e1 = alg.embed(alg.e1())
    wm, w0, wp = alg.eps_weights()
    rho = qpow(-4) * (Q * Q + 1) ** 2 * wm * wp + w0 * w0
    lam = (1 - Q * Q) * w0
    one = SL2Element.unit()
    q2 = Q * Q
    rels = [
        ("sum", (1 + q2) * (em1 * e1 + qpow(-4) * e1 * em1) + e0 * e0 - rho * one),
        ("r-1", -q2 * em1 * e0 + e0 * em1 - lam * em1),
        ("r0", (1 + q2) * (em1 * e1 - e1 * em1) + (1 - q2) * e0 * e0 - lam * e0),
        ("r1", e1 * e0 - q2 * e0 * e1 - lam * e1),
    ]
    failures = [(name, str(r)) for name, r in rels if not r.is_zero()]
    return {"pass": not failures, "failures": failures}


def basis_independence(c: CParam, degree):
    """Rank certificate: embedded normal-form monomials are linearly independent."""
    alg = PodlesAlgebra(c)
    monos = alg.normal_monomials(degree)
    images = [alg.embed(alg.element({m: ONE})) for m in monos]
    cols = sorted({w for img in images for w in img.terms}, key=lambda w: (len(w), w))
    colidx = {w: i for i, w in enumerate(cols)}
    rows = []
    witness = None
    r = 0
    for mono, img in zip(monos, images):
        row = [ZERO] * len(cols)
        for w, v in img.terms.items():
            row[colidx[w]] = v
        rows.append(row)
        r2 = linalg.rank(rows)
        if r2 == r:
            witness = mono
            break
        r = r2
    return {"independent": witness is None, "rank": r, "count": len(monos),
            "witness": witness, "degree": degree}


# ---------------------------------------------------------------------------
# the indecomposable representations mu_n at c = c(n)

class MuRep:
    """The n-dimensional representation with invertible A at c = c(n)."""

    __slots__ = ("n", "matA", "matEm1", "matE1")

    def __init__(self, n, matA, matEm1, matE1):
        self.n = n
        self.matA = matA
        self.matEm1 = matEm1
        self.matE1 = matE1

    def matrices(self):
        return {"A": self.matA, "em1": self.matEm1, "e1": self.matE1}


def build_mu_n(n):
    """Construct mu_n: A diagonal with spectrum q^(n-2k)/(q^n+q^-n), k=1..n;
    e_1 the unit subdiagonal shift, e_{-1} the weighted superdiagonal shift."""
    if n < 1:
        raise ValueError("n must be positive")
    denom = qpow(2 * n) + qpow(-2 * n)
    cn = -denom.inv() * denom.inv()
    eig = [qpow(2 * (n - 2 * (k + 1))) / denom for k in range(n)]
    matA = linalg.zeros(n, n)
    for k in range(n):
        matA[k][k] = eig[k]
    matE1 = linalg.zeros(n, n)
    for k in range(n - 1):
        matE1[k + 1][k] = ONE
    matEm1 = linalg.zeros(n, n)
    for k in range(n - 1):
        matEm1[k][k + 1] = eig[k] - eig[k] * eig[k] + cn
    return MuRep(n, matA, matEm1, matE1)


def mu_rep_report(n):
    rep = build_mu_n(n)
    cn = -((qpow(2 * n) + qpow(-2 * n)) ** 2).inv()
    A, em1, e1 = rep.matA, rep.matEm1, rep.matE1
    eye = linalg.identity(n)
    q2, q4 = Q * Q, qpow(8)
    AA = linalg.matmul(A, A)
    checks = {
        "e-e": linalg.matsub(linalg.matmul(em1, e1),
                             linalg.matadd(linalg.matsub(A, AA), linalg.scalmul(cn, eye))),
        "ee-": linalg.matsub(linalg.matmul(e1, em1),
                             linalg.matadd(linalg.matsub(linalg.scalmul(q2, A),
                                                         linalg.scalmul(q4, AA)),
                                           linalg.scalmul(cn, eye))),
        "eA": linalg.matsub(linalg.matmul(e1, A), linalg.scalmul(q2, linalg.matmul(A, e1))),
        "e-A": linalg.matsub(linalg.matmul(em1, A),
                             linalg.scalmul(qpow(-4), linalg.matmul(A, em1))),
    }
    failures = [name for name, resid in checks.items() if not linalg.is_zero_matrix(resid)]
    # nilpotency and invertibility
    pn = eye
    for _ in range(n):
        pn = linalg.matmul(pn, e1)
    nilp_e1 = linalg.is_zero_matrix(pn)
    pn = eye
    for _ in range(n):
        pn = linalg.matmul(pn, em1)
    nilp_em1 = linalg.is_zero_matrix(pn)
    a_invertible = all(A[k][k] for k in range(n))
    ok = not failures and nilp_e1 and nilp_em1 and a_invertible
    return {"pass": ok, "relation_failures": failures, "n": n,
            "e1_nilpotent": nilp_e1, "em1_nilpotent": nilp_em1,
            "A_invertible": a_invertible, "rep": rep}


def mu_coeff_rank(n, degree):
    """Rank of the matrix-coefficient functionals of mu_n on monomials up to degree."""
    rep = build_mu_n(n)
    letters = {"A": rep.matA, "m": rep.matEm1, "p": rep.matE1}
    monos = normal_words(degree)
    rows = [[] for _ in range(n * n)]
    for mono in monos:
        mat = linalg.identity(n)
        for g in mono:
            mat = linalg.matmul(mat, letters[g])
        for i in range(n):
            for j in range(n):
                rows[n * i + j].append(mat[i][j])
    return {"rank": linalg.rank(rows), "functionals": n * n, "monomials": len(monos)}


# ---------------------------------------------------------------------------
# localization check: the sphere maps into the opposite Borel algebra

class BorelOp:
    """U_q(b^-)^op on the basis F^a K^b (a >= 0, b in Z) with the reversed product."""

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def mono(a, b, coeff=ONE):
        return BorelOp({(a, b): coeff} if coeff else None)

    def __add__(self, other):
        if isinstance(other, (int, RatFunc)):
            other = BorelOp.mono(0, 0, RatFunc.coerce(other))
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, ZERO) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        return BorelOp(out)

    __radd__ = __add__

    def __neg__(self):
        return BorelOp({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, RatFunc)):
            other = BorelOp.mono(0, 0, RatFunc.coerce(other))
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, RatFunc)):
            c = RatFunc.coerce(other)
            return BorelOp({k: v * c for k, v in self.terms.items() if v * c})
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                # opposite product: F^a1 K^b1 then F^a2 K^b2 multiplies as
                # the usual product in reversed order
                k = (a1 + a2, b1 + b2)
                v = out.get(k, ZERO) + c1 * c2 * qpow(-4 * a1 * b2)
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return BorelOp(out)

    def __rmul__(self, other):
        c = RatFunc.coerce(other)
        if c is None:
            return NotImplemented
        return self * c

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, BorelOp) and self.terms == other.terms

    def counit(self):
        """Evaluation at F -> 0, K -> 1."""
        out = ZERO
        for (a, b), v in self.terms.items():
            if a == 0:
                out = out + v
        return out

    def __repr__(self):
        return "BorelOp(%r)" % self.terms


def verify_localization(c: CParam):
    """Check the localization images satisfy all four sphere relations."""
    if c.is_zero() or c.is_infinity():
        raise ValueError("the localization check needs generic c")
    s = c.s
    cv = c.c_value()
    K = BorelOp.mono(0, 1)
    Kinv = BorelOp.mono(0, -1)
    F = BorelOp.mono(1, 0)
    em1 = s * Kinv
    e0 = s * (qpow(6) - qpow(-2)) * F + BorelOp.mono(0, 0)
    e1 = (-s * QHAT * QHAT) * (K * F * F) - QHAT * (K * F) + s * K
    Aim = (BorelOp.mono(0, 0) - e0) * (Q * Q + 1).inv()
    q2, q4 = Q * Q, qpow(8)
    one = BorelOp.mono(0, 0)
    rels = {
        "e-e": em1 * e1 - (Aim - Aim * Aim + cv * one),
        "ee-": e1 * em1 - (q2 * Aim - q4 * Aim * Aim + cv * one),
        "eA": e1 * Aim - q2 * (Aim * e1),
        "e-A": em1 * Aim - qpow(-4) * (Aim * em1),
    }
    failures = [(name, repr(r)) for name, r in rels.items() if not r.is_zero()]
    counits = {"em1": em1.counit(), "e0": e0.counit(), "e1": e1.counit()}
    counit_ok = (counits["em1"] == s and counits["e0"] == ONE and counits["e1"] == s)
    return {"pass": not failures and counit_ok, "failures": failures,
            "counit_ok": counit_ok}
