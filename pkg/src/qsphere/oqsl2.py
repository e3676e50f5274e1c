"""The Hopf algebra O_q(SL2).

Generators a, b, c, d are the matrix coefficients u^1_1, u^1_2, u^2_1,
u^2_2 of the vector corepresentation.  The commutation relations are the
ones compatible with the distinguished dual functionals (E, F, K = f_{q^-1},
f_lambda, g) and their coproducts; with K(a) = q^-1 this forces

    ab = q ba,  ac = q ca,  bd = q db,  cd = q dc,  bc = cb,
    ad - q bc = 1 = da - q^-1 bc.

Every element is kept in PBW normal form with basis
{b^i c^j a^k} u {b^i c^j d^l, l >= 1}.
"""

import itertools

from .scalars import (ZERO, ONE, Q, QINV, QHAT, RatFunc, qpow,
                      RAT_RING, QuadRing, ExprParser)

GENS = ("a", "b", "c", "d")

# rewriting rules: 2-letter pattern -> list of (coefficient, replacement word)
RULES = {
    ("a", "b"): [(Q, ("b", "a"))],
    ("a", "c"): [(Q, ("c", "a"))],
    ("d", "b"): [(QINV, ("b", "d"))],
    ("d", "c"): [(QINV, ("c", "d"))],
    ("c", "b"): [(ONE, ("b", "c"))],
    ("a", "d"): [(ONE, ()), (Q, ("b", "c"))],
    ("d", "a"): [(ONE, ()), (QINV, ("b", "c"))],
}

_NF_CACHE = {}


def reduce_word(word):
    """Normal form of a free word as a dict {PBW monomial: coefficient}."""
    cached = _NF_CACHE.get(word)
    if cached is not None:
        return cached
    for i in range(len(word) - 1):
        rule = RULES.get((word[i], word[i + 1]))
        if rule is None:
            continue
        acc = {}
        for coeff, rep in rule:
            for m, c in reduce_word(word[:i] + rep + word[i + 2:]).items():
                v = acc.get(m, ZERO) + coeff * c
                if v:
                    acc[m] = v
                elif m in acc:
                    del acc[m]
        _NF_CACHE[word] = acc
        return acc
    out = {word: ONE}
    _NF_CACHE[word] = out
    return out


def word_counit(word):
    return ONE if all(g in ("a", "d") for g in word) else ZERO


class SL2Element:
    """Linear combination of PBW monomials with RatFunc coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @staticmethod
    def from_word(word, coeff=ONE):
        out = {}
        for m, c in reduce_word(tuple(word)).items():
            v = coeff * c
            if v:
                out[m] = v
        return SL2Element(out)

    @staticmethod
    def unit(coeff=ONE):
        return SL2Element({(): coeff}) if coeff else SL2Element()

    @staticmethod
    def gen(name):
        return SL2Element({(name,): ONE})

    @staticmethod
    def _scalar(x):
        if isinstance(x, SL2Element):
            return None
        c = RatFunc.coerce(x)
        return c

    def __add__(self, other):
        c = SL2Element._scalar(other)
        if c is not None:
            other = SL2Element.unit(c)
        elif not isinstance(other, SL2Element):
            return NotImplemented
        out = dict(self.terms)
        for m, v in other.terms.items():
            w = out.get(m, ZERO) + v
            if w:
                out[m] = w
            elif m in out:
                del out[m]
        return SL2Element(out)

    __radd__ = __add__

    def __neg__(self):
        return SL2Element({m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, SL2Element) else -RatFunc.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = SL2Element._scalar(other)
        if c is not None:
            if not c:
                return SL2Element()
            return SL2Element({m: v * c for m, v in self.terms.items()})
        if not isinstance(other, SL2Element):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for m, c in reduce_word(m1 + m2).items():
                    v = out.get(m, ZERO) + c12 * c
                    if v:
                        out[m] = v
                    elif m in out:
                        del out[m]
        return SL2Element(out)

    def __rmul__(self, other):
        c = SL2Element._scalar(other)
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
            raise ValueError("monomial powers must be nonnegative integers")
        out = SL2Element.unit()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        c = SL2Element._scalar(other)
        if c is not None:
            other = SL2Element.unit(c)
        elif not isinstance(other, SL2Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def counit(self):
        out = ZERO
        for m, c in self.terms.items():
            if word_counit(m):
                out = out + c
        return out

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda w: (len(w), w)):
            parts.append(_term_str(self.terms[m], m))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _word_str(word):
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        out.append(word[i] if j - i == 1 else "%s^%d" % (word[i], j - i))
        i = j
    return "*".join(out)

def _term_str(coeff, word):
    ws = _word_str(word)
    if not word:
        return str(coeff)
    cs = str(coeff)
    if cs == "1":
        return ws
    if cs == "-1":
        return "-" + ws
    if any(op in cs[1:] for op in "+-/") or "*" in cs:
        cs = "(" + cs + ")"
    return cs + "*" + ws


A_ = SL2Element.gen("a")
B_ = SL2Element.gen("b")
C_ = SL2Element.gen("c")
D_ = SL2Element.gen("d")
UNIT = SL2Element.unit()


def parse_sl2(text):
    symbols = {"a": A_, "b": B_, "c": C_, "d": D_}
    v = ExprParser(text, symbols, UNIT).parse()
    if isinstance(v, RatFunc):
        v = SL2Element.unit(v)
    return v


# ---------------------------------------------------------------------------
# coalgebra structure

_GEN_COPROD = {
    "a": [("a", "a"), ("b", "c")],
    "b": [("a", "b"), ("b", "d")],
    "c": [("c", "a"), ("d", "c")],
    "d": [("c", "b"), ("d", "d")],
}

_COPROD_CACHE = {}


def word_coproduct(word):
    """Coproduct of a PBW monomial as {(mono, mono): coeff}, legs normal-formed."""
    cached = _COPROD_CACHE.get(word)
    if cached is not None:
        return cached
    pairs = {((), ()): ONE}
    for g in word:
        nxt = {}
        for (u, v), c in pairs.items():
            for x, y in _GEN_COPROD[g]:
                key = (u + (x,), v + (y,))
                nxt[key] = nxt.get(key, ZERO) + c
        pairs = nxt
    out = {}
    for (u, v), c in pairs.items():
        for mu, cu in reduce_word(u).items():
            for mv, cv in reduce_word(v).items():
                k = (mu, mv)
                val = out.get(k, ZERO) + c * cu * cv
                if val:
                    out[k] = val
                elif k in out:
                    del out[k]
    _COPROD_CACHE[word] = out
    return out


def coproduct(x):
    """Coproduct of an element as {(mono, mono): coeff}."""
    out = {}
    for m, c in x.terms.items():
        for k, v in word_coproduct(m).items():
            val = out.get(k, ZERO) + c * v
            if val:
                out[k] = val
            elif k in out:
                del out[k]
    return out


_S_LETTER = {"a": ("d", None), "d": ("a", None),
             "b": ("b", "minus_qinv"), "c": ("c", "minus_q")}
_SINV_LETTER = {"a": ("d", None), "d": ("a", None),
                "b": ("b", "minus_q"), "c": ("c", "minus_qinv")}


def antipode(x, inverse=False):
    """The antipode S (anti-algebra map), or its inverse."""
    table = _SINV_LETTER if inverse else _S_LETTER
    out = SL2Element()
    for m, c in x.terms.items():
        word = []
        coeff = c
        for g in reversed(m):
            tgt, sc = table[g]
            word.append(tgt)
            if sc == "minus_q":
                coeff = -coeff * Q
            elif sc == "minus_qinv":
                coeff = -coeff * QINV
        out = out + SL2Element.from_word(tuple(word), coeff)
    return out


# ---------------------------------------------------------------------------
# the spin-1 corepresentation matrix pi

def pi_coeff(i, j):
    """Matrix coefficient pi^i_j of the 3-dimensional corepresentation, i, j in {-1, 0, 1}."""
    table = {
        (-1, -1): [(ONE, "dd")],
        (-1, 0): [(-(Q * Q + 1), "dc")],
        (-1, 1): [(-Q, "cc")],
        (0, -1): [(-qpow(-2), "bd")],
        (0, 0): [(ONE, ""), (Q * QINV * (Q + QINV), "bc")],
        (0, 1): [(ONE, "ac")],
        (1, -1): [(-qpow(-2), "bb")],
        (1, 0): [(Q + QINV, "ba")],
        (1, 1): [(ONE, "aa")],
    }
    out = SL2Element()
    for coeff, word in table[(i, j)]:
        out = out + SL2Element.from_word(tuple(word), coeff)
    return out


# ---------------------------------------------------------------------------
# dual functionals and their evaluation
#
# Letters: ('f', lam) is the character f_lam; ('fs',) is f_mu evaluated in a
# quadratic extension with mu^2 given by the ring; ('g',), ('E',), ('F',)
# and ('K', n) = f_{q^-n} are as in the defining tables.  A word of letters
# is evaluated on a monomial by repeatedly splitting off the first generator;
# the value of a word on a single generator is an entry of the product of
# the letters' 2x2 value matrices.

_LETTER_LEGS = {
    "g": [(("g",), None), (None, ("g",))],
    "E": [(("E",), ("K", 1)), (None, ("E",))],
    "F": [(("F",), None), (("K", -1), ("F",))],
}


def _letter_legs(letter):
    if letter[0] in ("f", "fs"):
        return [(letter, letter)]
    if letter[0] == "K":
        return [(letter, letter)]
    return _LETTER_LEGS[letter[0]]


class FunctionalWord:
    """The functional f_lambda g^m E^l, optionally extended by extra letters."""

    __slots__ = ("lam", "m", "l", "extra")

    def __init__(self, lam, m=0, l=0, extra=()):
        lam = RatFunc.coerce(lam)
        if lam is None or lam.is_zero():
            raise ValueError("f_lambda needs a nonzero lambda")
        self.lam = lam
        self.m = m
        self.l = l
        self.extra = tuple(extra)

    def letters(self):
        return ((("f", self.lam),) + (("g",),) * self.m
                + (("E",),) * self.l + self.extra)


class Evaluator:
    """Evaluates letter words on SL2 elements over a scalar ring."""

    def __init__(self, ring=RAT_RING):
        self.ring = ring
        self._memo = {}
        self._matmemo = {}

    def letter_matrix(self, letter):
        m = self._matmemo.get(letter)
        if m is not None:
            return m
        ring = self.ring
        z, o = ring.zero, ring.one
        kind = letter[0]
        if kind == "f":
            m = ((ring.embed(letter[1]), z), (z, ring.embed(letter[1].inv())))
        elif kind == "fs":
            mu = ring.mu
            m = ((mu, z), (z, mu.inv()))
        elif kind == "g":
            m = ((o, z), (z, ring.embed(-ONE)))
        elif kind == "E":
            m = ((z, z), (o, z))
        elif kind == "F":
            m = ((z, o), (z, z))
        elif kind == "K":
            m = ((ring.embed(qpow(-2 * letter[1])), z),
                 (z, ring.embed(qpow(2 * letter[1]))))
        else:
            raise ValueError("unknown letter %r" % (letter,))
        self._matmemo[letter] = m
        return m

    _GEN_POS = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}

    def word_on_gen(self, word, gen):
        i, j = self._GEN_POS[gen]
        if not word:
            return self.ring.one if i == j else self.ring.zero
        # entry (i, j) of the product of the letter matrices
        row = self.letter_matrix(word[0])[i]
        for letter in word[1:]:
            m = self.letter_matrix(letter)
            row = (row[0] * m[0][0] + row[1] * m[1][0],
                   row[0] * m[0][1] + row[1] * m[1][1])
        return row[j]

    def word_unit_value(self, word):
        for letter in word:
            if letter[0] in ("g", "E", "F"):
                return self.ring.zero
        return self.ring.one

    def eval_word(self, word, mono):
        key = (word, mono)
        v = self._memo.get(key)
        if v is not None:
            return v
        if not mono:
            v = self.word_unit_value(word)
        else:
            g0, rest = mono[0], mono[1:]
            total = self.ring.zero
            legs = [_letter_legs(letter) for letter in word]
            for choice in itertools.product(*legs):
                aword = tuple(l1 for l1, _ in choice if l1 is not None)
                first = self.word_on_gen(aword, g0)
                if first.is_zero():
                    continue
                bword = tuple(l2 for _, l2 in choice if l2 is not None)
                total = total + first * self.eval_word(bword, rest)
            v = total
        self._memo[key] = v
        return v

    def eval(self, word, x):
        total = self.ring.zero
        for mono, coeff in x.terms.items():
            total = total + self.ring.embed(coeff) * self.eval_word(word, mono)
        return total


def eval_functional(fword, x):
    """Value of a FunctionalWord on an SL2 element, exactly in Q(t)."""
    return Evaluator().eval(fword.letters(), x)


def eval_letters(letters, x, ring=RAT_RING):
    return Evaluator(ring).eval(tuple(letters), x)


# ---------------------------------------------------------------------------
# the standard universal r-form
#
# Bimultiplicativity conventions: r(xy, z) = r(x, z(1)) r(y, z(2)) and
# r(x, yz) = r(x(1), z) r(x(2), y).  Values on generator pairs carry the
# overall factor q^(-1/2); in particular r(-, c) vanishes identically.

_R_GEN = {
    ("a", "a"): qpow(1),          # q^(-1/2) * q
    ("d", "d"): qpow(1),
    ("a", "d"): qpow(-1),
    ("d", "a"): qpow(-1),
    ("c", "b"): qpow(-1) * QHAT,
}

_RFORM_CACHE = {}


def rform_words(w1, w2):
    """The r-form on a pair of free words (well defined on the quotient)."""
    key = (w1, w2)
    v = _RFORM_CACHE.get(key)
    if v is not None:
        return v
    if not w1:
        v = word_counit(w2)
    elif not w2:
        v = word_counit(w1)
    elif len(w1) == 1:
        if len(w2) == 1:
            v = _R_GEN.get((w1[0], w2[0]), ZERO)
        else:
            h, rest = w2[0], w2[1:]
            v = ZERO
            for x, y in _GEN_COPROD[w1[0]]:
                left = rform_words((x,), rest)
                if left:
                    v = v + left * rform_words((y,), (h,))
    else:
        g, w = w1[:1], w1[1:]
        v = ZERO
        for choice in itertools.product(*[_GEN_COPROD[letter] for letter in w2]):
            z1 = tuple(x for x, _ in choice)
            z2 = tuple(y for _, y in choice)
            left = rform_words(g, z1)
            if left:
                v = v + left * rform_words(w, z2)
    _RFORM_CACHE[key] = v
    return v


def rform(x, y):
    """Bilinear extension of the universal r-form to elements."""
    total = ZERO
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            v = rform_words(m1, m2)
            if v:
                total = total + c1 * c2 * v
    return total


# ---------------------------------------------------------------------------
# structural checks (used by the acceptance suite)

def all_words(max_len):
    for n in range(max_len + 1):
        yield from itertools.product(GENS, repeat=n)


def confluence_report(max_len=3):
    """Reduce every short word by every applicable first rewrite; all must agree."""
    checked = 0
    for word in all_words(max_len):
        results = []
        for i in range(len(word) - 1):
            rule = RULES.get((word[i], word[i + 1]))
            if rule is None:
                continue
            acc = {}
            for coeff, rep in rule:
                for m, c in reduce_word(word[:i] + rep + word[i + 2:]).items():
                    v = acc.get(m, ZERO) + coeff * c
                    if v:
                        acc[m] = v
                    elif m in acc:
                        del acc[m]
            results.append(acc)
        if results:
            base = reduce_word(word)
            for r in results:
                if r != base:
                    return {"confluent": False, "witness": word, "checked": checked}
            checked += 1
    return {"confluent": True, "witness": None, "checked": checked}


def hopf_axioms_report(max_len=3):
    """Counit and antipode axioms on all PBW monomials up to a degree bound."""
    failures = []
    monos = set()
    for word in all_words(max_len):
        monos.update(reduce_word(word).keys())
    for mono in sorted(monos, key=lambda w: (len(w), w)):
        x = SL2Element({mono: ONE})
        cop = coproduct(x)
        left = SL2Element()
        sx = SL2Element()
        for (m1, m2), c in cop.items():
            left = left + SL2Element({m2: c * word_counit(m1)})
            sx = sx + antipode(SL2Element({m1: c})) * SL2Element({m2: ONE})
        if left != x:
            failures.append(("counit", mono))
        if sx != SL2Element.unit(x.counit()):
            failures.append(("antipode", mono))
    return {"pass": not failures, "failures": failures, "monomials": len(monos)}


def rform_well_defined_report():
    """r vanishes against each defining relation, in both slots, vs degree <= 2 words."""
    relations = []
    for (x, y), rule in RULES.items():
        lhs = ((x, y),)
        rhs = tuple((c, w) for c, w in rule)
        relations.append((lhs, rhs))
    words = list(all_words(2))
    failures = []
    for lhs, rhs in relations:
        for w in words:
            lv = rform_words(w, lhs[0])
            rv = ZERO
            for c, rep in rhs:
                rv = rv + c * rform_words(w, rep)
            if lv != rv:
                failures.append(("second-slot", lhs[0], w))
            lv = rform_words(lhs[0], w)
            rv = ZERO
            for c, rep in rhs:
                rv = rv + c * rform_words(rep, w)
            if lv != rv:
                failures.append(("first-slot", lhs[0], w))
    return {"pass": not failures, "failures": failures}
