"""Exact scalar arithmetic for the quantum sphere engine.

The ground field is Q(t) with q = t**2, so that half-integer powers of q
(q^(1/2), q^(n/2) for n odd) are honest field elements.  Working over a
rational function field keeps every constant exact and makes "q is not a
root of unity" structural rather than a runtime check.

A RatFunc is a reduced fraction of integer-coefficient polynomials in t.
The canonical form (coprime numerator/denominator, coprime integer
contents, positive leading denominator coefficient) is unique, so equal
field elements compare and hash equal and may be used as dict keys.
"""

import math
from fractions import Fraction

# ---------------------------------------------------------------------------
# integer polynomials in t, represented as tuples of coefficients
# (low degree first, no trailing zeros; () is the zero polynomial)

def _ptrim(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pscale(a, k):
    if not k:
        return ()
    return tuple(x * k for x in a)


def _pcontent(a):
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            return 1
    return g if g else 0


def _pprim(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = _pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _pdiv_exact(a, b):
    """Quotient of an exact division a = q*b (raises if inexact)."""
    if not a:
        return ()
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if r[i]:
            c, rem = divmod(r[i], lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            q[i - db] = c
            for j, y in enumerate(b):
                r[i - db + j] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(q)


def _pseudo_rem(a, b):
    """Pseudo-remainder: some lc(b)^k * a reduced mod b (integer arithmetic)."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while True:
        r = _ptrim(r)
        if len(r) - 1 < db or not r:
            return tuple(r)
        lr = r[-1]
        dr = len(r) - 1
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[j + dr - db] -= lr * y
        r = list(_ptrim(r))


def _nterms(a):
    return sum(1 for x in a if x)


def _ptrail(a):
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _pgcd(a, b):
    """Primitive gcd (positive leading coefficient) via a primitive PRS."""
    a, b = _pprim(a), _pprim(b)
    if not a:
        return b
    if not b:
        return a
    if _nterms(a) == 1 or _nterms(b) == 1:
        k = min(_ptrail(a), _ptrail(b))
        return (0,) * k + (1,)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _pprim(r)
    return a


# ---------------------------------------------------------------------------
# the field Q(t)

class RatFunc:
    """An element of Q(t), stored as a canonical reduced fraction."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _reduced=False):
        num = _ptrim(num)
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(t)")
        if not _reduced:
            if not num:
                den = (1,)
            else:
                g = _pgcd(num, den)
                if g != (1,):
                    num = _pdiv_exact(num, g)
                    den = _pdiv_exact(den, g)
                cg = math.gcd(_pcontent(num), _pcontent(den))
                if den[-1] < 0:
                    cg = -cg
                if cg != 1:
                    num = tuple(x // cg for x in num)
                    den = tuple(x // cg for x in den)
        self.num = num
        self.den = den
        self._hash = hash((num, den))

    # -- construction helpers

    @staticmethod
    def from_int(n):
        return RatFunc((n,), (1,))

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return RatFunc((fr.numerator,), (fr.denominator,))

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc.from_int(x)
        if isinstance(x, Fraction):
            return RatFunc.from_fraction(x)
        return None

    # -- predicates

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    # -- arithmetic

    def __add__(self, other):
        o = RatFunc.coerce(other)
        if o is None:
            return NotImplemented
        if not self.num:
            return o
        if not o.num:
            return self
        if self.den == o.den:
            return RatFunc(_padd(self.num, o.num), self.den)
        return RatFunc(_padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                       _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        o = RatFunc.coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_psub(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                       _pmul(self.den, o.den))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = RatFunc.coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        if self.is_one():
            return o
        if o.is_one():
            return self
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise ZeroDivisionError("inverse of 0 in Q(t)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = RatFunc.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = RatFunc.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = RatFunc.coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return self._hash

    def sort_key(self):
        return (len(self.den), self.den, len(self.num), self.num)

    # -- specialization (optional fast path; exactness is the default)

    def specialize_t(self, tval):
        """Evaluate at an exact rational t-value with q = t**2 not in {0, 1}."""
        tval = Fraction(tval)
        if tval * tval in (Fraction(0), Fraction(1)):
            raise ValueError("specialized q must avoid 0 and 1 in absolute value")
        num = sum(c * tval ** i for i, c in enumerate(self.num))
        den = sum(c * tval ** i for i, c in enumerate(self.den))
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at t=%s" % tval)
        return Fraction(num, den)

    # -- printing (q-syntax; t**2 prints as q, odd t-powers as q^(k/2))

    def __str__(self):
        num, den = self.num, self.den
        if len([c for c in den if c]) == 1:
            # denominator is a single monomial: print as a Laurent combination
            m = len(den) - 1
            dc = den[-1]
            terms = []
            for i in range(len(num) - 1, -1, -1):
                if num[i]:
                    terms.append((Fraction(num[i], dc), i - m))
            return _terms_qstr(terms)
        ns = _poly_qstr(num)
        ds = _poly_qstr(den)
        if len([c for c in num if c]) > 1:
            ns = "(" + ns + ")"
        return ns + "/(" + ds + ")"

    def __repr__(self):
        return "RatFunc(%s)" % self


def _qpow_str(k2):
    if k2 == 2:
        return "q"
    if k2 % 2 == 0:
        return "q^%d" % (k2 // 2)
    return "q^(%d/2)" % k2


def _terms_qstr(terms):
    """Render a list of (Fraction coeff, t-power) pairs in q-syntax."""
    if not terms:
        return "0"
    parts = []
    for idx, (c, k2) in enumerate(terms):
        neg = c < 0
        c = -c if neg else c
        if k2 == 0:
            body = str(c)
        elif c == 1:
            body = _qpow_str(k2)
        else:
            body = "%s*%s" % (c, _qpow_str(k2))
        if idx == 0:
            parts.append("-" + body if neg else body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def _poly_qstr(p):
    terms = [(Fraction(p[i]), i) for i in range(len(p) - 1, -1, -1) if p[i]]
    return _terms_qstr(terms)


ZERO = RatFunc((), (1,))
ONE = RatFunc((1,), (1,))


def qpow(k2):
    """t**k2 as a field element, i.e. q^(k2/2); k2 may be negative."""
    if k2 >= 0:
        return RatFunc((0,) * k2 + (1,), (1,), _reduced=True)
    return RatFunc((1,), (0,) * (-k2) + (1,), _reduced=True)


Q = qpow(2)
QINV = qpow(-2)
QHALF = qpow(1)
QHAT = Q - QINV          # q - q^-1


def qint(l):
    """Quantum integer [l] = (q^l - q^-l)/(q - q^-1); [-l] = -[l]."""
    return (qpow(2 * l) - qpow(-2 * l)) / QHAT


def qfact(l):
    out = ONE
    for i in range(2, l + 1):
        out = out * qint(i)
    return out


def qbinom(l, r):
    """Gaussian binomial [l; r] for 0 <= r <= l."""
    if r < 0 or r > l:
        raise ValueError("qbinom requires 0 <= r <= l, got l=%d r=%d" % (l, r))
    out = ONE
    for i in range(1, r + 1):
        out = out * qint(l - r + i) / qint(i)
    return out


def cn_value(n2):
    """The exceptional parameter c(n) = -1/(q^n + q^-n)^2 for n = n2/2 >= 0."""
    if n2 < 0:
        raise ValueError("n2 must be nonnegative")
    s = qpow(2 * n2)                      # q^(2n) = t^(2*n2)
    return -qpow(2 * n2) / ((s + 1) * (s + 1))


# ---------------------------------------------------------------------------
# the deformation parameter c

INFINITY = "inf"


class CParam:
    """The sphere parameter c, supplied through a square root s when finite.

    Storing s = c^(1/2) keeps alpha = -1/(s(q-q^-1)) field-exact; the value
    c = s**2 is derived.  The variants are Generic(s), Infinity and Zero.
    """

    __slots__ = ("variant", "s")

    def __init__(self, variant, s=None):
        if variant not in ("generic", "infinity", "zero"):
            raise ValueError("unknown CParam variant %r" % variant)
        if variant == "generic":
            s = RatFunc.coerce(s)
            if s is None or s.is_zero():
                raise ValueError("generic c needs a nonzero square root s")
        else:
            s = None
        self.variant = variant
        self.s = s

    @staticmethod
    def generic(s):
        return CParam("generic", s)

    @staticmethod
    def infinity():
        return CParam("infinity")

    @staticmethod
    def zero():
        return CParam("zero")

    def is_infinity(self):
        return self.variant == "infinity"

    def is_zero(self):
        return self.variant == "zero"

    def c_value(self):
        """c as a field element; None encodes c = infinity."""
        if self.variant == "generic":
            return self.s * self.s
        if self.variant == "zero":
            return ZERO
        return None

    def key(self):
        if self.variant == "generic":
            return ("generic", self.s.num, self.s.den)
        return (self.variant,)

    def __eq__(self, other):
        return isinstance(other, CParam) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __str__(self):
        if self.variant == "generic":
            return "c=s^2 with s=%s" % self.s
        return "c=0" if self.variant == "zero" else "c=inf"

    def __repr__(self):
        return "CParam(%s)" % self


class XcData:
    """Coefficients of the twisted primitive element alpha(K^-1 - 1) + beta K^-1 E + gamma F."""

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, c: CParam):
        if c.is_zero():
            raise ValueError("c = 0 has no twisted primitive element of this shape")
        self.beta = Q
        self.gamma = ONE
        if c.is_infinity():
            self.alpha = ZERO
        else:
            self.alpha = -ONE / (c.s * QHAT)


def check_admissible(c: CParam, n2_max=64):
    """Report whether c avoids 0 and the exceptional values c(n), n = n2/2 <= n2_max/2.

    Membership in J2 \\ {0} cannot be tested exhaustively, so the scan is
    bounded; the bound is recorded in the report.
    """
    report = {"bound_n2": n2_max, "is_zero": c.is_zero(), "witness_n2": None}
    if c.is_infinity():
        report["admissible"] = True
        return report
    if c.is_zero():
        report["admissible"] = False
        return report
    cv = c.c_value()
    for n2 in range(0, n2_max + 1):
        if cv == cn_value(n2):
            report["witness_n2"] = n2
            report["admissible"] = False
            return report
    report["admissible"] = True
    return report


def require_classifiable(c: CParam, n2_max=64):
    rep = check_admissible(c, n2_max)
    if not rep["admissible"]:
        if rep["is_zero"]:
            raise ValueError("c = 0 is excluded from classification")
        raise ValueError("c = c(n) with n2 = %d is excluded from classification"
                         % rep["witness_n2"])
    return rep


# ---------------------------------------------------------------------------
# quadratic extension Q(t)[mu]/(mu^2 - lam), used to evaluate f_mu with
# mu^2 = lam without choosing a square root

class Quad:
    """Element re + im*mu of the quadratic extension with mu^2 = lam."""

    __slots__ = ("re", "im", "lam")

    def __init__(self, re, im, lam):
        self.re = re
        self.im = im
        self.lam = lam

    def _check(self, other):
        if self.lam != other.lam:
            raise ValueError("mixing quadratic extensions with different lam")

    def __add__(self, other):
        self._check(other)
        return Quad(self.re + other.re, self.im + other.im, self.lam)

    def __sub__(self, other):
        self._check(other)
        return Quad(self.re - other.re, self.im - other.im, self.lam)

    def __neg__(self):
        return Quad(-self.re, -self.im, self.lam)

    def __mul__(self, other):
        self._check(other)
        return Quad(self.re * other.re + self.im * other.im * self.lam,
                    self.re * other.im + self.im * other.re, self.lam)

    def inv(self):
        d = self.re * self.re - self.im * self.im * self.lam
        if d.is_zero():
            raise ZeroDivisionError("non-invertible quadratic extension element")
        return Quad(self.re / d, -self.im / d, self.lam)

    def conj(self):
        return Quad(self.re, -self.im, self.lam)

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def __eq__(self, other):
        return (isinstance(other, Quad) and self.lam == other.lam
                and self.re == other.re and self.im == other.im)

    def __repr__(self):
        return "Quad(%s, %s; mu^2=%s)" % (self.re, self.im, self.lam)


class QuadRing:
    """Scalar-ring adapter for Quad elements over a fixed lam."""

    def __init__(self, lam):
        self.lam = lam
        self.zero = Quad(ZERO, ZERO, lam)
        self.one = Quad(ONE, ZERO, lam)
        self.mu = Quad(ZERO, ONE, lam)

    def embed(self, rf):
        return Quad(rf, ZERO, self.lam)


class RatRing:
    """Scalar-ring adapter for plain RatFunc arithmetic."""

    zero = ZERO
    one = ONE

    @staticmethod
    def embed(rf):
        return rf


RAT_RING = RatRing()


# ---------------------------------------------------------------------------
# parsing of q-syntax expressions (shared by the algebra text formats)

_OPS = set("+-*/^()")


def _tokenize(s):
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(("int", int(s[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(s) and (s[j].isalnum() or s[j] == "_"):
                j += 1
            toks.append(("name", s[i:j]))
            i = j
        elif ch in _OPS:
            toks.append((ch, ch))
            i += 1
        else:
            raise ValueError("unexpected character %r in expression" % ch)
    toks.append(("end", None))
    return toks


class ExprParser:
    """Recursive-descent parser for scalar and algebra expressions.

    `symbols` maps generator names to algebra elements; `one` is the algebra
    unit.  The literal q (and q raised to half-integer powers) is embedded
    through `one`, so one parser serves Q(t), O_q(SL2) and the sphere.
    """

    def __init__(self, text, symbols=None, one=ONE):
        self.toks = _tokenize(text)
        self.pos = 0
        self.symbols = symbols or {}
        self.one = one

    def peek(self):
        return self.toks[self.pos][0]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ValueError("expected %r, got %r" % (kind, t[1]))
        return t

    def parse(self):
        v = self.expr()
        if self.peek() != "end":
            raise ValueError("trailing input at token %r" % (self.toks[self.pos][1],))
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()[0]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while True:
            k = self.peek()
            if k in ("*", "/"):
                op = self.next()[0]
                w = self.unary()
                if op == "*":
                    v = v * w
                else:
                    v = self._divide(v, w)
            elif k in ("int", "name", "("):
                v = v * self.unary()
            else:
                return v

    @staticmethod
    def _divide(v, w):
        if isinstance(w, RatFunc):
            if isinstance(v, RatFunc):
                return v / w
            return v * w.inv()
        raise ValueError("division only by scalars")

    def unary(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next()[0] == "-":
                sign = -sign
        v = self.power()
        return v if sign == 1 else -v

    def power(self):
        base, is_q = self.atom()
        if self.peek() != "^":
            return base
        self.next()
        p2 = self.exponent()           # exponent in halves
        if p2 % 2 == 0:
            n = p2 // 2
            if isinstance(base, RatFunc) or n >= 0:
                return base ** n
            raise ValueError("negative powers only for scalars")
        if is_q:
            return self.one * qpow(p2)
        raise ValueError("half-integer exponents only on q")

    def exponent(self):
        """Parse an exponent, returned in halves (q^(3/2) -> 3)."""
        t = self.next()
        if t[0] == "int":
            return 2 * t[1]
        if t[0] == "-":
            return -2 * self.expect("int")[1]
        if t[0] == "(":
            sign = 1
            t = self.next()
            if t[0] == "-":
                sign = -1
                t = self.next()
            if t[0] != "int":
                raise ValueError("bad exponent")
            val2 = 2 * t[1]
            if self.peek() == "/":
                self.next()
                d = self.expect("int")[1]
                if d not in (1, 2):
                    raise ValueError("only halves allowed in exponents")
                val2 = val2 // d if d == 1 else t[1]
            self.expect(")")
            return sign * val2
        raise ValueError("bad exponent token %r" % (t[1],))

    def atom(self):
        """Returns (value, is_q_literal)."""
        t = self.next()
        if t[0] == "int":
            return self.one * t[1], False
        if t[0] == "name":
            if t[1] == "q":
                return self.one * Q, True
            if t[1] in self.symbols:
                return self.symbols[t[1]], False
            raise ValueError("unknown symbol %r" % t[1])
        if t[0] == "(":
            v = self.expr()
            self.expect(")")
            return v, False
        raise ValueError("unexpected token %r" % (t[1],))


def parse_ratfunc(text):
    v = ExprParser(text).parse()
    if not isinstance(v, RatFunc):
        raise ValueError("expression is not a scalar")
    return v
