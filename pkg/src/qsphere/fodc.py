"""Covariant first-order differential calculi over the quantum sphere.

Quantum tangent spaces are spans of dual-coalgebra vectors containing the
counit, closed under the coproduct (left comodule condition) and under the
right action of the twisted primitive element; the three conditions are
certified exactly.  Calculi themselves are realized on the free right
module over the dual basis of an SL2-subcomodule W of the sphere, with the
left action twisted by the universal r-form; the differential is the
commutator with the canonical invariant one-form.
"""

import itertools
import json

from .scalars import ZERO, ONE, Q, QINV, QHAT, RatFunc, CParam, qpow
from . import linalg, oqsl2, podles
from .dualfunc import DualEngine, PsiVector, EPSILON


# ---------------------------------------------------------------------------
# quantum tangent spaces

class TangentSpace:
    """Certified tangent space T^eps = C eps + sum of weight components."""

    __slots__ = ("c", "components", "basis", "dim", "engine", "certificate")

    def __init__(self, c, components, basis, dim, engine, certificate):
        self.c = c
        self.components = components
        self.basis = basis
        self.dim = dim
        self.engine = engine
        self.certificate = certificate

    def t_basis(self):
        """Basis of T = (T^eps)^+, the vectors killed at 1."""
        out = []
        for v in self.basis[1:]:
            out.append(v - v.value_at_unit() * EPSILON)
        return out


def _coordinates(vectors):
    """Coordinate rows of PsiVectors over the union of their symbols."""
    symbols = sorted({s for v in vectors for s in v.terms},
                     key=lambda s: (s[0], s[1], s[2].sort_key()))
    index = {s: i for i, s in enumerate(symbols)}
    rows = []
    for v in vectors:
        row = [ZERO] * len(symbols)
        for s, c in v.terms.items():
            row[index[s]] = c
        rows.append(row)
    return symbols, rows


def _in_span(basis_vectors, v):
    symbols, rows = _coordinates(list(basis_vectors) + [v])
    return linalg.in_span(rows[:-1], rows[-1]) is not None


def tangent_space(c: CParam, components, engine=None, Lmax=None):
    """Build and certify the tangent space for a list of (sign, l) components."""
    engine = engine or DualEngine(c)
    components = sorted(set(components), key=lambda sl: (sl[1], -sl[0]))
    basis = [EPSILON]
    expected_dim = 1
    for sign, l in components:
        if not engine.is_nilpotent_weight(sign, l):
            raise ValueError("component (%+d, %d) is not in J^c" % (sign, l))
        mod = engine.build_module(sign, l)
        if (sign, l) == (+1, 0):
            continue        # V_1 is the counit line itself
        basis.extend(mod.basis)
        expected_dim += l + 1
    _, rows = _coordinates(basis)
    dim = linalg.rank(rows)
    cert = {"dim_matches": dim == expected_dim}

    # coproduct closure: group Delta v by its left symbol, the right legs
    # must stay in the span
    cop_ok, cop_witness = True, None
    for v in basis:
        grouped = {}
        for sym, coeff in v.terms.items():
            for cc, left, right in engine.psi_coproduct(sym):
                t = grouped.setdefault(left, PsiVector())
                grouped[left] = t + PsiVector({right: coeff * cc})
        for left, rv in grouped.items():
            if not _in_span(basis, rv):
                cop_ok, cop_witness = False, (left, str(rv))
                break
        if not cop_ok:
            break
    cert["coproduct_closed"] = cop_ok
    if cop_witness:
        cert["coproduct_witness"] = cop_witness

    xc_ok, xc_witness = True, None
    for v in basis:
        if not _in_span(basis, engine.xc_right_action(v)):
            xc_ok, xc_witness = False, str(v)
            break
    cert["xc_closed"] = xc_ok
    if xc_witness:
        cert["xc_witness"] = xc_witness

    cert["contains_counit"] = True      # by construction
    cert["pass"] = cert["dim_matches"] and cop_ok and xc_ok
    if not cert["pass"]:
        first = next(k for k in ("dim_matches", "coproduct_closed", "xc_closed")
                     if not cert[k])
        cert["first_failure"] = first
    return TangentSpace(c, components, basis, dim, engine, cert)


def irreducibility_report(ts: TangentSpace):
    """For a single-component space: no proper invariant subspace above C eps.

    kappa acts with distinct eigenvalues on the quotient by the counit
    line, so any invariant subspace is spanned by basis vectors; it
    suffices that the operator orbit of each one is everything.
    """
    if len(ts.components) != 1:
        raise ValueError("irreducibility certificate is per component")
    engine = ts.engine
    module_vectors = ts.basis[1:]
    n = len(module_vectors)
    if n == 0:
        return {"pass": True, "note": "trivial component"}
    eps_sym = (0, 0, ONE)

    def project(v):
        t = dict(v.terms)
        t.pop(eps_sym, None)
        return PsiVector(t)

    proj_basis = [project(v) for v in module_vectors]
    grades = [next(iter(v.grades())) for v in module_vectors]
    if len(set(grades)) != n:
        return {"pass": False, "note": "kappa eigenvalues not distinct"}
    failures = []
    for k in range(n):
        span = [proj_basis[k]]
        frontier = [proj_basis[k]]
        while frontier:
            nxt = []
            for v in frontier:
                for img in (project(engine.phi(v)), project(engine.varphi(v))):
                    if img.is_zero() or _in_span(span, img):
                        continue
                    span.append(img)
                    nxt.append(img)
            frontier = nxt
        _, rows = _coordinates(span)
        if linalg.rank(rows) != n:
            failures.append(k)
    return {"pass": not failures, "failures": failures}


def pairing_matrix(ts: TangentSpace, W):
    """[chi(w)] for chi in the tangent space basis (counit excluded), w in W."""
    rows = []
    for chi in ts.t_basis():
        rows.append([ts.engine.eval_vector(chi, w) for w in W])
    return rows


def classify_de_generated(c: CParam, Lmax=6, engine=None):
    """All direct sums of irreducible calculi generated by the d e_i.

    A component of dimension l+1 > 3 can never be separated by the
    3-dimensional span of the generators, so the enumeration is pruned to
    components with l <= 2 and total dimension <= 3; the trivial component
    (+1, 0) carries the zero calculus and is excluded from the counts.
    """
    engine = engine or DualEngine(c)
    jset = engine.scan_weights(Lmax)
    eligible = [sl for sl in jset if sl != (+1, 0) and sl[1] + 1 <= 3]
    pruned = [sl for sl in jset if sl != (+1, 0) and sl[1] + 1 > 3]
    W = engine.alg.generators_e()
    calculi = []
    rejected = []
    for size in range(1, len(eligible) + 1):
        for combo in itertools.combinations(eligible, size):
            dim = sum(l + 1 for _, l in combo)
            if dim > 3:
                continue
            ts = tangent_space(c, combo, engine=engine)
            rk = linalg.rank(pairing_matrix(ts, W))
            entry = {"components": sorted(combo, key=lambda sl: (sl[1], -sl[0])),
                     "dim": dim, "pairing_rank": rk}
            if rk == dim:
                calculi.append(entry)
            else:
                rejected.append(entry)
    calculi.sort(key=lambda e: (e["dim"], e["components"]))
    return {"calculi": calculi, "rejected": rejected, "pruned_components": pruned,
            "Lmax": Lmax, "count": len(calculi)}


# ---------------------------------------------------------------------------
# the SL2-subcomodules V(n) of the sphere

def submodule_Vn(n, c: CParam, alg=None):
    """Basis of the (2n+1)-dimensional submodule: E-orbit of e_1^n."""
    if n < 1:
        raise ValueError("n must be positive")
    alg = alg or podles.PodlesAlgebra(c)
    basis = [alg.e1() ** n]
    for _ in range(2 * n):
        basis.append(alg.act("E", basis[-1]))
        if basis[-1].is_zero():
            raise AssertionError("E-orbit of e_1^n collapsed early")
    if not alg.act("E", basis[-1]).is_zero():
        raise AssertionError("E-orbit of e_1^n does not close after 2n+1 steps")
    return basis


def submodule_report(n, c: CParam, alg=None):
    alg = alg or podles.PodlesAlgebra(c)
    basis = submodule_Vn(n, c, alg)
    ok_k = all(alg.act("K", b) == qpow(2 * (2 * (i - n))) * b
               for i, b in enumerate(basis))
    # F keeps the span
    rows = [_podles_row(alg, b, 2 * n) for b in basis]
    ok_f = all(linalg.in_span(rows, _podles_row(alg, alg.act("F", b), 2 * n)) is not None
               for b in basis)
    rk = linalg.rank(rows)
    return {"pass": ok_k and ok_f and rk == 2 * n + 1, "K_weights": ok_k,
            "F_closed": ok_f, "rank": rk, "dim": 2 * n + 1, "basis": basis}


def _podles_row(alg, x, degree):
    monos = alg.normal_monomials(degree)
    idx = {m: i for i, m in enumerate(monos)}
    row = [ZERO] * len(monos)
    for m, v in x.terms.items():
        row[idx[m]] = v
    return row


# ---------------------------------------------------------------------------
# comodule algebra endomorphisms nu

def nu_is_admissible(kind, c: CParam):
    """The sign flip e_i -> -e_i respects the relations only at c = infinity."""
    if kind == "id":
        return True
    if kind != "flip":
        raise ValueError("nu must be 'id' or 'flip'")
    return c.is_infinity()


def nu_apply(kind, x):
    if kind == "id":
        return x
    out = {}
    for m, v in x.terms.items():
        out[m] = -v if len(m) % 2 else v
    return podles.PodlesElement(x.alg, out)


# ---------------------------------------------------------------------------
# the r-form calculus on W' (x) B

class CalculusPresentation:
    """A free right-module calculus, with the twisted left action and d = [omega, .]."""

    def __init__(self, n, nu, c, alg, W_basis, psi, sinv_psi):
        self.n = n
        self.nu = nu
        self.c = c
        self.alg = alg
        self.W_basis = W_basis
        self.psi = psi                  # psi[j][i]: coaction matrix in O_q(SL2)
        self.sinv_psi = sinv_psi        # S^-1(psi[i][j]), indexed [i][j]
        self.N = len(W_basis)
        self.omega = list(W_basis)      # coords of omega = sum gamma^i b_i
        self._rform_cache = {}
        self._twist_cache = {}

    # Gamma elements are coordinate lists xi = [x_1, ..., x_N] meaning
    # sum_i gamma^i x_i

    def zero(self):
        return [self.alg.element() for _ in range(self.N)]

    def rmult(self, coords, b):
        return [x * b for x in coords]

    def _rform_against(self, amono, i, j):
        key = (amono, i, j)
        v = self._rform_cache.get(key)
        if v is None:
            v = oqsl2.rform(oqsl2.SL2Element({amono: ONE}), self.sinv_psi[i][j])
            self._rform_cache[key] = v
        return v

    def _twist(self, mono):
        """T[i][j] in B with mono . gamma^i = sum_j gamma^j T[i][j]."""
        t = self._twist_cache.get(mono)
        if t is not None:
            return t
        co = self.alg.coact(self.alg.element({mono: ONE}))
        t = [[self.alg.element() for _ in range(self.N)] for _ in range(self.N)]
        for (pm, am), cc in co.items():
            left = nu_apply(self.nu, self.alg.element({pm: cc}))
            for i in range(self.N):
                for j in range(self.N):
                    r = self._rform_against(am, i, j)
                    if r:
                        t[i][j] = t[i][j] + r * left
        self._twist_cache[mono] = t
        return t

    def lmult(self, a, coords):
        """a . (sum_i gamma^i x_i) via the r-form twisted bimodule rule."""
        out = self.zero()
        nonzero = [i for i in range(self.N) if coords[i]]
        for mono, cc in a.terms.items():
            t = self._twist(mono)
            for i in nonzero:
                xi = coords[i]
                for j in range(self.N):
                    if t[i][j]:
                        out[j] = out[j] + cc * (t[i][j] * xi)
        return out

    def d(self, x):
        """The differential omega x - x omega."""
        left = self.rmult(self.omega, x)
        right = self.lmult(x, self.omega)
        return [u - v for u, v in zip(left, right)]

    def coords_eq(self, u, v):
        return all(x == y for x, y in zip(u, v))

    def is_zero_coords(self, u):
        return all(x.is_zero() for x in u)

    def differential_table(self):
        gens = {"em1": self.alg.em1(), "e0": self.alg.e0(),
                "e1": self.alg.e1(), "A": self.alg.A()}
        return {name: self.d(x) for name, x in gens.items()}

    def left_action_table(self):
        gens = {"em1": self.alg.em1(), "e0": self.alg.e0(),
                "e1": self.alg.e1(), "A": self.alg.A()}
        table = {}
        for name, a in gens.items():
            rows = []
            for i in range(self.N):
                unit_i = self.zero()
                unit_i[i] = self.alg.unit()
                rows.append(self.lmult(a, unit_i))
            table[name] = rows
        return table

    def leibniz_report(self, max_total_degree=4):
        """d(xy) = x d(y) + d(x) y on all monomial pairs up to a degree bound."""
        monos = self.alg.normal_monomials(max_total_degree)
        failures = []
        for m1 in monos:
            for m2 in monos:
                if not m1 or not m2 or len(m1) + len(m2) > max_total_degree:
                    continue
                x = self.alg.element({m1: ONE})
                y = self.alg.element({m2: ONE})
                lhs = self.d(x * y)
                rhs = [u + v for u, v in
                       zip(self.lmult(x, self.d(y)), self.rmult(self.d(x), y))]
                if not self.coords_eq(lhs, rhs):
                    failures.append((m1, m2))
        return {"pass": not failures, "failures": failures,
                "bound": max_total_degree}

    def bimodule_report(self, max_degree=2):
        """(ab) xi = a (b xi) for generator products against each gamma^i."""
        gens = [self.alg.em1(), self.alg.A(), self.alg.e1()]
        failures = 0
        for a, b in itertools.product(gens, repeat=2):
            for i in range(self.N):
                unit_i = self.zero()
                unit_i[i] = self.alg.unit()
                lhs = self.lmult(a * b, unit_i)
                rhs = self.lmult(a, self.lmult(b, unit_i))
                if not self.coords_eq(lhs, rhs):
                    failures += 1
        return {"pass": failures == 0, "failures": failures}

    def to_json_dict(self):
        sign = -1 if self.nu == "flip" else +1
        return {
            "schema": "qsphere-report/1",
            "kind": "calculus-presentation",
            "n": self.n,
            "nu": self.nu,
            "components": [[sign, 2 * self.n]],
            "dim": self.N,
            "W_basis": [str(b) for b in self.W_basis],
            "omega": [str(b) for b in self.omega],
            "differential_table": {k: [str(x) for x in v]
                                   for k, v in self.differential_table().items()},
            "left_action_table": {k: [[str(x) for x in row] for row in v]
                                  for k, v in self.left_action_table().items()},
        }


def build_rform_calculus(n, nu, c: CParam, engine=None):
    """Construct the free-module calculus on W = V(n) with twist nu."""
    if not nu_is_admissible(nu, c):
        raise ValueError("nu = %r is not a comodule algebra endomorphism at %s"
                         % (nu, c))
    alg = (engine.alg if engine is not None else podles.PodlesAlgebra(c))
    W = submodule_Vn(n, c, alg)
    N = len(W)
    deg = 2 * n
    rows = [_podles_row(alg, b, deg) for b in W]

    # coaction matrix: Delta_B b_i = sum_j b_j (x) psi[j][i]
    psi = [[oqsl2.SL2Element() for _ in range(N)] for _ in range(N)]
    for i in range(N):
        co = alg.coact(W[i])
        by_amono = {}
        for (pm, am), cc in co.items():
            by_amono.setdefault(am, {})[pm] = cc
        for am, pvec in by_amono.items():
            target = [ZERO] * len(rows[0])
            monos = alg.normal_monomials(deg)
            idx = {m: k for k, m in enumerate(monos)}
            for pm, cc in pvec.items():
                target[idx[pm]] = cc
            coeffs = linalg.in_span(rows, target)
            if coeffs is None:
                raise AssertionError("coaction leg leaves the W-span")
            for j in range(N):
                if coeffs[j]:
                    psi[j][i] = psi[j][i] + coeffs[j] * oqsl2.SL2Element({am: ONE})
    # counit of the comodule matrix must be the identity
    for i in range(N):
        for j in range(N):
            want = ONE if i == j else ZERO
            if psi[j][i].counit() != want:
                raise AssertionError("comodule matrix has wrong counit")
    sinv_psi = [[oqsl2.antipode(psi[i][j], inverse=True) for j in range(N)]
                for i in range(N)]
    return CalculusPresentation(n, nu, c, alg, W, psi, sinv_psi)


# ---------------------------------------------------------------------------
# tangent functionals of the r-form calculus

def chi_functionals(n, nu, c: CParam, degree=None, engine=None):
    """Evaluation tables of chi_i(a) = r(nu(a), S^-1(b_i)) - eps(b_i) eps(a).

    Returns the tables together with the span-identification data against
    the module of weight ±q^(-2n).
    """
    engine = engine or DualEngine(c)
    alg = engine.alg
    if degree is None:
        degree = 2 * n + 2
    W = submodule_Vn(n, c, alg)
    monos = alg.normal_monomials(degree)
    elems = [alg.element({m: ONE}) for m in monos]
    chi_rows = []
    for b in W:
        sb = oqsl2.antipode(alg.embed(b), inverse=True)
        eps_b = alg.counit(b)
        row = []
        for x in elems:
            val = oqsl2.rform(alg.embed(nu_apply(nu, x)), sb) - eps_b * alg.counit(x)
            row.append(val)
        chi_rows.append(row)

    sign = -1 if nu == "flip" else +1
    mod = engine.build_module(sign, 2 * n)
    mod_rows = [engine.evaluation_row(v - v.value_at_unit() * EPSILON, monos)
                for v in mod.basis]

    r_chi = linalg.rank(chi_rows)
    r_mod = linalg.rank(mod_rows)
    r_all = linalg.rank(chi_rows + mod_rows)
    spans_equal = (r_chi == r_mod == r_all == 2 * n + 1)

    # chi vanishes at 1 (first column is the counit evaluation of 1)
    unit_idx = monos.index(())
    chi_at_unit_ok = all(row[unit_idx].is_zero() for row in chi_rows)

    return {"chi_rows": chi_rows, "module_rows": mod_rows, "monomials": monos,
            "rank_chi": r_chi, "rank_module": r_mod, "rank_joint": r_all,
            "spans_equal": spans_equal, "chi_vanish_at_unit": chi_at_unit_ok,
            "degree": degree}


def chibar_report(n, c: CParam, degree=3, engine=None):
    """The character a -> eps(e1)^-n r(a, S^-1(e1^n)): values and identification."""
    engine = engine or DualEngine(c)
    alg = engine.alg
    _, _, wp = alg.eps_weights()
    scale = (wp ** n).inv()
    sb = oqsl2.antipode(alg.embed(alg.e1() ** n), inverse=True)

    def chibar(x):
        return scale * oqsl2.rform(alg.embed(x), sb)

    gen_ok = True
    for i, e in ((-1, alg.em1()), (0, alg.e0()), (1, alg.e1())):
        want = qpow(-4 * n * i) * alg.counit(e)
        if chibar(e) != want:
            gen_ok = False
    # chibar equals psi^0_{q^(-2n)} as a functional on monomials
    monos = alg.normal_monomials(degree)
    psi_ok = all(chibar(alg.element({m: ONE}))
                 == engine.psi_eval((0, 0, qpow(-4 * n)), alg.element({m: ONE}))
                 for m in monos)
    # it is a character on a sample of products
    char_ok = True
    for m1 in alg.normal_monomials(2):
        for m2 in alg.normal_monomials(1):
            x, y = alg.element({m1: ONE}), alg.element({m2: ONE})
            if chibar(x * y) != chibar(x) * chibar(y):
                char_ok = False
    return {"pass": gen_ok and psi_ok and char_ok, "generators": gen_ok,
            "equals_psi": psi_ok, "is_character": char_ok, "degree": degree}


# ---------------------------------------------------------------------------
# freeness

def verify_freeness(pres: CalculusPresentation, degree=2, coeff_degree=None):
    """d(W-basis) generates freely, with unique expansions, up to a degree bound.

    Uniqueness: no nonzero right combination of the d(b_i) with coefficients
    of degree <= coeff_degree vanishes.  Generation: every d(monomial) up to
    `degree` expands in such combinations.  Coefficients may need higher
    degree than the monomial itself, so coeff_degree defaults to degree + 1.
    """
    alg = pres.alg
    N = pres.N
    if coeff_degree is None:
        coeff_degree = degree + 1
    d_basis = [pres.d(b) for b in pres.W_basis]
    inner_deg = max(x.degree() for co in d_basis for x in co)
    big_deg = inner_deg + coeff_degree
    small = alg.normal_monomials(coeff_degree)
    big = alg.normal_monomials(big_deg)
    big_idx = {m: i for i, m in enumerate(big)}

    def gamma_vec(coords):
        out = [ZERO] * (N * len(big))
        for j in range(N):
            for m, v in coords[j].terms.items():
                out[j * len(big) + big_idx[m]] = v
        return out

    columns = []
    for i in range(N):
        for m in small:
            columns.append(gamma_vec(pres.rmult(d_basis[i], alg.element({m: ONE}))))
    targets = []
    target_monos = [m for m in alg.normal_monomials(degree) if m]
    for m in target_monos:
        targets.append(gamma_vec(pres.d(alg.element({m: ONE}))))

    matrix_rows = linalg.transpose(columns)
    col_rank, sols = linalg.solve_with_rank(matrix_rows, targets)
    unique = col_rank == len(columns)
    failures = [m for m, s in zip(target_monos, sols) if s is None]
    return {"pass": unique and not failures, "unique_expansion": unique,
            "ungenerated": failures, "degree": degree, "coeff_degree": coeff_degree,
            "unknowns": len(columns), "rank": col_rank}


# ---------------------------------------------------------------------------
# serialization helpers

def tangent_space_json(ts: TangentSpace):
    return {
        "schema": "qsphere-report/1",
        "kind": "tangent-space",
        "components": [list(sl) for sl in ts.components],
        "dim_Teps": ts.dim,
        "dim_calculus": ts.dim - 1,
        "certificate": {k: v for k, v in ts.certificate.items()},
    }


def emit_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def parse_json(text):
    return json.loads(text)
