"""A^e-rings, tensor products over the base algebra, and the invariant
subspace Gamma where the coproduct of a bialgebroid must land.

The base algebra A embeds into the total algebra H through an algebra map
s (source) and an anti-algebra map t (target) with commuting images.  H
is an A-bimodule by a.h = s(a) h and h.a = t(a) h, so H (x)_A H is the
quotient of H (x) H by t(a) h (x) g - h (x) s(a) g.  Gamma is cut out of
that quotient by requiring right multiplication of the first leg by t(a)
to agree with right multiplication of the second leg by s(a); it is
closed under the factorwise product.  The binary product M x_A N (coend
then end) and the cotensor product over a coalgebra follow the same
lift-compute-project pattern.
"""

import itertools

from .exactlin import (Matrix, QuotSpace, kernel_basis, quotient_space,
                       solve_linear, span_rref, rref_sparse, reduce_sparse,
                       saxpy, ssub, sscale, sparse_to_dense, dense_to_sparse)
from .algebra import (AlgebraError, FinDimAlgebra, LinMap, check_map,
                      enveloping, end_algebra, linmap_from_cols)
from .reports import Checker, Report, witness


class AeRing:
    """Total algebra H with source s and target t over the base A."""

    def __init__(self, H, A, s, t):
        if s.matrix.cols != A.dim or s.matrix.rows != H.dim:
            raise AlgebraError("source map has shape %dx%d, expected %dx%d"
                               % (s.matrix.rows, s.matrix.cols, H.dim, A.dim))
        if t.matrix.cols != A.dim or t.matrix.rows != H.dim:
            raise AlgebraError("target map has shape %dx%d, expected %dx%d"
                               % (t.matrix.rows, t.matrix.cols, H.dim, A.dim))
        self.H = H
        self.A = A
        self.s = s
        self.t = t
        self.validation = None

    @property
    def field(self):
        return self.H.field

    def s_vec(self, a):
        return self.s.col(a)

    def t_vec(self, a):
        return self.t.col(a)

    def s_of(self, avec):
        return self.s.apply_sparse(avec)

    def t_of(self, avec):
        return self.t.apply_sparse(avec)

    def __repr__(self):
        return "AeRing(H dim %d over A dim %d, %s)" % (self.H.dim, self.A.dim,
                                                       self.field.kind)


def check_ae_ring(R):
    """Valid carriers, s an algebra map, t an anti-algebra map, commuting
    images."""
    chk = Checker("check-ae-ring")
    field = R.field
    from .algebra import check_algebra
    for tag, alg in (("base", R.A), ("total", R.H)):
        rep = check_algebra(alg)
        chk.record("ae-%s-algebra-valid" % tag, rep.ok,
                   rep.failures()[0].witness if not rep.ok else None,
                   instances=sum(it.instances for it in rep.items))
    srep = check_map(R.s, R.A, R.H, "algebra")
    for it in srep.items:
        ok = it.status != "fail"
        chk.report.items.append(it.__class__(
            "ae-s-algebra-map[%s]" % it.axiom, it.status, it.witness,
            it.instances, it.skipped, it.note))
    trep = check_map(R.t, R.A, R.H, "anti-algebra")
    for it in trep.items:
        chk.report.items.append(it.__class__(
            "ae-t-anti-algebra-map[%s]" % it.axiom, it.status, it.witness,
            it.instances, it.skipped, it.note))

    def commute_cases():
        for a, b in itertools.product(range(R.A.dim), repeat=2):
            try:
                lhs = R.H.multiply(R.s_vec(a), R.t_vec(b))
                rhs = R.H.multiply(R.t_vec(b), R.s_vec(a))
            except Exception:
                yield "skip"
                continue
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([a, b], res, field)
            else:
                yield True, None

    chk.run("ae-st-commute", commute_cases())
    return chk.done()


def ae_ring(H, A, s, t):
    """Validated A^e-ring; the report is attached, never raised."""
    R = AeRing(H, A, s, t)
    R.validation = check_ae_ring(R)
    return R


# ---------------------------------------------------------------------------
# H (x)_A H
# ---------------------------------------------------------------------------

def _amb_mul(H, amb, xvec, leg, side):
    """Multiply one leg of an ambient pair vector by a fixed element of H.

    leg is 0 or 1, side "l" (x times leg) or "r" (leg times x).
    """
    field = H.field
    dim = H.dim
    out = {}
    for flat, c in amb.items():
        i, j = divmod(flat, dim)
        tgt = {i: field.one} if leg == 0 else {j: field.one}
        prod = H.multiply(xvec, tgt) if side == "l" else H.multiply(tgt, xvec)
        for k, d in prod.items():
            key = k * dim + j if leg == 0 else i * dim + k
            saxpy(field, out, field.mul(c, d), {key: field.one})
    return out


class TensorOverA:
    """The quotient H (x) H -> H (x)_A H with its canonical section."""

    def __init__(self, ring):
        self.ring = ring
        H = ring.H
        field = ring.field
        dim = H.dim
        relations = []
        for a in range(ring.A.dim):
            ta = ring.t_vec(a)
            sa = ring.s_vec(a)
            for h in range(dim):
                th = H.multiply(ta, {h: field.one})
                for g in range(dim):
                    vec = {}
                    for k, c in th.items():
                        vec[k * dim + g] = c
                    sg = H.multiply(sa, {g: field.one})
                    for k, c in sg.items():
                        saxpy(field, vec, field.neg(field.one),
                              {h * dim + k: c})
                    if vec:
                        relations.append(vec)
        self.quot = quotient_space(field, dim * dim, relations)
        self.dim = self.quot.dim
        self.hdim = dim

    @property
    def field(self):
        return self.ring.field

    def pair_flat(self, i, j):
        return i * self.hdim + j

    def project_pair(self, i, j):
        return self.quot.project_sparse({self.pair_flat(i, j): self.field.one})

    def project_amb(self, amb):
        return self.quot.project_sparse(amb)

    def lift(self, qvec):
        """Canonical ambient representative (sparse) of quotient coords."""
        if isinstance(qvec, dict):
            return self.quot.lift_sparse(qvec)
        return dense_to_sparse(self.field, self.quot.lift(qvec))

    def leg_mul(self, qvec, xvec, leg, side):
        """Lift, multiply one leg by x in H, project back."""
        amb = _amb_mul(self.ring.H, self.lift(qvec), xvec, leg, side)
        return self.project_amb(amb)

    def act_left(self, avec, qvec):
        """a . (g (x) h) = s(a) g (x) h."""
        return self.leg_mul(qvec, self.ring.s_of(avec), 0, "l")

    def act_right(self, qvec, avec):
        """(g (x) h) . b = g (x) t(b) h."""
        return self.leg_mul(qvec, self.ring.t_of(avec), 1, "l")

    def act_left_primed(self, avec, qvec):
        """a .' (g (x) h) = g t(a) (x) h."""
        return self.leg_mul(qvec, self.ring.t_of(avec), 0, "r")

    def act_right_primed(self, qvec, avec):
        """(g (x) h) .' a = g (x) h s(a)."""
        return self.leg_mul(qvec, self.ring.s_of(avec), 1, "r")

    def pair_product(self, qv1, qv2):
        """Factorwise product, computed on canonical representatives."""
        H = self.ring.H
        field = self.field
        dim = self.hdim
        amb1 = self.lift(qv1)
        amb2 = self.lift(qv2)
        out = {}
        for f1, c1 in amb1.items():
            i, j = divmod(f1, dim)
            for f2, c2 in amb2.items():
                k, l = divmod(f2, dim)
                p1 = H.mul_basis(i, k)
                p2 = H.mul_basis(j, l)
                if p1 is None or p2 is None:
                    raise AlgebraError("truncated product in tensor square")
                coeff = field.mul(c1, c2)
                for m, cm in p1.items():
                    for n2, cn in p2.items():
                        saxpy(field, out,
                              field.mul(coeff, field.mul(cm, cn)),
                              {m * dim + n2: field.one})
        return self.project_amb(out)

    def unit_coords(self):
        field = self.field
        amb = {}
        for i, c in self.ring.H.unit.items():
            for j, d in self.ring.H.unit.items():
                amb[self.pair_flat(i, j)] = field.mul(c, d)
        return self.project_amb(amb)

    def __repr__(self):
        return "TensorOverA(ambient %d -> dim %d)" % (self.hdim ** 2, self.dim)


def tensor_over_A(R):
    return TensorOverA(R)


def triple_tensor_over_A(R):
    """(H (x)_A H) (x)_A H; the two iterated quotients coincide because both
    are the quotient of H^(x)3 by the degree-(1,2) and degree-(2,3) balance
    relations, so one QuotSpace serves for coassociativity checks."""
    H = R.H
    field = R.field
    dim = H.dim
    relations = []
    for a in range(R.A.dim):
        ta = R.t_vec(a)
        sa = R.s_vec(a)
        for h in range(dim):
            th = H.multiply(ta, {h: field.one})
            for g in range(dim):
                sg = H.multiply(sa, {g: field.one})
                for l in range(dim):
                    # t(a) h (x) g (x) l  -  h (x) s(a) g (x) l
                    vec = {}
                    for k, c in th.items():
                        vec[(k * dim + g) * dim + l] = c
                    for k, c in sg.items():
                        saxpy(field, vec, field.neg(c),
                              {(h * dim + k) * dim + l: field.one})
                    if vec:
                        relations.append(vec)
                    # g (x) t(a) h (x) l  -  g (x) h (x) s(a) l
                    vec = {}
                    for k, c in th.items():
                        vec[(g * dim + k) * dim + l] = c
                    for k, c in H.multiply(sa, {l: field.one}).items():
                        saxpy(field, vec, field.neg(c),
                              {(g * dim + h) * dim + k: field.one})
                    if vec:
                        relations.append(vec)
    return quotient_space(field, dim ** 3, relations)


# ---------------------------------------------------------------------------
# the Takeuchi invariant subspace
# ---------------------------------------------------------------------------

class GammaSpace:
    """Basis of Gamma inside H (x)_A H, its product, and the map from A^e."""

    def __init__(self, tensor, basis, report):
        self.tensor = tensor
        self.basis = [tuple(b) for b in basis]
        self.dim = len(self.basis)
        self.report = report
        field = tensor.field
        self._span = rref_sparse(field, self.basis)

    @property
    def field(self):
        return self.tensor.field

    def contains(self, qvec):
        return not reduce_sparse(self.field, self._span, qvec)

    def coords(self, qvec):
        """Coordinates in the Gamma basis, or None if outside."""
        field = self.field
        if not self.basis:
            vec = qvec if isinstance(qvec, dict) else \
                dense_to_sparse(field, qvec)
            return () if not vec else None
        M = Matrix.from_cols(field, self.basis, self.tensor.dim)
        dense = sparse_to_dense(field, qvec, self.tensor.dim) \
            if isinstance(qvec, dict) else qvec
        sol = solve_linear(M, dense)
        if sol is None:
            return None
        # solve_linear guarantees M sol = dense only when consistent
        return sol

    def product(self, qv1, qv2):
        return self.tensor.pair_product(qv1, qv2)

    def __repr__(self):
        return "GammaSpace(dim %d inside %d)" % (self.dim, self.tensor.dim)


def gamma_conditions(tensor):
    """The per-a maps whose joint kernel is Gamma, as one stacked matrix."""
    ring = tensor.ring
    field = tensor.field
    rows = []
    for a in range(ring.A.dim):
        ta = ring.t_of({a: field.one})
        sa = ring.s_of({a: field.one})
        cols = []
        for k in range(tensor.dim):
            unit = [field.zero] * tensor.dim
            unit[k] = field.one
            lhs = tensor.leg_mul(tuple(unit), ta, 0, "r")
            rhs = tensor.leg_mul(tuple(unit), sa, 1, "r")
            cols.append(ssub(field, lhs, rhs))
        for r in range(tensor.dim):
            row = [field.zero] * tensor.dim
            for k in range(tensor.dim):
                v = cols[k].get(r)
                if v is not None:
                    row[k] = v
            rows.append(row)
    return Matrix(field, rows, cols=tensor.dim)


def takeuchi_product(R, tensor=None):
    """Gamma(H, s, t) with closure and A^e-map verification attached."""
    tensor = tensor or TensorOverA(R)
    field = tensor.field
    M = gamma_conditions(tensor)
    basis = kernel_basis(M)
    chk = Checker("takeuchi-product")

    unit = tensor.unit_coords()
    span = rref_sparse(field, basis)
    chk.record("gamma-contains-unit",
               not reduce_sparse(field, span, unit),
               witness([], unit, field))

    def closure_cases():
        for i, b1 in enumerate(basis):
            for j, b2 in enumerate(basis):
                prod = tensor.pair_product(b1, b2)
                res = reduce_sparse(field, span, prod)
                if res:
                    yield False, witness([i, j], res, field,
                                         "product of Gamma basis elements "
                                         "escapes Gamma")
                else:
                    yield True, None

    chk.run("gamma-closure", closure_cases())

    env = enveloping(R.A)
    nA = R.A.dim

    def i_coords(a, b):
        amb = {}
        sa = R.s_vec(a)
        tb = R.t_vec(b)
        for k, c in sa.items():
            for m, d in tb.items():
                amb[k * tensor.hdim + m] = field.mul(c, d)
        return tensor.project_amb(amb)

    def i_lands():
        for a in range(nA):
            for b in range(nA):
                q = i_coords(a, b)
                res = reduce_sparse(field, span, q)
                if res:
                    yield False, witness([a, b], res, field)
                else:
                    yield True, None

    chk.run("i-lands-in-gamma", i_lands())

    def i_mult():
        for x, y in itertools.product(range(env.dim), repeat=2):
            a1, b1 = divmod(x, nA)
            a2, b2 = divmod(y, nA)
            rhs = tensor.pair_product(
                sparse_to_dense(field, i_coords(a1, b1), tensor.dim),
                sparse_to_dense(field, i_coords(a2, b2), tensor.dim))
            lhs = {}
            for z, c in env.mul_basis(x, y).items():
                a3, b3 = divmod(z, nA)
                saxpy(field, lhs, c, i_coords(a3, b3))
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([x, y], res, field)
            else:
                yield True, None

    chk.run("i-multiplicative", i_mult())
    lhs = {}
    for x, c in env.unit.items():
        a, b = divmod(x, nA)
        saxpy(field, lhs, c, i_coords(a, b))
    chk.record("i-unital", not ssub(field, lhs, unit))
    return GammaSpace(tensor, basis, chk.done())


# ---------------------------------------------------------------------------
# A^e-bimodules and the binary x_A product
# ---------------------------------------------------------------------------

class AeBimodule:
    """Four commuting actions of A on one carrier: A and A-bar, both sides.

    Each action table maps (a_index, m_index) to a sparse image vector.
    """

    def __init__(self, field, A, dim, la, ra, lab, rab, tag="M"):
        self.field = field
        self.A = A
        self.dim = dim
        self.la = la
        self.ra = ra
        self.lab = lab
        self.rab = rab
        self.tag = tag

    def _apply(self, table, avec, mvec):
        field = self.field
        out = {}
        for a, ca in avec.items():
            for m, cm in mvec.items():
                saxpy(field, out, field.mul(ca, cm), table.get((a, m), {}))
        return out

    def act(self, kind, avec, mvec):
        return self._apply(getattr(self, kind), avec, mvec)

    def __repr__(self):
        return "AeBimodule(%s, dim %d)" % (self.tag, self.dim)


def aering_bimodule(R):
    """H as an A^e-bimodule: a.h.b = s(a)h s(b), abar.h.bbar = t(a)h t(b)."""
    H = R.H
    field = R.field
    la, ra, lab, rab = {}, {}, {}, {}
    for a in range(R.A.dim):
        sa, ta = R.s_vec(a), R.t_vec(a)
        for m in range(H.dim):
            em = {m: field.one}
            la[(a, m)] = H.multiply(sa, em)
            ra[(a, m)] = H.multiply(em, sa)
            lab[(a, m)] = H.multiply(ta, em)
            rab[(a, m)] = H.multiply(em, ta)
    return AeBimodule(field, R.A, H.dim, la, ra, lab, rab, tag="H")


def end_bimodule(A):
    """End(A) with (a.f)(x) = a f(x), (abar.f)(x) = f(x) a,
    (f.b)(x) = f(b x), (f.bbar)(x) = f(x b)."""
    field = A.field
    n = A.dim
    la, ra, lab, rab = {}, {}, {}, {}
    for a in range(n):
        for p in range(n):
            for q in range(n):
                f = p * n + q
                la.setdefault((a, f), {})
                lab.setdefault((a, f), {})
                for r, c in A.mul_basis(a, p).items():
                    la[(a, f)][r * n + q] = c
                for r, c in A.mul_basis(p, a).items():
                    lab[(a, f)][r * n + q] = c
                ra_img = {}
                rab_img = {}
                for m in range(n):
                    c = A.mul_basis(a, m).get(q)
                    if c is not None:
                        ra_img[p * n + m] = c
                    c = A.mul_basis(m, a).get(q)
                    if c is not None:
                        rab_img[p * n + m] = c
                ra[(a, f)] = ra_img
                rab[(a, f)] = rab_img
    return AeBimodule(field, A, n * n, la, ra, lab, rab, tag="End(A)")


class TimesA:
    """M x_A N: the end-subspace inside the coend-quotient of M (x) N."""

    def __init__(self, M, N):
        if M.A is not N.A and M.A.dim != N.A.dim:
            raise AlgebraError("bimodules over different base algebras")
        self.M = M
        self.N = N
        field = M.field
        self.field = field
        dimM, dimN = M.dim, N.dim
        relations = []
        for a in range(M.A.dim):
            for m in range(dimM):
                left = M.lab.get((a, m), {})
                for n2 in range(dimN):
                    vec = {}
                    for k, c in left.items():
                        vec[k * dimN + n2] = c
                    for k, c in N.la.get((a, n2), {}).items():
                        saxpy(field, vec, field.neg(c),
                              {m * dimN + k: field.one})
                    if vec:
                        relations.append(vec)
        self.quot = quotient_space(field, dimM * dimN, relations)
        rows = []
        for a in range(M.A.dim):
            cols = []
            for k in range(self.quot.dim):
                unit = [field.zero] * self.quot.dim
                unit[k] = field.one
                amb = dense_to_sparse(field, self.quot.lift(tuple(unit)))
                lhs = {}
                rhs = {}
                for flat, c in amb.items():
                    m, n2 = divmod(flat, dimN)
                    for k2, d in M.rab.get((a, m), {}).items():
                        saxpy(field, lhs, field.mul(c, d),
                              {k2 * dimN + n2: field.one})
                    for k2, d in N.ra.get((a, n2), {}).items():
                        saxpy(field, rhs, field.mul(c, d),
                              {m * dimN + k2: field.one})
                diff = ssub(field, self.quot.project_sparse(lhs),
                            self.quot.project_sparse(rhs))
                cols.append(diff)
            for r in range(self.quot.dim):
                row = [field.zero] * self.quot.dim
                for k in range(self.quot.dim):
                    v = cols[k].get(r)
                    if v is not None:
                        row[k] = v
                rows.append(row)
        M_cond = Matrix(field, rows, cols=self.quot.dim)
        self.basis = [tuple(b) for b in kernel_basis(M_cond)]
        self.dim = len(self.basis)
        self._span = rref_sparse(field, self.basis)

    def contains(self, qvec):
        return not reduce_sparse(self.field, self._span, qvec)

    def lift_amb(self, qvec):
        if isinstance(qvec, dict):
            return self.quot.lift_sparse(qvec)
        return dense_to_sparse(self.field, self.quot.lift(qvec))

    def span_rows(self):
        return span_rref(self.field, self.basis, self.quot.dim)

    def __repr__(self):
        return "TimesA(dim %d inside quotient %d)" % (self.dim, self.quot.dim)


def times_A(M, N):
    return TimesA(M, N)


def theta(T, qvec):
    """Evaluation M x_A End(A) -> M, sum f_i(1)-bar . m_i."""
    M, N = T.M, T.N
    field = T.field
    n = M.A.dim
    out = {}
    for flat, c in T.lift_amb(qvec).items():
        m, f = divmod(flat, N.dim)
        p, q = divmod(f, n)
        a_of_f = {}
        for u, cu in M.A.unit.items():
            if u == q:
                saxpy(field, a_of_f, cu, {p: field.one})
        img = M._apply(M.lab, a_of_f, {m: field.one})
        saxpy(field, out, c, img)
    return out


def theta_prime(T, qvec):
    """Evaluation End(A) x_A M -> M, sum f_i(1) . m_i."""
    M, N = T.M, T.N
    field = T.field
    n = N.A.dim
    out = {}
    for flat, c in T.lift_amb(qvec).items():
        f, m = divmod(flat, N.dim)
        p, q = divmod(f, n)
        a_of_f = {}
        for u, cu in N.A.unit.items():
            if u == q:
                saxpy(field, a_of_f, cu, {p: field.one})
        img = N._apply(N.la, a_of_f, {m: field.one})
        saxpy(field, out, c, img)
    return out


# ---------------------------------------------------------------------------
# cotensor product over a coalgebra
# ---------------------------------------------------------------------------

def cotensor(C, dimM, rho_right_rows, dimN, rho_left_rows):
    """Basis of M box_C N inside M (x) N.

    rho_right_rows[m] is {(m', c): coeff} for the right C-coaction on M;
    rho_left_rows[n] is {(c, n'): coeff} for the left C-coaction on N.
    Returns dense vectors over the flat index m * dimN + n.
    """
    field = C.field
    rows_by_eq = {}

    def bump(key, col, v):
        cur = rows_by_eq.setdefault(key, {})
        nv = field.add(cur.get(col, field.zero), v)
        if nv == field.zero:
            cur.pop(col, None)
        else:
            cur[col] = nv

    for m in range(dimM):
        for n2 in range(dimN):
            col = m * dimN + n2
            for (m2, c), v in rho_right_rows[m].items():
                bump((m2, c, n2), col, v)
            for (c, n3), v in rho_left_rows[n2].items():
                bump((m, c, n3), col, field.neg(v))
    ncols = dimM * dimN
    rows = [sparse_to_dense(field, rows_by_eq[key], ncols)
            for key in sorted(rows_by_eq) if rows_by_eq[key]]
    M = Matrix(field, rows, cols=ncols) if rows else Matrix.zero(field, 1, ncols)
    return kernel_basis(M)
