"""Bialgebras, Hopf algebras, (co)module algebras and Yetter-Drinfeld data.

Coactions are right coactions m -> m_<0> (x) m_<1>.  A Yetter-Drinfeld
module carries a left action and a right coaction over the same bialgebra,
compatible through

    h_(1).m_<0> (x) h_(2) m_<1>  =  (h_(2).m)_<0> (x) (h_(2).m)_<1> h_(1)

and the braiding sigma(m (x) n) = n_<0> (x) n_<1>.m.  Quasitriangular and
coquasitriangular structures follow the usual conventions (intertwiner
plus two hexagons, and their formal duals); those axioms are imported
background and verified directly on the given tensors.
"""

import itertools

from .exactlin import (Matrix, invert, saxpy, ssub, sscale,
                       sparse_to_dense, dense_to_sparse)
from .algebra import (AlgebraError, FinDimAlgebra, FinDimCoalgebra, LinMap,
                      TruncationOverflow, check_algebra, check_coalgebra,
                      graded_algebra, linmap_from_cols)
from .reports import Checker, Report, witness


class BialgebraData:
    """An algebra and a coalgebra on one space, optionally with antipode."""

    def __init__(self, alg, coalg, antipode=None, antipode_inv=None):
        if alg.dim != coalg.dim:
            raise AlgebraError("algebra dim %d != coalgebra dim %d"
                               % (alg.dim, coalg.dim))
        if alg.field != coalg.field:
            raise AlgebraError("mismatched fields")
        self.alg = alg
        self.coalg = coalg
        self.antipode = antipode
        self.antipode_inv = antipode_inv

    @property
    def field(self):
        return self.alg.field

    @property
    def dim(self):
        return self.alg.dim

    def name(self, i):
        return self.alg.name(i)

    def __repr__(self):
        s = ", with antipode" if self.antipode else ""
        return "BialgebraData(dim=%d over %s%s)" % (self.dim, self.field.kind, s)


class ModuleStruct:
    """A left action of an algebra on a carrier space."""

    def __init__(self, field, h_dim, dim, act):
        self.field = field
        self.h_dim = h_dim
        self.dim = dim
        self.act = {}
        for (h, m), vec in act.items():
            out = {k: field.coerce(v) for k, v in vec.items()
                   if field.coerce(v) != field.zero}
            self.act[(h, m)] = out

    @classmethod
    def from_tensor(cls, field, tensor):
        """tensor[h][m] is the dense image vector of h . e_m."""
        h_dim = len(tensor)
        dim = len(tensor[0]) if h_dim else 0
        act = {}
        for h in range(h_dim):
            for m in range(dim):
                act[(h, m)] = dense_to_sparse(field, tensor[h][m])
        return cls(field, h_dim, dim, act)

    def act_basis(self, h, m):
        return self.act.get((h, m), {})

    def apply(self, hvec, mvec):
        field = self.field
        out = {}
        for h, ch in hvec.items():
            for m, cm in mvec.items():
                saxpy(field, out, field.mul(ch, cm), self.act_basis(h, m))
        return out

    def __repr__(self):
        return "ModuleStruct(H dim %d on carrier dim %d)" % (self.h_dim, self.dim)


class ComoduleStruct:
    """A right coaction rho: M -> M (x) H, rows indexed by the carrier."""

    def __init__(self, field, h_dim, dim, rho):
        self.field = field
        self.h_dim = h_dim
        self.dim = dim
        self.rho = tuple(
            {mh: field.coerce(c) for mh, c in row.items()
             if field.coerce(c) != field.zero}
            for row in rho)

    def coact_basis(self, m):
        return self.rho[m]

    def coact(self, mvec):
        field = self.field
        out = {}
        for m, c in mvec.items():
            saxpy(field, out, c, self.rho[m])
        return out

    def iterated(self, m, legs):
        """(rho (x) id^{legs-1}) ... rho on e_m: keys (m', h_1, ..., h_legs)."""
        field = self.field
        cur = {(m,): field.one}
        for _ in range(legs):
            nxt = {}
            for key, c in cur.items():
                for (m2, h), d in self.rho[key[0]].items():
                    saxpy(field, nxt, field.one,
                          {(m2, h) + key[1:]: field.mul(c, d)})
            cur = nxt
        return cur

    def as_linmap(self):
        field = self.field
        cols = []
        for m in range(self.dim):
            cols.append({m2 * self.h_dim + h: c
                         for (m2, h), c in self.rho[m].items()})
        return linmap_from_cols(field, cols, self.dim * self.h_dim,
                                src="M", tgt="M(x)H")

    def __repr__(self):
        return "ComoduleStruct(carrier dim %d over H dim %d)" % (self.dim,
                                                                 self.h_dim)


class YDModule:
    """A module-and-comodule over one bialgebra."""

    def __init__(self, H, dim, action, coaction):
        self.H = H
        self.dim = dim
        self.action = action
        self.coaction = coaction


class YDModuleAlgebra(YDModule):
    """An algebra carried by a Yetter-Drinfeld module."""

    def __init__(self, H, A, action, coaction, graded=None):
        super().__init__(H, A.dim, action, coaction)
        self.A = A
        self.graded = graded


# ---------------------------------------------------------------------------
# pairwise tensor helpers (dicts keyed by index tuples)
# ---------------------------------------------------------------------------

def _mul_keyed(alg, x, y, slot_count):
    """Componentwise product of slot_count-tuple-keyed dicts over one algebra.

    Returns None if a needed product is truncated away.
    """
    field = alg.field
    out = {}
    for kx, cx in x.items():
        for ky, cy in y.items():
            parts = []
            for a, b in zip(kx, ky):
                p = alg.mul_basis(a, b)
                if p is None:
                    return None
                parts.append(p)
            coeff = field.mul(cx, cy)
            acc = {(): coeff}
            for p in parts:
                nxt = {}
                for key, c in acc.items():
                    for k, d in p.items():
                        saxpy(field, nxt, field.one,
                              {key + (k,): field.mul(c, d)})
                acc = nxt
            for key, c in acc.items():
                saxpy(field, out, field.one, {key: c})
    return out


def _delta_pairs(B, hvec):
    """Coproduct of a sparse vector as {(h1, h2): c}."""
    return B.coalg.comul_vec(hvec)


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def check_bialgebra(B):
    """Bialgebra axioms, plus antipode axioms when an antipode is present."""
    chk = Checker("check-bialgebra")
    field = B.field
    chk.report.extend(check_algebra(B.alg), prefix="alg-")
    chk.report.extend(check_coalgebra(B.coalg), prefix="coalg-")
    alg, coalg = B.alg, B.coalg

    def delta_mult():
        for i, j in itertools.product(range(B.dim), repeat=2):
            prod = alg.mul_basis(i, j)
            if prod is None:
                yield "skip"
                continue
            lhs = coalg.comul_vec(prod)
            rhs = _mul_keyed(alg, coalg.comul[i], coalg.comul[j], 2)
            if rhs is None:
                yield "skip"
                continue
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([i, j], _strres(field, res))
            else:
                yield True, None

    chk.run("delta-multiplicative", delta_mult())
    one = alg.unit
    d1 = coalg.comul_vec(one)
    oneone = {}
    for i, c in one.items():
        for j, d in one.items():
            oneone[(i, j)] = field.mul(c, d)
    chk.record("delta-unital", not ssub(field, d1, oneone),
               witness([], _strres(field, ssub(field, d1, oneone))))

    def eps_mult():
        for i, j in itertools.product(range(B.dim), repeat=2):
            prod = alg.mul_basis(i, j)
            if prod is None:
                yield "skip"
                continue
            lhs = coalg.counit_vec(prod)
            rhs = field.mul(coalg.counit[i], coalg.counit[j])
            if lhs != rhs:
                yield False, witness([i, j], [field.sub(lhs, rhs)], field)
            else:
                yield True, None

    chk.run("eps-multiplicative", eps_mult())
    chk.record("eps-unital", coalg.counit_vec(one) == field.one,
               witness([], [coalg.counit_vec(one)], field))

    if B.antipode is not None:
        S = B.antipode

        def ant(side):
            for i in range(B.dim):
                acc = {}
                for (a, b), c in coalg.comul[i].items():
                    if side == "left":
                        term = alg.multiply(S.col(a), {b: field.one})
                    else:
                        term = alg.multiply({a: field.one}, S.col(b))
                    saxpy(field, acc, c, term)
                target = sscale(field, coalg.counit[i], one)
                res = ssub(field, acc, target)
                if res:
                    yield False, witness([i], res, field)
                else:
                    yield True, None

        chk.run("antipode-left", ant("left"))
        chk.run("antipode-right", ant("right"))
        if B.antipode_inv is not None:
            Sinv = B.antipode_inv
            ok = (S.matrix.mul(Sinv.matrix) == Matrix.identity(field, B.dim)
                  and Sinv.matrix.mul(S.matrix) == Matrix.identity(field, B.dim))
            chk.record("antipode-inverse", ok)
    return chk.done()


def _strres(field, res):
    return {"residual": {str(k): field.to_str(v) for k, v in sorted(res.items())}}


def check_module_struct(H, dim, action):
    """Plain module axioms: unit acts as identity, action is associative."""
    chk = Checker("check-module")
    field = H.field

    def unit_cases():
        for m in range(dim):
            img = action.apply(H.alg.unit, {m: field.one})
            res = ssub(field, img, {m: field.one})
            yield (not res), witness([m], res, field) if res else None

    chk.run("module-unit", unit_cases())

    def assoc_cases():
        for g, h in itertools.product(range(H.dim), repeat=2):
            prod = H.alg.mul_basis(g, h)
            if prod is None:
                yield "skip"
                continue
            for m in range(dim):
                lhs = action.apply(prod, {m: field.one})
                rhs = action.apply({g: field.one}, action.act_basis(h, m))
                res = ssub(field, lhs, rhs)
                if res:
                    yield False, witness([g, h, m], res, field)
                else:
                    yield True, None

    chk.run("module-assoc", assoc_cases())
    return chk.done()


def check_module_algebra(H, A, action):
    """Module axioms plus h.(ab) = (h1.a)(h2.b) and h.1 = eps(h) 1."""
    chk = Checker("check-module-algebra")
    field = H.field
    chk.report.extend(check_module_struct(H, A.dim, action))

    def mult_cases():
        for h in range(H.dim):
            for a, b in itertools.product(range(A.dim), repeat=2):
                prod = A.mul_basis(a, b)
                if prod is None:
                    yield "skip"
                    continue
                lhs = action.apply({h: field.one}, prod)
                rhs = {}
                skip = False
                for (h1, h2), c in H.coalg.comul[h].items():
                    try:
                        term = A.multiply(action.act_basis(h1, a),
                                          action.act_basis(h2, b))
                    except TruncationOverflow:
                        skip = True
                        break
                    saxpy(field, rhs, c, term)
                if skip:
                    yield "skip"
                    continue
                res = ssub(field, lhs, rhs)
                if res:
                    yield False, witness([h, a, b], res, field)
                else:
                    yield True, None

    chk.run("module-algebra-mult", mult_cases())

    def unit_cases():
        for h in range(H.dim):
            lhs = action.apply({h: field.one}, A.unit)
            rhs = sscale(field, H.coalg.counit[h], A.unit)
            res = ssub(field, lhs, rhs)
            yield (not res), witness([h], res, field) if res else None

    chk.run("module-algebra-unit", unit_cases())
    return chk.done()


def check_comodule_struct(H, dim, coaction):
    """Right comodule axioms: counit law and coassociativity with Delta."""
    chk = Checker("check-comodule")
    field = H.field

    def counit_cases():
        for m in range(dim):
            acc = {}
            for (m2, h), c in coaction.rho[m].items():
                saxpy(field, acc, field.mul(c, H.coalg.counit[h]),
                      {m2: field.one})
            res = ssub(field, acc, {m: field.one})
            yield (not res), witness([m], res, field) if res else None

    chk.run("comodule-counit", counit_cases())

    def coassoc_cases():
        for m in range(dim):
            lhs = {}
            for (m2, h), c in coaction.rho[m].items():
                for (m3, h2), d in coaction.rho[m2].items():
                    saxpy(field, lhs, field.mul(c, d),
                          {(m3, h2, h): field.one})
            rhs = {}
            for (m2, h), c in coaction.rho[m].items():
                for (h1, h2), d in H.coalg.comul[h].items():
                    saxpy(field, rhs, field.mul(c, d),
                          {(m2, h1, h2): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([m], _strres(field, res))
            else:
                yield True, None

    chk.run("comodule-coassoc", coassoc_cases())
    return chk.done()


def check_comodule_algebra_op(H, A, coaction):
    """Comodule axioms plus rho(ab) = a0 b0 (x) b1 a1 and rho(1) = 1 (x) 1."""
    chk = Checker("check-comodule-algebra-op")
    field = H.field
    chk.report.extend(check_comodule_struct(H, A.dim, coaction))

    def mult_cases():
        for a, b in itertools.product(range(A.dim), repeat=2):
            prod = A.mul_basis(a, b)
            if prod is None:
                yield "skip"
                continue
            lhs = coaction.coact(prod)
            rhs = {}
            skip = False
            for (a0, a1), c in coaction.rho[a].items():
                for (b0, b1), d in coaction.rho[b].items():
                    ab0 = A.mul_basis(a0, b0)
                    hh = H.alg.mul_basis(b1, a1)
                    if ab0 is None or hh is None:
                        skip = True
                        break
                    coeff = field.mul(c, d)
                    for m, cm in ab0.items():
                        for k, ck in hh.items():
                            saxpy(field, rhs, field.mul(coeff, field.mul(cm, ck)),
                                  {(m, k): field.one})
                if skip:
                    break
            if skip:
                yield "skip"
                continue
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([a, b], _strres(field, res))
            else:
                yield True, None

    chk.run("comodule-algebra-op-mult", mult_cases())
    lhs = coaction.coact(A.unit)
    rhs = {}
    for i, c in A.unit.items():
        for j, d in H.alg.unit.items():
            rhs[(i, j)] = field.mul(c, d)
    res = ssub(field, lhs, rhs)
    chk.record("comodule-algebra-unit", not res, witness([], _strres(field, res)))
    return chk.done()


def check_yetter_drinfeld(H, dim, action, coaction):
    """The compatibility between action and coaction, on all basis pairs."""
    chk = Checker("check-yetter-drinfeld")
    field = H.field
    chk.report.extend(check_module_struct(H, dim, action))
    chk.report.extend(check_comodule_struct(H, dim, coaction))

    def yd_cases():
        for h in range(H.dim):
            for m in range(dim):
                lhs = {}
                skip = False
                for (h1, h2), c in H.coalg.comul[h].items():
                    for (m0, m1), d in coaction.rho[m].items():
                        left = action.act_basis(h1, m0)
                        prod = H.alg.mul_basis(h2, m1)
                        if prod is None:
                            skip = True
                            break
                        coeff = field.mul(c, d)
                        for mm, cm in left.items():
                            for k, ck in prod.items():
                                saxpy(field, lhs,
                                      field.mul(coeff, field.mul(cm, ck)),
                                      {(mm, k): field.one})
                    if skip:
                        break
                if skip:
                    yield "skip"
                    continue
                rhs = {}
                for (h1, h2), c in H.coalg.comul[h].items():
                    moved = action.act_basis(h2, m)
                    for mm, cm in moved.items():
                        for (m0, m1), d in coaction.rho[mm].items():
                            prod = H.alg.mul_basis(m1, h1)
                            if prod is None:
                                skip = True
                                break
                            coeff = field.mul(c, field.mul(cm, d))
                            for k, ck in prod.items():
                                saxpy(field, rhs, field.mul(coeff, ck),
                                      {(m0, k): field.one})
                        if skip:
                            break
                    if skip:
                        break
                if skip:
                    yield "skip"
                    continue
                res = ssub(field, lhs, rhs)
                if res:
                    yield False, witness([h, m], _strres(field, res))
                else:
                    yield True, None

    chk.run("yd-compatibility", yd_cases())
    return chk.done()


def braiding(M, N):
    """The map sigma(m (x) n) = n_<0> (x) n_<1>.m as a LinMap.

    M and N are YD modules over the same bialgebra.  When the bialgebra
    has an antipode the matrix is checked invertible.
    """
    if M.H is not N.H:
        raise AlgebraError("braiding needs modules over one bialgebra")
    field = M.H.field
    cols = []
    for m in range(M.dim):
        for n in range(N.dim):
            col = {}
            for (n0, n1), c in N.coaction.rho[n].items():
                img = M.action.act_basis(n1, m)
                for m2, d in img.items():
                    saxpy(field, col, field.mul(c, d),
                          {n0 * M.dim + m2: field.one})
            cols.append(col)
    lm = linmap_from_cols(field, cols, N.dim * M.dim, src="M(x)N", tgt="N(x)M")
    if M.H.antipode is not None and invert(lm.matrix) is None:
        raise AlgebraError("braiding not invertible despite antipode")
    return lm


def check_braided_commutative(A):
    """b_<0> (b_<1>.a) = a b on all basis pairs of a YD module algebra."""
    chk = Checker("check-braided-commutative")
    field = A.H.field

    def cases():
        for a, b in itertools.product(range(A.A.dim), repeat=2):
            prod = A.A.mul_basis(a, b)
            if prod is None:
                yield "skip"
                continue
            lhs = {}
            skip = False
            for (b0, b1), c in A.coaction.rho[b].items():
                moved = A.action.act_basis(b1, a)
                try:
                    term = A.A.multiply({b0: field.one}, moved)
                except TruncationOverflow:
                    skip = True
                    break
                saxpy(field, lhs, c, term)
            if skip:
                yield "skip"
                continue
            res = ssub(field, lhs, prod)
            if res:
                yield False, witness([a, b], res, field)
            else:
                yield True, None

    chk.run("eq45-braided-commutative", cases())
    return chk.done()


def check_yd_module_algebra(A):
    """All four structure checks for an algebra in the YD category."""
    rep = Report("check-yd-module-algebra")
    rep.extend(check_module_algebra(A.H, A.A, A.action))
    rep.extend(check_comodule_algebra_op(A.H, A.A, A.coaction))
    yd = check_yetter_drinfeld(A.H, A.dim, A.action, A.coaction)
    for it in yd.items:
        if it.axiom == "yd-compatibility":
            rep.items.append(it)
    rep.extend(check_braided_commutative(A))
    return rep


# ---------------------------------------------------------------------------
# quasitriangular / coquasitriangular derived structures
# ---------------------------------------------------------------------------

def _pairvec(field, R):
    if isinstance(R, dict):
        return {k: field.coerce(v) for k, v in R.items()
                if field.coerce(v) != field.zero}
    out = {}
    for i, row in enumerate(R):
        for j, c in enumerate(row):
            c = field.coerce(c)
            if c != field.zero:
                out[(i, j)] = c
    return out


def _embed(pvec, slots, positions):
    """Place a pair vector into chosen slots of a slots-tuple key."""
    out = {}
    for (i, j), c in pvec.items():
        key = [None] * slots
        key[positions[0]] = i
        key[positions[1]] = j
        out[tuple(key)] = c
    return out


def _fill_units(field, d, unit):
    """Expand None slots of keyed dicts into the unit vector."""
    out = {}
    unit_items = list(unit.items())
    for key, c in d.items():
        cur = {(): c}
        for slot in key:
            nxt = {}
            if slot is None:
                for kk, cc in cur.items():
                    for u, cu in unit_items:
                        saxpy(field, nxt, field.one,
                              {kk + (u,): field.mul(cc, cu)})
            else:
                for kk, cc in cur.items():
                    nxt[kk + (slot,)] = cc
            cur = nxt
        for kk, cc in cur.items():
            saxpy(field, out, field.one, {kk: cc})
    return out


def _mul_embedded(alg, x, y, slots, unit):
    """Product of two partially-supported keyed dicts, None slots read as 1."""
    return _mul_keyed(alg, _fill_units(alg.field, x, unit),
                      _fill_units(alg.field, y, unit), slots)


def check_quasitriangular(H, R):
    """Intertwiner, hexagons, normalization and invertibility of R."""
    chk = Checker("check-quasitriangular")
    field = H.field
    Rv = _pairvec(field, R)
    alg, coalg = H.alg, H.coalg
    one = alg.unit

    lhsn = {}
    rhsn = {}
    for (i, j), c in Rv.items():
        saxpy(field, lhsn, field.mul(c, coalg.counit[i]), {j: field.one})
        saxpy(field, rhsn, field.mul(c, coalg.counit[j]), {i: field.one})
    chk.record("qt-normalized",
               not ssub(field, lhsn, one) and not ssub(field, rhsn, one))

    def intertwine():
        for h in range(H.dim):
            lhs = _mul_keyed(alg, Rv, coalg.comul[h], 2)
            dop = {(b, a): c for (a, b), c in coalg.comul[h].items()}
            rhs = _mul_keyed(alg, dop, Rv, 2)
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([h], _strres(field, res))
            else:
                yield True, None

    chk.run("qt-intertwine", intertwine())

    lhs1 = {}
    for (i, j), c in Rv.items():
        for (i1, i2), d in coalg.comul[i].items():
            saxpy(field, lhs1, field.mul(c, d), {(i1, i2, j): field.one})
    rhs1 = _mul_embedded(alg, _embed(Rv, 3, (0, 2)), _embed(Rv, 3, (1, 2)),
                         3, one)
    chk.record("qt-hexagon-1", not ssub(field, lhs1, rhs1))

    lhs2 = {}
    for (i, j), c in Rv.items():
        for (j1, j2), d in coalg.comul[j].items():
            saxpy(field, lhs2, field.mul(c, d), {(i, j1, j2): field.one})
    rhs2 = _mul_embedded(alg, _embed(Rv, 3, (0, 2)), _embed(Rv, 3, (0, 1)),
                         3, one)
    chk.record("qt-hexagon-2", not ssub(field, lhs2, rhs2))

    from .algebra import tensor_algebra
    HH = tensor_algebra(alg, alg)
    flat = {i * H.dim + j: c for (i, j), c in Rv.items()}
    lm = HH.left_mult_matrix(flat)
    rm = HH.right_mult_matrix(flat)
    from .exactlin import solve_linear
    unit_flat = sparse_to_dense(field, HH.unit, HH.dim)
    left_inv = solve_linear(lm, unit_flat)
    right_inv = solve_linear(rm, unit_flat)
    chk.record("qt-invertible", left_inv is not None and right_inv is not None)
    return chk.done()


def coaction_from_qt(H, R, action):
    """The coaction a -> sum R2.a (x) R1 induced by a quasitriangular R."""
    qt = check_quasitriangular(H, R)
    if not qt.ok:
        raise AlgebraError("R is not quasitriangular: %s" % qt.summary())
    field = H.field
    Rv = _pairvec(field, R)
    rho = []
    for a in range(action.dim):
        row = {}
        for (r1, r2), c in Rv.items():
            img = action.act_basis(r2, a)
            for m, d in img.items():
                saxpy(field, row, field.mul(c, d), {(m, r1): field.one})
        rho.append(row)
    return ComoduleStruct(field, H.dim, action.dim, rho)


def check_coquasitriangular(H, sigma):
    """The dual-quasitriangular axioms for a bilinear form on H."""
    chk = Checker("check-coquasitriangular")
    field = H.field
    alg, coalg = H.alg, H.coalg

    def s(i, j):
        return sigma.entries[i][j]

    def sv(xvec, yvec):
        acc = field.zero
        for i, c in xvec.items():
            for j, d in yvec.items():
                acc = field.add(acc, field.mul(field.mul(c, d), s(i, j)))
        return acc

    def norm_cases():
        for a in range(H.dim):
            v1 = sv(alg.unit, {a: field.one})
            v2 = sv({a: field.one}, alg.unit)
            ok = v1 == coalg.counit[a] and v2 == coalg.counit[a]
            yield ok, witness([a], [v1, v2], field) if not ok else None

    chk.run("cqt-normalized", norm_cases())

    def mult1():
        for a, b, c in itertools.product(range(H.dim), repeat=3):
            prod = alg.mul_basis(a, b)
            if prod is None:
                yield "skip"
                continue
            lhs = sv(prod, {c: field.one})
            rhs = field.zero
            for (c1, c2), d in coalg.comul[c].items():
                rhs = field.add(rhs, field.mul(d, field.mul(s(a, c1), s(b, c2))))
            ok = lhs == rhs
            yield ok, witness([a, b, c], [field.sub(lhs, rhs)], field) \
                if not ok else None

    chk.run("cqt-mult-1", mult1())

    def mult2():
        for a, b, c in itertools.product(range(H.dim), repeat=3):
            prod = alg.mul_basis(b, c)
            if prod is None:
                yield "skip"
                continue
            lhs = sv({a: field.one}, prod)
            rhs = field.zero
            for (a1, a2), d in coalg.comul[a].items():
                rhs = field.add(rhs, field.mul(d, field.mul(s(a1, c), s(a2, b))))
            ok = lhs == rhs
            yield ok, witness([a, b, c], [field.sub(lhs, rhs)], field) \
                if not ok else None

    chk.run("cqt-mult-2", mult2())

    def intertwine():
        for a, b in itertools.product(range(H.dim), repeat=2):
            lhs = {}
            rhs = {}
            for (a1, a2), c in coalg.comul[a].items():
                for (b1, b2), d in coalg.comul[b].items():
                    coeff = field.mul(c, d)
                    t1 = alg.mul_basis(b1, a1)
                    if t1 is not None:
                        saxpy(field, lhs, field.mul(coeff, s(a2, b2)), t1)
                    t2 = alg.mul_basis(a2, b2)
                    if t2 is not None:
                        saxpy(field, rhs, field.mul(coeff, s(a1, b1)), t2)
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([a, b], res, field)
            else:
                yield True, None

    chk.run("cqt-intertwine", intertwine())

    # convolution invertibility: solve for sigma_bar on H (x) H
    n = H.dim
    rows = []
    rhs_vec = []
    for a, b in itertools.product(range(n), repeat=2):
        row = [field.zero] * (n * n)
        for (a1, a2), c in coalg.comul[a].items():
            for (b1, b2), d in coalg.comul[b].items():
                coeff = field.mul(field.mul(c, d), s(a2, b2))
                row[a1 * n + b1] = field.add(row[a1 * n + b1], coeff)
        rows.append(row)
        rhs_vec.append(field.mul(coalg.counit[a], coalg.counit[b]))
    from .exactlin import solve_linear
    sol = solve_linear(Matrix(field, rows), rhs_vec)
    ok = sol is not None
    if ok:
        # verify it is two sided
        for a, b in itertools.product(range(n), repeat=2):
            acc = field.zero
            for (a1, a2), c in coalg.comul[a].items():
                for (b1, b2), d in coalg.comul[b].items():
                    acc = field.add(acc, field.mul(
                        field.mul(c, d),
                        field.mul(s(a1, b1), sol[a2 * n + b2])))
            if acc != field.mul(coalg.counit[a], coalg.counit[b]):
                ok = False
                break
    chk.record("cqt-conv-invertible", ok)
    return chk.done()


def action_from_cqt(H, sigma, coaction):
    """The action h.a = sigma(a_<1> (x) h) a_<0> induced by a cqt form.

    Requires sigma coquasitriangular, the coaction a comodule-algebra
    structure for H^op, and the compatibility
    a b = sigma(a_<1> (x) b_<1>) b_<0> a_<0> on the carrier algebra.
    """
    cq = check_coquasitriangular(H, sigma)
    if not cq.ok:
        raise AlgebraError("form is not coquasitriangular: %s" % cq.summary())
    field = H.field
    act = {}
    for h in range(H.dim):
        for a in range(coaction.dim):
            out = {}
            for (a0, a1), c in coaction.rho[a].items():
                coeff = field.mul(c, sigma.entries[a1][h])
                saxpy(field, out, coeff, {a0: field.one})
            act[(h, a)] = out
    return ModuleStruct(field, H.dim, coaction.dim, act)


def check_cqt_compatibility(A, sigma, coaction):
    """a b = sigma(a1 (x) b1) b0 a0 on all basis pairs of A."""
    chk = Checker("check-cqt-compatibility")
    field = A.field

    def cases():
        for a, b in itertools.product(range(A.dim), repeat=2):
            prod = A.mul_basis(a, b)
            if prod is None:
                yield "skip"
                continue
            rhs = {}
            for (a0, a1), c in coaction.rho[a].items():
                for (b0, b1), d in coaction.rho[b].items():
                    coeff = field.mul(field.mul(c, d),
                                      sigma.entries[a1][b1])
                    term = A.mul_basis(b0, a0)
                    if term is None:
                        continue
                    saxpy(field, rhs, coeff, term)
            res = ssub(field, prod, rhs)
            if res:
                yield False, witness([a, b], res, field)
            else:
                yield True, None

    chk.run("cqt-compatibility", cases())
    return chk.done()


# ---------------------------------------------------------------------------
# braided symmetric algebra of a YD module
# ---------------------------------------------------------------------------

def braided_symmetric(V, D, verify=True):
    """S^b(V): the tensor algebra modulo v (x) w - w_<0> (x) w_<1>.v.

    Returns a YDModuleAlgebra whose carrier is the flattened truncated
    graded algebra; the (co)action is extended degreewise and checked to
    preserve the defining ideal before being pushed to the quotient.
    """
    H = V.H
    field = H.field
    n = V.dim
    relations = []
    for v, w in itertools.product(range(n), repeat=2):
        vec = {v * n + w: field.one}
        for (w0, w1), c in V.coaction.rho[w].items():
            img = V.action.act_basis(w1, v)
            for m, d in img.items():
                saxpy(field, vec, field.neg(field.mul(c, d)),
                      {w0 * n + m: field.one})
        relations.append(sparse_to_dense(field, vec, n * n))
    G = graded_algebra(field, n, relations, D, verify=verify)

    def act_word(h, word):
        """Free action of basis element h on a word, sparse over words."""
        legs = len(word)
        if legs == 0:
            return {0: H.coalg.counit[h]}
        out = {}
        for key, c in H.coalg.iterated_comul(h, legs).items():
            parts = [V.action.act_basis(key[t], word[t]) for t in range(legs)]
            acc = {0: c}
            for p in parts:
                nxt = {}
                for widx, cw in acc.items():
                    for m, cm in p.items():
                        saxpy(field, nxt, field.one,
                              {widx * n + m: field.mul(cw, cm)})
                acc = nxt
            saxpy(field, out, field.one, acc)
        return out

    def coact_word(word):
        """Free coaction of a word: keys (word_index, h), H legs reversed."""
        legs = len(word)
        if legs == 0:
            return {(0, u): c for u, c in H.alg.unit.items()}
        # accumulate the carrier word index and the H product, reversed
        cur = {}
        first = V.coaction.rho[word[0]]
        for (m0, h), c in first.items():
            cur[(m0, (h,))] = c
        for t in range(1, legs):
            nxt = {}
            for (widx, hs), c in cur.items():
                for (m0, h), d in V.coaction.rho[word[t]].items():
                    key = (widx * n + m0, (h,) + hs)
                    saxpy(field, nxt, field.one, {key: field.mul(c, d)})
            cur = nxt
        out = {}
        for (widx, hs), c in cur.items():
            prod = {hs[0]: field.one}
            for h in hs[1:]:
                prod = H.alg.multiply(prod, {h: field.one})
            for k, ck in prod.items():
                saxpy(field, out, field.one, {(widx, k): field.mul(c, ck)})
        return out

    # descent: the ideal must be stable under action and coaction
    if verify:
        for d in range(2, D + 1):
            qs = G.pieces[d]
            for rel in qs.relation_span:
                relsp = dense_to_sparse(field, rel)
                for h in range(H.dim):
                    img = {}
                    for widx, c in relsp.items():
                        word = _decode_word(widx, n, d)
                        saxpy(field, img, c, act_word(h, word))
                    if G.pieces[d].project_sparse(img):
                        raise AlgebraError(
                            "action does not preserve the ideal in degree %d" % d)
                img = {}
                for widx, c in relsp.items():
                    word = _decode_word(widx, n, d)
                    for (w2, h), cc in coact_word(word).items():
                        saxpy(field, img, field.mul(c, cc),
                              {(w2, h): field.one})
                bad = False
                byh = {}
                for (w2, h), cc in img.items():
                    byh.setdefault(h, {})[w2] = cc
                for h, vec in byh.items():
                    if G.pieces[d].project_sparse(vec):
                        bad = True
                if bad:
                    raise AlgebraError(
                        "coaction does not preserve the ideal in degree %d" % d)

    flat = G.as_algebra()
    act = {}
    rho = []
    for d in range(D + 1):
        off = G.offset(d)
        for k in range(G.dims[d]):
            word = G.word(d, k)
            for h in range(H.dim):
                img = act_word(h, word)
                proj = G.pieces[d].project_sparse(img)
                act[(h, off + k)] = {off + m: c for m, c in proj.items()}
            row = {}
            for (w2, h), c in coact_word(word).items():
                for m, cm in G.pieces[d].project_sparse({w2: c}).items():
                    saxpy(field, row, field.one, {(off + m, h): cm})
            rho.append(row)
    action = ModuleStruct(field, H.dim, flat.dim, act)
    coaction = ComoduleStruct(field, H.dim, flat.dim, rho)
    return YDModuleAlgebra(H, flat, action, coaction, graded=G)


def _decode_word(widx, n, length):
    out = []
    for _ in range(length):
        out.append(widx % n)
        widx //= n
    return tuple(reversed(out))
