"""Weak bialgebras and weak Hopf algebras, the target counital projection,
its quotient coalgebra, and bicoalgebroids.

A bicoalgebroid reverses every arrow in the bialgebroid axioms: the base
algebra becomes a base coalgebra C, source and target become a coalgebra
map alpha and an anti-coalgebra map beta into C, the coproduct becomes a
product mu on the cotensor H box_C H, and the counit becomes a unit
eta: C -> H.  The axiom correspondence exercised by the test suite is
recorded in DUAL_AXIOM_MAP.  A weak Hopf algebra with bijective antipode
yields a bicoalgebroid over C = H / ker(eps_t) with alpha the canonical
surjection, beta its composite with the inverse antipode, mu the
restricted multiplication and eta induced by eps_t.
"""

import itertools

from .exactlin import (Matrix, invert, kernel_basis, quotient_space,
                       solve_linear, rref_sparse, reduce_sparse, saxpy,
                       ssub, sscale, sparse_to_dense, dense_to_sparse)
from .algebra import (AlgebraError, FinDimAlgebra, FinDimCoalgebra, LinMap,
                      check_algebra, check_coalgebra, check_map,
                      linmap_from_cols)
from .bimodtensor import cotensor
from .reports import Checker, Report, witness


# One dual bicoalgebroid axiom for each bialgebroid axiom, under the formal
# replacement Delta <-> mu, eps <-> eta, s <-> alpha, t <-> beta,
# tensor-over-A <-> cotensor-over-C.
DUAL_AXIOM_MAP = {
    "ae-s-algebra-map": "alpha-coalgebra-map",
    "ae-t-anti-algebra-map": "beta-anti-coalgebra-map",
    "ae-st-commute": "BC1",
    "B1-coassoc": "mu-associative",
    "B1-counit": "BC3-unit",
    "B1-delta-bimodule": "mu-bicomodule-map",
    "B1-eps-bimodule": "eta-bicomodule-map",
    "B2-membership": "D1",
    "B2-multiplicative": "BC2b",
    "B2-unital": "BC2a",
    "B3-eps-unital": "BC3-eta-counit",
    "B3-eq25": "BC3-eta-delta",
}


class WeakHopfData:
    """Algebra and coalgebra on one space with a (candidate) antipode."""

    def __init__(self, alg, coalg, antipode=None, antipode_inv=None):
        if alg.dim != coalg.dim or alg.field != coalg.field:
            raise AlgebraError("algebra and coalgebra do not match")
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
        return "WeakHopfData(dim=%d over %s)" % (self.dim, self.field.kind)


class BicoalgebroidData:
    """Coalgebra H over a base coalgebra C with alpha, beta, mu, eta.

    mu is stored against the canonical computed cotensor basis of
    H box_C H (a matrix with one column per basis vector); the basis
    itself is kept alongside so inputs can be validated against it.
    """

    def __init__(self, H, C, alpha, beta, mu, eta, cotensor_basis):
        self.H = H
        self.C = C
        self.alpha = alpha
        self.beta = beta
        self.mu = mu
        self.eta = eta
        self.cotensor_basis = [tuple(b) for b in cotensor_basis]

    @property
    def field(self):
        return self.H.field

    def __repr__(self):
        return "BicoalgebroidData(H dim %d over C dim %d)" % (self.H.dim,
                                                              self.C.dim)


# ---------------------------------------------------------------------------
# groupoid fixtures
# ---------------------------------------------------------------------------

def groupoid_algebra(field, objects, arrows, src, tgt, comp, unit_of,
                     inverse):
    """The weak Hopf algebra of a finite groupoid.

    Basis the arrows, product composition-or-zero, grouplike coproduct,
    counit 1, antipode the arrow inverse.  The groupoid data is validated
    first (partial associativity, units, inverses).
    """
    index = {a: i for i, a in enumerate(arrows)}
    for a in arrows:
        if src[a] not in objects or tgt[a] not in objects:
            raise AlgebraError("arrow %r has undeclared endpoints" % (a,))
    for o in objects:
        e = unit_of[o]
        if src[e] != o or tgt[e] != o:
            raise AlgebraError("unit of %r has wrong endpoints" % (o,))
    for (a, b), c in comp.items():
        if src[a] != tgt[b]:
            raise AlgebraError("composite %r . %r not composable" % (a, b))
        if src[c] != src[b] or tgt[c] != tgt[a]:
            raise AlgebraError("composite %r . %r has wrong endpoints"
                               % (a, b))
    for a in arrows:
        if comp.get((a, unit_of[src[a]])) != a or \
                comp.get((unit_of[tgt[a]], a)) != a:
            raise AlgebraError("units are not neutral at %r" % (a,))
        ainv = inverse[a]
        if comp.get((a, ainv)) != unit_of[tgt[a]] or \
                comp.get((ainv, a)) != unit_of[src[a]]:
            raise AlgebraError("inverse law fails at %r" % (a,))
    for a, b in itertools.product(arrows, repeat=2):
        for c in arrows:
            if src[b] == tgt[c] and src[a] == tgt[b]:
                if comp[(comp[(a, b)], c)] != comp[(a, comp[(b, c)])]:
                    raise AlgebraError("composition not associative")

    n = len(arrows)
    mul = {}
    for a in arrows:
        for b in arrows:
            if src[a] == tgt[b]:
                mul[(index[a], index[b])] = {index[comp[(a, b)]]: field.one}
            else:
                mul[(index[a], index[b])] = {}
    unit = {index[unit_of[o]]: field.one for o in objects}
    names = [str(a) for a in arrows]
    alg = FinDimAlgebra(field, n, mul, unit, names=names)
    comul = [{(i, i): field.one} for i in range(n)]
    coalg = FinDimCoalgebra(field, n, comul, [field.one] * n, names=names)
    smat = [[field.one if r == index[inverse[a]] else field.zero
             for a in arrows] for r in range(n)]
    S = LinMap(Matrix(field, smat), "H", "H")
    return WeakHopfData(alg, coalg, S, S)


def pair_groupoid(field, n):
    """Arrows (i, j): j -> i with (i, j)(j, k) = (i, k); isomorphic to M_n."""
    objects = list(range(n))
    arrows = [(i, j) for i in range(n) for j in range(n)]
    src = {(i, j): j for i, j in arrows}
    tgt = {(i, j): i for i, j in arrows}
    comp = {((i, j), (j2, k)): (i, k)
            for i, j in arrows for j2, k in arrows if j == j2}
    unit_of = {o: (o, o) for o in objects}
    inverse = {(i, j): (j, i) for i, j in arrows}
    return groupoid_algebra(field, objects, arrows, src, tgt, comp,
                            unit_of, inverse)


def group_weak_hopf(field, B):
    """Repackage an ordinary Hopf fixture as WeakHopfData."""
    return WeakHopfData(B.alg, B.coalg, B.antipode, B.antipode_inv)


def discrete_groupoid(field, n):
    """n objects, identity arrows only: the function algebra k^n."""
    objects = list(range(n))
    arrows = objects[:]
    src = {o: o for o in objects}
    tgt = {o: o for o in objects}
    comp = {(o, o): o for o in objects}
    unit_of = {o: o for o in objects}
    inverse = {o: o for o in objects}
    return groupoid_algebra(field, objects, arrows, src, tgt, comp,
                            unit_of, inverse)


# ---------------------------------------------------------------------------
# weak bialgebra / weak Hopf checks
# ---------------------------------------------------------------------------

def _delta1(d):
    """Delta(1) as a sparse pair vector."""
    return d.coalg.comul_vec(d.alg.unit)


def check_weak_bialgebra(d):
    """Multiplicative coproduct plus the weak counit and Delta(1) axioms."""
    chk = Checker("check-weak-bialgebra")
    field = d.field
    chk.report.extend(check_algebra(d.alg), prefix="alg-")
    chk.report.extend(check_coalgebra(d.coalg), prefix="coalg-")
    alg, coalg = d.alg, d.coalg

    def delta_mult():
        for i, j in itertools.product(range(d.dim), repeat=2):
            lhs = coalg.comul_vec(alg.mul_basis(i, j))
            rhs = {}
            for (a, b), c in coalg.comul[i].items():
                for (e, f), c2 in coalg.comul[j].items():
                    coeff = field.mul(c, c2)
                    for m, cm in alg.mul_basis(a, e).items():
                        for k, ck in alg.mul_basis(b, f).items():
                            saxpy(field, rhs,
                                  field.mul(coeff, field.mul(cm, ck)),
                                  {(m, k): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([i, j],
                                     {str(k): field.to_str(v)
                                      for k, v in sorted(res.items())})
            else:
                yield True, None

    chk.run("delta-multiplicative", delta_mult())

    def eps_weak():
        for x, y, z in itertools.product(range(d.dim), repeat=3):
            xyz = alg.multiply(alg.mul_basis(x, y), {z: field.one})
            lhs = coalg.counit_vec(xyz)
            mid = field.zero
            alt = field.zero
            for (y1, y2), c in coalg.comul[y].items():
                e1 = coalg.counit_vec(alg.mul_basis(x, y1))
                e2 = coalg.counit_vec(alg.mul_basis(y2, z))
                mid = field.add(mid, field.mul(c, field.mul(e1, e2)))
                e1 = coalg.counit_vec(alg.mul_basis(x, y2))
                e2 = coalg.counit_vec(alg.mul_basis(y1, z))
                alt = field.add(alt, field.mul(c, field.mul(e1, e2)))
            if lhs != mid:
                yield False, witness([x, y, z], [field.sub(lhs, mid)], field,
                                     "eps(x y1) eps(y2 z)")
            elif lhs != alt:
                yield False, witness([x, y, z], [field.sub(lhs, alt)], field,
                                     "eps(x y2) eps(y1 z)")
            else:
                yield True, None

    chk.run("weak-eps-axiom", eps_weak())

    one2 = _delta1(d)
    lhs = {}
    for (a, b), c in one2.items():
        for (b1, b2), c2 in coalg.comul[b].items():
            saxpy(field, lhs, field.mul(c, c2), {(a, b1, b2): field.one})
    # (Delta(1) (x) 1)(1 (x) Delta(1)) multiplies the middle legs
    rhs1 = {}
    for (a, b), c in one2.items():
        for (e, f), c2 in one2.items():
            coeff = field.mul(c, c2)
            for m, cm in alg.mul_basis(b, e).items():
                saxpy(field, rhs1, field.mul(coeff, cm),
                      {(a, m, f): field.one})
    # (1 (x) Delta(1))(Delta(1) (x) 1): legs (1.a, e.b, f.1)
    rhs2 = {}
    for (e, f), c2 in one2.items():
        for (a, b), c in one2.items():
            coeff = field.mul(c2, c)
            for m, cm in alg.mul_basis(e, b).items():
                saxpy(field, rhs2, field.mul(coeff, cm),
                      {(a, m, f): field.one})
    ok1 = not ssub(field, lhs, rhs1)
    ok2 = not ssub(field, lhs, rhs2)
    chk.record("weak-delta1-axiom", ok1 and ok2,
               note="(Delta (x) id) Delta(1) against both bracketings")
    return chk.done()


def check_weak_hopf(d):
    """The three weak antipode axioms and bijectivity."""
    chk = Checker("check-weak-hopf")
    field = d.field
    wb = check_weak_bialgebra(d)
    chk.report.extend(wb)
    if d.antipode is None:
        chk.record("antipode-present", False)
        return chk.done()
    S = d.antipode
    alg, coalg = d.alg, d.coalg
    one2 = _delta1(d)

    def eps_t_vec(h):
        out = {}
        for (a, b), c in one2.items():
            e = coalg.counit_vec(alg.multiply({a: field.one}, h))
            saxpy(field, out, field.mul(c, e), {b: field.one})
        return out

    def eps_s_vec(h):
        out = {}
        for (a, b), c in one2.items():
            e = coalg.counit_vec(alg.multiply(h, {b: field.one}))
            saxpy(field, out, field.mul(c, e), {a: field.one})
        return out

    def left():
        for h in range(d.dim):
            acc = {}
            for (h1, h2), c in coalg.comul[h].items():
                saxpy(field, acc, c,
                      alg.multiply({h1: field.one}, S.col(h2)))
            res = ssub(field, acc, eps_t_vec({h: field.one}))
            yield (not res), witness([h], res, field) if res else None

    chk.run("wh-antipode-left", left())

    def right():
        for h in range(d.dim):
            acc = {}
            for (h1, h2), c in coalg.comul[h].items():
                saxpy(field, acc, c,
                      alg.multiply(S.col(h1), {h2: field.one}))
            res = ssub(field, acc, eps_s_vec({h: field.one}))
            yield (not res), witness([h], res, field) if res else None

    chk.run("wh-antipode-right", right())

    def middle():
        for h in range(d.dim):
            acc = {}
            for key, c in coalg.iterated_comul(h, 3).items():
                h1, h2, h3 = key
                term = alg.multiply(alg.multiply(S.col(h1), {h2: field.one}),
                                    S.col(h3))
                saxpy(field, acc, c, term)
            res = ssub(field, acc, S.col(h))
            yield (not res), witness([h], res, field) if res else None

    chk.run("wh-antipode-s", middle())
    chk.record("s-bijective", invert(S.matrix) is not None)
    return chk.done()


def eps_t(d):
    """The projection h -> eps(1_(1) h) 1_(2); returns (map, image basis)."""
    field = d.field
    one2 = _delta1(d)
    cols = []
    for h in range(d.dim):
        out = {}
        for (a, b), c in one2.items():
            e = d.coalg.counit_vec(d.alg.multiply({a: field.one},
                                                  {h: field.one}))
            saxpy(field, out, field.mul(c, e), {b: field.one})
        cols.append(out)
    lm = linmap_from_cols(field, cols, d.dim, src="H", tgt="H")
    if lm.matrix.mul(lm.matrix) != lm.matrix:
        raise AlgebraError("eps_t is not idempotent; "
                           "the weak bialgebra axioms fail upstream")
    span = rref_sparse(field, [lm.col(h) for h in range(d.dim)])
    image = [sparse_to_dense(field, span[p], d.dim) for p in sorted(span)]
    return lm, image


def target_coalgebra(d):
    """C = H / ker(eps_t) with the canonical surjection.

    The kernel is checked to be a coideal (the induced coproduct and
    counit are well defined), and the quotient passes the coalgebra
    axioms.
    """
    field = d.field
    lm, image = eps_t(d)
    ker = kernel_basis(lm.matrix)
    quot = quotient_space(field, d.dim, ker)
    # coideal: (pi (x) pi) Delta and eps kill the kernel
    for k in ker:
        img = {}
        for h, c in dense_to_sparse(field, k).items():
            for (a, b), c2 in d.coalg.comul[h].items():
                pa = quot.project_sparse({a: field.one})
                pb = quot.project_sparse({b: field.one})
                for i, ci in pa.items():
                    for j, cj in pb.items():
                        saxpy(field, img,
                              field.mul(field.mul(c, c2),
                                        field.mul(ci, cj)),
                              {(i, j): field.one})
        if img:
            raise AlgebraError("ker(eps_t) is not a coideal: coproduct"
                               " does not descend")
        if d.coalg.counit_vec(dense_to_sparse(field, k)) != field.zero:
            raise AlgebraError("ker(eps_t) is not a coideal: counit"
                               " does not descend")
    comul = []
    counit = []
    for k in range(quot.dim):
        unitv = [field.zero] * quot.dim
        unitv[k] = field.one
        rep = dense_to_sparse(field, quot.lift(tuple(unitv)))
        row = {}
        epsv = field.zero
        for h, c in rep.items():
            for (a, b), c2 in d.coalg.comul[h].items():
                pa = quot.project_sparse({a: field.one})
                pb = quot.project_sparse({b: field.one})
                for i, ci in pa.items():
                    for j, cj in pb.items():
                        saxpy(field, row,
                              field.mul(field.mul(c, c2),
                                        field.mul(ci, cj)),
                              {(i, j): field.one})
            epsv = field.add(epsv, field.mul(c, d.coalg.counit[h]))
        comul.append(row)
        counit.append(epsv)
    C = FinDimCoalgebra(field, quot.dim, comul, counit)
    rep = check_coalgebra(C)
    if not rep.ok:
        raise AlgebraError("quotient is not a coalgebra: %s" % rep.summary())
    pi = LinMap(quot.projection, src="H", tgt="C")
    return C, pi, quot


# ---------------------------------------------------------------------------
# bicoalgebroids
# ---------------------------------------------------------------------------

def _coaction_rows(d_like, alpha, beta):
    """The right and left C-coactions on H from alpha and beta."""
    field = alpha.field
    H = d_like
    right_rows = []
    left_rows = []
    for h in range(H.dim):
        r = {}
        l = {}
        for (h1, h2), c in H.comul[h].items():
            for cc, cv in beta.col(h1).items():
                saxpy(field, r, field.mul(c, cv), {(h2, cc): field.one})
            for cc, cv in alpha.col(h1).items():
                saxpy(field, l, field.mul(c, cv), {(cc, h2): field.one})
        right_rows.append(r)
        left_rows.append(l)
    return right_rows, left_rows


def bicoalgebroid_cotensor(H, C, alpha, beta):
    """Basis of H box_C H for the coactions induced by alpha and beta."""
    right_rows, left_rows = _coaction_rows(H, alpha, beta)
    return cotensor(C, H.dim, right_rows, H.dim, left_rows)


def bicoalgebroid_from_weak_hopf(d):
    """alpha = pi_t, beta = pi_t S^-1, mu the product, eta from eps_t."""
    wh = check_weak_hopf(d)
    if not wh.ok:
        raise AlgebraError("not a weak Hopf algebra: %s" % wh.summary())
    if d.antipode_inv is None:
        inv = invert(d.antipode.matrix)
        if inv is None:
            raise AlgebraError("antipode is not invertible")
        Sinv = LinMap(inv, "H", "H")
    else:
        Sinv = d.antipode_inv
    field = d.field
    C, pi, quot = target_coalgebra(d)
    alpha = LinMap(pi.matrix, src="H", tgt="C")
    beta = LinMap(pi.matrix.mul(Sinv.matrix), src="H", tgt="C")
    basis = bicoalgebroid_cotensor(d.coalg, C, alpha, beta)
    lm_t, _ = eps_t(d)
    # eta(c) = eps_t(h) for any preimage h; verified independent of choice
    for k in kernel_basis(pi.matrix):
        if lm_t.apply_sparse(dense_to_sparse(field, k)):
            raise AlgebraError("eta is not well defined on the quotient")
    eta_cols = []
    for c in range(C.dim):
        unitv = [field.zero] * C.dim
        unitv[c] = field.one
        rep = dense_to_sparse(field, quot.lift(tuple(unitv)))
        eta_cols.append(lm_t.apply_sparse(rep))
    eta = linmap_from_cols(field, eta_cols, d.dim, src="C", tgt="H")
    mu_cols = []
    for vec in basis:
        out = {}
        for flat, c in dense_to_sparse(field, vec).items():
            g, h = divmod(flat, d.dim)
            saxpy(field, out, c, d.alg.mul_basis(g, h))
        mu_cols.append(out)
    mu = linmap_from_cols(field, mu_cols, d.dim, src="H box_C H", tgt="H")
    return BicoalgebroidData(d.coalg, C, alpha, beta, mu, eta, basis)


def check_bicoalgebroid(b):
    """(BC1) through (BC3) plus the two cotensor sanity identities."""
    H, C = b.H, b.C
    field = b.field
    chk = Checker("check-bicoalgebroid")
    dim = H.dim

    rep = check_map(b.alpha, H, C, "coalgebra")
    chk.record("alpha-coalgebra-map", rep.ok,
               rep.failures()[0].witness if not rep.ok else None,
               instances=sum(it.instances for it in rep.items))
    rep = check_map(b.beta, H, C, "anti-coalgebra")
    chk.record("beta-anti-coalgebra-map", rep.ok,
               rep.failures()[0].witness if not rep.ok else None,
               instances=sum(it.instances for it in rep.items))

    def bc1():
        for h in range(dim):
            lhs = {}
            rhs = {}
            for (h1, h2), c in H.comul[h].items():
                for c1, v1 in b.alpha.col(h1).items():
                    for c2, v2 in b.beta.col(h2).items():
                        saxpy(field, lhs, field.mul(c, field.mul(v1, v2)),
                              {(c1, c2): field.one})
                for c1, v1 in b.alpha.col(h2).items():
                    for c2, v2 in b.beta.col(h1).items():
                        saxpy(field, rhs, field.mul(c, field.mul(v1, v2)),
                              {(c1, c2): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([h], {str(k): field.to_str(v)
                                           for k, v in sorted(res.items())})
            else:
                yield True, None

    chk.run("BC1", bc1())

    basis = bicoalgebroid_cotensor(H, C, b.alpha, b.beta)
    if len(b.cotensor_basis) != len(basis) or \
            any(tuple(x) != tuple(y) for x, y in zip(b.cotensor_basis, basis)):
        raise AlgebraError("mu is indexed by a stale cotensor basis; "
                           "recompute it against the canonical one")
    ncot = len(basis)
    cot_matrix = Matrix.from_cols(field, basis, dim * dim) if basis else None

    def cot_coords(vec):
        """Coordinates of an H (x) H vector in the cotensor basis."""
        dense = sparse_to_dense(field, vec, dim * dim) \
            if isinstance(vec, dict) else vec
        if cot_matrix is None:
            return None if any(x != field.zero for x in dense) else ()
        sol = solve_linear(cot_matrix, dense)
        if sol is None:
            return None
        chkv = cot_matrix.apply(sol)
        if tuple(chkv) != tuple(dense):
            return None
        return sol

    def mu_of(vec):
        coords = cot_coords(vec)
        if coords is None:
            return None
        out = {}
        for k, c in enumerate(coords):
            if c != field.zero:
                saxpy(field, out, c, b.mu.col(k))
        return out

    def d1():
        for kidx, vec in enumerate(basis):
            lhs = {}
            rhs = {}
            for flat, c in dense_to_sparse(field, vec).items():
                g, h = divmod(flat, dim)
                for key, c2 in H.iterated_comul(g, 3).items():
                    g1, g2, g3 = key
                    for cc, cv in b.beta.col(g1).items():
                        saxpy(field, lhs,
                              field.mul(c, field.mul(c2, cv)),
                              {(g2, g3, cc, h): field.one})
                for (g1, g2), c2 in H.comul[g].items():
                    for (h1, h2), c3 in H.comul[h].items():
                        for cc, cv in b.alpha.col(h1).items():
                            saxpy(field, rhs,
                                  field.mul(c, field.mul(c2,
                                            field.mul(c3, cv))),
                                  {(g1, g2, cc, h2): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([kidx],
                                     {str(k): field.to_str(v)
                                      for k, v in sorted(res.items())})
            else:
                yield True, None

    chk.run("D1", d1())

    def d2():
        for kidx, vec in enumerate(basis):
            lhs = {}
            rhs = {}
            for flat, c in dense_to_sparse(field, vec).items():
                g, h = divmod(flat, dim)
                for (g1, g2), c2 in H.comul[g].items():
                    for cc, cv in b.beta.col(g1).items():
                        for (h1, h2), c3 in H.comul[h].items():
                            saxpy(field, lhs,
                                  field.mul(c, field.mul(c2,
                                            field.mul(cv, c3))),
                                  {(g2, cc, h1, h2): field.one})
                for key, c2 in H.iterated_comul(h, 3).items():
                    h1, h2, h3 = key
                    for cc, cv in b.alpha.col(h1).items():
                        saxpy(field, rhs,
                              field.mul(c, field.mul(c2, cv)),
                              {(g, cc, h2, h3): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([kidx],
                                     {str(k): field.to_str(v)
                                      for k, v in sorted(res.items())})
            else:
                yield True, None

    chk.run("D2", d2())

    def bc2a():
        for kidx, vec in enumerate(basis):
            # sum mu(g (x) h1) (x) alpha(h2) vs sum mu(g1 (x) h) (x) beta(g2)
            lhs_sl = {}
            rhs_sl = {}
            for flat, c in dense_to_sparse(field, vec).items():
                g, h = divmod(flat, dim)
                for (h1, h2), c2 in H.comul[h].items():
                    for cc, cv in b.alpha.col(h2).items():
                        target = lhs_sl.setdefault(cc, {})
                        saxpy(field, target, field.mul(c, field.mul(c2, cv)),
                              {g * dim + h1: field.one})
                for (g1, g2), c2 in H.comul[g].items():
                    for cc, cv in b.beta.col(g2).items():
                        target = rhs_sl.setdefault(cc, {})
                        saxpy(field, target, field.mul(c, field.mul(c2, cv)),
                              {g1 * dim + h: field.one})
            for cc in sorted(set(lhs_sl) | set(rhs_sl)):
                lv = mu_of(lhs_sl.get(cc, {}))
                rv = mu_of(rhs_sl.get(cc, {}))
                if lv is None or rv is None:
                    yield False, witness([kidx, cc], None, None,
                                         "slice leaves the cotensor")
                    continue
                res = ssub(field, lv, rv)
                if res:
                    yield False, witness([kidx, cc], res, field)
                else:
                    yield True, None

    chk.run("BC2a", bc2a())

    def bc2b():
        for kidx, vec in enumerate(basis):
            mu_x = mu_of(dense_to_sparse(field, vec))
            if mu_x is None:
                yield False, witness([kidx], None, None, "outside cotensor")
                continue
            lhs = H.comul_vec(mu_x)
            # Y = sum g1 (x) h1 (x) g2 (x) h2, resolved leg pair by leg pair
            slices = {}
            for flat, c in dense_to_sparse(field, vec).items():
                g, h = divmod(flat, dim)
                for (g1, g2), c2 in H.comul[g].items():
                    for (h1, h2), c3 in H.comul[h].items():
                        key = g2 * dim + h2
                        tgt = slices.setdefault(key, {})
                        saxpy(field, tgt,
                              field.mul(c, field.mul(c2, c3)),
                              {g1 * dim + h1: field.one})
            first = {}
            bad = False
            for key, sl in slices.items():
                coords = cot_coords(sl)
                if coords is None:
                    bad = True
                    break
                for k, ck in enumerate(coords):
                    if ck != field.zero:
                        saxpy(field, first, field.one,
                              {(k, key): ck})
            if bad:
                yield False, witness([kidx], None, None,
                                     "first legs leave the cotensor")
                continue
            second = {}
            for k in range(ncot):
                sl = {}
                for (k2, key), c in first.items():
                    if k2 == k:
                        sl[key] = c
                if not sl:
                    continue
                coords = cot_coords(sl)
                if coords is None:
                    bad = True
                    break
                for l, cl in enumerate(coords):
                    if cl != field.zero:
                        second[(k, l)] = cl
            if bad:
                yield False, witness([kidx], None, None,
                                     "second legs leave the cotensor")
                continue
            rhs = {}
            for (k, l), c in second.items():
                for m, cm in b.mu.col(k).items():
                    for n2, cn in b.mu.col(l).items():
                        saxpy(field, rhs, field.mul(c, field.mul(cm, cn)),
                              {(m, n2): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([kidx],
                                     {str(k): field.to_str(v)
                                      for k, v in sorted(res.items())})
            else:
                yield True, None

    chk.run("BC2b", bc2b())

    right_rows, left_rows = _coaction_rows(H, b.alpha, b.beta)

    def mu_bicomodule():
        for kidx, vec in enumerate(basis):
            mu_x = mu_of(dense_to_sparse(field, vec))
            if mu_x is None:
                yield False, witness([kidx], None, None, "outside cotensor")
                continue
            # left: alpha(mu(x)_1) (x) mu(x)_2 vs (C (x) mu) of alpha(g1) (x) g2 (x) h
            lhs = {}
            for m, cm in mu_x.items():
                for (cc, h2), cv in left_rows[m].items():
                    saxpy(field, lhs, field.mul(cm, cv),
                          {(cc, h2): field.one})
            slices = {}
            for flat, c in dense_to_sparse(field, vec).items():
                g, h = divmod(flat, dim)
                for (g1, g2), c2 in H.comul[g].items():
                    for cc, cv in b.alpha.col(g1).items():
                        tgt = slices.setdefault(cc, {})
                        saxpy(field, tgt, field.mul(c, field.mul(c2, cv)),
                              {g2 * dim + h: field.one})
            rhs = {}
            bad = False
            for cc, sl in slices.items():
                img = mu_of(sl)
                if img is None:
                    bad = True
                    break
                for m, cm in img.items():
                    saxpy(field, rhs, field.one, {(cc, m): cm})
            if bad:
                yield False, witness([kidx], None, None,
                                     "left slice leaves the cotensor")
                continue
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([kidx],
                                     {str(k): field.to_str(v)
                                      for k, v in sorted(res.items())},
                                     None, "left coaction")
                continue
            # right: mu(x)_2 (x) beta(mu(x)_1) vs (mu (x) C) of g (x) h2 (x) beta(h1)
            lhs = {}
            for m, cm in mu_x.items():
                for (h2, cc), cv in right_rows[m].items():
                    saxpy(field, lhs, field.mul(cm, cv),
                          {(h2, cc): field.one})
            slices = {}
            for flat, c in dense_to_sparse(field, vec).items():
                g, h = divmod(flat, dim)
                for (h1, h2), c2 in H.comul[h].items():
                    for cc, cv in b.beta.col(h1).items():
                        tgt = slices.setdefault(cc, {})
                        saxpy(field, tgt, field.mul(c, field.mul(c2, cv)),
                              {g * dim + h2: field.one})
            rhs = {}
            for cc, sl in slices.items():
                img = mu_of(sl)
                if img is None:
                    bad = True
                    break
                for m, cm in img.items():
                    saxpy(field, rhs, field.one, {(m, cc): cm})
            if bad:
                yield False, witness([kidx], None, None,
                                     "right slice leaves the cotensor")
                continue
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([kidx],
                                     {str(k): field.to_str(v)
                                      for k, v in sorted(res.items())},
                                     None, "right coaction")
            else:
                yield True, None

    chk.run("mu-bicomodule-map", mu_bicomodule())

    # triple cotensor for associativity
    def triple_basis():
        rows = []
        for m in range(dim):
            for n2 in range(dim):
                for p in range(dim):
                    col = (m * dim + n2) * dim + p
                    for (m2, cc), v in right_rows[m].items():
                        rows.append(((0, m2, cc, n2, p), col, v))
                    for (cc, n3), v in left_rows[n2].items():
                        rows.append(((0, m, cc, n3, p), col, field.neg(v)))
                    for (n3, cc), v in right_rows[n2].items():
                        rows.append(((1, m, n3, cc, p), col, v))
                    for (cc, p2), v in left_rows[p].items():
                        rows.append(((1, m, n2, cc, p2), col, field.neg(v)))
        eqs = {}
        for key, col, v in rows:
            cur = eqs.setdefault(key, {})
            nv = field.add(cur.get(col, field.zero), v)
            if nv == field.zero:
                cur.pop(col, None)
            else:
                cur[col] = nv
        mat_rows = [sparse_to_dense(field, eqs[k], dim ** 3)
                    for k in sorted(eqs) if eqs[k]]
        M = Matrix(field, mat_rows, cols=dim ** 3) if mat_rows \
            else Matrix.zero(field, 1, dim ** 3)
        return kernel_basis(M)

    def associative():
        for tidx, tvec in enumerate(triple_basis()):
            left_slices = {}
            right_slices = {}
            for flat, c in dense_to_sparse(field, tvec).items():
                mn, p = divmod(flat, dim)
                m, n2 = divmod(mn, dim)
                tgt = left_slices.setdefault(p, {})
                saxpy(field, tgt, c, {m * dim + n2: field.one})
                tgt = right_slices.setdefault(m, {})
                saxpy(field, tgt, c, {n2 * dim + p: field.one})
            lhs_pairs = {}
            bad = False
            for p, sl in left_slices.items():
                img = mu_of(sl)
                if img is None:
                    bad = True
                    break
                for m, cm in img.items():
                    saxpy(field, lhs_pairs, field.one,
                          {m * dim + p: cm})
            if bad:
                yield False, witness([tidx], None, None,
                                     "mu (x) id leaves the cotensor")
                continue
            lhs = mu_of(lhs_pairs)
            rhs_pairs = {}
            for m, sl in right_slices.items():
                img = mu_of(sl)
                if img is None:
                    bad = True
                    break
                for k, ck in img.items():
                    saxpy(field, rhs_pairs, field.one,
                          {m * dim + k: ck})
            if bad:
                yield False, witness([tidx], None, None,
                                     "id (x) mu leaves the cotensor")
                continue
            rhs = mu_of(rhs_pairs)
            if lhs is None or rhs is None:
                yield False, witness([tidx], None, None,
                                     "outer product leaves the cotensor")
                continue
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([tidx], res, field)
            else:
                yield True, None

    chk.run("mu-associative", associative())

    def bc3_units():
        for h in range(dim):
            # left: mu(eta(alpha(h1)) (x) h2) = h
            pairs = {}
            for (h1, h2), c in H.comul[h].items():
                for cc, cv in b.alpha.col(h1).items():
                    img = b.eta.col(cc)
                    for m, cm in img.items():
                        saxpy(field, pairs, field.mul(c, field.mul(cv, cm)),
                              {m * dim + h2: field.one})
            lv = mu_of(pairs)
            if lv is None:
                yield False, witness([h], None, None,
                                     "unit leg leaves the cotensor (left)")
                continue
            res = ssub(field, lv, {h: field.one})
            if res:
                yield False, witness([h], res, field, "left unit")
                continue
            pairs = {}
            for (h1, h2), c in H.comul[h].items():
                for cc, cv in b.beta.col(h1).items():
                    img = b.eta.col(cc)
                    for m, cm in img.items():
                        saxpy(field, pairs, field.mul(c, field.mul(cv, cm)),
                              {h2 * dim + m: field.one})
            rv = mu_of(pairs)
            if rv is None:
                yield False, witness([h], None, None,
                                     "unit leg leaves the cotensor (right)")
                continue
            res = ssub(field, rv, {h: field.one})
            if res:
                yield False, witness([h], res, field, "right unit")
            else:
                yield True, None

    chk.run("BC3-unit", bc3_units())

    def eta_counit():
        for c in range(C.dim):
            lhs = H.counit_vec(b.eta.col(c))
            if lhs != C.counit[c]:
                yield False, witness([c], [field.sub(lhs, C.counit[c])],
                                     field)
            else:
                yield True, None

    chk.run("BC3-eta-counit", eta_counit())

    def eta_delta():
        for c in range(C.dim):
            lhs = H.comul_vec(b.eta.col(c))
            via_alpha = {}
            via_beta = {}
            for (e1, e2), cv in lhs.items():
                for cc, c2 in b.alpha.col(e2).items():
                    for m, cm in b.eta.col(cc).items():
                        saxpy(field, via_alpha, field.mul(cv, field.mul(c2, cm)),
                              {(e1, m): field.one})
                for cc, c2 in b.beta.col(e2).items():
                    for m, cm in b.eta.col(cc).items():
                        saxpy(field, via_beta, field.mul(cv, field.mul(c2, cm)),
                              {(e1, m): field.one})
            res = ssub(field, lhs, via_alpha)
            if res:
                yield False, witness([c], {str(k): field.to_str(v)
                                           for k, v in sorted(res.items())},
                                     None, "via alpha")
                continue
            res = ssub(field, lhs, via_beta)
            if res:
                yield False, witness([c], {str(k): field.to_str(v)
                                           for k, v in sorted(res.items())},
                                     None, "via beta")
            else:
                yield True, None

    chk.run("BC3-eta-delta", eta_delta())

    def eta_bicomodule():
        for c in range(C.dim):
            eta_c = b.eta.col(c)
            lhs = {}
            for m, cm in eta_c.items():
                for (cc, h2), cv in left_rows[m].items():
                    saxpy(field, lhs, field.mul(cm, cv), {(cc, h2): field.one})
            rhs = {}
            for (c1, c2), cv in C.comul[c].items():
                for m, cm in b.eta.col(c2).items():
                    saxpy(field, rhs, field.mul(cv, cm), {(c1, m): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([c], {str(k): field.to_str(v)
                                           for k, v in sorted(res.items())},
                                     None, "left coaction")
                continue
            lhs = {}
            for m, cm in eta_c.items():
                for (h2, cc), cv in right_rows[m].items():
                    saxpy(field, lhs, field.mul(cm, cv), {(h2, cc): field.one})
            rhs = {}
            for (c1, c2), cv in C.comul[c].items():
                for m, cm in b.eta.col(c1).items():
                    saxpy(field, rhs, field.mul(cv, cm), {(m, c2): field.one})
            res = ssub(field, lhs, rhs)
            if res:
                yield False, witness([c], {str(k): field.to_str(v)
                                           for k, v in sorted(res.items())},
                                     None, "right coaction")
            else:
                yield True, None

    chk.run("eta-bicomodule-map", eta_bicomodule())
    return chk.done()
