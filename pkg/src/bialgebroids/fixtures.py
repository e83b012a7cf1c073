"""A small corpus of concrete structures used by tests, demos and the CLI.

Everything is built from multiplication tables at desk scale: group
algebras, the 4-dimensional Hopf algebra with a grouplike g and a skew
primitive x (g^2 = 1, x^2 = 0, xg = -gx), matrix algebras, the superline
(dual numbers with the sign action and the grouplike coaction over kC_2),
and deliberately broken one-tensor perturbations of these.
"""

import itertools
from fractions import Fraction

from .exactlin import Field, Matrix, QQ
from .algebra import FinDimAlgebra, FinDimCoalgebra, LinMap
from .hopf import BialgebraData, ComoduleStruct, ModuleStruct, YDModuleAlgebra


def group_bialgebra(field, elements, mult, inverse=None, names=None):
    """Group algebra with grouplike coproduct; antipode from inverses.

    `elements` is an ordered list, `mult` a dict (a, b) -> c of index
    triples, `inverse` an optional index map.
    """
    n = len(elements)
    mul = {(i, j): {mult[(i, j)]: field.one} for i in range(n) for j in range(n)}
    names = names or [str(e) for e in elements]
    alg = FinDimAlgebra(field, n, mul, {0: field.one}, names=names)
    comul = [{(i, i): field.one} for i in range(n)]
    coalg = FinDimCoalgebra(field, n, comul, [field.one] * n, names=names)
    S = None
    if inverse is not None:
        mats = Matrix.from_cols(field, [
            [field.one if r == inverse[i] else field.zero for r in range(n)]
            for i in range(n)], n)
        S = LinMap(mats, "H", "H")
    return BialgebraData(alg, coalg, S, S)


def cyclic_bialgebra(field, n):
    """kC_n with generator g, identity at index 0."""
    mult = {(i, j): (i + j) % n for i in range(n) for j in range(n)}
    inverse = {i: (-i) % n for i in range(n)}
    names = ["1"] + ["g%d" % i if i > 1 else "g" for i in range(1, n)]
    return group_bialgebra(field, list(range(n)), mult, inverse, names)


def s3_bialgebra(field):
    """The symmetric group on three letters as a group algebra."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    mult = {}
    inverse = {}
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            comp = tuple(p[q[k]] for k in range(3))
            mult[(i, j)] = index[comp]
        inv = tuple(sorted(range(3), key=lambda k: p[k]))
        inverse[i] = index[inv]
    names = ["e", "r", "r2", "s01", "s12", "s02"]
    return group_bialgebra(field, perms, mult, inverse, names)


def sweedler_hopf(field):
    """The 4-dimensional Hopf algebra: basis 1, g, x, gx."""
    if field.coerce(2) == field.zero:
        raise ValueError("needs characteristic different from 2")
    one = field.one
    m = field.neg(one)
    mul = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {0: one}, (1, 2): {3: one}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: m}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: one}, (3, 1): {2: m}, (3, 2): {}, (3, 3): {},
    }
    alg = FinDimAlgebra(field, 4, mul, {0: one}, names=["1", "g", "x", "gx"])
    comul = [
        {(0, 0): one},
        {(1, 1): one},
        {(2, 0): one, (1, 2): one},
        {(3, 1): one, (0, 3): one},
    ]
    coalg = FinDimCoalgebra(field, 4, comul, [one, one, field.zero, field.zero],
                            names=alg.names)
    smat = Matrix.zero(field, 4, 4).entries
    smat = [list(r) for r in smat]
    smat[0][0] = one          # S(1) = 1
    smat[1][1] = one          # S(g) = g
    smat[3][2] = m            # S(x) = -gx
    smat[2][3] = one          # S(gx) = x
    S = LinMap(Matrix(field, smat), "H", "H")
    Sinv_mat = [list(r) for r in Matrix.zero(field, 4, 4).entries]
    Sinv_mat[0][0] = one
    Sinv_mat[1][1] = one
    Sinv_mat[3][2] = one      # S^-1(x) = gx
    Sinv_mat[2][3] = m        # S^-1(gx) = -x
    Sinv = LinMap(Matrix(field, Sinv_mat), "H", "H")
    return BialgebraData(alg, coalg, S, Sinv)


def dual_numbers(field):
    """k[x]/(x^2), basis 1, x."""
    one = field.one
    mul = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}, (1, 1): {}}
    return FinDimAlgebra(field, 2, mul, {0: one}, names=["1", "x"])


def matrix_algebra(field, n):
    """M_n by matrix units E[p,q], flattened p*n + q."""
    one = field.one
    mul = {}
    for p, q, r, s in itertools.product(range(n), repeat=4):
        mul[(p * n + q, r * n + s)] = {p * n + s: one} if q == r else {}
    unit = {p * n + p: one for p in range(n)}
    names = ["E[%d,%d]" % (p, q) for p in range(n) for q in range(n)]
    return FinDimAlgebra(field, n * n, mul, unit, names=names)


def matrix_coalgebra(field, n):
    """Comatrix coalgebra: Delta(E[i,j]) = sum_k E[i,k] (x) E[k,j]."""
    one = field.one
    comul = []
    counit = []
    for i in range(n):
        for j in range(n):
            comul.append({(i * n + k, k * n + j): one for k in range(n)})
            counit.append(one if i == j else field.zero)
    names = ["E[%d,%d]" % (i, j) for i in range(n) for j in range(n)]
    return FinDimCoalgebra(field, n * n, comul, counit, names=names)


# ---------------------------------------------------------------------------
# the superline: dual numbers as a braided commutative algebra over kC_2
# ---------------------------------------------------------------------------

def superline(field, action="sign", coaction="grouplike", square=None):
    """k[x]/x^2 over kC_2 with g.x = -x and rho(x) = x (x) g.

    The keyword knobs produce the standard one-tensor perturbations:
    action in {"sign", "zero", "trivial"}, coaction in {"grouplike",
    "plain"}, square (the value of x^2 in A) in {None, "one"}.
    """
    H = cyclic_bialgebra(field, 2)
    one = field.one
    if square == "one":
        mul = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one},
               (1, 1): {0: one}}
        A = FinDimAlgebra(field, 2, mul, {0: one}, names=["1", "x"])
    else:
        A = dual_numbers(field)
    if action == "sign":
        act = {(0, 0): {0: one}, (0, 1): {1: one},
               (1, 0): {0: one}, (1, 1): {1: field.neg(one)}}
    elif action == "trivial":
        act = {(0, 0): {0: one}, (0, 1): {1: one},
               (1, 0): {0: one}, (1, 1): {1: one}}
    elif action == "zero":
        act = {(0, 0): {}, (0, 1): {}, (1, 0): {}, (1, 1): {}}
    else:
        raise ValueError(action)
    action_s = ModuleStruct(field, 2, 2, act)
    if coaction == "grouplike":
        rho = [{(0, 0): one}, {(1, 1): one}]
    elif coaction == "plain":
        rho = [{(0, 0): one}, {(1, 0): one}]
    else:
        raise ValueError(coaction)
    coaction_s = ComoduleStruct(field, 2, 2, rho)
    return YDModuleAlgebra(H, A, action_s, coaction_s)


def sweedler_superline(field, coaction="grouplike"):
    """k[x]/x^2 over the 4-dimensional Hopf algebra.

    The grouplike g acts by the sign, the skew primitive x_H acts by
    zero, and the coaction grades x into the g component.  Unlike the
    kC_2 superline this sits over a non-cocommutative bialgebra, so the
    flattened coaction x -> x (x) 1 genuinely breaks the Yetter-Drinfeld
    compatibility (and with it the coproduct-image condition downstream).
    """
    H = sweedler_hopf(field)
    A = dual_numbers(field)
    one = field.one
    act = {(0, 0): {0: one}, (0, 1): {1: one},
           (1, 0): {0: one}, (1, 1): {1: field.neg(one)},
           (2, 0): {}, (2, 1): {}, (3, 0): {}, (3, 1): {}}
    action = ModuleStruct(field, 4, 2, act)
    if coaction == "grouplike":
        rho = [{(0, 0): one}, {(1, 1): one}]
    elif coaction == "plain":
        rho = [{(0, 0): one}, {(1, 0): one}]
    else:
        raise ValueError(coaction)
    return YDModuleAlgebra(H, A, action, ComoduleStruct(field, 4, 2, rho))


def trivial_yd_algebra(field, A, H):
    """A with the counit action and unit coaction over H."""
    act = {}
    for h in range(H.dim):
        for m in range(A.dim):
            c = H.coalg.counit[h]
            act[(h, m)] = {m: c} if c != field.zero else {}
    rho = [dict() for _ in range(A.dim)]
    for m in range(A.dim):
        for u, c in H.alg.unit.items():
            rho[m][(m, u)] = c
    return YDModuleAlgebra(H, A,
                           ModuleStruct(field, H.dim, A.dim, act),
                           ComoduleStruct(field, H.dim, A.dim, rho))


def bialgebroid_over_k(B):
    """An ordinary bialgebra repackaged as a bialgebroid over k."""
    from .algebra import linmap_from_cols
    from .bimodtensor import TensorOverA, ae_ring
    from .bialgebroid import BialgebroidData, projected_delta
    field = B.field
    k = FinDimAlgebra(field, 1, {(0, 0): {0: field.one}}, {0: field.one},
                      names=["1"])
    s = linmap_from_cols(field, [B.alg.unit], B.dim, src="k", tgt="H")
    ring = ae_ring(B.alg, k, s, s)
    tensor = TensorOverA(ring)
    amb_cols = [{h1 * B.dim + h2: c
                 for (h1, h2), c in B.coalg.comul[h].items()}
                for h in range(B.dim)]
    delta = projected_delta(ring, tensor, amb_cols)
    eps = linmap_from_cols(field, [{0: B.coalg.counit[h]}
                                   for h in range(B.dim)], 1,
                           src="H", tgt="k")
    return BialgebroidData(ring, delta, eps=eps, tensor=tensor)


def bialgebroid_corpus(field, gf=None):
    """Named (data, should_pass) pairs covering the three axiom systems.

    Passing entries: group bialgebras over k, the superline smash over
    kC_2 and over the 4-dimensional Hopf algebra, and a trivial
    Yetter-Drinfeld smash.  Broken entries perturb exactly one structure
    tensor each, so every failure isolates one axiom.
    """
    from .constructions import yd_bialgebroid
    from .bialgebroid import mu_from_eps
    from .algebra import LinMap
    from .exactlin import Matrix
    gf = gf or Field(5)
    corpus = []

    def add(name, data, should_pass):
        if data.mu is None:
            data = data.with_updates(mu=mu_from_eps(data, strict=False))
        corpus.append((name, data, should_pass))

    add("kc2/Q", bialgebroid_over_k(cyclic_bialgebra(field, 2)), True)
    add("kc2/GF5", bialgebroid_over_k(cyclic_bialgebra(gf, 2)), True)
    add("kc3/Q", bialgebroid_over_k(cyclic_bialgebra(field, 3)), True)
    add("ks3/Q", bialgebroid_over_k(s3_bialgebra(field)), True)
    add("ks3/GF5", bialgebroid_over_k(s3_bialgebra(gf)), True)
    add("sweedler/Q", bialgebroid_over_k(sweedler_hopf(field)), True)
    add("sweedler/GF5", bialgebroid_over_k(sweedler_hopf(gf)), True)
    add("superline/Q", yd_bialgebroid(superline(field)), True)
    add("superline/GF5", yd_bialgebroid(superline(gf)), True)
    add("sweedler-superline/Q",
        yd_bialgebroid(sweedler_superline(field)), True)
    add("trivial-yd/Q",
        yd_bialgebroid(trivial_yd_algebra(field, dual_numbers(field),
                                          cyclic_bialgebra(field, 2))), True)

    # one perturbed tensor each
    add("broken-coaction-flattened/Q",
        yd_bialgebroid(sweedler_superline(field, coaction="plain")), False)
    add("broken-action-zeroed/Q",
        yd_bialgebroid(superline(field, action="zero")), False)
    add("broken-product-unit-square/Q",
        yd_bialgebroid(superline(field, square="one")), False)
    kc2 = bialgebroid_over_k(cyclic_bialgebra(field, 2))
    add("broken-eps-doubled/Q",
        kc2.with_updates(eps=LinMap(kc2.eps.matrix.scale(2), "H", "k")),
        False)
    sw = sweedler_hopf(field)
    truncated = [dict(row) for row in sw.coalg.comul]
    truncated[2] = {(2, 0): field.one}          # Delta(x) loses g (x) x
    swb = BialgebraData(FinDimAlgebra(field, 4, sw.alg.mul, sw.alg.unit,
                                      names=sw.alg.names),
                        FinDimCoalgebra(field, 4, truncated,
                                        sw.coalg.counit,
                                        names=sw.coalg.names))
    add("broken-delta-truncated/Q", bialgebroid_over_k(swb), False)
    bad_mul = dict(cyclic_bialgebra(field, 2).alg.mul)
    bad_mul[(0, 1)] = {}
    badalg = FinDimAlgebra(field, 2, bad_mul, {0: field.one},
                           names=["1", "g"])
    badb = BialgebraData(badalg, cyclic_bialgebra(field, 2).coalg)
    add("broken-unit-row/Q", bialgebroid_over_k(badb), False)
    return corpus


def kc2_triangular_r(field):
    """The nontrivial triangular structure on kC_2 (characteristic != 2)."""
    two = field.coerce(2)
    if two == field.zero:
        raise ValueError("needs characteristic different from 2")
    half = field.inv(two)
    return {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): field.neg(half)}


def kc2_triangular_form(field):
    """The matching coquasitriangular form: sigma(g^a (x) g^b) = (-1)^(ab)."""
    one = field.one
    return Matrix(field, [[one, one], [one, field.neg(one)]])
