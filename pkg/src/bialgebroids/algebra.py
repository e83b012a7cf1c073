"""Finite-dimensional algebras and coalgebras by structure constants.

Conventions, fixed once for the whole package:

  * multiplication tensor: e_i e_j = sum_k  mul[i][j][k] e_k
  * comultiplication tensor: Delta(e_i) = sum_{j,k} comul[i][(j,k)] e_j (x) e_k
  * a tensor-square index pair (i, j) flattens to i * dim2 + j

Vectors passed around internally are sparse dicts {basis_index: scalar}.
A graded, degree-truncated algebra stores a degree per basis element and
declares products past the truncation bound as undefined rather than zero.
"""

import itertools

from .exactlin import (Matrix, QuotSpace, kernel_basis, quotient_space,
                       rref_sparse, reduce_sparse, sadd, ssub, sscale, saxpy,
                       sparse_to_dense, dense_to_sparse)
from .reports import Checker, witness


class AlgebraError(ValueError):
    """Structurally invalid input data."""


class TruncationOverflow(Exception):
    """A product left the degree-truncated carrier."""


class ResourceLimit(Exception):
    """A graded piece exceeded the configured dimension budget."""

    def __init__(self, what, dim, limit):
        self.what, self.dim, self.limit = what, dim, limit
        super().__init__("%s has dimension %d, over the budget %d"
                         % (what, dim, limit))


def stensor(field, x, y, dim2):
    """Sparse tensor product of two sparse vectors, flat pair keys."""
    out = {}
    for i, cx in x.items():
        base = i * dim2
        for j, cy in y.items():
            out[base + j] = field.mul(cx, cy)
    return out


class FinDimAlgebra:
    """An associative unital algebra given by structure constants.

    `mul` maps a basis pair (i, j) to the sparse product vector.  For a
    truncated graded algebra the pair is simply absent when the product
    degree exceeds `max_degree`; for ordinary algebras every pair is
    present (zero products as empty dicts).
    """

    __slots__ = ("field", "dim", "mul", "unit", "degrees", "max_degree", "names")

    def __init__(self, field, dim, mul, unit, degrees=None, max_degree=None,
                 names=None):
        self.field = field
        self.dim = dim
        zero = field.zero
        self.mul = {}
        for key, vec in mul.items():
            out = {}
            for k, v in vec.items():
                v = field.coerce(v)
                if v != zero:
                    out[k] = v
            self.mul[key] = out
        self.unit = {k: field.coerce(v) for k, v in unit.items()
                     if field.coerce(v) != field.zero} \
            if isinstance(unit, dict) else dense_to_sparse(field, unit)
        self.degrees = tuple(degrees) if degrees is not None else None
        self.max_degree = max_degree
        self.names = tuple(names) if names is not None else None

    @classmethod
    def from_tensor(cls, field, dim, tensor, unit, names=None):
        """Build from a dense 3-tensor tensor[i][j][k]."""
        mul = {}
        for i in range(dim):
            for j in range(dim):
                row = tensor[i][j]
                mul[(i, j)] = {k: field.coerce(c) for k, c in enumerate(row)
                               if field.coerce(c) != field.zero}
        return cls(field, dim, mul, unit, names=names)

    def name(self, i):
        return self.names[i] if self.names else "e%d" % i

    def degree(self, i):
        return 0 if self.degrees is None else self.degrees[i]

    def mul_basis(self, i, j):
        """Sparse product of basis elements, or None when truncated away."""
        return self.mul.get((i, j))

    def defined(self, i, j):
        return (i, j) in self.mul

    def multiply(self, x, y):
        """Product of two sparse vectors; raises on truncated contributions."""
        field = self.field
        out = {}
        for i, cx in x.items():
            for j, cy in y.items():
                prod = self.mul.get((i, j))
                if prod is None:
                    raise TruncationOverflow((i, j))
                saxpy(field, out, field.mul(cx, cy), prod)
        return out

    def multiply_many(self, *vecs):
        acc = dict(self.unit)
        for v in vecs:
            acc = self.multiply(acc, v)
        return acc

    def left_mult_matrix(self, x):
        """Matrix of v -> x v on the basis (total algebras only)."""
        field = self.field
        cols = []
        for j in range(self.dim):
            col = self.multiply(x, {j: field.one})
            cols.append(sparse_to_dense(field, col, self.dim))
        return Matrix.from_cols(field, cols, self.dim)

    def right_mult_matrix(self, x):
        field = self.field
        cols = []
        for j in range(self.dim):
            col = self.multiply({j: field.one}, x)
            cols.append(sparse_to_dense(field, col, self.dim))
        return Matrix.from_cols(field, cols, self.dim)

    def mul_tensor(self):
        """Dense 3-tensor view (undefined graded products read as zero)."""
        field = self.field
        return [[sparse_to_dense(field, self.mul.get((i, j), {}), self.dim)
                 for j in range(self.dim)] for i in range(self.dim)]

    def __repr__(self):
        tag = "" if self.degrees is None else ", graded<=%s" % self.max_degree
        return "FinDimAlgebra(dim=%d over %s%s)" % (self.dim, self.field.kind, tag)


class FinDimCoalgebra:
    """A coassociative counital coalgebra by structure constants."""

    __slots__ = ("field", "dim", "comul", "counit", "degrees", "names")

    def __init__(self, field, dim, comul, counit, degrees=None, names=None):
        self.field = field
        self.dim = dim
        self.comul = tuple(
            {jk: field.coerce(c) for jk, c in row.items()
             if field.coerce(c) != field.zero}
            for row in comul)
        self.counit = tuple(field.coerce(c) for c in counit)
        self.degrees = tuple(degrees) if degrees is not None else None
        self.names = tuple(names) if names is not None else None

    def name(self, i):
        return self.names[i] if self.names else "e%d" % i

    def comul_vec(self, x):
        """Coproduct of a sparse vector as {(j, k): scalar}."""
        field = self.field
        out = {}
        for i, c in x.items():
            saxpy(field, out, c, self.comul[i])
        return out

    def counit_vec(self, x):
        field = self.field
        acc = field.zero
        for i, c in x.items():
            acc = field.add(acc, field.mul(c, self.counit[i]))
        return acc

    def iterated_comul(self, i, legs):
        """legs-fold coproduct of e_i as {(k_1,...,k_legs): scalar}."""
        field = self.field
        cur = {(i,): field.one}
        for _ in range(legs - 1):
            nxt = {}
            for key, c in cur.items():
                for (j, k), d in self.comul[key[-1]].items():
                    nk = key[:-1] + (j, k)
                    saxpy(field, nxt, field.one, {nk: field.mul(c, d)})
            cur = nxt
        return cur

    def __repr__(self):
        return "FinDimCoalgebra(dim=%d over %s)" % (self.dim, self.field.kind)


class LinMap:
    """A linear map between tagged spaces, stored as a dense matrix."""

    __slots__ = ("matrix", "src", "tgt", "_cols")

    def __init__(self, matrix, src="?", tgt="?"):
        self.matrix = matrix
        self.src = src
        self.tgt = tgt
        self._cols = None

    @property
    def field(self):
        return self.matrix.field

    @property
    def src_dim(self):
        return self.matrix.cols

    @property
    def tgt_dim(self):
        return self.matrix.rows

    def col(self, j):
        if self._cols is None:
            self._cols = [dense_to_sparse(self.field, self.matrix.col(j))
                          for j in range(self.matrix.cols)]
        return self._cols[j]

    def apply(self, vec):
        return self.matrix.apply(vec)

    def apply_sparse(self, x):
        field = self.field
        out = {}
        for j, c in x.items():
            saxpy(field, out, c, self.col(j))
        return out

    def compose(self, other):
        """self after other."""
        return LinMap(self.matrix.mul(other.matrix), other.src, self.tgt)

    def __repr__(self):
        return "LinMap(%s -> %s, %dx%d)" % (self.src, self.tgt,
                                            self.matrix.rows, self.matrix.cols)


def linmap_from_cols(field, cols, tgt_dim, src="?", tgt="?"):
    dense = [sparse_to_dense(field, c, tgt_dim) if isinstance(c, dict) else c
             for c in cols]
    return LinMap(Matrix.from_cols(field, dense, tgt_dim), src, tgt)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def check_algebra(A):
    """Associativity and unit axioms on all basis triples/elements."""
    chk = Checker("check-algebra")
    field = A.field

    def unit_cases():
        for i in range(A.dim):
            ei = {i: field.one}
            try:
                left = A.multiply(A.unit, ei)
                right = A.multiply(ei, A.unit)
            except TruncationOverflow:
                yield "skip"
                continue
            res = ssub(field, left, ei)
            if res:
                yield False, witness([i], res, field, "unit * %s" % A.name(i))
                continue
            res = ssub(field, right, ei)
            if res:
                yield False, witness([i], res, field, "%s * unit" % A.name(i))
                continue
            yield True, None

    chk.run("unit", unit_cases())

    def assoc_cases():
        for i, j, k in itertools.product(range(A.dim), repeat=3):
            ij = A.mul_basis(i, j)
            jk = A.mul_basis(j, k)
            if ij is None or jk is None:
                yield "skip"
                continue
            try:
                left = A.multiply(ij, {k: field.one})
                right = A.multiply({i: field.one}, jk)
            except TruncationOverflow:
                yield "skip"
                continue
            res = ssub(field, left, right)
            if res:
                yield False, witness([i, j, k], res, field,
                                     "(%s %s) %s != %s (%s %s)"
                                     % (A.name(i), A.name(j), A.name(k),
                                        A.name(i), A.name(j), A.name(k)))
            else:
                yield True, None

    chk.run("associativity", assoc_cases())
    return chk.done()


def check_coalgebra(C):
    """Coassociativity and both counit laws on all basis elements."""
    chk = Checker("check-coalgebra")
    field = C.field

    def counit_cases():
        for i in range(C.dim):
            left = {}
            right = {}
            for (j, k), c in C.comul[i].items():
                saxpy(field, left, field.mul(c, C.counit[j]), {k: field.one})
                saxpy(field, right, field.mul(c, C.counit[k]), {j: field.one})
            ei = {i: field.one}
            resl = ssub(field, left, ei)
            if resl:
                yield False, witness([i], resl, field, "(eps (x) id) Delta")
                continue
            resr = ssub(field, right, ei)
            if resr:
                yield False, witness([i], resr, field, "(id (x) eps) Delta")
                continue
            yield True, None

    chk.run("counit", counit_cases())

    def coassoc_cases():
        for i in range(C.dim):
            left = {}
            right = {}
            for (j, k), c in C.comul[i].items():
                for (a, b), d in C.comul[j].items():
                    saxpy(field, left, field.mul(c, d), {(a, b, k): field.one})
                for (a, b), d in C.comul[k].items():
                    saxpy(field, right, field.mul(c, d), {(j, a, b): field.one})
            res = ssub(field, left, right)
            if res:
                yield False, witness(
                    [i], {str(k): field.to_str(v) for k, v in res.items()},
                    None, "coassociativity")
            else:
                yield True, None

    chk.run("coassociativity", coassoc_cases())
    return chk.done()


def check_map(f, src, tgt, mode):
    """Is a LinMap a (anti-)algebra or (anti-)coalgebra map?"""
    if mode not in ("algebra", "anti-algebra", "coalgebra", "anti-coalgebra"):
        raise AlgebraError("unknown mode %r" % mode)
    chk = Checker("check-map[%s]" % mode)
    field = f.field

    if mode in ("algebra", "anti-algebra"):
        def mult_cases():
            for i, j in itertools.product(range(src.dim), repeat=2):
                prod = src.mul_basis(i, j)
                if prod is None:
                    yield "skip"
                    continue
                lhs = f.apply_sparse(prod)
                fi, fj = f.col(i), f.col(j)
                try:
                    rhs = tgt.multiply(fi, fj) if mode == "algebra" \
                        else tgt.multiply(fj, fi)
                except TruncationOverflow:
                    yield "skip"
                    continue
                res = ssub(field, lhs, rhs)
                if res:
                    yield False, witness([i, j], res, field)
                else:
                    yield True, None

        chk.run("multiplicative" if mode == "algebra" else "anti-multiplicative",
                mult_cases())
        res = ssub(field, f.apply_sparse(src.unit), tgt.unit)
        chk.record("unital", not res, witness([], res, field))
    else:
        def comult_cases():
            for i in range(src.dim):
                lhs = tgt.comul_vec(f.col(i))
                rhs = {}
                for (j, k), c in src.comul[i].items():
                    if mode == "anti-coalgebra":
                        j, k = k, j
                    for a, ca in f.col(j).items():
                        for b, cb in f.col(k).items():
                            saxpy(field, rhs, field.mul(c, field.mul(ca, cb)),
                                  {(a, b): field.one})
                res = ssub(field, lhs, rhs)
                if res:
                    yield False, witness([i], {str(k): field.to_str(v)
                                               for k, v in res.items()})
                else:
                    yield True, None

        chk.run("comultiplicative" if mode == "coalgebra"
                else "anti-comultiplicative", comult_cases())

        def counit_cases():
            for i in range(src.dim):
                lhs = tgt.counit_vec(f.col(i))
                if lhs != src.counit[i]:
                    yield False, witness([i], [field.sub(lhs, src.counit[i])],
                                         field)
                else:
                    yield True, None

        chk.run("counital", counit_cases())
    return chk.done()


# ---------------------------------------------------------------------------
# constructions on algebras
# ---------------------------------------------------------------------------

def opposite(A):
    """Same space, reversed multiplication."""
    mul = {(j, i): v for (i, j), v in A.mul.items()}
    names = None
    if A.names:
        names = A.names
    return FinDimAlgebra(A.field, A.dim, mul, dict(A.unit),
                         degrees=A.degrees, max_degree=A.max_degree, names=names)


def tensor_algebra(A, B, names=None):
    """Componentwise product on A (x) B; pair (i, j) flattens to i*dimB + j."""
    if A.field != B.field:
        raise AlgebraError("mismatched fields")
    field = A.field
    mul = {}
    for (i, k), pik in A.mul.items():
        for (j, l), qjl in B.mul.items():
            out = {}
            for a, ca in pik.items():
                for b, cb in qjl.items():
                    out[a * B.dim + b] = field.mul(ca, cb)
            mul[(i * B.dim + j, k * B.dim + l)] = out
    unit = stensor(field, A.unit, B.unit, B.dim)
    if names is None and A.names and B.names:
        names = ["%s(x)%s" % (A.names[i], B.names[j])
                 for i in range(A.dim) for j in range(B.dim)]
    return FinDimAlgebra(field, A.dim * B.dim, mul, unit, names=names)


def enveloping(A):
    """A (x) A^op; basis pair (a, b) flattens to a*dim + b."""
    names = None
    if A.names:
        names = ["%s(x)%s~" % (A.names[i], A.names[j])
                 for i in range(A.dim) for j in range(A.dim)]
    return tensor_algebra(A, opposite(A), names=names)


def end_algebra(A):
    """(End(A) under composition, the map a(x)b~ -> (x -> a x b)).

    End(A) basis is matrix units E[p,q] (e_q -> e_p), flattened p*n + q.
    The returned LinMap out of enveloping(A) is verified multiplicative
    and unital.
    """
    field = A.field
    n = A.dim
    mul = {}
    for p, q, r, s in itertools.product(range(n), repeat=4):
        mul[(p * n + q, r * n + s)] = {p * n + s: field.one} if q == r else {}
    unit = {p * n + p: field.one for p in range(n)}
    names = ["E[%d,%d]" % (p, q) for p in range(n) for q in range(n)]
    EndA = FinDimAlgebra(field, n * n, mul, unit, names=names)

    cols = []
    for a in range(n):
        for b in range(n):
            col = {}
            for q in range(n):
                img = A.multiply(A.mul_basis(a, q), {b: field.one})
                for p, c in img.items():
                    col[p * n + q] = c
            cols.append(col)
    imap = linmap_from_cols(field, cols, n * n, src="A^e", tgt="End(A)")
    rep = check_map(imap, enveloping(A), EndA, "algebra")
    if not rep.ok:
        raise AlgebraError("enveloping action map failed validation: %s"
                           % rep.summary())
    return EndA, imap


def dual_coalgebra(A, max_dim=8):
    """Coalgebra on the dual basis of a small algebra."""
    if A.dim > max_dim:
        raise AlgebraError("dualization helper capped at dimension %d" % max_dim)
    field = A.field
    comul = []
    for i in range(A.dim):
        row = {}
        for (j, k), prod in A.mul.items():
            c = prod.get(i)
            if c is not None:
                row[(j, k)] = c
        comul.append(row)
    counit = sparse_to_dense(field, A.unit, A.dim)
    return FinDimCoalgebra(field, A.dim, comul, counit, names=A.names)


def dual_algebra(C, max_dim=8):
    """Algebra on the dual basis of a small coalgebra."""
    if C.dim > max_dim:
        raise AlgebraError("dualization helper capped at dimension %d" % max_dim)
    field = C.field
    mul = {(i, j): {} for i in range(C.dim) for j in range(C.dim)}
    for k in range(C.dim):
        for (i, j), c in C.comul[k].items():
            mul[(i, j)][k] = c
    unit = dense_to_sparse(field, C.counit)
    return FinDimAlgebra(field, C.dim, mul, unit, names=C.names)


def transpose_map(f, src_tag="?", tgt_tag="?"):
    return LinMap(f.matrix.transpose(), src_tag, tgt_tag)


# ---------------------------------------------------------------------------
# degree-truncated presented algebras
# ---------------------------------------------------------------------------

class GradedAlgebra:
    """T(V)/I truncated at a degree bound, degree-1 generators only.

    Each graded piece is a QuotSpace of the word space V^(x)d by the span
    of x (x) r (x) y over relations r and words x, y.  A quotient basis
    element is always a single word (the section picks non-pivot word
    coordinates), which keeps multiplication sparse: concatenate words,
    then project.
    """

    def __init__(self, field, gen_count, relations, trunc_degree,
                 gen_names=None, max_piece_dim=200000):
        if trunc_degree < 0:
            raise AlgebraError("truncation degree must be nonnegative")
        self.field = field
        self.gen_count = gen_count
        self.relations = tuple(tuple(field.coerce(c) for c in r)
                               for r in relations)
        for r in self.relations:
            if len(r) != gen_count * gen_count:
                raise AlgebraError("relation of length %d, expected %d"
                                   % (len(r), gen_count * gen_count))
        self.trunc_degree = trunc_degree
        self.gen_names = tuple(gen_names) if gen_names else tuple(
            "x%d" % i for i in range(gen_count))
        self.pieces = []
        self._mul_cache = {}
        self._flat = None
        n = gen_count
        for d in range(trunc_degree + 1):
            ambient = n ** d
            if ambient > max_piece_dim:
                raise ResourceLimit("degree-%d word space" % d, ambient,
                                    max_piece_dim)
            self.pieces.append(quotient_space(field, ambient,
                                              self._ideal_span(d)))
        self.dims = [p.dim for p in self.pieces]

    def _ideal_span(self, d):
        """Span of x (x) r (x) y in degree d, as sparse vectors."""
        n = self.gen_count
        span = []
        for a in range(d - 1):
            b = d - 2 - a
            right = n ** b
            for x in range(n ** a):
                for r in self.relations:
                    base = x * n * n * right
                    for y in range(right):
                        vec = {}
                        for rk, c in enumerate(r):
                            if c != self.field.zero:
                                vec[base + rk * right + y] = c
                        span.append(vec)
        return span

    def word(self, d, k):
        """The word (tuple of generator indices) behind basis k of piece d."""
        w = self.pieces[d]._free[k]
        out = []
        for _ in range(d):
            out.append(w % self.gen_count)
            w //= self.gen_count
        return tuple(reversed(out))

    def word_index(self, letters):
        idx = 0
        for l in letters:
            idx = idx * self.gen_count + l
        return idx

    def project_word(self, d, widx):
        """Piece-d coordinates of a word index, sparse."""
        return self.pieces[d].project_sparse({widx: self.field.one})

    def mul_pq(self, p, q):
        """Pairing piece(p) x piece(q) -> piece(p+q) as {(i, j): sparse}."""
        key = (p, q)
        cached = self._mul_cache.get(key)
        if cached is not None:
            return cached
        if p + q > self.trunc_degree:
            raise TruncationOverflow(key)
        n = self.gen_count
        out = {}
        shift = n ** q
        for i in range(self.dims[p]):
            wi = self.pieces[p]._free[i]
            for j in range(self.dims[q]):
                wj = self.pieces[q]._free[j]
                out[(i, j)] = self.project_word(p + q, wi * shift + wj)
        self._mul_cache[key] = out
        return out

    def word_name(self, d, k):
        if d == 0:
            return "1"
        return ".".join(self.gen_names[l] for l in self.word(d, k))

    def offset(self, d):
        return sum(self.dims[:d])

    def flat_index(self, d, k):
        return self.offset(d) + k

    def split_flat(self, i):
        for d in range(self.trunc_degree + 1):
            if i < self.dims[d]:
                return d, i
            i -= self.dims[d]
        raise IndexError("flat index out of range")

    def as_algebra(self):
        """Flattened FinDimAlgebra view with degrees and truncation."""
        if self._flat is not None:
            return self._flat
        field = self.field
        total = sum(self.dims)
        degrees = []
        names = []
        for d in range(self.trunc_degree + 1):
            for k in range(self.dims[d]):
                degrees.append(d)
                names.append(self.word_name(d, k))
        mul = {}
        for p in range(self.trunc_degree + 1):
            for q in range(self.trunc_degree + 1 - p):
                table = self.mul_pq(p, q)
                op, oq, opq = self.offset(p), self.offset(q), self.offset(p + q)
                for (i, j), vec in table.items():
                    mul[(op + i, oq + j)] = {opq + k: c for k, c in vec.items()}
        flat = FinDimAlgebra(field, total, mul, {0: field.one},
                             degrees=degrees, max_degree=self.trunc_degree,
                             names=names)
        self._flat = flat
        return flat

    def __repr__(self):
        return "GradedAlgebra(gens=%d, D=%d, dims=%s over %s)" % (
            self.gen_count, self.trunc_degree, self.dims, self.field.kind)


def graded_algebra(field, gen_count, relations, trunc_degree, gen_names=None,
                   verify=True, max_piece_dim=200000):
    """Degree-truncated algebra on degree-1 generators and quadratic relations.

    With verify=True the flattened multiplication is checked associative
    wherever all composites fit under the truncation bound.
    """
    G = GradedAlgebra(field, gen_count, relations, trunc_degree,
                      gen_names=gen_names, max_piece_dim=max_piece_dim)
    if G.pieces[0].dim != 1:
        raise AlgebraError("degree-0 piece must be the unit line")
    if verify:
        rep = check_algebra(G.as_algebra())
        if not rep.ok:
            raise AlgebraError("graded multiplication failed validation: %s"
                               % rep.summary())
    return G
