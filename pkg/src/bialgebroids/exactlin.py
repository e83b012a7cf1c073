"""Exact scalar arithmetic and deterministic dense linear algebra.

Scalars are `fractions.Fraction` over the rationals, or least nonnegative
residues (plain ints) over a prime field GF(p).  No floating point is used
anywhere.  Every routine is a pure function of its inputs and produces
bit-identical results across runs: row reduction always picks the leftmost
pivot column and the earliest available row.
"""

from fractions import Fraction


class FieldError(ValueError):
    """Bad field specification or unparsable scalar."""


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Field:
    """The rationals, or GF(p) with p prime.

    Owns all scalar arithmetic so the rest of the package never needs to
    know which representation is in play.  Rational scalars are Fraction
    instances (always in lowest terms); prime-field scalars are ints in
    range(p).
    """

    __slots__ = ("p", "zero", "one")

    def __init__(self, p=None):
        if p is not None and not _is_prime(p):
            raise FieldError("modulus %r is not prime" % (p,))
        self.p = p
        if p is None:
            self.zero = Fraction(0)
            self.one = Fraction(1)
        else:
            self.zero = 0
            self.one = 1

    @property
    def kind(self):
        return "Q" if self.p is None else "GF(%d)" % self.p

    def __repr__(self):
        return "Field(%s)" % self.kind

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverting zero in %s" % self.kind)
        if self.p is None:
            return self.one / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return Fraction(n) if self.p is None else n % self.p

    def coerce(self, x):
        """Turn an int, Fraction or string into a canonical scalar."""
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, bool):
            raise FieldError("bool is not a scalar")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            if self.p is None:
                return x
            den = x.denominator % self.p
            if den == 0:
                raise FieldError("denominator of %s vanishes mod %d" % (x, self.p))
            return self.mul(x.numerator % self.p, self.inv(den))
        raise FieldError("cannot coerce %r to a %s scalar" % (x, self.kind))

    def parse(self, text):
        """Parse "7", "-3" or "p/q" exactly."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                frac = Fraction(int(num), int(den))
            else:
                frac = Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError("bad scalar %r: %s" % (text, exc)) from None
        return self.coerce(frac)

    def to_str(self, x):
        return str(x)


QQ = Field()


def GF(p):
    return Field(p)


# ---------------------------------------------------------------------------
# sparse row reduction core
#
# Rows are dicts {column: nonzero scalar}.  `rref_sparse` returns the unique
# reduced row echelon basis of the span, keyed by pivot column, so any two
# generating sets of the same span produce identical output.
# ---------------------------------------------------------------------------

def _as_sparse(field, vec):
    zero = field.zero
    coerce = field.coerce
    if isinstance(vec, dict):
        out = {c: coerce(v) for c, v in vec.items()}
    else:
        out = {c: coerce(v) for c, v in enumerate(vec)}
    return {c: v for c, v in out.items() if v != zero}


def rref_sparse(field, rows):
    """Reduced row echelon basis of span(rows) as {pivot_col: row_dict}.

    Invariant: every stored row is 1 at its pivot column and zero at all
    other pivot columns; incoming rows are fully reduced before insertion
    and the new pivot is back-substituted into every existing row.
    """
    zero = field.zero
    sub, mul, inv = field.sub, field.mul, field.inv
    reduced = {}
    for vec in rows:
        row = reduce_sparse(field, reduced, vec)
        if not row:
            continue
        lead = min(row)
        scale = inv(row[lead])
        row = {c: mul(scale, v) for c, v in row.items()}
        for pc, prow in reduced.items():
            coeff = prow.get(lead)
            if coeff is None:
                continue
            new = dict(prow)
            del new[lead]
            for c, v in row.items():
                if c == lead:
                    continue
                nv = sub(new.get(c, zero), mul(coeff, v))
                if nv == zero:
                    new.pop(c, None)
                else:
                    new[c] = nv
            reduced[pc] = new
        reduced[lead] = row
    return reduced


def reduce_sparse(field, reduced, vec):
    """Residual of vec modulo the span held in `reduced` (sparse dict)."""
    zero = field.zero
    sub, mul = field.sub, field.mul
    row = _as_sparse(field, vec)
    for p in sorted(row):
        if p not in row:
            continue
        piv = reduced.get(p)
        if piv is None:
            continue
        coeff = row.pop(p)
        for c, v in piv.items():
            if c == p:
                continue
            nv = sub(row.get(c, zero), mul(coeff, v))
            if nv == zero:
                row.pop(c, None)
            else:
                row[c] = nv
    return row


class Matrix:
    """Immutable dense matrix over a Field, entries in canonical form."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in entries)
        self.field = field
        self.rows = len(rows)
        if rows:
            self.cols = len(rows[0])
            if any(len(r) != self.cols for r in rows):
                raise ValueError("ragged rows")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            self.cols = cols
        self.entries = rows

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, field, cols, nrows):
        cols = [tuple(c) for c in cols]
        return cls(field, [[c[i] for c in cols] for i in range(nrows)], cols=len(cols))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.cols, self.entries))

    def __repr__(self):
        return "Matrix(%dx%d over %s)" % (self.rows, self.cols, self.field.kind)

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length %d, expected %d" % (len(vec), self.cols))
        f = self.field
        zero = f.zero
        out = []
        for r in self.entries:
            acc = zero
            for a, x in zip(r, vec):
                if a != zero and x != zero:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        zero = f.zero
        bt = list(zip(*other.entries)) if other.entries else [[]] * other.cols
        out = []
        for r in self.entries:
            row = []
            for c in bt:
                acc = zero
                for a, b in zip(r, c):
                    if a != zero and b != zero:
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(f, out, cols=other.cols)

    def add(self, other):
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)],
                      cols=self.cols)

    def sub(self, other):
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)],
                      cols=self.cols)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.entries],
                      cols=self.cols)

    def transpose(self):
        return Matrix(self.field, list(zip(*self.entries)) if self.entries else [],
                      cols=self.rows)

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.entries for x in r)


def rank(M):
    return len(rref_sparse(M.field, M.entries))


def kernel_basis(M):
    """Basis of {v : Mv = 0}, by deterministic Gaussian elimination.

    One basis vector per free column, ordered by ascending free column,
    each scaled so its first nonzero coordinate is 1.
    """
    field = M.field
    zero, one = field.zero, field.one
    reduced = rref_sparse(field, M.entries)
    pivots = sorted(reduced)
    free = [c for c in range(M.cols) if c not in reduced]
    basis = []
    for fcol in free:
        vec = [zero] * M.cols
        vec[fcol] = one
        for p in pivots:
            coeff = reduced[p].get(fcol)
            if coeff is not None:
                vec[p] = field.neg(coeff)
        for x in vec:
            if x != zero:
                if x != one:
                    scale = field.inv(x)
                    vec = [field.mul(scale, y) for y in vec]
                break
        basis.append(tuple(vec))
    return basis


def solve_linear(M, b):
    """One solution of Mx = b (free variables zero), or None if inconsistent."""
    field = M.field
    if len(b) != M.rows:
        raise ValueError("rhs length %d, expected %d" % (len(b), M.rows))
    n = M.cols
    aug = []
    for row, rhs in zip(M.entries, b):
        r = {c: v for c, v in enumerate(row) if v != field.zero}
        rhs = field.coerce(rhs)
        if rhs != field.zero:
            r[n] = rhs
        aug.append(r)
    reduced = rref_sparse(field, aug)
    if n in reduced:
        return None
    x = [field.zero] * n
    for p, row in reduced.items():
        x[p] = row.get(n, field.zero)
    return tuple(x)


def invert(M):
    """Exact inverse of a square matrix, or None if singular."""
    if M.rows != M.cols:
        return None
    field = M.field
    n = M.cols
    aug = []
    for i, row in enumerate(M.entries):
        r = {c: v for c, v in enumerate(row) if v != field.zero}
        r[n + i] = field.one
        aug.append(r)
    reduced = rref_sparse(field, aug)
    if sorted(p for p in reduced if p < n) != list(range(n)):
        return None
    out = []
    for i in range(n):
        row = reduced[i]
        out.append([row.get(n + j, field.zero) for j in range(n)])
    return Matrix(field, out, cols=n)


def span_rref(field, vectors, ncols):
    """Canonical (RREF) basis of the span, as dense tuples sorted by pivot."""
    reduced = rref_sparse(field, vectors)
    zero = field.zero
    rows = []
    for p in sorted(reduced):
        row = reduced[p]
        rows.append(tuple(row.get(c, zero) for c in range(ncols)))
    return tuple(rows)


def same_span(field, vecs1, vecs2, ncols):
    return span_rref(field, vecs1, ncols) == span_rref(field, vecs2, ncols)


class QuotSpace:
    """A quotient of k^ambient_dim by a span of relations, with a section.

    The section picks the non-pivot coordinates of the reduced relation
    span, so projection . section is the identity on the quotient and the
    projection annihilates exactly the relation span.  Everything is
    immutable after construction.
    """

    __slots__ = ("field", "ambient_dim", "relation_span", "dim",
                 "projection", "section", "_reduced", "_free", "_free_index")

    def __init__(self, field, ambient_dim, relations):
        self.field = field
        self.ambient_dim = ambient_dim
        reduced = rref_sparse(field, relations)
        for p, row in reduced.items():
            if max(row) >= ambient_dim:
                raise ValueError("relation longer than ambient dimension")
        self._reduced = reduced
        zero = field.zero
        self.relation_span = tuple(
            tuple(reduced[p].get(c, zero) for c in range(ambient_dim))
            for p in sorted(reduced))
        free = [c for c in range(ambient_dim) if c not in reduced]
        self._free = free
        self._free_index = {c: k for k, c in enumerate(free)}
        self.dim = len(free)
        proj_cols = [self.project_basis(j) for j in range(ambient_dim)]
        self.projection = Matrix.from_cols(field, proj_cols, self.dim)
        sec_cols = []
        for c in free:
            col = [zero] * ambient_dim
            col[c] = field.one
            sec_cols.append(tuple(col))
        self.section = Matrix.from_cols(field, sec_cols, ambient_dim)

    def __repr__(self):
        return "QuotSpace(%d -> %d over %s)" % (self.ambient_dim, self.dim,
                                                self.field.kind)

    def project_sparse(self, svec):
        """Quotient coordinates of a sparse ambient vector, as a sparse dict."""
        field = self.field
        residual = reduce_sparse(field, self._reduced, svec)
        idx = self._free_index
        return {idx[c]: v for c, v in residual.items()}

    def project_basis(self, j):
        """Quotient coordinates of the j-th ambient basis vector."""
        out = [self.field.zero] * self.dim
        for k, v in self.project_sparse({j: self.field.one}).items():
            out[k] = v
        return tuple(out)

    def project(self, vec):
        out = [self.field.zero] * self.dim
        for k, v in self.project_sparse(_as_sparse(self.field, vec)).items():
            out[k] = v
        return tuple(out)

    def lift(self, qvec):
        """Canonical ambient representative of quotient coordinates."""
        out = [self.field.zero] * self.ambient_dim
        for k, v in enumerate(qvec):
            if v != self.field.zero:
                out[self._free[k]] = v
        return tuple(out)

    def lift_sparse(self, sq):
        return {self._free[k]: v for k, v in sq.items() if v != self.field.zero}

    def is_relation(self, vec):
        return not reduce_sparse(self.field, self._reduced, vec)


def quotient_space(field, ambient_dim, relations):
    """QuotSpace of k^ambient_dim by span(relations)."""
    for r in relations:
        if not isinstance(r, dict) and len(r) != ambient_dim:
            raise ValueError("relation of length %d in ambient dimension %d"
                             % (len(r), ambient_dim))
    return QuotSpace(field, ambient_dim, relations)


# ---------------------------------------------------------------------------
# small sparse-vector helpers shared by the tensor machinery
# ---------------------------------------------------------------------------

def sadd(field, a, b):
    """Sum of two sparse dicts."""
    out = dict(a)
    zero = field.zero
    for k, v in b.items():
        nv = field.add(out.get(k, zero), v)
        if nv == zero:
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def ssub(field, a, b):
    out = dict(a)
    zero = field.zero
    for k, v in b.items():
        nv = field.sub(out.get(k, zero), v)
        if nv == zero:
            out.pop(k, None)
        else:
            out[k] = nv
    return out


def sscale(field, c, a):
    if c == field.zero:
        return {}
    return {k: field.mul(c, v) for k, v in a.items()}


def saxpy(field, acc, c, a):
    """acc += c * a, in place, dropping zeros."""
    if c == field.zero:
        return acc
    zero = field.zero
    for k, v in a.items():
        nv = field.add(acc.get(k, zero), field.mul(c, v))
        if nv == zero:
            acc.pop(k, None)
        else:
            acc[k] = nv
    return acc


def sparse_to_dense(field, svec, n):
    out = [field.zero] * n
    for k, v in svec.items():
        out[k] = v
    return tuple(out)


def dense_to_sparse(field, vec):
    return _as_sparse(field, vec)
