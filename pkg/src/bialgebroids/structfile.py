"""The structure-definition file format: JSON with sparse exact tensors.

A file declares a scalar field, named spaces, structure tensors as sparse
{index-tuple: value} maps (0-based indices joined by commas, values exact
integers or "p/q" strings), and one structure of a given kind:

    rmatrix            an R-matrix candidate, optionally with a degree
    bialgebroid        base and total algebra, s, t, Delta (as an ambient
                       lift H -> H (x) H), and eps and/or mu, tau, gamma
    yd-module-algebra  a bialgebra, an algebra, an action and a coaction
    weak-hopf          algebra + coalgebra + antipode on one space
    bicoalgebroid      H, C, alpha, beta, mu (against the canonical
                       cotensor basis), eta

Parsing is strict: unknown names, dimension mismatches and unparsable
scalars raise StructureFileError.  Serialization is deterministic (sorted
sparse keys), so fixtures round-trip byte-identically.
"""

import json

from .exactlin import Field, FieldError, Matrix, QQ, GF
from .algebra import (AlgebraError, FinDimAlgebra, FinDimCoalgebra, LinMap,
                      linmap_from_cols)
from .hopf import BialgebraData, ComoduleStruct, ModuleStruct, YDModuleAlgebra
from .bimodtensor import TensorOverA, ae_ring
from .bialgebroid import BialgebroidData, projected_delta
from .constructions import RMatrix
from .weakhopf import BicoalgebroidData, WeakHopfData

FORMAT_TAG = "bialgebroids-structure-v1"

KINDS = ("rmatrix", "bialgebroid", "yd-module-algebra", "weak-hopf",
         "bicoalgebroid")


class StructureFileError(ValueError):
    """Malformed input file."""


def parse_field(spec):
    if isinstance(spec, str):
        s = spec.strip().upper()
        if s in ("Q", "QQ", "RATIONALS"):
            return QQ
        if s.startswith("GF(") and s.endswith(")"):
            try:
                return GF(int(s[3:-1]))
            except (ValueError, FieldError) as exc:
                raise StructureFileError("bad field %r: %s" % (spec, exc))
        if s.startswith("GF"):
            try:
                return GF(int(s[2:]))
            except (ValueError, FieldError) as exc:
                raise StructureFileError("bad field %r: %s" % (spec, exc))
    raise StructureFileError("unknown field spec %r" % (spec,))


def field_name(field):
    return "Q" if field.p is None else "GF(%d)" % field.p


def _parse_key(key, arity, what):
    parts = key.split(",")
    if len(parts) != arity:
        raise StructureFileError("%s: key %r should have %d indices"
                                 % (what, key, arity))
    try:
        idx = tuple(int(p) for p in parts)
    except ValueError:
        raise StructureFileError("%s: bad index tuple %r" % (what, key))
    if any(i < 0 for i in idx):
        raise StructureFileError("%s: negative index in %r" % (what, key))
    return idx


def _parse_scalar(field, v, what):
    try:
        if isinstance(v, (int, str)):
            return field.coerce(v)
    except FieldError as exc:
        raise StructureFileError("%s: %s" % (what, exc))
    raise StructureFileError("%s: scalar %r must be an int or a string"
                             % (what, v))


class StructureFile:
    """A parsed file: field, kind, built objects, and the raw document."""

    def __init__(self, doc, path="<memory>"):
        if not isinstance(doc, dict):
            raise StructureFileError("top level must be an object")
        if doc.get("format") != FORMAT_TAG:
            raise StructureFileError("missing or unknown format tag; "
                                     "expected %r" % FORMAT_TAG)
        self.doc = doc
        self.path = path
        self.field = parse_field(doc.get("field", "Q"))
        self.kind = doc.get("kind")
        if self.kind not in KINDS:
            raise StructureFileError("unknown kind %r; expected one of %s"
                                     % (self.kind, ", ".join(KINDS)))
        self.description = doc.get("description", "")
        self.degree = doc.get("degree")
        if self.degree is not None and (not isinstance(self.degree, int)
                                        or self.degree < 0):
            raise StructureFileError("degree must be a nonnegative integer")
        self.spaces = {}
        for name, spec in (doc.get("spaces") or {}).items():
            dim = spec.get("dim")
            if not isinstance(dim, int) or dim < 0:
                raise StructureFileError("space %r needs a dimension" % name)
            names = spec.get("basis")
            if names is not None and len(names) != dim:
                raise StructureFileError("space %r: %d basis names for "
                                         "dimension %d"
                                         % (name, len(names), dim))
            self.spaces[name] = (dim, names)
        self.tensors = doc.get("tensors") or {}
        self.structure = doc.get("structure") or {}
        self.checks = doc.get("checks") or []
        self._built = None

    # -- tensor readers ------------------------------------------------

    def _tensor(self, name, expect_type):
        spec = self.tensors.get(name)
        if spec is None:
            raise StructureFileError("tensor %r is not defined" % name)
        if spec.get("type") != expect_type:
            raise StructureFileError("tensor %r has type %r, expected %r"
                                     % (name, spec.get("type"), expect_type))
        return spec

    def _space_dim(self, name):
        if name not in self.spaces:
            raise StructureFileError("space %r is not declared" % name)
        return self.spaces[name][0]

    def _ref(self, key, optional=False):
        name = self.structure.get(key)
        if name is None:
            if optional:
                return None
            raise StructureFileError("structure is missing %r" % key)
        return name

    def read_algebra(self, mul_name, unit_name, space):
        dim, names = self.spaces.get(space, (None, None))
        if dim is None:
            raise StructureFileError("space %r is not declared" % space)
        spec = self._tensor(mul_name, "mul")
        if spec.get("space") != space:
            raise StructureFileError("tensor %r is on space %r, expected %r"
                                     % (mul_name, spec.get("space"), space))
        mul = {(i, j): {} for i in range(dim) for j in range(dim)}
        for key, v in (spec.get("entries") or {}).items():
            i, j, k = _parse_key(key, 3, mul_name)
            if max(i, j, k) >= dim:
                raise StructureFileError("%s: index %s out of range for "
                                         "dimension %d" % (mul_name, key, dim))
            mul[(i, j)][k] = _parse_scalar(self.field, v, mul_name)
        unit = self.read_vector(unit_name, dim)
        return FinDimAlgebra(self.field, dim, mul,
                             {k: c for k, c in enumerate(unit)
                              if c != self.field.zero},
                             names=names)

    def read_coalgebra(self, comul_name, counit_name, space):
        dim, names = self.spaces.get(space, (None, None))
        if dim is None:
            raise StructureFileError("space %r is not declared" % space)
        spec = self._tensor(comul_name, "comul")
        if spec.get("space") != space:
            raise StructureFileError("tensor %r is on space %r, expected %r"
                                     % (comul_name, spec.get("space"), space))
        comul = [dict() for _ in range(dim)]
        for key, v in (spec.get("entries") or {}).items():
            i, j, k = _parse_key(key, 3, comul_name)
            if max(i, j, k) >= dim:
                raise StructureFileError("%s: index %s out of range"
                                         % (comul_name, key))
            comul[i][(j, k)] = _parse_scalar(self.field, v, comul_name)
        counit = self.read_vector(counit_name, dim)
        return FinDimCoalgebra(self.field, dim, comul, counit, names=names)

    def read_vector(self, name, dim):
        spec = self._tensor(name, "vector")
        out = [self.field.zero] * dim
        for key, v in (spec.get("entries") or {}).items():
            (i,) = _parse_key(key, 1, name)
            if i >= dim:
                raise StructureFileError("%s: index %d out of range for "
                                         "dimension %d" % (name, i, dim))
            out[i] = _parse_scalar(self.field, v, name)
        return tuple(out)

    def read_matrix(self, name, rows, cols):
        spec = self._tensor(name, "matrix")
        if spec.get("rows") != rows or spec.get("cols") != cols:
            raise StructureFileError(
                "matrix %r has shape %sx%s, expected %dx%d"
                % (name, spec.get("rows"), spec.get("cols"), rows, cols))
        out = [[self.field.zero] * cols for _ in range(rows)]
        for key, v in (spec.get("entries") or {}).items():
            r, c = _parse_key(key, 2, name)
            if r >= rows or c >= cols:
                raise StructureFileError("%s: entry %s out of range" % (name,
                                                                        key))
            out[r][c] = _parse_scalar(self.field, v, name)
        return Matrix(self.field, out, cols=cols)

    def read_action(self, name, h_dim, dim):
        spec = self._tensor(name, "action")
        if spec.get("h_dim") != h_dim or spec.get("dim") != dim:
            raise StructureFileError("action %r has shape (%s,%s), expected "
                                     "(%d,%d)" % (name, spec.get("h_dim"),
                                                  spec.get("dim"), h_dim, dim))
        act = {}
        for key, v in (spec.get("entries") or {}).items():
            h, m, m2 = _parse_key(key, 3, name)
            if h >= h_dim or m >= dim or m2 >= dim:
                raise StructureFileError("%s: entry %s out of range"
                                         % (name, key))
            act.setdefault((h, m), {})[m2] = _parse_scalar(self.field, v, name)
        for h in range(h_dim):
            for m in range(dim):
                act.setdefault((h, m), {})
        return ModuleStruct(self.field, h_dim, dim, act)

    def read_coaction(self, name, h_dim, dim):
        spec = self._tensor(name, "coaction")
        if spec.get("h_dim") != h_dim or spec.get("dim") != dim:
            raise StructureFileError("coaction %r has shape (%s,%s), expected"
                                     " (%d,%d)" % (name, spec.get("h_dim"),
                                                   spec.get("dim"), h_dim,
                                                   dim))
        rho = [dict() for _ in range(dim)]
        for key, v in (spec.get("entries") or {}).items():
            m, m2, h = _parse_key(key, 3, name)
            if h >= h_dim or m >= dim or m2 >= dim:
                raise StructureFileError("%s: entry %s out of range"
                                         % (name, key))
            rho[m][(m2, h)] = _parse_scalar(self.field, v, name)
        return ComoduleStruct(self.field, h_dim, dim, rho)

    def read_rmatrix(self, name):
        spec = self._tensor(name, "rmatrix")
        n = spec.get("n")
        if not isinstance(n, int) or n < 1:
            raise StructureFileError("rmatrix %r needs a positive n" % name)
        entries = {}
        for key, v in (spec.get("entries") or {}).items():
            idx = _parse_key(key, 4, name)
            if max(idx) >= n:
                raise StructureFileError("%s: entry %s out of range"
                                         % (name, key))
            entries[idx] = _parse_scalar(self.field, v, name)
        try:
            return RMatrix(self.field, n, entries)
        except AlgebraError as exc:
            raise StructureFileError(str(exc))

    def read_anchor(self, name, h_dim, a_dim):
        spec = self._tensor(name, "anchor")
        if spec.get("h_dim") != h_dim or spec.get("a_dim") != a_dim:
            raise StructureFileError("anchor %r has shape (%s,%s), expected "
                                     "(%d,%d)" % (name, spec.get("h_dim"),
                                                  spec.get("a_dim"), h_dim,
                                                  a_dim))
        mats = [[[self.field.zero] * a_dim for _ in range(a_dim)]
                for _ in range(h_dim)]
        for key, v in (spec.get("entries") or {}).items():
            h, r, c = _parse_key(key, 3, name)
            if h >= h_dim or r >= a_dim or c >= a_dim:
                raise StructureFileError("%s: entry %s out of range"
                                         % (name, key))
            mats[h][r][c] = _parse_scalar(self.field, v, name)
        return [Matrix(self.field, m, cols=a_dim) for m in mats]

    # -- builders --------------------------------------------------------

    def build(self):
        """Construct the kind-specific domain object (cached)."""
        if self._built is None:
            builder = getattr(self, "_build_" + self.kind.replace("-", "_"))
            self._built = builder()
        return self._built

    def _build_rmatrix(self):
        return self.read_rmatrix(self._ref("r"))

    def _build_bialgebroid(self):
        baseA = self.read_algebra(self._ref("base_mul"),
                                  self._ref("base_unit"),
                                  self.structure.get("base_space", "A"))
        totalH = self.read_algebra(self._ref("total_mul"),
                                   self._ref("total_unit"),
                                   self.structure.get("total_space", "H"))
        s = LinMap(self.read_matrix(self._ref("s"), totalH.dim, baseA.dim),
                   "A", "H")
        t = LinMap(self.read_matrix(self._ref("t"), totalH.dim, baseA.dim),
                   "A", "H")
        ring = ae_ring(totalH, baseA, s, t)
        tensor = TensorOverA(ring)
        delta_amb = self.read_matrix(self._ref("delta"),
                                     totalH.dim * totalH.dim, totalH.dim)
        delta = projected_delta(ring, tensor,
                                [delta_amb.col(h) for h in range(totalH.dim)])
        eps = None
        mu = None
        eps_name = self._ref("eps", optional=True)
        if eps_name:
            eps = LinMap(self.read_matrix(eps_name, baseA.dim, totalH.dim),
                         "H", "A")
        mu_name = self._ref("mu", optional=True)
        if mu_name:
            mu = self.read_anchor(mu_name, totalH.dim, baseA.dim)
        tau = None
        tau_name = self._ref("tau", optional=True)
        if tau_name:
            tau = LinMap(self.read_matrix(tau_name, totalH.dim, totalH.dim),
                         "H", "H")
        gamma = None
        gamma_name = self._ref("gamma", optional=True)
        if gamma_name:
            spec = self._tensor(gamma_name, "matrix")
            if spec.get("cols") != tensor.dim:
                raise StructureFileError(
                    "section %r has %s columns but the canonical tensor "
                    "quotient has dimension %d"
                    % (gamma_name, spec.get("cols"), tensor.dim))
            gamma = LinMap(self.read_matrix(gamma_name,
                                            totalH.dim * totalH.dim,
                                            tensor.dim),
                           "H(x)_A H", "H(x)H")
        try:
            return BialgebroidData(ring, delta, eps=eps, mu=mu, tau=tau,
                                   gamma_section=gamma, tensor=tensor)
        except AlgebraError as exc:
            raise StructureFileError(str(exc))

    def _build_yd_module_algebra(self):
        halg = self.read_algebra(self._ref("h_mul"), self._ref("h_unit"),
                                 self.structure.get("h_space", "H"))
        hco = self.read_coalgebra(self._ref("h_comul"), self._ref("h_counit"),
                                  self.structure.get("h_space", "H"))
        S = None
        Sinv = None
        s_name = self._ref("h_antipode", optional=True)
        if s_name:
            S = LinMap(self.read_matrix(s_name, halg.dim, halg.dim), "H", "H")
        si_name = self._ref("h_antipode_inv", optional=True)
        if si_name:
            Sinv = LinMap(self.read_matrix(si_name, halg.dim, halg.dim),
                          "H", "H")
        H = BialgebraData(halg, hco, S, Sinv)
        A = self.read_algebra(self._ref("a_mul"), self._ref("a_unit"),
                              self.structure.get("a_space", "A"))
        action = self.read_action(self._ref("action"), halg.dim, A.dim)
        coaction = self.read_coaction(self._ref("coaction"), halg.dim, A.dim)
        return YDModuleAlgebra(H, A, action, coaction)

    def _build_weak_hopf(self):
        space = self.structure.get("space", "H")
        alg = self.read_algebra(self._ref("mul"), self._ref("unit"), space)
        coalg = self.read_coalgebra(self._ref("comul"), self._ref("counit"),
                                    space)
        S = None
        Sinv = None
        s_name = self._ref("antipode", optional=True)
        if s_name:
            S = LinMap(self.read_matrix(s_name, alg.dim, alg.dim), "H", "H")
        si_name = self._ref("antipode_inv", optional=True)
        if si_name:
            Sinv = LinMap(self.read_matrix(si_name, alg.dim, alg.dim),
                          "H", "H")
        return WeakHopfData(alg, coalg, S, Sinv)

    def _build_bicoalgebroid(self):
        H = self.read_coalgebra(self._ref("h_comul"), self._ref("h_counit"),
                                self.structure.get("h_space", "H"))
        C = self.read_coalgebra(self._ref("c_comul"), self._ref("c_counit"),
                                self.structure.get("c_space", "C"))
        alpha = LinMap(self.read_matrix(self._ref("alpha"), C.dim, H.dim),
                       "H", "C")
        beta = LinMap(self.read_matrix(self._ref("beta"), C.dim, H.dim),
                      "H", "C")
        from .weakhopf import bicoalgebroid_cotensor
        basis = bicoalgebroid_cotensor(H, C, alpha, beta)
        ncot = self.structure.get("cotensor_dim")
        if ncot != len(basis):
            raise StructureFileError(
                "declared cotensor_dim %s does not match the computed "
                "cotensor dimension %d" % (ncot, len(basis)))
        mu = LinMap(self.read_matrix(self._ref("mu"), H.dim, len(basis)),
                    "H box_C H", "H")
        eta = LinMap(self.read_matrix(self._ref("eta"), H.dim, C.dim),
                     "C", "H")
        return BicoalgebroidData(H, C, alpha, beta, mu, eta, basis)


def load_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise StructureFileError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise StructureFileError("%s: line %d column %d: %s"
                                 % (path, exc.lineno, exc.colno, exc.msg))
    return StructureFile(doc, path=path)


def loads(text, path="<memory>"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureFileError("%s: line %d column %d: %s"
                                 % (path, exc.lineno, exc.colno, exc.msg))
    return StructureFile(doc, path=path)


# ---------------------------------------------------------------------------
# serialization of domain objects into file documents
# ---------------------------------------------------------------------------

def _s(field, x):
    return field.to_str(x)


def _mul_entries(field, A):
    out = {}
    for (i, j), vec in sorted(A.mul.items()):
        for k, c in sorted(vec.items()):
            out["%d,%d,%d" % (i, j, k)] = _s(field, c)
    return out


def _comul_entries(field, C):
    out = {}
    for i, row in enumerate(C.comul):
        for (j, k), c in sorted(row.items()):
            out["%d,%d,%d" % (i, j, k)] = _s(field, c)
    return out


def _vector_entries(field, vec):
    if isinstance(vec, dict):
        items = sorted(vec.items())
    else:
        items = [(i, c) for i, c in enumerate(vec) if c != field.zero]
    return {"%d" % i: _s(field, c) for i, c in items}


def _matrix_entries(field, M):
    out = {}
    for r, row in enumerate(M.entries):
        for c, v in enumerate(row):
            if v != field.zero:
                out["%d,%d" % (r, c)] = _s(field, v)
    return out


def matrix_tensor(field, M):
    return {"type": "matrix", "rows": M.rows, "cols": M.cols,
            "entries": _matrix_entries(field, M)}


def algebra_tensors(field, A, prefix, space):
    return {
        prefix + "_mul": {"type": "mul", "space": space,
                          "entries": _mul_entries(field, A)},
        prefix + "_unit": {"type": "vector", "space": space,
                           "entries": _vector_entries(field, A.unit)},
    }


def coalgebra_tensors(field, C, prefix, space):
    return {
        prefix + "_comul": {"type": "comul", "space": space,
                            "entries": _comul_entries(field, C)},
        prefix + "_counit": {"type": "vector", "space": space,
                             "entries": _vector_entries(field, C.counit)},
    }


def _space_decl(dim, obj):
    decl = {"dim": dim}
    names = getattr(obj, "names", None)
    if names:
        decl["basis"] = list(names)
    return decl


def file_from_rmatrix(R, description="", degree=None, checks=None):
    field = R.field
    entries = {"%d,%d,%d,%d" % key: _s(field, v)
               for key, v in sorted(R.entries.items())}
    doc = {
        "format": FORMAT_TAG,
        "field": field_name(field),
        "kind": "rmatrix",
        "description": description,
        "spaces": {"V": {"dim": R.n}},
        "tensors": {"R": {"type": "rmatrix", "n": R.n, "entries": entries}},
        "structure": {"r": "R"},
    }
    if degree is not None:
        doc["degree"] = degree
    if checks:
        doc["checks"] = checks
    return doc


def file_from_bialgebroid(d, description="", checks=None):
    field = d.field
    H, A = d.H, d.A
    tensors = {}
    tensors.update(algebra_tensors(field, A, "base", "A"))
    tensors.update(algebra_tensors(field, H, "total", "H"))
    tensors["s"] = matrix_tensor(field, d.ring.s.matrix)
    tensors["t"] = matrix_tensor(field, d.ring.t.matrix)
    # store Delta through the canonical section so it reparses identically
    amb_cols = [d.delta_lift(h) for h in range(H.dim)]
    amb = Matrix.from_cols(field,
                           [[col.get(i, field.zero)
                             for i in range(H.dim * H.dim)]
                            for col in amb_cols], H.dim * H.dim)
    tensors["Delta"] = matrix_tensor(field, amb)
    structure = {"base_space": "A", "total_space": "H",
                 "base_mul": "base_mul", "base_unit": "base_unit",
                 "total_mul": "total_mul", "total_unit": "total_unit",
                 "s": "s", "t": "t", "delta": "Delta"}
    if d.eps is not None:
        tensors["eps"] = matrix_tensor(field, d.eps.matrix)
        structure["eps"] = "eps"
    if d.mu is not None:
        entries = {}
        for h, M in enumerate(d.mu):
            for r, row in enumerate(M.entries):
                for c, v in enumerate(row):
                    if v != field.zero:
                        entries["%d,%d,%d" % (h, r, c)] = _s(field, v)
        tensors["mu"] = {"type": "anchor", "h_dim": H.dim, "a_dim": A.dim,
                         "entries": entries}
        structure["mu"] = "mu"
    if d.tau is not None:
        tensors["tau"] = matrix_tensor(field, d.tau.matrix)
        structure["tau"] = "tau"
    if d.gamma_section is not None:
        tensors["gamma"] = matrix_tensor(field, d.gamma_section.matrix)
        structure["gamma"] = "gamma"
    doc = {
        "format": FORMAT_TAG,
        "field": field_name(field),
        "kind": "bialgebroid",
        "description": description,
        "spaces": {"A": _space_decl(A.dim, A), "H": _space_decl(H.dim, H)},
        "tensors": tensors,
        "structure": structure,
    }
    if checks:
        doc["checks"] = checks
    return doc


def file_from_yd(yd, description="", checks=None):
    field = yd.H.field
    H, A = yd.H, yd.A
    tensors = {}
    tensors.update(algebra_tensors(field, H.alg, "h", "H"))
    tensors.update(coalgebra_tensors(field, H.coalg, "h", "H"))
    tensors.update(algebra_tensors(field, A, "a", "A"))
    act_entries = {}
    for (h, m), vec in sorted(yd.action.act.items()):
        for m2, c in sorted(vec.items()):
            act_entries["%d,%d,%d" % (h, m, m2)] = _s(field, c)
    tensors["action"] = {"type": "action", "h_dim": H.dim, "dim": A.dim,
                         "entries": act_entries}
    rho_entries = {}
    for m, row in enumerate(yd.coaction.rho):
        for (m2, h), c in sorted(row.items()):
            rho_entries["%d,%d,%d" % (m, m2, h)] = _s(field, c)
    tensors["coaction"] = {"type": "coaction", "h_dim": H.dim, "dim": A.dim,
                           "entries": rho_entries}
    structure = {"h_space": "H", "a_space": "A",
                 "h_mul": "h_mul", "h_unit": "h_unit",
                 "h_comul": "h_comul", "h_counit": "h_counit",
                 "a_mul": "a_mul", "a_unit": "a_unit",
                 "action": "action", "coaction": "coaction"}
    if H.antipode is not None:
        tensors["S"] = matrix_tensor(field, H.antipode.matrix)
        structure["h_antipode"] = "S"
    if H.antipode_inv is not None:
        tensors["Sinv"] = matrix_tensor(field, H.antipode_inv.matrix)
        structure["h_antipode_inv"] = "Sinv"
    doc = {
        "format": FORMAT_TAG,
        "field": field_name(field),
        "kind": "yd-module-algebra",
        "description": description,
        "spaces": {"H": _space_decl(H.dim, H.alg),
                   "A": _space_decl(A.dim, A)},
        "tensors": tensors,
        "structure": structure,
    }
    if checks:
        doc["checks"] = checks
    return doc


def file_from_weak_hopf(wh, description="", checks=None):
    field = wh.field
    tensors = {}
    tensors.update(algebra_tensors(field, wh.alg, "h", "H"))
    tensors.update(coalgebra_tensors(field, wh.coalg, "h", "H"))
    structure = {"space": "H", "mul": "h_mul", "unit": "h_unit",
                 "comul": "h_comul", "counit": "h_counit"}
    if wh.antipode is not None:
        tensors["S"] = matrix_tensor(field, wh.antipode.matrix)
        structure["antipode"] = "S"
    if wh.antipode_inv is not None:
        tensors["Sinv"] = matrix_tensor(field, wh.antipode_inv.matrix)
        structure["antipode_inv"] = "Sinv"
    doc = {
        "format": FORMAT_TAG,
        "field": field_name(field),
        "kind": "weak-hopf",
        "description": description,
        "spaces": {"H": _space_decl(wh.dim, wh.alg)},
        "tensors": tensors,
        "structure": structure,
    }
    if checks:
        doc["checks"] = checks
    return doc


def file_from_bicoalgebroid(b, description="", checks=None):
    field = b.field
    tensors = {}
    tensors.update(coalgebra_tensors(field, b.H, "h", "H"))
    tensors.update(coalgebra_tensors(field, b.C, "c", "C"))
    tensors["alpha"] = matrix_tensor(field, b.alpha.matrix)
    tensors["beta"] = matrix_tensor(field, b.beta.matrix)
    tensors["mu"] = matrix_tensor(field, b.mu.matrix)
    tensors["eta"] = matrix_tensor(field, b.eta.matrix)
    doc = {
        "format": FORMAT_TAG,
        "field": field_name(field),
        "kind": "bicoalgebroid",
        "description": description,
        "spaces": {"H": _space_decl(b.H.dim, b.H),
                   "C": _space_decl(b.C.dim, b.C)},
        "tensors": tensors,
        "structure": {"h_space": "H", "c_space": "C",
                      "h_comul": "h_comul", "h_counit": "h_counit",
                      "c_comul": "c_comul", "c_counit": "c_counit",
                      "alpha": "alpha", "beta": "beta", "mu": "mu",
                      "eta": "eta", "cotensor_dim": len(b.cotensor_basis)},
    }
    if checks:
        doc["checks"] = checks
    return doc


def dump_doc(doc):
    """Deterministic JSON bytes for a file document."""
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")
