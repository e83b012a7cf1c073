"""Command line front end: run checks and builders on structure files.

    bialgebroids <command> --input FILE [--mode M] [--degree D]
                 [--format text|json] [--field q|gfP]

Commands: check-qybe, build-frt, check-bialgebroid, convert,
check-antipode, build-smash, check-yd, check-weak-hopf,
build-bicoalgebroid, check-bicoalgebroid.

Exit status: 0 all requested checks pass, 1 an axiom fails, 2 input
error, 3 resource limit.  JSON reports are byte-identical across runs
for identical inputs; wall-clock timing is shown in text mode only and
pinned to 0 in JSON so determinism survives.
"""

import argparse
import json
import sys
import time

from .algebra import AlgebraError, ResourceLimit
from .exactlin import FieldError, GF, QQ
from .reports import Report
from . import structfile
from .structfile import StructureFile, StructureFileError, load_file
from .bialgebroid import (check_antipode, check_lu, check_takeuchi, check_xu,
                          eps_from_mu, find_antipode_section, mu_from_eps)
from .constructions import (check_lu_graded, check_qybe, frt_bialgebra,
                            frt_bialgebroid, yd_antipode, yd_bialgebroid)
from .hopf import (check_bialgebra, check_braided_commutative,
                   check_comodule_algebra_op, check_module_algebra,
                   check_yd_module_algebra, check_yetter_drinfeld)
from .weakhopf import (bicoalgebroid_from_weak_hopf, check_bicoalgebroid,
                       check_weak_bialgebra, check_weak_hopf, eps_t,
                       target_coalgebra)

COMMANDS = ("check-qybe", "build-frt", "check-bialgebroid", "convert",
            "check-antipode", "build-smash", "check-yd", "check-weak-hopf",
            "build-bicoalgebroid", "check-bicoalgebroid")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _need_kind(sf, kind):
    if sf.kind != kind:
        raise StructureFileError("command needs a %r file, got %r"
                                 % (kind, sf.kind))


def _sparse_meta(field, svec):
    return {str(k): field.to_str(v) for k, v in sorted(svec.items())}


def run(sf, command, mode="all", degree=None):
    """Execute one command against a parsed structure file."""
    if command == "check-qybe":
        _need_kind(sf, "rmatrix")
        return check_qybe(sf.build())

    if command == "build-frt":
        _need_kind(sf, "rmatrix")
        R = sf.build()
        D = degree if degree is not None else (sf.degree or 2)
        rep = Report("build-frt")
        qy = check_qybe(R)
        rep.extend(qy)
        if not qy.ok:
            rep.meta["note"] = ("the matrix bialgebra is built anyway; "
                                "the braided plane needs the QYBE")
            B = frt_bialgebra(R, D)
            rep.extend(check_bialgebra(B), prefix="frt-")
            rep.meta["matrix_bialgebra_dims"] = B.graded.dims
            return rep
        gb = frt_bialgebroid(R, D)
        rep.extend(check_bialgebra(gb.B), prefix="frt-")
        rep.extend(check_yd_module_algebra(gb.plane), prefix="plane-")
        lu = check_lu_graded(gb)
        rep.extend(lu)
        rep.meta.update(lu.meta)
        rep.meta["matrix_bialgebra_dims"] = gb.B.graded.dims
        rep.meta["braided_plane_dims"] = gb.S.dims
        rep.meta["smash_dim"] = gb.H.dim
        return rep

    if command == "check-bialgebroid":
        _need_kind(sf, "bialgebroid")
        d = sf.build()
        rep = Report("check-bialgebroid")
        modes = ("lu", "xu", "takeuchi") if mode == "all" else (mode,)
        for m in modes:
            if m == "lu":
                if d.eps is None:
                    raise StructureFileError("lu mode needs a counit")
                rep.extend(check_lu(d), prefix="" if mode != "all" else "")
            elif m == "xu":
                dm = d if d.mu is not None else \
                    d.with_updates(mu=mu_from_eps(d, strict=False))
                rep.extend(check_xu(dm))
            elif m == "takeuchi":
                dm = d if d.mu is not None else \
                    d.with_updates(mu=mu_from_eps(d, strict=False))
                rep.extend(check_takeuchi(dm))
            else:
                raise StructureFileError("unknown mode %r" % m)
        # drop duplicate ae-ring items when running several modes
        seen = set()
        unique = []
        for it in rep.items:
            key = it.axiom
            if key in seen:
                continue
            seen.add(key)
            unique.append(it)
        rep.items = unique
        return rep

    if command == "convert":
        _need_kind(sf, "bialgebroid")
        from .reports import CheckItem
        d = sf.build()
        rep = Report("convert")
        field = d.field
        if d.eps is not None and d.mu is None:
            try:
                mu = mu_from_eps(d)
            except AlgebraError as exc:
                rep.items.append(CheckItem("convert-eps-to-mu", "fail",
                                           {"detail": str(exc)}, 0))
                return rep
            rep.meta["direction"] = "eps-to-mu"
            entries = {}
            for h, M in enumerate(mu):
                for r, row in enumerate(M.entries):
                    for c, v in enumerate(row):
                        if v != field.zero:
                            entries["%d,%d,%d" % (h, r, c)] = field.to_str(v)
            rep.meta["anchor"] = entries
            ok = eps_from_mu(d.with_updates(mu=mu)).matrix == d.eps.matrix
            rep.items.append(CheckItem("convert-eps-to-mu", "pass", None,
                                       d.H.dim * d.A.dim))
            rep.items.append(CheckItem(
                "roundtrip-eps", "pass" if ok else "fail",
                None if ok else {"detail": "eps_mu(mu_eps) != eps"},
                d.H.dim))
        elif d.mu is not None and d.eps is None:
            eps = eps_from_mu(d)
            rep.meta["direction"] = "mu-to-eps"
            rep.meta["counit"] = structfile.matrix_tensor(field, eps.matrix)
            mu_back = mu_from_eps(d.with_updates(eps=eps), strict=False)
            ok = all(a == b for a, b in zip(mu_back, d.mu))
            rep.items.append(CheckItem("convert-mu-to-eps", "pass", None,
                                       d.H.dim))
            rep.items.append(CheckItem(
                "roundtrip-mu", "pass" if ok else "fail",
                None if ok else {"detail": "mu_eps(eps_mu) != mu"},
                d.H.dim * d.A.dim))
        else:
            mu = mu_from_eps(d, strict=False)
            ok = all(a == b for a, b in zip(mu, d.mu)) and \
                eps_from_mu(d).matrix == d.eps.matrix
            rep.meta["direction"] = "verify-both"
            rep.items.append(CheckItem("eps-matches-mu",
                                       "pass" if ok else "fail",
                                       None, d.H.dim))
        return rep

    if command == "check-antipode":
        _need_kind(sf, "bialgebroid")
        d = sf.build()
        if d.tau is None:
            raise StructureFileError("no antipode tensor in the file")
        gamma = d.gamma_section
        rep = Report("check-antipode")
        if gamma is None:
            gamma = find_antipode_section(d, d.tau)
            if gamma is None:
                from .reports import CheckItem
                rep.items.append(CheckItem(
                    "ANT3-section", "fail",
                    {"detail": "no section satisfies ANT3"}, 1))
                return rep
            rep.meta["section"] = "solved"
        rep.extend(check_antipode(d, d.tau, gamma))
        return rep

    if command == "build-smash":
        _need_kind(sf, "yd-module-algebra")
        yd = sf.build()
        rep = Report("build-smash")
        rep.extend(check_yd_module_algebra(yd), prefix="yd-")
        d = yd_bialgebroid(yd)
        rep.extend(check_lu(d))
        rep.meta["smash_dim"] = d.H.dim
        rep.meta["tensor_square_dim"] = d.tensor.dim
        if yd.H.antipode is not None:
            tau, gamma = yd_antipode(yd, d, strict=False)
            rep.extend(check_antipode(d, tau, gamma))
        return rep

    if command == "check-yd":
        _need_kind(sf, "yd-module-algebra")
        yd = sf.build()
        rep = Report("check-yd")
        rep.extend(check_module_algebra(yd.H, yd.A, yd.action))
        rep.extend(check_comodule_algebra_op(yd.H, yd.A, yd.coaction))
        ydrep = check_yetter_drinfeld(yd.H, yd.dim, yd.action, yd.coaction)
        for it in ydrep.items:
            if it.axiom == "yd-compatibility":
                rep.items.append(it)
        rep.extend(check_braided_commutative(yd))
        return rep

    if command == "check-weak-hopf":
        _need_kind(sf, "weak-hopf")
        return check_weak_hopf(sf.build())

    if command == "build-bicoalgebroid":
        _need_kind(sf, "weak-hopf")
        wh = sf.build()
        rep = Report("build-bicoalgebroid")
        rep.extend(check_weak_hopf(wh))
        if not rep.ok:
            return rep
        lm, image = eps_t(wh)
        rep.meta["eps_t_image_dim"] = len(image)
        b = bicoalgebroid_from_weak_hopf(wh)
        rep.meta["base_coalgebra_dim"] = b.C.dim
        rep.meta["cotensor_dim"] = len(b.cotensor_basis)
        rep.extend(check_bicoalgebroid(b))
        return rep

    if command == "check-bicoalgebroid":
        _need_kind(sf, "bicoalgebroid")
        return check_bicoalgebroid(sf.build())

    raise StructureFileError("unknown command %r" % command)


def emit_report(report, fmt="text", command="", input_path="", mode=None,
                field=None, timing_ms=None):
    """Render a report; json output is deterministic byte for byte."""
    exit_code = EXIT_PASS if report.ok else EXIT_FAIL
    if fmt == "json":
        doc = {
            "tool": "bialgebroids",
            "command": command,
            "input": input_path,
            "mode": mode,
            "field": field,
            "status": report.status,
            "exit_code": exit_code,
            "checks": [
                {
                    "axiom": it.axiom,
                    "status": it.status,
                    "instances": it.instances,
                    "skipped": it.skipped,
                    "witness": it.witness,
                    "note": it.note or None,
                }
                for it in report.items
            ],
            "meta": report.meta,
            # pinned for reproducibility; wall time goes to text output
            "timing_ms": 0,
        }
        return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode()
    lines = []
    lines.append("%s on %s [%s]" % (command or report.name, input_path,
                                    field or ""))
    for it in report.items:
        status = it.status.upper()
        extra = ""
        if it.skipped:
            extra = "  (%d checked, %d outside the degree bound)" % (
                it.instances, it.skipped)
        lines.append("%s: %s%s" % (it.axiom, status, extra))
        if it.witness:
            lines.append("    witness: %s" % json.dumps(it.witness,
                                                        sort_keys=True))
        if it.note:
            lines.append("    note: %s" % it.note)
    for key in sorted(report.meta):
        lines.append("# %s: %s" % (key, json.dumps(report.meta[key],
                                                   sort_keys=True)))
    lines.append("result: %s" % report.status.upper())
    if timing_ms is not None:
        lines.append("time: %d ms" % int(timing_ms))
    return ("\n".join(lines) + "\n").encode()


def _parse_field_flag(text):
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("gf"):
        return GF(int(t[2:]))
    raise StructureFileError("bad --field %r; use q or gfP" % text)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="bialgebroids",
        description="construct and verify generalized bialgebra structures "
                    "with exact arithmetic")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", required=True, help="structure file")
    parser.add_argument("--mode", default="all",
                        choices=["lu", "xu", "takeuchi", "all"],
                        help="axiom system for check-bialgebroid")
    parser.add_argument("--degree", type=int, default=None,
                        help="truncation degree for graded builds")
    parser.add_argument("--format", default="text", choices=["text", "json"])
    parser.add_argument("--field", default=None,
                        help="override the file's scalar field (q or gfP)")
    args = parser.parse_args(argv)

    t0 = time.perf_counter()
    try:
        sf = load_file(args.input)
        if args.field is not None:
            override = _parse_field_flag(args.field)
            doc = dict(sf.doc)
            doc["field"] = structfile.field_name(override)
            sf = StructureFile(doc, path=sf.path)
        report = run(sf, args.command, mode=args.mode, degree=args.degree)
    except ResourceLimit as exc:
        sys.stderr.write("resource limit: %s\n" % exc)
        return EXIT_RESOURCE
    except (StructureFileError, FieldError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    except AlgebraError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    ms = (time.perf_counter() - t0) * 1000.0
    out = emit_report(report, fmt=args.format, command=args.command,
                      input_path=args.input, mode=args.mode,
                      field=structfile.field_name(sf.field),
                      timing_ms=ms if args.format == "text" else None)
    sys.stdout.write(out.decode("utf-8"))
    return EXIT_PASS if report.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
