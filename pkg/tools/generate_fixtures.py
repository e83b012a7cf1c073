#!/usr/bin/env python3
"""Regenerate the bundled structure files under src/bialgebroids/data/fixtures.

Run from the repository root after changing fixture builders:

    python tools/generate_fixtures.py
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from bialgebroids import fixtures as fx
from bialgebroids import structfile as sfmod
from bialgebroids.constructions import (flip_rmatrix, identity_rmatrix,
                                        standard_q_rmatrix, RMatrix,
                                        yd_antipode, yd_bialgebroid)
from bialgebroids.exactlin import GF, QQ
from bialgebroids.weakhopf import (bicoalgebroid_from_weak_hopf,
                                   group_weak_hopf, pair_groupoid)

OUT = pathlib.Path(__file__).resolve().parents[1] / "src" / "bialgebroids" \
    / "data" / "fixtures"


def write(name, doc):
    OUT.mkdir(parents=True, exist_ok=True)
    path = OUT / name
    path.write_bytes(sfmod.dump_doc(doc))
    print("wrote", path)


def main():
    F = QQ
    G5 = GF(5)

    write("rmatrix_identity_n2.json", sfmod.file_from_rmatrix(
        identity_rmatrix(F, 2), "identity on V (x) V, n = 2", degree=2))
    write("rmatrix_flip_n2.json", sfmod.file_from_rmatrix(
        flip_rmatrix(F, 2), "the flip on V (x) V, n = 2", degree=2))
    write("rmatrix_q2_n2.json", sfmod.file_from_rmatrix(
        standard_q_rmatrix(F, 2, 2),
        "standard one-parameter solution at q = 2, scaled so the braided "
        "plane is the quantum plane", degree=2))
    bad_entries = dict(identity_rmatrix(F, 2).entries)
    bad_entries[(0, 1, 1, 0)] = F.one
    bad = RMatrix(F, 2, bad_entries)
    write("rmatrix_broken_n2.json", sfmod.file_from_rmatrix(
        bad, "identity plus a nilpotent perturbation; fails the QYBE"))

    write("bialgebroid_kc2_q.json", sfmod.file_from_bialgebroid(
        fx.bialgebroid_over_k(fx.cyclic_bialgebra(F, 2)),
        "the group bialgebra of C_2 as a bialgebroid over k"))
    write("bialgebroid_sweedler_q.json", sfmod.file_from_bialgebroid(
        fx.bialgebroid_over_k(fx.sweedler_hopf(F)),
        "the 4-dimensional Hopf algebra as a bialgebroid over k"))

    sl = fx.superline(F)
    d = yd_bialgebroid(sl)
    tau, gamma = yd_antipode(sl, d)
    d = d.with_updates(tau=tau, gamma_section=gamma)
    write("bialgebroid_superline_q.json", sfmod.file_from_bialgebroid(
        d, "the superline smash product over kC_2, with antipode and "
           "section"))
    sl5 = fx.superline(G5)
    d5 = yd_bialgebroid(sl5)
    tau5, gamma5 = yd_antipode(sl5, d5)
    write("bialgebroid_superline_gf5.json", sfmod.file_from_bialgebroid(
        d5.with_updates(tau=tau5, gamma_section=gamma5),
        "the superline smash product over GF(5)"))

    broken = yd_bialgebroid(fx.sweedler_superline(F, coaction="plain"))
    write("bialgebroid_broken_coaction.json", sfmod.file_from_bialgebroid(
        broken,
        "smash data over the 4-dimensional Hopf algebra whose coaction "
        "was flattened to x -> x (x) 1; the coproduct image leaves the "
        "invariant subspace"))

    write("yd_superline_q.json", sfmod.file_from_yd(
        sl, "the superline as a braided commutative YD module algebra"))
    write("yd_sweedler_superline_q.json", sfmod.file_from_yd(
        fx.sweedler_superline(F),
        "dual numbers over the 4-dimensional Hopf algebra"))

    write("weakhopf_pair_groupoid_q.json", sfmod.file_from_weak_hopf(
        pair_groupoid(F, 2), "the pair groupoid on two objects"))
    write("weakhopf_kc2_q.json", sfmod.file_from_weak_hopf(
        group_weak_hopf(F, fx.cyclic_bialgebra(F, 2)),
        "an ordinary Hopf algebra fed through the weak machinery"))

    b = bicoalgebroid_from_weak_hopf(pair_groupoid(F, 2))
    write("bicoalgebroid_pair_groupoid_q.json",
          sfmod.file_from_bicoalgebroid(
              b, "the bicoalgebroid of the pair groupoid weak Hopf algebra"))


if __name__ == "__main__":
    main()
