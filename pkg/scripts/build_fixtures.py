"""Regenerate the shipped fixture directory.

Diamonds are transcribed by hand from published figures (rows top to bottom,
``?`` for unknown cells); ideals are rebuilt from the orbit constructions.

    python scripts/build_fixtures.py [--out DIR]
"""

import argparse
import json
from pathlib import Path

from orbitlef.fibration import potential_poly
from orbitlef.fixtures import default_data_dir
from orbitlef.orbit_ideals import determinant_generators, minimal_poly_ideal
from orbitlef.polyalg.ideal import Ideal
from orbitlef.topology_hodge import UNKNOWN, HodgeDiamond

# rows of the rotated diamond, top row first
TRANSCRIBED = {
    "minuscule_orbit_closure": [
        "1", "0 0", "0 2 0", "0 0 0 0", "0 0 3 0 0", "0 0 0 0", "0 2 0", "0 0", "1",
    ],
    "minuscule_fiber_closure": [
        "1", "0 0", "0 2 0", "0 0 0 0", "0 2 0", "0 0", "1",
    ],
    "regular_fiber_closure_I": [
        "1", "0 0", "0 1 0", "0 0 0 0", "0 0 1 0 0", "0 16 ? ? 16 0",
        "0 0 1 0 0", "0 0 0 0", "0 1 0", "0 0", "1",
    ],
    "regular_fiber_closure_J": [
        "1", "0 0", "0 1 0", "0 0 0 0", "0 0 1 0 0", "0 1 ? ? 1 0",
        "0 0 1 0 0", "0 0 0 0", "0 1 0", "0 0", "1",
    ],
}

PROVENANCE = {
    "minuscule_orbit_closure": "published Hodge diamond of the smooth compactification of the orbit of diag(2,-1,-1) in sl(3)",
    "minuscule_fiber_closure": "published Hodge diamond of the compactified regular fibre f_H = 1, H = diag(1,-1,0), same orbit",
    "regular_fiber_closure_I": "published diamond (left panel) of the closure of the fibre over 0 from generators <p, q, f_H>, H = H0 = diag(1,-1,0)",
    "regular_fiber_closure_J": "published diamond (right panel) of the closure of the same fibre from generators <p, p-q, f_H>",
}


def diamond_from_rows(rows):
    d = (len(rows) - 1) // 2
    D0 = HodgeDiamond.from_cells(d, {})
    cells = {}
    for layout_row, text in zip(D0.rows(), rows):
        values = text.split()
        if len(values) != len(layout_row):
            raise ValueError(f"row {text!r} should have {len(layout_row)} entries")
        # layout rows run p descending, i.e. left to right in the printed figure
        for (p, q), v in zip(layout_row, values):
            cells[(p, q)] = UNKNOWN if v == "?" else int(v)
    return HodgeDiamond.from_cells(d, cells)


def build_ideals():
    ideals = {}
    I = minimal_poly_ideal("2,-1,-1")
    f_min = potential_poly("1,-1,0")
    ideals["minuscule_orbit"] = (I, "entries of (A + id)(A - 2 id) on sl(3)")
    ideals["minuscule_orbit_hom"] = (I.homogenize("t"), "generator-wise homogenization of minuscule_orbit")
    ideals["minuscule_fiber_1"] = (I.extend([f_min - 1]), "minuscule_orbit plus f_H - 1, f_H = x1 - x2")

    pq = determinant_generators("1,-1,0", (0, 1))
    p, q = pq.gens
    f_reg = potential_poly("1,-1,0")
    ideals["regular_orbit_pq"] = (pq, "p = det(A), q = det(A - id) on sl(3)")
    ideals["regular_orbit_pmq"] = (Ideal([p - q, q]), "p - q, q: same affine ideal as regular_orbit_pq")
    ideals["regular_fiber_I"] = (Ideal([p, q, f_reg]), "p, q, f_H with f_H = x1 - x2 (fibre over 0)")
    ideals["regular_fiber_J"] = (Ideal([p, p - q, f_reg]), "p, p - q, f_H (same affine fibre)")
    ideals["regular_fiber_I_hom"] = (ideals["regular_fiber_I"][0].homogenize("t"), "generator-wise homogenization of regular_fiber_I")
    ideals["regular_fiber_J_hom"] = (ideals["regular_fiber_J"][0].homogenize("t"), "generator-wise homogenization of regular_fiber_J")

    ideals["sl2_orbit"] = (minimal_poly_ideal("1,-1"), "entries of (A - id)(A + id) on sl(2)")
    ideals["sl2_orbit_hom"] = (ideals["sl2_orbit"][0].homogenize("t"), "homogenization of sl2_orbit")
    return ideals


EXPECTED = {
    "minuscule": {
        "H": "1,-1,0",
        "H0": "2,-1,-1",
        "critical_values": ["3", "0", "-3"],
        "k": 3,
        "distinct_values": 3,
        "orbit_dim_c": 4,
        "regular_middle_betti": 2,
        "singular_middle_betti": 1,
        "projective_dimension": 4,
    },
    "regular": {
        "H": "1,-1,0",
        "H0": "1,-1,0",
        "critical_values": ["2", "1", "1", "-1", "-1", "-2"],
        "k": 6,
        "distinct_values": 4,
        "orbit_dim_c": 6,
        "regular_middle_betti": 5,
        "singular_middle_betti": None,
        "complement_betti": [1, 0, 2, 0, 2, 5, 0],
    },
    "sl2": {
        "H": "1,-1",
        "H0": "1,-1",
        "critical_values": ["2", "-2"],
        "k": 2,
        "distinct_values": 2,
        "orbit_dim_c": 2,
        "regular_middle_betti": 1,
        "singular_middle_betti": 0,
        "hessian": [["0", "4"], ["4", "0"]],
    },
    "diamond_discrepancies": [[[1, 4], 16, 1], [[4, 1], 16, 1]],
    "diamond_uncheckable": [[2, 3], [3, 2]],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=default_data_dir())
    args = ap.parse_args()
    out = args.out
    (out / "diamonds").mkdir(parents=True, exist_ok=True)
    (out / "ideals").mkdir(parents=True, exist_ok=True)

    files = []
    for name, rows in TRANSCRIBED.items():
        D = diamond_from_rows(rows)
        (out / "diamonds" / f"{name}.json").write_text(D.dumps())
        files.append({"path": f"diamonds/{name}.json", "kind": "diamond", "source": PROVENANCE[name]})
    for name, (I, desc) in build_ideals().items():
        I.write(out / "ideals" / f"{name}.ideal", header=[desc])
        files.append({"path": f"ideals/{name}.ideal", "kind": "ideal", "source": desc})
    (out / "expected.json").write_text(json.dumps(EXPECTED, indent=2) + "\n")
    files.append({"path": "expected.json", "kind": "expected-values", "source": "reported critical data and Betti numbers"})
    manifest = {"version": out.name, "files": files}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(files)} fixture files to {out}")


if __name__ == "__main__":
    main()
