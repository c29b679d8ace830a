#!/usr/bin/env python3
"""Smoke test for the wn_py extension module.

Build the extension first, then run this script from the repo root:

    cargo build -p wn-py
    python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def stage_module() -> None:
    """Copies the built cdylib next to this script under the import name."""
    candidates = [
        ROOT / "target" / "debug" / "libwn_py.so",
        ROOT / "target" / "release" / "libwn_py.so",
        ROOT / "target" / "debug" / "libwn_py.dylib",
        ROOT / "target" / "release" / "libwn_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("extension not built; run `cargo build -p wn-py` first")
    dest = pathlib.Path(__file__).parent / "wn_py.so"
    if not dest.exists() or built.stat().st_mtime > dest.stat().st_mtime:
        shutil.copy2(built, dest)
    sys.path.insert(0, str(dest.parent))


def main() -> None:
    stage_module()
    import wn_py

    # polynomial arithmetic round-trips through the text grammar
    f = wn_py.Poly("1 + x*y", 2)
    g = wn_py.Poly("x - y", 2)
    assert str(f * g) == "x^2*y - x*y^2 + x - y", str(f * g)
    assert wn_py.Poly(str(f * g), 2) == f * g

    # bracket, apply, divergence
    d1 = wn_py.Deriv("[1, 1 + x*y]", 2)
    e = wn_py.Deriv.euler(2)
    assert str(d1.bracket(e)) == "[1, -x*y + 1]"
    assert str(e.apply(wn_py.Poly("x^2*y", 2))) == "3*x^2*y"
    assert str(wn_py.Deriv("[x^2, x*y]", 2).divergence()) == "3*x"

    # grading: graded parts reassemble, projections split W^[1]
    parts = wn_py.Deriv("[1 + x^2, y]", 2).graded_parts()
    assert sorted(parts) == [-1, 0, 1]
    m, nn = wn_py.Deriv("[x^2, 0]", 2).mn_project(1)
    assert str(nn) == "[2/3*x^2, 2/3*x*y]", str(nn)
    assert m.divergence() == wn_py.Poly("0", 2)

    # gcd and Groebner bases
    h = wn_py.gcd([wn_py.Poly("x^2 - y^2", 2), wn_py.Poly("x^2 + 2*x*y + y^2", 2)])
    assert str(h) == "x + y"
    assert wn_py.groebner(["x - y", "x + y"], 2) == ["y", "x"]
    assert wn_py.ideal_member(["x", "y"], "x^2 + y", 2)
    assert not wn_py.ideal_member(["x*y - 1"], "x", 2)

    # truncated Lie closure
    dim, status = wn_py.lie_closure_dim(
        [wn_py.Deriv("[1, 0]", 2), wn_py.Deriv("[0, 1]", 2)], 2, 4
    )
    assert (dim, status) == (2, "closed")

    # structural reports
    table = json.loads(wn_py.verify_bracket_table(2, 2))
    assert table["all_pass"]
    iso = json.loads(wn_py.verify_sl_iso(2))
    assert iso["pass"] and iso["dim_l"] == 8

    # Darboux machinery
    cof = wn_py.Deriv("[x, -y]", 2).darboux_cofactor(wn_py.Poly("x*y", 2))
    assert cof is not None and str(cof) == "0"
    search = json.loads(wn_py.find_darboux(wn_py.Deriv("[x, -y]", 2), 2, 1))
    assert search["found"]
    probe = json.loads(wn_py.simplicity_probe(wn_py.Deriv("[1, 1 + x*y]", 2), 3, 2))
    assert probe["conclusion"] == "no obstruction up to bounds"

    # errors surface as Python exceptions
    try:
        wn_py.Poly("x +* y", 2)
    except ValueError:
        pass
    else:
        sys.exit("expected ValueError for bad grammar")

    print("smoke test passed")


if __name__ == "__main__":
    main()
