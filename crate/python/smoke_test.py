#!/usr/bin/env python3
"""Smoke test for the sgw_py extension module.

Builds the cdylib with cargo, loads it, and exercises the main surfaces:
partition combinatorics, module construction, tensor products, composition
factors, and the classification sweep at n = 6.
"""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "--release", "-p", "sgw-py"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libsgw_py.so"
    if not lib.exists():  # macOS fallback
        lib = ROOT / "target" / "release" / "libsgw_py.dylib"
    if not lib.exists():
        raise FileNotFoundError("built extension library not found")
    stage = Path(tempfile.mkdtemp(prefix="sgw_py_"))
    shutil.copy(lib, stage / "sgw_py.so")
    return stage


def main() -> None:
    stage = build_extension()
    sys.path.insert(0, str(stage))
    import sgw_py

    # partition combinatorics
    assert sgw_py.eps_phi([4, 1]) == (0, 2, 3, 0)
    assert sgw_py.conormal_nodes([4, 1], 0) == [(1, 5), (2, 2), (3, 1)]
    assert sgw_py.normal_nodes([4, 1], 1) == [(1, 4), (2, 1)]
    assert sgw_py.is_js([6, 4]) and not sgw_py.is_js([4, 1])
    assert sgw_py.f_tilde([4, 1], 0, 2) == [5, 2]
    assert sgw_py.e_tilde([4, 1], 0, 1) is None
    assert sgw_py.gk_family(10) == [
        ([6, 4], [9, 1], [5, 4, 1]),
        ([6, 4], [7, 3], [4, 3, 2, 1]),
    ]
    assert sgw_py.gk_family(8) == []

    # module construction and analysis
    wb = sgw_py.Workbench(seed=7)
    d51 = wb.irreducible([5, 1])
    assert d51.dim == 4 and d51.degree == 6
    m51 = wb.perm([5, 1])
    assert wb.chop(m51) == {"5,1": 1, "6": 2}
    assert not wb.is_irreducible(m51)
    d42 = wb.irreducible([4, 2])
    t = wb.tensor(d42, d51)
    assert t.dim == 16
    assert wb.is_irreducible(t)
    assert wb.iso_label(t) == "3,2,1"
    assert wb.end_dim(d51) == 1
    restricted = wb.restrict(d42, 5)
    assert wb.end_dim(restricted) == 1  # JS partition stays irreducible

    # one registered check and the full n = 6 sweep
    lemmas = json.loads(sgw_py.run_lemmas_json([6], only=["L52", "L55"]))
    assert lemmas["summary"]["fail"] == 0 and lemmas["summary"]["pass"] >= 2

    sweep = json.loads(sgw_py.run_sweep_json(6, max_dim=5000, jobs=2, seed=11))
    assert sweep["summary"]["fail"] == 0
    irreducible = [r for r in sweep["records"] if r["irreducible"]]
    assert len(irreducible) == 1
    assert sorted([irreducible[0]["lambda"], irreducible[0]["mu"]]) == ["4,2", "5,1"]
    assert irreducible[0]["iso_label"] == "3,2,1"

    print("smoke test OK")


if __name__ == "__main__":
    main()
