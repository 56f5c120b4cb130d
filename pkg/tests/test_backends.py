"""The compiled elimination core must be indistinguishable from the
pure-Python one."""

import json
import os
import random
import subprocess
import sys

import pytest

from tatekit import BACKEND
from tatekit import _elim_py

try:
    from tatekit import _elim_cy
except ImportError:
    _elim_cy = None

needs_ext = pytest.mark.skipif(
    _elim_cy is None, reason="compiled elimination core not built"
)


def random_rows(rng, nrows, ncols, density=0.5, span=9):
    rows = []
    for _ in range(nrows):
        row = {}
        for j in range(ncols):
            if rng.random() < density:
                v = rng.randint(-span, span)
                if v:
                    row[j] = v
        rows.append(row)
    return rows


@needs_ext
def test_hermite_agrees():
    rng = random.Random(41)
    for _ in range(60):
        nr = rng.randint(0, 6)
        nc = rng.randint(0, 6)
        rows = random_rows(rng, nr, nc)
        a = _elim_py.hermite([dict(r) for r in rows], nc)
        b = _elim_cy.hermite([dict(r) for r in rows], nc)
        assert a == b


@needs_ext
def test_smith_diagonal_agrees():
    rng = random.Random(42)
    for _ in range(60):
        nr = rng.randint(0, 6)
        nc = rng.randint(0, 6)
        rows = random_rows(rng, nr, nc)
        a = _elim_py.smith_diagonal([dict(r) for r in rows], nc)
        b = _elim_cy.smith_diagonal([dict(r) for r in rows], nc)
        assert a == b


@needs_ext
def test_smith_transform_agrees():
    # this entry point takes dense rows
    rng = random.Random(43)
    for _ in range(40):
        nr = rng.randint(0, 5)
        nc = rng.randint(0, 5)
        mat = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        a = _elim_py.smith_transform([list(r) for r in mat], nr, nc)
        b = _elim_cy.smith_transform([list(r) for r in mat], nr, nc)
        assert a == b


@needs_ext
def test_large_entries_do_not_overflow():
    # the compiled core stores Python ints, so word-size overflow is
    # impossible; check far beyond 64 bits
    big = 2**200
    rows = [{0: big, 1: 1}, {0: 3, 1: big + 1}]
    a = _elim_py.smith_diagonal([dict(r) for r in rows], 2)
    b = _elim_cy.smith_diagonal([dict(r) for r in rows], 2)
    assert a == b
    assert max(a) > 2**100


@needs_ext
def test_full_stack_matches_forced_pure_subprocess(tmp_path):
    script = tmp_path / "probe.py"
    script.write_text(
        "import json, sys\n"
        "from tatekit import (BACKEND, ElementaryAbelianGroup,\n"
        "    tate_cohomology_range, trivial_module, random_free_complex,\n"
        "    tate_hypercohomology_range)\n"
        "g = ElementaryAbelianGroup(2, 2)\n"
        "t = tate_cohomology_range(g, trivial_module(g), -3, 3)\n"
        "c = random_free_complex(g, [2, 2, 1], 11)\n"
        "h = tate_hypercohomology_range(g, c, -2, 2)\n"
        "rows = [[i, list(v.torsion), v.free_rank]\n"
        "        for table in (t, h)\n"
        "        for i, v, _ in table.rows()]\n"
        "print(json.dumps({'backend': BACKEND, 'rows': rows}))\n"
    )

    def run(force_pure):
        env = dict(os.environ)
        env.pop("TATEKIT_PURE", None)
        if force_pure:
            env["TATEKIT_PURE"] = "1"
        out = subprocess.run(
            [sys.executable, str(script)],
            capture_output=True,
            text=True,
            env=env,
            check=True,
        )
        return json.loads(out.stdout)

    fast = run(force_pure=False)
    pure = run(force_pure=True)
    assert pure["backend"] == "pure"
    assert fast["backend"] == "compiled"
    assert fast["rows"] == pure["rows"]


def test_backend_reports_a_known_name():
    assert BACKEND in ("compiled", "pure")
