"""Compare the compiled and pure elimination cores on real workloads.

Each workload runs in a fresh interpreter so the core is fixed at import
time (TATEKIT_PURE=1 forces the pure core).  Run from the repo root:

    python3 benchmarks/bench_backends.py
"""

import os
import subprocess
import sys

WORKLOADS = {
    "tate (Z/3)^2 trivial [-8..8]": (
        "from tatekit import ElementaryAbelianGroup, trivial_module, tate_cohomology_range\n"
        "G = ElementaryAbelianGroup(3, 2)\n"
        "tate_cohomology_range(G, trivial_module(G), -8, 8)\n"
    ),
    "tate (Z/2)^2 syzygy module [1..8]": (
        "from tatekit import ElementaryAbelianGroup, trivial_module, syzygy, tate_cohomology_range\n"
        "G = ElementaryAbelianGroup(2, 2)\n"
        "tate_cohomology_range(G, syzygy(trivial_module(G), 2), 1, 8)\n"
    ),
    "hyper product(3,[1,2]) [-3..3]": (
        "from tatekit import product_complex, tate_hypercohomology_range\n"
        "c = product_complex(3, [1, 2])\n"
        "tate_hypercohomology_range(c.group, c, -3, 3)\n"
    ),
    "syzygy chain (Z/2)^2 n=6": (
        "from tatekit import ElementaryAbelianGroup, trivial_module, syzygy\n"
        "G = ElementaryAbelianGroup(2, 2)\n"
        "syzygy(trivial_module(G), 6)\n"
    ),
    "glue pipeline lens(2,3)": (
        "from tatekit import lens_complex, glue_rows\n"
        "glue_rows(lens_complex(2, 3), [([3], 5), ([2], 5), ([1], 5)])\n"
    ),
}

TIMER = """
import time
t0 = time.perf_counter()
{body}
print(time.perf_counter() - t0)
"""


def run_once(body, pure):
    env = dict(os.environ)
    if pure:
        env["TATEKIT_PURE"] = "1"
    else:
        env.pop("TATEKIT_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", TIMER.format(body=body)],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    return float(out.stdout.strip().splitlines()[-1])


def main():
    sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
    import tatekit

    if tatekit.BACKEND != "compiled":
        print("note: compiled core unavailable, comparing pure against itself")
    width = max(len(k) for k in WORKLOADS)
    print(f"{'workload'.ljust(width)}  {'pure':>8}  {'compiled':>8}  speedup")
    for name, body in WORKLOADS.items():
        pure = min(run_once(body, True) for _ in range(3))
        fast = min(run_once(body, False) for _ in range(3))
        print(
            f"{name.ljust(width)}  {pure:8.4f}  {fast:8.4f}  "
            f"{pure / fast if fast else float('inf'):6.2f}x"
        )


if __name__ == "__main__":
    main()
