"""Compare the compiled and pure-Python search kernels on fixed equalities.

Run with ``python3 benchmarks/bench_search.py``.  Each case is searched with
both kernels through the same entry point, so the derivations must agree in
status and the only difference is wall time.
"""
from __future__ import annotations

import argparse
import statistics
import time

from stvb import _search_py
from stvb.congruence import bfs_equal
from stvb.presentations import build_presentation
from stvb.words import parse_word

try:
    from stvb import _search_ext
except ImportError:  # extension not built
    _search_ext = None

CASES = [
    # (family, n, u, v)
    ("stvb", 3, "g2", "r1 g1 r1"),
    ("stvb", 4, "t1 r1", "g1 g2 r1 t1 r1 r1 g2 g1"),
    ("stvg", 4, "S2", "r1 r2 S1 r2 r1"),
    ("stvb", 4, "s2", "r1 r2 s1 r2 r1"),
    # not derivable in the monoid presentation: runs the full budget
    ("stvb", 4, "S2", "r1 r2 S1 r2 r1"),
]


def time_case(backend, family, n, u, v, repeat):
    p = build_presentation(family, n)
    uw, vw = parse_word(u, p.tag, n), parse_word(v, p.tag, n)
    times, status, states = [], None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = bfs_equal(p, uw, vw, budget=10**6, backend=backend)
        times.append(time.perf_counter() - t0)
        status, states = res.status, res.states
    return statistics.median(times), status, states


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    backends = [("python", _search_py)]
    if _search_ext is not None:
        backends.insert(0, ("cython", _search_ext))
    else:
        print("compiled kernel not available; timing the Python kernel only")
    print(f"{'case':45} {'backend':8} {'status':11} {'states':>8} {'median s':>9}")
    for family, n, u, v in CASES:
        base = None
        for name, mod in backends:
            t, status, states = time_case(mod, family, n, u, v, args.repeat)
            label = f"{family}/{n} {u} = {v}"
            ratio = "" if base is None else f"  x{t / base:.1f}"
            base = base or t
            print(f"{label[:45]:45} {name:8} {status:11} {states:8d} {t:9.4f}{ratio}")


if __name__ == "__main__":
    main()
