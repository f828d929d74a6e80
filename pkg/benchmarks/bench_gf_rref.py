"""Benchmark: compiled vs pure-Python GF(p) row reduction.

Runs both kernels on identical inputs, checks the outputs are bit-identical,
and reports wall-clock times.  Inputs are random dense matrices at several
sizes plus one structured matrix from the real workload (a Hochschild
differential of the six-morphism two-object example category, transposed the
way the image computation sees it).

Usage::

    python benchmarks/bench_gf_rref.py
"""

import random
import time

from hochcat import _gfcore_py

try:
    from hochcat import _gfcore
except ImportError:
    _gfcore = None


def bench_case(label, flat, nrows, ncols, p, repeats=3):
    results = {}
    for name, impl in (("compiled", _gfcore), ("python", _gfcore_py)):
        if impl is None:
            continue
        best = float("inf")
        out = None
        for _ in range(repeats):
            data = list(flat)
            start = time.perf_counter()
            out = impl.rref_mod_p(data, nrows, ncols, p)
            best = min(best, time.perf_counter() - start)
        results[name] = (best, out)
    line = f"{label:<34} {nrows:>5} x {ncols:<5} p={p:<3}"
    if "compiled" in results:
        c_time, c_out = results["compiled"]
        p_time, p_out = results["python"]
        assert c_out == p_out, f"kernel outputs differ on {label}"
        line += f" compiled {c_time*1e3:9.2f} ms   python {p_time*1e3:9.2f} ms"
        line += f"   speedup {p_time / c_time:6.1f}x"
    else:
        p_time, _ = results["python"]
        line += f" python {p_time*1e3:9.2f} ms   (compiled kernel not built)"
    print(line)


def random_case(rng, nrows, ncols, p, density):
    return [
        rng.randrange(p) if rng.random() < density else 0
        for _ in range(nrows * ncols)
    ]


def structured_case():
    """The degree-1 Hochschild differential of the example category, as the
    image computation sees it (transposed, dense layout)."""
    from hochcat import builtin, hochschild_differential_matrix
    from hochcat.fields import FieldSpec

    d1 = hochschild_differential_matrix(builtin("ex6"), FieldSpec(2), 1).transpose()
    flat = [0] * (d1.nrows * d1.ncols)
    for r, c, v in d1.entries():
        flat[r * d1.ncols + c] = v
    return flat, d1.nrows, d1.ncols


def main():
    if _gfcore is None:
        print("note: compiled kernel not importable; timing the fallback only")
    rng = random.Random(2024)
    for nrows, ncols, p, density in [
        (50, 50, 2, 0.5),
        (100, 100, 3, 0.5),
        (200, 200, 5, 0.3),
        (300, 300, 97, 0.2),
        (400, 120, 2, 0.1),
    ]:
        flat = random_case(rng, nrows, ncols, p, density)
        bench_case(f"random density {density}", flat, nrows, ncols, p)
    flat, nrows, ncols = structured_case()
    bench_case("hochschild differential (ex6)", flat, nrows, ncols, 2)


if __name__ == "__main__":
    main()
