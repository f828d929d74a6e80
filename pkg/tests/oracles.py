"""Independent brute-force oracles used to derive expected test values.

Everything here recomputes results through a different construction path
than the package: differentials are evaluated functionally from their
defining formulas on generic cochains, ranks come from a plain textbook
forward elimination (no reduced form, no sparse bookkeeping), and dimension
counts avoid the package's subspace machinery entirely.  Oracles read only
the category's source/target/compose tables.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


# --- scalars: p prime -> ints mod p, p None -> Fraction -----------------------

def _scal(p, n):
    return n % p if p is not None else Fraction(n)


def naive_rank(rows, p) -> int:
    """Forward elimination without normalization; counts pivot rows."""
    rows = [list(r) for r in rows if any(v != 0 for v in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col] == 0:
                continue
            if p is not None:
                factor = rows[i][col] * pow(prow[col], p - 2, p) % p
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], prow)]
            else:
                factor = Fraction(rows[i][col]) / prow[col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


# --- the category algebra, independently -------------------------------------------

def alg_mul(cat, u: dict, v: dict, p) -> dict:
    """Product in kC of two sparse elements, zero on non-composable pairs."""
    out: dict = {}
    for g, x in u.items():
        for f, y in v.items():
            h = cat.compose_table[g][f]
            if h >= 0:
                out[h] = out.get(h, _scal(p, 0)) + x * y
    return {h: (v % p if p is not None else v) for h, v in out.items()
            if (v % p if p is not None else v) != 0}


def _basis_elt(cat, p, m) -> dict:
    return {m: _scal(p, 1)}


def hochschild_differential_rows(cat, p, m):
    """Matrix of the degree-m differential, built by functional evaluation.

    For each basis cochain f (indicator of one input tuple and one output),
    evaluates the alternating-sum formula on every (m+1)-tuple of morphisms
    and scatters the resulting algebra elements.  Returns dense rows indexed
    by (input tuple, output), columns likewise for degree m.
    """
    n = cat.n_morphisms
    cols = [(tup, h) for tup in itertools.product(range(n), repeat=m) for h in range(n)]
    rows_idx = {key: i for i, key in enumerate(
        (tup, h) for tup in itertools.product(range(n), repeat=m + 1) for h in range(n)
    )}
    mat = [[_scal(p, 0)] * len(cols) for _ in range(len(rows_idx))]

    for jcol, (tup0, h0) in enumerate(cols):
        def f(args):
            return _basis_elt(cat, p, h0) if args == tup0 else {}

        for args in itertools.product(range(n), repeat=m + 1):
            total: dict = {}

            def acc(elt, sign):
                for h, v in elt.items():
                    total[h] = total.get(h, _scal(p, 0)) + sign * v

            acc(alg_mul(cat, _basis_elt(cat, p, args[0]), f(args[1:]), p), 1)
            sign = -1
            for j in range(1, m + 1):
                glued = cat.compose_table[args[j - 1]][args[j]]
                if glued >= 0:
                    acc(f(args[: j - 1] + (glued,) + args[j + 1:]), sign)
                sign = -sign
            acc(alg_mul(cat, f(args[:m]), _basis_elt(cat, p, args[m]), p), sign)

            for h, v in total.items():
                v = v % p if p is not None else v
                if v != 0:
                    mat[rows_idx[args, h]][jcol] = v
    return mat


def _face(cat, chain, i):
    m = len(chain)
    if m == 1:
        return cat.target[chain[0]] if i == 0 else cat.source[chain[0]]
    if i == 0:
        return chain[1:]
    if i == m:
        return chain[:-1]
    return chain[: i - 1] + (cat.compose_table[chain[i]][chain[i - 1]],) + chain[i + 1:]


def nerve_chain_list(cat, m):
    if m == 0:
        return list(range(cat.n_objects))
    chains = [()]
    for _ in range(m):
        chains = [
            c + (g,)
            for c in chains
            for g in range(cat.n_morphisms)
            if not c or cat.source[g] == cat.target[c[-1]]
        ]
    return chains


def simplicial_coboundary_rows(cat, p, m):
    """Coboundary matrix built by evaluating faces of every (m+1)-chain."""
    cols = {c: j for j, c in enumerate(nerve_chain_list(cat, m))}
    rows = nerve_chain_list(cat, m + 1)
    mat = [[_scal(p, 0)] * len(cols) for _ in rows]
    for i, chain in enumerate(rows):
        for face_i in range(m + 2):
            j = cols[_face(cat, chain, face_i)]
            mat[i][j] += _scal(p, (-1) ** face_i)
            if p is not None:
                mat[i][j] %= p
    return mat


def cohomology_dims_by_rank(matrices, p, ambient_dims):
    """dim H^m = (ambient - rank d_m) - rank d_{m-1}, ranks by naive elimination."""
    dims = []
    prev_rank = 0
    for d, amb in zip(matrices, ambient_dims):
        r = naive_rank(d, p)
        dims.append(amb - r - prev_rank)
        prev_rank = r
    return dims


def naive_hochschild_dims(cat, p, max_m):
    n = cat.n_morphisms
    mats = [hochschild_differential_rows(cat, p, m) for m in range(max_m + 1)]
    return cohomology_dims_by_rank(mats, p, [n ** (m + 1) for m in range(max_m + 1)])


def naive_simplicial_dims(cat, p, max_m):
    mats = [simplicial_coboundary_rows(cat, p, m) for m in range(max_m + 1)]
    ambients = [len(nerve_chain_list(cat, m)) for m in range(max_m + 1)]
    return cohomology_dims_by_rank(mats, p, ambients)


def naive_center_dim(cat, p) -> int:
    """Dimension of the centralizer of all of kC: solve cg = gc per basis g."""
    n = cat.n_morphisms
    rows = []
    for g in range(n):
        diff: dict = {}
        for m in range(n):
            for h, v in alg_mul(cat, _basis_elt(cat, p, m), _basis_elt(cat, p, g), p).items():
                diff[m, h] = diff.get((m, h), _scal(p, 0)) + v
            for h, v in alg_mul(cat, _basis_elt(cat, p, g), _basis_elt(cat, p, m), p).items():
                diff[m, h] = diff.get((m, h), _scal(p, 0)) - v
        for h in range(n):
            rows.append([diff.get((m, h), _scal(p, 0)) for m in range(n)])
    if p is not None:
        rows = [[v % p for v in row] for row in rows]
    return n - naive_rank(rows, p)


def naive_graded_derivation_dim(cat, p) -> int:
    """Derivation law over all n^2 unknowns plus explicit grading constraints."""
    n = cat.n_morphisms
    unknowns = [(g, h) for g in range(n) for h in range(n)]
    col = {u: j for j, u in enumerate(unknowns)}
    rows = []
    for g, h in unknowns:  # grading: mismatched endpoints are forced to zero
        if cat.source[g] != cat.source[h] or cat.target[g] != cat.target[h]:
            row = [_scal(p, 0)] * len(unknowns)
            row[col[g, h]] = _scal(p, 1)
            rows.append(row)
    for f in range(n):
        for g in range(n):
            coeff: dict = {}

            def bump(u, w, s):
                coeff[u, w] = coeff.get((u, w), _scal(p, 0)) + s

            fg = cat.compose_table[f][g]
            if fg >= 0:
                for w in range(n):
                    bump((fg, w), w, _scal(p, 1))
            for w1 in range(n):
                prod = cat.compose_table[w1][g]
                if prod >= 0:
                    bump((f, w1), prod, _scal(p, -1))
            for w2 in range(n):
                prod = cat.compose_table[f][w2]
                if prod >= 0:
                    bump((g, w2), prod, _scal(p, -1))
            by_output: dict = {}
            for (u, w), s in coeff.items():
                by_output.setdefault(w, {})[u] = s
            for w, entries in sorted(by_output.items()):
                row = [_scal(p, 0)] * len(unknowns)
                for u, s in entries.items():
                    row[col[u]] = (row[col[u]] + s) % p if p is not None else row[col[u]] + s
                rows.append(row)
    return len(unknowns) - naive_rank(rows, p)


def naive_character_dim(fad, p) -> int:
    n = fad.n_morphisms
    rows = []
    for eta in range(n):
        for zeta in range(n):
            h = fad.compose_table[eta][zeta]
            if h < 0:
                continue
            row = [_scal(p, 0)] * n
            for idx, s in ((h, 1), (eta, -1), (zeta, -1)):
                row[idx] = (row[idx] + s) % p if p is not None else row[idx] + s
            rows.append(row)
    return n - naive_rank(rows, p)


def component_count_bfs(cat) -> int:
    """Connected components of the underlying graph, by breadth-first search."""
    adj = {x: set() for x in range(cat.n_objects)}
    for m in range(cat.n_morphisms):
        adj[cat.source[m]].add(cat.target[m])
        adj[cat.target[m]].add(cat.source[m])
    seen: set = set()
    count = 0
    for start in range(cat.n_objects):
        if start in seen:
            continue
        count += 1
        frontier = [start]
        seen.add(start)
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
    return count
