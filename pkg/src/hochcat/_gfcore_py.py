"""Pure-Python dense row reduction mod p.

Reference implementation of the hot kernel.  ``hochcat._gfcore`` is the
compiled twin with identical semantics; ``hochcat.kernels`` picks whichever
is importable.  Both must produce bit-identical output: pivoting is fixed to
the lowest usable row, scanning columns left to right, and the result is the
fully reduced echelon form.
"""

from __future__ import annotations

BACKEND = "python"


def rref_mod_p(entries, nrows: int, ncols: int, p: int):
    """Reduced row echelon form of a dense row-major matrix over GF(p).

    ``entries`` is a flat list of ints in ``[0, p)`` of length nrows*ncols.
    Returns ``(pivot_cols, rref_entries)`` where ``rref_entries`` contains
    only the ``len(pivot_cols)`` nonzero rows, row-major.
    """
    rows = [list(entries[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], p - 2, p)
        if inv != 1:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] * inv % p
        for i in range(nrows):
            if i != r and rows[i][c]:
                row = rows[i]
                f = row[c]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] = (row[j] - f * prow[j]) % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    flat = []
    for i in range(r):
        flat.extend(rows[i])
    return pivots, flat
