"""Nerve of a finite category and its simplicial cochain complex.

A degree-m chain is a composable sequence ``(g_0, .., g_{m-1})`` stored
source to target (``target(g_i) == source(g_{i+1})``); degree-0 chains are
the objects.  Degenerate chains (those containing identities) are kept: the
nerve is the full simplicial set, cohomology is unaffected, and keeping them
makes the index bijections with Hochschild data exact.

The coboundary of a scalar cochain f is
``(δf)(σ) = Σ_i (-1)^i f(face(σ, i))``.
"""

from __future__ import annotations

from functools import lru_cache

from .category import FiniteCategory
from .fields import FieldSpec
from .matrix import Matrix, Subspace, quotient_dim


@lru_cache(maxsize=None)
def _chains_cached(cat: FiniteCategory, m: int) -> tuple:
    if m == 0:
        return tuple(range(cat.n_objects))
    if m == 1:
        return tuple((g,) for g in range(cat.n_morphisms))
    shorter = _chains_cached(cat, m - 1)
    by_source = cat.morphisms_by_source
    target = cat.target
    return tuple(
        chain + (g,)
        for chain in shorter
        for g in by_source[target[chain[-1]]]
    )


def nerve_chains(cat: FiniteCategory, m: int) -> list:
    """All degree-m chains in lexicographic order (objects for m = 0)."""
    return list(_chains_cached(cat, m))


@lru_cache(maxsize=None)
def _chain_index(cat: FiniteCategory, m: int) -> dict:
    return {c: i for i, c in enumerate(_chains_cached(cat, m))}


def face(cat: FiniteCategory, chain, i: int):
    """i-th face of a degree-m chain, 0 <= i <= m.

    Drops the first morphism (i = 0), composes two consecutive steps into
    one (inner i), or drops the last (i = m).  Faces of a 1-chain are its
    endpoint objects.
    """
    m = len(chain)
    if not 0 <= i <= m:
        raise IndexError(f"face index {i} out of range for a degree-{m} chain")
    if m == 1:
        return cat.target[chain[0]] if i == 0 else cat.source[chain[0]]
    if i == 0:
        return chain[1:]
    if i == m:
        return chain[:-1]
    glued = cat.compose(chain[i], chain[i - 1])
    return chain[: i - 1] + (glued,) + chain[i + 1:]


@lru_cache(maxsize=None)
def simplicial_coboundary_entries(cat: FiniteCategory, m: int) -> dict:
    """Integer entries of the degree-m coboundary, keyed by (row, col)."""
    rows = _chains_cached(cat, m + 1)
    col_index = _chain_index(cat, m)
    entries: dict = {}
    for r, chain in enumerate(rows):
        sign = 1
        for i in range(m + 2):
            c = col_index[face(cat, chain, i)]
            v = entries.get((r, c), 0) + sign
            if v:
                entries[r, c] = v
            else:
                del entries[r, c]
            sign = -sign
    return entries


def simplicial_coboundary_matrix(cat, field, m: int) -> Matrix:
    """Matrix of the coboundary from degree-m to degree-(m+1) cochains."""
    return Matrix.from_int_entries(
        field,
        len(_chains_cached(cat, m + 1)),
        len(_chains_cached(cat, m)),
        simplicial_coboundary_entries(cat, m),
    )


def simplicial_cohomology_dims(cat, field: FieldSpec, max_m: int) -> list[int]:
    """Dimensions of the nerve cohomology in degrees 0..max_m."""
    dims = []
    prev_image: Subspace | None = None
    for m in range(max_m + 1):
        d = simplicial_coboundary_matrix(cat, field, m)
        Z = d.kernel_basis()
        B = prev_image if prev_image is not None else Subspace.zero(field, d.ncols)
        dims.append(quotient_dim(Z, B))
        prev_image = d.image_basis()
    return dims


def connected_component_count(cat: FiniteCategory) -> int:
    """Zigzag components of the underlying graph, by union-find."""
    parent = list(range(cat.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in range(cat.n_morphisms):
        a, b = find(cat.source[m]), find(cat.target[m])
        if a != b:
            parent[max(a, b)] = min(a, b)
    return len({find(x) for x in range(cat.n_objects)})
