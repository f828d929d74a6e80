"""The category algebra kC and its Hochschild cochain complex.

Cochains of degree m are multilinear maps (kC)^{⊗m} -> kC, stored by their
coefficient tensor: the basis of C^m is all pairs ``(tup, h)`` with ``tup``
an m-tuple of morphisms (composable or not; the tensor power is over k) and
``h`` an output morphism, ordered lexicographically.  Tuples are kept in
tensor-slot order: ``tup[0]`` is the first tensor factor.

The differential of the coefficient tensor of f sends the basis cochain
``(g_1..g_m, h)`` to

* ``+1`` on ``((u, g_1..g_m), u∘h)`` for every u with u∘h defined,
* ``(-1)^j`` on ``((g_1,.., v, w, .., g_m), h)`` for every factorization
  ``v∘w = g_j``,
* ``(-1)^(m+1)`` on ``((g_1..g_m, u), h∘u)`` for every u with h∘u defined.

Entries are assembled once over the integers and reduced into the requested
field, so all four coefficient fields share one assembly.

The relative subcomplex keeps only endpoint-matching coefficients on
composable tuples; in degree 0 it is spanned by the endomorphisms (the
centralizer of the identity span), which is exactly what the degree-0
differential preserves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .category import FiniteCategory
from .errors import DimensionCapExceeded, NotASubcomplex
from .fields import FieldSpec
from .matrix import Matrix, Subspace, quotient_dim

DEFAULT_BASIS_CAP = 2_000_000


# --- the category algebra ---------------------------------------------------

@dataclass(frozen=True)
class AlgebraElement:
    """Element of kC as a sparse morphism -> coefficient map."""

    cat: FiniteCategory
    field: FieldSpec
    coeffs: tuple   # sorted ((morphism, scalar), ...), no zeros

    @staticmethod
    def from_dict(cat, field, coeffs: dict) -> "AlgebraElement":
        items = tuple(sorted((m, v) for m, v in coeffs.items() if v != 0))
        return AlgebraElement(cat, field, items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    @staticmethod
    def basis(cat, field, m: int) -> "AlgebraElement":
        return AlgebraElement(cat, field, ((m, field.one),))

    def is_zero(self) -> bool:
        return not self.coeffs


def algebra_unit(cat, field) -> AlgebraElement:
    """The unit of kC: the sum of all identity morphisms."""
    return AlgebraElement.from_dict(cat, field, {i: field.one for i in cat.identity})


@dataclass(frozen=True)
class HochschildCochain:
    """A degree-m cochain as its coefficient tensor.

    ``coeffs`` maps (input tuple, output morphism) to a scalar; tuples are in
    tensor-slot order and range over all m-tuples, composable or not.  A
    degree-0 cochain is an element of kC (empty input tuple).
    """

    cat: FiniteCategory
    field: FieldSpec
    degree: int
    coeffs: dict

    @staticmethod
    def from_vector(cat, field, degree: int, vector) -> "HochschildCochain":
        """Read coordinates in the lexicographic (tuple, output) basis."""
        coeffs = {}
        for pair, v in zip(hochschild_basis(cat, degree), vector):
            if v != 0:
                coeffs[pair] = v
        return HochschildCochain(cat, field, degree, coeffs)

    def to_vector(self) -> tuple:
        out = [self.field.zero] * hochschild_basis_size(self.cat, self.degree)
        for (tup, h), v in self.coeffs.items():
            out[basis_index(self.cat, tup, h)] = v
        return tuple(out)

    def value_on(self, tup) -> AlgebraElement:
        """The algebra element this cochain assigns to a basis input tuple."""
        tup = tuple(tup)
        if len(tup) != self.degree:
            raise ValueError(f"expected a {self.degree}-tuple, got {tup}")
        picked = {h: v for (t, h), v in self.coeffs.items() if t == tup}
        return AlgebraElement.from_dict(self.cat, self.field, picked)

    def as_algebra_element(self) -> AlgebraElement:
        if self.degree != 0:
            raise ValueError("only degree-0 cochains are algebra elements")
        return self.value_on(())


def multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the basis product g·f = g∘f (zero if not composable)."""
    if u.cat != v.cat or u.field != v.field:
        raise ValueError("operands live in different algebras")
    cat, field = u.cat, u.field
    comp = cat.compose_table
    out: dict = {}
    for g, x in u.coeffs:
        row = comp[g]
        for f, y in v.coeffs:
            h = row[f]
            if h >= 0:
                w = field.add(out.get(h, field.zero), field.mul(x, y))
                if w == 0:
                    out.pop(h, None)
                else:
                    out[h] = w
    return AlgebraElement.from_dict(cat, field, out)


# --- bases and indexing ------------------------------------------------------

def hochschild_basis_size(cat: FiniteCategory, m: int) -> int:
    return cat.n_morphisms ** (m + 1)


def check_cap(cat, m: int, cap: int | None) -> None:
    """Refuse degrees whose basis cannot be enumerated within the cap."""
    cap = DEFAULT_BASIS_CAP if cap is None else cap
    required = hochschild_basis_size(cat, m)
    if required > cap:
        raise DimensionCapExceeded(m, required, cap)


def hochschild_basis(cat: FiniteCategory, m: int) -> list:
    """All (tuple, output) pairs of degree m in lexicographic order."""
    n = cat.n_morphisms
    return [
        (tup, h)
        for tup in itertools.product(range(n), repeat=m)
        for h in range(n)
    ]


def basis_index(cat: FiniteCategory, tup, h: int) -> int:
    n = cat.n_morphisms
    idx = 0
    for t in tup:
        idx = idx * n + t
    return idx * n + h


@lru_cache(maxsize=None)
def _factorizations(cat: FiniteCategory) -> tuple:
    """Per morphism z, all ordered pairs (v, w) with v∘w = z."""
    out = [[] for _ in range(cat.n_morphisms)]
    comp = cat.compose_table
    for v in range(cat.n_morphisms):
        row = comp[v]
        for w in cat.morphisms_by_target[cat.source[v]]:
            out[row[w]].append((v, w))
    return tuple(tuple(ps) for ps in out)


def _column_contributions(cat: FiniteCategory, tup, h: int) -> dict:
    """Image of the basis cochain (tup, h) under the differential, over Z."""
    comp = cat.compose_table
    m = len(tup)
    out: dict = {}

    def add(key, value):
        w = out.get(key, 0) + value
        if w:
            out[key] = w
        else:
            out.pop(key, None)

    for u in cat.morphisms_by_source[cat.target[h]]:
        add(((u,) + tup, comp[u][h]), 1)
    facts = _factorizations(cat)
    sign = -1
    for j in range(1, m + 1):
        for v, w in facts[tup[j - 1]]:
            add((tup[: j - 1] + (v, w) + tup[j:], h), sign)
        sign = -sign
    last_sign = -1 if (m + 1) % 2 else 1
    for u in cat.morphisms_by_target[cat.source[h]]:
        add((tup + (u,), comp[h][u]), last_sign)
    return out


@lru_cache(maxsize=None)
def hochschild_differential_entries(cat: FiniteCategory, m: int) -> dict:
    """Integer entries of the degree-m differential, keyed by (row, col)."""
    n = cat.n_morphisms
    entries: dict = {}
    for tup in itertools.product(range(n), repeat=m):
        for h in range(n):
            col = basis_index(cat, tup, h)
            for (ntup, nh), v in _column_contributions(cat, tup, h).items():
                entries[basis_index(cat, ntup, nh), col] = v
    return entries


def hochschild_differential_matrix(cat, field, m: int, cap: int | None = None) -> Matrix:
    """Matrix of the degree-m differential in the lexicographic bases."""
    check_cap(cat, m + 1, cap)
    return Matrix.from_int_entries(
        field,
        hochschild_basis_size(cat, m + 1),
        hochschild_basis_size(cat, m),
        hochschild_differential_entries(cat, m),
    )


@dataclass(frozen=True)
class ComplexSlice:
    """One degree of the cochain complex with its outgoing differential."""

    degree: int
    basis: tuple
    differential_out: Matrix


def complex_slice(cat, field, m: int, cap: int | None = None) -> ComplexSlice:
    check_cap(cat, m, cap)
    return ComplexSlice(
        degree=m,
        basis=tuple(hochschild_basis(cat, m)),
        differential_out=hochschild_differential_matrix(cat, field, m, cap),
    )


def _cohomology_dims_from_matrices(matrices: list[Matrix], field) -> list[int]:
    """dim ker(d_m) / im(d_{m-1}) for each degree; verifies the complex closes."""
    dims = []
    prev_image: Subspace | None = None
    for d in matrices:
        Z = d.kernel_basis()
        B = prev_image if prev_image is not None else Subspace.zero(field, d.ncols)
        dims.append(quotient_dim(Z, B))
        prev_image = d.image_basis()
    return dims


def hochschild_cohomology_dims(cat, field, max_m: int, cap: int | None = None) -> list[int]:
    """Dimensions of HH^0..HH^max_m over the full cochain complex."""
    mats = [hochschild_differential_matrix(cat, field, m, cap) for m in range(max_m + 1)]
    return _cohomology_dims_from_matrices(mats, field)


# --- the relative subcomplex ---------------------------------------------------

@lru_cache(maxsize=None)
def _relative_basis_cached(cat: FiniteCategory, m: int) -> tuple:
    if m == 0:
        # degree 0 is the centralizer of the identity span: the endomorphisms
        return tuple(((), h) for h in cat.all_endomorphisms)
    chains: list = []

    def extend(tup, src):
        # tup is in tensor order; the next factor composes on the right
        if len(tup) == m:
            chains.append((tup, src))
            return
        for g in cat.morphisms_by_target[src] if tup else range(cat.n_morphisms):
            extend(tup + (g,), cat.source[g])

    extend((), -1)
    basis = []
    for tup, src in chains:
        tgt = cat.target[tup[0]]
        for h in cat.hom(src, tgt):
            basis.append((tup, h))
    return tuple(basis)


def relative_basis(cat: FiniteCategory, m: int) -> list:
    """Basis of the relative degree-m cochains, ordered lexicographically.

    Pairs (tup, h) with tup composable in tensor order (each factor's source
    is the next factor's target) and h running over Hom(source, target) of
    the composite; in degree 0, the endomorphisms of the category.
    """
    return list(_relative_basis_cached(cat, m))


@lru_cache(maxsize=None)
def _relative_differential_entries(cat: FiniteCategory, m: int) -> tuple:
    """(n_rows, n_cols, entries over Z) of the restricted differential."""
    cols = _relative_basis_cached(cat, m)
    rows = _relative_basis_cached(cat, m + 1)
    row_index = {pair: i for i, pair in enumerate(rows)}
    entries: dict = {}
    for c, (tup, h) in enumerate(cols):
        for pair, v in _column_contributions(cat, tup, h).items():
            r = row_index.get(pair)
            if r is None:
                raise NotASubcomplex(
                    f"differential leaves the relative subcomplex at degree {m}: "
                    f"column {(tup, h)} hits {pair}"
                )
            entries[r, c] = v
    return len(rows), len(cols), entries


def relative_differential_matrix(cat, field, m: int, cap: int | None = None) -> Matrix:
    """Matrix of the differential restricted to relative cochains."""
    nrows, ncols, entries = _relative_differential_entries(cat, m)
    cap_val = DEFAULT_BASIS_CAP if cap is None else cap
    if max(nrows, ncols) > cap_val:
        raise DimensionCapExceeded(m + 1, max(nrows, ncols), cap_val)
    return Matrix.from_int_entries(field, nrows, ncols, entries)


def relative_cohomology_dims(cat, field, max_m: int, cap: int | None = None) -> list[int]:
    """Dimensions of the relative cohomology in degrees 0..max_m."""
    mats = [relative_differential_matrix(cat, field, m, cap) for m in range(max_m + 1)]
    return _cohomology_dims_from_matrices(mats, field)


# --- separability of the identity span --------------------------------------------
#
# Elements of the enveloping algebra R ⊗ R^op are sparse maps
# (morphism, morphism) -> scalar; (a⊗b)(c⊗d) = (a∘c) ⊗ (d∘b).

def _env_mul(cat, field, u: dict, v: dict) -> dict:
    comp = cat.compose_table
    out: dict = {}
    for (a, b), x in u.items():
        for (c, d), y in v.items():
            ac = comp[a][c]
            if ac < 0:
                continue
            db = comp[d][b]
            if db < 0:
                continue
            key = (ac, db)
            w = field.add(out.get(key, field.zero), field.mul(x, y))
            if w == 0:
                out.pop(key, None)
            else:
                out[key] = w
    return out


def separability_check(cat: FiniteCategory, field: FieldSpec | None = None) -> bool:
    """Verify the separability idempotent of the identity span by expansion.

    Checks that e = Σ_x 1_x ⊗ 1_x is idempotent, multiplies out to the unit
    of kC, and commutes with every generator 1_x in the enveloping algebra.
    """
    field = field if field is not None else FieldSpec(None)
    one = field.one
    e = {(i, i): one for i in cat.identity}
    if _env_mul(cat, field, e, e) != e:
        return False
    unit = {}
    comp = cat.compose_table
    for (a, b) in e:
        h = comp[a][b]
        if h < 0:
            return False
        unit[h] = field.add(unit.get(h, field.zero), one)
    unit = {k: v for k, v in unit.items() if v != 0}
    if unit != algebra_unit(cat, field).as_dict():
        return False
    for r in cat.identity:
        r_tensor_1 = {(r, y): one for y in cat.identity}
        one_tensor_r = {(y, r): one for y in cat.identity}
        left = _env_mul(cat, field, r_tensor_1, e)
        right = _env_mul(cat, field, one_tensor_r, e)
        if left != right:
            return False
    return True
