"""Exact matrices over GF(p) or Q with deterministic elimination.

Entries live in a canonical map from (row, col) to nonzero scalar; the
``layout`` attribute, picked by a size threshold at construction, selects
the elimination engine:

* ``dense``  -- flat-buffer Gauss-Jordan; the GF(p) case goes through the
  compiled kernel when present, with a pure-Python twin otherwise.
* ``sparse`` -- reduction on row dicts with column-indexed bookkeeping and
  Markowitz-style row selection.

Both engines end in the canonical reduced row echelon form (columns are
processed left to right, so the pivot columns are the RREF pivots, and RREF
is unique for a given row space).  Ranks, kernels and reported bases
therefore never depend on the layout or on the kernel backend.  Pivot
choice is deterministic: the dense engines take the lowest usable row, the
sparse engine the sparsest usable row with ties broken by row index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .errors import NotASubspace, NotChainCompatible
from .fields import FieldSpec

DENSE_CELL_LIMIT = 100_000
DENSE_COL_LIMIT = 4096


def _auto_layout(nrows: int, ncols: int) -> str:
    if nrows * ncols >= DENSE_CELL_LIMIT or ncols >= DENSE_COL_LIMIT:
        return "sparse"
    return "dense"


class Matrix:
    """Immutable exact matrix.  Build via the ``from_*`` constructors."""

    def __init__(self, field: FieldSpec, nrows: int, ncols: int, cells: dict, layout: str | None = None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.layout = layout or _auto_layout(nrows, ncols)
        if self.layout not in ("dense", "sparse"):
            raise ValueError(f"unknown layout {self.layout!r}")
        # canonical cell map (r, c) -> nonzero scalar
        self._cells = {k: v for k, v in cells.items() if v != 0}

    # --- constructors -------------------------------------------------------

    @classmethod
    def from_entries(cls, field, nrows, ncols, entries, layout=None) -> "Matrix":
        """``entries``: mapping or iterable of ((r, c), value) in field scalars."""
        items = entries.items() if hasattr(entries, "items") else entries
        cells = {}
        for (r, c), v in items:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            if v != 0:
                cells[r, c] = v
        return cls(field, nrows, ncols, cells, layout)

    @classmethod
    def from_int_entries(cls, field, nrows, ncols, entries, layout=None) -> "Matrix":
        """Reduce integer entries into the field; drops entries that map to 0."""
        items = entries.items() if hasattr(entries, "items") else entries
        cells = {}
        for (r, c), n in items:
            v = field.scalar(n)
            if v != 0:
                cells[r, c] = v
        return cls(field, nrows, ncols, cells, layout)

    @classmethod
    def from_rows(cls, field, rows, ncols=None, layout=None) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cells = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v != 0:
                    cells[i, j] = v
        return cls(field, nrows, ncols, cells, layout)

    @classmethod
    def zeros(cls, field, nrows, ncols, layout=None) -> "Matrix":
        return cls(field, nrows, ncols, {}, layout)

    @classmethod
    def identity(cls, field, n, layout=None) -> "Matrix":
        one = field.one
        return cls(field, n, n, {(i, i): one for i in range(n)}, layout)

    # --- access ---------------------------------------------------------------

    @property
    def nnz(self) -> int:
        return len(self._cells)

    def entry(self, r: int, c: int):
        return self._cells.get((r, c), self.field.zero)

    def entries(self):
        """Iterate ``(r, c, value)`` sorted by (r, c)."""
        for (r, c) in sorted(self._cells):
            yield r, c, self._cells[r, c]

    def triplets(self) -> tuple:
        return tuple((r, c, v) for r, c, v in self.entries())

    def row_dicts(self) -> list[dict]:
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in self._cells.items():
            rows[r][c] = v
        return rows

    def dense_rows(self) -> list[list]:
        zero = self.field.zero
        rows = [[zero] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self._cells.items():
            rows[r][c] = v
        return rows

    def column(self, c: int) -> dict:
        return {r: v for (r, cc), v in self._cells.items() if cc == c}

    def is_zero(self) -> bool:
        return not self._cells

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._cells == other._cells
        )

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, tuple(sorted(self._cells.items()))))

    def __repr__(self):
        return f"Matrix({self.field}, {self.nrows}x{self.ncols}, nnz={self.nnz}, {self.layout})"

    def first_difference(self, other: "Matrix"):
        """First (r, c, self_val, other_val) where the matrices differ, or None."""
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return (-1, -1, (self.nrows, self.ncols), (other.nrows, other.ncols))
        for key in sorted(set(self._cells) | set(other._cells)):
            a = self._cells.get(key, self.field.zero)
            b = other._cells.get(key, other.field.zero)
            if a != b:
                return (key[0], key[1], a, b)
        return None

    # --- algebra -----------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.ncols, self.nrows,
            {(c, r): v for (r, c), v in self._cells.items()},
        )

    def scaled(self, s) -> "Matrix":
        if s == 0:
            return Matrix.zeros(self.field, self.nrows, self.ncols)
        f = self.field
        return Matrix(f, self.nrows, self.ncols,
                      {k: f.mul(s, v) for k, v in self._cells.items()})

    def __neg__(self) -> "Matrix":
        return self.scaled(self.field.neg(self.field.one))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        cells = dict(self._cells)
        for k, v in other._cells.items():
            w = f.add(cells.get(k, f.zero), v)
            if w == 0:
                cells.pop(k, None)
            else:
                cells[k] = w
        return Matrix(f, self.nrows, self.ncols, cells)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def _check_same_shape(self, other):
        if not isinstance(other, Matrix) or self.field != other.field:
            raise ValueError("field mismatch")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        p = self.field.p
        rows_a = self.row_dicts()
        rows_b = other.row_dicts()
        cells = {}
        for i, ra in enumerate(rows_a):
            if not ra:
                continue
            acc = {}
            for k, v in ra.items():
                rb = rows_b[k]
                if not rb:
                    continue
                for j, w in rb.items():
                    acc[j] = acc.get(j, 0) + v * w
            if p is not None:
                for j, v in acc.items():
                    v %= p
                    if v:
                        cells[i, j] = v
            else:
                for j, v in acc.items():
                    if v:
                        cells[i, j] = v
        return Matrix(self.field, self.nrows, other.ncols, cells)

    def apply(self, vec) -> tuple:
        """Matrix-vector product; ``vec`` is a length-ncols sequence."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        f = self.field
        out = [f.zero] * self.nrows
        for (r, c), v in self._cells.items():
            x = vec[c]
            if x != 0:
                out[r] = f.add(out[r], f.mul(v, x))
        return tuple(out)

    # --- elimination ------------------------------------------------------------

    def rref(self) -> tuple[tuple, "Matrix"]:
        """Reduced row echelon form.

        Returns ``(pivot_cols, R)`` where R holds only the nonzero rows.
        The output is the canonical RREF of the row space, identical across
        layouts and kernel backends.
        """
        if self.layout == "dense":
            pivots, rows = self._rref_dense()
        else:
            pivots, rows = self._rref_sparse()
        cells = {}
        for i, row in enumerate(rows):
            for c, v in row.items():
                cells[i, c] = v
        return tuple(pivots), Matrix(self.field, len(pivots), self.ncols, cells)

    def _rref_dense(self):
        f = self.field
        if f.is_prime_field:
            p = f.p
            flat = [0] * (self.nrows * self.ncols)
            for (r, c), v in self._cells.items():
                flat[r * self.ncols + c] = v
            pivots, out = kernels.rref_mod_p(flat, self.nrows, self.ncols, p)
            rows = []
            for i in range(len(pivots)):
                base = i * self.ncols
                rows.append({c: out[base + c] for c in range(self.ncols) if out[base + c]})
            return list(pivots), rows
        return _rref_dense_frac(self.dense_rows(), self.ncols)

    def _rref_sparse(self):
        rows = [r for r in self.row_dicts() if r]
        if self.field.is_prime_field:
            return _rref_sparse_gf(rows, self.ncols, self.field.p)
        return _rref_sparse_frac(rows, self.ncols)

    def rank(self) -> int:
        pivots, _ = self.rref()
        return len(pivots)

    def kernel_basis(self) -> "Subspace":
        """Canonical basis of the right kernel (solutions of Mx = 0)."""
        f = self.field
        pivots, R = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivset]
        vectors = []
        rows = R.row_dicts()
        for j in free:
            v = [f.zero] * self.ncols
            v[j] = f.one
            for i, p in enumerate(pivots):
                coef = rows[i].get(j)
                if coef:
                    v[p] = f.neg(coef)
            vectors.append(v)
        return Subspace.from_vectors(f, self.ncols, vectors)

    def image_basis(self) -> "Subspace":
        """Canonical basis of the column space."""
        pivots, R = self.transpose().rref()
        return Subspace._from_rref(self.field, self.nrows, R, pivots)

    # --- serialization -----------------------------------------------------------

    def to_json_dict(self) -> dict:
        fmt = self.field.format_scalar
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "triplets": [[r, c, fmt(v)] for r, c, v in self.entries()],
        }


# --- elimination engines ---------------------------------------------------
#
# Four paths (dense/sparse x GF/Q) that all end in the same canonical RREF.
# The GF paths work on ints mod p, the rational paths on Fractions.

def _rref_dense_frac(rows, ncols):
    nrows = len(rows)
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
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        for i in range(nrows):
            if i != r and rows[i][c]:
                row = rows[i]
                fac = row[c]
                for j in range(c, ncols):
                    if prow[j]:
                        row[j] -= fac * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    out = [{c: v for c, v in enumerate(rows[i]) if v} for i in range(r)]
    return pivots, out


def _rref_sparse(rows, ncols, inv, mul, sub):
    """Sparse reduction on row dicts, generic over the scalar hooks.

    Columns are processed left to right so the pivot columns are the
    canonical RREF pivots; within a column the sparsest available row is
    chosen (Markowitz-style row selection), ties broken by row index.
    Forward elimination only touches rows not yet chosen, so each pivot row
    is contaminated only at later pivot columns; the back-substitution
    sweep removes exactly that.
    """
    col_rows: dict[int, set] = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)
    piv_list = []  # (col, row) in selection order == ascending column order
    for pc in range(ncols):
        cand = col_rows.get(pc)
        if not cand:
            continue
        pr = min(cand, key=lambda i: (len(rows[i]), i))
        prow = rows[pr]
        for c in prow:
            col_rows[c].discard(pr)
        factor = inv(prow[pc])
        if factor != 1:
            for c in list(prow):
                prow[c] = mul(factor, prow[c])
        for i in list(col_rows.get(pc, ())):
            row = rows[i]
            f = row[pc]
            for c, v in prow.items():
                w = sub(row.get(c, 0), f, v)
                if w:
                    if c not in row:
                        col_rows.setdefault(c, set()).add(i)
                    row[c] = w
                else:
                    if c in row:
                        del row[c]
                        col_rows[c].discard(i)
        piv_list.append((pc, pr))
    return _back_substitute(rows, piv_list, sub)


def _rref_sparse_gf(rows, ncols, p):
    return _rref_sparse(
        rows, ncols,
        inv=lambda a: pow(a, p - 2, p),
        mul=lambda a, b: a * b % p,
        sub=lambda a, f, b: (a - f * b) % p,
    )


def _rref_sparse_frac(rows, ncols):
    return _rref_sparse(
        rows, ncols,
        inv=lambda a: 1 / a,
        mul=lambda a, b: a * b,
        sub=lambda a, f, b: a - f * b,
    )


def _back_substitute(rows, piv_list, sub):
    """Clear pivot-column contamination from pivot rows and emit RREF order.

    Forward elimination only updates rows not yet chosen as pivots, so a
    pivot row can be contaminated exactly at pivot columns selected after
    it.  Sweeping in reverse selection order therefore only ever subtracts
    rows that are already fully reduced.
    """
    piv_row_of = {c: r for c, r in piv_list}
    for k in range(len(piv_list) - 2, -1, -1):
        pc, pr = piv_list[k]
        row = rows[pr]
        contaminated = sorted(c for c in row if c != pc and c in piv_row_of)
        for c in contaminated:
            f = row.get(c)
            if not f:
                continue
            other = rows[piv_row_of[c]]
            for cc, v in other.items():
                w = sub(row.get(cc, 0), f, v)
                if w:
                    row[cc] = w
                else:
                    row.pop(cc, None)
    ordered = sorted(piv_list)
    pivots = [c for c, _ in ordered]
    out_rows = [rows[r] for _, r in ordered]
    return pivots, out_rows


# --- subspaces ---------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of k^n held as its canonical RREF basis.

    Basis rows have strictly increasing pivot columns, pivot entries 1, and
    zeros above and below each pivot: the representation is unique for the
    subspace, so equality of subspaces is equality of these tuples.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple          # tuple of dense coordinate tuples
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @staticmethod
    def zero(field, ambient_dim) -> "Subspace":
        return Subspace(field, ambient_dim, (), ())

    @staticmethod
    def full(field, ambient_dim) -> "Subspace":
        eye = Matrix.identity(field, ambient_dim)
        return Subspace.from_vectors(field, ambient_dim, eye.dense_rows())

    @staticmethod
    def from_vectors(field, ambient_dim, vectors) -> "Subspace":
        m = Matrix.from_rows(field, [list(v) for v in vectors], ncols=ambient_dim)
        pivots, R = m.rref()
        return Subspace._from_rref(field, ambient_dim, R, pivots)

    @staticmethod
    def _from_rref(field, ambient_dim, R: Matrix, pivots) -> "Subspace":
        rows = R.dense_rows()
        return Subspace(field, ambient_dim,
                        tuple(tuple(row) for row in rows), tuple(pivots))

    @cached_property
    def _sparse_basis(self) -> tuple:
        return tuple(
            tuple((j, w) for j, w in enumerate(row) if w != 0) for row in self.basis
        )

    def reduce(self, vec) -> tuple:
        """Residue of ``vec`` after eliminating this subspace's pivot coordinates."""
        if len(vec) != self.ambient_dim:
            raise ValueError("vector length mismatch")
        f = self.field
        v = list(vec)
        for srow, p in zip(self._sparse_basis, self.pivots):
            c = v[p]
            if c != 0:
                for j, w in srow:
                    v[j] = f.sub(v[j], f.mul(c, w))
        return tuple(v)

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vec):
        """Coordinates of ``vec`` in the RREF basis, or None if not a member."""
        coords = tuple(vec[p] for p in self.pivots)
        if not self.contains(vec):
            return None
        return coords

    def vector_from_coordinates(self, coords) -> tuple:
        f = self.field
        v = [f.zero] * self.ambient_dim
        for a, row in zip(coords, self.basis):
            if a != 0:
                for j, w in enumerate(row):
                    if w != 0:
                        v[j] = f.add(v[j], f.mul(a, w))
        return tuple(v)


def quotient_dim(Z: Subspace, B: Subspace) -> int:
    """dim(Z/B), verifying B is contained in Z.

    Raises NotASubspace when containment fails; for (co)chain complexes that
    means the differential does not square to zero.
    """
    if Z.ambient_dim != B.ambient_dim or Z.field != B.field:
        raise NotASubspace("ambient space mismatch")
    for v in B.basis:
        if not Z.contains(v):
            raise NotASubspace("claimed subspace is not contained in the ambient one")
    return Z.dim - B.dim


def _quotient_pivot_index(Z: Subspace, B: Subspace) -> list[int]:
    """Indices of Z-basis rows whose pivots are not pivots of B.

    Because both bases are in RREF and B is contained in Z, these rows
    represent a complement of B in Z.
    """
    bpiv = set(B.pivots)
    return [i for i, p in enumerate(Z.pivots) if p not in bpiv]


def quotient_coordinates(Z: Subspace, B: Subspace, vec) -> tuple:
    """Coordinates of ``vec + B`` in the canonical complement basis of B in Z."""
    rep = B.reduce(vec)
    idx = _quotient_pivot_index(Z, B)
    return tuple(rep[Z.pivots[i]] for i in idx)


def induced_quotient_map(T: Matrix, Z_src: Subspace, B_src: Subspace,
                         Z_dst: Subspace, B_dst: Subspace) -> tuple[Matrix, bool]:
    """Matrix of the map Z_src/B_src -> Z_dst/B_dst induced by T.

    Verifies that T maps Z_src into Z_dst and B_src into B_dst; raises
    NotChainCompatible otherwise.  Returns (matrix, invertible) where the
    matrix is written in the canonical quotient bases and ``invertible``
    reports whether it is square of full rank.
    """
    for name, (sub, target) in (("cocycles", (Z_src, Z_dst)), ("coboundaries", (B_src, B_dst))):
        for v in sub.basis:
            if not target.contains(T.apply(v)):
                raise NotChainCompatible(f"map does not preserve {name}")
    # containment B <= Z on both sides is part of the contract
    q_src = quotient_dim(Z_src, B_src)
    q_dst = quotient_dim(Z_dst, B_dst)
    src_idx = _quotient_pivot_index(Z_src, B_src)
    cells = {}
    for j, i in enumerate(src_idx):
        image = T.apply(Z_src.basis[i])
        coords = quotient_coordinates(Z_dst, B_dst, image)
        for r, v in enumerate(coords):
            if v != 0:
                cells[r, j] = v
    Q = Matrix(T.field, q_dst, q_src, cells)
    invertible = q_src == q_dst and Q.rank() == q_src
    return Q, invertible
