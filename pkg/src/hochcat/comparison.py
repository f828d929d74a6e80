"""Graded comparison maps between Hochschild and simplicial cochains.

``T`` reads one coefficient of a Hochschild cochain per nerve chain of the
adjoint category: a chain over bottom ``(g_0..g_{m-1})`` with base vertical
``a_0`` reads the coefficient at input tuple ``(g_{m-1}, .., g_0)`` (chains
are stored source to target, tensor slots run the other way) and output
``g_{m-1}∘..∘g_0∘a_0``.  ``X`` goes back by summing over all base verticals
of the uniquely completed ladders.

Together with the sign-twisted coboundary these are cochain maps; on the
relative subcomplex they are mutually inverse, which is what certifies the
dimension tables degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .category import (
    AdjointCategory,
    FiniteCategory,
    Ladder,
    _completion_table,
    adjoint_category,
    predicate_reports,
    require_predicates,
)
from .fields import FieldSpec
from .hochschild import (
    basis_index,
    check_cap,
    hochschild_basis_size,
    hochschild_differential_matrix,
    relative_basis,
    relative_differential_matrix,
    _relative_basis_cached,
)
from .matrix import Matrix, Subspace, induced_quotient_map, quotient_dim
from .nerve import _chain_index, _chains_cached, simplicial_coboundary_matrix

CANCELLATIVE = ("left_cancellative", "right_cancellative")
DETERMINISTIC = ("left_deterministic", "right_deterministic")


@dataclass(frozen=True)
class ComparisonContext:
    """A category, its adjoint category, a field, and the predicate flags."""

    cat: FiniteCategory
    fad: AdjointCategory
    field: FieldSpec

    @property
    def flags(self) -> dict:
        return {name: rep.holds for name, rep in predicate_reports(self.cat).items()}

    def require(self, *names: str) -> None:
        require_predicates(self.cat, *names)


def make_context(cat: FiniteCategory, field: FieldSpec) -> ComparisonContext:
    return ComparisonContext(cat=cat, fad=adjoint_category(cat), field=field)


# --- the reading map T -------------------------------------------------------

@lru_cache(maxsize=None)
def _t_entries(cat: FiniteCategory, m: int) -> tuple:
    """(nrows, ncols, ((row, col), ...)) of T in degree m; all entries are 1."""
    fad = adjoint_category(cat)
    ncols = hochschild_basis_size(cat, m)
    if m == 0:
        entries = tuple((o, e) for o, e in enumerate(fad.object_endos))
        return fad.n_objects, ncols, entries
    comp = cat.compose_table
    chains = _chains_cached(fad, m)
    entries = []
    for i, sigma in enumerate(chains):
        ladder = fad.ladder_of_chain(sigma, m)
        c = ladder.verticals[0]
        for g in ladder.bottom:
            c = comp[g][c]
        col = basis_index(cat, tuple(reversed(ladder.bottom)), c)
        entries.append((i, col))
    return len(chains), ncols, tuple(entries)


def t_map_matrix(ctx: ComparisonContext, m: int, cap: int | None = None) -> Matrix:
    """Matrix of T from degree-m Hochschild cochains to nerve cochains of F^ad."""
    check_cap(ctx.cat, m, cap)
    nrows, ncols, entries = _t_entries(ctx.cat, m)
    one = ctx.field.one
    return Matrix.from_entries(ctx.field, nrows, ncols, {rc: one for rc in entries})


def t_map_relative_matrix(ctx: ComparisonContext, m: int) -> Matrix:
    """T restricted to the relative subcomplex (square under the full hypotheses)."""
    rel_index = {pair: i for i, pair in enumerate(_relative_basis_cached(ctx.cat, m))}
    fad = ctx.fad
    comp = ctx.cat.compose_table
    one = ctx.field.one
    cells = {}
    if m == 0:
        for o, e in enumerate(fad.object_endos):
            cells[o, rel_index[(), e]] = one
        return Matrix.from_entries(ctx.field, fad.n_objects, len(rel_index), cells)
    chains = _chains_cached(fad, m)
    for i, sigma in enumerate(chains):
        ladder = fad.ladder_of_chain(sigma, m)
        c = ladder.verticals[0]
        for g in ladder.bottom:
            c = comp[g][c]
        cells[i, rel_index[tuple(reversed(ladder.bottom)), c]] = one
    return Matrix.from_entries(ctx.field, len(chains), len(rel_index), cells)


# --- the section X -----------------------------------------------------------

@lru_cache(maxsize=None)
def _x_entries(cat: FiniteCategory, m: int) -> tuple:
    """(nrows, ncols, entries over Z) of X in degree m.

    Assumes the right determinism and right cancellation needed for ladder
    completion; callers gate on the predicates.
    """
    fad = adjoint_category(cat)
    nrows = hochschild_basis_size(cat, m)
    if m == 0:
        entries = {(e, o): 1 for o, e in enumerate(fad.object_endos)}
        return nrows, fad.n_objects, tuple(entries.items())
    comp = cat.compose_table
    completion = _completion_table(cat)
    col_index = _chain_index(fad, m)
    entries: dict = {}
    for chain in _chains_cached(cat, m):
        src = cat.source[chain[0]]
        rev = tuple(reversed(chain))
        for a0 in cat.endomorphisms[src]:
            verticals = [a0]
            a = a0
            for g in chain:
                a = completion[g, a]
                verticals.append(a)
            col = col_index[fad.chain_of_ladder(Ladder(chain, tuple(verticals)))]
            c = a0
            for g in chain:
                c = comp[g][c]
            row = basis_index(cat, rev, c)
            entries[row, col] = entries.get((row, col), 0) + 1
    return nrows, len(col_index), tuple(entries.items())


def x_map_matrix(ctx: ComparisonContext, m: int, cap: int | None = None) -> Matrix:
    """Matrix of X from nerve cochains of F^ad to degree-m Hochschild cochains."""
    ctx.require("right_deterministic", "right_cancellative")
    check_cap(ctx.cat, m, cap)
    nrows, ncols, entries = _x_entries(ctx.cat, m)
    return Matrix.from_int_entries(ctx.field, nrows, ncols, dict(entries))


def x_map_relative_matrix(ctx: ComparisonContext, m: int) -> Matrix:
    """X written in relative row coordinates (its image is always relative)."""
    ctx.require("right_deterministic", "right_cancellative")
    rel = _relative_basis_cached(ctx.cat, m)
    rel_of_full = {basis_index(ctx.cat, tup, h): i for i, (tup, h) in enumerate(rel)}
    nrows, ncols, entries = _x_entries(ctx.cat, m)
    cells = {}
    for (r, c), v in entries:
        cells[rel_of_full[r], c] = v
    return Matrix.from_int_entries(ctx.field, len(rel), ncols, cells)


# --- chain-map identities ---------------------------------------------------------

@dataclass(frozen=True)
class VerificationResult:
    """Outcome of an exact matrix identity check."""

    name: str
    degree: int
    ok: bool
    first_difference: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def _sign_for(field: FieldSpec, m: int):
    """(-1)^(m+1) as a field scalar."""
    return field.neg(field.one) if (m + 1) % 2 else field.one


@dataclass(frozen=True)
class SignedDifferential:
    """The sign-twisted coboundary (-1)^(m+1) δ^m used by the comparison."""

    degree: int
    matrix: Matrix


def signed_coboundary(ctx: ComparisonContext, m: int) -> SignedDifferential:
    delta = simplicial_coboundary_matrix(ctx.fad, ctx.field, m)
    return SignedDifferential(m, delta.scaled(_sign_for(ctx.field, m)))


def _verified(name: str, m: int, lhs: Matrix, rhs: Matrix) -> VerificationResult:
    diff = lhs.first_difference(rhs)
    return VerificationResult(name, m, diff is None, diff)


def verify_t_chain_identity(ctx: ComparisonContext, m: int, cap: int | None = None) -> VerificationResult:
    """T^(m+1) ∘ ∂^m = (-1)^(m+1) δ^m ∘ T^m, as exact matrices."""
    ctx.require(*CANCELLATIVE)
    lhs = t_map_matrix(ctx, m + 1, cap) @ hochschild_differential_matrix(ctx.cat, ctx.field, m, cap)
    rhs = (simplicial_coboundary_matrix(ctx.fad, ctx.field, m) @ t_map_matrix(ctx, m, cap))
    rhs = rhs.scaled(_sign_for(ctx.field, m))
    return _verified("t_chain", m, lhs, rhs)


def verify_x_chain_identity(ctx: ComparisonContext, m: int, cap: int | None = None) -> VerificationResult:
    """X^(m+1) ∘ δ^m = (-1)^(m+1) ∂^m ∘ X^m, as exact matrices."""
    ctx.require(*DETERMINISTIC, *CANCELLATIVE)
    lhs = x_map_matrix(ctx, m + 1, cap) @ simplicial_coboundary_matrix(ctx.fad, ctx.field, m)
    rhs = (hochschild_differential_matrix(ctx.cat, ctx.field, m, cap) @ x_map_matrix(ctx, m, cap))
    rhs = rhs.scaled(_sign_for(ctx.field, m))
    return _verified("x_chain", m, lhs, rhs)


def verify_section(ctx: ComparisonContext, m: int, cap: int | None = None) -> VerificationResult:
    """T^m ∘ X^m is the identity on degree-m nerve cochains of F^ad."""
    ctx.require("right_deterministic", *CANCELLATIVE)
    prod = t_map_matrix(ctx, m, cap) @ x_map_matrix(ctx, m, cap)
    eye = Matrix.identity(ctx.field, prod.nrows)
    return _verified("section", m, prod, eye)


def verify_two_sided_on_relative(ctx: ComparisonContext, m: int) -> VerificationResult:
    """On relative cochains T and X are mutually inverse bijections.

    Checks (i) the image of X lies in the relative span, and (ii) both
    composites of the restricted maps are identity matrices.
    """
    ctx.require("rr_transitive", *DETERMINISTIC, *CANCELLATIVE)
    rel_full = {
        basis_index(ctx.cat, tup, h)
        for tup, h in _relative_basis_cached(ctx.cat, m)
    }
    _, _, entries = _x_entries(ctx.cat, m)
    for (r, _c), _v in entries:
        if r not in rel_full:
            return VerificationResult("two_sided_relative", m, False, (r, -1, "image not relative", None))
    t_rel = t_map_relative_matrix(ctx, m)
    x_rel = x_map_relative_matrix(ctx, m)
    left = _verified("two_sided_relative", m, x_rel @ t_rel, Matrix.identity(ctx.field, x_rel.nrows))
    if not left.ok:
        return left
    return _verified("two_sided_relative", m, t_rel @ x_rel, Matrix.identity(ctx.field, t_rel.nrows))


# --- Theorem A, degree by degree ------------------------------------------------

@dataclass(frozen=True)
class DegreeComparison:
    degree: int
    dim_hochschild: int
    dim_relative: int
    dim_simplicial: int
    induced_matrix: Matrix | None   # None when no hypothesis tier applies
    induced_surjective: bool
    induced_invertible: bool


@dataclass(frozen=True)
class TheoremAReport:
    field: FieldSpec
    max_degree: int
    flags: dict
    tier: str          # "isomorphism" | "surjection" | "unverified"
    degrees: tuple
    verdict: str       # tier name when certified, "failed" when a check broke

    @property
    def ok(self) -> bool:
        return self.verdict != "failed"


def hypothesis_tier(flags: dict) -> str:
    base = all(flags[n] for n in CANCELLATIVE + DETERMINISTIC)
    if base and flags["rr_transitive"]:
        return "isomorphism"
    if base:
        return "surjection"
    return "unverified"


def theorem_a_report(ctx: ComparisonContext, max_m: int, cap: int | None = None) -> TheoremAReport:
    """Compute both cohomologies and certify the induced comparison map.

    The map T always exists, so the report is computed for any category;
    the verdict claims only what the hypothesis tier supports.
    """
    cat, fad, field = ctx.cat, ctx.fad, ctx.field
    tier = hypothesis_tier(ctx.flags)
    degrees = []
    prev_h = prev_s = prev_r = None
    ok = True
    for m in range(max_m + 1):
        d_h = hochschild_differential_matrix(cat, field, m, cap)
        d_s = simplicial_coboundary_matrix(fad, field, m)
        d_r = relative_differential_matrix(cat, field, m, cap)
        Z_h = d_h.kernel_basis()
        B_h = prev_h.image_basis() if prev_h is not None else Subspace.zero(field, d_h.ncols)
        Z_s = d_s.kernel_basis()
        B_s = prev_s.image_basis() if prev_s is not None else Subspace.zero(field, d_s.ncols)
        Z_r = d_r.kernel_basis()
        B_r = prev_r.image_basis() if prev_r is not None else Subspace.zero(field, d_r.ncols)
        dim_h = quotient_dim(Z_h, B_h)
        dim_s = quotient_dim(Z_s, B_s)
        dim_r = quotient_dim(Z_r, B_r)
        if tier == "unverified":
            # without the cancellation hypotheses T need not be a chain map,
            # so there is no induced map to certify
            induced, invertible, surjective = None, False, False
        else:
            induced, invertible = induced_quotient_map(
                t_map_matrix(ctx, m, cap), Z_h, B_h, Z_s, B_s
            )
            surjective = induced.rank() == dim_s
        degrees.append(DegreeComparison(
            degree=m,
            dim_hochschild=dim_h,
            dim_relative=dim_r,
            dim_simplicial=dim_s,
            induced_matrix=induced,
            induced_surjective=surjective,
            induced_invertible=invertible,
        ))
        if tier == "isomorphism" and not invertible:
            ok = False
        if tier == "surjection" and not surjective:
            ok = False
        prev_h, prev_s, prev_r = d_h, d_s, d_r
    verdict = tier if (tier == "unverified" or ok) else "failed"
    return TheoremAReport(
        field=field,
        max_degree=max_m,
        flags=dict(ctx.flags),
        tier=tier,
        degrees=tuple(degrees),
        verdict=verdict,
    )
