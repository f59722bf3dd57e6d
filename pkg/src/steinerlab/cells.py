"""Cell tables: the finite data of cells in the strict omega-category
associated to a based complex.

A table of dimension n is a double sequence of non-negative chains
``minus[0..n]``, ``plus[0..n]`` with equal top entries, matching boundaries
``d(x[k]) = plus[k-1] - minus[k-1]``, and unit augmentation at level zero.
Composition along a level is pointwise addition above the glue level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BasedComplex,
    Chain,
    CheckItem,
    CheckReport,
    SteinerlabError,
    report,
)


class BadLevelError(SteinerlabError):
    code = "BAD_LEVEL"


class NotComposableError(SteinerlabError):
    code = "NOT_COMPOSABLE"


class InvalidResultError(SteinerlabError):
    code = "INVALID_RESULT"


@dataclass(frozen=True)
class CellTable:
    ambient: BasedComplex
    dim: int
    minus: tuple[Chain, ...]
    plus: tuple[Chain, ...]

    def __post_init__(self):
        if self.dim < 0 or len(self.minus) != self.dim + 1 or len(self.plus) != self.dim + 1:
            raise BadLevelError("table entries must cover levels 0..dim")
        for k in range(self.dim + 1):
            if self.minus[k].degree != k or self.plus[k].degree != k:
                raise BadLevelError(f"level-{k} entry has the wrong degree")

    def __repr__(self) -> str:
        return f"<CellTable dim {self.dim} over {self.ambient!r}>"


def validate_table(t: CellTable) -> CheckReport:
    """Check the four table axioms, with level witnesses."""
    top_ok = t.minus[t.dim] == t.plus[t.dim]
    natural_witness = None
    for k in range(t.dim + 1):
        for chain in (t.minus[k], t.plus[k]):
            if not chain.is_zero() and not chain.is_nonnegative():
                natural_witness = f"level {k}"
                break
        if natural_witness:
            break
    boundary_witness = None
    for k in range(1, t.dim + 1):
        expected = t.plus[k - 1] - t.minus[k - 1]
        for label, chain in (("minus", t.minus[k]), ("plus", t.plus[k])):
            if t.ambient.d(chain) != expected:
                boundary_witness = f"{label} level {k}"
                break
        if boundary_witness:
            break
    unit_ok = t.ambient.eps(t.minus[0]) == 1 and t.ambient.eps(t.plus[0]) == 1
    return report(
        CheckItem("TOP_MATCH", top_ok, None if top_ok else f"level {t.dim}"),
        CheckItem("ENTRIES_NATURAL", natural_witness is None, natural_witness),
        CheckItem("BOUNDARY_COMPAT", boundary_witness is None, boundary_witness),
        CheckItem("UNIT_AUGMENTATION", unit_ok, None if unit_ok else "level 0"),
    )


def source(t: CellTable, k: int) -> CellTable:
    """Truncate at level k with the minus entry on top."""
    if not (0 <= k <= t.dim):
        raise BadLevelError(f"level {k} out of range 0..{t.dim}")
    return CellTable(
        t.ambient,
        k,
        t.minus[: k + 1],
        t.plus[:k] + (t.minus[k],),
    )


def target(t: CellTable, k: int) -> CellTable:
    """Truncate at level k with the plus entry on top."""
    if not (0 <= k <= t.dim):
        raise BadLevelError(f"level {k} out of range 0..{t.dim}")
    return CellTable(
        t.ambient,
        k,
        t.minus[:k] + (t.plus[k],),
        t.plus[: k + 1],
    )


def identity_table(t: CellTable) -> CellTable:
    """Degenerate extension by the zero chain one level up."""
    z = Chain(t.dim + 1)
    return CellTable(t.ambient, t.dim + 1, t.minus + (z,), t.plus + (z,))


def is_degenerate(t: CellTable) -> bool:
    """True when the table carries no new top content (an identity cell)."""
    return t.dim >= 1 and t.minus[t.dim].is_zero()


def compose_tables(u: CellTable, t: CellTable, p: int) -> CellTable:
    """Compose ``t`` then ``u`` along level ``p``.

    Entries above the glue level add; at the glue level the minus side comes
    from ``t`` and the plus side from ``u``; below, the shared entries are
    kept.  The result is re-validated.
    """
    if u.ambient != t.ambient:
        raise NotComposableError("tables live in different complexes")
    if t.dim != u.dim or not (0 <= p < t.dim):
        raise NotComposableError(f"need equal dimensions above level {p}")
    if target(t, p) != source(u, p):
        raise NotComposableError("target of first does not match source of second")
    minus = []
    plus = []
    for k in range(t.dim + 1):
        if k < p:
            minus.append(t.minus[k])
            plus.append(t.plus[k])
        elif k == p:
            minus.append(t.minus[k])
            plus.append(u.plus[k])
        else:
            minus.append(t.minus[k] + u.minus[k])
            plus.append(t.plus[k] + u.plus[k])
    result = CellTable(t.ambient, t.dim, tuple(minus), tuple(plus))
    check = validate_table(result)
    if not check.passed:
        raise InvalidResultError(
            f"composite table is invalid: {check.failures()[0].name}"
        )
    return result
