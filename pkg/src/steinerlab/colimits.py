"""Finite colimits of complex maps by exact integer elimination.

Pushouts and coequalizers are computed degreewise as cokernels of integer
relation matrices.  Elimination uses unit pivots chosen deterministically
(smallest absolute coefficient, then generator name order); whenever the
quotient is degreewise free and spanned by surviving original generators,
a genuine :class:`~steinerlab.core.BasedComplex` is returned together with
its legs.  Otherwise the result carries a torsion witness (an elementary
divisor greater than one) or a non-based diagnostic instead of a complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    BasedComplex,
    Chain,
    ComplexMap,
    CompositionError,
    SteinerlabError,
    chain_of,
    direct_sum,
)
from .names import Name, name_key


class NonBasedPushoutError(SteinerlabError):
    code = "NON_BASED_PUSHOUT"


@dataclass(frozen=True)
class PushoutResult:
    """Computed colimit with diagnostics.

    When ``based`` is true, ``complex`` is the colimit presentation and
    ``leg_a``/``leg_b`` are valid maps making the square commute exactly.
    Otherwise ``complex`` and the legs are ``None``; ``torsion_witness``
    holds ``(degree, divisor)`` when a degreewise quotient fails to be free,
    and ``reason`` describes the failure either way.
    """

    complex: Optional[BasedComplex]
    leg_a: Optional[ComplexMap]
    leg_b: Optional[ComplexMap]
    based: bool
    torsion_witness: Optional[tuple[int, int]] = None
    reason: Optional[str] = None

    def require_based(self) -> BasedComplex:
        if not self.based or self.complex is None:
            raise NonBasedPushoutError(self.reason or "colimit is not based")
        return self.complex


class _Eliminator:
    """Quotient of one graded piece by integer relations, via unit pivots."""

    def __init__(self, relations: list[dict[Name, int]]):
        self.rows = [dict(row) for row in relations if row]
        self.expr: dict[Name, dict[Name, int]] = {}
        self.residual: list[dict[Name, int]] = []
        self._resolved: dict[Name, dict[Name, int]] = {}

    def run(self) -> Optional[tuple[int, str]]:
        """Eliminate; return (divisor, kind) on failure, None on success."""
        while True:
            self._main_pass()
            if not self.residual:
                return None
            projected = [self._project_row(row) for row in self.residual]
            projected = [row for row in projected if row]
            if projected == self.residual:
                break
            self.rows.extend(projected)
            self.residual = []
            self._resolved.clear()
        divisors = _diagonal_divisors(self.residual)
        bad = [d for d in divisors if d not in (0, 1)]
        if bad:
            return bad[0], "torsion"
        return 1, "non-based"

    def _main_pass(self) -> None:
        rows = self.rows
        while True:
            pivot = None  # (|coeff|, gen key, row idx) plus (gen, coeff)
            for idx, row in enumerate(rows):
                for gen, coeff in row.items():
                    cand = (abs(coeff), name_key(gen), idx)
                    if pivot is None or cand < pivot[:3]:
                        pivot = cand + (gen, coeff)
            if pivot is None:
                return
            _, _, idx, gen, coeff = pivot
            prow = rows[idx]
            if abs(coeff) == 1:
                del rows[idx]
                expr = {h: -coeff * c for h, c in prow.items() if h != gen}
                self.expr[gen] = expr
                for other in rows:
                    c = other.pop(gen, 0)
                    if c:
                        for h, e in expr.items():
                            other[h] = other.get(h, 0) + c * e
                            if not other[h]:
                                del other[h]
                rows[:] = [r for r in rows if r]
            else:
                changed = False
                for j, other in enumerate(rows):
                    if j == idx:
                        continue
                    c = other.get(gen, 0)
                    if c:
                        q = c // coeff
                        if q:
                            changed = True
                            for h, e in prow.items():
                                other[h] = other.get(h, 0) - q * e
                                if not other[h]:
                                    del other[h]
                rows[:] = [r for r in rows if r and r is not prow]
                if not changed:
                    self.residual.append(prow)
                else:
                    rows.append(prow)

    def resolve(self, gen: Name) -> dict[Name, int]:
        """Express an ambient generator in the surviving basis."""
        if gen not in self.expr:
            return {gen: 1}
        cached = self._resolved.get(gen)
        if cached is not None:
            return cached
        out: dict[Name, int] = {}
        for h, c in self.expr[gen].items():
            for k, e in self.resolve(h).items():
                out[k] = out.get(k, 0) + c * e
                if not out[k]:
                    del out[k]
        self._resolved[gen] = out
        return out

    def _project_row(self, row: dict[Name, int]) -> dict[Name, int]:
        out: dict[Name, int] = {}
        for name, coeff in row.items():
            for k, e in self.resolve(name).items():
                out[k] = out.get(k, 0) + coeff * e
                if not out[k]:
                    del out[k]
        return out


def _diagonal_divisors(rows: list[dict[Name, int]]) -> list[int]:
    """Diagonalize a small integer matrix by unimodular row/column operations.

    Any diagonal form reached this way presents the same quotient group, so
    the absolute diagonal entries detect torsion without needing the
    divisibility-ordered Smith chain.
    """
    cols = sorted({g for row in rows for g in row}, key=name_key)
    mat = [[row.get(g, 0) for g in cols] for row in rows]
    nrows, ncols = len(mat), len(cols)
    divisors: list[int] = []
    t = 0
    while t < nrows and t < ncols:
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if mat[i][j] and (best is None or abs(mat[i][j]) < abs(mat[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        mat[t], mat[bi] = mat[bi], mat[t]
        if bj != t:
            for row in mat:
                row[t], row[bj] = row[bj], row[t]
        p = mat[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            q = mat[i][t] // p
            if q:
                for j in range(ncols):
                    mat[i][j] -= q * mat[t][j]
            if mat[i][t]:
                dirty = True
        for j in range(t + 1, ncols):
            q = mat[t][j] // p
            if q:
                for row in mat:
                    row[j] -= q * row[t]
            if mat[t][j]:
                dirty = True
        if dirty:
            continue
        divisors.append(abs(p))
        t += 1
    return divisors


def quotient_by_relations(
    ambient: BasedComplex, relations: list[Chain]
) -> tuple[Optional[BasedComplex], Optional[ComplexMap], Optional[tuple[int, int]], Optional[str]]:
    """Quotient a based complex by homogeneous relations spanning a subcomplex.

    Returns ``(complex, projection, torsion_witness, reason)``; the first two
    are ``None`` exactly when the quotient is not based.
    """
    by_degree: dict[int, list[dict[Name, int]]] = {}
    for rel in relations:
        if not rel.is_zero():
            by_degree.setdefault(rel.degree, []).append(dict(rel.items()))
    eliminators: dict[int, _Eliminator] = {}
    for degree in sorted(by_degree):
        elim = _Eliminator(by_degree[degree])
        failure = elim.run()
        if failure is not None:
            divisor, kind = failure
            witness = (degree, divisor) if kind == "torsion" else None
            return None, None, witness, f"degree {degree}: {kind} quotient"
        eliminators[degree] = elim

    eliminated = {g for e in eliminators.values() for g in e.expr}

    def project(chain: Chain) -> Chain:
        elim = eliminators.get(chain.degree)
        if elim is None:
            return chain
        out: dict[Name, int] = {}
        for name, coeff in chain.items():
            for k, e in elim.resolve(name).items():
                out[k] = out.get(k, 0) + coeff * e
        return Chain(chain.degree, out)

    degrees: dict[int, list[Name]] = {}
    diff: dict[Name, Chain] = {}
    aug: dict[Name, int] = {}
    for degree, g in ambient.all_generators():
        if g in eliminated:
            continue
        degrees.setdefault(degree, []).append(g)
        if degree:
            diff[g] = project(ambient.diff[g])
        else:
            aug[g] = ambient.aug[g]
    quotient = BasedComplex(degrees, diff, aug)
    projection = ComplexMap(
        ambient,
        quotient,
        {g: project(chain_of(deg, g)) for deg, g in ambient.all_generators()},
    )
    return quotient, projection, None, None


def pushout(f: ComplexMap, g: ComplexMap) -> PushoutResult:
    """Pushout of the span ``target(f) <- source -> target(g)``."""
    if f.source != g.source:
        raise CompositionError("pushout legs must share a source", code="SOURCE_MISMATCH")
    ambient = direct_sum(f.target, g.target)
    relations = []
    for deg, c in f.source.all_generators():
        left = Chain(deg, {("l", n): v for n, v in f.of_gen(c).items()})
        right = Chain(deg, {("r", n): v for n, v in g.of_gen(c).items()})
        relations.append(left - right)
    quotient, projection, witness, reason = quotient_by_relations(ambient, relations)
    if quotient is None or projection is None:
        return PushoutResult(None, None, None, False, witness, reason)
    leg_a = ComplexMap(
        f.target,
        quotient,
        {a: projection.of_gen(("l", a)) for _, a in f.target.all_generators()},
    )
    leg_b = ComplexMap(
        g.target,
        quotient,
        {b: projection.of_gen(("r", b)) for _, b in g.target.all_generators()},
    )
    return PushoutResult(quotient, leg_a, leg_b, True)


def coequalizer(f: ComplexMap, g: ComplexMap) -> PushoutResult:
    """Coequalizer of a parallel pair; both legs are the projection."""
    if f.source != g.source or f.target != g.target:
        raise CompositionError("coequalizer needs a parallel pair of maps")
    relations = [
        f.of_gen(c) - g.of_gen(c) for _, c in f.source.all_generators()
    ]
    quotient, projection, witness, reason = quotient_by_relations(f.target, relations)
    if quotient is None or projection is None:
        return PushoutResult(None, None, None, False, witness, reason)
    return PushoutResult(quotient, projection, projection, True)


def induced_from_pushout(
    result: PushoutResult, u: ComplexMap, v: ComplexMap
) -> ComplexMap:
    """Factor a commuting cocone ``(u, v)`` through a based pushout."""
    quotient = result.require_based()
    assignment: dict[Name, Chain] = {}
    for _, g in quotient.all_generators():
        if g[0] == "l":
            assignment[g] = u.of_gen(g[1])
        else:
            assignment[g] = v.of_gen(g[1])
    return ComplexMap(quotient, u.target, assignment)


def induced_from_coequalizer(result: PushoutResult, w: ComplexMap) -> ComplexMap:
    """Factor a coequalizing map ``w`` through a based coequalizer."""
    quotient = result.require_based()
    return ComplexMap(
        quotient,
        w.target,
        {g: w.of_gen(g) for _, g in quotient.all_generators()},
    )
