"""Basis-theoretic analysis: differential splitting, atoms, unitality, the
generation preorder, strong loop-freeness, and the combined verdict.

The differential splits as ``d = plus - minus`` after cancellation; atoms
descend through these parts; the preorder is generated by "occurs in the
negative boundary of" and "the positive boundary contains", and strong
loop-freeness asks that its closure is antisymmetric.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import CellTable
from .core import (
    BasedComplex,
    Chain,
    CheckItem,
    CheckReport,
    DegreeMismatchError,
    SteinerlabError,
    chain_of,
    report,
    validate_complex,
)
from .names import Name, name_key, render_name


class NegativeEntryError(SteinerlabError):
    code = "NEGATIVE_ENTRY"


def pos_neg_parts(c: BasedComplex, x: Chain) -> tuple[Chain, Chain]:
    """Split ``d(x)`` as (positive part, negated negative part).

    Cancellation inside ``d(x)`` happens before the split; the parts satisfy
    ``d(x) = plus - minus`` with both sides non-negative.
    """
    if x.degree == 0:
        raise DegreeMismatchError("no parts in degree 0", code="DEGREE_ZERO")
    dx = c.d(x)
    plus = Chain(x.degree - 1, {n: v for n, v in dx.items() if v > 0})
    minus = Chain(x.degree - 1, {n: -v for n, v in dx.items() if v < 0})
    return plus, minus


def atom_table(c: BasedComplex, b: Name) -> CellTable:
    """The canonical cell of a generator: equal top entries, descending
    through positive/negative parts of the whole chain at each level."""
    n = c.degree_of(b)
    top = chain_of(n, b)
    minus: list[Chain] = [top]
    plus: list[Chain] = [top]
    for k in range(n, 0, -1):
        plus_part, _ = pos_neg_parts(c, plus[0])
        _, minus_part = pos_neg_parts(c, minus[0])
        for entry in (plus_part, minus_part):
            if not entry.is_zero() and not entry.is_nonnegative():
                raise NegativeEntryError(
                    f"atom of {render_name(b)} leaves the natural span at level {k - 1}"
                )
        plus.insert(0, plus_part)
        minus.insert(0, minus_part)
    return CellTable(c, n, tuple(minus), tuple(plus))


def unitality_check(c: BasedComplex) -> CheckReport:
    """Every atom must reach augmentation one at level zero on both sides."""
    witness = None
    for _, b in c.all_generators():
        table = atom_table(c, b)
        if c.eps(table.minus[0]) != 1 or c.eps(table.plus[0]) != 1:
            witness = render_name(b)
            break
    return report(CheckItem("UNITALITY", witness is None, witness))


@dataclass(frozen=True)
class PreorderRelation:
    """Generating edges of the preorder on the basis of one complex."""

    elements: tuple[Name, ...]
    edges: tuple[tuple[Name, Name], ...]

    def successors(self) -> dict[Name, list[Name]]:
        out: dict[Name, list[Name]] = {e: [] for e in self.elements}
        for a, b in self.edges:
            out[a].append(b)
        return out


def preorder(c: BasedComplex) -> PreorderRelation:
    """Generated by: x below g for x in the negative part of d(g), and g
    below y for y in the positive part."""
    elements = tuple(g for _, g in c.all_generators())
    edges: list[tuple[Name, Name]] = []
    for degree, g in c.all_generators():
        if degree == 0:
            continue
        plus, minus = pos_neg_parts(c, chain_of(degree, g))
        for x in minus.support():
            edges.append((x, g))
        for y in plus.support():
            edges.append((g, y))
    return PreorderRelation(elements, tuple(edges))


def is_strongly_loopfree(c: BasedComplex) -> CheckReport:
    """Antisymmetry of the generated preorder: no directed cycle through two
    or more distinct generators.  The witness is a cycle on failure; a linear
    extension is attached on success."""
    rel = preorder(c)
    succ = rel.successors()
    indegree = {e: 0 for e in rel.elements}
    for a, b in rel.edges:
        if a != b:
            indegree[b] += 1
    ready = sorted((e for e, d in indegree.items() if d == 0), key=name_key)
    order: list[Name] = []
    while ready:
        node = ready.pop(0)
        order.append(node)
        changed = []
        for nxt in succ[node]:
            if nxt == node:
                continue
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                changed.append(nxt)
        if changed:
            ready = sorted(ready + changed, key=name_key)
    if len(order) == len(rel.elements):
        extension = " < ".join(render_name(g) for g in order[:6])
        more = "" if len(order) <= 6 else " < ..."
        return report(
            CheckItem("STRONGLY_LOOPFREE", True, extension + more if order else None)
        )
    remaining = {e for e in rel.elements if indegree[e] > 0}
    pred: dict[Name, list[Name]] = {e: [] for e in remaining}
    for a, b in rel.edges:
        if a != b and a in remaining and b in remaining:
            pred[b].append(a)
    seen: list[Name] = []
    node = min(remaining, key=name_key)
    while node not in seen:
        seen.append(node)
        node = min(pred[node], key=name_key)
    cycle = [node] + list(reversed(seen[seen.index(node) + 1 :])) + [node]
    witness = " <= ".join(render_name(g) for g in cycle)
    return report(CheckItem("STRONGLY_LOOPFREE", False, witness))


def is_steiner(c: BasedComplex) -> CheckReport:
    """Conjunction: valid complex, all atoms natural, unital, loop-free."""
    base = validate_complex(c)
    atoms_witness = None
    if base.passed:
        try:
            for _, b in c.all_generators():
                atom_table(c, b)
        except NegativeEntryError as exc:
            atoms_witness = str(exc)
        atoms = report(CheckItem("ATOMS_NATURAL", atoms_witness is None, atoms_witness))
        rest = unitality_check(c).merged(is_strongly_loopfree(c))
        return base.merged(atoms).merged(rest)
    return base
