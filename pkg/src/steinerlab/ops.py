"""Algebraic operations on based complexes.

Gray tensor product, join and antijoin, suspension and antisuspension, the
op/co/coop sign involutions with their coherence isomorphisms, and the
quotient maps relating tensor, join, and suspension.

Sign conventions, fixed once for the whole library:

* the interval has ``d(i) = 1 - 0``;
* the tensor differential is ``d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy``;
* in the join pushout the ``{0}`` end of the middle interval projects to the
  left factor and the ``{1}`` end to the right factor, which calibrates the
  join so that iterated joins of the point carry the alternating-face-sum
  differential, and the suspension so that ``d(S x) = eps(x)(top - bottom)``
  on vertices.
"""

from __future__ import annotations

from .basic import interval, two_points, unit
from .colimits import NonBasedPushoutError, PushoutResult, pushout
from .core import (
    BasedComplex,
    Chain,
    ComplexMap,
    chain_of,
    compose,
    direct_sum,
)
from .names import Name

# -- Gray tensor product -----------------------------------------------------


def gray_tensor(a: BasedComplex, b: BasedComplex) -> BasedComplex:
    """Tensor product with Koszul-signed differential and pair-named basis."""
    degrees: dict[int, list[Name]] = {}
    diff: dict[Name, Chain] = {}
    aug: dict[Name, int] = {}
    for da, x in a.all_generators():
        for db, y in b.all_generators():
            name = ("t", x, y)
            degree = da + db
            degrees.setdefault(degree, []).append(name)
            if degree == 0:
                aug[name] = a.aug[x] * b.aug[y]
            else:
                terms: dict[Name, int] = {}
                if da:
                    for xp, c in a.diff[x].items():
                        terms[("t", xp, y)] = c
                if db:
                    sign = -1 if da % 2 else 1
                    for yp, c in b.diff[y].items():
                        key = ("t", x, yp)
                        terms[key] = terms.get(key, 0) + sign * c
                diff[name] = Chain(degree - 1, terms)
    return BasedComplex(degrees, diff, aug)


def gray_tensor_map(f: ComplexMap, g: ComplexMap) -> ComplexMap:
    """Functoriality: ``(f (x) g)(x (x) y) = f(x) (x) g(y)``, bilinearly."""
    source = gray_tensor(f.source, g.source)
    target = gray_tensor(f.target, g.target)
    assignment: dict[Name, Chain] = {}
    for degree, gen in source.all_generators():
        _, x, y = gen
        terms: dict[Name, int] = {}
        for xp, c in f.of_gen(x).items():
            for yp, e in g.of_gen(y).items():
                key = ("t", xp, yp)
                terms[key] = terms.get(key, 0) + c * e
        assignment[gen] = Chain(degree, terms)
    return ComplexMap(source, target, assignment)


# -- duality involutions ------------------------------------------------------


def _rescaled(a: BasedComplex, sign_of_degree) -> BasedComplex:
    diff = {
        g: sign_of_degree(chain.degree + 1) * chain for g, chain in a.diff.items()
    }
    return BasedComplex(a.degrees, diff, a.aug)


def dual_op(a: BasedComplex) -> BasedComplex:
    """Rescale the degree-n differential by (-1)^n (reverse odd cells)."""
    return _rescaled(a, lambda n: -1 if n % 2 else 1)


def dual_co(a: BasedComplex) -> BasedComplex:
    """Rescale the degree-n differential by (-1)^(n+1) (reverse even cells)."""
    return _rescaled(a, lambda n: 1 if n % 2 else -1)


def dual_coop(a: BasedComplex) -> BasedComplex:
    """Negate every differential (reverse all cells)."""
    return _rescaled(a, lambda n: -1)


def _dual_of_map(f: ComplexMap, dual) -> ComplexMap:
    """The same assignment viewed between dualized complexes."""
    return ComplexMap(dual(f.source), dual(f.target), f.assignment)


def dual_op_map(f: ComplexMap) -> ComplexMap:
    return _dual_of_map(f, dual_op)


def dual_co_map(f: ComplexMap) -> ComplexMap:
    return _dual_of_map(f, dual_co)


def swap_iso_op(a: BasedComplex, b: BasedComplex) -> ComplexMap:
    """The isomorphism ``a^op (x) b^op -> (b (x) a)^op`` on basis pairs."""
    source = gray_tensor(dual_op(a), dual_op(b))
    target = dual_op(gray_tensor(b, a))
    return ComplexMap(
        source,
        target,
        {
            gen: chain_of(deg, ("t", gen[2], gen[1]))
            for deg, gen in source.all_generators()
        },
    )


def swap_iso_co(a: BasedComplex, b: BasedComplex) -> ComplexMap:
    """The isomorphism ``a^co (x) b^co -> (b (x) a)^co`` on basis pairs."""
    source = gray_tensor(dual_co(a), dual_co(b))
    target = dual_co(gray_tensor(b, a))
    return ComplexMap(
        source,
        target,
        {
            gen: chain_of(deg, ("t", gen[2], gen[1]))
            for deg, gen in source.all_generators()
        },
    )


def cube_selfduality(n: int, which: str) -> ComplexMap:
    """Explicit iso ``cube(n) -> cube(n)^op`` (or ``^co``).

    The op iso composes the factor-swap isomorphisms with the vertex swap of
    the interval, which on cube words is letter reversal plus a 0/1 flip; the
    co iso uses the identity of the interval, leaving plain reversal.
    """
    from .shapes import cube  # local import: shapes builds on ops

    if which not in ("op", "co"):
        raise ValueError(f"which must be 'op' or 'co', got {which!r}")
    source = cube(n)
    dual = dual_op(source) if which == "op" else dual_co(source)
    flip = {"0": "1", "1": "0", "i": "i"} if which == "op" else None

    def transform(word: str) -> str:
        out = word[::-1]
        if flip:
            out = "".join(flip[ch] for ch in out)
        return out

    assignment = {
        gen: chain_of(deg, (transform(gen[0]),) if n else gen)
        for deg, gen in source.all_generators()
    }
    return ComplexMap(source, dual, assignment)


# -- join, suspension, and their duals ----------------------------------------


def _tensor3(a: BasedComplex, mid: BasedComplex, b: BasedComplex) -> BasedComplex:
    return gray_tensor(gray_tensor(a, mid), b)


def join_pushout(a: BasedComplex, b: BasedComplex) -> PushoutResult:
    """The defining pushout of the join, with raw (un-renamed) names."""
    cyl = _tensor3(a, interval(), b)
    ends = _tensor3(a, two_points(), b)
    include = ComplexMap(
        ends,
        cyl,
        {g: chain_of(deg, g) for deg, g in ends.all_generators()},
    )
    sides = direct_sum(a, b)
    assignment: dict[Name, Chain] = {}
    for deg, gen in ends.all_generators():
        _, pair, y = gen
        _, x, end = pair
        if end == ("0",):
            if b.degree_of(y) == 0:
                assignment[gen] = Chain(deg, {("l", x): b.aug[y]})
            else:
                assignment[gen] = Chain(deg)
        else:
            if a.degree_of(x) == 0:
                assignment[gen] = Chain(deg, {("r", y): a.aug[x]})
            else:
                assignment[gen] = Chain(deg)
    collapse = ComplexMap(ends, sides, assignment)
    return pushout(include, collapse)


def join(a: BasedComplex, b: BasedComplex) -> BasedComplex:
    """Join, computed by its defining pushout and renamed to the canonical
    three-part basis ``jl.x`` | ``j.x.y`` | ``jr.y``."""
    result = join_pushout(a, b)
    quotient = result.require_based()
    assert result.leg_a is not None and result.leg_b is not None
    table: dict[Name, Name] = {}

    def claim(chain: Chain, new_name: Name) -> None:
        items = chain.items()
        if len(items) != 1 or items[0][1] != 1:
            raise NonBasedPushoutError("join pushout leg is not a basis inclusion")
        old = items[0][0]
        if old in table:
            raise NonBasedPushoutError("join pushout basis parts overlap")
        table[old] = new_name

    for _, x in a.all_generators():
        claim(result.leg_b.of_gen(("l", x)), ("jl", x))
    for _, y in b.all_generators():
        claim(result.leg_b.of_gen(("r", y)), ("jr", y))
    for _, x in a.all_generators():
        for _, y in b.all_generators():
            claim(result.leg_a.of_gen(("t", ("t", x, ("i",)), y)), ("j", x, y))
    if len(table) != quotient.size:
        raise NonBasedPushoutError("join pushout basis is not three-part")
    return quotient.renamed(lambda g: table[g])


def antijoin(a: BasedComplex, b: BasedComplex) -> BasedComplex:
    """The co-dual join: ``(a^co * b^co)^co``."""
    return dual_co(join(dual_co(a), dual_co(b)))


def join_swap_iso_op(a: BasedComplex, b: BasedComplex) -> ComplexMap:
    """The isomorphism ``a^op * b^op -> (b * a)^op`` exchanging the two
    outer parts and swapping the joined pairs."""
    source = join(dual_op(a), dual_op(b))
    target = dual_op(join(b, a))

    def swap(g: Name) -> Name:
        if g[0] == "jl":
            return ("jr", g[1])
        if g[0] == "jr":
            return ("jl", g[1])
        return ("j", g[2], g[1])

    return ComplexMap(
        source,
        target,
        {gen: chain_of(deg, swap(gen)) for deg, gen in source.all_generators()},
    )


def suspension(a: BasedComplex) -> BasedComplex:
    """Shift ``a`` up one degree over two new poles ``b0``, ``b1``.

    ``d(s.x) = s.(dx)`` in degrees above one and ``eps(x) * (b1 - b0)`` on
    shifted vertices; this is the closed form of the quotient of the cylinder
    that collapses each end to a pole.
    """
    degrees: dict[int, list[Name]] = {0: [("b0",), ("b1",)]}
    diff: dict[Name, Chain] = {}
    aug = {("b0",): 1, ("b1",): 1}
    for deg, x in a.all_generators():
        name = ("s", x)
        degrees.setdefault(deg + 1, []).append(name)
        if deg == 0:
            diff[name] = Chain(0, {("b1",): a.aug[x], ("b0",): -a.aug[x]})
        else:
            diff[name] = Chain(deg, {("s", xp): c for xp, c in a.diff[x].items()})
    return BasedComplex(degrees, diff, aug)


def suspension_map(f: ComplexMap) -> ComplexMap:
    """Functoriality of the suspension: fix the poles, shift the assignment."""
    source = suspension(f.source)
    target = suspension(f.target)
    assignment: dict[Name, Chain] = {
        ("b0",): chain_of(0, ("b0",)),
        ("b1",): chain_of(0, ("b1",)),
    }
    for deg, x in f.source.all_generators():
        assignment[("s", x)] = Chain(
            deg + 1, {("s", y): c for y, c in f.of_gen(x).items()}
        )
    return ComplexMap(source, target, assignment)


def suspension_pushout(a: BasedComplex) -> PushoutResult:
    """The defining pushout of the suspension (used as an oracle)."""
    cyl = gray_tensor(a, interval())
    ends = gray_tensor(a, two_points())
    include = ComplexMap(
        ends, cyl, {g: chain_of(deg, g) for deg, g in ends.all_generators()}
    )
    poles = two_points()
    assignment: dict[Name, Chain] = {}
    for deg, gen in ends.all_generators():
        _, x, end = gen
        if a.degree_of(x) == 0:
            pole = ("0",) if end == ("0",) else ("1",)
            assignment[gen] = Chain(0, {pole: a.aug[x]})
        else:
            assignment[gen] = Chain(deg)
    collapse = ComplexMap(ends, poles, assignment)
    return pushout(include, collapse)


def antisuspension(a: BasedComplex) -> BasedComplex:
    """The co-dual suspension ``S(a^co)^co``; differs from the suspension by
    a sign on differentials in degrees above one."""
    return dual_co(suspension(dual_co(a)))


def antisuspension_pushout(a: BasedComplex) -> PushoutResult:
    """The left-cylinder pushout presenting the antisuspension (the oracle
    for the mirror-image bicone presentation)."""
    cyl = gray_tensor(interval(), a)
    ends = gray_tensor(two_points(), a)
    include = ComplexMap(
        ends, cyl, {g: chain_of(deg, g) for deg, g in ends.all_generators()}
    )
    poles = two_points()
    assignment: dict[Name, Chain] = {}
    for deg, gen in ends.all_generators():
        _, end, x = gen
        if a.degree_of(x) == 0:
            assignment[gen] = Chain(0, {end: a.aug[x]})
        else:
            assignment[gen] = Chain(deg)
    collapse = ComplexMap(ends, poles, assignment)
    return pushout(include, collapse)


def susp_coop_iso(a: BasedComplex) -> ComplexMap:
    """The identity of the underlying graded group as an isomorphism from the
    suspension of ``a`` to the antisuspension of ``a^coop``."""
    source = suspension(a)
    target = antisuspension(dual_coop(a))
    return ComplexMap(
        source,
        target,
        {g: chain_of(deg, g) for deg, g in source.all_generators()},
    )


# -- quotient maps between tensor, join, and suspension ------------------------


def p_map(a: BasedComplex) -> ComplexMap:
    """The quotient ``a (x) interval -> join(a, unit)`` collapsing the 1 end."""
    source = gray_tensor(a, interval())
    target = join(a, unit())
    assignment: dict[Name, Chain] = {}
    for deg, gen in source.all_generators():
        _, x, v = gen
        if v == ("i",):
            assignment[gen] = chain_of(deg, ("j", x, ("u",)))
        elif v == ("0",):
            assignment[gen] = chain_of(deg, ("jl", x))
        else:
            if a.degree_of(x) == 0:
                assignment[gen] = Chain(0, {("jr", ("u",)): a.aug[x]})
            else:
                assignment[gen] = Chain(deg)
    return ComplexMap(source, target, assignment)


def ell_map(a: BasedComplex) -> ComplexMap:
    """The quotient ``join(a, unit) -> suspension(a)`` collapsing the left
    part to the bottom pole."""
    source = join(a, unit())
    target = suspension(a)
    assignment: dict[Name, Chain] = {}
    for deg, gen in source.all_generators():
        if gen[0] == "jl":
            x = gen[1]
            if a.degree_of(x) == 0:
                assignment[gen] = Chain(0, {("b0",): a.aug[x]})
            else:
                assignment[gen] = Chain(deg)
        elif gen[0] == "jr":
            assignment[gen] = chain_of(0, ("b1",))
        else:
            assignment[gen] = chain_of(deg, ("s", gen[1]))
    return ComplexMap(source, target, assignment)


def q_susp_map(a: BasedComplex) -> ComplexMap:
    """The composite quotient ``a (x) interval -> suspension(a)``."""
    return compose(p_map(a), ell_map(a))


def left_p_map(a: BasedComplex) -> ComplexMap:
    """The quotient ``interval (x) a -> join(unit, a)`` collapsing the 0 end."""
    source = gray_tensor(interval(), a)
    target = join(unit(), a)
    assignment: dict[Name, Chain] = {}
    for deg, gen in source.all_generators():
        _, v, y = gen
        if v == ("i",):
            assignment[gen] = chain_of(deg, ("j", ("u",), y))
        elif v == ("1",):
            assignment[gen] = chain_of(deg, ("jr", y))
        else:
            if a.degree_of(y) == 0:
                assignment[gen] = Chain(0, {("jl", ("u",)): a.aug[y]})
            else:
                assignment[gen] = Chain(deg)
    return ComplexMap(source, target, assignment)
