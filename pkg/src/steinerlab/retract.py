"""Explicit chain-level sections and retractions between cubes, orientals,
suspensions, and wedges.

Everything here is constructive: each operation returns concrete maps whose
defining identities (section/retraction composites, quotient triangles) are
exact integer matrix equations, re-verified by the test battery.  The
recursions memoize by dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .basic import interval, unit
from .core import (
    BasedComplex,
    Chain,
    CheckItem,
    CheckReport,
    ComplexMap,
    SteinerlabError,
    basis_renaming_map,
    chain_of,
    compose,
    identity_map,
    invert_basis_bijection,
    report,
    validate_map,
)
from .names import Name
from .ops import (
    dual_op,
    dual_op_map,
    gray_tensor,
    gray_tensor_map,
    join,
    left_p_map,
    p_map,
    suspension,
    suspension_map,
    swap_iso_op,
)
from .shapes import ThetaSpec, cube, oriental, wedge_with_legs


class UnsupportedSpecError(SteinerlabError):
    code = "UNSUPPORTED_SPEC"


@dataclass(frozen=True)
class RetractionPair:
    """A split inclusion: ``retract`` after ``embed`` is the identity."""

    embed: ComplexMap
    retract: ComplexMap

    def verify(self) -> CheckReport:
        round_trip = compose(self.embed, self.retract) == identity_map(
            self.embed.source
        )
        idem = compose(self.retract, self.embed)
        idem_ok = compose(idem, idem) == idem
        return report(
            CheckItem("EMBED_VALID", validate_map(self.embed).passed),
            CheckItem("RETRACT_VALID", validate_map(self.retract).passed),
            CheckItem("COMPOSITE_IDENTITY", round_trip),
            CheckItem("SPLITTING_IDEMPOTENT", idem_ok),
        )


# -- small renaming isomorphisms ----------------------------------------------


def _cube_word_name(word: str) -> Name:
    return ("u",) if word == "" else (word,)


def _shift_subset(name: Name, offset: int) -> Name:
    return tuple(str(int(v) + offset) for v in name)


def split_last_letter(n: int) -> ComplexMap:
    """Rename ``cube(n)`` as ``cube(n-1) (x) interval``."""
    return basis_renaming_map(
        cube(n),
        gray_tensor(cube(n - 1), interval()),
        lambda g: ("t", _cube_word_name(_word(g)[:-1]), (_word(g)[-1],)),
    )


def split_first_letter(n: int) -> ComplexMap:
    """Rename ``cube(n)`` as ``interval (x) cube(n-1)``."""
    return basis_renaming_map(
        cube(n),
        gray_tensor(interval(), cube(n - 1)),
        lambda g: ("t", (_word(g)[0],), _cube_word_name(_word(g)[1:])),
    )


def merge_pair_words(n: int, first: bool) -> ComplexMap:
    """Inverse renamings of the splits above (``first`` selects the side)."""
    return invert_basis_bijection(
        split_first_letter(n) if first else split_last_letter(n)
    )


def _word(g: Name) -> str:
    return "" if g == ("u",) else g[0]


def right_cone_renaming(n: int) -> ComplexMap:
    """Rename ``join(oriental(n-1), unit)`` as ``oriental(n)``: the new
    vertex becomes ``n``."""

    def rename(g: Name) -> Name:
        if g[0] == "jl":
            return g[1]
        if g[0] == "jr":
            return (str(n),)
        return g[1] + (str(n),)

    return basis_renaming_map(join(oriental(n - 1), unit()), oriental(n), rename)


def left_cone_renaming(n: int) -> ComplexMap:
    """Rename ``join(unit, oriental(n-1))`` as ``oriental(n)``: the new
    vertex becomes ``0`` and old vertices shift up."""

    def rename(g: Name) -> Name:
        if g[0] == "jl":
            return ("0",)
        if g[0] == "jr":
            return _shift_subset(g[1], 1)
        return ("0",) + _shift_subset(g[2], 1)

    return basis_renaming_map(join(unit(), oriental(n - 1)), oriental(n), rename)


def oriental_reversal(n: int) -> ComplexMap:
    """Self-duality of the oriental: vertex reversal onto the op dual."""
    return basis_renaming_map(
        oriental(n),
        dual_op(oriental(n)),
        lambda g: tuple(str(n - int(v)) for v in reversed(g)),
    )


def interval_swap() -> ComplexMap:
    """Self-duality of the interval: the vertex swap onto the op dual."""
    table = {("0",): ("1",), ("1",): ("0",), ("i",): ("i",)}
    return basis_renaming_map(interval(), dual_op(interval()), lambda g: table[g])


# -- the square: quotient and section -----------------------------------------


@lru_cache(maxsize=None)
def q2() -> ComplexMap:
    """The quotient square -> triangle: identity on top, kill the collapsed
    edge ``i1``, merge the vertices ``01`` and ``11`` into vertex ``2``."""
    o2 = oriental(2)
    assignment = {
        ("00",): chain_of(0, ("0",)),
        ("10",): chain_of(0, ("1",)),
        ("01",): chain_of(0, ("2",)),
        ("11",): chain_of(0, ("2",)),
        ("i0",): chain_of(1, ("0", "1")),
        ("0i",): chain_of(1, ("0", "2")),
        ("1i",): chain_of(1, ("1", "2")),
        ("i1",): Chain(1),
        ("ii",): chain_of(2, ("0", "1", "2")),
    }
    return ComplexMap(cube(2), o2, assignment)


@lru_cache(maxsize=None)
def s2() -> ComplexMap:
    """The section of :func:`q2`: the long edge goes to the two-edge path
    through the free corner, the top cells correspond."""
    assignment = {
        ("0",): chain_of(0, ("00",)),
        ("1",): chain_of(0, ("10",)),
        ("2",): chain_of(0, ("11",)),
        ("0", "1"): chain_of(1, ("i0",)),
        ("1", "2"): chain_of(1, ("1i",)),
        ("0", "2"): Chain(1, {("0i",): 1, ("i1",): 1}),
        ("0", "1", "2"): chain_of(2, ("ii",)),
    }
    return ComplexMap(oriental(2), cube(2), assignment)


def h_map(x: BasedComplex) -> ComplexMap:
    """The square's splitting idempotent tensored with ``x``."""
    return gray_tensor_map(compose(q2(), s2()), identity_map(x))


# -- suspension comparison and its section -------------------------------------


def rho_map(a: BasedComplex) -> ComplexMap:
    """The comparison ``interval (x) suspension(a) -> suspension(interval (x) a)``
    collapsing the interval over each pole."""
    source = gray_tensor(interval(), suspension(a))
    target = suspension(gray_tensor(interval(), a))
    assignment: dict[Name, Chain] = {}
    for deg, gen in source.all_generators():
        _, v, z = gen
        if z[0] == "s":
            assignment[gen] = chain_of(deg, ("s", ("t", v, z[1])))
        elif v == ("i",):
            assignment[gen] = Chain(deg)
        else:
            assignment[gen] = chain_of(0, z)
    return ComplexMap(source, target, assignment)


def phi_map(a: BasedComplex) -> ComplexMap:
    """The section of :func:`rho_map`: the identity above degree one, with
    augmentation-weighted corrections along the interval over the poles."""
    source = suspension(gray_tensor(interval(), a))
    target = gray_tensor(interval(), suspension(a))
    assignment: dict[Name, Chain] = {
        ("b0",): chain_of(0, ("t", ("0",), ("b0",))),
        ("b1",): chain_of(0, ("t", ("1",), ("b1",))),
    }
    for deg, gen in source.all_generators():
        if gen[0] != "s":
            continue
        _, v, x = gen[1]
        terms = {("t", v, ("s", x)): 1}
        if a.degree_of(x) == 0 and v != ("i",):
            pole = ("b1",) if v == ("0",) else ("b0",)
            terms[("t", ("i",), pole)] = a.aug[x]
        assignment[gen] = Chain(deg, terms)
    return ComplexMap(source, target, assignment)


# -- sections of the cube quotients --------------------------------------------


def q_cube(n: int) -> ComplexMap:
    """The quotient ``cube(n+1) -> suspension(cube(n))`` along the last
    tensor factor."""
    source = cube(n + 1)
    target = suspension(cube(n))
    assignment: dict[Name, Chain] = {}
    for deg, g in source.all_generators():
        w = _word(g)
        body, last = w[:-1], w[-1]
        if last == "i":
            assignment[g] = chain_of(deg, ("s", _cube_word_name(body)))
        elif "i" in body:
            assignment[g] = Chain(deg)
        else:
            assignment[g] = chain_of(0, ("b0",) if last == "0" else ("b1",))
    return ComplexMap(source, target, assignment)


@lru_cache(maxsize=None)
def section_q_cube(n: int) -> RetractionPair:
    """Section of the cube-to-suspended-cube quotient, by recursion through
    the suspension comparison."""
    if n == 0:
        embed = basis_renaming_map(
            suspension(unit()),
            cube(1),
            lambda g: {("b0",): ("0",), ("b1",): ("1",), ("s", ("u",)): ("i",)}[g],
        )
    else:
        split = suspension_map(split_first_letter(n))
        phi = phi_map(cube(n - 1))
        lift = gray_tensor_map(identity_map(interval()), section_q_cube(n - 1).embed)
        merge = merge_pair_words(n + 1, first=True)
        embed = compose(compose(compose(split, phi), lift), merge)
    return RetractionPair(embed, q_cube(n))


# -- cube-to-oriental comparison ------------------------------------------------


def p_oriental(n: int) -> ComplexMap:
    """The quotient ``oriental(n) (x) interval -> oriental(n+1)``."""
    return compose(p_map(oriental(n)), right_cone_renaming(n + 1))


def left_q_oriental(n: int) -> ComplexMap:
    """The quotient ``interval (x) oriental(n) -> oriental(n+1)`` collapsing
    the 0 end onto the new initial vertex."""
    return compose(left_p_map(oriental(n)), left_cone_renaming(n + 1))


@lru_cache(maxsize=None)
def xi(n: int) -> ComplexMap:
    """The comparison ``cube(n) -> oriental(n)``, inductively the quotient of
    the previous comparison tensored with the interval."""
    if n == 0:
        return basis_renaming_map(cube(0), oriental(0), lambda g: ("0",))
    step = gray_tensor_map(xi(n - 1), identity_map(interval()))
    return compose(compose(split_last_letter(n), step), p_oriental(n - 1))


def e_s_kappa(a: BasedComplex) -> tuple[ComplexMap, ComplexMap]:
    """The splitting idempotent of the cylinder over a cone and the induced
    section of the double-cone quotient.

    Returns ``(e, s)``: ``s`` sections the quotient
    ``interval (x) cone(a) -> cone(cone(a))`` by placing the double apex at
    the 0 end, the base cone at the 1 end, and the joined cell over a base
    cell of ``a`` along the interval direction with a 0-end cone correction;
    ``e`` is the composite idempotent, which collapses the 0 end by
    augmentation onto the apex.
    """
    cone = join(unit(), a)
    cyl = gray_tensor(interval(), cone)
    double = join(unit(), cone)
    apex0 = ("t", ("0",), ("jl", ("u",)))

    def section_of(z: Name, degree: int) -> Chain:
        terms = {("t", ("i",), z): 1}
        if z[0] == "jr":
            terms[("t", ("0",), ("j", ("u",), z[1]))] = 1
        return Chain(degree + 1, terms)

    s_assignment: dict[Name, Chain] = {}
    for deg, gen in double.all_generators():
        if gen[0] == "jl":
            s_assignment[gen] = chain_of(0, apex0)
        elif gen[0] == "jr":
            s_assignment[gen] = chain_of(deg, ("t", ("1",), gen[1]))
        else:
            s_assignment[gen] = section_of(gen[2], deg - 1)
    s = ComplexMap(double, cyl, s_assignment)

    e_assignment: dict[Name, Chain] = {}
    for deg, gen in cyl.all_generators():
        _, v, z = gen
        if v == ("1",):
            e_assignment[gen] = chain_of(deg, gen)
        elif v == ("i",):
            e_assignment[gen] = section_of(z, deg - 1)
        else:
            if deg == 0:
                eps = 1 if z[0] == "jl" else a.aug[z[1]]
                e_assignment[gen] = Chain(0, {apex0: eps})
            else:
                e_assignment[gen] = Chain(deg)
    e = ComplexMap(cyl, cyl, e_assignment)
    return e, s


@lru_cache(maxsize=None)
def section_p_oriental(n: int) -> ComplexMap:
    """A section of :func:`p_oriental`, transported across the op dualities
    from the section of the left-sided quotient."""
    if n == 0:
        table = {
            ("0",): ("t", ("0",), ("0",)),
            ("1",): ("t", ("0",), ("1",)),
            ("0", "1"): ("t", ("0",), ("i",)),
        }
        return basis_renaming_map(
            oriental(1), gray_tensor(oriental(0), interval()), lambda g: table[g]
        )
    _, s = e_s_kappa(oriental(n - 1))
    cone_rename = left_cone_renaming(n)
    double_rename = _double_cone_renaming(n + 1)
    to_tensor = gray_tensor_map(identity_map(interval()), cone_rename)
    s_renamed = compose(compose(invert_basis_bijection(double_rename), s), to_tensor)
    swap = invert_basis_bijection(swap_iso_op(oriental(n), interval()))
    unswap = gray_tensor_map(
        invert_basis_bijection(oriental_reversal(n)),
        invert_basis_bijection(interval_swap()),
    )
    return compose(
        compose(compose(oriental_reversal(n + 1), dual_op_map(s_renamed)), swap),
        unswap,
    )


def _double_cone_renaming(n: int) -> ComplexMap:
    """Rename ``join(unit, join(unit, oriental(n-2)))`` as ``oriental(n)``."""
    inner = left_cone_renaming(n - 1)

    def inner_name(z: Name) -> Name:
        return inner.of_gen(z).items()[0][0]

    def rename(g: Name) -> Name:
        if g[0] == "jl":
            return ("0",)
        if g[0] == "jr":
            return _shift_subset(inner_name(g[1]), 1)
        return ("0",) + _shift_subset(inner_name(g[2]), 1)

    return basis_renaming_map(
        join(unit(), join(unit(), oriental(n - 2))), oriental(n), rename
    )


@lru_cache(maxsize=None)
def section_xi(n: int) -> RetractionPair:
    """Embed the oriental into the cube as a retract of :func:`xi`."""
    if n == 0:
        embed = basis_renaming_map(oriental(0), cube(0), lambda g: ("u",))
    else:
        lift = gray_tensor_map(section_xi(n - 1).embed, identity_map(interval()))
        merge = merge_pair_words(n, first=False)
        embed = compose(compose(section_p_oriental(n - 1), lift), merge)
    return RetractionPair(embed, xi(n))


# -- sections of the oriental suspension quotient -------------------------------


def ell_oriental(n: int) -> ComplexMap:
    """The quotient ``oriental(n+1) -> suspension(oriental(n))`` collapsing
    everything below the last vertex onto the bottom pole."""
    source = oriental(n + 1)
    target = suspension(oriental(n))
    last = str(n + 1)
    assignment: dict[Name, Chain] = {}
    for deg, g in source.all_generators():
        if g[-1] != last:
            assignment[g] = chain_of(0, ("b0",)) if deg == 0 else Chain(deg)
        elif len(g) == 1:
            assignment[g] = chain_of(0, ("b1",))
        else:
            assignment[g] = chain_of(deg, ("s", g[:-1]))
    return ComplexMap(source, target, assignment)


@lru_cache(maxsize=None)
def section_ell(n: int) -> RetractionPair:
    """Section of :func:`ell_oriental` composed out of the cube sections."""
    lift = suspension_map(section_xi(n).embed)
    embed = compose(compose(lift, section_q_cube(n).embed), xi(n + 1))
    return RetractionPair(embed, ell_oriental(n))


# -- wedges of orientals ---------------------------------------------------------


@lru_cache(maxsize=None)
def _oriental_wedge(n: int, m: int):
    return wedge_with_legs(oriental(n), (str(n),), oriental(m), ("0",))


def _wedge_left_name(n: int, g: Name) -> Name:
    return ("w0",) if g == (str(n),) else ("wl", g)


def _wedge_right_name(g: Name) -> Name:
    return ("w0",) if g == ("0",) else ("wr", g)


def zeta(n: int, m: int) -> ComplexMap:
    """The bipointed inclusion of the wedge of two orientals into the big
    oriental: left subsets stay put, right subsets shift."""
    w, _, _ = _oriental_wedge(n, m)
    target = oriental(n + m)
    assignment: dict[Name, Chain] = {}
    for deg, g in w.all_generators():
        if g == ("w0",):
            assignment[g] = chain_of(0, (str(n),))
        elif g[0] == "wl":
            assignment[g] = chain_of(deg, g[1])
        else:
            assignment[g] = chain_of(deg, _shift_subset(g[1], n))
    return ComplexMap(w, target, assignment)


def theta_left_inverse(n: int, m: int) -> ComplexMap:
    """The left inverse of :func:`zeta`.

    A subset on one side of the middle vertex truncates to that side; a
    straddling subset that avoids the middle vertex maps to the closure of
    whichever side is a single vertex (both, for an edge), and everything
    else collapses.
    """
    w, _, _ = _oriental_wedge(n, m)
    source = oriental(n + m)
    assignment: dict[Name, Chain] = {}
    for deg, g in source.all_generators():
        verts = [int(v) for v in g]
        below = [v for v in verts if v < n]
        above = [v for v in verts if v > n]
        has_mid = n in verts
        terms: dict[Name, int] = {}
        if not above:
            terms[_wedge_left_name(n, g)] = 1
        elif not below:
            terms[_wedge_right_name(_shift_subset(g, -n))] = 1
        elif not has_mid:
            if len(above) == 1:
                left = tuple(str(v) for v in below + [n])
                terms[_wedge_left_name(n, left)] = 1
            if len(below) == 1:
                right = tuple(str(v - n) for v in [n] + above)
                terms[_wedge_right_name(right)] = 1
        assignment[g] = Chain(deg, terms)
    return ComplexMap(source, w, assignment)


# -- retracts of theta objects ----------------------------------------------------


def _spec_to_tree(spec: ThetaSpec):
    """Convert a composable gluing spec into a suspension/wedge tree."""
    if not spec.is_composable():
        raise UnsupportedSpecError(
            "theta spec is not a suspension/wedge pasting: every gluing must"
            " be target-into-left, source-into-right"
        )

    def build(dims: tuple[int, ...], glues: tuple[int, ...]):
        if len(dims) == 1:
            tree = ("point",)
            for _ in range(dims[0]):
                tree = ("susp", tree)
            return tree
        mu = min(glues)
        blocks: list[tuple[list[int], list[int]]] = [([dims[0]], [])]
        for pos, j in enumerate(glues):
            if j == mu:
                blocks.append(([dims[pos + 1]], []))
            else:
                blocks[-1][0].append(dims[pos + 1])
                blocks[-1][1].append(j)
        tree = None
        for block_dims, block_glues in blocks:
            sub = build(
                tuple(d - mu for d in block_dims),
                tuple(j - mu for j in block_glues),
            )
            tree = sub if tree is None else ("wedge", tree, sub)
        for _ in range(mu):
            tree = ("susp", tree)
        return tree

    return build(spec.dims, spec.glue)


def _build_retract(tree):
    """Recursively build (complex, left point, right point, embed, retract)."""
    if tree[0] == "point":
        obj = unit()
        embed = basis_renaming_map(obj, oriental(0), lambda g: ("0",))
        retract = invert_basis_bijection(embed)
        return obj, ("u",), ("u",), embed, retract
    if tree[0] == "susp":
        obj, _, _, embed, retract = _build_retract(tree[1])
        n = embed.target.top_degree if embed.target.degrees else 0
        pair = section_ell(n)
        new_embed = compose(suspension_map(embed), pair.embed)
        new_retract = compose(pair.retract, suspension_map(retract))
        return suspension(obj), ("b0",), ("b1",), new_embed, new_retract
    obj1, l1, r1, e1, rt1 = _build_retract(tree[1])
    obj2, l2, r2, e2, rt2 = _build_retract(tree[2])
    n1 = e1.target.top_degree if e1.target.degrees else 0
    n2 = e2.target.top_degree if e2.target.degrees else 0
    w, lam1, lam2 = wedge_with_legs(obj1, r1, obj2, l2)
    wd, mu1, mu2 = _oriental_wedge(n1, n2)

    def one_gen(chain: Chain) -> Name:
        items = chain.items()
        assert len(items) == 1 and items[0][1] == 1
        return items[0][0]

    embed_assignment: dict[Name, Chain] = {}
    for deg, g in w.all_generators():
        if g == ("w0",):
            embed_assignment[g] = mu1(e1.of_gen(r1))
        elif g[0] == "wl":
            embed_assignment[g] = mu1(e1.of_gen(g[1]))
        else:
            embed_assignment[g] = mu2(e2.of_gen(g[1]))
    wedge_embed = ComplexMap(w, wd, embed_assignment)

    retract_assignment: dict[Name, Chain] = {}
    for deg, g in wd.all_generators():
        if g == ("w0",):
            retract_assignment[g] = lam1(rt1.of_gen((str(n1),)))
        elif g[0] == "wl":
            retract_assignment[g] = lam1(rt1.of_gen(g[1]))
        else:
            retract_assignment[g] = lam2(rt2.of_gen(g[1]))
    wedge_retract = ComplexMap(wd, w, retract_assignment)

    new_embed = compose(wedge_embed, zeta(n1, n2))
    new_retract = compose(theta_left_inverse(n1, n2), wedge_retract)
    left = one_gen(lam1(chain_of(0, l1)))
    right = one_gen(lam2(chain_of(0, r2)))
    return w, left, right, new_embed, new_retract


def theta_retract_into_oriental(spec: ThetaSpec) -> RetractionPair:
    """Realize a composable theta spec as a retract of an oriental."""
    tree = _spec_to_tree(spec)
    _, _, _, embed, retract = _build_retract(tree)
    return RetractionPair(embed, retract)
