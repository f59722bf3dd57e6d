"""The generator families: disks, cubes, orientals, antiorientals, thetas.

Cubes carry word names over the letters ``0``, ``1``, ``i`` (one letter per
tensor factor, ``i`` marking an interval direction); orientals carry vertex
subset names.  Both families come with an independent second construction
(iterated tensor, iterated join) used as a cross-check oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .basic import interval, unit, zero
from .colimits import (
    coequalizer,
    induced_from_coequalizer,
    induced_from_pushout,
    pushout,
)
from .core import (
    BasedComplex,
    Chain,
    CheckItem,
    CheckReport,
    ComplexMap,
    MalformedError,
    SteinerlabError,
    chain_of,
    compose,
    equal_presentation,
    identity_map,
    invert_basis_bijection,
    report,
    validate_complex,
    validate_map,
)
from .names import Name
from .ops import dual_co, join, suspension
from .steiner import atom_table

__all__ = [
    "unit",
    "zero",
    "interval",
    "disk",
    "boundary_disk",
    "cube",
    "oriental",
    "oriental_via_join",
    "antioriental",
    "disk_inclusion",
    "ThetaSpec",
    "theta",
    "wedge",
    "wedge_with_legs",
    "truncate_top",
    "boundary_decomposition_check",
    "top_cell_decomposition_check",
    "shape_library",
    "random_theta_spec",
]


class BadDimsError(SteinerlabError):
    code = "BAD_DIMS"


class BadBasepointError(SteinerlabError):
    code = "BAD_BASEPOINT"


class EmptyComplexError(SteinerlabError):
    code = "EMPTY"


# -- disks ---------------------------------------------------------------


def disk_side_gen(k: int, side: str) -> Name:
    """The degree-k source/target generator shared by all disks above k."""
    name: Name = ("b0",) if side == "source" else ("b1",)
    for _ in range(k):
        name = ("s", name)
    return name


def disk_top_gen(n: int) -> Name:
    name: Name = ("u",)
    for _ in range(n):
        name = ("s", name)
    return name


@lru_cache(maxsize=None)
def disk(n: int) -> BasedComplex:
    """The n-disk: one generator on top, a source/target pair below."""
    if n < 0:
        raise BadDimsError(f"disk dimension must be >= 0, got {n}")
    if n == 0:
        return unit()
    return suspension(disk(n - 1))


@lru_cache(maxsize=None)
def boundary_disk(n: int) -> BasedComplex:
    """The boundary of the n-disk: the iterated suspension of the empty
    complex, with a source/target pair in degrees below n."""
    if n < 0:
        raise BadDimsError(f"disk dimension must be >= 0, got {n}")
    if n == 0:
        return zero()
    return suspension(boundary_disk(n - 1))


def disk_inclusion(j: int, i: int, side: str) -> ComplexMap:
    """Include the j-disk onto the indicated side generator of the i-disk."""
    if side not in ("source", "target"):
        raise BadDimsError(f"side must be 'source' or 'target', got {side!r}")
    if not (0 <= j <= i):
        raise BadDimsError(f"need 0 <= j <= i, got j={j}, i={i}")
    src = disk(j)
    if j == i:
        return identity_map(src)
    assignment: dict[Name, Chain] = {
        g: chain_of(deg, g) for deg, g in src.all_generators()
    }
    assignment[disk_top_gen(j)] = chain_of(j, disk_side_gen(j, side))
    return ComplexMap(src, disk(i), assignment)


# -- cubes ----------------------------------------------------------------


@lru_cache(maxsize=None)
def cube(n: int) -> BasedComplex:
    """The oriented n-cube with word basis; degree = number of ``i`` letters.

    The differential replaces each ``i`` in turn by ``1`` minus ``0``, with
    the sign alternating over the ``i`` letters already passed.
    """
    if n < 0:
        raise BadDimsError(f"cube dimension must be >= 0, got {n}")
    if n == 0:
        return unit()
    degrees: dict[int, list[Name]] = {}
    diff: dict[Name, Chain] = {}
    aug: dict[Name, int] = {}
    words = [""]
    for _ in range(n):
        words = [w + ch for w in words for ch in "01i"]
    for w in words:
        degree = w.count("i")
        name: Name = (w,)
        degrees.setdefault(degree, []).append(name)
        if degree == 0:
            aug[name] = 1
        else:
            terms: dict[Name, int] = {}
            sign = 1
            for pos, ch in enumerate(w):
                if ch != "i":
                    continue
                for letter, value in (("1", sign), ("0", -sign)):
                    key: Name = (w[:pos] + letter + w[pos + 1 :],)
                    terms[key] = terms.get(key, 0) + value
                sign = -sign
            diff[name] = Chain(degree - 1, terms)
    return BasedComplex(degrees, diff, aug)


# -- orientals -------------------------------------------------------------


@lru_cache(maxsize=None)
def oriental(n: int) -> BasedComplex:
    """The n-oriental: subsets of {0..n} as basis, alternating face sums."""
    if n < 0:
        raise BadDimsError(f"oriental dimension must be >= 0, got {n}")
    degrees: dict[int, list[Name]] = {}
    diff: dict[Name, Chain] = {}
    aug: dict[Name, int] = {}
    subsets: list[tuple[int, ...]] = [()]
    for v in range(n + 1):
        subsets += [s + (v,) for s in subsets]
    for s in subsets:
        if not s:
            continue
        degree = len(s) - 1
        name: Name = tuple(str(v) for v in s)
        degrees.setdefault(degree, []).append(name)
        if degree == 0:
            aug[name] = 1
        else:
            terms: dict[Name, int] = {}
            for pos in range(len(s)):
                face = name[:pos] + name[pos + 1 :]
                terms[face] = terms.get(face, 0) + (1 if pos % 2 == 0 else -1)
            diff[name] = Chain(degree - 1, terms)
    return BasedComplex(degrees, diff, aug)


@lru_cache(maxsize=None)
def oriental_via_join(n: int) -> BasedComplex:
    """The n-fold join of the point, renamed step by step to vertex subsets.

    Differentials come entirely out of the join pushouts, which makes this
    an independent oracle for :func:`oriental`.
    """
    if n < 0:
        raise BadDimsError(f"oriental dimension must be >= 0, got {n}")
    current = BasedComplex({0: [("0",)]}, {}, {("0",): 1})
    for k in range(1, n + 1):
        joined = join(current, unit())
        new_vertex = str(k)

        def rename(g: Name, v: str = new_vertex) -> Name:
            if g[0] == "jl":
                return g[1]
            if g[0] == "jr":
                return (v,)
            return g[1] + (v,)

        current = joined.renamed(rename)
    return current


@lru_cache(maxsize=None)
def antioriental(n: int) -> BasedComplex:
    """The co-dual of the n-oriental."""
    return dual_co(oriental(n))


# -- thetas and wedges -------------------------------------------------------


@dataclass(frozen=True)
class ThetaSpec:
    """An iterated gluing of disks: ``dims[l]``-disks glued along
    ``glue[l]``-disks, each included on the indicated sides."""

    dims: tuple[int, ...]
    glue: tuple[int, ...] = ()
    sides: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if not self.dims:
            raise BadDimsError("theta spec needs at least one disk")
        if len(self.glue) != len(self.dims) - 1 or len(self.sides) != len(self.glue):
            raise BadDimsError("theta spec length mismatch")
        for pos, j in enumerate(self.glue):
            if j < 0 or j > min(self.dims[pos], self.dims[pos + 1]):
                raise BadDimsError(
                    f"glue dimension {j} exceeds adjacent disks"
                    f" {self.dims[pos]}, {self.dims[pos + 1]}"
                )
        for pair in self.sides:
            if len(pair) != 2 or any(s not in ("source", "target") for s in pair):
                raise BadDimsError(f"bad side pair {pair!r}")

    def is_composable(self) -> bool:
        """True when every gluing is target-into-left, source-into-right,
        which is exactly the globular pasting (suspension/wedge) case."""
        return all(pair == ("target", "source") for pair in self.sides)


def theta(spec: ThetaSpec) -> BasedComplex:
    """Iterated pushout of disks along disk inclusions; always based."""
    current = disk(spec.dims[0])
    incl_last = identity_map(current)
    for pos, j in enumerate(spec.glue):
        side_left, side_right = spec.sides[pos]
        left = compose(disk_inclusion(j, spec.dims[pos], side_left), incl_last)
        right = disk_inclusion(j, spec.dims[pos + 1], side_right)
        result = pushout(left, right)
        current = result.require_based()
        assert result.leg_b is not None
        incl_last = result.leg_b
    return current


def wedge_with_legs(
    a: BasedComplex, marked_a: Name, b: BasedComplex, marked_b: Name
) -> tuple[BasedComplex, ComplexMap, ComplexMap]:
    """Glue two complexes at marked vertices; return the complex and legs.

    Generators are renamed ``wl.x`` / ``wr.y`` with the shared basepoint
    ``w0``.
    """
    for c, p in ((a, marked_a), (b, marked_b)):
        if not c.has_generator(p) or c.degree_of(p) != 0 or c.aug[p] != 1:
            raise BadBasepointError(f"marked generator must be a vertex of augmentation 1")
    point = unit()
    f = ComplexMap(point, a, {("u",): chain_of(0, marked_a)})
    g = ComplexMap(point, b, {("u",): chain_of(0, marked_b)})
    result = pushout(f, g)
    quotient = result.require_based()
    assert result.leg_a is not None and result.leg_b is not None
    table: dict[Name, Name] = {}
    base = result.leg_a.of_gen(marked_a).items()
    assert len(base) == 1 and base[0][1] == 1
    table[base[0][0]] = ("w0",)
    for _, x in a.all_generators():
        if x != marked_a:
            table[("l", x)] = ("wl", x)
    for _, y in b.all_generators():
        if y != marked_b:
            table[("r", y)] = ("wr", y)
    renamed = quotient.renamed(lambda g_: table[g_])
    leg_a = ComplexMap(
        a,
        renamed,
        {
            x: Chain(deg, {table[h]: c for h, c in result.leg_a.of_gen(x).items()})
            for deg, x in a.all_generators()
        },
    )
    leg_b = ComplexMap(
        b,
        renamed,
        {
            y: Chain(deg, {table[h]: c for h, c in result.leg_b.of_gen(y).items()})
            for deg, y in b.all_generators()
        },
    )
    return renamed, leg_a, leg_b


def wedge(
    a: BasedComplex, marked_a: Name, b: BasedComplex, marked_b: Name
) -> BasedComplex:
    """Pushout identifying the two marked vertices."""
    return wedge_with_legs(a, marked_a, b, marked_b)[0]


def truncate_top(c: BasedComplex) -> BasedComplex:
    """Drop the top-degree generators and their differentials."""
    if not c.degrees:
        raise EmptyComplexError("cannot truncate the empty complex")
    top = c.top_degree
    degrees = {deg: gens for deg, gens in c.degrees.items() if deg != top}
    diff = {g: ch for g, ch in c.diff.items() if c.degree_of(g) != top}
    return BasedComplex(degrees, diff, c.aug)


# -- boundary decompositions --------------------------------------------------


def _coproduct(parts: list[tuple[Name, BasedComplex]]) -> BasedComplex:
    """Disjoint union of tagged complexes; names become ``(tag, gen)``."""
    degrees: dict[int, list[Name]] = {}
    diff: dict[Name, Chain] = {}
    aug: dict[Name, int] = {}
    for tag, part in parts:
        for deg, g in part.all_generators():
            name = (tag, g)
            degrees.setdefault(deg, []).append(name)
            if deg == 0:
                aug[name] = part.aug[g]
            else:
                diff[name] = Chain(
                    deg - 1, {(tag, h): c for h, c in part.diff[g].items()}
                )
    return BasedComplex(degrees, diff, aug)


def _word_insert(word: str, pos: int, letter: str) -> str:
    return word[:pos] + letter + word[pos:]


def _cube_word(g: Name) -> str:
    """Cube generator name to word; the 0-cube point is the empty word."""
    return "" if g == ("u",) else g[0]


def _subset_skip(name: Name, skip: int) -> Name:
    """Apply the order injection omitting ``skip`` to a vertex subset."""
    return tuple(str(int(v) if int(v) < skip else int(v) + 1) for v in name)


def _decomposition_data(family: str, n: int):
    """The parallel pair over coproducts of faces, plus the comparison cocone."""
    if family == "cube":
        shape = cube(n)
        faces = [
            ((str(i), a), cube(n - 1)) for i in range(n) for a in ("0", "1")
        ]
        doubles = [
            ((str(i), str(j), a, b), cube(n - 2))
            for i in range(n)
            for j in range(i + 1, n)
            for a in ("0", "1")
            for b in ("0", "1")
        ]

        def into_first(tag, g):
            j, b = int(tag[1]), tag[3]
            return ((tag[0], tag[2]), (_word_insert(_cube_word(g), j - 1, b),))

        def into_second(tag, g):
            i, a = int(tag[0]), tag[2]
            return ((tag[1], tag[3]), (_word_insert(_cube_word(g), i, a),))

        def face_into_shape(tag, g):
            return (_word_insert(_cube_word(g), int(tag[0]), tag[1]),)

    elif family == "oriental":
        shape = oriental(n)
        faces = [((str(i),), oriental(n - 1)) for i in range(n + 1)]
        doubles = [
            ((str(i), str(j)), oriental(n - 2))
            for i in range(n)
            for j in range(i + 1, n + 1)
        ]

        def into_first(tag, g):
            i, j = int(tag[0]), int(tag[1])
            return ((tag[0],), _subset_skip(g, j - 1))

        def into_second(tag, g):
            i, j = int(tag[0]), int(tag[1])
            return ((tag[1],), _subset_skip(g, i))

        def face_into_shape(tag, g):
            return _subset_skip(g, int(tag[0]))

    else:
        raise MalformedError(f"unknown family {family!r}")
    return shape, faces, doubles, into_first, into_second, face_into_shape


def boundary_decomposition_check(family: str, n: int) -> CheckReport:
    """Verify that the boundary of the n-shape is the coequalizer of its
    codimension-2 faces mapping into its codimension-1 faces."""
    if n < 2:
        raise BadDimsError(f"boundary decomposition needs n >= 2, got {n}")
    shape, faces, doubles, into_first, into_second, face_into_shape = (
        _decomposition_data(family, n)
    )
    face_cop = _coproduct([(("f",) + tag, part) for tag, part in faces])
    double_cop = _coproduct([(("e",) + tag, part) for tag, part in doubles])

    def build_parallel(into) -> ComplexMap:
        assignment: dict[Name, Chain] = {}
        for deg, gen in double_cop.all_generators():
            tag, g = gen[0][1:], gen[1]
            face_tag, image = into(tag, g)
            assignment[gen] = chain_of(deg, (("f",) + face_tag, image))
        return ComplexMap(double_cop, face_cop, assignment)

    r = build_parallel(into_first)
    s = build_parallel(into_second)
    result = coequalizer(r, s)
    items: list[CheckItem] = [
        CheckItem(
            f"{family}:{n}:COLIMIT_BASED",
            result.based,
            result.reason,
        )
    ]
    if not result.based:
        return report(*items)

    boundary = truncate_top(shape)
    cocone = ComplexMap(
        face_cop,
        boundary,
        {
            gen: chain_of(deg, face_into_shape(gen[0][1:], gen[1]))
            for deg, gen in face_cop.all_generators()
        },
    )
    if compose(r, cocone) != compose(s, cocone):
        items.append(CheckItem(f"{family}:{n}:COCONE_COEQUALIZES", False, None))
        return report(*items)
    induced = induced_from_coequalizer(result, cocone)
    try:
        invert_basis_bijection(induced)
        iso_ok = True
    except MalformedError:
        iso_ok = False
    items.append(CheckItem(f"{family}:{n}:INDUCED_ISO", iso_ok, None))
    if iso_ok:
        renamed = result.require_based().renamed(
            lambda g: induced.of_gen(g).items()[0][0]
        )
        items.append(
            CheckItem(
                f"{family}:{n}:EQUALS_TRUNCATION",
                equal_presentation(renamed, boundary) and renamed == boundary,
                None,
            )
        )
    items.append(
        CheckItem(
            f"{family}:{n}:COLIMIT_VALID",
            validate_complex(result.require_based()).passed,
            None,
        )
    )
    return report(*items)


def top_cell_decomposition_check(family: str, n: int) -> CheckReport:
    """Verify that the n-shape is its boundary with one n-disk attached along
    the source/target tower of the unique top cell."""
    if n < 1:
        raise BadDimsError(f"top-cell decomposition needs n >= 1, got {n}")
    if family not in ("cube", "oriental"):
        raise MalformedError(f"unknown family {family!r}")
    shape = cube(n) if family == "cube" else oriental(n)
    tops = shape.generators(n)
    items: list[CheckItem] = [
        CheckItem(f"{family}:{n}:UNIQUE_TOP_CELL", len(tops) == 1, str(len(tops)))
    ]
    if len(tops) != 1:
        return report(*items)
    top = tops[0]
    boundary = truncate_top(shape)
    table = atom_table(shape, top)
    bd = boundary_disk(n)
    attach_assignment: dict[Name, Chain] = {}
    for k in range(n):
        attach_assignment[disk_side_gen(k, "source")] = table.minus[k]
        attach_assignment[disk_side_gen(k, "target")] = table.plus[k]
    attach = ComplexMap(bd, boundary, attach_assignment)
    include = ComplexMap(
        bd, disk(n), {g: chain_of(deg, g) for deg, g in bd.all_generators()}
    )
    items.append(
        CheckItem(f"{family}:{n}:ATTACH_VALID", validate_map(attach).passed, None)
    )
    # The disk side goes first so its generators take the l tag: unit pivots
    # then eliminate the disk copy of the boundary, leaving the shape's own
    # basis plus the attached top cell as survivors.
    result = pushout(include, attach)
    items.append(
        CheckItem(f"{family}:{n}:COLIMIT_BASED", result.based, result.reason)
    )
    if not result.based:
        return report(*items)
    u = ComplexMap(
        boundary,
        shape,
        {g: chain_of(deg, g) for deg, g in boundary.all_generators()},
    )
    v_assignment = dict(attach_assignment)
    v_assignment[disk_top_gen(n)] = chain_of(n, top)
    v = ComplexMap(disk(n), shape, v_assignment)
    induced = induced_from_pushout(result, v, u)
    try:
        invert_basis_bijection(induced)
        iso_ok = True
    except MalformedError:
        iso_ok = False
    items.append(CheckItem(f"{family}:{n}:INDUCED_ISO", iso_ok, None))
    if iso_ok:
        renamed = result.require_based().renamed(
            lambda g: induced.of_gen(g).items()[0][0]
        )
        items.append(
            CheckItem(
                f"{family}:{n}:EQUALS_SHAPE",
                equal_presentation(renamed, shape) and renamed == shape,
                None,
            )
        )
    return report(*items)


# -- library and randomized inputs ---------------------------------------------


def shape_library(big: bool = False) -> dict[str, BasedComplex]:
    """A fixed catalogue of shapes used across the property suites."""
    lib: dict[str, BasedComplex] = {
        "unit": unit(),
        "interval": interval(),
        "disk1": disk(1),
        "disk2": disk(2),
        "disk3": disk(3),
        "boundary_disk2": boundary_disk(2),
        "cube2": cube(2),
        "oriental1": oriental(1),
        "oriental2": oriental(2),
        "oriental3": oriental(3),
        "antioriental2": antioriental(2),
        "susp_oriental2": suspension(oriental(2)),
    }
    if big:
        lib.update(
            {
                "cube3": cube(3),
                "oriental4": oriental(4),
                "theta212": theta(
                    ThetaSpec(
                        (2, 1, 2),
                        (1, 1),
                        (("target", "source"), ("target", "source")),
                    )
                ),
            }
        )
    return lib


def random_theta_spec(
    rng: random.Random, max_dim: int = 3, max_disks: int = 4, composable: bool = False
) -> ThetaSpec:
    """Draw a valid theta spec; ``composable`` restricts the side choices to
    target-into-left, source-into-right."""
    count = rng.randint(1, max_disks)
    dims = tuple(rng.randint(0, max_dim) for _ in range(count))
    glue = tuple(
        rng.randint(0, min(dims[k], dims[k + 1])) for k in range(count - 1)
    )
    if composable:
        sides = tuple(("target", "source") for _ in glue)
    else:
        sides = tuple(
            (rng.choice(("source", "target")), rng.choice(("source", "target")))
            for _ in glue
        )
    return ThetaSpec(dims, glue, sides)
