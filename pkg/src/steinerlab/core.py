"""Based augmented directed complexes over the integers, and their maps.

A :class:`BasedComplex` is a non-negatively graded chain complex of free
abelian groups with a chosen basis in every degree, an integer differential
given per generator, and an augmentation on degree zero.  The positivity
submonoid is always the natural-span of the basis and is never stored.
All coefficients are exact Python integers; nothing wraps or rounds.

Values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Optional

from .names import Name, check_name, name_key, render_name

DEFAULT_MAX_GENERATORS = 100_000


class SteinerlabError(Exception):
    """Base error; ``code`` is the stable machine-readable identifier."""

    code = "ERROR"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class MalformedError(SteinerlabError):
    code = "MALFORMED"


class DegreeMismatchError(SteinerlabError):
    code = "DEGREE_MISMATCH"


class CompositionError(SteinerlabError):
    code = "SOURCE_TARGET_MISMATCH"


class SizeLimitError(SteinerlabError):
    code = "SIZE_LIMIT"


def max_generators() -> int:
    raw = os.environ.get("STEINERLAB_MAX_GENERATORS")
    if raw is None:
        return DEFAULT_MAX_GENERATORS
    try:
        return int(raw)
    except ValueError as exc:
        raise SizeLimitError(f"bad STEINERLAB_MAX_GENERATORS value {raw!r}") from exc


class Chain:
    """Homogeneous integer chain: a degree and a sparse generator->coefficient map.

    Zero coefficients are never stored.  Chains are immutable.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Name, int] | Iterable[tuple[Name, int]] = ()):
        if degree < 0:
            raise MalformedError(f"chain degree must be >= 0, got {degree}")
        data: dict[Name, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for name, coeff in items:
            if not isinstance(coeff, int):
                raise MalformedError(f"non-integer coefficient {coeff!r} on {name!r}")
            if coeff:
                data[name] = data.get(name, 0) + coeff
                if not data[name]:
                    del data[name]
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_coeffs", data)

    def __setattr__(self, *args):  # pragma: no cover - guard
        raise AttributeError("Chain is immutable")

    def items(self) -> list[tuple[Name, int]]:
        return sorted(self._coeffs.items(), key=lambda kv: name_key(kv[0]))

    def coeff(self, name: Name) -> int:
        return self._coeffs.get(name, 0)

    def support(self) -> list[Name]:
        return sorted(self._coeffs, key=name_key)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def __add__(self, other: "Chain") -> "Chain":
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add chains of degree {self.degree} and {other.degree}"
            )
        data = dict(self._coeffs)
        for name, coeff in other._coeffs.items():
            data[name] = data.get(name, 0) + coeff
            if not data[name]:
                del data[name]
        return Chain(self.degree, data)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "Chain":
        if not isinstance(scalar, int):
            return NotImplemented
        if not scalar:
            return Chain(self.degree)
        return Chain(self.degree, {n: scalar * c for n, c in self._coeffs.items()})

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Chain)
            and self.degree == other.degree
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"<0 (deg {self.degree})>"
        terms = " ".join(
            f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{render_name(n)}"
            for n, c in self.items()
        )
        return f"<{terms} (deg {self.degree})>"


def chain_of(degree: int, name: Name, coeff: int = 1) -> Chain:
    return Chain(degree, {name: coeff})


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a verification suite; ``passed`` iff every item passed."""

    checks: tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.checks)

    def failures(self) -> list[CheckItem]:
        return [item for item in self.checks if not item.passed]

    def merged(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.checks + other.checks)

    def lines(self) -> list[str]:
        out = []
        for item in self.checks:
            status = "pass" if item.passed else "FAIL"
            extra = f"  [{item.witness}]" if item.witness and not item.passed else ""
            out.append(f"{status}  {item.name}{extra}")
        return out


def report(*checks: CheckItem) -> CheckReport:
    return CheckReport(tuple(checks))


class BasedComplex:
    """Finitely based augmented directed complex.

    ``degrees`` maps each non-empty degree to its canonically sorted basis,
    ``diff`` gives the differential of every generator of positive degree,
    ``aug`` the augmentation of every degree-zero generator.  Construction
    checks structural well-formedness only; run :func:`validate_complex`
    for the chain-complex axioms.
    """

    __slots__ = ("degrees", "diff", "aug", "_gen_degree")

    def __init__(
        self,
        degrees: Mapping[int, Iterable[Name]],
        diff: Mapping[Name, Chain],
        aug: Mapping[Name, int],
    ):
        deg_map: dict[int, tuple[Name, ...]] = {}
        gen_degree: dict[Name, int] = {}
        total = 0
        for degree in sorted(degrees):
            gens = sorted((check_name(g) for g in degrees[degree]), key=name_key)
            if not gens:
                continue
            if degree < 0:
                raise MalformedError(f"negative degree {degree}")
            for g in gens:
                if g in gen_degree:
                    raise MalformedError(f"duplicate generator {render_name(g)}")
                gen_degree[g] = degree
            deg_map[degree] = tuple(gens)
            total += len(gens)
        if total > max_generators():
            raise SizeLimitError(
                f"complex with {total} generators exceeds STEINERLAB_MAX_GENERATORS"
            )
        diff_map: dict[Name, Chain] = {}
        for g, chain in diff.items():
            degree = gen_degree.get(g)
            if degree is None:
                raise MalformedError(f"differential on unknown generator {render_name(g)}")
            if degree == 0:
                raise MalformedError(f"differential on degree-0 generator {render_name(g)}")
            if chain.degree != degree - 1:
                raise MalformedError(
                    f"differential of {render_name(g)} has degree {chain.degree},"
                    f" expected {degree - 1}"
                )
            for h in chain.support():
                if gen_degree.get(h) != degree - 1:
                    raise MalformedError(
                        f"differential of {render_name(g)} references {render_name(h)}"
                        " at the wrong degree or not at all"
                    )
            diff_map[g] = chain
        for degree, gens in deg_map.items():
            if degree >= 1:
                for g in gens:
                    diff_map.setdefault(g, Chain(degree - 1))
        aug_map: dict[Name, int] = {}
        for g in deg_map.get(0, ()):
            value = aug.get(g)
            if value is None or not isinstance(value, int):
                raise MalformedError(f"missing augmentation for {render_name(g)}")
            aug_map[g] = value
        for g in aug:
            if gen_degree.get(g) != 0:
                raise MalformedError(f"augmentation on non-vertex {render_name(g)}")
        object.__setattr__(self, "degrees", deg_map)
        object.__setattr__(self, "diff", diff_map)
        object.__setattr__(self, "aug", aug_map)
        object.__setattr__(self, "_gen_degree", gen_degree)

    def __setattr__(self, *args):  # pragma: no cover - guard
        raise AttributeError("BasedComplex is immutable")

    # -- queries ---------------------------------------------------------

    def generators(self, degree: int) -> tuple[Name, ...]:
        return self.degrees.get(degree, ())

    def all_generators(self) -> Iterator[tuple[int, Name]]:
        for degree in sorted(self.degrees):
            for g in self.degrees[degree]:
                yield degree, g

    def degree_of(self, name: Name) -> int:
        try:
            return self._gen_degree[name]
        except KeyError:
            raise MalformedError(f"unknown generator {render_name(name)}") from None

    def has_generator(self, name: Name) -> bool:
        return name in self._gen_degree

    @property
    def top_degree(self) -> int:
        if not self.degrees:
            raise MalformedError("empty complex has no top degree", code="EMPTY")
        return max(self.degrees)

    @property
    def size(self) -> int:
        return sum(len(gens) for gens in self.degrees.values())

    def d(self, chain: Chain) -> Chain:
        """Differential, extended linearly; degree-0 chains are rejected."""
        if chain.degree == 0:
            raise DegreeMismatchError("no differential in degree 0", code="DEGREE_ZERO")
        total = Chain(chain.degree - 1)
        for name, coeff in chain.items():
            total = total + coeff * self.diff[name]
        return total

    def eps(self, chain: Chain) -> int:
        if chain.degree != 0:
            raise DegreeMismatchError("augmentation applies to degree-0 chains")
        return sum(coeff * self.aug[name] for name, coeff in chain.items())

    def renamed(self, rename: Callable[[Name], Name]) -> "BasedComplex":
        """Apply a bijective renaming to every generator."""
        table: dict[Name, Name] = {}
        for _, g in self.all_generators():
            table[g] = check_name(rename(g))
        if len(set(table.values())) != len(table):
            raise MalformedError("renaming is not injective")
        degrees = {
            deg: [table[g] for g in gens] for deg, gens in self.degrees.items()
        }
        diff = {
            table[g]: Chain(ch.degree, {table[h]: c for h, c in ch.items()})
            for g, ch in self.diff.items()
        }
        aug = {table[g]: v for g, v in self.aug.items()}
        return BasedComplex(degrees, diff, aug)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, BasedComplex)
            and self.degrees == other.degrees
            and self.diff == other.diff
            and self.aug == other.aug
        )

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.degrees.items())))

    def __repr__(self) -> str:
        counts = ", ".join(f"{d}:{len(g)}" for d, g in sorted(self.degrees.items()))
        return f"<BasedComplex {{{counts}}}>"


class ComplexMap:
    """Degreewise integer map between based complexes, given on generators."""

    __slots__ = ("source", "target", "assignment")

    def __init__(
        self,
        source: BasedComplex,
        target: BasedComplex,
        assignment: Mapping[Name, Chain],
    ):
        asg: dict[Name, Chain] = {}
        for degree, g in source.all_generators():
            chain = assignment.get(g)
            if chain is None:
                raise MalformedError(f"no assignment for generator {render_name(g)}")
            if chain.degree != degree:
                raise DegreeMismatchError(
                    f"assignment of {render_name(g)} has degree {chain.degree},"
                    f" expected {degree}"
                )
            for h in chain.support():
                if not target.has_generator(h) or target.degree_of(h) != degree:
                    raise MalformedError(
                        f"assignment of {render_name(g)} references bad target"
                        f" generator {render_name(h)}"
                    )
            asg[g] = chain
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "assignment", asg)

    def __setattr__(self, *args):  # pragma: no cover - guard
        raise AttributeError("ComplexMap is immutable")

    def __call__(self, chain: Chain) -> Chain:
        total = Chain(chain.degree)
        for name, coeff in chain.items():
            total = total + coeff * self.assignment[name]
        return total

    def of_gen(self, name: Name) -> Chain:
        return self.assignment[name]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ComplexMap)
            and self.source == other.source
            and self.target == other.target
            and self.assignment == other.assignment
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target))

    def __repr__(self) -> str:
        return f"<ComplexMap {self.source!r} -> {self.target!r}>"


# -- operations ------------------------------------------------------------


def validate_complex(c: BasedComplex) -> CheckReport:
    """Check d∘d = 0, ε∘d₁ = 0, and ε ≥ 0 on vertices, with witnesses."""
    d2_witness = None
    for degree in sorted(c.degrees):
        if degree < 2:
            continue
        for g in c.degrees[degree]:
            if not c.d(c.diff[g]).is_zero():
                d2_witness = render_name(g)
                break
        if d2_witness:
            break
    aug_d1_witness = None
    for g in c.generators(1):
        if c.eps(c.diff[g]) != 0:
            aug_d1_witness = render_name(g)
            break
    aug_neg_witness = None
    for g in c.generators(0):
        if c.aug[g] < 0:
            aug_neg_witness = render_name(g)
            break
    return report(
        CheckItem("D2_ZERO", d2_witness is None, d2_witness),
        CheckItem("AUG_KILLS_D1", aug_d1_witness is None, aug_d1_witness),
        CheckItem("AUG_NONNEGATIVE", aug_neg_witness is None, aug_neg_witness),
    )


def validate_map(f: ComplexMap) -> CheckReport:
    """Check the chain rule, augmentation preservation, and positivity."""
    chain_witness = None
    for degree, g in f.source.all_generators():
        if degree == 0:
            continue
        if f(f.source.diff[g]) != f.target.d(f.of_gen(g)):
            chain_witness = render_name(g)
            break
    aug_witness = None
    for g in f.source.generators(0):
        if f.target.eps(f.of_gen(g)) != f.source.aug[g]:
            aug_witness = render_name(g)
            break
    pos_witness = None
    for _, g in f.source.all_generators():
        if not f.of_gen(g).is_nonnegative() and not f.of_gen(g).is_zero():
            pos_witness = render_name(g)
            break
    return report(
        CheckItem("CHAIN_RULE", chain_witness is None, chain_witness),
        CheckItem("AUG_PRESERVED", aug_witness is None, aug_witness),
        CheckItem("POSITIVITY", pos_witness is None, pos_witness),
    )


def identity_map(c: BasedComplex) -> ComplexMap:
    return ComplexMap(
        c, c, {g: chain_of(deg, g) for deg, g in c.all_generators()}
    )


def compose(f: ComplexMap, g: ComplexMap) -> ComplexMap:
    """The composite "first f, then g"; requires target(f) = source(g)."""
    if f.target != g.source:
        raise CompositionError("target of first map differs from source of second")
    return ComplexMap(
        f.source,
        g.target,
        {name: g(chain) for name, chain in f.assignment.items()},
    )


def direct_sum(a: BasedComplex, b: BasedComplex) -> BasedComplex:
    """Degreewise disjoint union with summand-tagged names ``l``/``r``."""
    degrees: dict[int, list[Name]] = {}
    for deg, g in a.all_generators():
        degrees.setdefault(deg, []).append(("l", g))
    for deg, g in b.all_generators():
        degrees.setdefault(deg, []).append(("r", g))
    diff: dict[Name, Chain] = {}
    for g, ch in a.diff.items():
        diff[("l", g)] = Chain(ch.degree, {("l", h): c for h, c in ch.items()})
    for g, ch in b.diff.items():
        diff[("r", g)] = Chain(ch.degree, {("r", h): c for h, c in ch.items()})
    aug: dict[Name, int] = {("l", g): v for g, v in a.aug.items()}
    aug.update({("r", g): v for g, v in b.aug.items()})
    return BasedComplex(degrees, diff, aug)


def graded_counts(c: BasedComplex) -> dict[int, int]:
    return {deg: len(gens) for deg, gens in sorted(c.degrees.items())}


def equal_presentation(a: BasedComplex, b: BasedComplex) -> bool:
    """Equality up to the canonical order-preserving renaming by position."""
    if graded_counts(a) != graded_counts(b):
        return False
    table: dict[Name, Name] = {}
    for deg, gens in a.degrees.items():
        for ga, gb in zip(gens, b.degrees[deg]):
            table[ga] = gb
    for g, ch in a.diff.items():
        if Chain(ch.degree, {table[h]: c for h, c in ch.items()}) != b.diff[table[g]]:
            return False
    return all(b.aug[table[g]] == v for g, v in a.aug.items())


def verify_mutually_inverse(f: ComplexMap, g: ComplexMap) -> CheckReport:
    """Pass iff ``compose(f, g)`` and ``compose(g, f)`` are both identities."""
    if f.source != g.target or f.target != g.source:
        raise CompositionError("maps are not a candidate inverse pair")
    fg_ok = compose(f, g) == identity_map(f.source)
    gf_ok = compose(g, f) == identity_map(g.source)
    return report(
        CheckItem("LEFT_THEN_RIGHT_IS_ID", fg_ok, None if fg_ok else "compose(f,g)"),
        CheckItem("RIGHT_THEN_LEFT_IS_ID", gf_ok, None if gf_ok else "compose(g,f)"),
    )


def invert_basis_bijection(f: ComplexMap) -> ComplexMap:
    """Invert a map that sends each generator to a single generator with
    coefficient one.  Raises if ``f`` is not of that shape or not bijective."""
    table: dict[Name, Name] = {}
    for _, g in f.source.all_generators():
        items = f.of_gen(g).items()
        if len(items) != 1 or items[0][1] != 1:
            raise MalformedError(f"map is not a basis bijection at {render_name(g)}")
        table[g] = items[0][0]
    if len(set(table.values())) != f.target.size or f.source.size != f.target.size:
        raise MalformedError("map is not bijective on bases")
    inverse = {h: chain_of(f.target.degree_of(h), g) for g, h in table.items()}
    return ComplexMap(f.target, f.source, inverse)


def basis_renaming_map(
    source: BasedComplex, target: BasedComplex, rename: Callable[[Name], Name]
) -> ComplexMap:
    """The map sending each source generator to its renamed target generator."""
    return ComplexMap(
        source,
        target,
        {g: chain_of(deg, rename(g)) for deg, g in source.all_generators()},
    )
