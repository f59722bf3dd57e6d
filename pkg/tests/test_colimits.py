import pytest

from steinerlab import (
    BasedComplex,
    Chain,
    ComplexMap,
    CompositionError,
    coequalizer,
    compose,
    disk,
    disk_inclusion,
    graded_counts,
    identity_map,
    pushout,
    unit,
    validate_complex,
)
from steinerlab.colimits import induced_from_coequalizer


def test_pushout_wedge_of_intervals():
    # glue the endpoint of one interval to the start of another
    f = disk_inclusion(0, 1, "target")
    g = disk_inclusion(0, 1, "source")
    result = pushout(f, g)
    assert result.based
    c = result.require_based()
    assert graded_counts(c) == {0: 3, 1: 2}
    assert validate_complex(c).passed
    # the square commutes exactly
    assert compose(f, result.leg_a) == compose(g, result.leg_b)


def test_pushout_of_identities_is_unit():
    ident = identity_map(unit())
    result = pushout(ident, ident)
    c = result.require_based()
    assert graded_counts(c) == {0: 1}
    assert result.leg_a == result.leg_b


def test_pushout_source_mismatch():
    with pytest.raises(CompositionError):
        pushout(identity_map(unit()), identity_map(disk(1)))


def test_coequalizer_of_equal_maps_is_identity():
    f = disk_inclusion(0, 2, "source")
    result = coequalizer(f, f)
    c = result.require_based()
    assert c == disk(2)
    assert result.leg_a == identity_map(disk(2))


def _free_degree_one(names):
    return BasedComplex(
        {1: [(n,) for n in names]},
        {(n,): Chain(0) for n in names},
        {},
    )


def test_coequalizer_torsion_witness():
    c = _free_degree_one(["c"])
    a = _free_degree_one(["x"])
    f = ComplexMap(c, a, {("c",): Chain(1, {("x",): 3})})
    g = ComplexMap(c, a, {("c",): Chain(1, {("x",): 1})})
    result = coequalizer(f, g)
    assert not result.based
    assert result.torsion_witness == (1, 2)
    with pytest.raises(Exception):
        result.require_based()


def test_coequalizer_non_based_but_free():
    c = _free_degree_one(["c"])
    a = _free_degree_one(["x", "y"])
    f = ComplexMap(c, a, {("c",): Chain(1, {("x",): 2})})
    g = ComplexMap(c, a, {("c",): Chain(1, {("y",): -3})})
    result = coequalizer(f, g)
    assert not result.based
    assert result.torsion_witness is None
    assert "non-based" in (result.reason or "")


def test_coequalizer_gcd_relations_still_based():
    # relations 2x and 3x combine to x: the quotient is free on y alone
    c = _free_degree_one(["c", "d"])
    a = _free_degree_one(["x", "y"])
    f = ComplexMap(
        c,
        a,
        {("c",): Chain(1, {("x",): 2}), ("d",): Chain(1, {("x",): 3})},
    )
    g = ComplexMap(c, a, {("c",): Chain(1), ("d",): Chain(1)})
    result = coequalizer(f, g)
    assert result.based
    assert graded_counts(result.require_based()) == {1: 1}


def test_induced_map_from_coequalizer():
    f = disk_inclusion(0, 1, "source")
    g = disk_inclusion(0, 1, "source")
    result = coequalizer(f, g)
    c = result.require_based()
    assert c == disk(1)
    w = identity_map(disk(1))
    induced = induced_from_coequalizer(result, w)
    assert compose(result.leg_a, induced) == w
