import pytest

from steinerlab import (
    BasedComplex,
    Chain,
    ComplexMap,
    CompositionError,
    MalformedError,
    boundary_disk,
    chain_of,
    compose,
    direct_sum,
    disk,
    equal_presentation,
    graded_counts,
    identity_map,
    interval,
    oriental,
    cube,
    unit,
    validate_complex,
    validate_map,
    verify_mutually_inverse,
    zero,
)
from steinerlab.core import SizeLimitError
from steinerlab.retract import q2, s2


def test_chain_arithmetic_is_exact_and_sparse():
    a = Chain(1, {("x",): 2, ("y",): -1})
    b = Chain(1, {("x",): -2, ("z",): 5})
    s = a + b
    assert s.coeff(("x",)) == 0 and ("x",) not in dict(s.items())
    assert (10**30 * a).coeff(("x",)) == 2 * 10**30
    assert a - a == Chain(1)


def test_chain_degree_mismatch():
    with pytest.raises(Exception):
        Chain(0, {("x",): 1}) + Chain(1, {("x",): 1})


def test_validate_disk_passes():
    assert validate_complex(disk(2)).passed


def test_validate_d2_failure_witness():
    c = BasedComplex(
        {0: [("v",)], 1: [("e",)], 2: [("c",)]},
        {("e",): chain_of(0, ("v",)), ("c",): chain_of(1, ("e",))},
        {("v",): 1},
    )
    rep = validate_complex(c)
    by_name = {i.name: i for i in rep.checks}
    assert not by_name["D2_ZERO"].passed and by_name["D2_ZERO"].witness == "c"


def test_validate_augmentation_failure_witness():
    c = BasedComplex(
        {0: [("x",), ("y",)], 1: [("e",)]},
        {("e",): Chain(0, {("x",): 1, ("y",): 1})},
        {("x",): 1, ("y",): 1},
    )
    rep = validate_complex(c)
    by_name = {i.name: i for i in rep.checks}
    assert not by_name["AUG_KILLS_D1"].passed and by_name["AUG_KILLS_D1"].witness == "e"


def test_validate_negative_augmentation():
    c = BasedComplex({0: [("x",)]}, {}, {("x",): -1})
    rep = validate_complex(c)
    assert not rep.passed
    assert rep.failures()[0].name == "AUG_NONNEGATIVE"


def test_malformed_differential_rejected():
    with pytest.raises(MalformedError):
        BasedComplex(
            {0: [("v",)], 1: [("e",)]},
            {("e",): chain_of(0, ("missing",))},
            {("v",): 1},
        )


def test_validate_map_identity_and_negative():
    assert validate_map(identity_map(cube(2))).passed
    assert validate_map(s2()).passed
    bad = ComplexMap(unit(), unit(), {("u",): Chain(0, {("u",): -1})})
    rep = validate_map(bad)
    by_name = {i.name: i for i in rep.checks}
    assert not by_name["POSITIVITY"].passed


def test_map_degree_mismatch_rejected():
    from steinerlab import DegreeMismatchError

    with pytest.raises(DegreeMismatchError):
        ComplexMap(
            interval(),
            interval(),
            {
                ("0",): chain_of(0, ("0",)),
                ("1",): chain_of(0, ("1",)),
                ("i",): chain_of(0, ("0",)),
            },
        )


def test_compose_identities_and_associativity():
    f = s2()
    assert compose(f, identity_map(f.target)) == f
    assert compose(identity_map(f.source), f) == f
    g = q2()
    assert compose(f, g) == identity_map(oriental(2))
    h = compose(g, f)
    assert compose(compose(f, g), f) == compose(f, compose(g, f))
    assert compose(compose(g, f), g) == compose(g, compose(f, g))
    assert compose(h, h) == h


def test_compose_mismatch_raises():
    with pytest.raises(CompositionError):
        compose(s2(), s2())


def test_direct_sum_counts_and_units():
    assert graded_counts(direct_sum(unit(), unit())) == {0: 2}
    assert equal_presentation(direct_sum(unit(), unit()), boundary_disk(1))
    assert graded_counts(direct_sum(disk(1), disk(2))) == {0: 4, 1: 3, 2: 1}
    a = oriental(2)
    summed = direct_sum(zero(), a)
    assert equal_presentation(summed, a)


def test_graded_counts_examples():
    assert graded_counts(cube(3)) == {0: 8, 1: 12, 2: 6, 3: 1}
    assert graded_counts(oriental(3)) == {0: 4, 1: 6, 2: 4, 3: 1}
    assert graded_counts(disk(4)) == {0: 2, 1: 2, 2: 2, 3: 2, 4: 1}
    assert graded_counts(unit()) == {0: 1}
    assert graded_counts(zero()) == {}


def test_equal_presentation_examples():
    assert equal_presentation(cube(2), cube(2))
    assert equal_presentation(cube(1), oriental(1))
    assert not equal_presentation(cube(2), oriental(2))


def test_verify_mutually_inverse_detects_one_sided():
    rep = verify_mutually_inverse(s2(), q2())
    by_name = {i.name: i for i in rep.checks}
    assert by_name["LEFT_THEN_RIGHT_IS_ID"].passed
    assert not by_name["RIGHT_THEN_LEFT_IS_ID"].passed
    ident = identity_map(interval())
    assert verify_mutually_inverse(ident, ident).passed


def test_generator_cap(monkeypatch):
    monkeypatch.setenv("STEINERLAB_MAX_GENERATORS", "5")
    with pytest.raises(SizeLimitError):
        BasedComplex({0: [(str(i),) for i in range(6)]}, {}, {(str(i),): 1 for i in range(6)})
    monkeypatch.setenv("STEINERLAB_MAX_GENERATORS", "10")
    BasedComplex({0: [(str(i),) for i in range(6)]}, {}, {(str(i),): 1 for i in range(6)})
