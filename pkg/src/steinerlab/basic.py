"""The primitive cells every construction bootstraps from."""

from __future__ import annotations

from functools import lru_cache

from .core import BasedComplex, Chain


@lru_cache(maxsize=None)
def unit() -> BasedComplex:
    """One degree-0 generator of augmentation one (the tensor unit)."""
    return BasedComplex({0: [("u",)]}, {}, {("u",): 1})


@lru_cache(maxsize=None)
def zero() -> BasedComplex:
    """The empty complex (the join unit)."""
    return BasedComplex({}, {}, {})


@lru_cache(maxsize=None)
def interval() -> BasedComplex:
    """Two vertices ``0``, ``1`` and one edge ``i`` with d(i) = 1 - 0."""
    return BasedComplex(
        {0: [("0",), ("1",)], 1: [("i",)]},
        {("i",): Chain(0, {("1",): 1, ("0",): -1})},
        {("0",): 1, ("1",): 1},
    )


@lru_cache(maxsize=None)
def two_points() -> BasedComplex:
    """The boundary of the interval: vertices ``0`` and ``1`` only."""
    return BasedComplex({0: [("0",), ("1",)]}, {}, {("0",): 1, ("1",): 1})
