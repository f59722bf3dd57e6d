"""Deterministic text serialization for complexes and maps.

Documents are JSON with a fixed schema version and canonical ordering, so
``emit`` is byte-stable and ``parse(emit(x)) == x``.  Coefficients are
decimal strings: the integers are unbounded by contract and must survive
any consumer.  ``parse`` validates structurally and then semantically,
embedding the failing report in the error.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .core import (
    BasedComplex,
    Chain,
    CheckReport,
    ComplexMap,
    MalformedError,
    SteinerlabError,
    validate_complex,
    validate_map,
)
from .names import Name, parse_name, render_name

FORMAT_VERSION = "steinerlab/1"


class ParseError(SteinerlabError):
    code = "PARSE_ERROR"


class ValidationError(SteinerlabError):
    code = "VALIDATION_ERROR"

    def __init__(self, message: str, report: CheckReport):
        super().__init__(message)
        self.report = report


def _chain_terms(chain: Chain) -> list[dict[str, str]]:
    return [
        {"generator": render_name(n), "coeff": str(c)} for n, c in chain.items()
    ]


def complex_to_document(c: BasedComplex) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "complex",
        "degrees": [
            {"degree": deg, "generators": [render_name(g) for g in c.degrees[deg]]}
            for deg in sorted(c.degrees)
        ],
        "differential": [
            {"generator": render_name(g), "terms": _chain_terms(c.diff[g])}
            for deg in sorted(c.degrees)
            if deg >= 1
            for g in c.degrees[deg]
        ],
        "augmentation": [
            {"generator": render_name(g), "value": str(c.aug[g])}
            for g in c.generators(0)
        ],
    }


def map_to_document(f: ComplexMap) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "map",
        "source": complex_to_document(f.source),
        "target": complex_to_document(f.target),
        "assignment": [
            {"generator": render_name(g), "terms": _chain_terms(f.of_gen(g))}
            for deg, g in f.source.all_generators()
        ],
    }


def _need(doc: dict, key: str, where: str):
    if key not in doc:
        raise ParseError(f"missing {key!r} in {where}")
    return doc[key]


def _parse_int(text: Any, where: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ParseError(f"bad integer {text!r} in {where}") from None


def _parse_gen(text: Any, where: str) -> Name:
    if not isinstance(text, str):
        raise ParseError(f"generator name must be a string in {where}")
    try:
        return parse_name(text)
    except ValueError as exc:
        raise ParseError(f"bad generator name in {where}: {exc}") from None


def document_to_complex(doc: dict[str, Any]) -> BasedComplex:
    if _need(doc, "format_version", "document") != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {doc['format_version']!r}")
    degrees: dict[int, list[Name]] = {}
    for entry in _need(doc, "degrees", "document"):
        deg = _parse_int(_need(entry, "degree", "degrees"), "degrees")
        degrees[deg] = [
            _parse_gen(g, f"degree {deg}") for g in _need(entry, "generators", "degrees")
        ]
    gen_degree = {g: deg for deg, gens in degrees.items() for g in gens}
    diff: dict[Name, Chain] = {}
    for entry in _need(doc, "differential", "document"):
        g = _parse_gen(_need(entry, "generator", "differential"), "differential")
        if g not in gen_degree:
            raise ParseError(f"differential on unknown generator {render_name(g)}")
        terms = {
            _parse_gen(_need(t, "generator", "terms"), "terms"): _parse_int(
                _need(t, "coeff", "terms"), "terms"
            )
            for t in _need(entry, "terms", "differential")
        }
        diff[g] = Chain(gen_degree[g] - 1, terms)
    aug: dict[Name, int] = {}
    for entry in _need(doc, "augmentation", "document"):
        g = _parse_gen(_need(entry, "generator", "augmentation"), "augmentation")
        aug[g] = _parse_int(_need(entry, "value", "augmentation"), "augmentation")
    try:
        result = BasedComplex(degrees, diff, aug)
    except MalformedError as exc:
        raise ParseError(f"structurally malformed complex: {exc}") from None
    check = validate_complex(result)
    if not check.passed:
        failing = check.failures()[0]
        raise ValidationError(
            f"complex fails {failing.name} at {failing.witness}", check
        )
    return result


def document_to_map(doc: dict[str, Any]) -> ComplexMap:
    source = document_to_complex(_need(doc, "source", "map document"))
    target = document_to_complex(_need(doc, "target", "map document"))
    assignment: dict[Name, Chain] = {}
    for entry in _need(doc, "assignment", "map document"):
        g = _parse_gen(_need(entry, "generator", "assignment"), "assignment")
        if not source.has_generator(g):
            raise ParseError(f"assignment on unknown generator {render_name(g)}")
        terms = {
            _parse_gen(_need(t, "generator", "terms"), "terms"): _parse_int(
                _need(t, "coeff", "terms"), "terms"
            )
            for t in _need(entry, "terms", "assignment")
        }
        assignment[g] = Chain(source.degree_of(g), terms)
    try:
        result = ComplexMap(source, target, assignment)
    except MalformedError as exc:
        raise ParseError(f"structurally malformed map: {exc}") from None
    check = validate_map(result)
    if not check.passed:
        failing = check.failures()[0]
        raise ValidationError(f"map fails {failing.name} at {failing.witness}", check)
    return result


def emit(value: Union[BasedComplex, ComplexMap]) -> str:
    """Serialize deterministically; identical values give identical bytes."""
    if isinstance(value, BasedComplex):
        doc = complex_to_document(value)
    elif isinstance(value, ComplexMap):
        doc = map_to_document(value)
    else:
        raise TypeError(f"cannot emit {type(value).__name__}")
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse(text: str) -> Union[BasedComplex, ComplexMap]:
    """Parse a document emitted by :func:`emit`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    kind = _need(doc, "kind", "document")
    if kind == "complex":
        return document_to_complex(doc)
    if kind == "map":
        return document_to_map(doc)
    raise ParseError(f"unknown document kind {kind!r}")
