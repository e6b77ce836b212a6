"""SPARQL JSON results format: serialization and parsing."""
from __future__ import annotations

from ..rdf.terms import RDF_LANG_STRING, XSD_STRING, Term, literal
from .evaluator import ResultTable


class MalformedResultsError(ValueError):
    pass


def term_to_binding(term: Term) -> dict:
    if term.is_iri:
        return {"type": "uri", "value": term.value}
    binding: dict = {"type": "literal", "value": term.value}
    if term.language is not None:
        binding["xml:lang"] = term.language
    elif term.datatype != XSD_STRING:
        binding["datatype"] = term.datatype
    return binding


def binding_to_term(binding: dict) -> Term:
    try:
        kind = binding["type"]
        value = binding["value"]
    except (TypeError, KeyError) as err:
        raise MalformedResultsError(f"binding missing {err}") from None
    if kind == "uri":
        return Term("iri", value)
    if kind in ("literal", "typed-literal"):
        lang = binding.get("xml:lang")
        if lang is not None:
            return literal(value, language=lang)
        return literal(value, datatype=binding.get("datatype"))
    raise MalformedResultsError(f"unsupported binding type {kind!r}")


def table_to_json(table: ResultTable) -> dict:
    return {
        "head": {"vars": list(table.variables)},
        "results": {
            "bindings": [
                {var: term_to_binding(row[var]) for var in table.variables if var in row}
                for row in table.rows
            ]
        },
    }


def table_from_json(doc) -> ResultTable:
    try:
        variables = tuple(doc["head"]["vars"])
        bindings = doc["results"]["bindings"]
    except (TypeError, KeyError) as err:
        raise MalformedResultsError(f"results document missing {err}") from None
    rows = []
    for binding in bindings:
        if not isinstance(binding, dict) or set(binding) != set(variables):
            raise MalformedResultsError("binding does not cover the projected variables")
        rows.append({var: binding_to_term(binding[var]) for var in variables})
    return ResultTable(variables, tuple(rows))
