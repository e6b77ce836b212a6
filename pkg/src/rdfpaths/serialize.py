"""Canonical dictionary forms of engine objects.

Used by the summary cache, the CLI and the HTTP API so that all three
emit identical numbers. Field order is fixed; distribution maps are
sorted by key. When a prefix map is given, IRIs in display positions
(datatype keys, intermediate-type classes) are compacted.
"""
from __future__ import annotations

from .engine.measures import Measures
from .engine.outlines import ExtensionOutline, PathOutline
from .rdf.prefixes import PrefixMap
from .rdf.terms import XSD_STRING, Term
from .template import PathTemplate, format_template, parse_template

_NO_PREFIXES = PrefixMap()


def _compact(iri: str, prefixes: PrefixMap | None) -> str:
    return prefixes.compact(iri) if prefixes is not None else iri


def term_to_dict(term: Term) -> dict:
    if term.is_iri:
        return {"type": "uri", "value": term.value}
    out = {"type": "literal", "value": term.value}
    if term.language is not None:
        out["xml:lang"] = term.language
    elif term.datatype != XSD_STRING:
        out["datatype"] = term.datatype
    return out


def measures_to_dict(m: Measures, prefixes: PrefixMap | None = None) -> dict:
    out = {
        "depth": m.depth,
        "coverage": m.coverage,
        "count": m.count,
        "uniqueCount": m.unique_count,
        "endpointKind": m.endpoint_kind,
        "datatypes": {_compact(k, prefixes): v for k, v in sorted(m.datatypes.items())},
        "languages": dict(sorted(m.languages.items())),
    }
    if m.min_value is not None:
        out["minValue"] = m.min_value
        out["maxValue"] = m.max_value
    return out


def _types_to_dict(intermediate_types, prefixes: PrefixMap | None) -> dict:
    out = {}
    for position in sorted(intermediate_types):
        counts = intermediate_types[position]
        out[str(position)] = {
            (_compact(k, prefixes) if k != "untyped" else k): counts[k] for k in sorted(counts)
        }
    return out


def outline_to_dict(outline: PathOutline, prefixes: PrefixMap | None = None) -> dict:
    return {
        "template": format_template(outline.template, prefixes or _NO_PREFIXES),
        "datasetId": outline.dataset_id,
        "measures": measures_to_dict(outline.measures, prefixes),
        "intermediateTypes": _types_to_dict(outline.intermediate_types, prefixes),
    }


def extension_to_dict(extension: ExtensionOutline, prefixes: PrefixMap | None = None) -> dict:
    return {
        "predicate": extension.extension_predicate,
        "label": _compact(extension.extension_predicate, prefixes),
        "targetDatasetId": extension.target_dataset_id,
        "joinCount": extension.join_count,
        "measures": measures_to_dict(extension.measures, prefixes),
    }


def measures_from_dict(raw: dict) -> Measures:
    return Measures(
        depth=raw["depth"],
        coverage=float(raw["coverage"]),
        count=raw["count"],
        unique_count=raw["uniqueCount"],
        endpoint_kind=raw["endpointKind"],
        datatypes=dict(raw["datatypes"]),
        languages=dict(raw["languages"]),
        min_value=raw.get("minValue"),
        max_value=raw.get("maxValue"),
    )


def outline_from_dict(raw: dict) -> PathOutline:
    """Inverse of ``outline_to_dict`` for uncompacted (full-IRI) documents."""
    template = parse_template(raw["template"], _NO_PREFIXES)
    types = {int(pos): dict(counts) for pos, counts in raw["intermediateTypes"].items()}
    return PathOutline(raw["datasetId"], template, measures_from_dict(raw["measures"]), types)
