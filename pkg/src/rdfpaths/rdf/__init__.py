from .dataset import Dataset, DatasetLink, DuplicateDatasetError, UnknownDatasetError, build_dataset
from .ntriples import ParseError, UnsupportedFeatureError, parse_ntriples, serialize_ntriples
from .prefixes import WELL_KNOWN, PrefixError, PrefixMap, resolve_iri
from .terms import (
    RDF_LANG_STRING,
    RDF_TYPE,
    XSD_STRING,
    NUMERIC_DATATYPES,
    Term,
    Triple,
    iri,
    literal,
    make_triple,
    ntriples_line,
    ntriples_term,
)
from .turtle import parse_turtle

__all__ = [
    "Dataset",
    "DatasetLink",
    "DuplicateDatasetError",
    "UnknownDatasetError",
    "build_dataset",
    "ParseError",
    "UnsupportedFeatureError",
    "parse_ntriples",
    "serialize_ntriples",
    "PrefixError",
    "PrefixMap",
    "WELL_KNOWN",
    "resolve_iri",
    "RDF_LANG_STRING",
    "RDF_TYPE",
    "XSD_STRING",
    "NUMERIC_DATATYPES",
    "Term",
    "Triple",
    "iri",
    "literal",
    "make_triple",
    "ntriples_line",
    "ntriples_term",
    "parse_turtle",
]
