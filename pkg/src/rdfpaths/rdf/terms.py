"""RDF terms and triples.

Only IRIs and literals exist here: blank nodes are rejected at parse time,
so a term is fully described by (kind, value, datatype, language).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"

RDF_TYPE = RDF_NS + "type"
RDF_LANG_STRING = RDF_NS + "langString"
XSD_STRING = XSD_NS + "string"
XSD_INTEGER = XSD_NS + "integer"
XSD_DECIMAL = XSD_NS + "decimal"
XSD_DOUBLE = XSD_NS + "double"
XSD_BOOLEAN = XSD_NS + "boolean"

# Datatypes whose lexical forms are ordered numerically for min/max.
NUMERIC_DATATYPES = frozenset(
    XSD_NS + local
    for local in (
        "integer",
        "decimal",
        "float",
        "double",
        "long",
        "int",
        "short",
        "byte",
        "unsignedLong",
        "unsignedInt",
        "unsignedShort",
        "unsignedByte",
    )
)

IRI = "iri"
LITERAL = "literal"


@dataclass(frozen=True, slots=True)
class Term:
    """An IRI or a literal.

    ``value`` holds the IRI for kind=iri and the lexical form for
    kind=literal. Plain literals are normalized to xsd:string; a language
    tag implies rdf:langString.
    """

    kind: str
    value: str
    datatype: str | None = None
    language: str | None = None

    def __post_init__(self):
        if self.kind == IRI:
            if not self.value:
                raise ValueError("IRI term with empty IRI")
            if self.datatype is not None or self.language is not None:
                raise ValueError("IRI term cannot carry datatype/language")
        elif self.kind == LITERAL:
            if self.datatype is None:
                raise ValueError("literal term without datatype")
            if self.language is not None and self.datatype != RDF_LANG_STRING:
                raise ValueError("language tag requires the langString datatype")
            if self.language is None and self.datatype == RDF_LANG_STRING:
                raise ValueError("langString literal without language tag")
        else:
            raise ValueError(f"unknown term kind: {self.kind!r}")

    @property
    def is_iri(self) -> bool:
        return self.kind == IRI

    @property
    def is_literal(self) -> bool:
        return self.kind == LITERAL

    def sort_key(self) -> tuple:
        return (
            0 if self.kind == IRI else 1,
            self.value,
            self.datatype or "",
            self.language or "",
        )

    def __repr__(self):
        return f"Term({ntriples_term(self)})"


def iri(value: str) -> Term:
    return Term(IRI, value)


def literal(lexical: str, datatype: str | None = None, language: str | None = None) -> Term:
    """Build a literal; plain literals become xsd:string, tagged ones langString."""
    if language is not None:
        return Term(LITERAL, lexical, RDF_LANG_STRING, language.lower())
    return Term(LITERAL, lexical, datatype or XSD_STRING)


class Triple(NamedTuple):
    subject: Term
    predicate: Term
    object: Term


def make_triple(subject: Term, predicate: Term, object: Term) -> Triple:
    if not subject.is_iri:
        raise ValueError("triple subject must be an IRI")
    if not predicate.is_iri:
        raise ValueError("triple predicate must be an IRI")
    return Triple(subject, predicate, object)


_ESCAPES = {
    "\\": "\\\\",
    '"': '\\"',
    "\n": "\\n",
    "\r": "\\r",
    "\t": "\\t",
    "\b": "\\b",
    "\f": "\\f",
}


def _escape_literal(text: str) -> str:
    out = []
    for ch in text:
        if ch in _ESCAPES:
            out.append(_ESCAPES[ch])
        elif ord(ch) < 0x20:
            out.append("\\u%04X" % ord(ch))
        else:
            out.append(ch)
    return "".join(out)


def ntriples_term(term: Term) -> str:
    """Canonical N-Triples form of a term."""
    if term.is_iri:
        return f"<{term.value}>"
    lex = _escape_literal(term.value)
    if term.language is not None:
        return f'"{lex}"@{term.language}'
    if term.datatype == XSD_STRING:
        return f'"{lex}"'
    return f'"{lex}"^^<{term.datatype}>'


def ntriples_line(triple: Triple) -> str:
    return (
        f"{ntriples_term(triple.subject)} "
        f"{ntriples_term(triple.predicate)} "
        f"{ntriples_term(triple.object)} ."
    )
