"""Generation of the chain-shaped SPARQL queries the tool executes.

Six query shapes exist; all share the body
``?s rdf:type <c> . ?s <p1> ?o1 . ... ?o(n-1) <pn> ?o`` with fixed
variable names, so equal inputs always produce byte-equal text.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..rdf.prefixes import PrefixMap
from ..rdf.terms import RDF_TYPE

TERMINAL_VALUES = "terminal-values"
TERMINAL_VALUES_DISTINCT = "terminal-values-distinct"
COVERAGE_NUMERATOR = "coverage-numerator"
ENTITY_TOTAL = "entity-total"
PREDICATE_DISCOVERY = "predicate-discovery"
EXTENSION_DISCOVERY = "extension-discovery"

SHAPES = (
    TERMINAL_VALUES,
    TERMINAL_VALUES_DISTINCT,
    COVERAGE_NUMERATOR,
    ENTITY_TOTAL,
    PREDICATE_DISCOVERY,
    EXTENSION_DISCOVERY,
)

# SPARQL prefixed-name locals are kept conservative: no dots, no slashes.
_QUERY_LOCAL = re.compile(r"^[A-Za-z_][A-Za-z0-9_-]*$")


@dataclass(frozen=True)
class ChainQuery:
    shape: str
    class_iri: str
    predicates: tuple[str, ...] = ()
    service: str | None = None
    limit: int | None = None

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f"unknown query shape {self.shape!r}")
        n = len(self.predicates)
        if self.shape in (TERMINAL_VALUES, TERMINAL_VALUES_DISTINCT, COVERAGE_NUMERATOR) and n < 1:
            raise ValueError(f"{self.shape} needs at least one predicate")
        if self.shape == ENTITY_TOTAL and n != 0:
            raise ValueError("entity-total takes no predicates")
        if self.shape == EXTENSION_DISCOVERY and self.service is None:
            raise ValueError("extension-discovery needs a target service IRI")
        if self.shape != EXTENSION_DISCOVERY and self.service is not None:
            raise ValueError(f"{self.shape} does not take a service IRI")


class _Compactor:
    def __init__(self, prefixes: PrefixMap | None):
        self.prefixes = prefixes or PrefixMap()
        self.used: set[str] = set()

    def term(self, iri: str) -> str:
        curie = self.prefixes.compact(iri)
        if curie != iri:
            label, _, local = curie.partition(":")
            if _QUERY_LOCAL.match(local):
                self.used.add(label)
                return curie
        return f"<{iri}>"


def _chain_vars(n: int) -> list[str]:
    """Subject-to-object variable chain: ?s, ?o1..?o(n-1), ?o."""
    if n == 0:
        return ["?s"]
    return ["?s"] + [f"?o{i}" for i in range(1, n)] + ["?o"]


def generate(query: ChainQuery, prefixes: PrefixMap | None = None) -> str:
    """Canonical query text for a ChainQuery."""
    c = _Compactor(prefixes)
    n = len(query.predicates)
    chain = _chain_vars(n)

    patterns = [f"?s {c.term(RDF_TYPE)} {c.term(query.class_iri)} ."]
    for i, pred in enumerate(query.predicates):
        patterns.append(f"{chain[i]} {c.term(pred)} {chain[i + 1]} .")

    if query.shape == TERMINAL_VALUES:
        select = "SELECT ?o"
    elif query.shape == TERMINAL_VALUES_DISTINCT:
        select = "SELECT DISTINCT ?o"
    elif query.shape in (COVERAGE_NUMERATOR, ENTITY_TOTAL):
        select = "SELECT (COUNT(DISTINCT ?s) AS ?count)"
    else:
        select = "SELECT DISTINCT ?p"

    body = [f"  {p}" for p in patterns]
    if query.shape == PREDICATE_DISCOVERY:
        body.append(f"  {chain[-1]} ?p ?x .")
    elif query.shape == EXTENSION_DISCOVERY:
        body.append(f"  SERVICE <{query.service}> {{")
        body.append(f"    {chain[-1]} ?p ?x .")
        body.append("  }")

    lines = [f"PREFIX {label}: <{c.prefixes.namespace(label)}>" for label in sorted(c.used)]
    lines.append(select)
    lines.append("WHERE {")
    lines.extend(body)
    lines.append("}")
    if query.limit is not None:
        lines.append(f"LIMIT {query.limit}")
    return "\n".join(lines) + "\n"
