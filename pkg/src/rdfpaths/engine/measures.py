"""Descriptive statistics over the endpoints of a path."""
from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, Mapping

from ..rdf.terms import NUMERIC_DATATYPES, RDF_LANG_STRING, Term

IRI_ONLY = "iri-only"
LITERAL_ONLY = "literal-only"
MIXED = "mixed"

_CENT = Decimal("0.01")


def coverage_percent(covered: int, total: int) -> float:
    """Percentage of ``total`` covered, rounded half-up to 2 decimals.

    Nonzero numerators never round down to 0, keeping coverage > 0
    exactly when at least one entity instantiates the path.
    """
    if total <= 0 or covered <= 0:
        return 0.0
    pct = (Decimal(covered) * 100 / Decimal(total)).quantize(_CENT, rounding=ROUND_HALF_UP)
    if pct == 0:
        pct = _CENT
    return float(pct)


def _numeric_key(lexical: str):
    try:
        return Decimal(lexical)
    except ArithmeticError:
        return Decimal(str(float(lexical)))


@dataclass(frozen=True)
class Measures:
    """The statistics characterizing one analyzed path.

    ``count`` is the number of full path instantiations; ``unique_count``
    the number of distinct terminal terms. Datatype/language
    distributions and min/max are computed over literal endpoints only,
    so they are absent for iri-only paths.
    """

    depth: int
    coverage: float
    count: int
    unique_count: int
    endpoint_kind: str = IRI_ONLY
    datatypes: Mapping[str, int] = field(default_factory=dict)
    languages: Mapping[str, int] = field(default_factory=dict)
    min_value: str | None = None
    max_value: str | None = None


def measures_from_terminals(
    depth: int,
    covered: int,
    total: int,
    terminals: Iterable[tuple[Term, int]],
) -> Measures:
    """Aggregate Table-style measures from (terminal term, multiplicity) pairs."""
    count = 0
    unique = 0
    saw_iri = False
    datatypes: dict[str, int] = {}
    languages: dict[str, int] = {}
    literals: list[Term] = []
    for term, mult in terminals:
        count += mult
        unique += 1
        if term.is_literal:
            literals.append(term)
            datatypes[term.datatype] = datatypes.get(term.datatype, 0) + mult
            if term.language is not None:
                languages[term.language] = languages.get(term.language, 0) + mult
        else:
            saw_iri = True

    if not literals:
        kind = IRI_ONLY
    elif saw_iri:
        kind = MIXED
    else:
        kind = LITERAL_ONLY

    min_value = max_value = None
    if literals:
        if all(dt in NUMERIC_DATATYPES for dt in datatypes):
            ordered = sorted(literals, key=lambda t: (_numeric_key(t.value), t.value))
        else:
            ordered = sorted(literals, key=lambda t: t.value)
        min_value = ordered[0].value
        max_value = ordered[-1].value

    return Measures(
        depth=depth,
        coverage=coverage_percent(covered, total),
        count=count,
        unique_count=unique,
        endpoint_kind=kind,
        datatypes=dict(sorted(datatypes.items())),
        languages=dict(sorted(languages.items())),
        min_value=min_value,
        max_value=max_value,
    )


def empty_measures(depth: int) -> Measures:
    return Measures(depth=depth, coverage=0.0, count=0, unique_count=0)
