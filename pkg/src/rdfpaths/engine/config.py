"""Engine configuration."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..rdf.terms import RDF_TYPE


@dataclass(frozen=True)
class AnalysisConfig:
    """Traversal limits shared by the engine, the API and the CLI.

    ``excluded_predicates`` are never traversed (rdf:type by default);
    they still exist as triples, e.g. for the class index.
    """

    max_depth: int = 3
    excluded_predicates: frozenset[str] = field(default_factory=lambda: frozenset({RDF_TYPE}))

    def __post_init__(self):
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")


DEFAULT_CONFIG = AnalysisConfig()
