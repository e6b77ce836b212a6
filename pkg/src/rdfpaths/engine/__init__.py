from .config import DEFAULT_CONFIG, AnalysisConfig
from .filters import FeatureRanges, FilterSpec, feature_ranges, filter_outlines
from .measures import IRI_ONLY, LITERAL_ONLY, MIXED, Measures, coverage_percent, measures_from_terminals
from .outlines import (
    DepthError,
    ExtensionAnalysis,
    ExtensionOutline,
    LiteralEndpointError,
    PathOutline,
    UnknownClassError,
    analyze_extensions,
    describe_outline,
    enumerate_outlines,
    list_classes,
    terminal_values,
)

__all__ = [
    "AnalysisConfig",
    "DEFAULT_CONFIG",
    "FeatureRanges",
    "FilterSpec",
    "feature_ranges",
    "filter_outlines",
    "IRI_ONLY",
    "LITERAL_ONLY",
    "MIXED",
    "Measures",
    "coverage_percent",
    "measures_from_terminals",
    "DepthError",
    "ExtensionAnalysis",
    "ExtensionOutline",
    "LiteralEndpointError",
    "PathOutline",
    "UnknownClassError",
    "analyze_extensions",
    "describe_outline",
    "enumerate_outlines",
    "list_classes",
    "terminal_values",
]
