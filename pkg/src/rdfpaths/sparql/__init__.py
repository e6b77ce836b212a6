from .client import (
    HttpStatusError,
    RemoteAnalysis,
    RemoteError,
    RemoteTimeoutError,
    ResultsFormatError,
    SequenceFailure,
    TransportError,
    remote_analyze,
    remote_execute,
)
from .endpoint import EndpointServer, create_sparql_router
from .evaluator import ParsedQuery, ResultTable, UnsupportedQueryError, evaluate, parse_query
from .jsonresults import MalformedResultsError, table_from_json, table_to_json
from .queries import (
    COVERAGE_NUMERATOR,
    ENTITY_TOTAL,
    EXTENSION_DISCOVERY,
    PREDICATE_DISCOVERY,
    SHAPES,
    TERMINAL_VALUES,
    TERMINAL_VALUES_DISTINCT,
    ChainQuery,
    generate,
)

__all__ = [
    "HttpStatusError",
    "RemoteAnalysis",
    "RemoteError",
    "RemoteTimeoutError",
    "ResultsFormatError",
    "SequenceFailure",
    "TransportError",
    "remote_analyze",
    "remote_execute",
    "EndpointServer",
    "create_sparql_router",
    "ParsedQuery",
    "ResultTable",
    "UnsupportedQueryError",
    "evaluate",
    "parse_query",
    "MalformedResultsError",
    "table_from_json",
    "table_to_json",
    "COVERAGE_NUMERATOR",
    "ENTITY_TOTAL",
    "EXTENSION_DISCOVERY",
    "PREDICATE_DISCOVERY",
    "SHAPES",
    "TERMINAL_VALUES",
    "TERMINAL_VALUES_DISTINCT",
    "ChainQuery",
    "generate",
]
