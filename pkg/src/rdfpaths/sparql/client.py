"""SPARQL protocol client and remote path analysis.

``remote_analyze`` rebuilds the outline list of a class purely from
generated queries: predicate discovery level by level, then per-sequence
measure queries. A failing sequence is annotated and skipped rather than
aborting the whole run.
"""
from __future__ import annotations

import threading
from collections import Counter
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass

import httpx

from ..engine.config import DEFAULT_CONFIG, AnalysisConfig
from ..engine.measures import measures_from_terminals
from ..engine.outlines import PathOutline, UNTYPED
from ..rdf.prefixes import PrefixMap
from ..rdf.terms import RDF_TYPE, Term
from ..template import PathTemplate, format_template
from .evaluator import ResultTable
from .jsonresults import MalformedResultsError, table_from_json
from .queries import (
    COVERAGE_NUMERATOR,
    ENTITY_TOTAL,
    PREDICATE_DISCOVERY,
    TERMINAL_VALUES,
    ChainQuery,
    generate,
)

RESULTS_MEDIA_TYPE = "application/sparql-results+json"


class RemoteError(Exception):
    category = "error"


class TransportError(RemoteError):
    category = "transport"


class RemoteTimeoutError(RemoteError):
    category = "timeout"


class HttpStatusError(RemoteError):
    category = "http-status"

    def __init__(self, status: int, reason: str):
        super().__init__(f"HTTP {status}: {reason}")
        self.status = status


class ResultsFormatError(RemoteError):
    category = "malformed-results"


def remote_execute(
    url: str,
    query: str,
    timeout: float = 10.0,
    retries: int = 1,
    client: httpx.Client | None = None,
) -> ResultTable:
    """Execute a query against an endpoint and parse the JSON results.

    Transient transport failures are retried ``retries`` times; timeouts
    and HTTP error statuses are surfaced as distinct error categories.
    """
    own_client = client is None
    if own_client:
        client = httpx.Client()
    try:
        attempt = 0
        while True:
            try:
                response = client.post(
                    url,
                    data={"query": query},
                    headers={"Accept": RESULTS_MEDIA_TYPE},
                    timeout=timeout,
                )
                break
            except httpx.TimeoutException as err:
                raise RemoteTimeoutError(f"query timed out after {timeout}s") from err
            except httpx.TransportError as err:
                if attempt < retries:
                    attempt += 1
                    continue
                raise TransportError(str(err)) from err
        if response.status_code >= 400:
            raise HttpStatusError(response.status_code, response.text[:200])
        try:
            doc = response.json()
        except ValueError as err:
            raise ResultsFormatError(f"response is not JSON: {err}") from err
        try:
            return table_from_json(doc)
        except MalformedResultsError as err:
            raise ResultsFormatError(str(err)) from err
    finally:
        if own_client:
            client.close()


@dataclass(frozen=True)
class SequenceFailure:
    sequence: tuple[str, ...]
    category: str
    message: str


@dataclass
class RemoteAnalysis:
    outlines: list[PathOutline]
    failures: list[SequenceFailure]


class _RemoteRun:
    def __init__(self, url, class_iri, prefixes, client, timeout, retries):
        self.url = url
        self.class_iri = class_iri
        self.prefixes = prefixes
        self.client = client
        self.timeout = timeout
        self.retries = retries
        self._values: dict[tuple[str, ...], list[Term]] = {}
        self._lock = threading.Lock()

    def _execute(self, query: ChainQuery) -> ResultTable:
        text = generate(query, self.prefixes)
        return remote_execute(self.url, text, self.timeout, self.retries, self.client)

    def entity_total(self) -> int:
        return self._execute(ChainQuery(ENTITY_TOTAL, self.class_iri)).single_int()

    def discover(self, sequence: tuple[str, ...]) -> list[str]:
        table = self._execute(ChainQuery(PREDICATE_DISCOVERY, self.class_iri, sequence))
        return [term.value for term in table.column("p")]

    def values(self, sequence: tuple[str, ...]) -> list[Term]:
        with self._lock:
            cached = self._values.get(sequence)
        if cached is not None:
            return cached
        table = self._execute(ChainQuery(TERMINAL_VALUES, self.class_iri, sequence))
        values = table.column("o")
        with self._lock:
            self._values[sequence] = values
        return values

    def covered(self, sequence: tuple[str, ...]) -> int:
        return self._execute(ChainQuery(COVERAGE_NUMERATOR, self.class_iri, sequence)).single_int()

    def sequence_outline(self, sequence: tuple[str, ...], total: int, dataset_id: str) -> PathOutline:
        depth = len(sequence)
        values = self.values(sequence)
        covered = self.covered(sequence)
        terminals = sorted(Counter(values).items(), key=lambda pair: pair[0].sort_key())
        measures = measures_from_terminals(depth, covered, total, terminals)

        positions = {}
        for i in range(1, depth + 1):
            prefix = sequence[:i]
            prefix_total = len(self.values(prefix))
            typed = Counter(t.value for t in self.values(prefix + (RDF_TYPE,)) if t.is_iri)
            counts = dict(typed)
            untyped = prefix_total - sum(counts.values())
            if untyped > 0:
                counts[UNTYPED] = untyped
            positions[i] = dict(sorted(counts.items()))

        template = PathTemplate(self.class_iri, sequence)
        return PathOutline(dataset_id, template, measures, positions)


def remote_analyze(
    endpoint_url: str,
    class_iri: str,
    depth: int,
    config: AnalysisConfig = DEFAULT_CONFIG,
    *,
    prefixes: PrefixMap | None = None,
    dataset_id: str = "remote",
    timeout: float = 10.0,
    retries: int = 1,
    max_workers: int = 4,
) -> RemoteAnalysis:
    """Rebuild the outlines of (class, depth) from an endpoint's answers.

    Equals the local analysis of the same data field for field; failed
    sequences are reported in ``failures`` with their error category.
    """
    if depth < 1 or depth > config.max_depth:
        raise ValueError(f"depth must be within 1..{config.max_depth}")
    pm = prefixes or PrefixMap()
    failures: list[SequenceFailure] = []
    outlines: list[PathOutline] = []
    with httpx.Client() as client:
        run = _RemoteRun(endpoint_url, class_iri, pm, client, timeout, retries)
        total = run.entity_total()

        frontier: list[tuple[str, ...]] = [()]
        for _ in range(depth):
            extended: list[tuple[str, ...]] = []
            for sequence in frontier:
                try:
                    predicates = run.discover(sequence)
                except RemoteError as err:
                    failures.append(SequenceFailure(sequence, err.category, f"predicate discovery failed: {err}"))
                    continue
                extended.extend(
                    sequence + (p,) for p in sorted(predicates) if p not in config.excluded_predicates
                )
            frontier = extended

        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            futures = {
                pool.submit(run.sequence_outline, sequence, total, dataset_id): sequence
                for sequence in frontier
            }
            for future in as_completed(futures):
                sequence = futures[future]
                try:
                    outlines.append(future.result())
                except RemoteError as err:
                    failures.append(SequenceFailure(sequence, err.category, str(err)))

    outlines.sort(key=lambda o: (-o.measures.coverage, format_template(o.template, pm)))
    failures.sort(key=lambda f: f.sequence)
    return RemoteAnalysis(outlines, failures)
