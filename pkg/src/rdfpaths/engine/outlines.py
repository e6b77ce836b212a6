"""Path enumeration and description.

The engine walks the indexed dataset level by level. Frontier entries
are keyed by (start entity, current node) with the number of distinct
path instantiations that reach the pair; triples are deduplicated at
build time, so the multiplicities count instantiation tuples exactly.

Intermediate type distributions are occurrence-weighted over the prefix
chain, and the "untyped" bucket is defined as
``max(0, prefix count - sum(typed counts))`` so that a remote analysis
built from chain queries reproduces the exact same numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..rdf.dataset import Dataset
from ..rdf.terms import Term
from ..template import PathTemplate, format_template
from .config import DEFAULT_CONFIG, AnalysisConfig
from .measures import Measures, empty_measures, measures_from_terminals

UNTYPED = "untyped"

# frontier: (start handle, node handle) -> instantiation count
_Frontier = dict[tuple[int, int], int]


class UnknownClassError(KeyError):
    pass


class DepthError(ValueError):
    pass


class LiteralEndpointError(ValueError):
    """Extension analysis of a path that only reaches literals."""


@dataclass(frozen=True)
class PathOutline:
    dataset_id: str
    template: PathTemplate
    measures: Measures
    intermediate_types: Mapping[int, Mapping[str, int]]


@dataclass(frozen=True)
class ExtensionOutline:
    base: PathTemplate
    target_dataset_id: str
    join_count: int
    extension_predicate: str
    measures: Measures


@dataclass(frozen=True)
class ExtensionAnalysis:
    join_count: int
    extensions: tuple[ExtensionOutline, ...]


def list_classes(ds: Dataset) -> list[tuple[str, int]]:
    """(class IRI, distinct entity count) pairs, largest class first."""
    counts = ds.classes()
    return sorted(counts.items(), key=lambda item: (-item[1], item[0]))


def _entity_set(ds: Dataset, class_iri: str) -> frozenset[int]:
    handle = ds.handle_for_iri(class_iri)
    if handle is None or not ds.is_class(handle):
        raise UnknownClassError(f"no class {class_iri!r} in dataset {ds.id!r}")
    return ds.class_members(handle)


def _typed_counts(ds: Dataset, frontier: _Frontier) -> tuple[int, dict[int, int]]:
    total = 0
    typed: dict[int, int] = {}
    for (_, node), mult in frontier.items():
        total += mult
        for cls in ds.types_of(node):
            typed[cls] = typed.get(cls, 0) + mult
    return total, typed


def _position_types(ds: Dataset, total: int, typed: dict[int, int]) -> dict[str, int]:
    out = {ds.term(cls).value: n for cls, n in typed.items()}
    untyped = total - sum(typed.values())
    if untyped > 0:
        out[UNTYPED] = untyped
    return dict(sorted(out.items()))


def _distinct_terminals(ds: Dataset, frontier: _Frontier) -> list[tuple[Term, int]]:
    per_node: dict[int, int] = {}
    for (_, node), mult in frontier.items():
        per_node[node] = per_node.get(node, 0) + mult
    pairs = [(ds.term(node), mult) for node, mult in per_node.items()]
    pairs.sort(key=lambda pair: pair[0].sort_key())
    return pairs


def _covered(frontier: _Frontier) -> int:
    return len({start for start, _ in frontier})


def enumerate_outlines(
    ds: Dataset,
    class_iri: str,
    depth: int,
    config: AnalysisConfig = DEFAULT_CONFIG,
) -> list[PathOutline]:
    """All outlines of exactly ``depth`` starting from the class members.

    One outline per predicate sequence instantiated by at least one
    entity; coverage counts entities missing the path as uncovered.
    Results are sorted by coverage descending, then template string.
    """
    if not 1 <= depth <= config.max_depth:
        raise DepthError(f"depth must be within 1..{config.max_depth}")
    members = _entity_set(ds, class_iri)
    excluded = {h for p in config.excluded_predicates if (h := ds.handle_for_iri(p)) is not None}

    level: dict[tuple[int, ...], _Frontier] = {(): {(s, s): 1 for s in members}}
    stats: dict[tuple[int, ...], tuple[int, dict[int, int]]] = {}
    for _ in range(depth):
        nxt: dict[tuple[int, ...], _Frontier] = {}
        for seq, frontier in level.items():
            for (start, node), mult in frontier.items():
                if ds.is_literal_handle(node):
                    continue
                for pred, obj in ds.outgoing(node):
                    if pred in excluded:
                        continue
                    new_seq = seq + (pred,)
                    bucket = nxt.get(new_seq)
                    if bucket is None:
                        bucket = nxt[new_seq] = {}
                    key = (start, obj)
                    bucket[key] = bucket.get(key, 0) + mult
        level = nxt
        for seq, frontier in level.items():
            stats[seq] = _typed_counts(ds, frontier)

    total = len(members)
    outlines = []
    for seq, frontier in level.items():
        template = PathTemplate(class_iri, tuple(ds.term(p).value for p in seq))
        measures = measures_from_terminals(
            depth, _covered(frontier), total, _distinct_terminals(ds, frontier)
        )
        positions = {
            i: _position_types(ds, *stats[seq[:i]]) for i in range(1, depth + 1)
        }
        outlines.append(PathOutline(ds.id, template, measures, positions))

    outlines.sort(key=lambda o: (-o.measures.coverage, format_template(o.template, ds.prefixes)))
    return outlines


def _walk_template(ds: Dataset, members: frozenset[int], template: PathTemplate) -> list[_Frontier]:
    """Frontiers after 0..depth steps of the template's fixed sequence."""
    frontier: _Frontier = {(s, s): 1 for s in members}
    frontiers = [frontier]
    for pred_iri in template.predicates:
        pred = ds.handle_for_iri(pred_iri)
        nxt: _Frontier = {}
        if pred is not None:
            for (start, node), mult in frontier.items():
                if ds.is_literal_handle(node):
                    continue
                for obj in ds.objects(pred, node):
                    key = (start, obj)
                    nxt[key] = nxt.get(key, 0) + mult
        frontier = nxt
        frontiers.append(frontier)
    return frontiers


def describe_outline(
    ds: Dataset,
    template: PathTemplate,
    config: AnalysisConfig = DEFAULT_CONFIG,
) -> PathOutline:
    """Measures for one given template; zeros if nothing instantiates it."""
    members = _entity_set(ds, template.start_class)
    frontiers = _walk_template(ds, members, template)
    final = frontiers[-1]
    if not final:
        return PathOutline(ds.id, template, empty_measures(template.depth), {})
    measures = measures_from_terminals(
        template.depth, _covered(final), len(members), _distinct_terminals(ds, final)
    )
    positions = {
        i: _position_types(ds, *_typed_counts(ds, frontiers[i]))
        for i in range(1, template.depth + 1)
    }
    return PathOutline(ds.id, template, measures, positions)


def terminal_values(
    ds: Dataset,
    template: PathTemplate,
    distinct: bool,
    config: AnalysisConfig = DEFAULT_CONFIG,
) -> list[Term]:
    """Terminal terms of the template: the set O, or the full multiset."""
    members = _entity_set(ds, template.start_class)
    final = _walk_template(ds, members, template)[-1]
    pairs = _distinct_terminals(ds, final)
    if distinct:
        return [term for term, _ in pairs]
    out = []
    for term, mult in pairs:
        out.extend([term] * mult)
    return out


def analyze_extensions(
    ds: Dataset,
    template: PathTemplate,
    target: Dataset,
    config: AnalysisConfig = DEFAULT_CONFIG,
) -> ExtensionAnalysis:
    """Join the path's terminal IRIs against ``target`` and analyze the
    one-statement extensions.

    Coverage of an extension keeps the original entity set as its
    denominator.
    """
    members = _entity_set(ds, template.start_class)
    final = _walk_template(ds, members, template)[-1]

    terminal_handles = {node for _, node in final}
    literal_handles = {h for h in terminal_handles if ds.is_literal_handle(h)}
    if terminal_handles and terminal_handles == literal_handles:
        raise LiteralEndpointError("path ends in literals only; nothing to join")

    joined: dict[int, int] = {}  # base handle -> target handle
    for h in terminal_handles - literal_handles:
        th = target.handle_for_iri(ds.term(h).value)
        if th is not None and target.is_subject(th):
            joined[h] = th

    excluded = {h for p in config.excluded_predicates if (h := target.handle_for_iri(p)) is not None}
    per_pred: dict[int, _Frontier] = {}
    for (start, node), mult in final.items():
        th = joined.get(node)
        if th is None:
            continue
        for pred, obj in target.outgoing(th):
            if pred in excluded:
                continue
            bucket = per_pred.setdefault(pred, {})
            key = (start, obj)
            bucket[key] = bucket.get(key, 0) + mult

    total = len(members)
    extensions = []
    for pred, frontier in per_pred.items():
        measures = measures_from_terminals(
            template.depth + 1, _covered(frontier), total, _distinct_terminals(target, frontier)
        )
        extensions.append(
            ExtensionOutline(template, target.id, len(joined), target.term(pred).value, measures)
        )
    extensions.sort(key=lambda e: (-e.measures.coverage, e.extension_predicate))
    return ExtensionAnalysis(len(joined), tuple(extensions))
