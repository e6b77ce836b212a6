"""Filtering outlines and summarizing the available feature ranges."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from ..rdf.prefixes import PrefixMap
from .outlines import PathOutline


@dataclass(frozen=True)
class FilterSpec:
    """Conjunction of optional criteria; absent fields match everything."""

    min_coverage: float | None = None
    max_coverage: float | None = None
    columns: Mapping[int, str] = field(default_factory=dict)  # 1-based position -> name substring
    datatypes: frozenset[str] | None = None
    endpoint_kinds: frozenset[str] | None = None
    min_unique: int | None = None
    max_unique: int | None = None

    def __post_init__(self):
        if (
            self.min_coverage is not None
            and self.max_coverage is not None
            and self.min_coverage > self.max_coverage
        ):
            raise ValueError("malformed coverage range: min > max")
        if (
            self.min_unique is not None
            and self.max_unique is not None
            and self.min_unique > self.max_unique
        ):
            raise ValueError("malformed uniqueCount range: min > max")


def _column_matches(outline: PathOutline, position: int, needle: str, prefixes: PrefixMap | None) -> bool:
    if position < 1 or position > outline.template.depth:
        return False
    pred = outline.template.predicates[position - 1]
    name = prefixes.compact(pred) if prefixes is not None else pred
    return needle.lower() in name.lower()


def matches(outline: PathOutline, spec: FilterSpec, prefixes: PrefixMap | None = None) -> bool:
    m = outline.measures
    if spec.min_coverage is not None and m.coverage < spec.min_coverage:
        return False
    if spec.max_coverage is not None and m.coverage > spec.max_coverage:
        return False
    if spec.min_unique is not None and m.unique_count < spec.min_unique:
        return False
    if spec.max_unique is not None and m.unique_count > spec.max_unique:
        return False
    if spec.endpoint_kinds is not None and m.endpoint_kind not in spec.endpoint_kinds:
        return False
    if spec.datatypes is not None and not (spec.datatypes & set(m.datatypes)):
        return False
    for position, needle in spec.columns.items():
        if not _column_matches(outline, position, needle, prefixes):
            return False
    return True


def filter_outlines(
    outlines: list[PathOutline],
    spec: FilterSpec,
    prefixes: PrefixMap | None = None,
) -> list[PathOutline]:
    """Keep outlines satisfying every present criterion, order preserved."""
    return [o for o in outlines if matches(o, spec, prefixes)]


@dataclass(frozen=True)
class FeatureRanges:
    coverage_min: float | None = None
    coverage_max: float | None = None
    depths: tuple[int, ...] = ()
    datatypes: tuple[str, ...] = ()
    endpoint_kinds: tuple[str, ...] = ()
    unique_min: int | None = None
    unique_max: int | None = None


def feature_ranges(outlines: list[PathOutline]) -> FeatureRanges:
    """Overview of the value ranges present in an outline list."""
    if not outlines:
        return FeatureRanges()
    coverages = [o.measures.coverage for o in outlines]
    uniques = [o.measures.unique_count for o in outlines]
    datatypes: set[str] = set()
    kinds: set[str] = set()
    depths: set[int] = set()
    for o in outlines:
        datatypes.update(o.measures.datatypes)
        kinds.add(o.measures.endpoint_kind)
        depths.add(o.measures.depth)
    return FeatureRanges(
        coverage_min=min(coverages),
        coverage_max=max(coverages),
        depths=tuple(sorted(depths)),
        datatypes=tuple(sorted(datatypes)),
        endpoint_kinds=tuple(sorted(kinds)),
        unique_min=min(uniques),
        unique_max=max(uniques),
    )
