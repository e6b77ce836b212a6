"""The path browser model: per-position property bars over an outline set.

Bars aggregate outlines by the predicate they use at a position; bar
height encodes the share of outlines going through that predicate, so
per column the fractions sum to 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..engine.outlines import PathOutline
from ..rdf.prefixes import PrefixMap
from ..template import format_template


class BrowserModelError(ValueError):
    pass


@dataclass(frozen=True)
class Bar:
    predicate: str
    label: str
    frequency: int
    height_fraction: float


@dataclass(frozen=True)
class OutlineEntry:
    id: str  # canonical template string
    predicates: tuple[str, ...]


@dataclass(frozen=True)
class BrowserModel:
    depth: int
    columns: tuple[tuple[Bar, ...], ...]
    outlines: tuple[OutlineEntry, ...]

    def bar(self, column: int, predicate: str) -> Bar:
        for bar in self.columns[column - 1]:
            if bar.predicate == predicate:
                return bar
        raise BrowserModelError(f"no bar for predicate {predicate!r} in column {column}")


def build_browser_model(
    outlines: list[PathOutline],
    depth: int,
    prefixes: PrefixMap | None = None,
) -> BrowserModel:
    """Aggregate same-depth outlines into columns of property bars."""
    pm = prefixes or PrefixMap()
    entries = []
    for outline in outlines:
        if outline.template.depth != depth:
            raise BrowserModelError(
                f"outline depth {outline.template.depth} does not match model depth {depth}"
            )
        entries.append(OutlineEntry(format_template(outline.template, pm), outline.template.predicates))

    total = len(entries)
    columns = []
    for position in range(depth):
        frequencies: dict[str, int] = {}
        for entry in entries:
            pred = entry.predicates[position]
            frequencies[pred] = frequencies.get(pred, 0) + 1
        bars = [
            Bar(pred, pm.compact(pred), freq, freq / total)
            for pred, freq in frequencies.items()
        ]
        bars.sort(key=lambda b: (-b.frequency, b.predicate))
        columns.append(tuple(bars))
    return BrowserModel(depth, tuple(columns), tuple(entries))


@dataclass(frozen=True)
class HighlightResult:
    matching_ids: tuple[str, ...]
    columns: tuple[frozenset[str], ...]  # highlighted predicate IRIs per column


def highlight(model: BrowserModel, column: int, predicate: str) -> HighlightResult:
    """All outlines through (column, predicate) and the predicates they
    touch in every column."""
    model.bar(column, predicate)  # raises on unknown bars
    matching = [e for e in model.outlines if e.predicates[column - 1] == predicate]
    highlighted = tuple(
        frozenset(e.predicates[position] for e in matching) for position in range(model.depth)
    )
    return HighlightResult(tuple(e.id for e in matching), highlighted)


@dataclass(frozen=True)
class PatternColumn:
    """One column's constraint: an exact predicate or a name substring."""

    predicate: str | None = None
    substring: str | None = None


def _entry_matches(entry: OutlineEntry, pattern: dict[int, PatternColumn], pm: PrefixMap) -> bool:
    for column, constraint in pattern.items():
        pred = entry.predicates[column - 1]
        if constraint.predicate is not None and pred != constraint.predicate:
            return False
        if constraint.substring is not None:
            if constraint.substring.lower() not in pm.compact(pred).lower():
                return False
    return True


def apply_pattern(
    model: BrowserModel,
    pattern: dict[int, PatternColumn],
    outlines: list[PathOutline],
    prefixes: PrefixMap | None = None,
) -> tuple[BrowserModel, list[PathOutline]]:
    """Filter outlines by a per-column pattern and rebuild the model.

    ``outlines`` must be the list the model was built from; survivors are
    returned alongside the reduced model (frequencies recomputed).
    """
    pm = prefixes or PrefixMap()
    for column in pattern:
        if not 1 <= column <= model.depth:
            raise BrowserModelError(f"pattern column {column} outside 1..{model.depth}")
    if len(outlines) != len(model.outlines):
        raise BrowserModelError("outline list does not match the model")

    survivors = [
        outline
        for entry, outline in zip(model.outlines, outlines)
        if _entry_matches(entry, pattern, pm)
    ]
    if not survivors:
        return BrowserModel(model.depth, tuple(() for _ in range(model.depth)), ()), []
    return build_browser_model(survivors, model.depth, pm), survivors
