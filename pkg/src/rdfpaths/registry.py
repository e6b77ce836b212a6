"""Dataset registry and manifest loading.

A manifest is a JSON document:

    {
      "config": {"maxDepth": 3, "excludedPredicates": ["rdf:type"],
                 "BAC": 0, "DCP1": 20, "layoutRadius": 300,
                 "cacheDir": "cache"},
      "datasets": [
        {"id": "nobel", "name": "Nobel", "files": ["nobel.ttl"],
         "prefixes": {"n": "http://nobel.example.org/"},
         "links": [{"target": "dbp", "predicate": "owl:sameAs"}]}
      ]
    }

File formats are chosen by extension: .nt / .ntriples for N-Triples,
anything else is parsed as the Turtle subset. Relative file paths are
resolved against the manifest's directory.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .engine.config import AnalysisConfig
from .rdf import (
    Dataset,
    DatasetLink,
    DuplicateDatasetError,
    PrefixMap,
    UnknownDatasetError,
    WELL_KNOWN,
    build_dataset,
    parse_ntriples,
    parse_turtle,
    resolve_iri,
)


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class ServiceConfig:
    """Analysis plus presentation settings carried by the manifest."""

    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    bac_degrees: float = 0.0
    dcp1_degrees: float = 20.0
    layout_radius: float = 300.0
    cache_dir: Path | None = None


class Registry:
    """Immutable collection of datasets loaded from one manifest."""

    def __init__(self, datasets: list[Dataset], config: ServiceConfig):
        self._datasets: dict[str, Dataset] = {}
        for ds in datasets:
            if ds.id in self._datasets:
                raise DuplicateDatasetError(f"duplicate dataset id {ds.id!r}")
            self._datasets[ds.id] = ds
        self.config = config

    def ids(self) -> list[str]:
        return list(self._datasets)

    def get(self, dataset_id: str) -> Dataset:
        try:
            return self._datasets[dataset_id]
        except KeyError:
            raise UnknownDatasetError(f"unknown dataset {dataset_id!r}") from None

    def __contains__(self, dataset_id: str) -> bool:
        return dataset_id in self._datasets

    def datasets(self) -> list[Dataset]:
        return list(self._datasets.values())


def _parse_config(raw: dict) -> ServiceConfig:
    excluded = raw.get("excludedPredicates")
    if excluded is None:
        analysis = AnalysisConfig(max_depth=int(raw.get("maxDepth", 3)))
    else:
        analysis = AnalysisConfig(
            max_depth=int(raw.get("maxDepth", 3)),
            excluded_predicates=frozenset(resolve_iri(p, WELL_KNOWN) for p in excluded),
        )
    cache_dir = raw.get("cacheDir")
    return ServiceConfig(
        analysis=analysis,
        bac_degrees=float(raw.get("BAC", 0.0)),
        dcp1_degrees=float(raw.get("DCP1", 20.0)),
        layout_radius=float(raw.get("layoutRadius", 300.0)),
        cache_dir=Path(cache_dir) if cache_dir else None,
    )


def _load_triples(path: Path, prefixes: PrefixMap):
    text = path.read_text(encoding="utf-8")
    if path.suffix in (".nt", ".ntriples"):
        return parse_ntriples(text)
    file_prefixes, triples = parse_turtle(text)
    for label, ns in file_prefixes.bindings().items():
        if label not in prefixes:
            prefixes.bind(label, ns)
    return triples


def validate_manifest(path: str | Path) -> tuple[list[str], list[str]]:
    """Check a manifest and its files; returns (report lines, violations).

    Unlike ``load_manifest`` this does not stop at the first problem.
    """
    path = Path(path)
    report: list[str] = []
    violations: list[str] = []
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as err:
        return report, [f"manifest unreadable: {err}"]
    entries = raw.get("datasets")
    if not isinstance(entries, list):
        return report, ["manifest must contain a 'datasets' list"]
    try:
        _parse_config(raw.get("config", {}))
    except (ValueError, KeyError) as err:
        violations.append(f"config: {err}")

    ids = [entry.get("id") for entry in entries if isinstance(entry, dict)]
    for dupe in sorted({i for i in ids if i and ids.count(i) > 1}):
        violations.append(f"duplicate dataset id {dupe!r}")

    for entry in entries:
        if not isinstance(entry, dict) or not entry.get("id"):
            violations.append("dataset entry without an id")
            continue
        dataset_id = entry["id"]
        try:
            prefixes = PrefixMap(entry.get("prefixes", {}))
        except ValueError as err:
            violations.append(f"{dataset_id}: bad prefixes: {err}")
            prefixes = PrefixMap()
        triples = []
        for name in entry.get("files", []):
            file_path = Path(name)
            if not file_path.is_absolute():
                file_path = path.parent / file_path
            if not file_path.exists():
                violations.append(f"{dataset_id}: file not found: {file_path}")
                continue
            try:
                triples.extend(_load_triples(file_path, prefixes))
            except ValueError as err:
                violations.append(f"{dataset_id}: {file_path.name}: {err}")
        for link in entry.get("links", []):
            target = link.get("target") if isinstance(link, dict) else None
            if target not in ids:
                violations.append(f"{dataset_id}: link to unknown dataset {target!r}")
        ds = Dataset(dataset_id, entry.get("name", dataset_id), triples, prefixes)
        report.append(
            f"{dataset_id}: {ds.triple_count} triples, {ds.class_count} classes, "
            f"{len(entry.get('links', []))} links"
        )
    return report, violations


def load_manifest(path: str | Path) -> Registry:
    """Parse and validate a manifest, loading every dataset file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except OSError as err:
        raise ManifestError(f"cannot read manifest: {err}") from err
    except json.JSONDecodeError as err:
        raise ManifestError(f"manifest is not valid JSON: {err}") from err

    if not isinstance(raw, dict) or not isinstance(raw.get("datasets"), list):
        raise ManifestError("manifest must be an object with a 'datasets' list")
    config = _parse_config(raw.get("config", {}))
    if config.cache_dir is not None and not config.cache_dir.is_absolute():
        config = ServiceConfig(
            analysis=config.analysis,
            bac_degrees=config.bac_degrees,
            dcp1_degrees=config.dcp1_degrees,
            layout_radius=config.layout_radius,
            cache_dir=path.parent / config.cache_dir,
        )

    entries = raw["datasets"]
    ids = [entry.get("id") for entry in entries]
    if any(not i for i in ids):
        raise ManifestError("every dataset needs a non-empty id")
    if len(set(ids)) != len(ids):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise DuplicateDatasetError(f"duplicate dataset id(s): {', '.join(dupes)}")

    datasets = []
    for entry in entries:
        prefixes = PrefixMap(entry.get("prefixes", {}))
        triples = []
        for name in entry.get("files", []):
            file_path = Path(name)
            if not file_path.is_absolute():
                file_path = path.parent / file_path
            if not file_path.exists():
                raise ManifestError(f"dataset {entry['id']!r}: file not found: {file_path}")
            triples.extend(_load_triples(file_path, prefixes))
        links = [
            DatasetLink(link["target"], resolve_iri(link["predicate"], prefixes.merged(WELL_KNOWN)))
            for link in entry.get("links", [])
        ]
        datasets.append(
            build_dataset(
                entry["id"],
                entry.get("name", entry["id"]),
                triples,
                prefixes,
                links,
                known_ids=ids,
            )
        )
    return Registry(datasets, config)
