"""Write-once summary cache for enumeration results.

One document per (dataset, class, depth), keyed by a content hash of
the dataset plus an analysis-config fingerprint; stale entries are
ignored, never served. Documents are byte-identical across runs:
fixed field order and coverage printed with two decimals.
"""
from __future__ import annotations

import hashlib
import json
import os
import re
from pathlib import Path

from .engine.config import AnalysisConfig
from .engine.outlines import PathOutline
from .rdf.dataset import Dataset
from .serialize import outline_from_dict, outline_to_dict

CACHE_VERSION = 1

_UNSAFE = re.compile(r"[^A-Za-z0-9_.-]+")


def _config_fingerprint(config: AnalysisConfig) -> str:
    doc = json.dumps(
        {"maxDepth": config.max_depth, "excludedPredicates": sorted(config.excluded_predicates)},
        sort_keys=True,
    )
    return hashlib.sha256(doc.encode("utf-8")).hexdigest()


def _entry_coverage_out(outline_doc: dict) -> dict:
    doc = dict(outline_doc)
    measures = dict(doc["measures"])
    measures["coverage"] = f"{measures['coverage']:.2f}"
    doc["measures"] = measures
    return doc


def _entry_coverage_in(outline_doc: dict) -> dict:
    doc = dict(outline_doc)
    measures = dict(doc["measures"])
    measures["coverage"] = float(measures["coverage"])
    doc["measures"] = measures
    return doc


class SummaryCache:
    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path(self, dataset_id: str, class_iri: str, depth: int) -> Path:
        class_key = hashlib.sha256(class_iri.encode("utf-8")).hexdigest()[:12]
        safe_id = _UNSAFE.sub("_", dataset_id)
        return self.directory / f"{safe_id}__{class_key}__d{depth}.json"

    def load(
        self,
        dataset: Dataset,
        class_iri: str,
        depth: int,
        config: AnalysisConfig,
    ) -> list[PathOutline] | None:
        path = self._path(dataset.id, class_iri, depth)
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            return None
        if (
            raw.get("version") != CACHE_VERSION
            or raw.get("datasetHash") != dataset.content_hash
            or raw.get("configHash") != _config_fingerprint(config)
            or raw.get("class") != class_iri
            or raw.get("depth") != depth
        ):
            return None
        return [outline_from_dict(_entry_coverage_in(doc)) for doc in raw["outlines"]]

    def store(
        self,
        dataset: Dataset,
        class_iri: str,
        depth: int,
        config: AnalysisConfig,
        outlines: list[PathOutline],
    ) -> None:
        doc = {
            "version": CACHE_VERSION,
            "datasetHash": dataset.content_hash,
            "configHash": _config_fingerprint(config),
            "class": class_iri,
            "depth": depth,
            "outlines": [_entry_coverage_out(outline_to_dict(o)) for o in outlines],
        }
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(dataset.id, class_iri, depth)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(doc, ensure_ascii=False, separators=(",", ":")) + "\n", encoding="utf-8")
        os.replace(tmp, path)
