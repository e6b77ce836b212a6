"""HTTP facade over the analysis engine.

Every numeric field in a response is the engine's value verbatim; no
rounding happens here. Filter semantics on the outlines listing are
identical to filter_outlines composed with the browser pattern (the
q1..qn per-column substrings).
"""
from __future__ import annotations

import re
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from ..cache import SummaryCache
from ..engine import (
    DepthError,
    FilterSpec,
    LiteralEndpointError,
    UnknownClassError,
    analyze_extensions,
    enumerate_outlines,
    describe_outline,
    feature_ranges,
    filter_outlines,
    list_classes,
    terminal_values,
)
from ..layout import Circle, GeometryError, PatternColumn, apply_pattern, broken_lines_layout, build_browser_model
from ..registry import Registry
from ..rdf import UnknownDatasetError, resolve_iri
from ..rdf.prefixes import PrefixError, WELL_KNOWN
from ..serialize import extension_to_dict, outline_to_dict, term_to_dict
from ..sparql import SHAPES, ChainQuery, create_sparql_router, generate
from ..template import TemplateError, format_template, parse_template
from . import schemas

MAX_PAGE = 1000
_COLUMN_PARAM = re.compile(r"^q(\d+)$")


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail: str = ""):
        super().__init__(message)
        self.status = status
        self.body = schemas.ErrorBody(code=code, message=message, detail=detail)


def _geometry_response(geometry) -> schemas.GeometryResponse:
    def point(p):
        return schemas.PointModel(x=p.x, y=p.y)

    def circle(c):
        return schemas.CircleModel(x=c.x, y=c.y, r=c.r)

    return schemas.GeometryResponse(
        container=circle(geometry.container),
        entityCircle=circle(geometry.entity_circle),
        bacDegrees=geometry.bac_degrees,
        dcp1Degrees=geometry.dcp1_degrees,
        maxdepth=geometry.maxdepth,
        groups=[
            schemas.DepthGroupModel(
                depth=g.depth,
                p=point(g.p),
                q=point(g.q),
                greyCircle=circle(g.grey_circle),
                pIntersections=[point(p) for p in g.p_intersections],
                qIntersections=[point(p) for p in g.q_intersections],
            )
            for g in geometry.groups
        ],
    )


def create_app(registry: Registry, ui_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="rdfpaths", version="0.1.0")
    config = registry.config
    cache = SummaryCache(config.cache_dir) if config.cache_dir else None

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, err: ApiError):
        return JSONResponse(err.body.model_dump(), status_code=err.status)

    def dataset_or_404(dataset_id: str):
        try:
            return registry.get(dataset_id)
        except UnknownDatasetError:
            raise ApiError(404, "unknown-dataset", f"unknown dataset {dataset_id!r}")

    def class_iri_or_404(ds, raw: str) -> str:
        try:
            class_iri = resolve_iri(raw, ds.prefixes.merged(WELL_KNOWN))
        except PrefixError as err:
            raise ApiError(404, "unknown-class", f"cannot resolve class {raw!r}", str(err))
        if class_iri not in ds.classes():
            raise ApiError(404, "unknown-class", f"no class {class_iri!r} in dataset {ds.id!r}")
        return class_iri

    def template_or_400(ds, text: str):
        try:
            return parse_template(text, ds.prefixes.merged(WELL_KNOWN))
        except TemplateError as err:
            raise ApiError(400, "bad-template", f"malformed template {text!r}", str(err))

    def outlines_for(ds, class_iri: str, depth: int):
        if cache is not None:
            cached = cache.load(ds, class_iri, depth, config.analysis)
            if cached is not None:
                return cached
        outlines = enumerate_outlines(ds, class_iri, depth, config.analysis)
        if cache is not None:
            cache.store(ds, class_iri, depth, config.analysis, outlines)
        return outlines

    @app.get("/api/datasets", response_model=list[schemas.DatasetSummary])
    def datasets():
        return [
            schemas.DatasetSummary(
                id=ds.id,
                name=ds.name,
                tripleCount=ds.triple_count,
                classCount=ds.class_count,
                linkedDatasetIds=[link.target_id for link in ds.links],
            )
            for ds in registry.datasets()
        ]

    @app.get("/api/datasets/{dataset_id}/classes", response_model=list[schemas.ClassSummary])
    def classes(dataset_id: str):
        ds = dataset_or_404(dataset_id)
        return [
            schemas.ClassSummary(classIri=class_iri, label=ds.prefixes.compact(class_iri), entityCount=count)
            for class_iri, count in list_classes(ds)
        ]

    @app.get(
        "/api/datasets/{dataset_id}/classes/{class_ref:path}/outlines",
        response_model=schemas.OutlinesResponse,
        response_model_exclude_none=True,
    )
    def outlines(
        dataset_id: str,
        class_ref: str,
        request: Request,
        depth: int = 1,
        minCoverage: float | None = None,
        maxCoverage: float | None = None,
        datatype: str | None = None,
        kind: str | None = None,
        limit: int = 100,
        offset: int = 0,
    ):
        ds = dataset_or_404(dataset_id)
        class_iri = class_iri_or_404(ds, class_ref)
        if not 1 <= depth <= config.analysis.max_depth:
            raise ApiError(400, "bad-depth", f"depth must be within 1..{config.analysis.max_depth}")
        if not 0 <= limit <= MAX_PAGE:
            raise ApiError(400, "bad-pagination", f"limit must be within 0..{MAX_PAGE}")
        if offset < 0:
            raise ApiError(400, "bad-pagination", "offset must be non-negative")

        every = outlines_for(ds, class_iri, depth)
        ranges = feature_ranges(every)

        pattern = {}
        for name, value in request.query_params.items():
            m = _COLUMN_PARAM.match(name)
            if m and value:
                column = int(m.group(1))
                if not 1 <= column <= depth:
                    raise ApiError(400, "bad-filter", f"column filter {name} outside 1..{depth}")
                pattern[column] = PatternColumn(substring=value)

        survivors = every
        if pattern:
            model = build_browser_model(every, depth, ds.prefixes)
            _, survivors = apply_pattern(model, pattern, every, ds.prefixes)

        prefixes = ds.prefixes.merged(WELL_KNOWN)
        try:
            spec = FilterSpec(
                min_coverage=minCoverage,
                max_coverage=maxCoverage,
                datatypes=frozenset(resolve_iri(d, prefixes) for d in datatype.split(",")) if datatype else None,
                endpoint_kinds=frozenset(kind.split(",")) if kind else None,
            )
        except (ValueError, PrefixError) as err:
            raise ApiError(400, "bad-filter", "malformed filter", str(err))
        filtered = filter_outlines(survivors, spec, ds.prefixes)

        browser = build_browser_model(filtered, depth, ds.prefixes)
        page = filtered[offset : offset + limit]
        return schemas.OutlinesResponse(
            total=len(filtered),
            featureRanges=schemas.FeatureRangesModel(
                coverageMin=ranges.coverage_min,
                coverageMax=ranges.coverage_max,
                depths=list(ranges.depths),
                datatypes=[ds.prefixes.compact(d) for d in ranges.datatypes],
                endpointKinds=list(ranges.endpoint_kinds),
                uniqueMin=ranges.unique_min,
                uniqueMax=ranges.unique_max,
            ),
            outlines=[schemas.OutlineModel(**outline_to_dict(o, ds.prefixes)) for o in page],
            browserModel=schemas.BrowserModelResponse(
                depth=browser.depth,
                columns=[
                    [
                        schemas.BarModel(
                            predicate=b.predicate,
                            label=b.label,
                            frequency=b.frequency,
                            heightFraction=b.height_fraction,
                        )
                        for b in column
                    ]
                    for column in browser.columns
                ],
                outlines=[
                    schemas.BrowserOutlineEntry(id=e.id, predicates=list(e.predicates))
                    for e in browser.outlines
                ],
            ),
        )

    @app.get(
        "/api/datasets/{dataset_id}/outline",
        response_model=schemas.OutlineDetail,
        response_model_exclude_none=True,
    )
    def outline_detail(dataset_id: str, template: str, target: str | None = None):
        ds = dataset_or_404(dataset_id)
        parsed = template_or_400(ds, template)
        try:
            outline = describe_outline(ds, parsed, config.analysis)
        except UnknownClassError as err:
            raise ApiError(404, "unknown-class", str(err))
        samples = terminal_values(ds, parsed, distinct=True, config=config.analysis)[:20]

        extensions = None
        if target is not None:
            if target not in {link.target_id for link in ds.links}:
                raise ApiError(
                    400,
                    "not-linked",
                    f"dataset {target!r} is not declared as a link target of {ds.id!r}",
                )
            target_ds = dataset_or_404(target)
            try:
                analysis = analyze_extensions(ds, parsed, target_ds, config.analysis)
            except LiteralEndpointError as err:
                raise ApiError(400, "literal-endpoint", str(err))
            extensions = schemas.ExtensionsModel(
                target=target,
                joinCount=analysis.join_count,
                extensions=[
                    schemas.ExtensionModel(**extension_to_dict(e, target_ds.prefixes))
                    for e in analysis.extensions
                ],
            )

        doc = outline_to_dict(outline, ds.prefixes)
        return schemas.OutlineDetail(
            **doc,
            sampleValues=[term_to_dict(t) for t in samples],
            linkedDatasets=[
                schemas.LinkedDatasetModel(
                    id=link.target_id,
                    name=registry.get(link.target_id).name if link.target_id in registry else link.target_id,
                    predicate=link.predicate,
                )
                for link in ds.links
            ],
            extensions=extensions,
        )

    @app.get("/api/datasets/{dataset_id}/outline/sparql", response_class=PlainTextResponse)
    def outline_sparql(dataset_id: str, template: str, shape: str, request: Request, target: str | None = None):
        ds = dataset_or_404(dataset_id)
        if shape not in SHAPES:
            raise ApiError(400, "bad-shape", f"unsupported query shape {shape!r}")
        parsed = template_or_400(ds, template)
        service = None
        if shape == "extension-discovery":
            if target is None:
                raise ApiError(400, "bad-shape", "extension-discovery needs a target dataset")
            service = str(request.base_url) + f"ds/{target}/sparql"
        query = ChainQuery(shape, parsed.start_class, parsed.predicates, service=service)
        return PlainTextResponse(generate(query, ds.prefixes), media_type="text/plain")

    @app.get(
        "/api/datasets/{dataset_id}/classes/{class_ref:path}/layout",
        response_model=schemas.GeometryResponse,
    )
    def layout(dataset_id: str, class_ref: str, maxdepth: int | None = None):
        ds = dataset_or_404(dataset_id)
        class_iri_or_404(ds, class_ref)
        depth = maxdepth if maxdepth is not None else config.analysis.max_depth
        try:
            geometry = broken_lines_layout(
                Circle(0.0, 0.0, config.layout_radius),
                config.bac_degrees,
                config.dcp1_degrees,
                depth,
            )
        except GeometryError as err:
            raise ApiError(400, "bad-geometry", str(err))
        return _geometry_response(geometry)

    app.include_router(create_sparql_router(registry))

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
