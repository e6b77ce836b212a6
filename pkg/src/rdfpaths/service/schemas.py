"""Pydantic response models for the HTTP API."""
from __future__ import annotations

from pydantic import BaseModel


class DatasetSummary(BaseModel):
    id: str
    name: str
    tripleCount: int
    classCount: int
    linkedDatasetIds: list[str]


class ClassSummary(BaseModel):
    classIri: str
    label: str
    entityCount: int


class MeasuresModel(BaseModel):
    depth: int
    coverage: float
    count: int
    uniqueCount: int
    endpointKind: str
    datatypes: dict[str, int]
    languages: dict[str, int]
    minValue: str | None = None
    maxValue: str | None = None


class OutlineModel(BaseModel):
    template: str
    datasetId: str
    measures: MeasuresModel
    intermediateTypes: dict[str, dict[str, int]]


class FeatureRangesModel(BaseModel):
    coverageMin: float | None = None
    coverageMax: float | None = None
    depths: list[int] = []
    datatypes: list[str] = []
    endpointKinds: list[str] = []
    uniqueMin: int | None = None
    uniqueMax: int | None = None


class BarModel(BaseModel):
    predicate: str
    label: str
    frequency: int
    heightFraction: float


class BrowserOutlineEntry(BaseModel):
    id: str
    predicates: list[str]


class BrowserModelResponse(BaseModel):
    depth: int
    columns: list[list[BarModel]]
    outlines: list[BrowserOutlineEntry]


class OutlinesResponse(BaseModel):
    total: int
    featureRanges: FeatureRangesModel
    outlines: list[OutlineModel]
    browserModel: BrowserModelResponse


class LinkedDatasetModel(BaseModel):
    id: str
    name: str
    predicate: str


class ExtensionModel(BaseModel):
    predicate: str
    label: str
    targetDatasetId: str
    joinCount: int
    measures: MeasuresModel


class ExtensionsModel(BaseModel):
    target: str
    joinCount: int
    extensions: list[ExtensionModel]


class OutlineDetail(BaseModel):
    template: str
    datasetId: str
    measures: MeasuresModel
    intermediateTypes: dict[str, dict[str, int]]
    sampleValues: list[dict]
    linkedDatasets: list[LinkedDatasetModel]
    extensions: ExtensionsModel | None = None


class PointModel(BaseModel):
    x: float
    y: float


class CircleModel(BaseModel):
    x: float
    y: float
    r: float


class DepthGroupModel(BaseModel):
    depth: int
    p: PointModel
    q: PointModel
    greyCircle: CircleModel
    pIntersections: list[PointModel]
    qIntersections: list[PointModel]


class GeometryResponse(BaseModel):
    container: CircleModel
    entityCircle: CircleModel
    bacDegrees: float
    dcp1Degrees: float
    maxdepth: int
    groups: list[DepthGroupModel]


class ErrorBody(BaseModel):
    code: str
    message: str
    detail: str = ""
