/** Typed client for the rdfpaths HTTP API. The UI never computes its own
 * statistics: every number it shows comes from one of these responses. */

export interface DatasetSummary {
  id: string;
  name: string;
  tripleCount: number;
  classCount: number;
  linkedDatasetIds: string[];
}

export interface ClassSummary {
  classIri: string;
  label: string;
  entityCount: number;
}

export interface Measures {
  depth: number;
  coverage: number;
  count: number;
  uniqueCount: number;
  endpointKind: string;
  datatypes: Record<string, number>;
  languages: Record<string, number>;
  minValue?: string;
  maxValue?: string;
}

export interface Outline {
  template: string;
  datasetId: string;
  measures: Measures;
  intermediateTypes: Record<string, Record<string, number>>;
}

export interface FeatureRanges {
  coverageMin?: number;
  coverageMax?: number;
  depths: number[];
  datatypes: string[];
  endpointKinds: string[];
  uniqueMin?: number;
  uniqueMax?: number;
}

export interface Bar {
  predicate: string;
  label: string;
  frequency: number;
  heightFraction: number;
}

export interface BrowserOutlineEntry {
  id: string;
  predicates: string[];
}

export interface BrowserModel {
  depth: number;
  columns: Bar[][];
  outlines: BrowserOutlineEntry[];
}

export interface OutlinesResponse {
  total: number;
  featureRanges: FeatureRanges;
  outlines: Outline[];
  browserModel: BrowserModel;
}

export interface LinkedDataset {
  id: string;
  name: string;
  predicate: string;
}

export interface SampleValue {
  type: string;
  value: string;
  datatype?: string;
  "xml:lang"?: string;
}

export interface Extension {
  predicate: string;
  label: string;
  targetDatasetId: string;
  joinCount: number;
  measures: Measures;
}

export interface Extensions {
  target: string;
  joinCount: number;
  extensions: Extension[];
}

export interface OutlineDetail {
  template: string;
  datasetId: string;
  measures: Measures;
  intermediateTypes: Record<string, Record<string, number>>;
  sampleValues: SampleValue[];
  linkedDatasets: LinkedDataset[];
  extensions?: Extensions;
}

export interface Point {
  x: number;
  y: number;
}

export interface Circle {
  x: number;
  y: number;
  r: number;
}

export interface DepthGroup {
  depth: number;
  p: Point;
  q: Point;
  greyCircle: Circle;
  pIntersections: Point[];
  qIntersections: Point[];
}

export interface Geometry {
  container: Circle;
  entityCircle: Circle;
  bacDegrees: number;
  dcp1Degrees: number;
  maxdepth: number;
  groups: DepthGroup[];
}

export interface OutlinesQuery {
  depth: number;
  minCoverage?: number;
  maxCoverage?: number;
  columns?: Record<number, string>; // q1..qn substrings
  kind?: string;
  datatype?: string;
}

export interface ApiClient {
  datasets(): Promise<DatasetSummary[]>;
  classes(datasetId: string): Promise<ClassSummary[]>;
  outlines(datasetId: string, classRef: string, query: OutlinesQuery, signal?: AbortSignal): Promise<OutlinesResponse>;
  outlineDetail(datasetId: string, template: string, target?: string): Promise<OutlineDetail>;
  outlineQuery(datasetId: string, template: string, shape: string): Promise<string>;
  layout(datasetId: string, classRef: string, maxdepth: number): Promise<Geometry>;
}

function outlinesParams(query: OutlinesQuery): URLSearchParams {
  const params = new URLSearchParams();
  params.set("depth", String(query.depth));
  if (query.minCoverage !== undefined) params.set("minCoverage", String(query.minCoverage));
  if (query.maxCoverage !== undefined) params.set("maxCoverage", String(query.maxCoverage));
  if (query.kind) params.set("kind", query.kind);
  if (query.datatype) params.set("datatype", query.datatype);
  for (const [column, text] of Object.entries(query.columns ?? {})) {
    if (text) params.set(`q${column}`, text);
  }
  return params;
}

export class HttpApiClient implements ApiClient {
  constructor(private readonly base: string = "") {}

  private async json<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await fetch(this.base + path, { signal });
    if (!response.ok) {
      throw new Error(`API ${response.status}: ${await response.text()}`);
    }
    return (await response.json()) as T;
  }

  datasets(): Promise<DatasetSummary[]> {
    return this.json("/api/datasets");
  }

  classes(datasetId: string): Promise<ClassSummary[]> {
    return this.json(`/api/datasets/${encodeURIComponent(datasetId)}/classes`);
  }

  outlines(datasetId: string, classRef: string, query: OutlinesQuery, signal?: AbortSignal): Promise<OutlinesResponse> {
    const params = outlinesParams(query);
    return this.json(
      `/api/datasets/${encodeURIComponent(datasetId)}/classes/${encodeURIComponent(classRef)}/outlines?${params}`,
      signal,
    );
  }

  outlineDetail(datasetId: string, template: string, target?: string): Promise<OutlineDetail> {
    const params = new URLSearchParams({ template });
    if (target) params.set("target", target);
    return this.json(`/api/datasets/${encodeURIComponent(datasetId)}/outline?${params}`);
  }

  async outlineQuery(datasetId: string, template: string, shape: string): Promise<string> {
    const params = new URLSearchParams({ template, shape });
    const response = await fetch(
      `${this.base}/api/datasets/${encodeURIComponent(datasetId)}/outline/sparql?${params}`,
    );
    if (!response.ok) {
      throw new Error(`API ${response.status}: ${await response.text()}`);
    }
    return response.text();
  }

  layout(datasetId: string, classRef: string, maxdepth: number): Promise<Geometry> {
    return this.json(
      `/api/datasets/${encodeURIComponent(datasetId)}/classes/${encodeURIComponent(classRef)}/layout?maxdepth=${maxdepth}`,
    );
  }
}

export { outlinesParams };
