/** ApiClient backed by recorded responses; every served document is
 * logged so tests can compare displayed values against exactly what the
 * "network" returned. */
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type {
  ApiClient,
  ClassSummary,
  DatasetSummary,
  Geometry,
  OutlineDetail,
  OutlinesQuery,
  OutlinesResponse,
} from "../src/api.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

function load<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, name), "utf-8")) as T;
}

export interface ServedCall {
  method: string;
  key: string;
  body: unknown;
}

export class RecordingApiClient implements ApiClient {
  served: ServedCall[] = [];
  delays: Record<string, number> = {};

  last<T>(method: string): T {
    const calls = this.served.filter((c) => c.method === method);
    if (calls.length === 0) throw new Error(`no recorded ${method} call`);
    return calls[calls.length - 1].body as T;
  }

  private async serve<T>(method: string, key: string, body: T): Promise<T> {
    const delay = this.delays[method] ?? 0;
    if (delay > 0) await new Promise((resolve) => setTimeout(resolve, delay));
    this.served.push({ method, key, body });
    return body;
  }

  datasets(): Promise<DatasetSummary[]> {
    return this.serve("datasets", "", load("datasets.json"));
  }

  classes(datasetId: string): Promise<ClassSummary[]> {
    if (datasetId !== "nobel") throw new Error(`no classes fixture for ${datasetId}`);
    return this.serve("classes", datasetId, load("classes_nobel.json"));
  }

  outlines(
    datasetId: string,
    classRef: string,
    query: OutlinesQuery,
    signal?: AbortSignal,
  ): Promise<OutlinesResponse> {
    if (signal?.aborted) return Promise.reject(new DOMException("aborted", "AbortError"));
    const columns = query.columns ?? {};
    const key = JSON.stringify({ depth: query.depth, maxCoverage: query.maxCoverage, columns });
    let name: string;
    if (query.depth === 1 && query.maxCoverage === 60) name = "outlines_d1_lowcov.json";
    else if (query.depth === 1) name = "outlines_d1.json";
    else if (query.depth === 3 && columns[1] === "affiliation" && columns[2] === "n:city" && columns[3] === "owl:sameAs")
      name = "outlines_d3_pattern_full.json";
    else if (query.depth === 3 && columns[1] === "affiliation" && Object.keys(columns).length === 1)
      name = "outlines_d3_q1affiliation.json";
    else if (query.depth === 3 && Object.keys(columns).length === 0) name = "outlines_d3.json";
    else throw new Error(`no outlines fixture for ${key}`);
    return this.serve("outlines", key, load(name));
  }

  outlineDetail(datasetId: string, template: string, target?: string): Promise<OutlineDetail> {
    let name: string;
    if (template === "n:Laureate/foaf:name/*" && !target) name = "detail_name.json";
    else if (template === "n:Laureate/n:affiliation/*/n:city/*/owl:sameAs/*" && !target) name = "detail_chain.json";
    else if (template === "n:Laureate/n:affiliation/*/n:city/*/owl:sameAs/*" && target === "dbp")
      name = "detail_chain_dbp.json";
    else throw new Error(`no detail fixture for ${template} target=${target}`);
    return this.serve("outlineDetail", `${template}|${target ?? ""}`, load(name));
  }

  outlineQuery(datasetId: string, template: string, shape: string): Promise<string> {
    if (template === "n:Laureate/foaf:name/*" && shape === "terminal-values-distinct") {
      return this.serve(
        "outlineQuery",
        `${template}|${shape}`,
        readFileSync(join(FIXTURES, "sparql_name_distinct.txt"), "utf-8"),
      );
    }
    throw new Error(`no query fixture for ${template} shape=${shape}`);
  }

  layout(datasetId: string, classRef: string, maxdepth: number): Promise<Geometry> {
    return this.serve("layout", `${classRef}|${maxdepth}`, load("layout_nobel_laureate.json"));
  }
}
