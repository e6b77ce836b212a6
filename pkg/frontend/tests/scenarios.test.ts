/** Scripted walkthroughs of the two usage scenarios against recorded
 * fixture responses. Every number the DOM shows is compared with the
 * corresponding field of the intercepted API response. */
import { afterEach, describe, expect, it } from "vitest";

import type { OutlineDetail, OutlinesResponse } from "../src/api.js";
import { cleanDom, makeApp } from "./helpers.js";

const LAUREATE = "http://nobel.example.org/Laureate";
const CHAIN = "n:Laureate/n:affiliation/*/n:city/*/owl:sameAs/*";

afterEach(cleanDom);

function flush(ms = 0): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

function barData(node: Element): { predicate: string; frequency: number } {
  const el = node as HTMLElement;
  return { predicate: el.dataset.predicate!, frequency: Number(el.dataset.frequency) };
}

describe("scenario 1: inspecting badly covered properties and opening the query", () => {
  it("walks from the overview to the generated DISTINCT query", async () => {
    const { app, api, ui } = makeApp();
    await app.start();

    // overview: circle areas follow triple counts
    const datasets = api.last<{ id: string; tripleCount: number }[]>("datasets");
    const circles = [...ui.overview.querySelectorAll<SVGElement>(".dataset-circle")];
    expect(circles.length).toBe(datasets.length);
    const radiusOf = (id: string) =>
      Number(circles.find((c) => c.getAttribute("data-dataset") === id)!.getAttribute("r"));
    expect(radiusOf("nobel")).toBeGreaterThan(radiusOf("dbp"));
    for (const circle of circles) {
      const ds = datasets.find((d) => d.id === circle.getAttribute("data-dataset"))!;
      expect(circle.getAttribute("data-triples")).toBe(String(ds.tripleCount));
    }

    await app.selectDataset("nobel");
    const classes = api.last<{ classIri: string; entityCount: number }[]>("classes");
    const classCircles = [...ui.overview.querySelectorAll<SVGElement>(".class-circle")];
    expect(classCircles.length).toBe(classes.length);
    for (const circle of classCircles) {
      const c = classes.find((x) => x.classIri === circle.getAttribute("data-class"))!;
      expect(circle.getAttribute("data-entities")).toBe(String(c.entityCount));
    }

    await app.selectClass(LAUREATE);
    let outlines = api.last<OutlinesResponse>("outlines");
    expect(ui.filters.querySelector<HTMLElement>(".total-count")!.dataset.total).toBe(String(outlines.total));

    // filter to the badly covered paths (coverage <= 60)
    app.setCoverageFilter(undefined, 60);
    await flush(260);
    outlines = api.last<OutlinesResponse>("outlines");
    expect(outlines.total).toBe(2);
    expect(ui.filters.querySelector<HTMLElement>(".total-count")!.dataset.total).toBe(String(outlines.total));
    const bars = [...ui.browser.querySelectorAll(".bar")].map(barData);
    expect(bars.length).toBe(outlines.browserModel.columns[0].length);
    for (const [index, bar] of bars.entries()) {
      expect(bar.frequency).toBe(outlines.browserModel.columns[0][index].frequency);
    }

    // inspect the language-tagged name path
    await app.selectOutline("n:Laureate/foaf:name/*");
    const detail = api.last<OutlineDetail>("outlineDetail");
    const coverageCell = ui.detail.querySelector('[data-measure="coverage"] .measure-value')!;
    expect(coverageCell.textContent).toBe(`${detail.measures.coverage}%`);
    const countCell = ui.detail.querySelector('[data-measure="count"] .measure-value')!;
    expect(countCell.textContent).toBe(String(detail.measures.count));
    const samples = [...ui.detail.querySelectorAll<HTMLElement>("[data-sample]")];
    expect(samples.map((s) => s.dataset.sample)).toEqual(detail.sampleValues.map((v) => v.value));

    // "See query" shows the prefilled DISTINCT query exactly as generated
    ui.detail.querySelector<HTMLButtonElement>(".see-query")!.click();
    await flush();
    const queryText = api.last<string>("outlineQuery");
    expect(ui.detail.querySelector(".query-text")!.textContent).toBe(queryText);
    expect(queryText).toContain("SELECT DISTINCT ?o");
  });
});

describe("scenario 2: geographic info through similarity links", () => {
  it("pattern-selects affiliation/city/sameAs and reads the geo extensions", async () => {
    const { app, api, ui } = makeApp();
    await app.start();
    await app.selectDataset("nobel");
    await app.selectClass(LAUREATE);

    // depth-1 preselected; pick depth 3 by clicking its broken line
    expect(app.store.get().depth).toBe(1);
    const depthLines = [...ui.depth.querySelectorAll<SVGElement>(".depth-line")];
    expect(depthLines.length).toBe(3);
    depthLines.find((l) => l.getAttribute("data-depth") === "3")!.dispatchEvent(new Event("click"));
    await flush(10);
    expect(app.store.get().depth).toBe(3);

    // type "affiliation" in the first column's search field
    const search = ui.browser.querySelector<HTMLInputElement>('[data-column="1"] .column-search')!;
    search.value = "affiliation";
    search.dispatchEvent(new Event("input"));
    await flush(260);
    let outlines = api.last<OutlinesResponse>("outlines");
    expect(outlines.total).toBe(1);

    // click the remaining bars in columns 2 and 3 to complete the pattern
    ui.browser
      .querySelector<HTMLElement>('[data-column="2"][data-predicate="http://nobel.example.org/city"]')!
      .dispatchEvent(new Event("click"));
    await flush(10);
    ui.browser
      .querySelector<HTMLElement>('[data-column="3"][data-predicate="http://www.w3.org/2002/07/owl#sameAs"]')!
      .dispatchEvent(new Event("click"));
    await flush(10);
    outlines = api.last<OutlinesResponse>("outlines");
    expect(outlines.total).toBe(1);
    expect(ui.filters.querySelector<HTMLElement>(".total-count")!.dataset.total).toBe("1");

    // a single path remains; its summary appears in the detail panel
    ui.browser.querySelector<HTMLElement>(`[data-outline="${CHAIN}"]`)!.dispatchEvent(new Event("click"));
    await flush(10);
    let detail = api.last<OutlineDetail>("outlineDetail");
    expect(detail.template).toBe(CHAIN);
    const coverage = ui.detail.querySelector('[data-measure="coverage"] .measure-value')!;
    expect(coverage.textContent).toBe(`${detail.measures.coverage}%`);

    // open the extension column for the linked dataset
    ui.detail.querySelector<HTMLButtonElement>('.linked-dataset[data-target="dbp"]')!.click();
    await flush(10);
    detail = api.last<OutlineDetail>("outlineDetail");
    const extensions = detail.extensions!;
    const joinCount = ui.detail.querySelector<HTMLElement>(".join-count")!;
    expect(joinCount.dataset.joinCount).toBe(String(extensions.joinCount));

    const entries = [...ui.detail.querySelectorAll<HTMLElement>(".extension-entry")];
    expect(entries.map((e) => e.dataset.predicate)).toEqual(extensions.extensions.map((e) => e.predicate));
    for (const [index, entry] of entries.entries()) {
      const expected = extensions.extensions[index];
      expect(entry.querySelector(".extension-coverage")!.textContent).toBe(`${expected.measures.coverage}%`);
      expect(entry.querySelector(".extension-range")!.textContent).toBe(
        `${expected.measures.minValue} … ${expected.measures.maxValue}`,
      );
    }

    // the extension search narrows the property list
    const extensionSearch = ui.detail.querySelector<HTMLInputElement>(".extension-search")!;
    extensionSearch.value = "lat";
    extensionSearch.dispatchEvent(new Event("input"));
    await flush(10);
    const narrowed = [...ui.detail.querySelectorAll<HTMLElement>(".extension-entry")];
    expect(narrowed.map((e) => e.dataset.predicate)).toEqual(["http://www.w3.org/2003/01/geo/wgs84_pos#lat"]);

    // the context shows the connector to the target dataset's bullet
    expect(ui.overview.querySelector(".linked-bullet.extension-target")).not.toBeNull();
    expect(ui.overview.querySelector(".extension-line")).not.toBeNull();
  });
});
