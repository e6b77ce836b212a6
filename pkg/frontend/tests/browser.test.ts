import { describe, expect, it } from "vitest";

import type { BrowserModel, OutlinesResponse } from "../src/api.js";
import { highlightSets, renderBrowser } from "../src/views/browser.js";
import { RecordingApiClient } from "./mockApi.js";

function noop() {}
const callbacks = {
  onHover: noop,
  onUnhover: noop,
  onSelectBar: noop,
  onColumnSearch: noop,
  onSelectOutline: noop,
  onClearFilters: noop,
};

// a small multi-path model exercising the highlight semantics
const MODEL: BrowserModel = {
  depth: 2,
  columns: [
    [
      { predicate: "http://t/a", label: "t:a", frequency: 2, heightFraction: 2 / 3 },
      { predicate: "http://t/b", label: "t:b", frequency: 1, heightFraction: 1 / 3 },
    ],
    [
      { predicate: "http://t/x", label: "t:x", frequency: 2, heightFraction: 2 / 3 },
      { predicate: "http://t/y", label: "t:y", frequency: 1, heightFraction: 1 / 3 },
    ],
  ],
  outlines: [
    { id: "C/t:a/*/t:x/*", predicates: ["http://t/a", "http://t/x"] },
    { id: "C/t:a/*/t:y/*", predicates: ["http://t/a", "http://t/y"] },
    { id: "C/t:b/*/t:x/*", predicates: ["http://t/b", "http://t/x"] },
  ],
};

describe("highlightSets", () => {
  it("collects matching outlines and their predicates per column", () => {
    const result = highlightSets(MODEL, 1, "http://t/a");
    expect(result.ids).toEqual(["C/t:a/*/t:x/*", "C/t:a/*/t:y/*"]);
    expect(result.columns[0]).toEqual(new Set(["http://t/a"]));
    expect(result.columns[1]).toEqual(new Set(["http://t/x", "http://t/y"]));
  });

  it("restricts other columns through the hovered bar", () => {
    const result = highlightSets(MODEL, 2, "http://t/y");
    expect(result.ids).toEqual(["C/t:a/*/t:y/*"]);
    expect(result.columns[0]).toEqual(new Set(["http://t/a"]));
  });
});

describe("renderBrowser", () => {
  it("draws bars with heights proportional to heightFraction", async () => {
    const api = new RecordingApiClient();
    const response = await api.outlines("nobel", "n:Laureate", { depth: 1 });
    const container = document.createElement("div");
    renderBrowser(container, response.browserModel, {}, undefined, callbacks);
    const bars = [...container.querySelectorAll<HTMLElement>(".bar")];
    expect(bars.length).toBe(response.browserModel.columns[0].length);
    for (const [index, bar] of bars.entries()) {
      const fraction = response.browserModel.columns[0][index].heightFraction;
      expect(bar.style.height).toBe(`${(fraction * 260).toFixed(2)}px`);
      expect(bar.dataset.frequency).toBe(String(response.browserModel.columns[0][index].frequency));
    }
  });

  it("dims non-highlighted bars on hover and restores on unhover", () => {
    const container = document.createElement("div");
    renderBrowser(container, MODEL, {}, undefined, callbacks);
    const before = container.innerHTML;

    renderBrowser(container, MODEL, {}, { column: 1, predicate: "http://t/a" }, callbacks);
    const dimmed = [...container.querySelectorAll<HTMLElement>(".bar.dimmed")];
    expect(dimmed.map((b) => b.dataset.predicate)).toEqual(["http://t/b"]);

    renderBrowser(container, MODEL, {}, undefined, callbacks);
    expect(container.innerHTML).toBe(before);
  });

  it("offers per-column autocompletion over that column's predicates", () => {
    const container = document.createElement("div");
    renderBrowser(container, MODEL, {}, undefined, callbacks);
    const options = [...container.querySelectorAll("#predicates-col2 option")];
    expect(options.map((o) => o.getAttribute("value"))).toEqual(["t:x", "t:y"]);
  });

  it("shows an empty state with a clear-filters affordance", () => {
    let cleared = false;
    const container = document.createElement("div");
    const empty: BrowserModel = { depth: 2, columns: [[], []], outlines: [] };
    renderBrowser(container, empty, {}, undefined, { ...callbacks, onClearFilters: () => (cleared = true) });
    const button = container.querySelector<HTMLButtonElement>(".clear-filters");
    expect(button).not.toBeNull();
    button!.click();
    expect(cleared).toBe(true);
  });
});
