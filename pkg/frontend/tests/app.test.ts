import { afterEach, describe, expect, it, vi } from "vitest";

import type { OutlinesResponse } from "../src/api.js";
import { FILTER_DEBOUNCE_MS } from "../src/app.js";
import { cleanDom, makeApp } from "./helpers.js";
import { RecordingApiClient } from "./mockApi.js";

afterEach(() => {
  cleanDom();
  vi.useRealTimers();
});

const LAUREATE = "http://nobel.example.org/Laureate";

async function openLaureates(app: Awaited<ReturnType<typeof makeApp>>["app"]) {
  await app.start();
  await app.selectDataset("nobel");
  await app.selectClass(LAUREATE);
}

describe("controller", () => {
  it("debounces filter input before re-requesting", async () => {
    const { app, api } = makeApp();
    await openLaureates(app);
    const before = api.served.filter((c) => c.method === "outlines").length;

    vi.useFakeTimers();
    app.setCoverageFilter(undefined, 60);
    app.setCoverageFilter(undefined, 60);
    app.setCoverageFilter(undefined, 60);
    expect(api.served.filter((c) => c.method === "outlines").length).toBe(before);

    await vi.advanceTimersByTimeAsync(FILTER_DEBOUNCE_MS + 50);
    const after = api.served.filter((c) => c.method === "outlines");
    expect(after.length).toBe(before + 1);
    expect((after[after.length - 1].body as OutlinesResponse).total).toBe(2);
  });

  it("hover performs no API calls and restores the view on unhover", async () => {
    const { app, api, ui } = makeApp();
    await openLaureates(app);
    const callsBefore = api.served.length;
    const htmlBefore = ui.browser.innerHTML;

    const bar = ui.browser.querySelector<HTMLElement>(".bar")!;
    bar.dispatchEvent(new Event("mouseenter"));
    expect(app.store.get().hoveredBar).toBeDefined();
    const barAfterHover = ui.browser.querySelector<HTMLElement>(".bar")!;
    barAfterHover.dispatchEvent(new Event("mouseleave"));

    expect(api.served.length).toBe(callsBefore);
    expect(ui.browser.innerHTML).toBe(htmlBefore);
  });

  it("supersedes in-flight outlines requests", async () => {
    const api = new RecordingApiClient();
    api.delays["outlines"] = 30;
    const { app } = makeApp(api);
    await app.start();
    await app.selectDataset("nobel");

    const slow = app.selectClass(LAUREATE); // issues a depth-1 request
    const fast = app.selectDepth(3); // supersedes it immediately
    await Promise.all([slow, fast]);

    // the surviving response is the depth-3 one even though both resolved
    expect(app.outlines?.browserModel.depth).toBe(3);
  });

  it("shows a banner with retry on API failure", async () => {
    const api = new RecordingApiClient();
    api.datasets = () => Promise.reject(new Error("boom"));
    const { app, ui } = makeApp(api);
    await app.start();
    expect(ui.banner.hidden).toBe(false);
    expect(ui.banner.textContent).toContain("boom");
    expect(ui.banner.querySelector("button.retry")).not.toBeNull();
  });

  it("depth defaults to 1 after selecting a class", async () => {
    const { app, api } = makeApp();
    await openLaureates(app);
    expect(app.store.get().depth).toBe(1);
    const outlinesCalls = api.served.filter((c) => c.method === "outlines");
    expect(JSON.parse(outlinesCalls[0].key).depth).toBe(1);
  });
});
