/** Controller: wires the store, the API client and the views.
 * One in-flight outlines request at a time (superseded ones aborted);
 * filter input is debounced before re-requesting. Every displayed
 * number is a field of some API response. */
import {
  ApiClient,
  BrowserModel,
  ClassSummary,
  DatasetSummary,
  Geometry,
  OutlineDetail,
  OutlinesQuery,
  OutlinesResponse,
} from "./api.js";
import { clear, debounce, el } from "./dom.js";
import { ColumnPattern, Store, ViewState } from "./state.js";
import { renderBrowser } from "./views/browser.js";
import { renderDepthSelector } from "./views/depthSelector.js";
import { renderDetail } from "./views/detail.js";
import { renderOverview, OverviewFilters } from "./views/overview.js";

export interface AppElements {
  overview: HTMLElement;
  depth: HTMLElement;
  browser: HTMLElement;
  detail: HTMLElement;
  filters: HTMLElement;
  banner: HTMLElement;
}

export const FILTER_DEBOUNCE_MS = 200;

export class App {
  datasets: DatasetSummary[] = [];
  classes: ClassSummary[] = [];
  geometry?: Geometry;
  outlines?: OutlinesResponse;
  detail?: OutlineDetail;
  queryText?: string;
  extensionFilter = "";
  overviewFilters: OverviewFilters = { datasetName: "", className: "" };

  private outlinesAbort?: AbortController;
  private readonly debouncedOutlines: () => void;

  constructor(
    private readonly api: ApiClient,
    readonly store: Store,
    private readonly ui: AppElements,
  ) {
    this.debouncedOutlines = debounce(() => void this.refreshOutlines(), FILTER_DEBOUNCE_MS);
    store.subscribe(() => this.render());
  }

  async start(): Promise<void> {
    await this.guard(async () => {
      this.datasets = await this.api.datasets();
    });
    this.render();
  }

  private async guard(work: () => Promise<void>): Promise<void> {
    try {
      await work();
      this.ui.banner.hidden = true;
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") return;
      this.showBanner(String(err));
    }
  }

  private showBanner(message: string): void {
    const banner = this.ui.banner;
    clear(banner);
    banner.hidden = false;
    const retry = el("button", { class: "retry" }, ["retry"]);
    retry.addEventListener("click", () => void this.start());
    banner.append(el("span", {}, [`API error: ${message} `]), retry);
  }

  // -- selection entry points -------------------------------------------

  async selectDataset(id: string): Promise<void> {
    this.store.selectDataset(id);
    await this.guard(async () => {
      this.classes = await this.api.classes(id);
    });
    this.outlines = undefined;
    this.geometry = undefined;
    this.detail = undefined;
    this.render();
  }

  async selectClass(classIri: string): Promise<void> {
    this.store.selectClass(classIri);
    const state = this.store.get();
    if (!state.datasetId) return;
    await this.guard(async () => {
      this.geometry = await this.api.layout(state.datasetId!, classIri, this.maxDepth());
    });
    this.detail = undefined;
    this.queryText = undefined;
    await this.refreshOutlines();
  }

  async selectDepth(depth: number): Promise<void> {
    this.store.selectDepth(depth);
    this.detail = undefined;
    this.queryText = undefined;
    await this.refreshOutlines();
  }

  setCoverageFilter(min?: number, max?: number): void {
    this.store.setFilters({ ...this.store.get().filters, minCoverage: min, maxCoverage: max });
    this.debouncedOutlines();
  }

  setColumnSearch(column: number, text: string): void {
    this.store.setColumnPattern(column, text ? { substring: text } : undefined);
    this.debouncedOutlines();
  }

  async selectBar(column: number, predicate: string): Promise<void> {
    this.store.setColumnPattern(column, { predicate });
    await this.refreshOutlines();
  }

  async clearFilters(): Promise<void> {
    this.store.setFilters({});
    this.store.clearPattern();
    await this.refreshOutlines();
  }

  async selectOutline(template: string): Promise<void> {
    this.store.selectOutline(template);
    const state = this.store.get();
    await this.guard(async () => {
      this.detail = await this.api.outlineDetail(state.datasetId!, template);
    });
    this.queryText = undefined;
    this.render();
  }

  async selectExtensionTarget(target: string): Promise<void> {
    this.store.selectExtensionTarget(target);
    const state = this.store.get();
    if (!state.selectedOutline) return;
    await this.guard(async () => {
      this.detail = await this.api.outlineDetail(state.datasetId!, state.selectedOutline!, target);
    });
    this.render();
  }

  async seeQuery(template: string): Promise<void> {
    const state = this.store.get();
    await this.guard(async () => {
      this.queryText = await this.api.outlineQuery(state.datasetId!, template, "terminal-values-distinct");
    });
    this.render();
  }

  setExtensionSearch(text: string): void {
    this.extensionFilter = text;
    this.render();
  }

  // -- data refresh -------------------------------------------------------

  private maxDepth(): number {
    return this.geometry?.maxdepth ?? 3;
  }

  outlinesQuery(state: ViewState): OutlinesQuery {
    const columns: Record<number, string> = {};
    for (const [column, constraint] of Object.entries(state.pattern)) {
      const c = constraint as ColumnPattern;
      if (c.substring) columns[Number(column)] = c.substring;
      // an exact predicate constraint filters on the compacted name, which
      // the API matches as a substring of itself
      else if (c.predicate) columns[Number(column)] = this.labelFor(c.predicate);
    }
    return {
      depth: state.depth,
      minCoverage: state.filters.minCoverage,
      maxCoverage: state.filters.maxCoverage,
      kind: state.filters.kind,
      columns,
    };
  }

  private labelFor(predicate: string): string {
    for (const column of this.outlines?.browserModel.columns ?? []) {
      for (const bar of column) {
        if (bar.predicate === predicate) return bar.label;
      }
    }
    return predicate;
  }

  async refreshOutlines(): Promise<void> {
    const state = this.store.get();
    if (!state.datasetId || !state.classIri) return;
    this.outlinesAbort?.abort();
    const abort = new AbortController();
    this.outlinesAbort = abort;
    await this.guard(async () => {
      const response = await this.api.outlines(
        state.datasetId!,
        state.classIri!,
        this.outlinesQuery(state),
        abort.signal,
      );
      if (this.outlinesAbort === abort) this.outlines = response;
    });
    this.render();
  }

  // -- rendering ----------------------------------------------------------

  browserModelForRender(): BrowserModel | undefined {
    return this.outlines?.browserModel;
  }

  render(): void {
    const state = this.store.get();
    const open = this.datasets.find((d) => d.id === state.datasetId);

    renderOverview(
      this.ui.overview,
      {
        datasets: this.datasets,
        openDataset: open,
        classes: this.classes,
        selectedClass: state.classIri,
        extensionTarget: state.extensionTarget,
      },
      this.overviewFilters,
      {
        onSelectDataset: (id) => void this.selectDataset(id),
        onSelectClass: (iri) => void this.selectClass(iri),
      },
    );

    if (this.geometry && state.classIri) {
      renderDepthSelector(this.ui.depth, this.geometry, state.depth, {
        onSelectDepth: (depth) => void this.selectDepth(depth),
      });
    } else {
      clear(this.ui.depth);
    }

    this.renderFilterPanel(state);

    const model = this.browserModelForRender();
    if (model && state.classIri) {
      renderBrowser(this.ui.browser, model, state.pattern, state.hoveredBar, {
        onHover: (column, predicate) => this.store.hoverBar(column, predicate),
        onUnhover: () => this.store.unhover(),
        onSelectBar: (column, predicate) => void this.selectBar(column, predicate),
        onColumnSearch: (column, text) => this.setColumnSearch(column, text),
        onSelectOutline: (id) => void this.selectOutline(id),
        onClearFilters: () => void this.clearFilters(),
      });
    } else {
      clear(this.ui.browser);
    }

    renderDetail(this.ui.detail, this.detail, this.extensionFilter, this.queryText, {
      onSeeQuery: (template) => void this.seeQuery(template),
      onSelectExtensionTarget: (target) => void this.selectExtensionTarget(target),
      onExtensionSearch: (text) => this.setExtensionSearch(text),
    });
  }

  private renderFilterPanel(state: ViewState): void {
    const panel = this.ui.filters;
    clear(panel);
    if (!state.classIri) {
      const search = el("input", {
        type: "search",
        class: "dataset-search",
        placeholder: state.datasetId ? "filter classes by name" : "filter datasets by name",
      });
      search.addEventListener("input", () => {
        if (state.datasetId) this.overviewFilters.className = search.value;
        else this.overviewFilters.datasetName = search.value;
        this.render();
      });
      panel.append(search);
      return;
    }

    const ranges = this.outlines?.featureRanges;
    const total = this.outlines?.total;
    if (total !== undefined) {
      panel.append(el("p", { class: "total-count", "data-total": String(total) }, [`${total} path(s)`]));
    }
    const min = el("input", {
      type: "number",
      class: "min-coverage",
      placeholder: ranges?.coverageMin !== undefined ? `min ${ranges.coverageMin}` : "min coverage",
      value: state.filters.minCoverage !== undefined ? String(state.filters.minCoverage) : "",
    });
    const max = el("input", {
      type: "number",
      class: "max-coverage",
      placeholder: ranges?.coverageMax !== undefined ? `max ${ranges.coverageMax}` : "max coverage",
      value: state.filters.maxCoverage !== undefined ? String(state.filters.maxCoverage) : "",
    });
    const onChange = () => {
      this.setCoverageFilter(
        min.value === "" ? undefined : Number(min.value),
        max.value === "" ? undefined : Number(max.value),
      );
    };
    min.addEventListener("input", onChange);
    max.addEventListener("input", onChange);
    panel.append(el("label", {}, ["coverage ", min, " to ", max]));
  }
}
