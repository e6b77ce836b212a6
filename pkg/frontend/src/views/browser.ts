/** The path browser: one column of stacked property bars per position.
 * Bar heights are the response's heightFraction values. Hovering a bar
 * highlights, client-side from the outline index, every predicate that
 * co-occurs with it on some path; clicking turns it into a pattern
 * constraint. Each column has a search field with autocompletion. */
import { BrowserModel } from "../api.js";
import { ColumnPattern } from "../state.js";
import { clear, el } from "../dom.js";

export interface BrowserCallbacks {
  onHover(column: number, predicate: string): void;
  onUnhover(): void;
  onSelectBar(column: number, predicate: string): void;
  onColumnSearch(column: number, text: string): void;
  onSelectOutline(id: string): void;
  onClearFilters(): void;
}

/** Outline ids and per-column predicates reachable through (column, predicate). */
export function highlightSets(
  model: BrowserModel,
  column: number,
  predicate: string,
): { ids: string[]; columns: Set<string>[] } {
  const matching = model.outlines.filter((o) => o.predicates[column - 1] === predicate);
  const columns = Array.from({ length: model.depth }, (_, position) => {
    return new Set(matching.map((o) => o.predicates[position]));
  });
  return { ids: matching.map((o) => o.id), columns };
}

const BAR_AREA_HEIGHT = 260;

export function renderBrowser(
  container: HTMLElement,
  model: BrowserModel,
  pattern: Record<number, ColumnPattern>,
  hovered: { column: number; predicate: string } | undefined,
  callbacks: BrowserCallbacks,
): void {
  clear(container);

  if (model.outlines.length === 0) {
    const clearButton = el("button", { class: "clear-filters" }, ["clear filters"]);
    clearButton.addEventListener("click", () => callbacks.onClearFilters());
    container.append(el("div", { class: "empty-state" }, ["No paths match the current filters. ", clearButton]));
    return;
  }

  const highlight = hovered ? highlightSets(model, hovered.column, hovered.predicate) : undefined;
  const row = el("div", { class: "browser-columns" });

  model.columns.forEach((bars, index) => {
    const column = index + 1;
    const box = el("div", { class: "browser-column", "data-column": String(column) });

    const search = el("input", {
      type: "search",
      class: "column-search",
      placeholder: `filter position ${column}`,
      list: `predicates-col${column}`,
      value: pattern[column]?.substring ?? "",
    });
    search.addEventListener("input", () => callbacks.onColumnSearch(column, search.value));
    const options = el("datalist", { id: `predicates-col${column}` });
    for (const bar of bars) options.append(el("option", { value: bar.label }));
    box.append(search, options);

    const stack = el("div", { class: "bar-stack", style: `height:${BAR_AREA_HEIGHT}px` });
    for (const bar of bars) {
      const dimmed = highlight !== undefined && !highlight.columns[index].has(bar.predicate);
      const selected = pattern[column]?.predicate === bar.predicate;
      const node = el(
        "div",
        {
          class: "bar" + (dimmed ? " dimmed" : "") + (selected ? " selected" : ""),
          style: `height:${(bar.heightFraction * BAR_AREA_HEIGHT).toFixed(2)}px`,
          "data-column": String(column),
          "data-predicate": bar.predicate,
          "data-frequency": String(bar.frequency),
          title: `${bar.label} — ${bar.frequency} path(s)`,
        },
        [el("span", { class: "bar-label" }, [bar.label])],
      );
      node.addEventListener("mouseenter", () => callbacks.onHover(column, bar.predicate));
      node.addEventListener("mouseleave", () => callbacks.onUnhover());
      node.addEventListener("click", () => callbacks.onSelectBar(column, bar.predicate));
      stack.append(node);
    }
    box.append(stack);
    row.append(box);
  });

  container.append(row);

  const list = el("ul", { class: "outline-list" });
  const visible = highlight ? new Set(highlight.ids) : undefined;
  for (const entry of model.outlines) {
    const item = el(
      "li",
      {
        class: "outline-item" + (visible && !visible.has(entry.id) ? " dimmed" : ""),
        "data-outline": entry.id,
      },
      [entry.id],
    );
    item.addEventListener("click", () => callbacks.onSelectOutline(entry.id));
    list.append(item);
  }
  container.append(list);
}
