/** Detail panel: the selected outline's statistics, sample values, the
 * generated query, linked datasets, and the extension column once a
 * target dataset is chosen. Numbers are shown exactly as the API sent
 * them. */
import { Measures, OutlineDetail } from "../api.js";
import { clear, el } from "../dom.js";

export interface DetailCallbacks {
  onSeeQuery(template: string): void;
  onSelectExtensionTarget(target: string): void;
  onExtensionSearch(text: string): void;
}

function measuresTable(measures: Measures): HTMLElement {
  const rows: [string, string][] = [
    ["depth", String(measures.depth)],
    ["coverage", `${measures.coverage}%`],
    ["count", String(measures.count)],
    ["unique count", String(measures.uniqueCount)],
    ["endpoint kind", measures.endpointKind],
  ];
  for (const [datatype, n] of Object.entries(measures.datatypes)) {
    rows.push([`datatype ${datatype}`, String(n)]);
  }
  for (const [language, n] of Object.entries(measures.languages)) {
    rows.push([`language ${language}`, String(n)]);
  }
  if (measures.minValue !== undefined) {
    rows.push(["min", measures.minValue]);
    rows.push(["max", measures.maxValue ?? ""]);
  }
  return el(
    "table",
    { class: "measures" },
    rows.map(([k, v]) =>
      el("tr", { "data-measure": k }, [el("th", {}, [k]), el("td", { class: "measure-value" }, [v])]),
    ),
  );
}

export function renderDetail(
  container: HTMLElement,
  detail: OutlineDetail | undefined,
  extensionFilter: string,
  queryText: string | undefined,
  callbacks: DetailCallbacks,
): void {
  clear(container);
  if (!detail) {
    container.append(el("p", { class: "detail-hint" }, ["Hover or select a path to see its statistics."]));
    return;
  }

  container.append(el("h3", { class: "detail-template" }, [detail.template]));
  container.append(measuresTable(detail.measures));

  if (detail.sampleValues.length > 0) {
    container.append(
      el(
        "ul",
        { class: "sample-values" },
        detail.sampleValues.map((v) => el("li", { "data-sample": v.value }, [v.value])),
      ),
    );
  }

  const seeQuery = el("button", { class: "see-query" }, ["See query"]);
  seeQuery.addEventListener("click", () => callbacks.onSeeQuery(detail.template));
  container.append(seeQuery);
  if (queryText !== undefined) {
    container.append(el("pre", { class: "query-text" }, [queryText]));
  }

  if (detail.linkedDatasets.length > 0) {
    const links = el("div", { class: "linked-datasets" }, [el("h4", {}, ["Extend into"])]);
    for (const linked of detail.linkedDatasets) {
      const button = el("button", { class: "linked-dataset", "data-target": linked.id }, [linked.name]);
      button.addEventListener("click", () => callbacks.onSelectExtensionTarget(linked.id));
      links.append(button);
    }
    container.append(links);
  }

  const extensions = detail.extensions;
  if (extensions) {
    const column = el("div", { class: "extension-column", "data-target": extensions.target });
    column.append(
      el("h4", {}, [`Extensions in ${extensions.target}`]),
      el("p", { class: "join-count", "data-join-count": String(extensions.joinCount) }, [
        `${extensions.joinCount} joined resource(s)`,
      ]),
    );
    const search = el("input", {
      type: "search",
      class: "extension-search",
      placeholder: "filter extension properties",
      value: extensionFilter,
    });
    search.addEventListener("input", () => callbacks.onExtensionSearch(search.value));
    column.append(search);

    const needle = extensionFilter.toLowerCase();
    const list = el("ul", { class: "extension-list" });
    for (const extension of extensions.extensions) {
      if (needle && !extension.label.toLowerCase().includes(needle)) continue;
      const entry = el("li", { class: "extension-entry", "data-predicate": extension.predicate }, [
        el("span", { class: "extension-label" }, [extension.label]),
        el("span", { class: "extension-coverage" }, [`${extension.measures.coverage}%`]),
      ]);
      if (extension.measures.minValue !== undefined) {
        entry.append(
          el("span", { class: "extension-range" }, [
            `${extension.measures.minValue} … ${extension.measures.maxValue ?? ""}`,
          ]),
        );
      }
      list.append(entry);
    }
    column.append(list);
    container.append(column);
  }
}
