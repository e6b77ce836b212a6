/** Dataset / class context: circle packings plus name and size filters.
 * Circle areas follow triple counts (datasets) or entity counts (classes);
 * the open dataset's linked datasets appear as small bullets on the side. */
import { ClassSummary, DatasetSummary } from "../api.js";
import { clear, svg } from "../dom.js";
import { packCircles } from "../packing.js";

export interface OverviewCallbacks {
  onSelectDataset(id: string): void;
  onSelectClass(classIri: string): void;
}

export interface OverviewFilters {
  datasetName: string;
  datasetMinTriples?: number;
  className: string;
  classMinEntities?: number;
}

export interface OverviewData {
  datasets: DatasetSummary[];
  openDataset?: DatasetSummary;
  classes?: ClassSummary[];
  selectedClass?: string;
  extensionTarget?: string;
}

const WIDTH = 360;
const HEIGHT = 300;

export function renderOverview(
  container: HTMLElement,
  data: OverviewData,
  filters: OverviewFilters,
  callbacks: OverviewCallbacks,
): void {
  clear(container);
  const picture = svg("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: String(WIDTH),
    height: String(HEIGHT),
    class: "overview-svg",
  });

  if (!data.openDataset) {
    const visible = data.datasets.filter(
      (ds) =>
        ds.name.toLowerCase().includes(filters.datasetName.toLowerCase()) &&
        (filters.datasetMinTriples === undefined || ds.tripleCount >= filters.datasetMinTriples),
    );
    for (const circle of packCircles(visible, (ds) => ds.tripleCount, { width: WIDTH, height: HEIGHT })) {
      const node = svg("circle", {
        cx: String(circle.x),
        cy: String(circle.y),
        r: String(Math.max(circle.r, 3)),
        class: "dataset-circle",
        "data-dataset": circle.item.id,
        "data-triples": String(circle.item.tripleCount),
      });
      node.addEventListener("click", () => callbacks.onSelectDataset(circle.item.id));
      picture.append(node);
      picture.append(
        svg("text", { x: String(circle.x), y: String(circle.y), class: "circle-label" }, [
          document.createTextNode(circle.item.name),
        ]),
      );
    }
  } else {
    const open = data.openDataset;
    picture.append(
      svg("circle", {
        cx: String(WIDTH / 2),
        cy: String(HEIGHT / 2),
        r: String(HEIGHT / 2 - 6),
        class: "dataset-circle open",
        "data-dataset": open.id,
      }),
    );
    // linked datasets as bullets down the right edge
    open.linkedDatasetIds.forEach((linkedId, index) => {
      const cy = 30 + index * 30;
      const bullet = svg("circle", {
        cx: String(WIDTH - 16),
        cy: String(cy),
        r: "8",
        class: "linked-bullet" + (data.extensionTarget === linkedId ? " extension-target" : ""),
        "data-linked": linkedId,
      });
      bullet.addEventListener("click", () => callbacks.onSelectDataset(linkedId));
      picture.append(bullet);
      if (data.extensionTarget === linkedId) {
        picture.append(
          svg("line", {
            x1: String(WIDTH / 2),
            y1: String(HEIGHT / 2),
            x2: String(WIDTH - 16),
            y2: String(cy),
            class: "extension-line",
          }),
        );
      }
    });

    const classes = (data.classes ?? []).filter(
      (c) =>
        c.label.toLowerCase().includes(filters.className.toLowerCase()) &&
        (filters.classMinEntities === undefined || c.entityCount >= filters.classMinEntities),
    );
    for (const circle of packCircles(classes, (c) => c.entityCount, { width: WIDTH, height: HEIGHT })) {
      const selected = circle.item.classIri === data.selectedClass;
      const node = svg("circle", {
        cx: String(circle.x),
        cy: String(circle.y),
        r: String(Math.max(circle.r * 0.5, 6)),
        class: "class-circle" + (selected ? " selected" : ""),
        "data-class": circle.item.classIri,
        "data-entities": String(circle.item.entityCount),
      });
      node.addEventListener("click", () => callbacks.onSelectClass(circle.item.classIri));
      picture.append(node);
      picture.append(
        svg("text", { x: String(circle.x), y: String(circle.y - 8), class: "circle-label" }, [
          document.createTextNode(`${circle.item.label} (${circle.item.entityCount})`),
        ]),
      );
    }
  }

  container.append(picture);
}
