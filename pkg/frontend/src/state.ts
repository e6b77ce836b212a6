/** View state with the selection prefix chain:
 * dataset ⊃ class ⊃ depth ⊃ outline ⊃ extension.
 * Any upstream change resets everything downstream of it. */

export interface ColumnPattern {
  predicate?: string;
  substring?: string;
}

export interface Filters {
  minCoverage?: number;
  maxCoverage?: number;
  kind?: string;
}

export interface ViewState {
  datasetId?: string;
  classIri?: string;
  depth: number;
  filters: Filters;
  pattern: Record<number, ColumnPattern>;
  hoveredBar?: { column: number; predicate: string };
  selectedOutline?: string; // canonical template string
  extensionTarget?: string;
}

export type Listener = (state: ViewState) => void;

const initialState = (): ViewState => ({
  depth: 1,
  filters: {},
  pattern: {},
});

export class Store {
  private state: ViewState = initialState();
  private listeners: Listener[] = [];

  get(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private commit(next: ViewState): void {
    this.state = next;
    for (const listener of this.listeners) listener(next);
  }

  selectDataset(datasetId?: string): void {
    this.commit({ ...initialState(), datasetId });
  }

  selectClass(classIri?: string): void {
    this.commit({ ...initialState(), datasetId: this.state.datasetId, classIri });
  }

  selectDepth(depth: number): void {
    this.commit({
      ...initialState(),
      datasetId: this.state.datasetId,
      classIri: this.state.classIri,
      depth,
    });
  }

  setFilters(filters: Filters): void {
    // refining filters keeps the pattern but drops the outline selection
    this.commit({ ...this.state, filters, hoveredBar: undefined, selectedOutline: undefined, extensionTarget: undefined });
  }

  setColumnPattern(column: number, pattern?: ColumnPattern): void {
    const next = { ...this.state.pattern };
    if (pattern === undefined || (!pattern.predicate && !pattern.substring)) {
      delete next[column];
    } else {
      next[column] = pattern;
    }
    this.commit({ ...this.state, pattern: next, hoveredBar: undefined, selectedOutline: undefined, extensionTarget: undefined });
  }

  clearPattern(): void {
    this.commit({ ...this.state, pattern: {}, hoveredBar: undefined, selectedOutline: undefined, extensionTarget: undefined });
  }

  hoverBar(column: number, predicate: string): void {
    this.commit({ ...this.state, hoveredBar: { column, predicate } });
  }

  unhover(): void {
    this.commit({ ...this.state, hoveredBar: undefined });
  }

  selectOutline(template?: string): void {
    this.commit({ ...this.state, selectedOutline: template, extensionTarget: undefined });
  }

  selectExtensionTarget(target?: string): void {
    this.commit({ ...this.state, extensionTarget: target });
  }
}
