import { HttpApiClient } from "./api.js";
import { App, AppElements } from "./app.js";
import { Store } from "./state.js";

function byId(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

const ui: AppElements = {
  overview: byId("overview"),
  depth: byId("depth-selector"),
  browser: byId("path-browser"),
  detail: byId("detail-panel"),
  filters: byId("filter-panel"),
  banner: byId("error-banner"),
};

const app = new App(new HttpApiClient(""), new Store(), ui);
void app.start();
