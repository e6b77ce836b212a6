import { App, AppElements } from "../src/app.js";
import { Store } from "../src/state.js";
import { RecordingApiClient } from "./mockApi.js";

export function makeApp(api?: RecordingApiClient): { app: App; api: RecordingApiClient; ui: AppElements } {
  const client = api ?? new RecordingApiClient();
  const make = () => {
    const node = document.createElement("div");
    document.body.append(node);
    return node;
  };
  const ui: AppElements = {
    overview: make(),
    depth: make(),
    browser: make(),
    detail: make(),
    filters: make(),
    banner: make(),
  };
  const app = new App(client, new Store(), ui);
  return { app, api: client, ui };
}

export function cleanDom(): void {
  document.body.innerHTML = "";
}
