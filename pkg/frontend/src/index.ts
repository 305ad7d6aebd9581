/**
 * Page bootstrap: wire the static controls to a ConsoleApp.
 *
 * The service address comes from the ?service= query parameter, defaulting
 * to localhost:8000.  Everything else is plain event wiring.
 */

import { SessionApi } from "./api.js";
import { ConsoleApp } from "./console.js";
import type { Mode } from "./types.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const params = new URLSearchParams(window.location.search);
const serviceUrl = params.get("service") ?? "http://localhost:8000";

const api = new SessionApi(serviceUrl);
const app = new ConsoleApp(api, {
  graph: byId("graph") as unknown as SVGElement,
  beliefs: byId("beliefs"),
  timeline: byId("timeline"),
  dialog: byId("dialog"),
  errors: byId("errors"),
  status: byId("status"),
});

const modeSelect = byId<HTMLSelectElement>("mode");
const formulaInput = byId<HTMLInputElement>("formula");
const ghostToggle = byId<HTMLInputElement>("ghost");

byId<HTMLButtonElement>("new-session").addEventListener("click", () => {
  void app.newSession(modeSelect.value as Mode);
});

byId<HTMLFormElement>("entry").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const text = formulaInput.value.trim();
  if (!text) return;
  void app.submitFormula(text).then((accepted) => {
    if (accepted) formulaInput.value = "";
  });
});

ghostToggle.addEventListener("change", () => {
  app.setGhosting(ghostToggle.checked);
});

const attachId = params.get("session");
if (attachId) {
  void app.attach(attachId);
}
