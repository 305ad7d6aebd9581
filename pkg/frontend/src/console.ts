/**
 * Console controller: owns the session handle and the render cycle.
 *
 * Every mutation (input, choice) goes to the service, then the whole view is
 * refetched and rebuilt from snapshots; nothing is computed locally, so the
 * panels can never drift from what the service believes.  One mutation in
 * flight at a time, matching the per-session serialization on the other end.
 */

import { ApiError, SessionApi } from "./api.js";
import { layoutGraph } from "./layout.js";
import {
  renderBeliefTable,
  renderError,
  renderGraph,
  renderPendingDialog,
  renderSyntaxError,
  renderTimeline,
} from "./render.js";
import type { BeliefEntry, Mode, PendingChoice, SessionInfo, Step } from "./types.js";

export interface ConsolePanels {
  graph: SVGElement;
  beliefs: HTMLElement;
  timeline: HTMLElement;
  dialog: HTMLElement;
  errors: HTMLElement;
  status: HTMLElement;
}

export class ConsoleApp {
  readonly api: SessionApi;
  readonly panels: ConsolePanels;

  session: SessionInfo | null = null;
  beliefs: BeliefEntry[] = [];
  pending: PendingChoice | null = null;
  timeline: Step[] = [];
  showDisbelieved = false;

  private busy = false;

  constructor(api: SessionApi, panels: ConsolePanels) {
    this.api = api;
    this.panels = panels;
  }

  private clearErrors(): void {
    this.panels.errors.textContent = "";
  }

  private showError(err: unknown): void {
    if (err instanceof ApiError) {
      renderError(this.panels.errors, err.code, err.message);
    } else {
      renderError(this.panels.errors, "Error", String(err));
    }
  }

  async newSession(mode: Mode, auto = false): Promise<void> {
    this.clearErrors();
    try {
      this.session = await this.api.createSession(mode, auto);
      this.timeline = [];
      await this.refresh();
    } catch (err) {
      this.showError(err);
    }
  }

  /** Reattach to a session that already exists on the service. */
  async attach(id: string): Promise<void> {
    this.clearErrors();
    try {
      this.session = await this.api.getSession(id);
      this.timeline = [];
      await this.refresh();
    } catch (err) {
      this.showError(err);
    }
  }

  /** Returns true when the input was accepted (or suspended on a choice). */
  async submitFormula(text: string): Promise<boolean> {
    if (!this.session || this.busy) return false;
    this.clearErrors();
    this.busy = true;
    try {
      const result = await this.api.submitInput(this.session.id, text);
      this.timeline.push(...result.report);
      await this.refresh();
      return true;
    } catch (err) {
      if (err instanceof ApiError && err.span) {
        renderSyntaxError(this.panels.errors, text, err.span, err.message);
      } else {
        this.showError(err);
      }
      return false;
    } finally {
      this.busy = false;
    }
  }

  async choose(indexes: number[]): Promise<void> {
    if (!this.session || this.busy) return;
    this.clearErrors();
    this.busy = true;
    try {
      const result = await this.api.resolveChoice(this.session.id, indexes);
      this.timeline.push(...result.report);
      await this.refresh();
    } catch (err) {
      this.showError(err);
    } finally {
      this.busy = false;
    }
  }

  setGhosting(flag: boolean): void {
    this.showDisbelieved = flag;
    renderBeliefTable(this.panels.beliefs, this.beliefs, this.showDisbelieved);
  }

  /** Refetch every snapshot and rebuild all panels from them. */
  async refresh(): Promise<void> {
    if (!this.session) return;
    const id = this.session.id;
    try {
      const [beliefs, graph, pending] = await Promise.all([
        this.api.getBeliefs(id, false),
        this.api.getGraph(id),
        this.api.getPending(id),
      ]);
      this.beliefs = beliefs;
      this.pending = pending;
      renderBeliefTable(this.panels.beliefs, beliefs, this.showDisbelieved);
      renderGraph(this.panels.graph, layoutGraph(graph));
      renderTimeline(this.panels.timeline, this.timeline);
      renderPendingDialog(this.panels.dialog, pending,
                          (indexes) => void this.choose(indexes));
      this.panels.status.textContent =
        `session ${id}  mode ${this.session.mode}` +
        (pending ? `  — conflict pending at #${pending.contradiction}` : "");
    } catch (err) {
      this.showError(err);
    }
  }
}
