/**
 * Typed client for the session service.
 *
 * Refusals arrive as JSON bodies with a stable `code`; they are rethrown as
 * ApiError so callers can branch on the code (and the span, for syntax
 * errors) without touching HTTP concerns.
 */

import type {
  BeliefEntry,
  GraphSnapshot,
  Mode,
  MutationResult,
  PendingChoice,
  SessionInfo,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly span?: [number, number];
  readonly existingIndex?: number;

  constructor(status: number, body: { code?: string; message?: string; span?: number[]; existingIndex?: number }) {
    super(body.message ?? `request failed with status ${status}`);
    this.name = "ApiError";
    this.status = status;
    this.code = body.code ?? "Error";
    if (body.span && body.span.length === 2) {
      this.span = [body.span[0], body.span[1]];
    }
    this.existingIndex = body.existingIndex;
  }
}

export class SessionApi {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl: string, fetchFn?: FetchLike) {
    this.base = baseUrl.replace(/\/+$/, "");
    // bind so injected test doubles and window.fetch both work
    const f = fetchFn ?? globalThis.fetch;
    if (!f) {
      throw new Error("no fetch implementation available");
    }
    this.fetchFn = (url, init) => f(url, init);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: {} };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchFn(this.base + path, init);
    if (!resp.ok) {
      let parsed: { code?: string; message?: string } = {};
      try {
        parsed = await resp.json();
      } catch {
        parsed = { code: "Error", message: `status ${resp.status}` };
      }
      throw new ApiError(resp.status, parsed);
    }
    return (await resp.json()) as T;
  }

  createSession(mode: Mode, auto = false): Promise<SessionInfo> {
    return this.request("POST", "/sessions", { mode, auto });
  }

  getSession(id: string): Promise<SessionInfo> {
    return this.request("GET", `/sessions/${id}`);
  }

  submitInput(id: string, text: string): Promise<MutationResult> {
    return this.request("POST", `/sessions/${id}/inputs`, { text });
  }

  resolveChoice(id: string, indexes: number[]): Promise<MutationResult> {
    return this.request("POST", `/sessions/${id}/choice`, { indexes });
  }

  async getPending(id: string): Promise<PendingChoice | null> {
    const r = await this.request<{ pending: PendingChoice | null }>(
      "GET", `/sessions/${id}/pending`);
    return r.pending;
  }

  async getBeliefs(id: string, activeOnly = true): Promise<BeliefEntry[]> {
    const r = await this.request<{ beliefs: BeliefEntry[] }>(
      "GET", `/sessions/${id}/beliefs?active=${activeOnly}`);
    return r.beliefs;
  }

  getGraph(id: string): Promise<GraphSnapshot> {
    return this.request("GET", `/sessions/${id}/graph`);
  }

  async queryMembers(id: string, cats: string[], op: "and" | "or"): Promise<string[]> {
    const qs = encodeURIComponent(cats.join(","));
    const r = await this.request<{ members: string[] }>(
      "GET", `/sessions/${id}/query?cats=${qs}&op=${op}`);
    return r.members;
  }

  exportFile(id: string): Promise<Record<string, unknown>> {
    return this.request("GET", `/sessions/${id}/file`);
  }

  importFile(id: string, doc: Record<string, unknown>): Promise<SessionInfo> {
    return this.request("PUT", `/sessions/${id}/file`, doc);
  }
}
