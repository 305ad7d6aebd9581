import { describe, expect, it } from "vitest";

import { ApiError, SessionApi, type FetchLike } from "../src/api.js";

interface Call {
  url: string;
  method: string;
  body: unknown;
}

function fakeFetch(responses: Array<{ status: number; body: unknown }>) {
  const calls: Call[] = [];
  const fetchFn: FetchLike = async (url, init) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(init.body as string) : undefined,
    });
    const next = responses.shift() ?? { status: 200, body: {} };
    return {
      ok: next.status < 400,
      status: next.status,
      json: async () => next.body,
    } as Response;
  };
  return { fetchFn, calls };
}

describe("SessionApi", () => {
  it("posts session creation with mode and auto", async () => {
    const { fetchFn, calls } = fakeFetch([
      { status: 201, body: { id: "abc", mode: "MIS", auto: false, pending: null } },
    ]);
    const api = new SessionApi("http://svc:8000/", fetchFn);
    const info = await api.createSession("MIS");
    expect(info.id).toBe("abc");
    expect(calls[0]).toEqual({
      url: "http://svc:8000/sessions",
      method: "POST",
      body: { mode: "MIS", auto: false },
    });
  });

  it("strips trailing slashes from the base url", async () => {
    const { fetchFn, calls } = fakeFetch([{ status: 200, body: { pending: null } }]);
    await new SessionApi("http://svc:8000///", fetchFn).getPending("s1");
    expect(calls[0].url).toBe("http://svc:8000/sessions/s1/pending");
  });

  it("unwraps list payloads", async () => {
    const beliefs = [{ index: 1, formula: "P(a)", status: "bel",
                       from: { kind: "hu" }, to: [], entrenchment: 0.5,
                       category: "aPosteriori" }];
    const { fetchFn, calls } = fakeFetch([
      { status: 200, body: { beliefs } },
      { status: 200, body: { members: ["Doc1"] } },
    ]);
    const api = new SessionApi("http://svc", fetchFn);
    expect(await api.getBeliefs("s1", false)).toEqual(beliefs);
    expect(calls[0].url).toBe("http://svc/sessions/s1/beliefs?active=false");
    expect(await api.queryMembers("s1", ["Science", "Engineering"], "and"))
      .toEqual(["Doc1"]);
    expect(calls[1].url)
      .toBe("http://svc/sessions/s1/query?cats=Science%2CEngineering&op=and");
  });

  it("rethrows refusals as ApiError with the stable code", async () => {
    const { fetchFn } = fakeFetch([
      { status: 409, body: { code: "SessionBusy", message: "a revision choice is pending" } },
    ]);
    const api = new SessionApi("http://svc", fetchFn);
    const err = await api.submitInput("s1", "P(a)").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.code).toBe("SessionBusy");
    expect(err.status).toBe(409);
    expect(err.span).toBeUndefined();
  });

  it("carries the syntax-error span through", async () => {
    const { fetchFn } = fakeFetch([
      { status: 400, body: { code: "SyntaxError", message: "expected a formula",
                             span: [4, 5] } },
    ]);
    const api = new SessionApi("http://svc", fetchFn);
    const err = await api.submitInput("s1", "Q^k(").catch((e) => e);
    expect(err.code).toBe("SyntaxError");
    expect(err.span).toEqual([4, 5]);
  });

  it("copes with a non-json error body", async () => {
    const fetchFn: FetchLike = async () =>
      ({ ok: false, status: 502, json: async () => { throw new Error("nope"); } }) as Response;
    const api = new SessionApi("http://svc", fetchFn);
    const err = await api.getGraph("s1").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(502);
  });
});
