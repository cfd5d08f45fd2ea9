/** API client: thin typed fetch wrappers with last-write-wins cancellation.
 *
 * The UI performs no analytics of its own; these calls are its only data
 * source. Base URL is the single configuration knob.
 */

import type {
  PlotPayload,
  SessionSummary,
  TokenDetailPayload,
  TypistSummary,
} from "./types.js";
import type { ViewState } from "./state.js";

let baseUrl = "";

export function setBaseUrl(url: string): void {
  baseUrl = url.replace(/\/$/, "");
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(path: string, signal?: AbortSignal): Promise<T> {
  const res = await fetch(baseUrl + path, { signal });
  const body = await res.json();
  if (!res.ok) {
    const err = (body as { error?: { code?: string; message?: string } }).error;
    throw new ApiError(res.status, err?.code ?? "error", err?.message ?? res.statusText);
  }
  return body as T;
}

export function fetchTypists(signal?: AbortSignal): Promise<TypistSummary[]> {
  return getJson("/typists", signal);
}

export function fetchSessions(
  typistId: string,
  signal?: AbortSignal,
): Promise<SessionSummary[]> {
  return getJson(`/typists/${encodeURIComponent(typistId)}/sessions`, signal);
}

export function plotQuery(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.pos.length > 0) params.set("pos", state.pos.join(","));
  if (state.semantic !== "all") params.set("semantic", state.semantic);
  if (state.trends.length > 0) params.set("trends", state.trends.join(","));
  const q = params.toString();
  return q ? `?${q}` : "";
}

export function fetchPlot(
  state: ViewState,
  signal?: AbortSignal,
): Promise<PlotPayload> {
  const sid = encodeURIComponent(state.session ?? "");
  return getJson(`/sessions/${sid}/plot${plotQuery(state)}`, signal);
}

export function fetchTokenDetail(
  sessionId: string,
  tokenIndex: number,
  signal?: AbortSignal,
): Promise<TokenDetailPayload> {
  const sid = encodeURIComponent(sessionId);
  return getJson(`/sessions/${sid}/tokens/${tokenIndex}/detail`, signal);
}

/** One cancellation slot per payload kind: starting a new request aborts the
 * in-flight one, so the latest control change always wins. */
export class FetchSlot {
  private controller: AbortController | null = null;

  async run<T>(fn: (signal: AbortSignal) => Promise<T>): Promise<T | null> {
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      return await fn(controller.signal);
    } catch (err) {
      if ((err as Error).name === "AbortError") return null;
      throw err;
    } finally {
      if (this.controller === controller) this.controller = null;
    }
  }
}
