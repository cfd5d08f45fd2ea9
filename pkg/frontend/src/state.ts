/** View state and its URL-query round trip.
 *
 * The query string is the single source of truth for shareable views:
 * serialize(parse(q)) === q for canonical states, and parse(serialize(s))
 * equals s for every canonical state (sets kept sorted and deduplicated).
 */

import { POS_TAGS, TREND_KINDS, type PosTag, type SemanticFilter, type TrendKind } from "./types.js";

export interface ViewState {
  typist: string | null;
  session: string | null;
  pos: PosTag[]; // sorted, deduplicated; empty means all
  semantic: SemanticFilter;
  trends: TrendKind[]; // sorted, deduplicated
  token: number | null;
}

export const DEFAULT_STATE: ViewState = {
  typist: null,
  session: null,
  pos: [],
  semantic: "all",
  trends: [],
  token: null,
};

export function canonical(state: ViewState): ViewState {
  return {
    ...state,
    pos: [...new Set(state.pos)].sort(),
    trends: [...new Set(state.trends)].sort(),
  };
}

export function serializeState(state: ViewState): string {
  const s = canonical(state);
  const params = new URLSearchParams();
  if (s.typist !== null) params.set("typist", s.typist);
  if (s.session !== null) params.set("session", s.session);
  if (s.pos.length > 0) params.set("pos", s.pos.join(","));
  if (s.semantic !== "all") params.set("semantic", s.semantic);
  if (s.trends.length > 0) params.set("trends", s.trends.join(","));
  if (s.token !== null) params.set("token", String(s.token));
  return params.toString();
}

export function parseState(query: string): ViewState {
  const params = new URLSearchParams(query);
  const pos = (params.get("pos") ?? "")
    .split(",")
    .filter((t): t is PosTag => (POS_TAGS as readonly string[]).includes(t));
  const trends = (params.get("trends") ?? "")
    .split(",")
    .filter((t): t is TrendKind => (TREND_KINDS as readonly string[]).includes(t));
  const semanticRaw = params.get("semantic");
  const semantic: SemanticFilter =
    semanticRaw === "function" || semanticRaw === "content" ? semanticRaw : "all";
  const tokenRaw = params.get("token");
  const token = tokenRaw !== null && /^\d+$/.test(tokenRaw) ? Number(tokenRaw) : null;
  return canonical({
    typist: params.get("typist"),
    session: params.get("session"),
    pos,
    semantic,
    trends,
    token,
  });
}

export function statesEqual(a: ViewState, b: ViewState): boolean {
  return serializeState(a) === serializeState(b);
}
