/** Visual-channel encodings, pinned in one place so render tests are exact.
 *
 * Every number shown in the UI comes verbatim from the API; only these
 * pixel mappings are computed client-side.
 */

import type { TrendKind } from "./types.js";

export const RATE_Z_CLAMP = 2.5;
export const RADIUS_MIN_PX = 3;
export const RADIUS_MAX_PX = 12;
export const STROKE_BASE_PX = 1;
export const STROKE_REVISION_CAP = 5;

export function clampZ(z: number): number {
  return Math.max(-RATE_Z_CLAMP, Math.min(RATE_Z_CLAMP, z));
}

/** Point radius: linear in clamped rate z over [3px, 12px]. */
export function radiusFor(rateZ: number): number {
  const t = (clampZ(rateZ) + RATE_Z_CLAMP) / (2 * RATE_Z_CLAMP);
  return RADIUS_MIN_PX + t * (RADIUS_MAX_PX - RADIUS_MIN_PX);
}

/** Stroke width: 1px plus 1px per revision, capped at five revisions. */
export function strokeFor(revisionCount: number): number {
  return STROKE_BASE_PX + Math.min(revisionCount, STROKE_REVISION_CAP);
}

/** Sequential blue ramp; fill darkness increases with rate z. */
export function fillFor(rateZ: number): string {
  const t = (clampZ(rateZ) + RATE_Z_CLAMP) / (2 * RATE_Z_CLAMP);
  const lightness = 88 - t * 60; // 88% (slow, pale) down to 28% (fast, dark)
  return `hsl(210, 70%, ${lightness}%)`;
}

export function fillLightness(rateZ: number): number {
  const t = (clampZ(rateZ) + RATE_Z_CLAMP) / (2 * RATE_Z_CLAMP);
  return 88 - t * 60;
}

export const TREND_COLORS: Record<TrendKind, string> = {
  all_typists: "#d62728",
  same_user: "#ff7f0e",
  same_question: "#2ca02c",
  same_l1: "#9467bd",
  same_cognitive_load: "#8c564b",
};

export const TREND_LABELS: Record<TrendKind, string> = {
  all_typists: "All typists",
  same_user: "All this user's answers",
  same_question: "Same question",
  same_l1: "Same L1",
  same_cognitive_load: "Same cognitive load",
};

export const OBSERVED_PAUSE_COLOR = "#d62728";
