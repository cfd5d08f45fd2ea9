/** Wire-format typings for the analytics API payloads. */

export const POS_TAGS = [
  "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP",
  "CONJ", "AUX", "NUM", "PRT", "INTJ", "X",
] as const;
export type PosTag = (typeof POS_TAGS)[number];

export const TREND_KINDS = [
  "all_typists",
  "same_user",
  "same_question",
  "same_l1",
  "same_cognitive_load",
] as const;
export type TrendKind = (typeof TREND_KINDS)[number];

export type SemanticFilter = "all" | "function" | "content";

export interface TypistSummary {
  typist_id: string;
  age: number | null;
  gender: string | null;
  l1: string;
  handedness: "LEFT" | "RIGHT" | null;
  session_count: number;
}

export interface SessionSummary {
  session_id: string;
  question_id: string;
  cognitive_load: string;
  total_keystrokes: number;
  token_count: number;
  warning_short: boolean;
}

export interface PlotPoint {
  token_index: number;
  text: string;
  t_norm_end: number;
  cumulative_count: number;
  rate_z: number;
  revision_count: number;
  pos: PosTag;
  semantic_class: "FUNCTION" | "CONTENT";
}

export interface TrendSeries {
  kind: TrendKind;
  anchor_session: string;
  session_count: number;
  grid: number[];
  mean_counts: number[];
}

export interface PlotPayload {
  session_id: string;
  session_meta: {
    typist: TypistSummary;
    question_id: string;
    cognitive_load: string;
    total_keystrokes: number;
    token_count: number;
    final_char_count: number;
    warning_short: boolean;
  };
  points: PlotPoint[];
  trends: TrendSeries[];
}

export interface BoxplotStats {
  median: number;
  q1: number;
  q3: number;
  whisker_low: number;
  whisker_high: number;
  outliers: number[];
  n: number;
}

export interface TokenDetailPayload {
  token_text: string;
  observed: { position: number; char: string; pause_ms: number | null }[];
  population: { position: number; char: string; stats: BoxplotStats | null }[];
}
