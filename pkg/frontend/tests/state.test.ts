/** URL state round-trip: 500 random view states survive serialize/parse. */

import { describe, expect, it } from "vitest";
import {
  canonical,
  parseState,
  serializeState,
  statesEqual,
  type ViewState,
} from "../src/state.js";
import { POS_TAGS, TREND_KINDS } from "../src/types.js";

// Small deterministic PRNG so failures reproduce.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomState(rand: () => number): ViewState {
  const pick = <T>(arr: readonly T[]) => arr[Math.floor(rand() * arr.length)];
  const subset = <T>(arr: readonly T[]) => arr.filter(() => rand() < 0.3);
  const ids = ["t000", "t001", "u-42", "typist one", "abc&def=x", "ünïcode"];
  return canonical({
    typist: rand() < 0.2 ? null : pick(ids),
    session: rand() < 0.2 ? null : pick(ids) + "s" + Math.floor(rand() * 100),
    pos: subset(POS_TAGS),
    semantic: pick(["all", "function", "content"] as const),
    trends: subset(TREND_KINDS),
    token: rand() < 0.3 ? null : Math.floor(rand() * 500),
  });
}

describe("view-state URL round trip", () => {
  it("500 random states survive serialize/parse with equality", () => {
    const rand = mulberry32(20240814);
    for (let i = 0; i < 500; i++) {
      const state = randomState(rand);
      const back = parseState(serializeState(state));
      expect(back).toEqual(state);
      expect(statesEqual(state, back)).toBe(true);
    }
  });

  it("default state serializes to the empty string", () => {
    expect(
      serializeState({
        typist: null,
        session: null,
        pos: [],
        semantic: "all",
        trends: [],
        token: null,
      }),
    ).toBe("");
  });

  it("parse tolerates junk values", () => {
    const state = parseState("?pos=NOUN,BLORP&semantic=weird&token=-3&trends=nope");
    expect(state.pos).toEqual(["NOUN"]);
    expect(state.semantic).toBe("all");
    expect(state.token).toBeNull();
    expect(state.trends).toEqual([]);
  });

  it("serialization is canonical: set order never matters", () => {
    const a = serializeState({
      typist: "t0",
      session: "s0",
      pos: ["VERB", "NOUN"],
      semantic: "all",
      trends: ["same_user", "all_typists"],
      token: 3,
    });
    const b = serializeState({
      typist: "t0",
      session: "s0",
      pos: ["NOUN", "VERB"],
      semantic: "all",
      trends: ["all_typists", "same_user"],
      token: 3,
    });
    expect(a).toBe(b);
  });
});
