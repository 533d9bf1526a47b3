import { describe, expect, it } from "vitest";
import {
  C_LOG10_MAX,
  C_LOG10_MIN,
  decodeFragment,
  DEFAULT_STATE,
  encodeState,
  ExplorerState,
  ScenarioChoice,
  statesEqual,
} from "../src/state";

// Deterministic PRNG so the property run is reproducible.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const EXPR_CHARS = "n^(1/2) log*+-.0123456789e&=#%?é∧";
const NAME_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789_-";

function randomText(rand: () => number, chars: string, min: number, max: number): string {
  const length = min + Math.floor(rand() * (max - min + 1));
  let out = "";
  for (let i = 0; i < length; i++) {
    out += chars[Math.floor(rand() * chars.length)];
  }
  return out;
}

function randomState(rand: () => number): ExplorerState {
  const scenario: ScenarioChoice =
    rand() < 0.5
      ? { kind: "named", name: randomText(rand, NAME_CHARS, 1, 12) }
      : { kind: "custom", cLog10: C_LOG10_MIN + rand() * (C_LOG10_MAX - C_LOG10_MIN) };
  const yearStart = 1990 + rand() * 80;
  return {
    classical: randomText(rand, EXPR_CHARS, 1, 24),
    quantum: randomText(rand, EXPR_CHARS, 1, 24),
    scenario,
    provider: randomText(rand, NAME_CHARS, 1, 10),
    yearStart,
    yearEnd: yearStart + rand() * 30,
    catalogId: rand() < 0.3 ? null : randomText(rand, NAME_CHARS, 1, 10),
  };
}

describe("fragment round-trip", () => {
  it("keeps the default state", () => {
    const { state, notice } = decodeFragment(encodeState(DEFAULT_STATE));
    expect(notice).toBeNull();
    expect(statesEqual(state, DEFAULT_STATE)).toBe(true);
  });

  it("keeps a custom exponent exactly", () => {
    const custom: ExplorerState = {
      ...DEFAULT_STATE,
      scenario: { kind: "custom", cLog10: 5.5 },
    };
    const { state, notice } = decodeFragment(encodeState(custom));
    expect(notice).toBeNull();
    expect(state.scenario).toEqual({ kind: "custom", cLog10: 5.5 });
  });

  it("round-trips 50 random states losslessly", () => {
    const rand = mulberry32(0x5eed);
    for (let i = 0; i < 50; i++) {
      const original = randomState(rand);
      const { state, notice } = decodeFragment("#" + encodeState(original));
      expect(notice).toBeNull();
      expect(state).toEqual(original);
      expect(statesEqual(state, original)).toBe(true);
    }
  });
});

describe("fragment decoding", () => {
  it("treats an empty fragment as a quiet first load", () => {
    for (const fragment of ["", "#"]) {
      const { state, notice } = decodeFragment(fragment);
      expect(notice).toBeNull();
      expect(state).toEqual(DEFAULT_STATE);
    }
  });

  it("falls back to defaults with a notice on a truncated fragment", () => {
    const whole = encodeState(DEFAULT_STATE);
    const truncated = whole.slice(0, Math.floor(whole.length / 3));
    const { state, notice } = decodeFragment(truncated);
    expect(notice).not.toBeNull();
    expect(state).toEqual(DEFAULT_STATE);
  });

  it("rejects a fragment naming a scenario and a custom exponent", () => {
    const { state, notice } = decodeFragment(
      "classical=n&quantum=n&scenario=base&c=5&provider=ibm&y0=2024&y1=2030",
    );
    expect(notice).toMatch(/both/);
    expect(state).toEqual(DEFAULT_STATE);
  });

  it("rejects exponents outside the slider range", () => {
    for (const c of ["2.9", "8.1", "NaN", "junk"]) {
      const { notice } = decodeFragment(
        `classical=n&quantum=n&c=${c}&provider=ibm&y0=2024&y1=2030`,
      );
      expect(notice).not.toBeNull();
    }
  });

  it("rejects a backwards year range", () => {
    const { notice } = decodeFragment(
      "classical=n&quantum=n&scenario=base&provider=ibm&y0=2030&y1=2024",
    );
    expect(notice).toMatch(/backwards/);
  });

  it("treats a missing id as no catalog selection", () => {
    const { state } = decodeFragment(
      "classical=n&quantum=n&scenario=base&provider=ibm&y0=2024&y1=2030",
    );
    expect(state.catalogId).toBeNull();
  });
});
