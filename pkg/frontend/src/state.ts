/**
 * The what-if state and its URL-fragment form.
 *
 * Everything a practitioner can adjust lives in one ExplorerState, and
 * the whole state round-trips losslessly through location.hash so any
 * view can be shared as a plain link.
 */

export type ScenarioChoice =
  | { kind: "named"; name: string }
  | { kind: "custom"; cLog10: number };

export interface ExplorerState {
  classical: string;
  quantum: string;
  scenario: ScenarioChoice;
  provider: string;
  yearStart: number;
  yearEnd: number;
  catalogId: string | null;
}

// Slider bounds for the custom overhead exponent.
export const C_LOG10_MIN = 3;
export const C_LOG10_MAX = 8;

// Named scenarios shipped with the server, with their exponents so the
// slider can sit at the matching detent while a name is selected.
export const NAMED_SCENARIOS: ReadonlyArray<{ name: string; cLog10: number }> = [
  { name: "optimistic", cLog10: 4 },
  { name: "base", cLog10: 6 },
  { name: "pessimistic", cLog10: 8 },
];

export const DEFAULT_STATE: ExplorerState = {
  classical: "n",
  quantum: "n^(1/2)",
  scenario: { kind: "named", name: "base" },
  provider: "ibm",
  yearStart: 2024,
  yearEnd: 2035,
  catalogId: "grover",
};

export function statesEqual(a: ExplorerState, b: ExplorerState): boolean {
  if (a.scenario.kind !== b.scenario.kind) return false;
  if (a.scenario.kind === "named" && b.scenario.kind === "named") {
    if (a.scenario.name !== b.scenario.name) return false;
  }
  if (a.scenario.kind === "custom" && b.scenario.kind === "custom") {
    if (a.scenario.cLog10 !== b.scenario.cLog10) return false;
  }
  return (
    a.classical === b.classical &&
    a.quantum === b.quantum &&
    a.provider === b.provider &&
    a.yearStart === b.yearStart &&
    a.yearEnd === b.yearEnd &&
    a.catalogId === b.catalogId
  );
}

/** Serialize a state into a fragment (without the leading '#'). */
export function encodeState(state: ExplorerState): string {
  const params = new URLSearchParams();
  params.set("classical", state.classical);
  params.set("quantum", state.quantum);
  if (state.scenario.kind === "named") {
    params.set("scenario", state.scenario.name);
  } else {
    // String(number) is the shortest form that parses back to the
    // same double, so the exponent survives the trip exactly.
    params.set("c", String(state.scenario.cLog10));
  }
  params.set("provider", state.provider);
  params.set("y0", String(state.yearStart));
  params.set("y1", String(state.yearEnd));
  if (state.catalogId !== null) {
    params.set("id", state.catalogId);
  }
  return params.toString();
}

export interface DecodedState {
  state: ExplorerState;
  /** Set when the fragment was unusable and defaults were substituted. */
  notice: string | null;
}

function fail(reason: string): DecodedState {
  return {
    state: { ...DEFAULT_STATE },
    notice: `link state ignored (${reason}); showing defaults`,
  };
}

/**
 * Decode a fragment (with or without '#'). An empty fragment is a plain
 * first load and yields defaults silently; anything present but broken
 * falls back to defaults with a notice.
 */
export function decodeFragment(fragment: string): DecodedState {
  const raw = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  if (raw === "") {
    return { state: { ...DEFAULT_STATE }, notice: null };
  }
  const params = new URLSearchParams(raw);

  const classical = params.get("classical");
  const quantum = params.get("quantum");
  if (!classical || !quantum) return fail("missing runtime expressions");

  const scenarioName = params.get("scenario");
  const cText = params.get("c");
  if (scenarioName !== null && cText !== null) {
    return fail("both a scenario name and a custom exponent");
  }
  let scenario: ScenarioChoice;
  if (cText !== null) {
    const cLog10 = Number(cText);
    if (!Number.isFinite(cLog10) || cLog10 < C_LOG10_MIN || cLog10 > C_LOG10_MAX) {
      return fail(`custom exponent outside [${C_LOG10_MIN}, ${C_LOG10_MAX}]`);
    }
    scenario = { kind: "custom", cLog10 };
  } else if (scenarioName) {
    scenario = { kind: "named", name: scenarioName };
  } else {
    return fail("no scenario");
  }

  const provider = params.get("provider");
  if (!provider) return fail("missing provider");

  const yearStart = Number(params.get("y0"));
  const yearEnd = Number(params.get("y1"));
  if (!Number.isFinite(yearStart) || !Number.isFinite(yearEnd)) {
    return fail("unreadable year range");
  }
  if (yearEnd < yearStart) return fail("year range runs backwards");

  const id = params.get("id");
  return {
    state: {
      classical,
      quantum,
      scenario,
      provider,
      yearStart,
      yearEnd,
      catalogId: id === null || id === "" ? null : id,
    },
    notice: null,
  };
}
