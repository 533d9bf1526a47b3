/**
 * Typed access to the /api/* endpoints with last-write-wins semantics.
 *
 * Each view owns one ViewChannel. A new request aborts the previous one
 * and bumps a sequence number; whatever resolves out of order is
 * reported as stale so the caller never paints an old answer over a
 * newer one.
 */

import type { ExplorerState } from "./state";
import type { ApiError } from "./types";

export type ChannelResult<T> =
  | { kind: "ok"; doc: T }
  | { kind: "error"; message: string; offset: number | null; status: number }
  | { kind: "stale" };

type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

export class ViewChannel<T> {
  private seq = 0;
  private controller: AbortController | null = null;

  constructor(private readonly fetchFn: FetchLike = fetch) {}

  async request(url: string): Promise<ChannelResult<T>> {
    const mySeq = ++this.seq;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;

    let response: Response;
    try {
      response = await this.fetchFn(url, { signal: controller.signal });
    } catch (err) {
      if (mySeq !== this.seq) return { kind: "stale" };
      return { kind: "error", message: String(err), offset: null, status: 0 };
    }
    if (mySeq !== this.seq) return { kind: "stale" };

    if (!response.ok) {
      let message = `request failed (${response.status})`;
      let offset: number | null = null;
      try {
        const body = (await response.json()) as ApiError;
        if (body && typeof body.error === "string") {
          message = body.error;
          offset = typeof body.offset === "number" ? body.offset : null;
        }
      } catch {
        // non-JSON error body; keep the status message
      }
      if (mySeq !== this.seq) return { kind: "stale" };
      return { kind: "error", message, offset, status: response.status };
    }

    const doc = (await response.json()) as T;
    if (mySeq !== this.seq) return { kind: "stale" };
    return { kind: "ok", doc };
  }
}

function scenarioParams(state: ExplorerState, params: URLSearchParams): void {
  if (state.scenario.kind === "named") {
    params.set("scenario", state.scenario.name);
  } else {
    // The server takes C itself, not its exponent.
    params.set("C", String(Math.pow(10, state.scenario.cLog10)));
  }
}

export const CROSSOVER_POINTS = 160;

export function thresholdUrl(state: ExplorerState): string {
  const params = new URLSearchParams();
  params.set("classical", state.classical);
  params.set("quantum", state.quantum);
  scenarioParams(state, params);
  params.set("points", String(CROSSOVER_POINTS));
  return `/api/threshold?${params}`;
}

export function gridUrl(state: ExplorerState): string {
  const params = new URLSearchParams();
  scenarioParams(state, params);
  return `/api/grid?${params}`;
}

/** Only catalog entries carry a qubit requirement, so the wedge needs an id. */
export function qapsUrl(state: ExplorerState): string | null {
  if (state.catalogId === null) return null;
  const params = new URLSearchParams();
  params.set("id", state.catalogId);
  scenarioParams(state, params);
  params.set("provider", state.provider);
  params.set("years", `${state.yearStart}-${state.yearEnd}`);
  return `/api/qaps?${params}`;
}

export function catalogUrl(): string {
  return "/api/catalog";
}
