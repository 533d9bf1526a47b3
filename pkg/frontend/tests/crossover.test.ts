import { describe, expect, it } from "vitest";
import { buildCrossoverView, CROSSOVER_GEOMETRY } from "../src/charts/crossover";
import type { ThresholdDoc } from "../src/types";
import groverBase from "./fixtures/threshold_grover_base.json";
import groverC1e4 from "./fixtures/threshold_grover_c1e4.json";
import noAdvantage from "./fixtures/threshold_no_advantage.json";

const base = groverBase as ThresholdDoc;
const cheap = groverC1e4 as ThresholdDoc;
const hopeless = noAdvantage as ThresholdDoc;

/** Marker pixel position computed independently of the chart builder. */
function expectedMarkerX(doc: ThresholdDoc): number {
  const xs = doc.series!.log10_n;
  const xMin = xs[0]!;
  const xMax = xs[xs.length - 1]!;
  const { marginLeft, marginRight, width } = CROSSOVER_GEOMETRY;
  const t = (doc.log10_root! - xMin) / (xMax - xMin);
  return marginLeft + t * (width - marginRight - marginLeft);
}

function markerXFromSvg(svg: string): number {
  const match = /<line class="marker" x1="([\d.]+)"/.exec(svg);
  expect(match).not.toBeNull();
  return Number(match![1]);
}

describe("crossover marker", () => {
  it("sits at the document's log10 root for the default pair", () => {
    expect(base.log10_root).toBe(12);
    const view = buildCrossoverView(base);
    const expected = expectedMarkerX(base);
    expect(Math.abs(view.markerX! - expected)).toBeLessThanOrEqual(0.5);
    expect(Math.abs(markerXFromSvg(view.svg) - expected)).toBeLessThanOrEqual(0.5);
    expect(view.markerLabel).toBe("n* = 10^12");
  });

  it("moves to 10^8 when the overhead constant drops to 10^4", () => {
    expect(cheap.log10_root).toBe(8);
    const view = buildCrossoverView(cheap);
    expect(Math.abs(markerXFromSvg(view.svg) - expectedMarkerX(cheap))).toBeLessThanOrEqual(0.5);
  });

  it("shows no marker when there is no advantage", () => {
    const view = buildCrossoverView(hopeless);
    expect(view.noAdvantage).toBe(true);
    expect(view.markerX).toBeNull();
    expect(view.svg).not.toContain('class="marker"');
  });
});

describe("crossover curves", () => {
  it("draws one point per series sample", () => {
    const view = buildCrossoverView(base);
    const polylines = [...view.svg.matchAll(/<polyline class="curve [a-z]+"[^>]*points="([^"]+)"/g)];
    expect(polylines).toHaveLength(2);
    for (const match of polylines) {
      expect(match[1]!.split(" ")).toHaveLength(base.series!.log10_n.length);
    }
  });

  it("spans exactly the sampled domain", () => {
    const view = buildCrossoverView(base);
    const xs = base.series!.log10_n;
    expect(view.xScale.domainMin).toBe(xs[0]);
    expect(view.xScale.domainMax).toBe(xs[xs.length - 1]);
  });
});
