/**
 * Log-log chart of the classical curve against the overhead-scaled
 * quantum curve, with a dotted marker at the threshold size.
 *
 * Built as an SVG string from the /api/threshold series; the marker sits
 * exactly at the document's log10 root on the same x scale the curves
 * use, so chart and number cannot drift apart.
 */

import { apply, escapeXml, integerTicks, makeScale, powerLabel, Scale } from "../scale";
import type { ThresholdDoc } from "../types";
import { CHART_STYLE } from "./style";

export interface ChartGeometry {
  width: number;
  height: number;
  marginLeft: number;
  marginRight: number;
  marginTop: number;
  marginBottom: number;
}

export const CROSSOVER_GEOMETRY: ChartGeometry = {
  width: 640,
  height: 360,
  marginLeft: 56,
  marginRight: 16,
  marginTop: 16,
  marginBottom: 40,
};

export interface CrossoverView {
  svg: string;
  /** Marker pixel position, or null when there is no finite threshold. */
  markerX: number | null;
  markerLabel: string | null;
  noAdvantage: boolean;
  xScale: Scale;
  yScale: Scale;
}

function polyline(xs: number[], ys: number[], xScale: Scale, yScale: Scale): string {
  const points: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    const x = apply(xScale, xs[i]!);
    const y = apply(yScale, ys[i]!);
    points.push(`${x.toFixed(2)},${y.toFixed(2)}`);
  }
  return points.join(" ");
}

export function buildCrossoverView(
  doc: ThresholdDoc,
  geometry: ChartGeometry = CROSSOVER_GEOMETRY,
): CrossoverView {
  const series = doc.series;
  if (!series || series.log10_n.length === 0) {
    throw new Error("threshold document has no series data");
  }
  const { width, height, marginLeft, marginRight, marginTop, marginBottom } = geometry;

  const xs = series.log10_n;
  const xMin = xs[0]!;
  const xMax = xs[xs.length - 1]!;
  let yMin = Infinity;
  let yMax = -Infinity;
  for (const v of [...series.classical_log10, ...series.quantum_scaled_log10]) {
    if (v < yMin) yMin = v;
    if (v > yMax) yMax = v;
  }
  const yPad = (yMax - yMin) * 0.05 || 1;

  const xScale = makeScale(xMin, xMax, marginLeft, width - marginRight);
  const yScale = makeScale(yMin - yPad, yMax + yPad, height - marginBottom, marginTop);

  const noAdvantage = doc.log10_root === null;
  const markerX = noAdvantage ? null : apply(xScale, doc.log10_root!);
  const markerLabel = noAdvantage ? null : `n* = ${doc.threshold}`;

  const plotTop = marginTop;
  const plotBottom = height - marginBottom;
  const parts: string[] = [];
  parts.push(
    `<svg class="chart" viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img">`,
  );
  parts.push(CHART_STYLE);
  parts.push(`<rect class="bg" x="0" y="0" width="${width}" height="${height}"/>`);

  for (const tick of integerTicks(xMin, xMax, 8)) {
    const x = apply(xScale, tick).toFixed(2);
    parts.push(`<line class="gridline" x1="${x}" y1="${plotTop}" x2="${x}" y2="${plotBottom}"/>`);
    parts.push(
      `<text class="tick" x="${x}" y="${plotBottom + 16}" text-anchor="middle">${powerLabel(tick)}</text>`,
    );
  }
  for (const tick of integerTicks(yMin - yPad, yMax + yPad, 6)) {
    const y = apply(yScale, tick).toFixed(2);
    parts.push(
      `<line class="gridline" x1="${marginLeft}" y1="${y}" x2="${width - marginRight}" y2="${y}"/>`,
    );
    parts.push(
      `<text class="tick" x="${marginLeft - 6}" y="${y}" text-anchor="end" dominant-baseline="middle">${powerLabel(tick)}</text>`,
    );
  }

  parts.push(
    `<polyline class="curve classical" fill="none" points="${polyline(xs, series.classical_log10, xScale, yScale)}"/>`,
  );
  parts.push(
    `<polyline class="curve quantum" fill="none" points="${polyline(xs, series.quantum_scaled_log10, xScale, yScale)}"/>`,
  );

  if (markerX !== null) {
    const x = markerX.toFixed(2);
    parts.push(
      `<line class="marker" x1="${x}" y1="${plotTop}" x2="${x}" y2="${plotBottom}" stroke-dasharray="4 4"/>`,
    );
    parts.push(
      `<text class="marker-label" x="${x}" y="${plotTop + 12}" text-anchor="middle">${escapeXml(markerLabel!)}</text>`,
    );
  }

  parts.push(
    `<text class="axis-label" x="${(marginLeft + width - marginRight) / 2}" y="${height - 6}" text-anchor="middle">problem size n</text>`,
  );
  parts.push(`<g class="legend" transform="translate(${marginLeft + 10}, ${plotBottom - 36})">`);
  parts.push(`<rect class="swatch classical" x="0" y="0" width="12" height="3"/>`);
  parts.push(`<text class="tick" x="18" y="5">classical ${escapeXml(doc.classical)}</text>`);
  parts.push(`<rect class="swatch quantum" x="0" y="14" width="12" height="3"/>`);
  parts.push(
    `<text class="tick" x="18" y="19">quantum ${escapeXml(doc.quantum)} x 10^${shortExp(doc.c_log10)}</text>`,
  );
  parts.push(`</g>`);
  parts.push(`</svg>`);

  return { svg: parts.join(""), markerX, markerLabel, noAdvantage, xScale, yScale };
}

function shortExp(cLog10: number): string {
  return Number.isInteger(cLog10) ? String(cLog10) : cLog10.toFixed(2);
}
