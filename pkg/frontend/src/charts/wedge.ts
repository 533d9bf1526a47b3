/**
 * Advantage-wedge chart: for each sampled year, the interval of problem
 * sizes that are past the threshold and still fit on the projected
 * machine. The region between the two boundaries is the wedge; the year
 * it first opens is the first-advantage year.
 */

import { apply, integerTicks, makeScale, powerLabel, Scale, shortNumber } from "../scale";
import type { QapsDoc, QapsInterval } from "../types";
import type { ChartGeometry } from "./crossover";
import { CHART_STYLE } from "./style";

export const WEDGE_GEOMETRY: ChartGeometry = {
  width: 640,
  height: 300,
  marginLeft: 56,
  marginRight: 16,
  marginTop: 16,
  marginBottom: 40,
};

// The capability bound grows by orders of magnitude per year, so the
// viewport caps this many decades above the wedge floor; the polygon is
// clipped, the numbers behind it are not.
const VIEW_DECADES_ABOVE_FLOOR = 30;

export interface WedgeView {
  svg: string;
  /** Years whose interval is non-empty, in order. */
  openYears: number[];
  firstOpenYear: number | null;
  xScale: Scale;
  yScale: Scale;
}

function openIntervals(doc: QapsDoc): QapsInterval[] {
  return doc.intervals.filter((iv) => !iv.empty && iv.lower !== null && iv.upper !== null);
}

export function buildWedgeView(
  doc: QapsDoc,
  geometry: ChartGeometry = WEDGE_GEOMETRY,
): WedgeView {
  const { width, height, marginLeft, marginRight, marginTop, marginBottom } = geometry;
  const years = doc.intervals.map((iv) => iv.year);
  if (years.length === 0) {
    throw new Error("qaps document has no sampled years");
  }
  const open = openIntervals(doc);

  const xScale = makeScale(years[0]!, years[years.length - 1]!, marginLeft, width - marginRight);

  let yMin = 0;
  let yMax = 1;
  if (open.length > 0) {
    const floors = open.map((iv) => iv.lower!.log10);
    const caps = open.map((iv) => iv.upper!.log10);
    yMin = Math.min(...floors) - 1;
    yMax = Math.min(Math.max(...caps), Math.min(...floors) + VIEW_DECADES_ABOVE_FLOOR) + 1;
  } else if (doc.log10_root !== null) {
    yMin = doc.log10_root - 1;
    yMax = doc.log10_root + 4;
  }
  const yScale = makeScale(yMin, yMax, height - marginBottom, marginTop);

  const plotTop = marginTop;
  const plotBottom = height - marginBottom;
  const plotRight = width - marginRight;
  const clamp = (px: number) => Math.max(plotTop, Math.min(plotBottom, px));

  const parts: string[] = [];
  parts.push(
    `<svg class="chart" viewBox="0 0 ${width} ${height}" xmlns="http://www.w3.org/2000/svg" role="img">`,
  );
  parts.push(CHART_STYLE);
  parts.push(`<rect class="bg" x="0" y="0" width="${width}" height="${height}"/>`);

  for (const tick of integerTicks(years[0]!, years[years.length - 1]!, 10)) {
    const x = apply(xScale, tick).toFixed(2);
    parts.push(`<line class="gridline" x1="${x}" y1="${plotTop}" x2="${x}" y2="${plotBottom}"/>`);
    parts.push(`<text class="tick" x="${x}" y="${plotBottom + 16}" text-anchor="middle">${tick}</text>`);
  }
  for (const tick of integerTicks(yMin, yMax, 6)) {
    const y = apply(yScale, tick).toFixed(2);
    parts.push(`<line class="gridline" x1="${marginLeft}" y1="${y}" x2="${plotRight}" y2="${y}"/>`);
    parts.push(
      `<text class="tick" x="${marginLeft - 6}" y="${y}" text-anchor="end" dominant-baseline="middle">${powerLabel(tick)}</text>`,
    );
  }

  if (open.length > 0) {
    const forward = open.map(
      (iv) => `${apply(xScale, iv.year).toFixed(2)},${clamp(apply(yScale, iv.lower!.log10)).toFixed(2)}`,
    );
    const backward = [...open]
      .reverse()
      .map(
        (iv) => `${apply(xScale, iv.year).toFixed(2)},${clamp(apply(yScale, iv.upper!.log10)).toFixed(2)}`,
      );
    parts.push(`<polygon class="wedge" points="${[...forward, ...backward].join(" ")}"/>`);
  }

  if (doc.log10_root !== null) {
    const y = clamp(apply(yScale, doc.log10_root)).toFixed(2);
    parts.push(
      `<line class="threshold-line" x1="${marginLeft}" y1="${y}" x2="${plotRight}" y2="${y}" stroke-dasharray="4 4"/>`,
    );
  }

  const firstYear = doc.first_advantage_year;
  if (firstYear !== null && firstYear >= years[0]! && firstYear <= years[years.length - 1]!) {
    const x = apply(xScale, firstYear).toFixed(2);
    parts.push(
      `<line class="marker" x1="${x}" y1="${plotTop}" x2="${x}" y2="${plotBottom}" stroke-dasharray="4 4"/>`,
    );
    parts.push(
      `<text class="marker-label" x="${x}" y="${plotTop + 12}" text-anchor="middle">${shortNumber(firstYear)}</text>`,
    );
  }

  parts.push(
    `<text class="axis-label" x="${(marginLeft + plotRight) / 2}" y="${height - 6}" text-anchor="middle">year (${doc.provider} projection)</text>`,
  );
  parts.push(`</svg>`);

  return {
    svg: parts.join(""),
    openYears: open.map((iv) => iv.year),
    firstOpenYear: open.length > 0 ? open[0]!.year : null,
    xScale,
    yScale,
  };
}
