/** Linear mapping from a data domain onto pixel coordinates. */
export interface Scale {
  domainMin: number;
  domainMax: number;
  rangeMin: number;
  rangeMax: number;
}

export function makeScale(
  domainMin: number,
  domainMax: number,
  rangeMin: number,
  rangeMax: number,
): Scale {
  // degenerate domains still need to land somewhere on screen
  if (domainMax === domainMin) domainMax = domainMin + 1;
  return { domainMin, domainMax, rangeMin, rangeMax };
}

export function apply(scale: Scale, value: number): number {
  const t = (value - scale.domainMin) / (scale.domainMax - scale.domainMin);
  return scale.rangeMin + t * (scale.rangeMax - scale.rangeMin);
}

/** Roughly `count` integer tick positions across a domain. */
export function integerTicks(min: number, max: number, count: number): number[] {
  const span = max - min;
  if (span <= 0) return [Math.round(min)];
  const rawStep = span / Math.max(count, 1);
  const step = Math.max(1, Math.round(rawStep));
  const ticks: number[] = [];
  for (let v = Math.ceil(min); v <= max; v += step) {
    ticks.push(v);
  }
  return ticks;
}

/** Axis label for a log10 position: 1 -> "10", 12 -> "10^12". */
export function powerLabel(log10: number): string {
  if (log10 === 0) return "1";
  if (log10 === 1) return "10";
  return `10^${log10}`;
}

const roundTo = (v: number, digits: number): number => {
  const f = Math.pow(10, digits);
  return Math.round(v * f) / f;
};

/** One decimal place is plenty for axis years and magnitudes. */
export function shortNumber(v: number): string {
  return String(roundTo(v, 1));
}

export function escapeXml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}
