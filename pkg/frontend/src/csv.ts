/** CSV exports of whatever each chart currently shows. */

import type { GridDoc, QapsDoc, ThresholdDoc } from "./types";

function field(value: string): string {
  if (/[",\n]/.test(value)) {
    return `"${value.replaceAll('"', '""')}"`;
  }
  return value;
}

function rows(lines: string[][]): string {
  return lines.map((line) => line.map(field).join(",")).join("\n") + "\n";
}

export function crossoverCsv(doc: ThresholdDoc): string {
  const series = doc.series;
  if (!series) throw new Error("threshold document has no series data");
  const lines: string[][] = [["log10_n", "classical_log10", "quantum_scaled_log10"]];
  for (let i = 0; i < series.log10_n.length; i++) {
    lines.push([
      String(series.log10_n[i]),
      String(series.classical_log10[i]),
      String(series.quantum_scaled_log10[i]),
    ]);
  }
  return rows(lines);
}

export function gridCsv(doc: GridDoc): string {
  const lines: string[][] = [["classical", "quantum", "threshold", "log10_root", "cell_class"]];
  doc.cells.forEach((row, i) => {
    row.forEach((cell, j) => {
      lines.push([
        doc.runtimes[i] ?? "",
        doc.runtimes[j] ?? "",
        cell.threshold,
        cell.log10_root === null ? "" : String(cell.log10_root),
        cell.cell_class,
      ]);
    });
  });
  return rows(lines);
}

export function wedgeCsv(doc: QapsDoc): string {
  const lines: string[][] = [["year", "empty", "lower_log10", "upper_log10"]];
  for (const iv of doc.intervals) {
    lines.push([
      String(iv.year),
      iv.empty ? "true" : "false",
      iv.lower === null ? "" : String(iv.lower.log10),
      iv.upper === null ? "" : String(iv.upper.log10),
    ]);
  }
  return rows(lines);
}
