/**
 * Runtime-pair heatmap. Each cell shows the server's threshold string
 * exactly as the grid document carries it, colored by its class.
 */

import { escapeXml } from "../scale";
import type { GridDoc } from "../types";

export interface GridCellView {
  /** Cell text, verbatim from the document. */
  text: string;
  cellClass: string;
  /** Hover detail; empty for cells with no finite threshold. */
  title: string;
}

export interface GridView {
  runtimes: string[];
  rows: GridCellView[][];
}

export function buildGridView(doc: GridDoc): GridView {
  const rows = doc.cells.map((row) =>
    row.map((cell) => ({
      text: cell.threshold,
      cellClass: cell.cell_class,
      title: cell.log10_root === null ? "" : `log10 root ${cell.log10_root}`,
    })),
  );
  return { runtimes: [...doc.runtimes], rows };
}

/** The heatmap as an HTML table string. */
export function renderGridTable(doc: GridDoc): string {
  const view = buildGridView(doc);
  const parts: string[] = ['<table class="grid">'];
  parts.push("<thead><tr><th>classical \\ quantum</th>");
  for (const runtime of view.runtimes) {
    parts.push(`<th>${escapeXml(runtime)}</th>`);
  }
  parts.push("</tr></thead><tbody>");
  view.rows.forEach((row, i) => {
    parts.push(`<tr><th>${escapeXml(view.runtimes[i] ?? "")}</th>`);
    for (const cell of row) {
      const title = cell.title ? ` title="${escapeXml(cell.title)}"` : "";
      parts.push(
        `<td class="cell-${cell.cellClass}"${title}>${escapeXml(cell.text)}</td>`,
      );
    }
    parts.push("</tr>");
  });
  parts.push("</tbody></table>");
  return parts.join("");
}
