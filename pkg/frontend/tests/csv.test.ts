import { describe, expect, it } from "vitest";
import { crossoverCsv, gridCsv, wedgeCsv } from "../src/csv";
import type { GridDoc, QapsDoc, ThresholdDoc } from "../src/types";
import gridBase from "./fixtures/grid_base.json";
import qapsGrover from "./fixtures/qaps_grover_ibm.json";
import groverBase from "./fixtures/threshold_grover_base.json";

const threshold = groverBase as ThresholdDoc;
const grid = gridBase as GridDoc;
const qaps = qapsGrover as QapsDoc;

describe("csv downloads", () => {
  it("exports one crossover row per sample", () => {
    const lines = crossoverCsv(threshold).trimEnd().split("\n");
    expect(lines[0]).toBe("log10_n,classical_log10,quantum_scaled_log10");
    expect(lines).toHaveLength(1 + threshold.series!.log10_n.length);
    expect(lines[1]).toBe(
      [
        threshold.series!.log10_n[0],
        threshold.series!.classical_log10[0],
        threshold.series!.quantum_scaled_log10[0],
      ].join(","),
    );
  });

  it("exports the grid in row-major order", () => {
    const lines = gridCsv(grid).trimEnd().split("\n");
    expect(lines[0]).toBe("classical,quantum,threshold,log10_root,cell_class");
    expect(lines).toHaveLength(1 + 36);
    expect(lines[1]).toBe("exp(n),exp(n),no-advantage,,red");
    // row for n^3 vs n^2
    expect(lines).toContain("n^3,n^2,10^6,6,yellow");
  });

  it("exports wedge intervals with blanks for empty years", () => {
    const lines = wedgeCsv(qaps).trimEnd().split("\n");
    expect(lines[0]).toBe("year,empty,lower_log10,upper_log10");
    expect(lines).toHaveLength(1 + qaps.intervals.length);
    expect(lines[1]).toBe("2024,true,,");
    const open = qaps.intervals.find((iv) => !iv.empty)!;
    expect(lines).toContain(
      `${open.year},false,${open.lower!.log10},${open.upper!.log10}`,
    );
  });

  it("quotes fields containing commas", () => {
    const doc: GridDoc = {
      c_log10: 6,
      scenario: null,
      runtimes: ['max(m, n)"x"'],
      cells: [
        [
          {
            threshold: "7",
            exact: 7,
            log10: 0.845,
            log10_root: 0.8,
            cell_class: "green",
          },
        ],
      ],
    };
    const lines = gridCsv(doc).trimEnd().split("\n");
    expect(lines[1]).toBe('"max(m, n)""x""","max(m, n)""x""",7,0.8,green');
  });
});
