import { describe, expect, it } from "vitest";
import { pairedEntries } from "../src/catalog";
import type { CatalogDoc } from "../src/types";
import catalog from "./fixtures/catalog.json";

const doc = catalog as CatalogDoc;

describe("catalog picker", () => {
  it("offers exactly the problems with a quantum pairing", () => {
    const paired = pairedEntries(doc);
    expect(paired.map((e) => e.id).sort()).toEqual(["grover", "hhl", "qft", "shor"]);
    for (const entry of paired) {
      expect(entry.quantum_runtime).toBeTruthy();
      expect(entry.qubit_requirement).toBeTruthy();
    }
  });

  it("keeps the rest of the catalog out of the picker", () => {
    expect(doc.entries.length).toBe(105);
    expect(pairedEntries(doc).length).toBe(4);
  });
});
