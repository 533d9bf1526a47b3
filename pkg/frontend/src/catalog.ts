import type { CatalogDoc, CatalogEntry } from "./types";

/** Entries that can drive all three views: they carry a quantum runtime. */
export function pairedEntries(doc: CatalogDoc): CatalogEntry[] {
  return doc.entries.filter((e) => typeof e.quantum_runtime === "string");
}
