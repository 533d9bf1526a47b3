/**
 * Control wiring. All numbers come from the API; all chart geometry
 * comes from the pure builders; this file only moves strings between
 * the DOM, the URL fragment, and the fetch channels.
 */

import { catalogUrl, gridUrl, qapsUrl, thresholdUrl, ViewChannel } from "./api";
import { pairedEntries } from "./catalog";
import { buildCrossoverView } from "./charts/crossover";
import { renderGridTable } from "./charts/grid";
import { buildWedgeView } from "./charts/wedge";
import { crossoverCsv, gridCsv, wedgeCsv } from "./csv";
import { markOffset, splitParamError } from "./errors";
import {
  C_LOG10_MAX,
  C_LOG10_MIN,
  decodeFragment,
  DEFAULT_STATE,
  encodeState,
  ExplorerState,
  NAMED_SCENARIOS,
  statesEqual,
} from "./state";
import type { CatalogDoc, GridDoc, QapsDoc, ThresholdDoc } from "./types";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const controls = {
  catalog: $<HTMLSelectElement>("catalog-select"),
  classical: $<HTMLInputElement>("classical-input"),
  quantum: $<HTMLInputElement>("quantum-input"),
  scenario: $<HTMLSelectElement>("scenario-select"),
  slider: $<HTMLInputElement>("c-slider"),
  sliderValue: $<HTMLElement>("c-value"),
  provider: $<HTMLSelectElement>("provider-select"),
  yearStart: $<HTMLInputElement>("year-start"),
  yearEnd: $<HTMLInputElement>("year-end"),
};

const views = {
  notice: $<HTMLElement>("notice-banner"),
  crossoverChart: $<HTMLElement>("crossover-chart"),
  crossoverSummary: $<HTMLElement>("crossover-summary"),
  crossoverError: $<HTMLElement>("crossover-error"),
  wedgeChart: $<HTMLElement>("wedge-chart"),
  wedgeSummary: $<HTMLElement>("wedge-summary"),
  wedgeError: $<HTMLElement>("wedge-error"),
  gridChart: $<HTMLElement>("grid-chart"),
  gridError: $<HTMLElement>("grid-error"),
};

let state: ExplorerState = { ...DEFAULT_STATE };

// Last good documents, kept so an error never blanks a chart.
let lastThreshold: ThresholdDoc | null = null;
let lastGrid: GridDoc | null = null;
let lastQaps: QapsDoc | null = null;

const thresholdChannel = new ViewChannel<ThresholdDoc>();
const gridChannel = new ViewChannel<GridDoc>();
const qapsChannel = new ViewChannel<QapsDoc>();

// ---------------------------------------------------------------------------
// Rendering

function showError(banner: HTMLElement, message: string): void {
  banner.textContent = message;
  banner.classList.remove("hidden");
}

function clearError(banner: HTMLElement): void {
  banner.classList.add("hidden");
}

function markExpressionError(message: string, offset: number | null): void {
  const { param, detail } = splitParamError(message);
  const input =
    param === "classical" ? controls.classical : param === "quantum" ? controls.quantum : null;
  if (input && offset !== null) {
    const pre = document.createElement("pre");
    pre.className = "caret";
    pre.textContent = markOffset(input.value, offset);
    views.crossoverError.textContent = `${param}: ${detail}`;
    views.crossoverError.appendChild(pre);
    views.crossoverError.classList.remove("hidden");
    input.classList.add("invalid");
  } else {
    showError(views.crossoverError, message);
  }
}

function renderCrossover(doc: ThresholdDoc): void {
  lastThreshold = doc;
  const view = buildCrossoverView(doc);
  views.crossoverChart.innerHTML = view.svg;
  if (view.noAdvantage) {
    views.crossoverSummary.innerHTML = `<span class="badge badge-red">no advantage</span>`;
  } else {
    const range =
      doc.exact !== null && doc.threshold !== String(doc.exact)
        ? ` (${doc.exact})`
        : "";
    views.crossoverSummary.innerHTML =
      `threshold n* = <strong>${doc.threshold}</strong>${range}` +
      ` <span class="badge badge-${doc.cell_class}">${doc.cell_class}</span>`;
  }
}

function renderGrid(doc: GridDoc): void {
  lastGrid = doc;
  views.gridChart.innerHTML = renderGridTable(doc);
}

function renderWedge(doc: QapsDoc): void {
  lastQaps = doc;
  const view = buildWedgeView(doc);
  views.wedgeChart.innerHTML = view.svg;
  if (doc.first_advantage_year === null) {
    views.wedgeSummary.textContent = "no advantage in reach for this pair";
  } else {
    const year = doc.first_advantage_year;
    views.wedgeSummary.innerHTML =
      `first advantage <strong>${year.toFixed(1)}</strong>` +
      ` (${Math.floor(year)}-${Math.floor(year) + 1}, ${doc.provider})`;
  }
}

// ---------------------------------------------------------------------------
// Fetching

async function refreshCrossover(): Promise<void> {
  const result = await thresholdChannel.request(thresholdUrl(state));
  if (result.kind === "stale") return;
  controls.classical.classList.remove("invalid");
  controls.quantum.classList.remove("invalid");
  if (result.kind === "error") {
    markExpressionError(result.message, result.offset);
    return;
  }
  clearError(views.crossoverError);
  renderCrossover(result.doc);
}

async function refreshGrid(): Promise<void> {
  const result = await gridChannel.request(gridUrl(state));
  if (result.kind === "stale") return;
  if (result.kind === "error") {
    showError(views.gridError, result.message);
    return;
  }
  clearError(views.gridError);
  renderGrid(result.doc);
}

async function refreshWedge(): Promise<void> {
  const url = qapsUrl(state);
  if (url === null) {
    views.wedgeSummary.textContent =
      "pick a catalog problem to project hardware feasibility";
    clearError(views.wedgeError);
    return;
  }
  const result = await qapsChannel.request(url);
  if (result.kind === "stale") return;
  if (result.kind === "error") {
    showError(views.wedgeError, result.message);
    return;
  }
  clearError(views.wedgeError);
  renderWedge(result.doc);
}

function refreshAll(): void {
  void refreshCrossover();
  void refreshGrid();
  void refreshWedge();
}

// ---------------------------------------------------------------------------
// Controls <-> state

function sliderLabel(cLog10: number): string {
  return Number.isInteger(cLog10) ? `10^${cLog10}` : `10^${cLog10.toFixed(1)}`;
}

function syncControls(): void {
  controls.classical.value = state.classical;
  controls.quantum.value = state.quantum;
  controls.provider.value = state.provider;
  controls.yearStart.value = String(state.yearStart);
  controls.yearEnd.value = String(state.yearEnd);
  controls.catalog.value = state.catalogId ?? "";

  if (state.scenario.kind === "named") {
    const name = state.scenario.name;
    ensureScenarioOption(name);
    controls.scenario.value = name;
    // park the slider on the matching detent; dragging it switches to custom
    const named = NAMED_SCENARIOS.find((s) => s.name === name);
    if (named) controls.slider.value = String(named.cLog10);
  } else {
    controls.scenario.value = "custom";
    controls.slider.value = String(state.scenario.cLog10);
  }
  controls.sliderValue.textContent = sliderLabel(Number(controls.slider.value));
}

// A fragment may name a scenario this build does not know; keep it
// selectable so the link still round-trips.
function ensureScenarioOption(name: string): void {
  const options = Array.from(controls.scenario.options).map((o) => o.value);
  if (!options.includes(name)) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    controls.scenario.insertBefore(option, controls.scenario.lastElementChild);
  }
}

function writeFragment(): void {
  const encoded = encodeState(state);
  history.replaceState(null, "", `#${encoded}`);
}

function applyState(next: ExplorerState): void {
  state = next;
  syncControls();
  writeFragment();
  refreshAll();
}

let debounceTimer: number | undefined;
function applyStateDebounced(next: ExplorerState, delayMs = 200): void {
  state = next;
  syncControls();
  writeFragment();
  window.clearTimeout(debounceTimer);
  debounceTimer = window.setTimeout(refreshAll, delayMs);
}

function wireControls(catalog: CatalogDoc): void {
  const paired = pairedEntries(catalog);
  for (const entry of paired) {
    const option = document.createElement("option");
    option.value = entry.id;
    option.textContent = entry.problem_name;
    controls.catalog.appendChild(option);
  }
  controls.catalog.value = state.catalogId ?? "";

  controls.catalog.addEventListener("change", () => {
    const id = controls.catalog.value;
    if (id === "") {
      applyState({ ...state, catalogId: null });
      return;
    }
    const entry = paired.find((e) => e.id === id);
    if (!entry) return;
    applyState({
      ...state,
      catalogId: id,
      classical: entry.classical_runtime,
      quantum: entry.quantum_runtime ?? state.quantum,
    });
  });

  const onExpressionInput = (): void => {
    // manual edits detach the pair from the selected catalog entry
    applyStateDebounced({
      ...state,
      classical: controls.classical.value,
      quantum: controls.quantum.value,
      catalogId: null,
    });
  };
  controls.classical.addEventListener("input", onExpressionInput);
  controls.quantum.addEventListener("input", onExpressionInput);

  controls.scenario.addEventListener("change", () => {
    const value = controls.scenario.value;
    if (value === "custom") {
      applyState({
        ...state,
        scenario: { kind: "custom", cLog10: Number(controls.slider.value) },
      });
    } else {
      applyState({ ...state, scenario: { kind: "named", name: value } });
    }
  });

  controls.slider.addEventListener("input", () => {
    const cLog10 = Number(controls.slider.value);
    // dragging the slider always means a custom exponent
    applyStateDebounced({ ...state, scenario: { kind: "custom", cLog10 } });
  });

  controls.provider.addEventListener("change", () => {
    applyState({ ...state, provider: controls.provider.value });
  });

  const onYearChange = (): void => {
    const yearStart = Number(controls.yearStart.value);
    const yearEnd = Number(controls.yearEnd.value);
    if (!Number.isFinite(yearStart) || !Number.isFinite(yearEnd)) return;
    applyStateDebounced({ ...state, yearStart, yearEnd });
  };
  controls.yearStart.addEventListener("input", onYearChange);
  controls.yearEnd.addEventListener("input", onYearChange);

  window.addEventListener("hashchange", () => {
    const decoded = decodeFragment(window.location.hash);
    if (decoded.notice) {
      showError(views.notice, decoded.notice);
    }
    if (!statesEqual(decoded.state, state)) {
      applyState(decoded.state);
    }
  });
}

// ---------------------------------------------------------------------------
// Downloads

function downloadBlob(blob: Blob, filename: string): void {
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = filename;
  a.click();
  URL.revokeObjectURL(url);
}

function downloadCsv(text: string, filename: string): void {
  downloadBlob(new Blob([text], { type: "text/csv" }), filename);
}

function downloadPng(container: HTMLElement, filename: string): void {
  const svg = container.querySelector("svg");
  if (!svg) return;
  const xml = new XMLSerializer().serializeToString(svg);
  const viewBox = (svg.getAttribute("viewBox") ?? "0 0 640 360").split(" ");
  const width = Number(viewBox[2]);
  const height = Number(viewBox[3]);
  const image = new Image();
  image.onload = () => {
    const canvas = document.createElement("canvas");
    canvas.width = width * 2;
    canvas.height = height * 2;
    const ctx = canvas.getContext("2d");
    if (!ctx) return;
    ctx.drawImage(image, 0, 0, canvas.width, canvas.height);
    canvas.toBlob((blob) => {
      if (blob) downloadBlob(blob, filename);
    }, "image/png");
  };
  image.src = `data:image/svg+xml;charset=utf-8,${encodeURIComponent(xml)}`;
}

function wireDownloads(): void {
  $("crossover-csv").addEventListener("click", () => {
    if (lastThreshold) downloadCsv(crossoverCsv(lastThreshold), "crossover.csv");
  });
  $("crossover-png").addEventListener("click", () => {
    downloadPng(views.crossoverChart, "crossover.png");
  });
  $("wedge-csv").addEventListener("click", () => {
    if (lastQaps) downloadCsv(wedgeCsv(lastQaps), "wedge.csv");
  });
  $("wedge-png").addEventListener("click", () => {
    downloadPng(views.wedgeChart, "wedge.png");
  });
  $("grid-csv").addEventListener("click", () => {
    if (lastGrid) downloadCsv(gridCsv(lastGrid), "grid.csv");
  });
}

// ---------------------------------------------------------------------------
// Boot

async function boot(): Promise<void> {
  controls.slider.min = String(C_LOG10_MIN);
  controls.slider.max = String(C_LOG10_MAX);

  const decoded = decodeFragment(window.location.hash);
  state = decoded.state;
  if (decoded.notice) {
    showError(views.notice, decoded.notice);
  }

  let catalog: CatalogDoc = { scenario: null, c_log10: null, classification: null, entries: [] };
  try {
    const response = await fetch(catalogUrl());
    if (response.ok) catalog = (await response.json()) as CatalogDoc;
  } catch {
    // catalog picker stays empty; expressions still work
  }

  wireControls(catalog);
  wireDownloads();
  syncControls();
  writeFragment();
  refreshAll();
}

void boot();
