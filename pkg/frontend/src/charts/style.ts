// Styles are embedded in each SVG so PNG export keeps its colors.
export const CHART_STYLE = `<style>
.bg { fill: #141a24; }
.gridline { stroke: #263145; stroke-width: 1; }
.tick { fill: #8fa0b8; font: 11px system-ui, sans-serif; }
.axis-label { fill: #8fa0b8; font: 12px system-ui, sans-serif; }
.curve { stroke-width: 2; }
.curve.classical { stroke: #4f9cf9; }
.curve.quantum { stroke: #f9a04f; }
.swatch.classical { fill: #4f9cf9; }
.swatch.quantum { fill: #f9a04f; }
.marker { stroke: #e85d75; stroke-width: 1.5; }
.marker-label { fill: #e85d75; font: 12px system-ui, sans-serif; }
.threshold-line { stroke: #9d7be8; stroke-width: 1.5; }
.wedge { fill: rgba(105, 200, 130, 0.35); stroke: #69c882; stroke-width: 1; }
</style>`;
