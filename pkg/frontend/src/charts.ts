// SVG line charts for the series returned by the service. Supports the
// current/reference pair, a difference-only mode, legend toggling of
// individual traces, and an x-range zoom window.

import type { AttributeSeries } from "./types.js";

export interface TraceSpec {
  label: "current" | "reference" | "difference";
  values: (number | null)[];
  color: string;
  dash?: string;
}

export interface ChartOptions {
  width?: number;
  height?: number;
  differenceMode?: boolean;
  hidden?: Set<string>;
  /** visible index window [from, to], inclusive */
  xWindow?: [number, number] | null;
}

export const COLORS = {
  current: "#1f6fb2",
  reference: "#c0392b",
  difference: "#2e7d32",
};

export function tracesFor(series: AttributeSeries, differenceMode: boolean): TraceSpec[] {
  if (differenceMode && series.difference) {
    return [{ label: "difference", values: series.difference, color: COLORS.difference }];
  }
  const traces: TraceSpec[] = [
    { label: "current", values: series.current, color: COLORS.current },
  ];
  if (series.reference) {
    traces.push({
      label: "reference",
      values: series.reference,
      color: COLORS.reference,
      dash: "4 2",
    });
  }
  return traces;
}

function segments(values: (number | null)[], from: number, to: number): [number, number][][] {
  const runs: [number, number][][] = [];
  let run: [number, number][] = [];
  for (let i = from; i <= to; i++) {
    const v = values[i];
    if (v == null) {
      if (run.length) runs.push(run);
      run = [];
    } else {
      run.push([i, v]);
    }
  }
  if (run.length) runs.push(run);
  return runs;
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderChart(series: AttributeSeries, opts: ChartOptions = {}): SVGSVGElement {
  const width = opts.width ?? 520;
  const height = opts.height ?? 300;
  const hidden = opts.hidden ?? new Set<string>();
  const n = series.current.length;
  const [from, to] = opts.xWindow ?? [0, n - 1];

  const traces = tracesFor(series, Boolean(opts.differenceMode)).filter(
    (t) => !hidden.has(t.label),
  );
  const values = traces.flatMap((t) => t.values.slice(from, to + 1)).filter((v): v is number => v != null);
  let lo = values.length ? Math.min(...values) : 0;
  let hi = values.length ? Math.max(...values) : 1;
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }

  const mLeft = 46;
  const mBottom = 22;
  const mTop = 26;
  const mRight = 8;
  const sx = (i: number) =>
    to === from ? mLeft : mLeft + ((width - mLeft - mRight) * (i - from)) / (to - from);
  const sy = (v: number) =>
    height - mBottom - ((height - mBottom - mTop) * (v - lo)) / (hi - lo);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "chart");
  svg.dataset.attribute = series.attribute;

  const title = document.createElementNS(SVG_NS, "text");
  title.setAttribute("x", String(width / 2));
  title.setAttribute("y", "14");
  title.setAttribute("text-anchor", "middle");
  title.setAttribute("class", "chart-title");
  title.textContent = `${series.name} (${series.unit})`;
  svg.appendChild(title);

  for (const frac of [0, 0.5, 1]) {
    const v = lo + (hi - lo) * frac;
    const grid = document.createElementNS(SVG_NS, "line");
    grid.setAttribute("x1", String(mLeft));
    grid.setAttribute("x2", String(width - mRight));
    grid.setAttribute("y1", String(sy(v)));
    grid.setAttribute("y2", String(sy(v)));
    grid.setAttribute("class", "chart-grid");
    svg.appendChild(grid);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(mLeft - 4));
    label.setAttribute("y", String(sy(v) + 3));
    label.setAttribute("text-anchor", "end");
    label.setAttribute("class", "chart-tick");
    label.textContent = v.toFixed(1);
    svg.appendChild(label);
  }

  for (const i of new Set([from, Math.floor((from + to) / 2), to])) {
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(sx(i)));
    label.setAttribute("y", String(height - 6));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "chart-tick");
    label.textContent = `day ${i}`;
    svg.appendChild(label);
  }

  for (const trace of traces) {
    for (const run of segments(trace.values, from, to)) {
      const poly = document.createElementNS(SVG_NS, "polyline");
      poly.setAttribute("points", run.map(([i, v]) => `${sx(i)},${sy(v)}`).join(" "));
      poly.setAttribute("fill", "none");
      poly.setAttribute("stroke", trace.color);
      poly.setAttribute("stroke-width", "1.5");
      if (trace.dash) poly.setAttribute("stroke-dasharray", trace.dash);
      poly.setAttribute("class", "chart-trace");
      poly.dataset.trace = trace.label;
      svg.appendChild(poly);
    }
  }

  return svg;
}
