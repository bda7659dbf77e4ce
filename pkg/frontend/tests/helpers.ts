// Shared test scaffolding: a DOM skeleton matching index.html, canned
// service payloads, and a route-based fetch stub.

import type { AttributeSeries, PublicConfig, SeriesResponse } from "../src/types.js";

export function mountDom(): void {
  document.body.innerHTML = `
    <button id="layer-street"></button>
    <button id="layer-satellite"></button>
    <a id="help-link" hidden></a>
    <div id="alert-banner" hidden><span id="alert-text"></span>
      <button id="alert-dismiss"></button></div>
    <div id="map"></div>
    <div id="status"></div>
    <button id="chart-prev"></button>
    <span id="chart-caption"></span>
    <button id="chart-next"></button>
    <button id="difference-toggle"></button>
    <button id="report-download"></button>
    <div id="chart"></div>
    <div id="summary-text"></div>
    <input id="set-day-zero" />
    <input id="set-length" />
    <input id="set-rotation" />
    <input id="set-t-base" />
    <input id="set-reference" />
    <input id="set-alerts-enabled" type="checkbox" />
    <input id="set-alert-min" />
    <input id="set-alert-max" />
    <div id="settings-errors" hidden></div>
    <button id="settings-save"></button>
  `;
}

export function publicConfig(overrides: Partial<PublicConfig> = {}): PublicConfig {
  return {
    tile_street: "https://tiles.example/street/{z}/{x}/{y}.png",
    tile_satellite: "https://tiles.example/sat/{z}/{x}/{y}.png",
    help_url: "https://example.org/help",
    default_t_base: 10,
    default_gdd_method: "clamp_components",
    default_reference_years: 5,
    alert_defaults: { min_threshold: 15, max_threshold: null, enabled: false, window_days: 9 },
    attributes: [
      { id: "T_MAX", name: "Maximum temperature", unit: "°C" },
      { id: "T_MIN", name: "Minimum temperature", unit: "°C" },
    ],
    bounding_box: [-44, -10, 112, 154],
    ...overrides,
  };
}

export function attributeSeries(overrides: Partial<AttributeSeries> = {}): AttributeSeries {
  return {
    attribute: "T_MAX",
    name: "Maximum temperature",
    unit: "°C",
    current: [21.1, 22.4, null, 24.0, 25.5],
    reference: [20.0, 21.0, 21.5, 22.0, 22.5],
    difference: [1.1, 1.4, null, 2.0, 3.0],
    stats: {
      min_value: 21.1,
      min_index: 0,
      max_value: 25.5,
      max_index: 4,
      mean: 23.25,
      last_value: 25.5,
      trend: "rising",
      slope: 1.05,
      valid_count: 4,
    },
    sentences: [
      "Maximum temperature (°C) at -34.56, 146.40 over the 5 days from 2024-10-01.",
      "The minimum of 21.1 fell on 2024-10-01 and the maximum of 25.5 on 2024-10-05.",
      "The mean was 23.3 and the overall trend was rising.",
    ],
    low_confidence: false,
    gap_days: 1,
    ...overrides,
  };
}

export function seriesResponse(overrides: Partial<SeriesResponse> = {}): SeriesResponse {
  return {
    latitude: -34.56,
    longitude: 146.4,
    day_zero: "2024-10-01",
    length_days: 5,
    t_base: 10,
    gdd_method: "clamp_components",
    comparison: true,
    reference: { mode: "mean_of_last", year: null, n_years: 5 },
    attributes: [
      attributeSeries(),
      attributeSeries({ attribute: "T_MIN", name: "Minimum temperature" }),
    ],
    alerts: [],
    provenance: { source: "fixture", fetched_at: null, cache_hit: true },
    ...overrides,
  };
}

export interface FetchLogEntry {
  url: string;
  init?: RequestInit;
}

/** Fetch stub that matches URLs by prefix and records every call. */
export function makeFetch(
  routes: Record<string, () => Response>,
): { fetchFn: typeof fetch; log: FetchLogEntry[] } {
  const log: FetchLogEntry[] = [];
  const fetchFn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    log.push({ url, init });
    for (const [prefix, make] of Object.entries(routes)) {
      if (url.startsWith(prefix)) return make();
    }
    return new Response(
      JSON.stringify({ code: "not_found", message: `no route for ${url}`, details: {} }),
      { status: 404, headers: { "Content-Type": "application/json" } },
    );
  }) as typeof fetch;
  return { fetchFn, log };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}
