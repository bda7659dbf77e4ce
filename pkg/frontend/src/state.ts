// View state: the selected location, the active chart in the rotation, the
// difference toggle, hidden traces, and the superseding-request contract
// (a newer map click aborts or outranks any older in-flight request).

import { ApiClient, type SeriesQuery } from "./api.js";
import type { SeriesResponse } from "./types.js";
import type { UiSettings } from "./settings.js";

export interface ViewState {
  selected: { lat: number; lon: number } | null;
  activeChart: number;
  differenceMode: boolean;
  hiddenTraces: Set<string>;
  loading: boolean;
  error: string | null;
  response: SeriesResponse | null;
}

export function initialViewState(): ViewState {
  return {
    selected: null,
    activeChart: 0,
    differenceMode: false,
    hiddenTraces: new Set(),
    loading: false,
    error: null,
    response: null,
  };
}

/** Cyclic rotation through the chart list. */
export function nextChart(index: number, count: number, step: 1 | -1): number {
  return ((index + step) % count + count) % count;
}

export function toggleDifference(state: ViewState): ViewState {
  return { ...state, differenceMode: !state.differenceMode };
}

export function toggleTrace(state: ViewState, label: string): ViewState {
  const hidden = new Set(state.hiddenTraces);
  if (hidden.has(label)) hidden.delete(label);
  else hidden.add(label);
  return { ...state, hiddenTraces: hidden };
}

export function queryFromSettings(lat: number, lon: number, s: UiSettings): SeriesQuery {
  return {
    lat,
    lon,
    day_zero: s.day_zero,
    length_days: s.length_days,
    attributes: s.rotation,
    comparison: true,
    reference: s.reference,
    t_base: s.t_base,
    alerts_enabled: s.alerts.enabled,
    alert_min: s.alerts.min_threshold,
    alert_max: s.alerts.max_threshold,
  };
}

/**
 * Issues series requests one map-click at a time: each new selection aborts
 * the previous in-flight request, and a stale response never wins.
 */
export class SeriesController {
  private controller: AbortController | null = null;
  private generation = 0;

  constructor(private readonly api: ApiClient) {}

  async select(lat: number, lon: number, settings: UiSettings): Promise<SeriesResponse | null> {
    this.controller?.abort();
    this.controller = new AbortController();
    const myGeneration = ++this.generation;
    try {
      const response = await this.api.series(
        queryFromSettings(lat, lon, settings),
        this.controller.signal,
      );
      return myGeneration === this.generation ? response : null;
    } catch (err) {
      if ((err as Error).name === "AbortError") return null;
      if (myGeneration !== this.generation) return null;
      throw err;
    }
  }
}
