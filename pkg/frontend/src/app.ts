// Wires the page together: map, chart rotation, text summaries, alerts,
// settings panel, and report download. All DOM ids live in index.html.

import { ApiClient, ApiError } from "./api.js";
import { renderChart } from "./charts.js";
import { MapView } from "./map.js";
import {
  SeriesController,
  initialViewState,
  nextChart,
  type ViewState,
} from "./state.js";
import {
  defaultSettings,
  loadSettings,
  saveSettings,
  type UiSettings,
} from "./settings.js";
import type { PublicConfig, SeriesResponse } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

export class App {
  state: ViewState = initialViewState();
  settings: UiSettings;
  map!: MapView;

  private readonly seriesController: SeriesController;
  private config: PublicConfig | null = null;

  constructor(
    private readonly api: ApiClient = new ApiClient(),
    private readonly storage: Storage = localStorage,
  ) {
    this.settings = loadSettings(this.storage);
    this.seriesController = new SeriesController(api);
  }

  async start(): Promise<void> {
    this.config = await this.api.publicConfig();
    this.map = new MapView(el("map"), {
      street: this.config.tile_street,
      satellite: this.config.tile_satellite,
    });
    if (this.map.layerAvailable(this.settings.map_layer)) {
      this.map.setLayer(this.settings.map_layer);
    }
    this.map.onSelect = (lat, lon) => void this.select(lat, lon);
    this.bindControls();
    this.renderSettingsForm();
    this.renderHelp();
    this.render();
  }

  private bindControls(): void {
    el("chart-prev").addEventListener("click", () => this.rotate(-1));
    el("chart-next").addEventListener("click", () => this.rotate(1));
    el("difference-toggle").addEventListener("click", () => {
      this.state = { ...this.state, differenceMode: !this.state.differenceMode };
      this.render();
    });
    el("layer-street").addEventListener("click", () => this.map.setLayer("street"));
    el("layer-satellite").addEventListener("click", () => this.map.setLayer("satellite"));
    el("settings-save").addEventListener("click", () => this.saveSettingsFromForm());
    el("report-download").addEventListener("click", () => void this.downloadReport());
    el("alert-dismiss").addEventListener("click", () => {
      el("alert-banner").hidden = true;
    });
  }

  rotate(step: 1 | -1): void {
    const count = this.state.response?.attributes.length ?? 0;
    if (!count) return;
    this.state = { ...this.state, activeChart: nextChart(this.state.activeChart, count, step) };
    this.render();
  }

  async select(lat: number, lon: number): Promise<void> {
    this.state = { ...this.state, selected: { lat, lon }, loading: true, error: null };
    this.render();
    try {
      const response = await this.seriesController.select(lat, lon, this.settings);
      if (response === null) return; // superseded by a newer click
      this.state = { ...this.state, response, activeChart: 0, loading: false };
    } catch (err) {
      const message = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
      this.state = { ...this.state, response: null, loading: false, error: message };
    }
    this.render();
  }

  async downloadReport(): Promise<void> {
    const sel = this.state.selected;
    if (!sel) return;
    const blob = await this.api.report({
      latitude: sel.lat,
      longitude: sel.lon,
      day_zero: this.settings.day_zero,
      length_days: this.settings.length_days,
      attributes: this.settings.rotation,
      comparison: true,
      t_base: this.settings.t_base,
    });
    const url = URL.createObjectURL(blob);
    const a = document.createElement("a");
    a.href = url;
    a.download = `report-${sel.lat}-${sel.lon}-${this.settings.day_zero}.pdf`;
    document.body.appendChild(a);
    a.click();
    a.remove();
    URL.revokeObjectURL(url);
  }

  renderSettingsForm(): void {
    el<HTMLInputElement>("set-day-zero").value = this.settings.day_zero;
    el<HTMLInputElement>("set-length").value = String(this.settings.length_days);
    el<HTMLInputElement>("set-rotation").value = this.settings.rotation.join(",");
    el<HTMLInputElement>("set-t-base").value = String(this.settings.t_base);
    el<HTMLInputElement>("set-reference").value = this.settings.reference;
    el<HTMLInputElement>("set-alerts-enabled").checked = this.settings.alerts.enabled;
    el<HTMLInputElement>("set-alert-min").value =
      this.settings.alerts.min_threshold == null ? "" : String(this.settings.alerts.min_threshold);
    el<HTMLInputElement>("set-alert-max").value =
      this.settings.alerts.max_threshold == null ? "" : String(this.settings.alerts.max_threshold);
  }

  settingsFromForm(): UiSettings {
    const num = (id: string): number | null => {
      const raw = el<HTMLInputElement>(id).value.trim();
      return raw === "" ? null : Number(raw);
    };
    return {
      ...defaultSettings(),
      day_zero: el<HTMLInputElement>("set-day-zero").value.trim(),
      length_days: Number(el<HTMLInputElement>("set-length").value),
      rotation: el<HTMLInputElement>("set-rotation")
        .value.split(",")
        .map((s) => s.trim())
        .filter(Boolean),
      t_base: Number(el<HTMLInputElement>("set-t-base").value),
      reference: el<HTMLInputElement>("set-reference").value.trim(),
      alerts: {
        enabled: el<HTMLInputElement>("set-alerts-enabled").checked,
        min_threshold: num("set-alert-min"),
        max_threshold: num("set-alert-max"),
      },
      map_layer: this.map ? this.map.state.layer : this.settings.map_layer,
    };
  }

  saveSettingsFromForm(): string[] {
    const candidate = this.settingsFromForm();
    const problems = saveSettings(candidate, this.storage);
    const errorsEl = el("settings-errors");
    if (problems.length) {
      errorsEl.textContent = problems.join("; ");
      errorsEl.hidden = false;
      return problems; // invalid settings never replace the active ones
    }
    errorsEl.textContent = "";
    errorsEl.hidden = true;
    this.settings = candidate;
    const sel = this.state.selected;
    if (sel) void this.select(sel.lat, sel.lon);
    return [];
  }

  renderHelp(): void {
    const link = el<HTMLAnchorElement>("help-link");
    if (this.config?.help_url) {
      link.href = this.config.help_url;
      link.hidden = false;
    } else {
      link.hidden = true;
    }
  }

  render(): void {
    el("status").textContent = this.state.loading
      ? "Loading…"
      : this.state.error ?? "";

    const chartHost = el("chart");
    const textHost = el("summary-text");
    chartHost.textContent = "";
    textHost.textContent = "";

    const response = this.state.response;
    if (!response) {
      el("alert-banner").hidden = true;
      el("chart-caption").textContent = "";
      return;
    }

    const series = response.attributes[this.state.activeChart];
    if (series) {
      chartHost.appendChild(
        renderChart(series, {
          differenceMode: this.state.differenceMode,
          hidden: this.state.hiddenTraces,
        }),
      );
      el("chart-caption").textContent =
        `${this.state.activeChart + 1} / ${response.attributes.length}` +
        (this.state.differenceMode ? " — difference vs reference" : "");
      // The text panel must reproduce the service sentences verbatim.
      for (const sentence of series.sentences) {
        const p = document.createElement("p");
        p.className = "summary-sentence";
        p.textContent = sentence;
        textHost.appendChild(p);
      }
      if (series.low_confidence) {
        const note = document.createElement("p");
        note.className = "low-confidence";
        note.textContent = "Low confidence: this season has substantial data gaps.";
        textHost.appendChild(note);
      }
    }

    const banner = el("alert-banner");
    const alertText = el("alert-text");
    if (response.alerts.length) {
      alertText.textContent = response.alerts
        .map((a) =>
          a.kind === "below_min"
            ? `Minimum temperature fell below ${a.threshold}°C (reached ${a.observed_extreme}°C on ${a.dates.length} day${a.dates.length === 1 ? "" : "s"}).`
            : `Maximum temperature rose above ${a.threshold}°C (reached ${a.observed_extreme}°C on ${a.dates.length} day${a.dates.length === 1 ? "" : "s"}).`,
        )
        .join(" ");
      banner.hidden = false;
    } else {
      banner.hidden = true;
    }
  }
}

export function bootstrap(): App {
  const app = new App();
  void app.start();
  return app;
}
