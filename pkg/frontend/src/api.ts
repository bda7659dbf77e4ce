// Thin client for the analysis service. All domain math happens server-side;
// this module only moves JSON and PDF bytes.

import type {
  AttributeInfo,
  PublicConfig,
  ReportRequest,
  SeriesResponse,
} from "./types.js";

export interface SeriesQuery {
  lat: number;
  lon: number;
  day_zero: string;
  length_days: number;
  attributes: string[];
  comparison: boolean;
  reference?: string; // "mean:5" | "season:2020"
  t_base?: number;
  alert_min?: number | null;
  alert_max?: number | null;
  alerts_enabled?: boolean;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
    public readonly details: Record<string, unknown> = {},
  ) {
    super(message);
  }
}

async function raiseForStatus(resp: Response): Promise<void> {
  if (resp.ok) return;
  let code = "http_error";
  let message = `HTTP ${resp.status}`;
  let details: Record<string, unknown> = {};
  try {
    const body = await resp.json();
    code = body.code ?? code;
    message = body.message ?? message;
    details = body.details ?? {};
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiError(resp.status, code, message, details);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  async publicConfig(): Promise<PublicConfig> {
    const resp = await this.fetchFn(this.url("/api/v1/config/public"));
    await raiseForStatus(resp);
    return resp.json();
  }

  async attributes(): Promise<AttributeInfo[]> {
    const resp = await this.fetchFn(this.url("/api/v1/attributes"));
    await raiseForStatus(resp);
    return resp.json();
  }

  seriesUrl(query: SeriesQuery): string {
    const params = new URLSearchParams({
      lat: query.lat.toFixed(4),
      lon: query.lon.toFixed(4),
      day_zero: query.day_zero,
      length_days: String(query.length_days),
      attributes: query.attributes.join(","),
      comparison: String(query.comparison),
    });
    if (query.reference) params.set("reference", query.reference);
    if (query.t_base !== undefined) params.set("t_base", String(query.t_base));
    if (query.alerts_enabled !== undefined) {
      params.set("alerts_enabled", String(query.alerts_enabled));
      if (query.alert_min != null) params.set("alert_min", String(query.alert_min));
      if (query.alert_max != null) params.set("alert_max", String(query.alert_max));
    }
    return this.url(`/api/v1/series?${params.toString()}`);
  }

  async series(query: SeriesQuery, signal?: AbortSignal): Promise<SeriesResponse> {
    const resp = await this.fetchFn(this.seriesUrl(query), { signal });
    await raiseForStatus(resp);
    return resp.json();
  }

  async report(body: ReportRequest): Promise<Blob> {
    const resp = await this.fetchFn(this.url("/api/v1/report"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    await raiseForStatus(resp);
    return resp.blob();
  }
}
