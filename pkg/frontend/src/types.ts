// Wire types for the /api/v1 endpoints.

export interface AttributeInfo {
  id: string;
  name: string;
  unit: string;
}

export interface PublicConfig {
  tile_street: string | null;
  tile_satellite: string | null;
  help_url: string | null;
  default_t_base: number;
  default_gdd_method: string;
  default_reference_years: number;
  alert_defaults: {
    min_threshold: number | null;
    max_threshold: number | null;
    enabled: boolean;
    window_days: number;
  };
  attributes: AttributeInfo[];
  bounding_box: [number, number, number, number]; // lat_min, lat_max, lon_min, lon_max
}

export interface StatsModel {
  min_value: number;
  min_index: number;
  max_value: number;
  max_index: number;
  mean: number;
  last_value: number;
  trend: string;
  slope: number;
  valid_count: number;
}

export interface AlertModel {
  kind: "below_min" | "above_max";
  dates: string[];
  observed_extreme: number;
  threshold: number;
}

export interface AttributeSeries {
  attribute: string;
  name: string;
  unit: string;
  current: (number | null)[];
  reference: (number | null)[] | null;
  difference: (number | null)[] | null;
  stats: StatsModel | null;
  sentences: string[];
  low_confidence: boolean;
  gap_days: number;
}

export interface SeriesResponse {
  latitude: number;
  longitude: number;
  day_zero: string;
  length_days: number;
  t_base: number;
  gdd_method: string;
  comparison: boolean;
  reference: { mode: string; year: number | null; n_years: number | null } | null;
  attributes: AttributeSeries[];
  alerts: AlertModel[];
  provenance: { source: string; fetched_at: string | null; cache_hit: boolean };
}

export interface ReferenceChoice {
  mode: "mean_of_last" | "single_season";
  year?: number;
  n_years?: number;
}

export interface ReportRequest {
  latitude: number;
  longitude: number;
  day_zero: string;
  length_days: number;
  attributes: string[];
  comparison: boolean;
  reference?: ReferenceChoice;
  t_base?: number;
}

export interface ErrorBody {
  code: string;
  message: string;
  details: Record<string, unknown>;
}
