// User settings persisted in browser local storage under one versioned key.

export interface AlertSettings {
  min_threshold: number | null;
  max_threshold: number | null;
  enabled: boolean;
}

export interface UiSettings {
  day_zero: string; // ISO date
  length_days: number;
  rotation: string[]; // ordered attribute ids
  alerts: AlertSettings;
  t_base: number;
  reference: string; // "mean:5" | "season:2020"
  map_layer: "street" | "satellite";
}

export const STORAGE_KEY = "agroclim.ui.v1";

export function defaultSettings(): UiSettings {
  return {
    day_zero: new Date(new Date().getFullYear(), 9, 1).toISOString().slice(0, 10),
    length_days: 180,
    rotation: ["T_MAX", "T_MIN", "RAIN_CUMULATIVE", "VPD", "GDD_CUMULATIVE", "RADIATION"],
    alerts: { min_threshold: 15, max_threshold: null, enabled: false },
    t_base: 10,
    reference: "mean:5",
    map_layer: "street",
  };
}

export function validateSettings(s: UiSettings): string[] {
  const problems: string[] = [];
  if (!s.rotation.length) problems.push("chart rotation list must not be empty");
  if (new Set(s.rotation).size !== s.rotation.length) problems.push("chart rotation list has duplicates");
  if (!(s.length_days >= 1 && s.length_days <= 366)) problems.push("season length must be 1..366 days");
  if (!/^\d{4}-\d{2}-\d{2}$/.test(s.day_zero)) problems.push("day-zero must be an ISO date");
  const { min_threshold, max_threshold } = s.alerts;
  if (min_threshold != null && max_threshold != null && !(min_threshold < max_threshold)) {
    problems.push("minimum alert threshold must be below the maximum");
  }
  if (!Number.isFinite(s.t_base)) problems.push("base temperature must be a number");
  return problems;
}

export function loadSettings(storage: Storage = localStorage): UiSettings {
  const raw = storage.getItem(STORAGE_KEY);
  if (!raw) return defaultSettings();
  try {
    const parsed = { ...defaultSettings(), ...JSON.parse(raw) };
    return validateSettings(parsed).length ? defaultSettings() : parsed;
  } catch {
    return defaultSettings();
  }
}

export function saveSettings(s: UiSettings, storage: Storage = localStorage): string[] {
  const problems = validateSettings(s);
  if (problems.length) return problems; // save blocked
  storage.setItem(STORAGE_KEY, JSON.stringify(s));
  return [];
}
