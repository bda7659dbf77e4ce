// Minimal slippy-map: pan/zoom tile viewer with click-to-select and a
// street/satellite layer switch that keeps center and zoom in lock-step.

import {
  TILE_SIZE,
  latToWorldY,
  lonToWorldX,
  screenToLatLon,
  tileUrl,
} from "./mercator.js";

export type LayerName = "street" | "satellite";

export interface MapState {
  centerLat: number;
  centerLon: number;
  zoom: number;
  layer: LayerName;
}

export interface LayerTemplates {
  street: string | null;
  satellite: string | null;
}

export function switchLayer(state: MapState, layer: LayerName, templates: LayerTemplates): MapState {
  if (!templates[layer]) return state; // option unavailable: no-op
  return { ...state, layer };
}

export function zoomTo(state: MapState, zoom: number): MapState {
  return { ...state, zoom: Math.min(18, Math.max(2, Math.round(zoom))) };
}

export function panTo(state: MapState, lat: number, lon: number): MapState {
  return { ...state, centerLat: lat, centerLon: lon };
}

export class MapView {
  state: MapState;
  marker: { lat: number; lon: number } | null = null;
  onSelect: ((lat: number, lon: number) => void) | null = null;

  private tilesEl: HTMLElement;
  private markerEl: HTMLElement;

  constructor(
    private readonly container: HTMLElement,
    private readonly templates: LayerTemplates,
    initial: Partial<MapState> = {},
  ) {
    this.state = {
      centerLat: -33.0,
      centerLon: 147.0,
      zoom: 5,
      layer: templates.street ? "street" : "satellite",
      ...initial,
    };
    container.classList.add("map-viewport");
    this.tilesEl = document.createElement("div");
    this.tilesEl.className = "map-tiles";
    this.markerEl = document.createElement("div");
    this.markerEl.className = "map-marker";
    this.markerEl.style.display = "none";
    container.append(this.tilesEl, this.markerEl);
    container.addEventListener("click", (ev) => this.handleClick(ev as MouseEvent));
    this.render();
  }

  private viewportSize(): { w: number; h: number } {
    return {
      w: this.container.clientWidth || 800,
      h: this.container.clientHeight || 500,
    };
  }

  handleClick(ev: MouseEvent): void {
    const rect = this.container.getBoundingClientRect();
    const { w, h } = this.viewportSize();
    const { lat, lon } = screenToLatLon(
      this.state.centerLat,
      this.state.centerLon,
      this.state.zoom,
      ev.clientX - rect.left,
      ev.clientY - rect.top,
      w,
      h,
    );
    const lat4 = Number(lat.toFixed(4));
    const lon4 = Number(lon.toFixed(4));
    this.setMarker(lat4, lon4);
    this.onSelect?.(lat4, lon4);
  }

  setMarker(lat: number, lon: number): void {
    this.marker = { lat, lon };
    this.render();
  }

  setLayer(layer: LayerName): void {
    this.state = switchLayer(this.state, layer, this.templates);
    this.render();
  }

  layerAvailable(layer: LayerName): boolean {
    return Boolean(this.templates[layer]);
  }

  setZoom(zoom: number): void {
    this.state = zoomTo(this.state, zoom);
    this.render();
  }

  panBy(dxPx: number, dyPx: number): void {
    const { w, h } = this.viewportSize();
    const { lat, lon } = screenToLatLon(
      this.state.centerLat, this.state.centerLon, this.state.zoom,
      w / 2 + dxPx, h / 2 + dyPx, w, h,
    );
    this.state = panTo(this.state, lat, lon);
    this.render();
  }

  render(): void {
    const template = this.templates[this.state.layer];
    this.tilesEl.textContent = "";
    if (template) {
      const { w, h } = this.viewportSize();
      const z = this.state.zoom;
      const cx = lonToWorldX(this.state.centerLon, z);
      const cy = latToWorldY(this.state.centerLat, z);
      const x0 = Math.floor((cx - w / 2) / TILE_SIZE);
      const x1 = Math.floor((cx + w / 2) / TILE_SIZE);
      const y0 = Math.max(0, Math.floor((cy - h / 2) / TILE_SIZE));
      const y1 = Math.min(2 ** z - 1, Math.floor((cy + h / 2) / TILE_SIZE));
      for (let ty = y0; ty <= y1; ty++) {
        for (let tx = x0; tx <= x1; tx++) {
          const img = document.createElement("img");
          img.src = tileUrl(template, z, tx, ty);
          img.className = "map-tile";
          img.style.left = `${tx * TILE_SIZE - cx + w / 2}px`;
          img.style.top = `${ty * TILE_SIZE - cy + h / 2}px`;
          this.tilesEl.appendChild(img);
        }
      }
    }
    if (this.marker) {
      const { w, h } = this.viewportSize();
      const z = this.state.zoom;
      const mx = lonToWorldX(this.marker.lon, z) - lonToWorldX(this.state.centerLon, z) + w / 2;
      const my = latToWorldY(this.marker.lat, z) - latToWorldY(this.state.centerLat, z) + h / 2;
      this.markerEl.style.display = "block";
      this.markerEl.style.left = `${mx}px`;
      this.markerEl.style.top = `${my}px`;
    } else {
      this.markerEl.style.display = "none";
    }
  }
}
