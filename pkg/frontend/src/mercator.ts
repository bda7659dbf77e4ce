// Web-Mercator tile math (256 px tiles).

export const TILE_SIZE = 256;

export function lonToWorldX(lon: number, zoom: number): number {
  return ((lon + 180) / 360) * TILE_SIZE * 2 ** zoom;
}

export function latToWorldY(lat: number, zoom: number): number {
  const r = (lat * Math.PI) / 180;
  return (
    ((1 - Math.log(Math.tan(r) + 1 / Math.cos(r)) / Math.PI) / 2) * TILE_SIZE * 2 ** zoom
  );
}

export function worldXToLon(x: number, zoom: number): number {
  return (x / (TILE_SIZE * 2 ** zoom)) * 360 - 180;
}

export function worldYToLat(y: number, zoom: number): number {
  const n = Math.PI - (2 * Math.PI * y) / (TILE_SIZE * 2 ** zoom);
  return (180 / Math.PI) * Math.atan(Math.sinh(n));
}

/** Lat/lon under a screen pixel, given the map center and viewport size. */
export function screenToLatLon(
  centerLat: number,
  centerLon: number,
  zoom: number,
  px: number,
  py: number,
  viewportW: number,
  viewportH: number,
): { lat: number; lon: number } {
  const wx = lonToWorldX(centerLon, zoom) + (px - viewportW / 2);
  const wy = latToWorldY(centerLat, zoom) + (py - viewportH / 2);
  return { lat: worldYToLat(wy, zoom), lon: worldXToLon(wx, zoom) };
}

/** Fill a tile URL template with {z}/{x}/{y}. */
export function tileUrl(template: string, z: number, x: number, y: number): string {
  const n = 2 ** z;
  const wrapped = ((x % n) + n) % n;
  return template
    .replace("{z}", String(z))
    .replace("{x}", String(wrapped))
    .replace("{y}", String(y));
}
