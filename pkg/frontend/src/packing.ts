/** Deterministic enclosure packing: circle areas proportional to values.
 * Largest circle at the center, the rest greedily placed along a spiral;
 * everything is then rescaled to fit the viewport. Only the
 * area-monotonicity contract matters to callers. */

export interface PackedCircle<T> {
  item: T;
  x: number;
  y: number;
  r: number;
}

export function packCircles<T>(
  items: T[],
  value: (item: T) => number,
  viewport: { width: number; height: number },
): PackedCircle<T>[] {
  if (items.length === 0) return [];
  const sorted = [...items].sort((a, b) => value(b) - value(a));
  const radius = (item: T) => Math.sqrt(Math.max(value(item), 1));

  const placed: PackedCircle<T>[] = [];
  for (const item of sorted) {
    const r = radius(item);
    if (placed.length === 0) {
      placed.push({ item, x: 0, y: 0, r });
      continue;
    }
    let angle = 0;
    let distance = 0;
    for (;;) {
      const x = distance * Math.cos(angle);
      const y = distance * Math.sin(angle);
      const collides = placed.some(
        (other) => Math.hypot(other.x - x, other.y - y) < other.r + r + 1e-9,
      );
      if (!collides) {
        placed.push({ item, x, y, r });
        break;
      }
      angle += 0.35;
      distance += 0.35 * r * 0.12;
    }
  }

  // rescale into the viewport, centered
  const maxExtent = Math.max(...placed.map((c) => Math.hypot(c.x, c.y) + c.r));
  const scale = (Math.min(viewport.width, viewport.height) / 2 - 4) / maxExtent;
  return placed.map((c) => ({
    item: c.item,
    x: viewport.width / 2 + c.x * scale,
    y: viewport.height / 2 + c.y * scale,
    r: c.r * scale,
  }));
}
