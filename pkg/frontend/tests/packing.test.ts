import { describe, expect, it } from "vitest";

import { packCircles } from "../src/packing.js";

const VIEWPORT = { width: 400, height: 300 };

describe("circle packing", () => {
  it("keeps circle area monotone in the value", () => {
    const items = [5, 500, 50, 5000, 1].map((value, i) => ({ id: i, value }));
    const packed = packCircles(items, (d) => d.value, VIEWPORT);
    const byValue = [...packed].sort((a, b) => a.item.value - b.item.value);
    for (let i = 1; i < byValue.length; i++) {
      expect(byValue[i].r).toBeGreaterThan(byValue[i - 1].r);
    }
  });

  it("never overlaps circles", () => {
    const items = Array.from({ length: 12 }, (_, i) => ({ id: i, value: (i + 1) * 7 }));
    const packed = packCircles(items, (d) => d.value, VIEWPORT);
    for (const a of packed) {
      for (const b of packed) {
        if (a === b) continue;
        expect(Math.hypot(a.x - b.x, a.y - b.y)).toBeGreaterThanOrEqual(a.r + b.r - 1e-6);
      }
    }
  });

  it("fits the viewport", () => {
    const items = Array.from({ length: 8 }, (_, i) => ({ id: i, value: 10 ** (i % 4) }));
    for (const c of packCircles(items, (d) => d.value, VIEWPORT)) {
      expect(c.x - c.r).toBeGreaterThanOrEqual(-1e-6);
      expect(c.y - c.r).toBeGreaterThanOrEqual(-1e-6);
      expect(c.x + c.r).toBeLessThanOrEqual(VIEWPORT.width + 1e-6);
      expect(c.y + c.r).toBeLessThanOrEqual(VIEWPORT.height + 1e-6);
    }
  });

  it("is deterministic", () => {
    const items = [3, 1, 4, 1.5, 9].map((value, i) => ({ id: i, value }));
    expect(packCircles(items, (d) => d.value, VIEWPORT)).toEqual(
      packCircles(items, (d) => d.value, VIEWPORT),
    );
  });

  it("handles the empty list", () => {
    expect(packCircles([], () => 1, VIEWPORT)).toEqual([]);
  });
});
