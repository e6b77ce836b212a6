/** Depth selector glyph: renders the server-computed geometry verbatim.
 * The depth-n broken line zigzags between the group's two anchor rays,
 * bending on the grey circles; clicking a line selects that depth. */
import { DepthGroup, Geometry, Point } from "../api.js";
import { clear, svg } from "../dom.js";

export interface DepthSelectorCallbacks {
  onSelectDepth(depth: number): void;
}

function polylinePoints(group: DepthGroup): Point[] {
  const points: Point[] = [group.p];
  for (let i = 0; i < group.depth; i++) {
    const fromP = i % 2 === 0;
    points.push(fromP ? group.pIntersections[i] : group.qIntersections[i]);
  }
  return points;
}

export function renderDepthSelector(
  container: HTMLElement,
  geometry: Geometry,
  selectedDepth: number,
  callbacks: DepthSelectorCallbacks,
): void {
  clear(container);
  const c = geometry.container;
  const picture = svg("svg", {
    viewBox: `${c.x - c.r} ${c.y - c.r} ${2 * c.r} ${2 * c.r}`,
    width: "180",
    height: "180",
    class: "depth-svg",
  });

  picture.append(
    svg("circle", { cx: String(c.x), cy: String(c.y), r: String(c.r), class: "depth-container" }),
  );
  for (const group of geometry.groups) {
    picture.append(
      svg("circle", {
        cx: String(group.greyCircle.x),
        cy: String(group.greyCircle.y),
        r: String(group.greyCircle.r),
        class: "depth-grey",
      }),
    );
  }
  const entity = geometry.entityCircle;
  picture.append(
    svg("circle", {
      cx: String(entity.x),
      cy: String(entity.y),
      r: String(entity.r),
      class: "depth-entity",
    }),
  );

  for (const group of geometry.groups) {
    const points = polylinePoints(group)
      .map((p) => `${p.x},${p.y}`)
      .join(" ");
    const line = svg("polyline", {
      points,
      class: "depth-line" + (group.depth === selectedDepth ? " selected" : ""),
      "data-depth": String(group.depth),
    });
    line.addEventListener("click", () => callbacks.onSelectDepth(group.depth));
    picture.append(line);
  }

  container.append(picture);
}
