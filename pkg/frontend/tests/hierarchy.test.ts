import { describe, expect, it } from "vitest";
import { outline } from "../src/hierarchy.js";

describe("outline", () => {
  it("walks children depth-first in sorted order", () => {
    const rows = outline({
      root: "top",
      nodes: { top: [], entity: ["top"], event: ["top"], liquid: ["entity"] },
    });
    expect(rows).toEqual([
      { name: "top", depth: 0 },
      { name: "entity", depth: 1 },
      { name: "liquid", depth: 2 },
      { name: "event", depth: 1 },
    ]);
  });

  it("repeats a multi-parent node under each parent", () => {
    const rows = outline({
      root: "top",
      nodes: { top: [], a: ["top"], b: ["top"], both: ["a", "b"] },
    });
    const hits = rows.filter((r) => r.name === "both");
    expect(hits).toHaveLength(2);
    expect(hits.every((r) => r.depth === 2)).toBe(true);
  });

  it("handles a root-only hierarchy", () => {
    expect(outline({ root: "top", nodes: { top: [] } })).toEqual([{ name: "top", depth: 0 }]);
  });
});
