import { describe, expect, it } from "vitest";
import { groupByInitial, labelFor } from "../src/tree.js";

describe("groupByInitial", () => {
  it("groups consecutive keys by uppercased first letter", () => {
    const keys = [
      { lemma: "cidre", sense: 1 },
      { lemma: "citron", sense: 1 },
      { lemma: "eau", sense: 1 },
      { lemma: "olive", sense: 1 },
    ];
    const groups = groupByInitial(keys);
    expect(groups.map((g) => g.letter)).toEqual(["C", "E", "O"]);
    expect(groups[0]!.keys).toHaveLength(2);
  });

  it("keeps multiple senses of one lemma together", () => {
    const keys = [
      { lemma: "verre", sense: 1 },
      { lemma: "verre", sense: 2 },
    ];
    const groups = groupByInitial(keys);
    expect(groups).toHaveLength(1);
    expect(groups[0]!.keys).toHaveLength(2);
  });

  it("handles an empty list", () => {
    expect(groupByInitial([])).toEqual([]);
  });
});

describe("labelFor", () => {
  it("omits sense 1", () => {
    expect(labelFor({ lemma: "vin", sense: 1 })).toBe("vin");
  });

  it("shows higher senses", () => {
    expect(labelFor({ lemma: "vin", sense: 2 })).toBe("vin (2)");
  });
});
