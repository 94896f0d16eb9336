import { describe, expect, it } from "vitest";

import type { AnalysisResponse } from "../src/types";
import { bannerText, buildBoardView, validateSetup } from "../src/view";

const analysis: AnalysisResponse = {
  position: "3+2",
  value: -1,
  outcome: "P",
  toMove: "L",
  status: "in-progress",
  winner: null,
  moves: [
    { row: 0, cell: 0, player: "L", resultOutcome: "P", winning: true },
    { row: 0, cell: 1, player: "L", resultOutcome: "R", winning: false },
  ],
};

describe("buildBoardView", () => {
  it("mirrors the board content cell by cell", () => {
    const view = buildBoardView(["..LRR."], null);
    expect(view[0].map((c) => c.content).join("")).toBe("..LRR.");
    expect(view[0][3]).toMatchObject({ row: 0, cell: 3, content: "R" });
  });

  it("attaches server annotations only where the overlay has moves", () => {
    const view = buildBoardView(["...", "RR."], analysis);
    expect(view[0][0].annotation).toEqual({ resultOutcome: "P", winning: true });
    expect(view[0][1].annotation).toEqual({ resultOutcome: "R", winning: false });
    expect(view[0][2].annotation).toBeUndefined();
    expect(view[1][0].annotation).toBeUndefined();
  });

  it("carries no annotations when the overlay is off", () => {
    const view = buildBoardView(["..."], null);
    expect(view[0].every((c) => c.annotation === undefined)).toBe(true);
  });
});

describe("bannerText", () => {
  it("is empty while the game runs", () => {
    expect(bannerText("in-progress", null, "L")).toBe("");
  });

  it("names the winner under the misère convention", () => {
    const text = bannerText("finished", "R", "L");
    expect(text).toContain("The engine wins");
    expect(text).toContain("Right");
    expect(text).toContain("last player to move loses");
    expect(bannerText("finished", "L", "L")).toContain("You win");
  });
});

describe("validateSetup", () => {
  it("parses comma/space separated lengths", () => {
    expect(validateSetup("6, 4 3")).toEqual({ rows: [6, 4, 3] });
  });

  it("rejects zero-length rows", () => {
    expect(validateSetup("0")).toHaveProperty("error");
    expect(validateSetup("6,0")).toHaveProperty("error");
  });

  it("rejects junk and out-of-range values", () => {
    expect(validateSetup("")).toHaveProperty("error");
    expect(validateSetup("abc")).toHaveProperty("error");
    expect(validateSetup("61")).toHaveProperty("error");
  });
});
