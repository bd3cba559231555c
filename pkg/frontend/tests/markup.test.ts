import { describe, expect, it } from "vitest";

import type { FindingView } from "../src/api.js";
import { buildSegments, mergeSpans } from "../src/markup.js";

function finding(id: string, start: number, end: number, category = "V"): FindingView {
  return {
    id,
    requirement_id: "R1",
    category: category as FindingView["category"],
    subtype: "VAGUE_VERB",
    span: { start, end },
    trigger: "",
    criticality: 3,
    rationale: "",
    status: "PROPOSED",
    recommendations: [],
  };
}

describe("buildSegments", () => {
  it("cuts text at exactly the provided offsets", () => {
    const text = "The C&C shall provide the users with data.";
    const start = text.indexOf("provide");
    const segments = buildSegments(text, [finding("f1", start, start + 7)]);
    expect(segments.map((s) => s.text).join("")).toBe(text);
    const marked = segments.filter((s) => s.marked);
    expect(marked).toHaveLength(1);
    expect(marked[0].text).toBe("provide");
    expect(marked[0].findingIds).toEqual(["f1"]);
  });

  it("merges overlapping spans into one region", () => {
    const text = "alpha beta gamma";
    const segments = buildSegments(text, [
      finding("f1", 0, 10),
      finding("f2", 6, 15),
    ]);
    const marked = segments.filter((s) => s.marked);
    expect(marked).toHaveLength(1);
    expect(marked[0].text).toBe("alpha beta gamm");
    expect(marked[0].findingIds).toEqual(["f1", "f2"]);
  });

  it("returns the whole text unmarked for no findings", () => {
    const segments = buildSegments("nothing here", []);
    expect(segments).toEqual([
      { text: "nothing here", marked: false, findingIds: [] },
    ]);
  });

  it("rejects spans outside the text", () => {
    expect(() => buildSegments("short", [finding("f1", 2, 99)])).toThrow(/span/);
  });

  it("keeps span order independent of input order", () => {
    const regions = mergeSpans([finding("b", 10, 12), finding("a", 0, 4)]);
    expect(regions.map((r) => r.start)).toEqual([0, 10]);
  });
});
