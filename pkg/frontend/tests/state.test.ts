import { describe, expect, it } from "vitest";

import type { FindingView, RecommendationView } from "../src/api.js";
import {
  clampPage,
  defaultFilters,
  filtersToQuery,
  progressOf,
  queryToFilters,
} from "../src/state.js";

describe("filters <-> query codec", () => {
  it("encodes exactly the API parameter names", () => {
    const query = filtersToQuery({
      category: "V",
      status: "PROPOSED",
      minCriticality: 4,
      page: 2,
      pageSize: 10,
    });
    const params = new URLSearchParams(query);
    expect(params.get("category")).toBe("V");
    expect(params.get("status")).toBe("PROPOSED");
    expect(params.get("min_criticality")).toBe("4");
    expect(params.get("page")).toBe("2");
    expect(params.get("page_size")).toBe("10");
  });

  it("round-trips through the URL", () => {
    const filters = {
      category: "IK",
      status: "APPROVED",
      minCriticality: 2,
      page: 3,
      pageSize: 25,
    };
    expect(queryToFilters("?" + filtersToQuery(filters))).toEqual(filters);
  });

  it("ignores invalid values and falls back to defaults", () => {
    const filters = queryToFilters("?category=Z&min_criticality=9&page=-2");
    expect(filters).toEqual(defaultFilters());
  });
});

describe("clampPage", () => {
  it("clamps beyond-last to last", () => {
    expect(clampPage(99, 4)).toBe(4);
  });
  it("clamps below-first to first", () => {
    expect(clampPage(0, 4)).toBe(1);
  });
  it("handles empty result sets", () => {
    expect(clampPage(7, 0)).toBe(1);
  });
});

describe("progressOf", () => {
  function rec(status: RecommendationView["status"]): RecommendationView {
    return {
      id: "r",
      candidate_text: "x",
      evidence: [],
      status,
      decided_by: null,
      decided_at: null,
      decisions: [],
    };
  }
  function finding(category: string, recs: RecommendationView[]): FindingView {
    return {
      id: "f",
      requirement_id: "R1",
      category: category as FindingView["category"],
      subtype: "VAGUE_VERB",
      span: { start: 0, end: 1 },
      trigger: "t",
      criticality: 3,
      rationale: "",
      status: "PROPOSED",
      recommendations: recs,
    };
  }

  it("tallies statuses and categories", () => {
    const progress = progressOf([
      finding("V", [rec("PROPOSED"), rec("APPROVED")]),
      finding("A", [rec("REJECTED")]),
    ]);
    expect(progress.proposed).toBe(1);
    expect(progress.approved).toBe(1);
    expect(progress.rejected).toBe(1);
    expect(progress.byCategory.V).toBe(1);
    expect(progress.byCategory.A).toBe(1);
  });

  it("is all zeroes for an empty report", () => {
    const progress = progressOf([]);
    expect(progress.proposed + progress.approved + progress.rejected).toBe(0);
  });
});
