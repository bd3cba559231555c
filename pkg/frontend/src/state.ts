/** Filter and pagination state, kept URL-encoded so views are shareable. */

import type { FindingView } from "./api.js";

export interface Filters {
  category: string | null;
  status: string | null;
  minCriticality: number | null;
  page: number;
  pageSize: number;
}

export const DEFAULT_PAGE_SIZE = 10;

export function defaultFilters(): Filters {
  return {
    category: null,
    status: null,
    minCriticality: null,
    page: 1,
    pageSize: DEFAULT_PAGE_SIZE,
  };
}

/** Encode filters exactly as the API query parameters. */
export function filtersToQuery(filters: Filters): string {
  const params = new URLSearchParams();
  if (filters.category) params.set("category", filters.category);
  if (filters.status) params.set("status", filters.status);
  if (filters.minCriticality !== null) {
    params.set("min_criticality", String(filters.minCriticality));
  }
  params.set("page", String(filters.page));
  params.set("page_size", String(filters.pageSize));
  return params.toString();
}

export function queryToFilters(search: string): Filters {
  const params = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  const filters = defaultFilters();
  const category = params.get("category");
  if (category && ["A", "V", "IK", "O"].includes(category)) filters.category = category;
  const status = params.get("status");
  if (status && ["PROPOSED", "APPROVED", "REJECTED"].includes(status)) {
    filters.status = status;
  }
  const minCriticality = Number(params.get("min_criticality"));
  if (Number.isInteger(minCriticality) && minCriticality >= 1 && minCriticality <= 5) {
    filters.minCriticality = minCriticality;
  }
  const page = Number(params.get("page"));
  if (Number.isInteger(page) && page >= 1) filters.page = page;
  const pageSize = Number(params.get("page_size"));
  if (Number.isInteger(pageSize) && pageSize >= 1 && pageSize <= 200) {
    filters.pageSize = pageSize;
  }
  return filters;
}

/** Clamp a requested page into [1, pageCount]; empty results clamp to 1. */
export function clampPage(page: number, pageCount: number): number {
  if (pageCount < 1) return 1;
  return Math.min(Math.max(1, page), pageCount);
}

export interface Progress {
  proposed: number;
  approved: number;
  rejected: number;
  byCategory: Record<string, number>;
}

/** Tallies for the progress panel, over recommendation statuses. */
export function progressOf(findings: FindingView[]): Progress {
  const progress: Progress = {
    proposed: 0,
    approved: 0,
    rejected: 0,
    byCategory: { A: 0, V: 0, IK: 0, O: 0 },
  };
  for (const finding of findings) {
    progress.byCategory[finding.category] =
      (progress.byCategory[finding.category] ?? 0) + 1;
    for (const rec of finding.recommendations) {
      if (rec.status === "APPROVED") progress.approved += 1;
      else if (rec.status === "REJECTED") progress.rejected += 1;
      else progress.proposed += 1;
    }
  }
  return progress;
}
