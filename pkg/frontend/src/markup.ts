/** Trigger-span markup built strictly from server-provided offsets.
 *
 * The client never re-tokenizes requirement text: segments are cut at
 * exactly the span offsets the API returned, so the browser and the
 * analysis engine cannot disagree about what was flagged.
 */

import type { FindingView } from "./api.js";

export interface Segment {
  text: string;
  marked: boolean;
  /** category of the first finding of the region, for styling */
  category?: string;
  /** ids of the findings covering this region */
  findingIds: string[];
}

interface Region {
  start: number;
  end: number;
  category: string;
  findingIds: string[];
}

/** Merge overlapping spans into regions (first finding's category wins). */
export function mergeSpans(findings: FindingView[]): Region[] {
  const sorted = [...findings].sort(
    (a, b) => a.span.start - b.span.start || a.span.end - b.span.end,
  );
  const regions: Region[] = [];
  for (const finding of sorted) {
    const last = regions[regions.length - 1];
    if (last && finding.span.start <= last.end) {
      last.end = Math.max(last.end, finding.span.end);
      last.findingIds.push(finding.id);
    } else {
      regions.push({
        start: finding.span.start,
        end: finding.span.end,
        category: finding.category,
        findingIds: [finding.id],
      });
    }
  }
  return regions;
}

/** Cut requirement text into plain and marked segments. */
export function buildSegments(text: string, findings: FindingView[]): Segment[] {
  const segments: Segment[] = [];
  let at = 0;
  for (const region of mergeSpans(findings)) {
    if (region.start < at || region.end > text.length) {
      throw new Error(
        `span ${region.start}..${region.end} does not fit text of length ${text.length}`,
      );
    }
    if (region.start > at) {
      segments.push({ text: text.slice(at, region.start), marked: false, findingIds: [] });
    }
    segments.push({
      text: text.slice(region.start, region.end),
      marked: true,
      category: region.category,
      findingIds: region.findingIds,
    });
    at = region.end;
  }
  if (at < text.length) {
    segments.push({ text: text.slice(at), marked: false, findingIds: [] });
  }
  return segments;
}
