/** End-to-end round-trip against the real review service.
 *
 * Spawns the Python service on a scratch report, approves one
 * recommendation with criticality 4, and checks that a "page reload"
 * (fresh GET) and even a full service restart keep showing the
 * server-side status. Trigger spans are asserted to cut the requirement
 * text at exactly the offsets the API returned.
 */

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ReviewApi } from "../src/api.js";
import { buildSegments } from "../src/markup.js";
import { filtersToQuery } from "../src/state.js";

const PORT = 8731;
const BASE = `http://127.0.0.1:${PORT}`;
const scratch = mkdtempSync(join(tmpdir(), "cotir-ui-"));
const reportPath = join(scratch, "report.json");
const logPath = join(scratch, "decisions.jsonl");

let server: ChildProcess | null = null;

function startServer(): ChildProcess {
  return spawn(
    "python3",
    ["-m", "cotir.cli", "serve", "--report", reportPath, "--log", logPath,
     "--port", String(PORT)],
    { stdio: "ignore" },
  );
}

async function waitForHealth(timeoutMs = 15000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("review service did not come up");
}

async function stopServer(proc: ChildProcess): Promise<void> {
  proc.kill("SIGTERM");
  await new Promise((resolve) => {
    proc.once("exit", resolve);
    setTimeout(resolve, 3000);
  });
}

beforeAll(async () => {
  const analyzed = spawnSync(
    "python3",
    ["-m", "cotir.cli", "analyze",
     join(import.meta.dirname, "..", "..", "src", "cotir", "data", "emmon_srs.txt"),
     "--out", reportPath],
    { encoding: "utf-8" },
  );
  expect(analyzed.status, analyzed.stderr).toBe(0);
  server = startServer();
  await waitForHealth();
}, 30000);

afterAll(async () => {
  if (server) await stopServer(server);
});

describe("review service round-trip", () => {
  const api = new ReviewApi(BASE);

  it("serves the golden report with renderable spans at API offsets", async () => {
    const page = await api.listFindings(
      filtersToQuery({ category: null, status: null, minCriticality: null, page: 1, pageSize: 200 }),
    );
    expect(page.total).toBeGreaterThan(30);
    expect(Object.keys(page.requirements)).toHaveLength(13);
    for (const finding of page.items) {
      const requirement = page.requirements[finding.requirement_id];
      expect(
        requirement.text.slice(finding.span.start, finding.span.end),
      ).toBe(finding.trigger);
    }
    // segment construction uses only the offsets and reassembles the text
    const byRequirement = new Map<string, typeof page.items>();
    for (const finding of page.items) {
      const list = byRequirement.get(finding.requirement_id) ?? [];
      list.push(finding);
      byRequirement.set(finding.requirement_id, list);
    }
    for (const [requirementId, findings] of byRequirement) {
      const text = page.requirements[requirementId].text;
      const segments = buildSegments(text, findings);
      expect(segments.map((s) => s.text).join("")).toBe(text);
      const markedTexts = segments.filter((s) => s.marked).map((s) => s.text);
      for (const finding of findings) {
        expect(markedTexts.some((m) => m.includes(finding.trigger))).toBe(true);
      }
    }
  });

  it("approve with criticality 4, reload, restart: server state sticks", async () => {
    const page = await api.listFindings("page_size=1");
    const recommendation = page.items[0].recommendations[0];

    const response = await api.postDecision({
      recommendation_id: recommendation.id,
      expert_id: "E7",
      decision: "APPROVE",
      criticality: 4,
    });
    expect(response.status).toBe("APPROVED");
    expect(response.decided_by).toBe("E7");

    // page reload = fresh fetch; the displayed status comes from the server
    const reloaded = await api.getFinding(page.items[0].id);
    const rec = reloaded.recommendations.find((r) => r.id === recommendation.id)!;
    expect(rec.status).toBe("APPROVED");
    const newest = rec.decisions[rec.decisions.length - 1];
    expect(newest.criticality).toBe(4);

    // full service restart: the append-only log reconstructs the status
    await stopServer(server!);
    server = startServer();
    await waitForHealth();
    const afterRestart = await api.getFinding(page.items[0].id);
    const again = afterRestart.recommendations.find((r) => r.id === recommendation.id)!;
    expect(again.status).toBe("APPROVED");
    expect(again.decisions[again.decisions.length - 1].criticality).toBe(4);
  }, 30000);

  it("rejects bad criticality with an inline-able validation error", async () => {
    const page = await api.listFindings("page_size=1");
    const recommendation = page.items[0].recommendations[0];
    await expect(
      api.postDecision({
        recommendation_id: recommendation.id,
        expert_id: "E7",
        decision: "APPROVE",
        criticality: 9,
      }),
    ).rejects.toMatchObject({ status: 400 });
  });
});
