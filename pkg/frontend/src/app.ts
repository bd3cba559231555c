/** DOM rendering and event wiring for the review queue.
 *
 * The server is authoritative: every status shown here was returned by
 * the API, and a decision click re-renders only after the POST response
 * arrives (no optimistic updates).
 */

import { ApiRequestError, ReviewApi } from "./api.js";
import type { FindingsPage, FindingView, RequirementView } from "./api.js";
import { buildSegments } from "./markup.js";
import { clampPage, defaultFilters, filtersToQuery, progressOf, queryToFilters } from "./state.js";
import type { Filters } from "./state.js";

const CATEGORY_LABELS: Record<string, string> = {
  A: "ambiguity",
  V: "vagueness",
  IK: "incomplete knowledge",
  O: "other",
};

export class App {
  private filters: Filters = defaultFilters();
  private expertId = "E1";

  constructor(
    private readonly api: ReviewApi,
    private readonly root: HTMLElement,
  ) {}

  async start(): Promise<void> {
    this.filters = queryToFilters(window.location.search);
    await this.refresh();
  }

  private pushUrl(): void {
    const query = filtersToQuery(this.filters);
    history.replaceState(null, "", `${window.location.pathname}?${query}`);
  }

  async refresh(): Promise<void> {
    this.pushUrl();
    let page: FindingsPage;
    try {
      page = await this.api.listFindings(filtersToQuery(this.filters));
    } catch (error) {
      this.renderError(error);
      return;
    }
    if (page.page_count > 0 && this.filters.page > page.page_count) {
      this.filters.page = clampPage(this.filters.page, page.page_count);
      await this.refresh();
      return;
    }
    this.render(page);
  }

  private renderError(error: unknown): void {
    const message =
      error instanceof ApiRequestError
        ? `${error.code}: ${error.message}`
        : "review service unreachable";
    this.root.replaceChildren(
      el("div", { class: "banner error" }, [
        el("span", {}, [text(message)]),
        button("Retry", () => void this.refresh()),
      ]),
    );
  }

  private render(page: FindingsPage): void {
    const children: HTMLElement[] = [];
    children.push(this.renderControls(page));
    children.push(this.renderProgress(page));
    if (page.items.length === 0) {
      children.push(el("p", { class: "empty" }, [text("No findings match the filters.")]));
    } else {
      const byRequirement = new Map<string, FindingView[]>();
      for (const finding of page.items) {
        const list = byRequirement.get(finding.requirement_id) ?? [];
        list.push(finding);
        byRequirement.set(finding.requirement_id, list);
      }
      for (const [requirementId, findings] of byRequirement) {
        const requirement = page.requirements[requirementId];
        children.push(this.renderRequirement(requirement, findings));
      }
    }
    children.push(this.renderPager(page));
    this.root.replaceChildren(...children);
  }

  private renderControls(page: FindingsPage): HTMLElement {
    const categorySelect = select(
      ["", "A", "V", "IK", "O"],
      this.filters.category ?? "",
      (value) => {
        this.filters.category = value || null;
        this.filters.page = 1;
        void this.refresh();
      },
      (value) => (value === "" ? "all categories" : `${value} (${CATEGORY_LABELS[value]})`),
    );
    const statusSelect = select(
      ["", "PROPOSED", "APPROVED", "REJECTED"],
      this.filters.status ?? "",
      (value) => {
        this.filters.status = value || null;
        this.filters.page = 1;
        void this.refresh();
      },
      (value) => (value === "" ? "all statuses" : value.toLowerCase()),
    );
    const criticalitySelect = select(
      ["", "1", "2", "3", "4", "5"],
      this.filters.minCriticality === null ? "" : String(this.filters.minCriticality),
      (value) => {
        this.filters.minCriticality = value ? Number(value) : null;
        this.filters.page = 1;
        void this.refresh();
      },
      (value) => (value === "" ? "any criticality" : `criticality ≥ ${value}`),
    );
    const expertInput = el("input", {
      value: this.expertId,
      title: "expert id recorded with decisions",
    }) as HTMLInputElement;
    expertInput.addEventListener("change", () => {
      this.expertId = expertInput.value.trim() || "E1";
    });
    return el("div", { class: "controls" }, [
      categorySelect,
      statusSelect,
      criticalitySelect,
      el("label", {}, [text("expert "), expertInput]),
      el("span", { class: "total" }, [text(`${page.total} findings`)]),
    ]);
  }

  private renderProgress(page: FindingsPage): HTMLElement {
    const progress = progressOf(page.items);
    const chips = [
      `proposed ${progress.proposed}`,
      `approved ${progress.approved}`,
      `rejected ${progress.rejected}`,
      ...Object.entries(progress.byCategory)
        .filter(([, count]) => count > 0)
        .map(([category, count]) => `${category} ${count}`),
    ];
    return el(
      "div",
      { class: "progress" },
      chips.map((chip) => el("span", { class: "chip" }, [text(chip)])),
    );
  }

  private renderRequirement(
    requirement: RequirementView | undefined,
    findings: FindingView[],
  ): HTMLElement {
    const card = el("div", { class: "requirement" });
    if (!requirement) {
      card.append(el("p", {}, [text("(unknown requirement)")]));
      return card;
    }
    const header = el("p", { class: "req-text" }, [
      el("b", {}, [text(requirement.id)]),
      text(": "),
    ]);
    for (const segment of buildSegments(requirement.text, findings)) {
      if (segment.marked) {
        header.append(
          el("mark", { class: `cat-${segment.category ?? "A"}` }, [text(segment.text)]),
        );
      } else {
        header.append(text(segment.text));
      }
    }
    card.append(header);
    for (const finding of findings) {
      card.append(this.renderFinding(finding));
    }
    return card;
  }

  private renderFinding(finding: FindingView): HTMLElement {
    const box = el("div", { class: "finding", "data-finding": finding.id });
    box.append(
      el("p", { class: "meta" }, [
        el("span", { class: `badge cat-${finding.category}` }, [text(finding.category)]),
        text(
          ` ${finding.subtype.toLowerCase().replaceAll("_", " ")} · ` +
            `criticality ${finding.criticality} · ${finding.rationale}`,
        ),
      ]),
    );
    for (const rec of finding.recommendations) {
      const row = el("div", { class: "recommendation", "data-rec": rec.id });
      row.append(el("p", {}, [text(rec.candidate_text)]));
      if (rec.evidence.length > 0) {
        row.append(
          el(
            "p",
            { class: "evidence" },
            rec.evidence.map((evidence) =>
              el("code", {}, [
                text(
                  `${evidence.subject} ${evidence.relation} ${evidence.object} ` +
                    `(${evidence.confidence})`,
                ),
              ]),
            ),
          ),
        );
      }
      const statusLabel = el("span", { class: `status st-${rec.status}` }, [
        text(
          rec.status +
            (rec.decided_by ? ` by ${rec.decided_by}` : "") +
            (criticalityOf(rec.decisions) !== null
              ? ` / ${criticalityOf(rec.decisions)}`
              : ""),
        ),
      ]);
      const criticalityPick = select(
        ["1", "2", "3", "4", "5"],
        "3",
        () => undefined,
        (value) => `criticality ${value}`,
      ) as HTMLSelectElement;
      const noteInput = el("input", { placeholder: "note (optional)" }) as HTMLInputElement;
      const errorSlot = el("span", { class: "inline-error" });
      const decide = (decision: "APPROVE" | "REJECT") => {
        errorSlot.replaceChildren();
        this.api
          .postDecision({
            recommendation_id: rec.id,
            expert_id: this.expertId,
            decision,
            criticality: Number(criticalityPick.value),
            note: noteInput.value || undefined,
          })
          .then(() => this.refresh())
          .catch((error: unknown) => {
            errorSlot.replaceChildren(
              text(error instanceof ApiRequestError ? error.message : "request failed"),
            );
          });
      };
      row.append(
        el("div", { class: "actions" }, [
          statusLabel,
          criticalityPick,
          noteInput,
          button("Approve", () => decide("APPROVE")),
          button("Reject", () => decide("REJECT")),
          errorSlot,
        ]),
      );
      box.append(row);
    }
    return box;
  }

  private renderPager(page: FindingsPage): HTMLElement {
    const pager = el("div", { class: "pager" });
    const previous = button("← previous", () => {
      this.filters.page = clampPage(this.filters.page - 1, page.page_count);
      void this.refresh();
    });
    const next = button("next →", () => {
      this.filters.page = clampPage(this.filters.page + 1, page.page_count);
      void this.refresh();
    });
    (previous as HTMLButtonElement).disabled = page.page <= 1;
    (next as HTMLButtonElement).disabled = page.page >= page.page_count;
    pager.append(
      previous,
      el("span", {}, [text(` page ${page.page} of ${Math.max(page.page_count, 1)} `)]),
      next,
    );
    return pager;
  }
}

function criticalityOf(
  decisions: { criticality: number | null; timestamp: number }[],
): number | null {
  if (!decisions || decisions.length === 0) return null;
  const newest = decisions.reduce((a, b) => (a.timestamp >= b.timestamp ? a : b));
  return newest.criticality;
}

function el(
  tag: string,
  attributes: Record<string, string> = {},
  children: (HTMLElement | Text)[] = [],
): HTMLElement {
  const node = document.createElement(tag);
  for (const [name, value] of Object.entries(attributes)) {
    node.setAttribute(name, value);
  }
  node.append(...children);
  return node;
}

function text(value: string): Text {
  return document.createTextNode(value);
}

function button(label: string, onClick: () => void): HTMLElement {
  const node = el("button", {}, [text(label)]);
  node.addEventListener("click", onClick);
  return node;
}

function select(
  options: string[],
  selected: string,
  onChange: (value: string) => void,
  labelOf: (value: string) => string = (value) => value,
): HTMLElement {
  const node = document.createElement("select");
  for (const value of options) {
    const option = document.createElement("option");
    option.value = value;
    option.textContent = labelOf(value);
    option.selected = value === selected;
    node.append(option);
  }
  node.addEventListener("change", () => onChange(node.value));
  return node;
}
