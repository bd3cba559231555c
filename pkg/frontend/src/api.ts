/** Types and client for the review-service HTTP interface. */

export interface Span {
  start: number;
  end: number;
}

export interface Evidence {
  subject: string;
  relation: string;
  object: string;
  confidence: number;
}

export interface RecommendationView {
  id: string;
  candidate_text: string;
  evidence: Evidence[];
  status: "PROPOSED" | "APPROVED" | "REJECTED";
  decided_by: string | null;
  decided_at: number | null;
  decisions: DecisionRecord[];
}

export interface DecisionRecord {
  recommendation_id: string;
  expert_id: string;
  decision: "APPROVE" | "REJECT";
  criticality: number | null;
  note: string | null;
  timestamp: number;
}

export interface FindingView {
  id: string;
  requirement_id: string;
  category: "A" | "V" | "IK" | "O";
  subtype: string;
  span: Span;
  trigger: string;
  criticality: number;
  rationale: string;
  status: "PROPOSED" | "APPROVED" | "REJECTED";
  recommendations: RecommendationView[];
}

export interface RequirementView {
  id: string;
  text: string;
  ordinal: number;
}

export interface FindingsPage {
  items: FindingView[];
  page: number;
  page_size: number;
  total: number;
  page_count: number;
  requirements: Record<string, RequirementView>;
}

export interface DecisionResponse {
  recommendation_id: string;
  timestamp: number;
  status: "PROPOSED" | "APPROVED" | "REJECTED";
  decided_by: string | null;
  decided_at: number | null;
}

export interface ApiError {
  code: string;
  message: string;
}

export class ApiRequestError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ApiError) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  if (!response.ok) {
    let body: ApiError;
    try {
      body = (await response.json()) as ApiError;
    } catch {
      body = { code: "error", message: `HTTP ${response.status}` };
    }
    throw new ApiRequestError(response.status, body);
  }
  return (await response.json()) as T;
}

export class ReviewApi {
  constructor(private readonly baseUrl: string = "") {}

  listFindings(query: string): Promise<FindingsPage> {
    const suffix = query ? `?${query}` : "";
    return request<FindingsPage>(`${this.baseUrl}/findings${suffix}`);
  }

  getFinding(id: string): Promise<FindingView> {
    return request<FindingView>(`${this.baseUrl}/findings/${id}`);
  }

  postDecision(body: {
    recommendation_id: string;
    expert_id: string;
    decision: "APPROVE" | "REJECT";
    criticality?: number;
    note?: string;
  }): Promise<DecisionResponse> {
    return request<DecisionResponse>(`${this.baseUrl}/decisions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  health(): Promise<{ status: string; doc_id: string }> {
    return request<{ status: string; doc_id: string }>(`${this.baseUrl}/health`);
  }
}
