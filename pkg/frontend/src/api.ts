// Typed client over the service REST surface. The fetch implementation is
// injectable so tests drive the views against a scripted server double.

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  constructor(public status: number, public body: ApiErrorBody) {
    super(body.message);
  }
}

export interface GlucoseReading {
  taken_at: string;
  value: number;
  context: string;
}

export interface Schedule {
  med_name: string;
  dose: string;
  purpose: string;
  times_of_day: string[];
  active: boolean;
}

export interface TranscriptSegment {
  seq: number;
  speaker: string;
  text: string;
  start_ms: number;
  end_ms: number;
  final: boolean;
}

export interface TermDetail {
  node_id: string;
  canonical_name: string;
  lay_explanation: string;
  disambiguation_cues: string[];
  related: [string, string][];
}

export interface QAResult {
  kind: "answer" | "clarification_request";
  text: string;
  citations: string[];
  retrieval_score: number;
}

export interface ReportDocument {
  patient_id: string;
  period: string;
  glucose: { mean: number | null; sd: number | null; slope_per_day: number | null; time_in_range: number | null; n: number };
  adherence: number;
  symptom_frequency: Record<string, number>;
  knowledge_gaps: [string, number][];
  sentiment: { distribution: Record<string, number> };
  open_alerts: { kind: string; detected_at: string; evidence: string[] }[];
  narrative: { chronological: NarrativeEvent[]; thematic: Record<string, NarrativeEvent[]> };
}

export interface NarrativeEvent {
  at: string;
  source: string;
  description: string;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  token: string | null = null;

  constructor(
    private baseUrl: string = "",
    private fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    const response = await this.fetchFn(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = await response.json().catch(() => ({}));
    if (!response.ok) {
      const error = (payload as { error?: ApiErrorBody }).error ?? {
        code: "unknown",
        message: `HTTP ${response.status}`,
      };
      throw new ApiError(response.status, error);
    }
    return payload as T;
  }

  async login(principalId: string, password: string): Promise<string> {
    const out = await this.request<{ token: string }>("POST", "/auth/login", {
      principal_id: principalId,
      password,
    });
    this.token = out.token;
    return out.token;
  }

  scopes(patientId: string): Promise<{ scopes: string[] }> {
    return this.request("GET", `/patients/${patientId}/scopes`);
  }

  postGlucose(patientId: string, reading: GlucoseReading): Promise<{ id: string }> {
    return this.request("POST", `/patients/${patientId}/glucose`, reading);
  }

  glucoseSeries(patientId: string): Promise<GlucoseReading[]> {
    return this.request("GET", `/patients/${patientId}/glucose`);
  }

  schedules(patientId: string): Promise<{ schedules: Schedule[] }> {
    return this.request("GET", `/patients/${patientId}/schedules`);
  }

  postMedicationEvent(
    patientId: string,
    event: { med_name: string; scheduled_at: string; outcome: string; taken_at?: string },
  ): Promise<{ id: string }> {
    return this.request("POST", `/patients/${patientId}/medication-events`, event);
  }

  prompts(patientId: string, now: string): Promise<{ prompts: string[] }> {
    return this.request("GET", `/patients/${patientId}/prompts?now=${encodeURIComponent(now)}`);
  }

  reminders(patientId: string, now: string): Promise<{ reminders: string[] }> {
    return this.request("GET", `/patients/${patientId}/reminders?now=${encodeURIComponent(now)}`);
  }

  adherence(patientId: string, start: string, end: string): Promise<{ adherence: number }> {
    return this.request(
      "GET",
      `/patients/${patientId}/adherence?start=${encodeURIComponent(start)}&end=${encodeURIComponent(end)}`,
    );
  }

  report(patientId: string, month: string, preview = false): Promise<ReportDocument> {
    const suffix = preview ? "?preview=true" : "";
    return this.request("GET", `/patients/${patientId}/reports/${month}${suffix}`);
  }

  transcript(sessionId: string): Promise<{ segments: TranscriptSegment[]; sidebar: string[] }> {
    return this.request("GET", `/sessions/${sessionId}/transcript`);
  }

  term(nodeId: string): Promise<TermDetail> {
    return this.request("GET", `/terms/${nodeId}`);
  }

  qa(patientId: string, question: string): Promise<QAResult> {
    return this.request("POST", "/qa", { patient_id: patientId, question });
  }

  ingestChunk(sessionId: string, seq: number, offsetMs: number, payloadText: string): Promise<{ events: number[] }> {
    return this.request("POST", `/sessions/${sessionId}/chunks`, {
      seq,
      offset_ms: offsetMs,
      payload_text: payloadText,
    });
  }
}
