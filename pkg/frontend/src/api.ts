// Typed client for the lexicon service JSON API. The UI performs no
// computation of its own: every verdict and validation shown to the user
// is the body of one of these calls.

export interface EntryKey {
  lemma: string;
  sense: number;
}

export interface QualiaDoc {
  formal: string | null;
  const: string[];
  telicState: string | null;
  telicTrigger: string | null;
  telicResult: string | null;
  agentive: string | null;
}

export interface EntryDoc {
  lemma: string;
  sense: number;
  cat: string;
  gender: string;
  elision: boolean;
  lexicalType: string;
  args: string[];
  events: string[];
  qualia: QualiaDoc;
}

export interface FetchedEntry {
  entry: EntryDoc;
  etag: string;
}

export interface VariantDoc {
  kind: string;
  sentence: string;
  valid: boolean;
}

export interface VerdictDoc {
  category: string;
  licensing: Record<string, boolean>;
  variants: VariantDoc[];
  diagnostics: string[];
}

export interface TypesDoc {
  root: string;
  nodes: Record<string, string[]>;
}

export interface ValidationProblem {
  key: EntryKey;
  path: string;
  message: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public error: string,
    public detail: string,
    public problems: ValidationProblem[] = [],
  ) {
    super(detail || error);
  }
}

export class Api {
  private token: string | null = null;

  constructor(private baseUrl: string = "") {}

  async bind(username: string, password: string): Promise<void> {
    const body = await this.request<{ token: string }>("POST", "/session", {
      json: { username, password },
    });
    this.token = body.token;
  }

  get authenticated(): boolean {
    return this.token !== null;
  }

  async search(filter: string): Promise<EntryKey[]> {
    const body = await this.request<{ results: EntryKey[] }>(
      "GET",
      `/entries?filter=${encodeURIComponent(filter)}`,
    );
    return body.results;
  }

  async fetchEntry(key: EntryKey): Promise<FetchedEntry> {
    const response = await this.raw("GET", `/entries/${encodeURIComponent(key.lemma)}/${key.sense}`);
    await throwUnlessOk(response);
    return {
      entry: (await response.json()) as EntryDoc,
      etag: response.headers.get("ETag") ?? "",
    };
  }

  async putEntry(entry: EntryDoc, etag?: string): Promise<void> {
    const headers: Record<string, string> = {};
    if (etag) headers["If-Match"] = etag;
    await this.request("PUT", `/entries/${encodeURIComponent(entry.lemma)}/${entry.sense}`, {
      json: entry,
      headers,
    });
  }

  async deleteEntry(key: EntryKey): Promise<void> {
    await this.request("DELETE", `/entries/${encodeURIComponent(key.lemma)}/${key.sense}`);
  }

  async validateAnaphora(
    head: string,
    modifier: string,
    template: string,
    possessorNumber: "sg" | "pl" = "sg",
  ): Promise<VerdictDoc> {
    return this.request<VerdictDoc>("POST", "/anaphora/validate", {
      json: { head, modifier, template, possessor_number: possessorNumber },
    });
  }

  async types(): Promise<TypesDoc> {
    return this.request<TypesDoc>("GET", "/types");
  }

  private async raw(
    method: string,
    path: string,
    options: { json?: unknown; headers?: Record<string, string> } = {},
  ): Promise<Response> {
    const headers: Record<string, string> = { ...options.headers };
    if (this.token) headers["Authorization"] = `Bearer ${this.token}`;
    let body: string | undefined;
    if (options.json !== undefined) {
      headers["Content-Type"] = "application/json";
      body = JSON.stringify(options.json);
    }
    return fetch(this.baseUrl + path, { method, headers, body });
  }

  private async request<T>(
    method: string,
    path: string,
    options: { json?: unknown; headers?: Record<string, string> } = {},
  ): Promise<T> {
    const response = await this.raw(method, path, options);
    await throwUnlessOk(response);
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }
}

async function throwUnlessOk(response: Response): Promise<void> {
  if (response.ok) return;
  let error = "";
  let detail = "";
  let problems: ValidationProblem[] = [];
  try {
    const body = (await response.json()) as {
      error?: string;
      detail?: string;
      problems?: ValidationProblem[];
    };
    error = body.error ?? "";
    detail = body.detail ?? "";
    problems = body.problems ?? [];
  } catch {
    detail = response.statusText;
  }
  throw new ApiError(response.status, error, detail, problems);
}
