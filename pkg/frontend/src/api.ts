// Typed client for the play service. The UI talks to the backend only
// through this module; everything else works on the returned JSON.

export type Face = number[];

export interface MoveEntry {
  by: "human" | "engine";
  face: Face;
  perfect: boolean;
}

export interface SessionState {
  id: string;
  spec: string | null;
  vertices: string[];
  faces: Face[];
  live_faces: Face[];
  status: "ongoing" | "human_lost" | "engine_lost";
  to_move: "human" | "engine" | null;
  human_first: boolean;
  engine_policy: string;
  mirror_active: boolean;
  moves: MoveEntry[];
}

export interface MoveResponse {
  session: SessionState;
  engine_move: MoveEntry | null;
}

export interface NimResponse {
  spec: string;
  nim: number | null;
  outcome: "A" | "B" | "Unknown";
  provenance: string;
  method: "formula" | "engine";
}

export interface FamilyPattern {
  pattern: string;
  description: string;
}

export interface NewSessionRequest {
  spec: string;
  human_first: boolean;
  engine_policy?: "perfect" | "mirror-when-available";
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

async function readError(resp: Response): Promise<ApiError> {
  let detail = resp.statusText;
  try {
    const body = await resp.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body: keep the status text
  }
  return new ApiError(resp.status, detail);
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const resp = await this.fetchFn(this.baseUrl + path, init);
    if (!resp.ok) throw await readError(resp);
    return (await resp.json()) as T;
  }

  createSession(req: NewSessionRequest): Promise<MoveResponse> {
    return this.request<MoveResponse>("POST", "/sessions", req);
  }

  getSession(id: string): Promise<{ session: SessionState }> {
    return this.request<{ session: SessionState }>("GET", `/sessions/${id}`);
  }

  postMove(id: string, face: Face): Promise<MoveResponse> {
    return this.request<MoveResponse>("POST", `/sessions/${id}/moves`, {
      face,
    });
  }

  deleteSession(id: string): Promise<{ deleted: string }> {
    return this.request<{ deleted: string }>("DELETE", `/sessions/${id}`);
  }

  getNim(spec: string): Promise<NimResponse> {
    return this.request<NimResponse>(
      "GET",
      `/nim?spec=${encodeURIComponent(spec)}`,
    );
  }

  getFamilies(): Promise<{ families: FamilyPattern[] }> {
    return this.request<{ families: FamilyPattern[] }>("GET", "/families");
  }
}
