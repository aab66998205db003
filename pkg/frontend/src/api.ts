// Typed client for the service API.

import type {
  AnalysisDto,
  ApiErrorBody,
  AxisName,
  LegalMovesDto,
  SessionDto,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

export interface NewGameRequest {
  k: number;
  x: number;
  y: number;
  z: number;
  humanMovesFirst: boolean;
  hints: boolean;
}

// The slice of the API the game controller needs; tests substitute a mock.
export interface GameApi {
  createGame(req: NewGameRequest): Promise<SessionDto>;
  getGame(id: string): Promise<SessionDto>;
  postMove(id: string, axis: AxisName, target: number): Promise<SessionDto>;
  legalMoves(id: string): Promise<LegalMovesDto>;
}

export class ApiClient implements GameApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let parsed: ApiErrorBody;
      try {
        parsed = (await response.json()) as ApiErrorBody;
      } catch {
        parsed = { error: "unknown", message: `HTTP ${response.status}` };
      }
      throw new ApiError(response.status, parsed);
    }
    return (await response.json()) as T;
  }

  createGame(req: NewGameRequest): Promise<SessionDto> {
    return this.request<SessionDto>("POST", "/api/games", {
      k: req.k,
      x: req.x,
      y: req.y,
      z: req.z,
      human_moves_first: req.humanMovesFirst,
      hints: req.hints,
    });
  }

  getGame(id: string): Promise<SessionDto> {
    return this.request<SessionDto>("GET", `/api/games/${id}`);
  }

  postMove(id: string, axis: AxisName, target: number): Promise<SessionDto> {
    return this.request<SessionDto>("POST", `/api/games/${id}/moves`, { axis, target });
  }

  legalMoves(id: string): Promise<LegalMovesDto> {
    return this.request<LegalMovesDto>("GET", `/api/games/${id}/legal-moves`);
  }

  analyze(k: number, x: number, y: number, z: number, grundy = false): Promise<AnalysisDto> {
    const params = new URLSearchParams({
      k: String(k),
      x: String(x),
      y: String(y),
      z: String(z),
      grundy: String(grundy),
    });
    return this.request<AnalysisDto>("GET", `/api/analyze?${params}`);
  }

  health(): Promise<{ status: string; version: string }> {
    return this.request("GET", "/api/health");
  }
}
