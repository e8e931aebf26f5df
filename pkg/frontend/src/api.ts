// Thin HTTP layer over the play service. The fetch function is
// injectable so tests can swap in canned payloads.

import type { AnalysisWire, MoveWire, NewGameWire, SpecWire, StateWire } from "./wire.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  code: string;
  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

async function unwrap<T>(resp: Response): Promise<T> {
  const body = await resp.json();
  if (!resp.ok) {
    throw new ApiError(body.code ?? "http_error", body.message ?? resp.statusText);
  }
  return body as T;
}

export class GameApi {
  private fetchFn: FetchLike;
  private base: string;

  constructor(fetchFn: FetchLike, base = "") {
    this.fetchFn = fetchFn;
    this.base = base;
  }

  async createGame(
    spec: SpecWire,
    engineRole: "first" | "second" | "none",
    engineMode: "constructive" | "solver",
  ): Promise<NewGameWire> {
    const resp = await this.fetchFn(`${this.base}/games`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ spec, engine_role: engineRole, engine_mode: engineMode }),
    });
    return unwrap<NewGameWire>(resp);
  }

  async postMove(gameId: string, edge: string): Promise<MoveWire> {
    const resp = await this.fetchFn(`${this.base}/games/${gameId}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ edge }),
    });
    return unwrap<MoveWire>(resp);
  }

  async getGame(gameId: string): Promise<{ id: string; state: StateWire }> {
    const resp = await this.fetchFn(`${this.base}/games/${gameId}`);
    return unwrap(resp);
  }

  async getAnalysis(gameId: string): Promise<AnalysisWire> {
    const resp = await this.fetchFn(`${this.base}/games/${gameId}/analysis`);
    return unwrap<AnalysisWire>(resp);
  }
}
