// Thin fetch client for the play service; every state transition round-trips.

import {
  ApiError,
  FamilyInfo,
  MoveJson,
  RejectedMove,
  SessionState,
} from "./types.js";

export interface NewGameRequest {
  family: string;
  first?: "alice" | "bob";
  human?: "alice" | "bob";
  engine?: string;
  n?: number;
  p?: number;
  q?: number;
  r?: number;
  t?: number;
  k?: number;
  ks?: string;
}

async function raise(resp: Response): Promise<never> {
  let code = `http-${resp.status}`;
  let message = resp.statusText;
  try {
    const data = (await resp.json()) as ApiError;
    if (data.error) {
      code = data.error.code;
      message = data.error.message;
    }
  } catch {
    // non-JSON error body: keep the HTTP status
  }
  throw new RejectedMove(code, message);
}

export class GameClient {
  constructor(public baseUrl: string) {}

  private async get<T>(path: string): Promise<T> {
    const resp = await fetch(this.baseUrl + path);
    if (!resp.ok) await raise(resp);
    return (await resp.json()) as T;
  }

  private async send<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await fetch(this.baseUrl + path, {
      method,
      headers: { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!resp.ok) await raise(resp);
    return (await resp.json()) as T;
  }

  families(): Promise<{ v: number; families: FamilyInfo[] }> {
    return this.get("/families");
  }

  createGame(req: NewGameRequest): Promise<SessionState> {
    return this.send("POST", "/games", req);
  }

  getGame(sessionId: string): Promise<SessionState> {
    return this.get(`/games/${sessionId}`);
  }

  submitMove(sessionId: string, move: MoveJson): Promise<SessionState> {
    return this.send("POST", `/games/${sessionId}/moves`, move);
  }

  hint(sessionId: string): Promise<MoveJson> {
    return this.get<{ v: number; move: MoveJson }>(`/games/${sessionId}/hint`).then(
      (data) => data.move,
    );
  }

  legalMoves(sessionId: string): Promise<MoveJson[]> {
    return this.get<{ v: number; moves: MoveJson[] }>(
      `/games/${sessionId}/legal-moves`,
    ).then((data) => data.moves);
  }

  deleteGame(sessionId: string): Promise<void> {
    return this.send("DELETE", `/games/${sessionId}`).then(() => undefined);
  }
}
