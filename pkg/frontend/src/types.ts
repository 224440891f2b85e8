// Wire types for the play service (all payloads carry v: 1).

export type PlayerName = "alice" | "bob";
export type GameStatus = "in-progress" | "alice-won" | "bob-won";

export interface GraphJson {
  n: number;
  edges: [number, number][];
  family: string | null;
  names: string[];
}

export interface HistoryEntry {
  player: PlayerName;
  vertex: number;
  label: number;
}

export interface SessionState {
  v: number;
  session_id: string;
  graph: GraphJson;
  labels: (number | null)[];
  first: PlayerName;
  to_move: PlayerName;
  history: HistoryEntry[];
  status: GameStatus;
  winner: PlayerName | null;
  m: number;
  human: PlayerName;
  engine: string;
  layout: [number, number][];
}

export interface MoveJson {
  vertex: number;
  label: number;
}

export interface ApiError {
  v: number;
  error: { code: string; message: string };
}

export interface FamilyParam {
  name: string;
  min: number;
  kind: "int" | "list";
}

export interface FamilyInfo {
  family: string;
  params: FamilyParam[];
}

export class RejectedMove extends Error {
  constructor(
    public code: string,
    message: string,
  ) {
    super(message);
  }
}
