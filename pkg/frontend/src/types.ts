// Wire types mirroring the game service's JSON API.

export type Player = "L" | "R";
export type Status = "in-progress" | "finished";
export type Outcome = "N" | "P" | "R" | "L";

export interface PlacementDto {
  player: Player;
  row: number;
  cell: number;
}

export interface SessionView {
  id: string;
  board: string[];
  toMove: Player;
  status: Status;
  winner: Player | null;
  human: Player;
  engine: Player;
  history: PlacementDto[];
}

export interface CreateResponse extends SessionView {
  applied: PlacementDto[];
}

export interface MoveResponse {
  applied: PlacementDto[];
  board: string[];
  toMove: Player;
  status: Status;
  winner: Player | null;
}

export interface AnalysisMove {
  row: number;
  cell: number;
  player: Player;
  resultOutcome: Outcome;
  winning: boolean;
}

export interface AnalysisResponse {
  position: string;
  value: number;
  outcome: Outcome;
  toMove: Player;
  status: Status;
  winner: Player | null;
  moves: AnalysisMove[];
}
