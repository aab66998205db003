// Wire types, exactly as the service serializes them.

export interface PositionDto {
  x: number;
  y: number;
  z: number;
}

export type AxisName = "x" | "y" | "z";

export interface MoveDto {
  axis: AxisName;
  target: number;
  result: PositionDto;
}

export interface HistoryEntryDto {
  mover: "human" | "engine";
  move: MoveDto;
}

export interface HintDto {
  outcome: "P" | "N";
  source: string;
  conjectural: boolean;
}

export type GameStatus = "in-progress" | "human-won" | "engine-won";

export interface SessionDto {
  id: string;
  k: number;
  position: PositionDto;
  status: GameStatus;
  human_moves_first: boolean;
  hints_enabled: boolean;
  history: HistoryEntryDto[];
  winner: "human" | "engine" | null;
  hint: HintDto | null;
}

export interface LegalMovesDto {
  position: PositionDto;
  moves: MoveDto[];
}

export interface AnalysisDto {
  class: "P" | "N";
  in_valid_region: boolean;
  winning_move_count: number;
  grundy?: number;
  best_move?: MoveDto;
}

export interface ApiErrorBody {
  error: string;
  message: string;
  details?: Record<string, unknown>;
}

export function samePosition(a: PositionDto, b: PositionDto): boolean {
  return a.x === b.x && a.y === b.y && a.z === b.z;
}

export function positionText(p: PositionDto): string {
  return `${p.x},${p.y},${p.z}`;
}
