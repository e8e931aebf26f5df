// Shapes of the server payloads. The client never derives game facts
// itself; everything rendered comes from these objects.

export interface SpecWire {
  game: "boxes" | "triangles";
  boundary: "open" | "closed";
  n: number;
}

export interface OwnerWire {
  face: number;
  player: "A" | "B";
}

export interface StateWire {
  spec: SpecWire;
  drawn: string[];
  owners: OwnerWire[];
  to_move: "A" | "B";
  net_score: number;
  legal_moves: string[];
}

export interface NewGameWire {
  id: string;
  state: StateWire;
  engine_moves: string[];
}

export interface MoveWire {
  id: string;
  played: string[];
  engine_moves: string[];
  state: StateWire;
}

export interface AnalysisWire {
  to_move: "A" | "B";
  value_for_mover: number | null;
  best_edge: string | null;
  edge_classes: Record<string, "good" | "bad">;
  chains: { edges: string[]; length: number; category: string }[];
  double_deals: { x: string; y: string; pair: number[] }[];
  pendant_coins: number[];
}

export interface ApiErrorWire {
  code: string;
  message: string;
}

export function scores(state: StateWire): { a: number; b: number } {
  let a = 0;
  let b = 0;
  for (const o of state.owners) {
    if (o.player === "A") a += 1;
    else b += 1;
  }
  return { a, b };
}
