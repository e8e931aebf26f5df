// Game screen: renders the wire state as an SVG dots board and forwards
// edge clicks to the server. No rules live here: an edge is clickable
// exactly when the server listed it in legal_moves, and every score or
// turn fact shown is read from the last payload.

import { GameApi, ApiError } from "./api.js";
import { boardSize, dots, edgeSegments, faceAnchors } from "./geometry.js";
import type { AnalysisWire, SpecWire, StateWire } from "./wire.js";
import { scores } from "./wire.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface AppOptions {
  api: GameApi;
  root: HTMLElement;
  doc: Document;
}

export class GameApp {
  readonly api: GameApi;
  readonly root: HTMLElement;
  readonly doc: Document;
  gameId: string | null = null;
  state: StateWire | null = null;
  analysis: AnalysisWire | null = null;
  analysisOn = false;
  enginePlayer: "A" | "B" | null = null;
  busy = false;
  lastError = "";

  constructor(opts: AppOptions) {
    this.api = opts.api;
    this.root = opts.root;
    this.doc = opts.doc;
  }

  async newGame(
    spec: SpecWire,
    engineRole: "first" | "second" | "none",
    engineMode: "constructive" | "solver",
  ): Promise<void> {
    const data = await this.api.createGame(spec, engineRole, engineMode);
    this.gameId = data.id;
    this.state = data.state;
    this.enginePlayer = engineRole === "first" ? "A" : engineRole === "second" ? "B" : null;
    this.analysis = null;
    this.lastError = "";
    if (this.analysisOn) await this.refreshAnalysis();
    this.render();
  }

  humanToMove(): boolean {
    return (
      this.state !== null &&
      this.state.legal_moves.length > 0 &&
      this.state.to_move !== this.enginePlayer
    );
  }

  async handleEdgeClick(edge: string): Promise<void> {
    if (!this.gameId || !this.state || this.busy) return;
    if (!this.humanToMove()) return;
    if (!this.state.legal_moves.includes(edge)) return; // inert
    this.busy = true;
    this.render();
    try {
      // one payload carries the human move and the engine's whole reply
      const out = await this.api.postMove(this.gameId, edge);
      this.state = out.state;
      this.lastError = "";
      if (this.analysisOn) await this.refreshAnalysis();
    } catch (err) {
      this.lastError = err instanceof ApiError ? err.message : String(err);
    } finally {
      this.busy = false;
      this.render();
    }
  }

  async toggleAnalysis(): Promise<void> {
    this.analysisOn = !this.analysisOn;
    if (this.analysisOn) await this.refreshAnalysis();
    else this.analysis = null;
    this.render();
  }

  private async refreshAnalysis(): Promise<void> {
    if (!this.gameId) return;
    try {
      this.analysis = await this.api.getAnalysis(this.gameId);
    } catch {
      this.analysis = null;
    }
  }

  render(): void {
    const doc = this.doc;
    this.root.textContent = "";
    if (!this.state) return;
    const state = this.state;

    const panel = doc.createElement("div");
    panel.className = "score-panel";
    const { a, b } = scores(state);
    const over = state.legal_moves.length === 0;
    let status: string;
    if (over) {
      const verdict = state.net_score > 0 ? "A wins" : state.net_score < 0 ? "B wins" : "tie";
      status = `game over: ${verdict}`;
    } else if (this.busy) {
      status = "waiting for server";
    } else {
      status = `to move: ${state.to_move}`;
    }
    panel.innerHTML =
      `<span data-testid="score-a">A: ${a}</span> ` +
      `<span data-testid="score-b">B: ${b}</span> ` +
      `<span data-testid="net">net: ${state.net_score}</span> ` +
      `<span data-testid="status">${status}</span>`;
    this.root.appendChild(panel);

    if (this.lastError) {
      const toast = doc.createElement("div");
      toast.className = "toast";
      toast.setAttribute("data-testid", "toast");
      toast.textContent = this.lastError;
      this.root.appendChild(toast);
    }

    const { width, height } = boardSize(state.spec);
    const svg = doc.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    svg.setAttribute("width", String(width));
    svg.setAttribute("height", String(height));
    svg.setAttribute("data-testid", "board");

    const drawn = new Set(state.drawn);
    const legal = new Set(state.legal_moves);
    const clickable = this.humanToMove() && !this.busy;
    for (const seg of edgeSegments(state.spec)) {
      const line = doc.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(seg.x1));
      line.setAttribute("y1", String(seg.y1));
      line.setAttribute("x2", String(seg.x2));
      line.setAttribute("y2", String(seg.y2));
      line.setAttribute("data-edge", seg.edge);
      let cls: string;
      if (drawn.has(seg.edge)) {
        cls = "edge drawn";
      } else if (legal.has(seg.edge)) {
        cls = clickable ? "edge open clickable" : "edge open";
        if (this.analysisOn && this.analysis) {
          const label = this.analysis.edge_classes[seg.edge];
          if (label) cls += ` ${label}`;
          if (this.analysis.best_edge === seg.edge) cls += " best";
        }
        if (clickable) {
          line.addEventListener("click", () => {
            void this.handleEdgeClick(seg.edge);
          });
        }
      } else {
        cls = "edge gone";
      }
      line.setAttribute("class", cls);
      svg.appendChild(line);
    }

    for (const d of dots(state.spec)) {
      const dot = doc.createElementNS(SVG_NS, "circle");
      dot.setAttribute("cx", String(d.x));
      dot.setAttribute("cy", String(d.y));
      dot.setAttribute("r", "4");
      dot.setAttribute("class", "dot");
      svg.appendChild(dot);
    }

    const owners = new Map(state.owners.map((o) => [o.face, o.player]));
    for (const anchor of faceAnchors(state.spec)) {
      const player = owners.get(anchor.face);
      if (!player) continue;
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(anchor.x));
      label.setAttribute("y", String(anchor.y));
      label.setAttribute("class", `owner owner-${player.toLowerCase()}`);
      label.setAttribute("data-face", String(anchor.face));
      label.textContent = player;
      svg.appendChild(label);
    }

    this.root.appendChild(svg);
  }
}
