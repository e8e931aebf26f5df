import { GameApi } from "./api.js";
import { GameApp } from "./app.js";
import type { SpecWire } from "./wire.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const api = new GameApi((input, init) => fetch(input, init));
const app = new GameApp({ api, root: el("board-root"), doc: document });

async function startFromForm(): Promise<void> {
  const spec: SpecWire = {
    game: el<HTMLSelectElement>("game").value as SpecWire["game"],
    boundary: el<HTMLSelectElement>("boundary").value as SpecWire["boundary"],
    n: Number(el<HTMLInputElement>("length").value),
  };
  const role = el<HTMLSelectElement>("engine-role").value as "first" | "second" | "none";
  const mode = el<HTMLSelectElement>("engine-mode").value as "constructive" | "solver";
  try {
    await app.newGame(spec, role, mode);
  } catch (err) {
    el("board-root").textContent = `could not start: ${String(err)}`;
  }
}

el<HTMLButtonElement>("new-game").addEventListener("click", () => {
  void startFromForm();
});
el<HTMLInputElement>("analysis-toggle").addEventListener("change", () => {
  void app.toggleAnalysis();
});

// default game: closed 1x4 triangles against the constructive engine
void startFromForm();
