import { ApiClient } from "./api.js";
import { GameController, type GameView } from "./game.js";
import {
  renderBoard,
  renderCutControls,
  renderError,
  renderHistory,
  renderPositionLabel,
  renderStatus,
  type CutPreview,
} from "./render.js";
import type { AxisName } from "./types.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

function numberInput(id: string): number {
  const value = Number(el<HTMLInputElement>(id).value);
  if (!Number.isInteger(value) || value < 0) throw new Error(`bad value for ${id}`);
  return value;
}

document.addEventListener("DOMContentLoaded", () => {
  const api = new ApiClient("");
  let preview: CutPreview | null = null;
  let lastView: GameView | null = null;

  const draw = (view: GameView) => {
    lastView = view;
    renderStatus(el("status"), view);
    renderPositionLabel(el("position-label"), view.displayed, view.session?.k ?? null);
    renderBoard(el("board"), view, preview);
    renderCutControls(el("cuts"), view, (next) => {
      preview = next;
      if (lastView) renderBoard(el("board"), lastView, preview);
    }, submit);
    renderHistory(el("history"), view.session);
    renderError(el("game-error"), view);
  };

  const controller = new GameController(api, draw);

  const submit = (axis: AxisName, target: number) => {
    preview = null;
    void controller.submitCut(axis, target);
  };

  el<HTMLFormElement>("new-game-form").addEventListener("submit", (event) => {
    event.preventDefault();
    try {
      void controller.newGame({
        k: numberInput("input-k"),
        x: numberInput("input-x"),
        y: numberInput("input-y"),
        z: numberInput("input-z"),
        humanMovesFirst: el<HTMLInputElement>("input-first").checked,
        hints: el<HTMLInputElement>("input-hints").checked,
      });
    } catch (err) {
      const box = el("game-error");
      box.textContent = err instanceof Error ? err.message : String(err);
      box.className = "error visible";
    }
  });
});
