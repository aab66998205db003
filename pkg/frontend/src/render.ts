// DOM rendering. Everything drawn here comes out of a GameView; the only
// state this module keeps is which cut is being previewed.

import { boardLayers } from "./board.js";
import type { GameView } from "./game.js";
import type { AxisName, MoveDto, PositionDto, SessionDto } from "./types.js";
import { positionText } from "./types.js";

export interface CutHandler {
  (axis: AxisName, target: number): void;
}

export interface CutPreview {
  axis: AxisName;
  target: number;
}

const AXES: AxisName[] = ["x", "y", "z"];

export function renderStatus(el: HTMLElement, view: GameView): void {
  const session = view.session;
  if (!session) {
    el.textContent = "no game yet";
    el.className = "status";
    return;
  }
  if (session.status === "in-progress") {
    el.textContent = view.busy ? "thinking…" : "your turn";
    el.className = "status live";
  } else {
    const winner = session.winner === "human" ? "you win" : "engine wins";
    el.textContent = `game over: ${winner}`;
    el.className = session.winner === "human" ? "status won" : "status lost";
  }
  if (session.hint && session.status === "in-progress") {
    const label = session.hint.conjectural ? "conjectured" : session.hint.source;
    el.textContent += ` · hint: ${session.hint.outcome} (${label})`;
  }
}

export function renderBoard(
  el: HTMLElement,
  view: GameView,
  preview: CutPreview | null,
): void {
  el.replaceChildren();
  const session = view.session;
  const pos = view.displayed;
  if (!session || !pos) return;
  const layers = boardLayers(session.k, pos);
  for (const layer of [...layers].reverse()) {
    const layerEl = document.createElement("div");
    layerEl.className = "layer";
    const caption = document.createElement("div");
    caption.className = "layer-caption";
    caption.textContent = `level ${layer.level}`;
    layerEl.appendChild(caption);
    const grid = document.createElement("div");
    grid.className = "layer-grid";
    grid.style.gridTemplateColumns = `repeat(${pos.z + 1}, 1.1rem)`;
    const present = new Set(layer.cells.map((c) => `${c.u}:${c.w}`));
    const bitter = new Set(layer.cells.filter((c) => c.bitter).map((c) => `${c.u}:${c.w}`));
    for (let u = 0; u <= pos.x; u++) {
      for (let w = 0; w <= pos.z; w++) {
        const cell = document.createElement("div");
        const key = `${u}:${w}`;
        cell.className = present.has(key) ? "cell" : "cell empty";
        if (bitter.has(key)) cell.classList.add("bitter");
        if (preview && cutRemoves(preview, u, layer.level, w)) cell.classList.add("doomed");
        grid.appendChild(cell);
      }
    }
    layerEl.appendChild(grid);
    el.appendChild(layerEl);
  }
}

function cutRemoves(preview: CutPreview, u: number, level: number, w: number): boolean {
  if (preview.axis === "x") return u > preview.target;
  if (preview.axis === "y") return level > preview.target;
  return w > preview.target;
}

export function renderCutControls(
  el: HTMLElement,
  view: GameView,
  onPreview: (preview: CutPreview | null) => void,
  onCut: CutHandler,
): void {
  el.replaceChildren();
  const session = view.session;
  if (!session || session.status !== "in-progress" || !view.displayed) return;
  for (const axis of AXES) {
    const row = document.createElement("div");
    row.className = "cut-row";
    const label = document.createElement("span");
    label.className = "cut-label";
    label.textContent = `cut ${axis} to`;
    row.appendChild(label);
    const limit = view.displayed[axis];
    for (let target = 0; target < limit; target++) {
      const button = document.createElement("button");
      button.type = "button";
      button.textContent = String(target);
      button.disabled = view.busy;
      button.addEventListener("mouseenter", () => onPreview({ axis, target }));
      button.addEventListener("mouseleave", () => onPreview(null));
      button.addEventListener("click", () => onCut(axis, target));
      row.appendChild(button);
    }
    if (limit === 0) {
      const none = document.createElement("span");
      none.className = "cut-none";
      none.textContent = "nothing to cut";
      row.appendChild(none);
    }
    el.appendChild(row);
  }
}

export function renderHistory(el: HTMLElement, session: SessionDto | null): void {
  el.replaceChildren();
  if (!session) return;
  for (const entry of session.history) {
    const item = document.createElement("li");
    item.className = entry.mover;
    item.textContent = `${entry.mover}: ${moveText(entry.move)}`;
    el.appendChild(item);
  }
}

function moveText(move: MoveDto): string {
  return `${move.axis} → ${move.target}, leaving ${positionText(move.result)}`;
}

export function renderError(el: HTMLElement, view: GameView): void {
  el.textContent = view.error ?? "";
  el.className = view.error ? "error visible" : "error";
}

export function renderPositionLabel(el: HTMLElement, pos: PositionDto | null, k: number | null): void {
  el.textContent = pos ? `position ${positionText(pos)}  ·  k = ${k}` : "";
}
