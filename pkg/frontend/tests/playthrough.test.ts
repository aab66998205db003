// Scripted play-through against the real service (spawned as a child
// process), driving the same controller and board model the page uses.

import { type ChildProcess, spawn } from "node:child_process";
import process from "node:process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { boardLayers, renderedHeight } from "../src/board.js";
import { GameController, type GameView } from "../src/game.js";
import type { MoveDto, PositionDto, SessionDto } from "../src/types.js";

const PORT = 8900 + (process.pid % 97);
const BASE = `http://127.0.0.1:${PORT}`;

let service: ChildProcess;
let serviceLog = "";

async function waitForHealth(): Promise<void> {
  const deadline = Date.now() + 45_000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/api/health`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`service did not come up on ${BASE}\n${serviceLog}`);
}

beforeAll(async () => {
  service = spawn("python3", [
    "-m",
    "uvicorn",
    "chocbar.service.app:app",
    "--host",
    "127.0.0.1",
    "--port",
    String(PORT),
    "--log-level",
    "warning",
  ]);
  service.stderr?.on("data", (chunk) => (serviceLog += String(chunk)));
  service.stdout?.on("data", (chunk) => (serviceLog += String(chunk)));
  await waitForHealth();
});

afterAll(() => {
  service?.kill("SIGTERM");
});

const nim = (p: PositionDto) => p.x ^ p.y ^ p.z;

// Independent height oracle for the layer check.
const heightOf = (k: number, p: PositionDto, u: number, w: number) =>
  Math.min(Math.floor((u + w) / k), p.y) + 1;

function checkLayersMatchHeights(k: number, pos: PositionDto): void {
  const layers = boardLayers(k, pos);
  expect(layers).toHaveLength(pos.y + 1);
  for (let u = 0; u <= pos.x; u++) {
    for (let w = 0; w <= pos.z; w++) {
      expect(renderedHeight(layers, u, w)).toBe(heightOf(k, pos, u, w));
    }
  }
}

function controllerHarness(api: ApiClient) {
  const frames: GameView[] = [];
  const controller = new GameController(api, (view) => frames.push(view), 0);
  return { frames, controller };
}

function latestSession(frames: GameView[]): SessionDto {
  const last = frames.at(-1)?.session;
  if (!last) throw new Error("no session in view");
  return last;
}

describe("play-through against the live engine", () => {
  it("engine second: a nim-zero-seeking human beats the engine from 14,3,10", async () => {
    const api = new ApiClient(BASE);
    const { frames, controller } = controllerHarness(api);
    await controller.newGame({ k: 3, x: 14, y: 3, z: 10, humanMovesFirst: true, hints: false });
    let session = latestSession(frames);
    expect(session.status).toBe("in-progress");

    // opening move of the script: x down to 9, landing on nim-sum zero
    expect(await controller.submitCut("x", 9)).toBe(true);
    session = latestSession(frames);

    let guard = 0;
    while (session.status === "in-progress" && guard++ < 200) {
      const legal = await api.legalMoves(session.id);
      const winning = legal.moves.find((move: MoveDto) => nim(move.result) === 0);
      expect(winning, `no nim-zero cut from ${JSON.stringify(legal.position)}`).toBeDefined();
      expect(await controller.submitCut(winning!.axis, winning!.target)).toBe(true);
      session = latestSession(frames);
    }

    expect(session.status).toBe("human-won");
    expect(session.winner).toBe("human");
    // the engine, always facing nim-sum zero, could never restore it
    for (const entry of session.history) {
      if (entry.mover === "engine") expect(nim(entry.move.result)).not.toBe(0);
      if (entry.mover === "human") expect(nim(entry.move.result)).toBe(0);
    }
    // every frame the UI displayed is a service-confirmed position with
    // faithful layer rendering
    const seen = new Set<string>();
    for (const frame of frames) {
      if (frame.displayed) seen.add(`${frame.displayed.x},${frame.displayed.y},${frame.displayed.z}`);
    }
    for (const key of seen) {
      const [x, y, z] = key.split(",").map(Number) as [number, number, number];
      checkLayersMatchHeights(3, { x, y, z });
    }
    expect(seen.size).toBeGreaterThan(2);
  });

  it("engine first: the engine beats an arbitrary scripted human from 14,3,10", async () => {
    const api = new ApiClient(BASE);
    const { frames, controller } = controllerHarness(api);
    await controller.newGame({ k: 3, x: 14, y: 3, z: 10, humanMovesFirst: false, hints: false });
    let session = latestSession(frames);
    // the engine opened onto nim-sum zero
    expect(session.history).toHaveLength(1);
    expect(session.history[0]!.mover).toBe("engine");
    expect(nim(session.position)).toBe(0);

    let seed = 0xc0c0a;
    const rand = (bound: number) => {
      seed = (seed * 1103515245 + 12345) & 0x7fffffff;
      return seed % bound;
    };

    let guard = 0;
    while (session.status === "in-progress" && guard++ < 200) {
      const legal = await api.legalMoves(session.id);
      expect(legal.moves.length).toBeGreaterThan(0);
      const move = legal.moves[rand(legal.moves.length)]!;
      expect(await controller.submitCut(move.axis, move.target)).toBe(true);
      session = latestSession(frames);
      checkLayersMatchHeights(3, session.position);
    }

    expect(session.status).toBe("engine-won");
    expect(session.winner).toBe("engine");
    for (const entry of session.history) {
      if (entry.mover === "engine") expect(nim(entry.move.result)).toBe(0);
    }
  });

  it("rejects an illegal cut with the service's legal ranges", async () => {
    const api = new ApiClient(BASE);
    const { frames, controller } = controllerHarness(api);
    await controller.newGame({ k: 3, x: 2, y: 1, z: 2, humanMovesFirst: true, hints: false });
    // bypass local validation to exercise the service-side rejection
    const session = latestSession(frames);
    const client = new ApiClient(BASE);
    await expect(client.postMove(session.id, "x", 7)).rejects.toMatchObject({
      status: 409,
      body: { error: "illegal-move" },
    });
  });
});
