// Client-side game state machine.
//
// One mutation in flight at a time, no optimistic rendering: every position
// this module exposes was taken verbatim from a service response.  After a
// move the human's cut is shown first and the engine's reply lands after a
// short delay; both frames come from the same confirmed response.

import { ApiError, type GameApi, type NewGameRequest } from "./api.js";
import type { AxisName, PositionDto, SessionDto } from "./types.js";

export interface GameView {
  session: SessionDto | null;
  // what the board should show right now (may trail session.position by one
  // frame while the engine's reply is being animated)
  displayed: PositionDto | null;
  busy: boolean;
  error: string | null;
}

export type ViewListener = (view: GameView) => void;

function legalRangeText(details: Record<string, unknown> | undefined): string {
  const targets = details?.["legal_targets"] as
    | Record<string, { min: number; max: number } | null>
    | undefined;
  if (!targets) return "";
  const parts = Object.entries(targets)
    .filter((entry): entry is [string, { min: number; max: number }] => entry[1] !== null)
    .map(([axis, range]) => `${axis}: ${range.min}..${range.max}`);
  return parts.length ? ` (legal targets ${parts.join(", ")})` : "";
}

export class GameController {
  private view: GameView = { session: null, displayed: null, busy: false, error: null };

  constructor(
    private readonly api: GameApi,
    private readonly listener: ViewListener,
    private readonly replyDelayMs: number = 350,
    private readonly sleep: (ms: number) => Promise<void> = (ms) =>
      new Promise((resolve) => setTimeout(resolve, ms)),
  ) {}

  snapshot(): GameView {
    return { ...this.view };
  }

  private emit(patch: Partial<GameView>): void {
    this.view = { ...this.view, ...patch };
    this.listener(this.snapshot());
  }

  async newGame(req: NewGameRequest): Promise<void> {
    if (this.view.busy) return;
    this.emit({ busy: true, error: null });
    try {
      const session = await this.api.createGame(req);
      this.emit({ session, displayed: session.position, busy: false, error: null });
    } catch (err) {
      this.emit({ busy: false, error: describe(err) });
    }
  }

  async refresh(): Promise<void> {
    const current = this.view.session;
    if (!current || this.view.busy) return;
    try {
      const session = await this.api.getGame(current.id);
      this.emit({ session, displayed: session.position });
    } catch (err) {
      this.emit({ error: describe(err) });
    }
  }

  /** Validate locally, then submit; returns false when the cut never left the client. */
  async submitCut(axis: AxisName, target: number): Promise<boolean> {
    const session = this.view.session;
    if (!session || this.view.busy) return false;
    if (session.status !== "in-progress") {
      this.emit({ error: "the game is over" });
      return false;
    }
    const current = session.position[axis];
    if (!Number.isInteger(target) || target < 0 || target >= current) {
      this.emit({ error: `illegal cut: ${axis} must drop below ${current}` });
      return false;
    }
    this.emit({ busy: true, error: null });
    try {
      const updated = await this.api.postMove(session.id, axis, target);
      const tail = updated.history.slice(-2);
      const humanThenEngine =
        tail.length === 2 && tail[0]?.mover === "human" && tail[1]?.mover === "engine";
      if (humanThenEngine) {
        // show the human's confirmed cut, then the engine's reply
        this.emit({ session: updated, displayed: tail[0]!.move.result });
        await this.sleep(this.replyDelayMs);
      }
      this.emit({ session: updated, displayed: updated.position, busy: false });
      return true;
    } catch (err) {
      this.emit({ busy: false, error: describe(err) });
      return false;
    }
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.body.message}${legalRangeText(err.body.details)}`;
  }
  if (err instanceof Error) {
    return `network trouble: ${err.message}; retry when the service is reachable`;
  }
  return String(err);
}
