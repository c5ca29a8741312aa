// Application controller: owns the session, wires board clicks to move
// requests, and keeps the rendered scene reconciled with the server.

import {
  ApiClient,
  ApiError,
  type Face,
  type SessionState,
  type MoveResponse,
  type NewSessionRequest,
} from "./api.js";
import {
  applyLocal,
  isLive,
  reconcile,
  diffIsEmpty,
  type ReconcileDiff,
} from "./model.js";
import { BoardView } from "./board.js";
import { GameHud, showErrorDialog, describeFace } from "./hud.js";

export class App {
  private readonly api: ApiClient;
  private readonly boardHost: HTMLElement;
  private readonly hudHost: HTMLElement;
  private readonly dialogHost: HTMLElement;
  private board: BoardView | null = null;
  private hud: GameHud | null = null;
  private current: SessionState | null = null;
  private moveInFlight: Promise<void> | null = null;
  private showEval = false;
  lastDiff: ReconcileDiff = { extra: [], missing: [] };

  constructor(root: HTMLElement, api: ApiClient) {
    this.api = api;
    this.dialogHost = root;
    this.boardHost = document.createElement("div");
    this.boardHost.className = "board-host";
    this.hudHost = document.createElement("div");
    this.hudHost.className = "hud-host";
    root.appendChild(this.boardHost);
    root.appendChild(this.hudHost);
  }

  session(): SessionState | null {
    return this.current;
  }

  boardView(): BoardView | null {
    return this.board;
  }

  gameHud(): GameHud | null {
    return this.hud;
  }

  // Resolves once no move request is pending; tests await this after
  // dispatching a click.
  async idle(): Promise<void> {
    while (this.moveInFlight) {
      await this.moveInFlight;
    }
  }

  async newGame(
    spec: string,
    humanFirst: boolean,
    policy?: NewSessionRequest["engine_policy"],
  ): Promise<boolean> {
    const request: NewSessionRequest = { spec, human_first: humanFirst };
    if (policy) request.engine_policy = policy;
    let created: MoveResponse;
    try {
      created = await this.api.createSession(request);
    } catch (err) {
      // bad spec or an instance out of engine reach: report, keep
      // whatever game was already on screen
      if (err instanceof ApiError) {
        showErrorDialog(this.dialogHost, `Could not start game: ${err.detail}`);
        return false;
      }
      throw err;
    }
    this.install(created.session);
    return true;
  }

  private install(session: SessionState): void {
    this.current = session;
    this.boardHost.textContent = "";
    this.hudHost.textContent = "";
    this.board = new BoardView(this.boardHost, session, {
      onFaceClick: (face) => {
        void this.clickFace(face);
      },
      onGhostClick: (face) => {
        this.hud?.showHint(
          `${describeFace(face, session.vertices)} is already gone`,
        );
      },
    });
    this.hud = new GameHud(this.hudHost, (show) => {
      this.showEval = show;
      if (show) void this.refreshEvaluation();
    });
    this.hud.update(session);
    this.checkReconciled();
  }

  // A click on a live element. Removes the clicked face and everything
  // above it locally, then lets the server response overwrite that guess.
  async clickFace(face: Face): Promise<void> {
    if (!this.current || !this.board || !this.hud) return;
    if (this.moveInFlight) return; // one request at a time
    const session = this.current;
    if (session.status !== "ongoing") {
      this.hud.showHint("The game is over");
      return;
    }
    if (session.to_move !== "human") {
      this.hud.showHint("Not your turn");
      return;
    }
    if (!isLive(session.live_faces, face)) {
      // never submit a face the local state says is gone
      this.hud.showHint("That element is no longer in play");
      return;
    }

    const before = session.live_faces;
    const optimistic = applyLocal(before, face);
    this.board.update(optimistic);
    this.board.setLocked(true);

    const work = (async () => {
      try {
        const response = await this.api.postMove(session.id, face);
        this.current = response.session;
        this.board!.update(response.session.live_faces);
        this.hud!.update(response.session);
        this.checkReconciled();
        if (this.showEval) await this.refreshEvaluation();
      } catch (err) {
        // roll the optimistic removal back; the server did not accept it
        this.board!.update(before);
        this.checkReconciled();
        if (err instanceof ApiError && err.status === 409) {
          this.hud!.showHint(`Move rejected: ${err.detail}`);
        } else if (err instanceof ApiError) {
          showErrorDialog(this.dialogHost, `Move failed: ${err.detail}`);
        } else {
          showErrorDialog(this.dialogHost, `Move failed: ${String(err)}`);
        }
      } finally {
        this.board!.setLocked(false);
        this.moveInFlight = null;
      }
    })();
    this.moveInFlight = work;
    await work;
  }

  private async refreshEvaluation(): Promise<void> {
    if (!this.current || !this.hud) return;
    if (!this.current.spec) {
      this.hud.showEvaluation("evaluation needs a family spec");
      return;
    }
    try {
      const nim = await this.api.getNim(this.current.spec);
      const value = nim.nim === null ? "?" : String(nim.nim);
      this.hud.showEvaluation(
        `nim ${value}, ${nim.outcome} to win (${nim.method})`,
      );
    } catch (err) {
      if (err instanceof ApiError) {
        this.hud.showEvaluation(`evaluation unavailable: ${err.detail}`);
      } else {
        throw err;
      }
    }
  }

  // Rendered live set must equal the server live set after every
  // exchange; a non-empty diff is a rendering bug.
  private checkReconciled(): void {
    if (!this.board || !this.current) return;
    this.lastDiff = reconcile(
      this.board.liveElementKeys(),
      this.current.live_faces,
    );
    if (!diffIsEmpty(this.lastDiff)) {
      console.warn("board out of sync with server", this.lastDiff);
    }
  }
}
