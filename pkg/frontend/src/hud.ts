// Heads-up display: turn indicator, status banner, move history, and an
// optional engine-evaluation readout fetched on demand.

import type { MoveEntry, SessionState } from "./api.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function describeFace(face: number[], labels: string[]): string {
  return face.map((v) => labels[v] ?? String(v)).join(" ");
}

export class GameHud {
  readonly root: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly turn: HTMLElement;
  private readonly history: HTMLOListElement;
  private readonly evalLine: HTMLElement;
  private readonly hint: HTMLElement;
  private hintTimer: ReturnType<typeof setTimeout> | undefined;

  constructor(container: HTMLElement, onToggleEval: (show: boolean) => void) {
    this.root = el("div", "hud");
    this.banner = el("div", "banner", "");
    this.turn = el("div", "turn", "");
    this.hint = el("div", "hint", "");
    this.evalLine = el("div", "eval", "");

    const toggleRow = el("label", "eval-toggle");
    const checkbox = el("input") as HTMLInputElement;
    checkbox.type = "checkbox";
    checkbox.addEventListener("change", () => {
      this.evalLine.textContent = "";
      onToggleEval(checkbox.checked);
    });
    toggleRow.appendChild(checkbox);
    toggleRow.appendChild(document.createTextNode(" show engine evaluation"));

    this.history = document.createElement("ol");
    this.history.className = "history";

    this.root.appendChild(this.banner);
    this.root.appendChild(this.turn);
    this.root.appendChild(this.hint);
    this.root.appendChild(toggleRow);
    this.root.appendChild(this.evalLine);
    this.root.appendChild(this.history);
    container.appendChild(this.root);
  }

  // Banner reads terminal exactly when the server status is terminal.
  update(session: SessionState): void {
    if (session.status === "human_lost") {
      this.banner.textContent = "Game over: engine wins";
      this.banner.className = "banner terminal";
      this.turn.textContent = "";
    } else if (session.status === "engine_lost") {
      this.banner.textContent = "Game over: you win";
      this.banner.className = "banner terminal";
      this.turn.textContent = "";
    } else {
      this.banner.textContent = "Game in progress";
      this.banner.className = "banner ongoing";
      this.turn.textContent =
        session.to_move === "human" ? "Your move" : "Engine thinking";
    }
    this.renderHistory(session.moves, session.vertices);
  }

  private renderHistory(moves: MoveEntry[], labels: string[]): void {
    this.history.textContent = "";
    for (const move of moves) {
      const who = move.by === "human" ? "you" : "engine";
      const item = el(
        "li",
        `move ${move.by}`,
        `${who}: ${describeFace(move.face, labels)}`,
      );
      this.history.appendChild(item);
    }
  }

  showEvaluation(text: string): void {
    this.evalLine.textContent = text;
  }

  showHint(text: string): void {
    this.hint.textContent = text;
    if (this.hintTimer) clearTimeout(this.hintTimer);
    this.hintTimer = setTimeout(() => {
      this.hint.textContent = "";
    }, 4000);
  }

  bannerText(): string {
    return this.banner.textContent ?? "";
  }

  isTerminal(): boolean {
    return this.banner.classList.contains("terminal");
  }
}

// Modal-ish error dialog; one at a time, dismissed by its button.
export function showErrorDialog(container: HTMLElement, message: string): void {
  const existing = container.querySelector(".error-dialog");
  if (existing) existing.remove();
  const dialog = el("div", "error-dialog");
  dialog.setAttribute("role", "alertdialog");
  dialog.appendChild(el("p", "error-message", message));
  const button = el("button", "dismiss", "Dismiss");
  button.addEventListener("click", () => dialog.remove());
  dialog.appendChild(button);
  container.appendChild(dialog);
}
