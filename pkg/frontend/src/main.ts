// Browser entry point: form wiring around the App controller. The page
// talks to the play service at the same origin (or VITE-style override
// via a global set in index.html).

import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    CHOMP_API_BASE?: string;
  }
}

function start(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app container");
  const api = new ApiClient(window.CHOMP_API_BASE ?? "");
  const app = new App(root, api);

  const form = document.getElementById("new-game") as HTMLFormElement | null;
  if (!form) return;
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const spec = (form.elements.namedItem("spec") as HTMLInputElement).value;
    const first = (form.elements.namedItem("first") as HTMLInputElement)
      .checked;
    const policy = (form.elements.namedItem("policy") as HTMLSelectElement)
      .value as "perfect" | "mirror-when-available";
    void app.newGame(spec.trim(), first, policy);
  });
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", start);
} else {
  start();
}
