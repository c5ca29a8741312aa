// Shared scaffolding for DOM-level tests: an App wired to the mock
// backend, plus fetch wrappers for stalling or sabotaging requests.

import type { FetchLike } from "../src/api.js";
import { ApiClient } from "../src/api.js";
import { App } from "../src/app.js";
import { MockServer } from "./mock_server.js";

export interface Setup {
  root: HTMLElement;
  mock: MockServer;
  api: ApiClient;
  app: App;
}

export function setup(fetchOverride?: (inner: FetchLike) => FetchLike): Setup {
  document.body.innerHTML = "";
  const root = document.createElement("div");
  document.body.appendChild(root);
  const mock = new MockServer();
  const fetchFn = fetchOverride ? fetchOverride(mock.fetch) : mock.fetch;
  const api = new ApiClient("", fetchFn);
  const app = new App(root, api);
  return { root, mock, api, app };
}

export function clickEl(scope: ParentNode, key: string): void {
  const node = scope.querySelector(`[data-face="${key}"]`);
  if (!node) throw new Error(`no element for face ${key}`);
  node.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

export function renderedLive(scope: ParentNode): Set<string> {
  const keys = new Set<string>();
  for (const node of scope.querySelectorAll<SVGElement>("[data-face]")) {
    if (!node.classList.contains("ghost")) keys.add(node.dataset.face!);
  }
  return keys;
}

export function ghostKeys(scope: ParentNode): Set<string> {
  const keys = new Set<string>();
  for (const node of scope.querySelectorAll<SVGElement>("[data-face]")) {
    if (node.classList.contains("ghost")) keys.add(node.dataset.face!);
  }
  return keys;
}

// Holds move requests until released, so tests can inspect the UI with
// a request in flight.
export class Gate {
  private resolvers: Array<() => void> = [];
  private hold = true;

  wrap(inner: FetchLike): FetchLike {
    return async (input, init) => {
      if (this.hold && String(input).includes("/moves")) {
        await new Promise<void>((resolve) => this.resolvers.push(resolve));
      }
      return inner(input, init);
    };
  }

  release(): void {
    this.hold = false;
    for (const resolve of this.resolvers.splice(0)) resolve();
  }
}

// Replaces responses for requests matching `match`, `times` times.
export function sabotage(
  match: (input: string, init?: RequestInit) => boolean,
  status: number,
  detail: string,
  times = 1,
): (inner: FetchLike) => FetchLike {
  let used = 0;
  return (inner) => async (input, init) => {
    if (used < times && match(input, init)) {
      used += 1;
      return new Response(JSON.stringify({ detail }), {
        status,
        headers: { "Content-Type": "application/json" },
      });
    }
    return inner(input, init);
  };
}
