// Board-side game model: face identity, down-closure legality, and the
// reconciliation diff against the server's live set. No geometry here.

import type { Face } from "./api.js";

export function normalizeFace(face: Face): Face {
  return [...face].sort((a, b) => a - b);
}

// canonical string identity for a face, used as element keys everywhere
export function faceKey(face: Face): string {
  return normalizeFace(face).join(",");
}

export function keyToFace(key: string): Face {
  return key.split(",").map((s) => parseInt(s, 10));
}

function isSubset(small: Face, big: Face): boolean {
  const set = new Set(big);
  return small.every((v) => set.has(v));
}

// all live faces containing the chosen one: what a move removes
export function upSet(live: Face[], face: Face): Face[] {
  const chosen = normalizeFace(face);
  return live.filter((f) => isSubset(chosen, f));
}

export function isLive(live: Face[], face: Face): boolean {
  const key = faceKey(face);
  return live.some((f) => faceKey(f) === key);
}

// optimistic local application of a move; the server response is the
// truth and replaces this via reconciliation
export function applyLocal(live: Face[], face: Face): Face[] {
  const removed = new Set(upSet(live, face).map(faceKey));
  return live.filter((f) => !removed.has(faceKey(f)));
}

export function liveKeySet(live: Face[]): Set<string> {
  return new Set(live.map(faceKey));
}

export interface ReconcileDiff {
  // rendered live but the server says removed
  extra: string[];
  // live on the server but rendered as removed
  missing: string[];
}

export function reconcile(
  rendered: Set<string>,
  serverLive: Face[],
): ReconcileDiff {
  const server = liveKeySet(serverLive);
  const extra = [...rendered].filter((k) => !server.has(k)).sort();
  const missing = [...server].filter((k) => !rendered.has(k)).sort();
  return { extra, missing };
}

export function diffIsEmpty(diff: ReconcileDiff): boolean {
  return diff.extra.length === 0 && diff.missing.length === 0;
}

// faces grouped by size, ascending; rendering draws big hulls first so
// smaller elements stay on top and clickable
export function byDimension(faces: Face[]): Map<number, Face[]> {
  const groups = new Map<number, Face[]>();
  for (const f of faces) {
    const g = groups.get(f.length);
    if (g) g.push(f);
    else groups.set(f.length, [f]);
  }
  return new Map([...groups.entries()].sort((a, b) => a[0] - b[0]));
}
