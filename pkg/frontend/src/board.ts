// SVG board: vertices as labelled circles, edges as lines, faces of
// three or more vertices as shaded hulls. Removed elements stay in the
// scene ghosted. Bigger faces are appended first so smaller elements sit
// on top and stay clickable.

import type { Face, SessionState } from "./api.js";
import { faceKey, liveKeySet, byDimension, normalizeFace } from "./model.js";
import { forceLayout, hullOrder, centroid, type Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardCallbacks {
  onFaceClick: (face: Face) => void;
  onGhostClick: (face: Face) => void;
}

interface Element2D {
  face: Face;
  key: string;
  node: SVGElement;
  live: boolean;
}

export class BoardView {
  readonly svg: SVGSVGElement;
  private readonly callbacks: BoardCallbacks;
  private readonly positions: Point[];
  private elements = new Map<string, Element2D>();
  private locked = false;
  private vertexLabels: string[] = [];

  constructor(
    container: HTMLElement,
    session: SessionState,
    callbacks: BoardCallbacks,
    width = 640,
    height = 480,
  ) {
    this.callbacks = callbacks;
    this.vertexLabels = session.vertices;
    const edges = session.faces.filter((f) => f.length === 2);
    this.positions = forceLayout(session.vertices.length, edges, {
      width,
      height,
    });

    this.svg = document.createElementNS(SVG_NS, "svg");
    this.svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
    this.svg.setAttribute("class", "board");
    this.buildScene(session.faces);
    this.update(session.live_faces);
    container.appendChild(this.svg);
  }

  // Scene is built once from the full face list; moves only toggle the
  // ghosted state, they never add or remove nodes.
  private buildScene(faces: Face[]): void {
    const grouped = byDimension(faces);
    const sizes = [...grouped.keys()].sort((a, b) => b - a);
    for (const size of sizes) {
      for (const face of grouped.get(size)!) {
        const node = this.makeNode(face);
        const key = faceKey(face);
        node.dataset.face = key;
        node.addEventListener("click", () => this.handleClick(key));
        this.svg.appendChild(node);
        this.elements.set(key, { face: normalizeFace(face), key, node, live: true });
      }
    }
  }

  private makeNode(face: Face): SVGElement {
    if (face.length === 1) return this.makeVertex(face[0]!);
    if (face.length === 2) return this.makeEdge(face);
    return this.makeHull(face);
  }

  private makeVertex(v: number): SVGElement {
    const g = document.createElementNS(SVG_NS, "g");
    g.setAttribute("class", "vertex");
    const p = this.positions[v]!;
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", "14");
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(p.x));
    label.setAttribute("y", String(p.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("class", "vertex-label");
    label.textContent = this.vertexLabels[v] ?? String(v);
    g.appendChild(circle);
    g.appendChild(label);
    return g;
  }

  private makeEdge(face: Face): SVGElement {
    const [u, v] = [face[0]!, face[1]!];
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("class", "edge");
    line.setAttribute("x1", String(this.positions[u]!.x));
    line.setAttribute("y1", String(this.positions[u]!.y));
    line.setAttribute("x2", String(this.positions[v]!.x));
    line.setAttribute("y2", String(this.positions[v]!.y));
    return line;
  }

  private makeHull(face: Face): SVGElement {
    const ordered = hullOrder(face, this.positions);
    const points = ordered
      .map((v) => `${this.positions[v]!.x},${this.positions[v]!.y}`)
      .join(" ");
    const polygon = document.createElementNS(SVG_NS, "polygon");
    polygon.setAttribute("class", "hull");
    polygon.setAttribute("points", points);
    // clicks land wherever the shaded region is; the centroid marker
    // gives a target even when smaller faces cover most of the hull
    const g = document.createElementNS(SVG_NS, "g");
    g.appendChild(polygon);
    const c = centroid(face.map((v) => this.positions[v]!));
    const dot = document.createElementNS(SVG_NS, "circle");
    dot.setAttribute("class", "hull-handle");
    dot.setAttribute("cx", String(c.x));
    dot.setAttribute("cy", String(c.y));
    dot.setAttribute("r", "7");
    g.appendChild(dot);
    return g;
  }

  private handleClick(key: string): void {
    if (this.locked) return;
    const el = this.elements.get(key);
    if (!el) return;
    if (!el.live) {
      this.callbacks.onGhostClick(el.face);
      return;
    }
    this.callbacks.onFaceClick(el.face);
  }

  // Repaint ghosting so the scene matches the server's live set exactly.
  update(liveFaces: Face[]): void {
    const live = liveKeySet(liveFaces);
    for (const el of this.elements.values()) {
      el.live = live.has(el.key);
      el.node.classList.toggle("ghost", !el.live);
    }
  }

  setLocked(locked: boolean): void {
    this.locked = locked;
    this.svg.classList.toggle("locked", locked);
  }

  isLocked(): boolean {
    return this.locked;
  }

  // The rendered live set, read back from the DOM rather than from our
  // bookkeeping: reconciliation should catch rendering bugs too.
  liveElementKeys(): Set<string> {
    const keys = new Set<string>();
    for (const node of this.svg.querySelectorAll<SVGElement>("[data-face]")) {
      if (!node.classList.contains("ghost")) {
        keys.add(node.dataset.face!);
      }
    }
    return keys;
  }
}
