// SVG board: vertices at server-provided coordinates, live edge differences,
// a label palette with used/free flags, and a hover preview that explains
// why an illegal label is greyed out.

import { legalLabelSet, previewMove, describeRejection } from "./preview.js";
import type { MoveJson, SessionState } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 520;

export interface BoardHandlers {
  onMove(move: MoveJson): void;
}

export class Board {
  private selected: number | null = null;
  private hinted: MoveJson | null = null;

  constructor(
    private root: HTMLElement,
    private handlers: BoardHandlers,
  ) {}

  setHint(move: MoveJson | null) {
    this.hinted = move;
  }

  clearSelection() {
    this.selected = null;
  }

  render(state: SessionState) {
    this.root.replaceChildren();
    this.root.appendChild(this.banner(state));
    this.root.appendChild(this.svgBoard(state));
    this.root.appendChild(this.palette(state));
  }

  private banner(state: SessionState): HTMLElement {
    const div = document.createElement("div");
    div.className = "banner";
    if (state.status === "alice-won") {
      div.textContent = "Alice wins: the labeling is graceful.";
      div.classList.add("alice");
    } else if (state.status === "bob-won") {
      div.textContent = "Bob wins: no graceful completion remains.";
      div.classList.add("bob");
    } else {
      const mover = state.to_move === state.human ? "your move" : "engine thinking...";
      div.textContent = `${state.to_move} to move (${mover}) - labels 0..${state.m}`;
    }
    return div;
  }

  private svgBoard(state: SessionState): SVGSVGElement {
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    svg.setAttribute("class", "board");
    const at = (v: number): [number, number] => [
      state.layout[v][0] * SIZE,
      state.layout[v][1] * SIZE,
    ];

    for (const [u, v] of state.graph.edges) {
      const [x1, y1] = at(u);
      const [x2, y2] = at(v);
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(x1));
      line.setAttribute("y1", String(y1));
      line.setAttribute("x2", String(x2));
      line.setAttribute("y2", String(y2));
      const a = state.labels[u];
      const b = state.labels[v];
      line.setAttribute("class", a !== null && b !== null ? "edge labeled" : "edge");
      svg.appendChild(line);
      if (a !== null && b !== null) {
        const text = document.createElementNS(SVG_NS, "text");
        text.setAttribute("x", String((x1 + x2) / 2));
        text.setAttribute("y", String((y1 + y2) / 2 - 4));
        text.setAttribute("class", "edge-label");
        text.textContent = String(Math.abs(a - b));
        svg.appendChild(text);
      }
    }

    for (let v = 0; v < state.graph.n; v++) {
      const [x, y] = at(v);
      const group = document.createElementNS(SVG_NS, "g");
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(x));
      circle.setAttribute("cy", String(y));
      circle.setAttribute("r", "16");
      const classes = ["vertex"];
      if (state.labels[v] !== null) classes.push("labeled");
      if (this.selected === v) classes.push("selected");
      if (this.hinted && this.hinted.vertex === v) classes.push("hinted");
      circle.setAttribute("class", classes.join(" "));
      const title = document.createElementNS(SVG_NS, "title");
      title.textContent = state.graph.names[v];
      circle.appendChild(title);
      circle.addEventListener("click", () => {
        if (state.labels[v] === null && state.status === "in-progress") {
          this.selected = this.selected === v ? null : v;
          this.render(state);
        }
      });
      group.appendChild(circle);
      const text = document.createElementNS(SVG_NS, "text");
      text.setAttribute("x", String(x));
      text.setAttribute("y", String(y + 4));
      text.setAttribute("class", "vertex-label");
      text.textContent = state.labels[v] === null ? "" : String(state.labels[v]);
      group.appendChild(text);
      svg.appendChild(group);
    }
    return svg;
  }

  private palette(state: SessionState): HTMLElement {
    const div = document.createElement("div");
    div.className = "palette";
    const used = new Set(state.labels.filter((l): l is number => l !== null));
    const legalHere =
      this.selected !== null
        ? legalLabelSet(state.graph, state.labels, state.m, this.selected)
        : null;
    for (let l = 0; l <= state.m; l++) {
      const chip = document.createElement("button");
      chip.textContent = String(l);
      chip.className = "chip";
      if (used.has(l)) {
        chip.classList.add("used");
        chip.disabled = true;
        chip.title = "already on the board";
      } else if (legalHere !== null && !legalHere.has(l)) {
        // grey out with the preview's explanation; the server still has
        // the final say if the user submits anyway
        chip.classList.add("illegal");
        const verdict = previewMove(state.graph, state.labels, state.m, this.selected!, l);
        chip.title = verdict.legal ? "" : describeRejection(verdict.reason);
      }
      if (this.hinted && this.selected === this.hinted.vertex && l === this.hinted.label) {
        chip.classList.add("hinted");
      }
      chip.addEventListener("click", () => {
        if (this.selected !== null) {
          this.handlers.onMove({ vertex: this.selected, label: l });
        }
      });
      div.appendChild(chip);
    }
    return div;
  }
}
