// Client-side legality preview.
//
// Used only to grey out labels and explain a hovered move; the server's
// verdict is always authoritative and every submitted move round-trips.

import type { GraphJson } from "./types.js";

export type PreviewVerdict =
  | { legal: true }
  | { legal: false; reason: "vertex-occupied" | "label-used" | "edge-label-clash" | "out-of-range" };

export function usedLabels(labels: (number | null)[]): Set<number> {
  const used = new Set<number>();
  for (const l of labels) if (l !== null) used.add(l);
  return used;
}

export function edgeDifferences(
  graph: GraphJson,
  labels: (number | null)[],
): Map<string, number | null> {
  const out = new Map<string, number | null>();
  for (const [u, v] of graph.edges) {
    const a = labels[u];
    const b = labels[v];
    out.set(`${u}-${v}`, a === null || b === null ? null : Math.abs(a - b));
  }
  return out;
}

export function previewMove(
  graph: GraphJson,
  labels: (number | null)[],
  m: number,
  vertex: number,
  label: number,
): PreviewVerdict {
  if (vertex < 0 || vertex >= graph.n || label < 0 || label > m) {
    return { legal: false, reason: "out-of-range" };
  }
  if (labels[vertex] !== null) {
    return { legal: false, reason: "vertex-occupied" };
  }
  if (usedLabels(labels).has(label)) {
    return { legal: false, reason: "label-used" };
  }
  const taken = new Set<number>();
  for (const d of edgeDifferences(graph, labels).values()) {
    if (d !== null) taken.add(d);
  }
  for (const [u, v] of graph.edges) {
    const other = u === vertex ? v : v === vertex ? u : null;
    if (other === null) continue;
    const neighborLabel = labels[other];
    if (neighborLabel === null) continue;
    const d = Math.abs(neighborLabel - label);
    if (taken.has(d)) {
      return { legal: false, reason: "edge-label-clash" };
    }
    taken.add(d);
  }
  return { legal: true };
}

export function legalLabelSet(
  graph: GraphJson,
  labels: (number | null)[],
  m: number,
  vertex: number,
): Set<number> {
  const out = new Set<number>();
  for (let l = 0; l <= m; l++) {
    if (previewMove(graph, labels, m, vertex, l).legal) out.add(l);
  }
  return out;
}

export function describeRejection(reason: string): string {
  switch (reason) {
    case "vertex-occupied":
      return "that vertex already has a label";
    case "label-used":
      return "that label is already on the board";
    case "edge-label-clash":
      return "this would repeat an edge difference";
    case "not-your-turn":
      return "it is the engine's turn";
    case "game-over":
      return "the game is over";
    default:
      return reason;
  }
}
