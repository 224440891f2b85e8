// Page wiring: family picker, game lifecycle, toast for rejected moves.
// All state transitions round-trip through the service; the client never
// mutates a game locally.

import { GameClient, NewGameRequest } from "./api.js";
import { Board } from "./board.js";
import { describeRejection } from "./preview.js";
import { RejectedMove, SessionState } from "./types.js";

const params = new URLSearchParams(window.location.search);
const client = new GameClient(params.get("api") ?? "http://127.0.0.1:8000");

const boardRoot = document.getElementById("board")!;
const toast = document.getElementById("toast")!;
const form = document.getElementById("setup") as HTMLFormElement;
const familySelect = document.getElementById("family") as HTMLSelectElement;
const paramsBox = document.getElementById("params")!;
const hintButton = document.getElementById("hint") as HTMLButtonElement;

let session: SessionState | null = null;

const board = new Board(boardRoot as HTMLElement, {
  onMove: async (move) => {
    if (!session) return;
    try {
      session = await client.submitMove(session.session_id, move);
      board.clearSelection();
      board.setHint(null);
      board.render(session);
    } catch (err) {
      if (err instanceof RejectedMove) {
        showToast(`rejected: ${describeRejection(err.code)} (${err.code})`);
      } else {
        showToast(String(err));
      }
    }
  },
});

function showToast(text: string) {
  toast.textContent = text;
  toast.classList.add("visible");
  setTimeout(() => toast.classList.remove("visible"), 2600);
}

async function loadFamilies() {
  const { families } = await client.families();
  for (const fam of families) {
    const option = document.createElement("option");
    option.value = fam.family;
    option.textContent = fam.family.replace("_", " ");
    option.dataset.params = JSON.stringify(fam.params);
    familySelect.appendChild(option);
  }
  familySelect.value = "path";
  renderParamInputs();
}

function renderParamInputs() {
  paramsBox.replaceChildren();
  const option = familySelect.selectedOptions[0];
  const famParams = JSON.parse(option.dataset.params ?? "[]") as {
    name: string;
    min: number;
    kind: string;
  }[];
  for (const p of famParams) {
    const label = document.createElement("label");
    label.textContent = p.name;
    const input = document.createElement("input");
    input.name = p.name;
    if (p.kind === "list") {
      input.value = "1,2";
      input.placeholder = "leaf counts, e.g. 1,2";
    } else {
      input.type = "number";
      input.min = String(Math.max(p.min, 1));
      input.value = String(Math.max(p.min, p.name === "n" ? 5 : p.min || 2));
    }
    label.appendChild(input);
    paramsBox.appendChild(label);
  }
}

familySelect.addEventListener("change", renderParamInputs);

form.addEventListener("submit", async (event) => {
  event.preventDefault();
  const data = new FormData(form);
  const request: NewGameRequest = {
    family: familySelect.value,
    first: data.get("first") as "alice" | "bob",
    human: data.get("side") as "alice" | "bob",
    engine: data.get("engine") as string,
  };
  const extras = request as unknown as Record<string, unknown>;
  for (const input of paramsBox.querySelectorAll("input")) {
    const value = input.value.trim();
    if (value === "") continue;
    extras[input.name] = input.name === "ks" ? value : Number(value);
  }
  try {
    session = await client.createGame(request);
    board.clearSelection();
    board.setHint(null);
    board.render(session);
    hintButton.disabled = false;
  } catch (err) {
    showToast(err instanceof RejectedMove ? err.message : String(err));
  }
});

hintButton.addEventListener("click", async () => {
  if (!session) return;
  try {
    const move = await client.hint(session.session_id);
    board.setHint(move);
    board.render(session);
    showToast(`hint: vertex ${move.vertex} <- label ${move.label}`);
  } catch (err) {
    if (err instanceof RejectedMove) showToast(describeRejection(err.code));
  }
});

loadFamilies().catch((err) => showToast(`service unreachable: ${err}`));
