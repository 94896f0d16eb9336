import { ApiError, GameApi } from "./api";
import { replayHistory } from "./replay";
import type { AnalysisResponse, Player, SessionView } from "./types";
import { bannerText, buildBoardView, validateSetup } from "./view";

const api = new GameApi("");

interface UiState {
  session: SessionView | null;
  rowLengths: number[];
  analysis: AnalysisResponse | null;
  overlayOn: boolean;
  busy: boolean; // one in-flight mutation at a time
}

const state: UiState = {
  session: null,
  rowLengths: [],
  analysis: null,
  overlayOn: false,
  busy: false,
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setError(msg: string) {
  el<HTMLDivElement>("error").textContent = msg;
}

function outcomeClass(outcome: string, winning: boolean): string {
  if (winning) return "win";
  return outcome === "P" || outcome === "N" ? "even" : "lose";
}

function render() {
  const s = state.session;
  el<HTMLDivElement>("setup").hidden = s !== null;
  el<HTMLDivElement>("game").hidden = s === null;
  if (!s) return;

  // sanity: the board we render must equal the replayed history
  const replayed = replayHistory(state.rowLengths, s.history);
  if (replayed.join("|") !== s.board.join("|")) {
    setError("history does not replay to the server board; reloading");
    void refresh();
    return;
  }

  const boardEl = el<HTMLDivElement>("board");
  boardEl.textContent = "";
  const view = buildBoardView(s.board, state.overlayOn ? state.analysis : null);
  for (const row of view) {
    const rowEl = document.createElement("div");
    rowEl.className = "row";
    for (const cell of row) {
      const btn = document.createElement("button");
      btn.className = `cell ${cell.content === "." ? "empty" : cell.content}`;
      btn.textContent = cell.content === "." ? "" : cell.content;
      if (cell.annotation) {
        btn.classList.add(outcomeClass(cell.annotation.resultOutcome, cell.annotation.winning));
        btn.title = `result: ${cell.annotation.resultOutcome}${cell.annotation.winning ? " (winning)" : ""}`;
      }
      btn.disabled =
        state.busy || s.status === "finished" || s.toMove !== s.human || cell.content !== ".";
      btn.addEventListener("click", () => void onCellClick(cell.row, cell.cell));
      rowEl.appendChild(btn);
    }
    boardEl.appendChild(rowEl);
  }

  const a = state.analysis;
  el<HTMLDivElement>("readout").textContent = a
    ? `position ${a.position} · value ${a.value} · outcome ${a.outcome}`
    : "";
  el<HTMLDivElement>("banner").textContent = bannerText(s.status, s.winner, s.human);
  el<HTMLDivElement>("turn").textContent =
    s.status === "finished" ? "" : s.toMove === s.human ? "your turn" : "engine thinking…";
}

async function refresh() {
  if (!state.session) return;
  state.session = await api.getGame(state.session.id);
  state.analysis = await api.analysis(state.session.id);
  render();
}

async function onCellClick(row: number, cell: number) {
  const s = state.session;
  if (!s || state.busy) return;
  state.busy = true;
  render();
  try {
    // Right's domino is entered by clicking the left cell of the pair
    await api.place(s.id, s.human, row, cell);
    await refresh();
    setError("");
  } catch (e) {
    setError(e instanceof ApiError ? e.message : String(e));
  } finally {
    state.busy = false;
    render();
  }
}

async function onCreate(ev: Event) {
  ev.preventDefault();
  const parsed = validateSetup(el<HTMLInputElement>("rows-input").value);
  if ("error" in parsed) {
    setError(parsed.error);
    return;
  }
  const human = el<HTMLSelectElement>("side-select").value as Player;
  const first = el<HTMLSelectElement>("first-select").value as Player;
  state.busy = true;
  try {
    const created = await api.createGame(parsed.rows, human, first);
    state.session = created;
    state.rowLengths = parsed.rows;
    state.analysis = await api.analysis(created.id);
    setError("");
  } catch (e) {
    setError(e instanceof ApiError ? e.message : String(e));
  } finally {
    state.busy = false;
    render();
  }
}

function init() {
  el<HTMLFormElement>("setup-form").addEventListener("submit", (ev) => void onCreate(ev));
  el<HTMLInputElement>("overlay-toggle").addEventListener("change", (ev) => {
    state.overlayOn = (ev.target as HTMLInputElement).checked;
    render();
  });
  el<HTMLButtonElement>("new-game").addEventListener("click", () => {
    state.session = null;
    state.analysis = null;
    render();
  });
  render();
}

init();
