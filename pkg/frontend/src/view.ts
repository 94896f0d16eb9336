import type { AnalysisResponse, Outcome, Player, Status } from "./types";

export interface CellView {
  row: number;
  cell: number;
  content: "." | "L" | "R";
  /** Present only when the what-if overlay is on and this cell starts a legal move. */
  annotation?: { resultOutcome: Outcome; winning: boolean };
}

/**
 * Pure view model for the board.  Every annotation comes from the server's
 * analysis payload; the client computes no game theory of its own.
 */
export function buildBoardView(
  board: string[],
  analysis: AnalysisResponse | null,
): CellView[][] {
  const byCell = new Map<string, { resultOutcome: Outcome; winning: boolean }>();
  if (analysis) {
    for (const m of analysis.moves) {
      byCell.set(`${m.row}:${m.cell}`, {
        resultOutcome: m.resultOutcome,
        winning: m.winning,
      });
    }
  }
  return board.map((row, r) =>
    [...row].map((ch, c) => {
      const view: CellView = { row: r, cell: c, content: ch as CellView["content"] };
      const ann = byCell.get(`${r}:${c}`);
      if (ann) view.annotation = ann;
      return view;
    }),
  );
}

/** Banner text once a game finishes; the player unable to move wins. */
export function bannerText(status: Status, winner: Player | null, human: Player): string {
  if (status !== "finished" || winner === null) return "";
  const name = winner === "L" ? "Left" : "Right";
  const who = winner === human ? "You win" : "The engine wins";
  return `${who} — ${name} cannot place and so wins (last player to move loses)`;
}

export interface SetupConfig {
  rows: number[];
  human: Player;
  first: Player;
}

/** Validate the setup form; returns an error message or null. */
export function validateSetup(rowsText: string): { rows: number[] } | { error: string } {
  const parts = rowsText
    .split(/[\s,+]+/)
    .filter((t) => t.length > 0);
  if (parts.length === 0) return { error: "enter at least one row length" };
  if (parts.length > 16) return { error: "at most 16 rows" };
  const rows: number[] = [];
  for (const p of parts) {
    const n = Number(p);
    if (!Number.isInteger(n) || n < 1 || n > 60) {
      return { error: `row lengths must be integers from 1 to 60 (got "${p}")` };
    }
    rows.push(n);
  }
  return { rows };
}
