import type { PlacementDto } from "./types";

/**
 * Rebuild board rows by replaying a placement history onto empty rows.
 * Throws if any placement is illegal, so a successful replay certifies that
 * the rendered board matches the server's history.
 */
export function replayHistory(rowLengths: number[], history: PlacementDto[]): string[] {
  const rows = rowLengths.map((n) => ".".repeat(n));
  for (const pl of history) {
    if (pl.row < 0 || pl.row >= rows.length) {
      throw new Error(`replay: no row ${pl.row}`);
    }
    const row = rows[pl.row];
    const span = pl.player === "L" ? 1 : 2;
    if (pl.cell < 0 || pl.cell + span > row.length) {
      throw new Error(`replay: cells out of range at ${pl.cell}`);
    }
    for (let i = 0; i < span; i++) {
      if (row[pl.cell + i] !== ".") {
        throw new Error(`replay: cell ${pl.cell + i} already occupied`);
      }
    }
    const piece = pl.player === "L" ? "L" : "RR";
    rows[pl.row] = row.slice(0, pl.cell) + piece + row.slice(pl.cell + span);
  }
  return rows;
}
