// Scripted session against the real game service: create a game, make a human
// move, receive the engine's reply, toggle the what-if overlay, and check that
// what the client renders is exactly the server's payloads.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, GameApi } from "../src/api";
import { replayHistory } from "../src/replay";
import { buildBoardView } from "../src/view";

const PORT = 8731;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
const api = new GameApi(BASE);

async function waitForServer(timeoutMs = 20000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/games/none`);
      if (res.status === 404) return; // app is up and routing
    } catch {
      // not listening yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error("game service did not start");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    [
      "-c",
      `import uvicorn
from partizan_kayles.service import create_app
uvicorn.run(create_app(), host="127.0.0.1", port=${PORT}, log_level="warning")`,
    ],
    { cwd: "..", stdio: "inherit" },
  );
  await waitForServer();
}, 30000);

afterAll(() => {
  server?.kill();
});

describe("client round-trip against the service", () => {
  it("renders exactly the server's board through a human+engine exchange", async () => {
    const created = await api.createGame([6], "L", "L");
    expect(created.board).toEqual(["......"]);
    expect(created.toMove).toBe("L");

    const moved = await api.place(created.id, "L", 0, 2);
    expect(moved.applied.map((p) => p.player)).toEqual(["L", "R"]);

    // the client renders only server-confirmed boards
    const session = await api.getGame(created.id);
    expect(session.board).toEqual(moved.board);
    const view = buildBoardView(session.board, null);
    expect(view.map((row) => row.map((c) => c.content).join(""))).toEqual(session.board);

    // client-side replay of the history reproduces the rendered board
    expect(replayHistory([6], session.history)).toEqual(session.board);
  });

  it("renders the engine's first placement when the human is second", async () => {
    const created = await api.createGame([6], "L", "R");
    expect(created.applied).toHaveLength(1);
    expect(created.board[0]).toMatch(/RR/);
    expect(created.toMove).toBe("L");
    expect(replayHistory([6], created.history)).toEqual(created.board);
  });

  it("overlays exactly the analysis annotations on legal cells", async () => {
    const created = await api.createGame([4, 5], "L", "L");
    const analysis = await api.analysis(created.id);
    expect(analysis.position).toBe("5+4");
    expect(analysis.outcome).toBe("N");

    const view = buildBoardView(created.board, analysis);
    const annotated = view.flat().filter((c) => c.annotation);
    expect(annotated).toHaveLength(analysis.moves.length);
    for (const m of analysis.moves) {
      expect(view[m.row][m.cell].annotation).toEqual({
        resultOutcome: m.resultOutcome,
        winning: m.winning,
      });
    }
    // the winning rule: a square at the end of the length-4 strip
    const winners = analysis.moves.filter((m) => m.winning);
    expect(winners.length).toBeGreaterThan(0);
    expect(winners.some((m) => m.row === 0 && (m.cell === 0 || m.cell === 3))).toBe(true);
  });

  it("surfaces illegal placements as API errors without state change", async () => {
    const created = await api.createGame([3], "L", "L");
    await expect(api.place(created.id, "R", 0, 0)).rejects.toThrowError(ApiError);
    const after = await api.getGame(created.id);
    expect(after.board).toEqual(["..."]);
    expect(after.history).toHaveLength(0);
  });

  it("reports the misère winner at game end", async () => {
    const created = await api.createGame([1], "L", "L");
    const moved = await api.place(created.id, "L", 0, 0);
    expect(moved.status).toBe("finished");
    expect(moved.winner).toBe("R"); // Right cannot place and therefore wins
  });
});
