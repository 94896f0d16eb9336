import type {
  AnalysisResponse,
  CreateResponse,
  MoveResponse,
  Player,
  SessionView,
} from "./types";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      detail = ((await res.json()) as { detail?: string }).detail ?? detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

/** Thin typed client; the server is authoritative for all game logic. */
export class GameApi {
  constructor(private readonly baseUrl: string = "") {}

  createGame(rows: number[], human: Player, first: Player): Promise<CreateResponse> {
    return request(`${this.baseUrl}/games`, {
      method: "POST",
      body: JSON.stringify({ rows, human, first }),
    });
  }

  getGame(id: string): Promise<SessionView> {
    return request(`${this.baseUrl}/games/${id}`);
  }

  place(id: string, player: Player, row: number, cell: number): Promise<MoveResponse> {
    return request(`${this.baseUrl}/games/${id}/placements`, {
      method: "POST",
      body: JSON.stringify({ player, row, cell }),
    });
  }

  engineMove(id: string): Promise<MoveResponse> {
    return request(`${this.baseUrl}/games/${id}/engine-move`, { method: "POST" });
  }

  analysis(id: string): Promise<AnalysisResponse> {
    return request(`${this.baseUrl}/games/${id}/analysis`);
  }
}
