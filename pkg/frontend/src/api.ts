// Typed client for the /v1 game API.
//
// `strictClientChecks` controls only the input-format pre-check in
// postMoveText; rules always come from the server.  The end-to-end test
// turns it off and confirms the server rejects the same inputs with the
// same machine-readable codes.

import { parseValueText } from './values';
import {
  ApiError,
  EngineMove,
  GameConfig,
  GameState,
  ServerError,
  Verdict,
  WireValue,
} from './types';

export class GameClient {
  base: string;
  strictClientChecks = true;

  constructor(base = '') {
    this.base = base.replace(/\/$/, '');
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(`${this.base}${path}`, {
      headers: { 'content-type': 'application/json' },
      ...init,
    });
    const body = await response.json();
    if (!response.ok) {
      throw new ServerError(response.status, body as ApiError);
    }
    return body as T;
  }

  async createGame(config: GameConfig, engineSides: string[]): Promise<GameState> {
    const created = await this.request<{ id: string; state: GameState }>('/v1/games', {
      method: 'POST',
      body: JSON.stringify({ config, engine_sides: engineSides }),
    });
    return created.state;
  }

  getState(id: string): Promise<GameState> {
    return this.request<GameState>(`/v1/games/${id}`);
  }

  postMove(id: string, index: number, value: WireValue): Promise<GameState> {
    return this.request<GameState>(`/v1/games/${id}/moves`, {
      method: 'POST',
      body: JSON.stringify({ index, value }),
    });
  }

  /** Parse the text per domain (unless checks are off) and post the move. */
  postMoveText(state: GameState, index: number, text: string): Promise<GameState> {
    if (this.strictClientChecks) {
      const parsed = parseValueText(state.config.domain, text);
      if (!parsed.ok) {
        return Promise.reject(new ServerError(0, { code: 'BadInput', detail: parsed.reason }));
      }
      return this.postMove(state.id, index, parsed.value);
    }
    // checks disabled: ship the raw text and let the server decide
    return this.postMove(state.id, index, text.trim());
  }

  engineMove(id: string): Promise<EngineMove> {
    return this.request<EngineMove>(`/v1/games/${id}/engine-move`, { method: 'POST' });
  }

  getVerdict(id: string): Promise<Verdict> {
    return this.request<Verdict>(`/v1/games/${id}/verdict`);
  }
}
