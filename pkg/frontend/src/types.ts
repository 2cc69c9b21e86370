// Wire types mirroring the /v1 API models.

export type WireValue = string | number[] | string[];

export type DomainType =
  | 'integers'
  | 'rationals'
  | 'z_inv_n'
  | 'number_field'
  | 'reals'
  | 'finite_field'
  | 'algebraically_closed';

export type Domain = {
  type: DomainType;
  n?: number;
  minpoly?: string[];
  subring?: 'field' | 'integer_span';
  p?: number;
  k?: number;
};

export type Side = 'wanda' | 'nora';

export type GameConfig = {
  domain: Domain;
  degree: number;
  player_one: Side;
};

export type MoveWire = { index: number; value: WireValue };

export type GameState = {
  id: string;
  config: GameConfig;
  domain_description: string;
  assigned: (WireValue | null)[];
  turn: Side;
  moves: MoveWire[];
  complete: boolean;
  engine_sides: string[];
};

export type Verdict = {
  winner: Side;
  certificate: { kind: string; [key: string]: unknown };
};

export type EngineMove = {
  move: MoveWire;
  policy: string;
  explanation: string;
  state: GameState;
};

export type ApiError = { code: string; detail?: string };

export class ServerError extends Error {
  code: string;
  status: number;
  constructor(status: number, body: ApiError) {
    super(body.detail ?? body.code);
    this.code = body.code;
    this.status = status;
  }
}
