// BoardViewModel: a pure projection of the server state for rendering.
//
// The client holds no rule logic; everything here is derived from the last
// server response (who played each slot follows from the move list and the
// configured first player).

import { formatValue } from './values';
import { GameState, Side, Verdict } from './types';

export type SlotView = {
  index: number;
  label: string;
  text: string;
  playedBy: Side | null;
  empty: boolean;
  endSlot: boolean;
};

export type BoardView = {
  slots: SlotView[];
  banner: string;
  domainLabel: string;
  finished: boolean;
  verdictLines: string[];
};

function playerOfMove(state: GameState, moveNumber: number): Side {
  const first = state.config.player_one;
  const other: Side = first === 'wanda' ? 'nora' : 'wanda';
  return moveNumber % 2 === 0 ? first : other;
}

export function slotOwners(state: GameState): (Side | null)[] {
  const owners: (Side | null)[] = state.assigned.map(() => null);
  state.moves.forEach((move, i) => {
    owners[move.index] = playerOfMove(state, i);
  });
  return owners;
}

function sideName(side: Side): string {
  return side === 'wanda' ? 'Wanda' : 'Nora';
}

export function verdictSummary(state: GameState, verdict: Verdict): string[] {
  const domain = state.config.domain;
  const cert = verdict.certificate;
  const lines = [`${sideName(verdict.winner)} wins`];
  switch (cert.kind) {
    case 'root_witness':
      lines.push(`root ${formatValue(domain, cert.value as never)} found`);
      break;
    case 'candidates_exhausted': {
      const count = (cert.candidates as unknown[]).length;
      lines.push(`no rational root; ${count} candidates checked`);
      break;
    }
    case 'sturm_count': {
      const count = cert.distinct_real_roots as number;
      lines.push(
        count >= 1 ? `${count} distinct real root${count > 1 ? 's' : ''}` : 'no real roots'
      );
      break;
    }
    case 'fq_evaluation_table': {
      const entries = (cert.entries as unknown[]).length;
      lines.push(`no roots; all ${entries} field values checked`);
      break;
    }
    case 'norm_transcript':
      lines.push('no roots in the field; norm factorization transcript recorded');
      break;
    case 'algebraically_closed':
      lines.push('nonconstant over an algebraically closed field');
      break;
  }
  return lines;
}

export function buildBoardView(state: GameState, verdict: Verdict | null): BoardView {
  const owners = slotOwners(state);
  const domain = state.config.domain;
  const degree = state.config.degree;
  const slots: SlotView[] = state.assigned.map((value, index) => ({
    index,
    label: `a${index}`,
    text: formatValue(domain, value),
    playedBy: owners[index],
    empty: value === null,
    endSlot: index === 0 || index === degree,
  }));
  const banner = state.complete
    ? 'game over'
    : `${sideName(state.turn)} to move` +
      (state.engine_sides.includes(state.turn) ? ' (engine)' : '');
  return {
    slots,
    banner,
    domainLabel: state.domain_description,
    finished: state.complete,
    verdictLines: verdict ? verdictSummary(state, verdict) : [],
  };
}
