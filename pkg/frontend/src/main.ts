// DOM wiring: setup form, coefficient board, engine replies, verdict panel.

import { GameClient } from './api';
import { buildBoardView } from './board';
import { valueEntryHint } from './values';
import { Domain, GameState, ServerError, Side, Verdict } from './types';

const client = new GameClient('');

let state: GameState | null = null;
let verdict: Verdict | null = null;
let selectedSlot: number | null = null;

const el = (id: string) => document.getElementById(id)!;

function toast(message: string) {
  const box = el('toast');
  box.textContent = message;
  box.classList.add('visible');
  setTimeout(() => box.classList.remove('visible'), 4000);
}

function domainFromForm(): Domain {
  const type = (el('domain') as HTMLSelectElement).value as Domain['type'];
  const domain: Domain = { type };
  if (type === 'z_inv_n') domain.n = parseInt((el('inv-n') as HTMLInputElement).value, 10);
  if (type === 'number_field') {
    domain.minpoly = (el('minpoly') as HTMLInputElement).value.split(',').map((c) => c.trim());
    domain.subring = (el('subring') as HTMLSelectElement).value as 'field' | 'integer_span';
  }
  if (type === 'finite_field') {
    domain.p = parseInt((el('field-p') as HTMLInputElement).value, 10);
    domain.k = parseInt((el('field-k') as HTMLInputElement).value, 10);
  }
  return domain;
}

function updateDomainOptions() {
  const type = (el('domain') as HTMLSelectElement).value;
  el('z-inv-options').hidden = type !== 'z_inv_n';
  el('nf-options').hidden = type !== 'number_field';
  el('ff-options').hidden = type !== 'finite_field';
  el('reals-note').hidden = type !== 'reals';
}

async function startGame(event: Event) {
  event.preventDefault();
  const engineSide = (el('engine-side') as HTMLSelectElement).value;
  const config = {
    domain: domainFromForm(),
    degree: parseInt((el('degree') as HTMLInputElement).value, 10),
    player_one: (el('first') as HTMLSelectElement).value as Side,
  };
  try {
    state = await client.createGame(config, engineSide === 'none' ? [] : [engineSide]);
    verdict = null;
    selectedSlot = null;
    render();
  } catch (error) {
    toast(describeError(error));
  }
}

function describeError(error: unknown): string {
  if (error instanceof ServerError) {
    return `${error.code}: ${error.message}`;
  }
  return String(error);
}

async function submitMove() {
  if (!state || selectedSlot === null) return;
  const text = (el('value-input') as HTMLInputElement).value;
  try {
    state = await client.postMoveText(state, selectedSlot, text);
    (el('value-input') as HTMLInputElement).value = '';
    selectedSlot = null;
    await refreshVerdict();
    render();
  } catch (error) {
    toast(describeError(error));
  }
}

async function engineMove() {
  if (!state) return;
  try {
    const reply = await client.engineMove(state.id);
    state = reply.state;
    el('engine-note').textContent = `${reply.policy}: ${reply.explanation}`;
    await refreshVerdict();
    render();
  } catch (error) {
    toast(describeError(error));
  }
}

async function refreshVerdict() {
  if (state && state.complete) {
    verdict = await client.getVerdict(state.id);
  }
}

function render() {
  if (!state) return;
  const view = buildBoardView(state, verdict);
  el('setup').hidden = false;
  el('game').hidden = false;
  el('domain-label').textContent = view.domainLabel;
  el('banner').textContent = view.banner;
  const board = el('board');
  board.innerHTML = '';
  for (const slot of view.slots) {
    const cell = document.createElement('button');
    cell.className = 'slot' + (slot.empty ? ' empty' : '') + (slot.endSlot ? ' end' : '');
    if (selectedSlot === slot.index) cell.classList.add('selected');
    const owner = slot.playedBy ? ` (${slot.playedBy})` : '';
    cell.innerHTML = `<span class="slot-label">${slot.label}</span><span class="slot-value">${
      slot.empty ? '_' : slot.text
    }</span><span class="slot-owner">${owner}</span>`;
    cell.disabled = !slot.empty || view.finished;
    cell.addEventListener('click', () => {
      selectedSlot = slot.index;
      el('move-hint').textContent = `a${slot.index}: ${valueEntryHint(state!.config.domain)}`;
      render();
    });
    board.appendChild(cell);
  }
  (el('submit-move') as HTMLButtonElement).disabled = view.finished || selectedSlot === null;
  (el('engine-move') as HTMLButtonElement).disabled =
    view.finished || !state.engine_sides.includes(state.turn);
  const panel = el('verdict');
  panel.innerHTML = view.verdictLines.map((line) => `<div>${line}</div>`).join('');
  panel.hidden = view.verdictLines.length === 0;
}

export function init() {
  el('setup-form').addEventListener('submit', startGame);
  el('domain').addEventListener('change', updateDomainOptions);
  el('submit-move').addEventListener('click', submitMove);
  el('engine-move').addEventListener('click', engineMove);
  (el('value-input') as HTMLInputElement).addEventListener('keydown', (event) => {
    if ((event as KeyboardEvent).key === 'Enter') submitMove();
  });
  updateDomainOptions();
}

if (typeof document !== 'undefined' && document.getElementById('setup-form')) {
  init();
}
