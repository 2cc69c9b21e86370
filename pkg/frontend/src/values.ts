// Per-domain value entry: formatting checks and wire encoding.
//
// This is the only "validation" the client does, and it is purely about
// input format (is this a fraction, are these k coordinates).  Every rule
// decision (nonzero slots, domain membership, verdicts) belongs to the
// server; api.ts can bypass even these format checks so tests can confirm
// the server rejects bad input identically.

import { Domain, WireValue } from './types';

const RATIONAL_RE = /^[+-]?\d+(\s*\/\s*[1-9]\d*)?$/;

export function isRationalText(text: string): boolean {
  return RATIONAL_RE.test(text.trim());
}

function normalizeRational(text: string): string {
  return text.trim().replace(/\s+/g, '');
}

export type ParseResult = { ok: true; value: WireValue } | { ok: false; reason: string };

/** Split coordinate text on ":" or ",", e.g. "1:2" or "1, 2". */
function splitCoords(text: string): string[] {
  return text.split(/[,:]/).map((part) => part.trim());
}

export function parseValueText(domain: Domain, text: string): ParseResult {
  const trimmed = text.trim();
  if (!trimmed) return { ok: false, reason: 'enter a value' };
  switch (domain.type) {
    case 'integers':
    case 'rationals':
    case 'z_inv_n':
    case 'reals':
    case 'algebraically_closed': {
      if (!isRationalText(trimmed)) {
        return { ok: false, reason: 'expected an integer or fraction like -3 or 5/8' };
      }
      return { ok: true, value: normalizeRational(trimmed) };
    }
    case 'number_field': {
      const degree = (domain.minpoly?.length ?? 1) - 1;
      const coords = splitCoords(trimmed);
      if (coords.length !== degree) {
        return { ok: false, reason: `expected ${degree} coordinates separated by ":"` };
      }
      if (!coords.every(isRationalText)) {
        return { ok: false, reason: 'every coordinate must be an integer or fraction' };
      }
      return { ok: true, value: coords.map(normalizeRational) };
    }
    case 'finite_field': {
      const k = domain.k ?? 1;
      const coords = splitCoords(trimmed);
      if (coords.length !== k) {
        return { ok: false, reason: `expected ${k} coordinate${k > 1 ? 's' : ''}` };
      }
      if (!coords.every((c) => /^\d+$/.test(c))) {
        return { ok: false, reason: 'coordinates must be nonnegative integers' };
      }
      return { ok: true, value: coords.map((c) => parseInt(c, 10)) };
    }
  }
}

/** Square root symbol of a quadratic field t^2 - m, if it has that shape. */
function quadraticRadicand(domain: Domain): number | null {
  const minpoly = domain.minpoly;
  if (!minpoly || minpoly.length !== 3) return null;
  if (minpoly[1] !== '0' || minpoly[2] !== '1') return null;
  const m = -parseInt(minpoly[0], 10);
  return Number.isInteger(m) && m > 0 ? m : null;
}

export function formatValue(domain: Domain, value: WireValue | null): string {
  if (value === null) return '';
  if (typeof value === 'string') return value;
  const coords = value as (string | number)[];
  if (domain.type === 'number_field') {
    const m = quadraticRadicand(domain);
    if (m !== null && coords.length === 2) {
      const [a, b] = coords.map(String);
      if (b === '0') return a;
      const radical = `√${m}`;
      const bPart = b === '1' ? radical : b === '-1' ? `-${radical}` : `${b}${radical}`;
      if (a === '0') return bPart;
      return bPart.startsWith('-') ? `${a} - ${bPart.slice(1)}` : `${a} + ${bPart}`;
    }
    return coords
      .map((c, i) => (i === 0 ? String(c) : `${c}·t^${i}`))
      .filter((part, i) => i === 0 || !part.startsWith('0·'))
      .join(' + ');
  }
  if (domain.type === 'finite_field') {
    return coords.length === 1 ? String(coords[0]) : `(${coords.join(',')})`;
  }
  return coords.join(':');
}

export function valueEntryHint(domain: Domain): string {
  switch (domain.type) {
    case 'integers':
      return 'an integer, e.g. -12';
    case 'rationals':
      return 'a fraction p/q, e.g. 10000 or -1/4';
    case 'z_inv_n':
      return `a fraction whose denominator divides a power of ${domain.n}`;
    case 'reals':
      return 'a rational value (dense in the reals, keeps verdicts exact)';
    case 'number_field': {
      const degree = (domain.minpoly?.length ?? 1) - 1;
      return `${degree} rational coordinates, e.g. "1:1"`;
    }
    case 'finite_field':
      return (domain.k ?? 1) > 1 ? `${domain.k} residues, e.g. "1:0"` : `a residue mod ${domain.p}`;
    case 'algebraically_closed':
      return 'a rational value';
  }
}
