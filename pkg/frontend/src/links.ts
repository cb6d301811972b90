/** Link arithmetic shared by the editor and the grid: bounds, overlap,
 * coverage and monotonicity checks over half-open token spans.
 *
 * Token indices are logical (reading) order throughout; right-to-left
 * is purely a rendering concern and never changes a payload.
 */

import type { Link, Span } from './types'

export function spanEmpty([a, b]: Span): boolean {
  return a === b
}

export function spanLength([a, b]: Span): number {
  return b - a
}

export function spanContains([a, b]: Span, index: number): boolean {
  return a <= index && index < b
}

function sideSpans(links: Link[], side: 'informal' | 'formal'): Span[] {
  return links.map(l => (side === 'informal' ? l.informal_span : l.formal_span))
}

/** Indices of link pairs whose spans share a token on one side. */
export function overlaps(links: Link[], side: 'informal' | 'formal'): [number, number][] {
  const owner = new Map<number, number>()
  const bad: [number, number][] = []
  sideSpans(links, side).forEach(([a, b], i) => {
    for (let t = a; t < b; t++) {
      const first = owner.get(t)
      if (first === undefined) owner.set(t, i)
      else if (!bad.some(([x, y]) => x === first && y === i)) bad.push([first, i])
    }
  })
  return bad
}

/** Token indices on a side not covered by any link. */
export function uncovered(links: Link[], side: 'informal' | 'formal', count: number): number[] {
  const seen = new Set<number>()
  for (const [a, b] of sideSpans(links, side)) {
    for (let t = a; t < b; t++) seen.add(t)
  }
  const out: number[] = []
  for (let t = 0; t < count; t++) if (!seen.has(t)) out.push(t)
  return out
}

export function outOfBounds(links: Link[], nInformal: number, nFormal: number): number[] {
  const bad: number[] = []
  links.forEach((l, i) => {
    const okSpan = (s: Span) => s[0] >= 0 && s[0] <= s[1]
    if (!okSpan(l.informal_span) || !okSpan(l.formal_span)
      || l.informal_span[1] > nInformal || l.formal_span[1] > nFormal
      || (spanEmpty(l.informal_span) && spanEmpty(l.formal_span))) bad.push(i)
  })
  return bad
}

export function isMonotonic(links: Link[]): boolean {
  const real = links
    .filter(l => !spanEmpty(l.informal_span) && !spanEmpty(l.formal_span))
    .sort((x, y) => x.informal_span[0] - y.informal_span[0])
  for (let i = 1; i < real.length; i++) {
    if (real[i]!.formal_span[0] < real[i - 1]!.formal_span[0]) return false
  }
  return true
}

export function impliesSyntacticChange(links: Link[]): boolean {
  return !isMonotonic(links)
    || links.some(l => spanEmpty(l.informal_span) || spanEmpty(l.formal_span))
}

/** Every problem that must block a save: bounds, overlaps. Coverage gaps
 * are warnings (the backend accepts them), returned separately. */
export interface LinkCheck {
  errors: string[]
  warnings: string[]
}

export function checkLinks(links: Link[], nInformal: number, nFormal: number): LinkCheck {
  const errors: string[] = []
  const warnings: string[] = []
  for (const i of outOfBounds(links, nInformal, nFormal)) {
    errors.push(`link ${i} is out of bounds`)
  }
  for (const side of ['informal', 'formal'] as const) {
    for (const [a, b] of overlaps(links, side)) {
      errors.push(`links ${a} and ${b} overlap on the ${side} side`)
    }
    for (const t of uncovered(links, side, side === 'informal' ? nInformal : nFormal)) {
      warnings.push(`${side} token ${t} is covered by no link`)
    }
  }
  return { errors, warnings }
}

/** Canonical serialization used for byte-identity comparisons. */
export function linksKey(links: Link[]): string {
  return JSON.stringify(links.map(l => ({
    informal_span: l.informal_span,
    formal_span: l.formal_span,
  })))
}

export function sameLink(a: Link, b: Link): boolean {
  return a.informal_span[0] === b.informal_span[0]
    && a.informal_span[1] === b.informal_span[1]
    && a.formal_span[0] === b.formal_span[0]
    && a.formal_span[1] === b.formal_span[1]
}
