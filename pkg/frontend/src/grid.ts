/** Alignment grid model: informal tokens as rows, formal tokens as
 * columns, with drag-range selection over both axes.
 *
 * The grid is a pure view model. Cell coordinates are logical token
 * indices; a right-to-left page flips the rendering direction (CSS),
 * never the indices. */

import { spanContains } from './links'
import type { Link, Span } from './types'

export interface GridCell {
  informal: number
  formal: number
  /** index into the pending-link list, or null */
  linkIndex: number | null
  state: 'suggested' | 'accepted' | 'edited' | null
}

export interface GridModel {
  rows: string[]
  cols: string[]
  cells: GridCell[][]
}

export interface PendingLike {
  link: Link
  state: 'suggested' | 'accepted' | 'edited'
}

export function buildGrid(informal: string[], formal: string[],
                          pending: PendingLike[]): GridModel {
  const cells: GridCell[][] = []
  for (let i = 0; i < informal.length; i++) {
    const row: GridCell[] = []
    for (let f = 0; f < formal.length; f++) {
      let linkIndex: number | null = null
      let state: GridCell['state'] = null
      pending.forEach((p, pi) => {
        if (spanContains(p.link.informal_span, i) && spanContains(p.link.formal_span, f)) {
          linkIndex = pi
          state = p.state
        }
      })
      row.push({ informal: i, formal: f, linkIndex, state })
    }
    cells.push(row)
  }
  return { rows: informal.slice(), cols: formal.slice(), cells }
}

export interface DragSelection {
  anchor: { informal: number; formal: number } | null
  head: { informal: number; formal: number } | null
}

export function emptySelection(): DragSelection {
  return { anchor: null, head: null }
}

export function beginDrag(sel: DragSelection, informal: number, formal: number): DragSelection {
  return { anchor: { informal, formal }, head: { informal, formal } }
}

export function extendDrag(sel: DragSelection, informal: number, formal: number): DragSelection {
  return sel.anchor ? { anchor: sel.anchor, head: { informal, formal } } : sel
}

/** The half-open spans a completed drag selects. */
export function selectionSpans(sel: DragSelection): { informal: Span; formal: Span } | null {
  if (!sel.anchor || !sel.head) return null
  const span = (a: number, b: number): Span => [Math.min(a, b), Math.max(a, b) + 1]
  return {
    informal: span(sel.anchor.informal, sel.head.informal),
    formal: span(sel.anchor.formal, sel.head.formal),
  }
}
