/** Minimal DOM rendering for the annotation editor. Persian text renders
 * right-to-left via the page's dir attribute; all indices stay logical. */

import { EditorState } from './editor'
import { buildGrid } from './grid'
import type { Role } from './types'

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag)
  if (className) node.className = className
  if (text !== undefined) node.textContent = text
  return node
}

export function renderTokenRow(tokens: string[], kind: 'informal' | 'formal'): HTMLElement {
  const row = el('div', `tokens tokens-${kind}`)
  row.setAttribute('dir', 'rtl')
  tokens.forEach((surface, index) => {
    const chip = el('span', 'token', surface)
    chip.dataset.index = String(index)  // logical index, independent of display order
    row.appendChild(chip)
  })
  return row
}

export function renderGrid(editor: EditorState, onToggle: (pendingIndex: number) => void): HTMLElement {
  const grid = buildGrid(editor.informalTokens(), editor.formalTokens(), editor.pending)
  const table = el('table', 'align-grid') as HTMLTableElement
  table.setAttribute('dir', 'rtl')
  const head = table.createTHead().insertRow()
  head.appendChild(el('th'))
  grid.cols.forEach(c => head.appendChild(el('th', 'col-token', c)))
  const body = table.createTBody()
  grid.cells.forEach((row, i) => {
    const tr = body.insertRow()
    tr.appendChild(el('th', 'row-token', grid.rows[i]))
    row.forEach(cell => {
      const td = tr.insertCell()
      if (cell.state) {
        td.className = `cell cell-${cell.state}`
        td.textContent = cell.state === 'suggested' ? '?' : '●'
        if (cell.linkIndex !== null) {
          const idx = cell.linkIndex
          td.addEventListener('click', () => onToggle(idx))
        }
      }
    })
  })
  return table
}

export function renderIssues(editor: EditorState): HTMLElement {
  const list = el('ul', 'issues')
  for (const issue of editor.issues) {
    list.appendChild(el('li', `issue issue-${issue.severity}`, issue.message))
  }
  return list
}

export function renderStatusControls(editor: EditorState, role: Role,
                                     refresh: () => void): HTMLElement {
  const bar = el('div', 'status-bar')
  bar.appendChild(el('span', `badge badge-${editor.status}`, editor.status))
  if (editor.status === 'draft' && editor.recordId) {
    const btn = el('button', 'review', 'mark reviewed') as HTMLButtonElement
    btn.addEventListener('click', () => editor.markReviewed().then(refresh))
    bar.appendChild(btn)
  }
  if (editor.canConfirm(role)) {
    const btn = el('button', 'confirm', 'confirm') as HTMLButtonElement
    btn.addEventListener('click', () => editor.confirm().then(refresh))
    bar.appendChild(btn)
  }
  return bar
}
