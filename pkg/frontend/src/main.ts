/** Browser entry: wires the editor, queue and reports views to the API. */

import { ApiClient } from './api'
import { EditorState } from './editor'
import { renderGrid, renderIssues, renderStatusControls, renderTokenRow } from './dom'
import { loadQueue, loadReports } from './queue'
import type { Role, SessionInfo } from './types'

function requireEl<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id)
  if (!node) throw new Error(`missing #${id}`)
  return node as T
}

function sessionFromPage(): SessionInfo {
  const params = new URLSearchParams(window.location.search)
  return {
    token: params.get('token') ?? 'dev-token',
    annotator: params.get('annotator') ?? 'dev',
    role: (params.get('role') as Role) ?? 'annotator',
  }
}

export function boot(): void {
  const session = sessionFromPage()
  const api = new ApiClient(window.location.origin, session)
  const editor = new EditorState(api)

  const informalInput = requireEl<HTMLTextAreaElement>('informal')
  const formalInput = requireEl<HTMLTextAreaElement>('formal')
  const workspace = requireEl<HTMLDivElement>('workspace')
  const issuesBox = requireEl<HTMLDivElement>('issues')
  const statusBox = requireEl<HTMLDivElement>('status')
  const queueBox = requireEl<HTMLDivElement>('queue')
  const reportsBox = requireEl<HTMLDivElement>('reports')

  function refresh(): void {
    informalInput.value = editor.informalDraft
    formalInput.value = editor.formalDraft
    workspace.replaceChildren(
      renderTokenRow(editor.informalTokens(), 'informal'),
      renderTokenRow(editor.formalTokens(), 'formal'),
      renderGrid(editor, idx => {
        const entry = editor.pending[idx]
        if (entry) editor.toggleSuggestion(entry.link)
        refresh()
      }),
    )
    issuesBox.replaceChildren(renderIssues(editor))
    statusBox.replaceChildren(renderStatusControls(editor, session.role, refresh))
    requireEl<HTMLButtonElement>('save').disabled = !editor.saveEnabled()
  }

  requireEl<HTMLButtonElement>('suggest').addEventListener('click', () => {
    editor.informalDraft = informalInput.value
    editor.formalDraft = formalInput.value
    editor.requestSuggestions().then(refresh)
  })
  requireEl<HTMLButtonElement>('prefill').addEventListener('click', () => {
    editor.informalDraft = informalInput.value
    editor.prefillFromConverter().then(refresh)
  })
  requireEl<HTMLButtonElement>('accept-all').addEventListener('click', () => {
    editor.acceptAll()
    refresh()
  })
  requireEl<HTMLButtonElement>('save').addEventListener('click', () => {
    editor.informalDraft = informalInput.value
    editor.formalDraft = formalInput.value
    editor.save().then(refresh)
  })

  requireEl<HTMLButtonElement>('load-queue').addEventListener('click', async () => {
    const state = await loadQueue(api, {
      source: requireEl<HTMLInputElement>('filter-source').value || undefined,
      status: requireEl<HTMLInputElement>('filter-status').value || undefined,
      q: requireEl<HTMLInputElement>('filter-q').value || undefined,
    })
    queueBox.replaceChildren()
    for (const record of state.records) {
      const row = document.createElement('div')
      row.className = 'queue-row'
      row.textContent = `${record.id} [${record.status}] ${record.informal}`
      row.addEventListener('click', () => {
        editor.recordId = record.id
        editor.reload().then(refresh)
      })
      queueBox.appendChild(row)
    }
  })

  requireEl<HTMLButtonElement>('load-reports').addEventListener('click', async () => {
    const model = await loadReports(api)
    reportsBox.replaceChildren()
    const totals = document.createElement('pre')
    totals.textContent = JSON.stringify(model.stats, null, 2)
    reportsBox.appendChild(totals)
  })

  refresh()
}

if (typeof document !== 'undefined' && document.getElementById('workspace')) {
  boot()
}
