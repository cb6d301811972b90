/** End-to-end check against a running backend.
 *
 * Start the service with a session table granting an annotator and a
 * leader token, then:
 *
 *   rasmi serve --port 8000 --sessions sessions.json
 *   BACKEND_URL=http://127.0.0.1:8000 npx vitest run tests/live.test.ts
 *
 * Expects tokens `live-ana` (annotator) and `live-lena` (leader).
 */

import { describe, expect, it } from 'vitest'

import { ApiClient, ApiError } from '../src/api'
import { EditorState } from '../src/editor'
import { linksKey } from '../src/links'
import { loadReports, reportsConsistent } from '../src/queue'

const base = process.env.BACKEND_URL

describe.skipIf(!base)('live backend', () => {
  const annotator = () => new ApiClient(base!, {
    token: 'live-ana', annotator: 'ana', role: 'annotator',
  }, (url, init) => fetch(url, init))
  const leader = () => new ApiClient(base!, {
    token: 'live-lena', annotator: 'lena', role: 'leader',
  }, (url, init) => fetch(url, init))

  it('round-trips suggested links byte-identically', async () => {
    const editor = new EditorState(annotator())
    editor.informalDraft = 'میخوام برم مدرسه'
    editor.formalDraft = 'می‌خواهم به مدرسه بروم'
    await editor.requestSuggestions()
    const suggested = linksKey(editor.pending.map(p => p.link))
    editor.acceptAll()
    expect(await editor.save()).toBe(true)
    await editor.reload()
    expect(editor.linksSignature()).toBe(suggested)
  })

  it('prefills from the converter', async () => {
    const editor = new EditorState(annotator())
    editor.informalDraft = 'یه هندونه وردار'
    await editor.prefillFromConverter()
    expect(editor.formalDraft).toBe('یک هندوانه بردار')
  })

  it('enforces leader-only confirmation', async () => {
    const editor = new EditorState(annotator())
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    await editor.requestSuggestions()
    editor.acceptAll()
    await editor.save()
    await editor.markReviewed()
    await expect(editor.confirm()).rejects.toThrowError(ApiError)

    const asLeader = new EditorState(leader())
    asLeader.recordId = editor.recordId
    await asLeader.reload()
    await asLeader.confirm()
    expect(asLeader.status).toBe('confirmed')
  })

  it('reports totals equal /stats', async () => {
    const model = await loadReports(annotator())
    expect(reportsConsistent(model)).toBe(true)
  })
})
