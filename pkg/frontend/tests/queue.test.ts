import { beforeEach, describe, expect, it } from 'vitest'

import { ApiClient } from '../src/api'
import { EditorState } from '../src/editor'
import { loadQueue, loadReports, reportsConsistent } from '../src/queue'
import { FakeBackend } from './fakeApi'

let backend: FakeBackend
let api: ApiClient

beforeEach(() => {
  backend = new FakeBackend({ 'tok': { annotator: 'ana', role: 'annotator' } })
  api = new ApiClient('http://fake', { token: 'tok', annotator: 'ana', role: 'annotator' },
                      backend.fetch)
})

async function saveRecord(informal: string, formal: string, source: string) {
  const editor = new EditorState(api)
  editor.informalDraft = informal
  editor.formalDraft = formal
  editor.source = source as never
  await editor.requestSuggestions()
  editor.acceptAll()
  expect(await editor.save()).toBe(true)
}

describe('queue view', () => {
  it('filters by source', async () => {
    await saveRecord('الف ب', 'پ ت', 'twitter')
    await saveRecord('ث ج', 'چ ح', 'web')
    const twitterOnly = await loadQueue(api, { source: 'twitter' })
    expect(twitterOnly.count).toBe(1)
    expect(twitterOnly.records[0]!.source).toBe('twitter')
  })

  it('text query searches both sides', async () => {
    await saveRecord('الف ب', 'پ ت', 'web')
    await saveRecord('خاص دیگر', 'چ ح', 'web')
    const hit = await loadQueue(api, { q: 'خاص' })
    expect(hit.count).toBe(1)
  })

  it('empty store loads an empty state without error', async () => {
    const state = await loadQueue(api, {})
    expect(state.records).toEqual([])
    expect(state.error).toBeNull()
  })

  it('API failure is surfaced non-destructively', async () => {
    const broken = new ApiClient('http://fake', {
      token: 'wrong', annotator: 'x', role: 'annotator',
    }, backend.fetch)
    const state = await loadQueue(broken, {})
    expect(state.error).not.toBeNull()
    expect(state.records).toEqual([])
  })
})

describe('reports view', () => {
  it('totals equal the stats endpoint', async () => {
    await saveRecord('الف ب', 'پ ت', 'twitter')
    await saveRecord('ث ج', 'چ ح', 'web')
    await saveRecord('د ذ', 'ر ز', 'twitter')
    const model = await loadReports(api)
    const stats = await api.stats()
    expect(model.total).toBe(stats.record_count)
    expect(reportsConsistent(model)).toBe(true)
    expect(model.sources).toEqual([
      { source: 'twitter', count: 2 },
      { source: 'web', count: 1 },
    ])
  })

  it('empty store renders zeroed panels', async () => {
    const model = await loadReports(api)
    expect(model.stats.record_count).toBe(0)
    expect(model.sources).toEqual([])
    expect(reportsConsistent(model)).toBe(true)
  })
})
