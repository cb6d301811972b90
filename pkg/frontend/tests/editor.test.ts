import { beforeEach, describe, expect, it } from 'vitest'

import { ApiClient, ApiError } from '../src/api'
import { EditorState } from '../src/editor'
import { linksKey } from '../src/links'
import { FakeBackend } from './fakeApi'

let backend: FakeBackend
let annotatorApi: ApiClient
let leaderApi: ApiClient

beforeEach(() => {
  backend = new FakeBackend({
    'tok-ana': { annotator: 'ana', role: 'annotator' },
    'tok-lena': { annotator: 'lena', role: 'leader' },
  })
  annotatorApi = new ApiClient('http://fake', {
    token: 'tok-ana', annotator: 'ana', role: 'annotator',
  }, backend.fetch)
  leaderApi = new ApiClient('http://fake', {
    token: 'tok-lena', annotator: 'lena', role: 'leader',
  }, backend.fetch)
})

describe('suggestion round trip', () => {
  it('accept-all, save, reload yields byte-identical links', async () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'میخوام برم خونه'
    editor.formalDraft = 'می‌خواهم به خانه بروم'
    await editor.requestSuggestions()
    const suggested = linksKey(editor.pending.map(p => p.link))

    editor.acceptAll()
    expect(editor.saveEnabled()).toBe(true)
    expect(await editor.save()).toBe(true)
    expect(editor.recordId).not.toBeNull()

    await editor.reload()
    expect(editor.linksSignature()).toBe(suggested)
  })

  it('suggestions carry provenance badges until accepted', async () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    await editor.requestSuggestions()
    expect(editor.suggestedLinks().length).toBe(2)
    expect(editor.pending.every(p => p.provenance === 'diagonal-fallback')).toBe(true)
    expect(editor.acceptedLinks()).toEqual([])

    editor.toggleSuggestion(editor.pending[0]!.link)
    expect(editor.acceptedLinks().length).toBe(1)
    editor.toggleSuggestion(editor.pending[0]!.link)
    expect(editor.acceptedLinks().length).toBe(0)
  })
})

describe('save gate', () => {
  it('blocks overlapping links before any network call', async () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    editor.pending = [
      { link: { informal_span: [0, 2], formal_span: [0, 1] }, state: 'edited' },
      { link: { informal_span: [1, 2], formal_span: [1, 2] }, state: 'edited' },
    ]
    expect(editor.saveEnabled()).toBe(false)
    expect(await editor.save()).toBe(false)
    expect(editor.issues.some(i => i.message.includes('overlap'))).toBe(true)
    expect(backend.records.size).toBe(0)
  })

  it('drag-created links replace what they overlap', () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    editor.pending = [
      { link: { informal_span: [0, 1], formal_span: [0, 1] }, state: 'accepted' },
      { link: { informal_span: [1, 2], formal_span: [1, 2] }, state: 'accepted' },
    ]
    editor.createLink([0, 2], [0, 2])
    expect(editor.acceptedLinks()).toEqual([
      { informal_span: [0, 2], formal_span: [0, 2] },
    ])
    expect(editor.saveEnabled()).toBe(true)
  })

  it('uncovered tokens warn but do not block saving', async () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    editor.createLink([0, 1], [0, 1])
    const { errors, warnings } = editor.validate()
    expect(errors).toEqual([])
    expect(warnings.length).toBeGreaterThan(0)
    expect(await editor.save()).toBe(true)
  })
})

describe('convert prefill', () => {
  it('fills the formal field and identity links', async () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'یه هندونه وردار'
    await editor.prefillFromConverter()
    expect(editor.formalDraft).toBe('یک هندوانه بردار')
    expect(editor.acceptedLinks().length).toBe(3)
    expect(editor.saveEnabled()).toBe(true)
  })
})

describe('version conflicts', () => {
  async function savedEditor(): Promise<EditorState> {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    await editor.requestSuggestions()
    editor.acceptAll()
    await editor.save()
    return editor
  }

  it('stale save surfaces the server copy as a merge prompt', async () => {
    const editor = await savedEditor()
    // someone else updates the record in the meantime
    const rival = new EditorState(leaderApi)
    rival.recordId = editor.recordId
    await rival.reload()
    rival.formalDraft = 'پ ث'
    rival.createLink([0, 2], [0, 2])
    expect(await rival.save()).toBe(true)

    editor.formalDraft = 'پ ج'
    expect(await editor.save()).toBe(false)
    expect(editor.conflict).not.toBeNull()
    expect(editor.conflict!.server.formal).toBe('پ ث')
  })

  it('keepMine retries against the current version', async () => {
    const editor = await savedEditor()
    const rival = new EditorState(leaderApi)
    rival.recordId = editor.recordId
    await rival.reload()
    await rival.save()

    editor.formalDraft = 'پ ج'
    await editor.save()
    expect(editor.conflict).not.toBeNull()
    expect(await editor.keepMine()).toBe(true)
    expect(editor.conflict).toBeNull()
    expect(backend.records.get(editor.recordId!)!.formal).toBe('پ ج')
  })

  it('takeServer adopts the server copy', async () => {
    const editor = await savedEditor()
    const rival = new EditorState(leaderApi)
    rival.recordId = editor.recordId
    await rival.reload()
    rival.formalDraft = 'پ ث'
    await rival.save()

    editor.formalDraft = 'پ ج'
    await editor.save()
    editor.takeServer()
    expect(editor.formalDraft).toBe('پ ث')
    expect(editor.conflict).toBeNull()
  })
})

describe('review workflow', () => {
  it('leader-only confirmation is enforced end to end', async () => {
    const editor = new EditorState(annotatorApi)
    editor.informalDraft = 'الف ب'
    editor.formalDraft = 'پ ت'
    await editor.requestSuggestions()
    editor.acceptAll()
    await editor.save()

    expect(editor.canConfirm('annotator')).toBe(false)
    await editor.markReviewed()
    expect(editor.status).toBe('reviewed')
    expect(editor.canConfirm('annotator')).toBe(false)
    expect(editor.canConfirm('leader')).toBe(true)

    await expect(editor.confirm()).rejects.toThrowError(ApiError)
    expect(backend.records.get(editor.recordId!)!.status).toBe('reviewed')

    const leaderEditor = new EditorState(leaderApi)
    leaderEditor.recordId = editor.recordId
    await leaderEditor.reload()
    await leaderEditor.confirm()
    expect(leaderEditor.status).toBe('confirmed')
    expect(backend.records.get(editor.recordId!)!.status).toBe('confirmed')
  })

  it('skipping draft to confirmed is rejected', async () => {
    const editor = new EditorState(leaderApi)
    editor.informalDraft = 'الف'
    editor.formalDraft = 'ب'
    editor.createLink([0, 1], [0, 1])
    await editor.save()
    await expect(editor.confirm()).rejects.toThrowError(ApiError)
  })
})
