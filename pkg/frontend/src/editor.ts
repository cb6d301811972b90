/** Editor state for one sentence-pair record.
 *
 * All mutation goes through methods so the save gate (link invariants)
 * is re-checked on every change; no link set that fails validation can
 * be persisted. Token indices are logical order; the grid renders them
 * right-to-left but payloads never change.
 */

import { ApiClient, ApiError, RecordPayload } from './api'
import { checkLinks, impliesSyntacticChange, linksKey, sameLink, spanEmpty } from './links'
import type { Issue, Link, Provenance, RecordDoc, Source, Span, Status } from './types'

export type PendingState = 'suggested' | 'accepted' | 'edited'

export interface PendingLink {
  link: Link
  state: PendingState
  /** set for links that came from the suggester */
  provenance?: Provenance
}

export interface Conflict {
  server: RecordDoc
  attemptedVersion: number
}

export function tokenize(text: string): string[] {
  const trimmed = text.trim().replace(/\s+/g, ' ')
  return trimmed ? trimmed.split(' ') : []
}

export class EditorState {
  informalDraft = ''
  formalDraft = ''
  pending: PendingLink[] = []
  source: Source = 'myself'
  recordId: string | null = null
  version: number | null = null
  status: Status = 'draft'
  issues: Issue[] = []
  conflict: Conflict | null = null
  /** informal token index -> unchosen expansions, from convert prefill */
  alternatives = new Map<number, string[]>()

  constructor(private readonly api: ApiClient) {}

  informalTokens(): string[] {
    return tokenize(this.informalDraft)
  }

  formalTokens(): string[] {
    return tokenize(this.formalDraft)
  }

  /** Links that would be saved: everything the user accepted or drew. */
  acceptedLinks(): Link[] {
    return this.pending.filter(p => p.state !== 'suggested').map(p => p.link)
  }

  suggestedLinks(): PendingLink[] {
    return this.pending.filter(p => p.state === 'suggested')
  }

  // -- suggestion workflow --------------------------------------------------

  async requestSuggestions(): Promise<void> {
    const response = await this.api.suggest(this.informalDraft, this.formalDraft)
    this.informalDraft = response.informal_tokens.join(' ')
    this.formalDraft = response.formal_tokens.join(' ')
    this.pending = response.suggestions.map(s => ({
      link: s.link,
      state: 'suggested' as PendingState,
      provenance: s.provenance,
    }))
  }

  /** Toggle one suggested link between suggested and accepted. */
  toggleSuggestion(link: Link): void {
    const entry = this.pending.find(p => sameLink(p.link, link))
    if (!entry) return
    entry.state = entry.state === 'suggested' ? 'accepted' : 'suggested'
  }

  acceptAll(): void {
    for (const entry of this.pending) {
      if (entry.state === 'suggested') entry.state = 'accepted'
    }
  }

  // -- manual editing -------------------------------------------------------

  /** Create a link from a drag selection; replaces pending links it
   * overlaps on either side. Empty spans mark insertions/deletions. */
  createLink(informalSpan: Span, formalSpan: Span): void {
    if (spanEmpty(informalSpan) && spanEmpty(formalSpan)) return
    const candidate: Link = { informal_span: informalSpan, formal_span: formalSpan }
    this.pending = this.pending.filter(p => !this.overlapsPending(p.link, candidate))
    this.pending.push({ link: candidate, state: 'edited' })
  }

  removeLink(link: Link): void {
    this.pending = this.pending.filter(p => !sameLink(p.link, link))
  }

  private overlapsPending(a: Link, b: Link): boolean {
    const sideHit = (x: Span, y: Span) => x[0] < y[1] && y[0] < x[1]
    return sideHit(a.informal_span, b.informal_span)
      || sideHit(a.formal_span, b.formal_span)
  }

  // -- convert prefill ------------------------------------------------------

  /** Convert the informal draft and prefill the formal side and links. */
  async prefillFromConverter(): Promise<void> {
    const result = await this.api.convert(this.informalDraft)
    this.informalDraft = result.informal_text
    this.formalDraft = result.formal_text
    this.pending = result.links.map(link => ({ link, state: 'accepted' as PendingState }))
    this.alternatives = new Map(
      result.alternatives.map(a => [a.informal_index, a.expansions]))
  }

  // -- validation & save ----------------------------------------------------

  validate(): { errors: string[]; warnings: string[] } {
    return checkLinks(this.acceptedLinks(),
                      this.informalTokens().length, this.formalTokens().length)
  }

  saveEnabled(): boolean {
    return this.informalTokens().length > 0
      && this.formalTokens().length > 0
      && this.validate().errors.length === 0
  }

  private payload(): RecordPayload {
    const links = this.acceptedLinks()
    return {
      ...(this.recordId ? { id: this.recordId } : {}),
      informal: this.informalDraft,
      formal: this.formalDraft,
      links,
      source: this.source,
      status: this.status,
      syntactic_change: impliesSyntacticChange(links),
      ...(this.version !== null ? { version: this.version } : {}),
    }
  }

  /** Create or update the record; validation issues surface in `issues`,
   * a stale version surfaces in `conflict` with the server copy. */
  async save(): Promise<boolean> {
    if (!this.saveEnabled()) {
      this.issues = this.validate().errors.map(m => ({ severity: 'error', message: m }))
      return false
    }
    try {
      const response = this.recordId === null
        ? await this.api.createRecord(this.payload())
        : await this.api.updateRecord(this.recordId, this.payload())
      this.adopt(response.record)
      this.issues = response.warnings
      this.conflict = null
      return true
    } catch (err) {
      if (err instanceof ApiError) {
        if (err.status === 409 && this.recordId) {
          this.conflict = {
            server: await this.api.getRecord(this.recordId),
            attemptedVersion: this.version ?? 0,
          }
        }
        this.issues = err.issues.map(i =>
          typeof i === 'string' ? { severity: 'error' as const, message: i } : i)
        return false
      }
      throw err
    }
  }

  /** Conflict resolution: adopt the server copy wholesale... */
  takeServer(): void {
    if (this.conflict) {
      this.adopt(this.conflict.server)
      this.conflict = null
    }
  }

  /** ...or keep local edits and retry against the server's version. */
  async keepMine(): Promise<boolean> {
    if (!this.conflict) return false
    this.version = this.conflict.server.version
    this.conflict = null
    return this.save()
  }

  async reload(): Promise<void> {
    if (!this.recordId) return
    this.adopt(await this.api.getRecord(this.recordId))
  }

  private adopt(record: RecordDoc): void {
    this.recordId = record.id
    this.version = record.version
    this.status = record.status
    this.source = record.source
    this.informalDraft = record.informal
    this.formalDraft = record.formal
    this.pending = record.links.map(link => ({ link, state: 'accepted' as PendingState }))
  }

  // -- review workflow ------------------------------------------------------

  canConfirm(role: string): boolean {
    return role === 'leader' && this.status === 'reviewed'
  }

  async markReviewed(): Promise<void> {
    if (!this.recordId) throw new Error('record not saved yet')
    this.adoptStatus(await this.api.setStatus(this.recordId, 'reviewed'))
  }

  async confirm(): Promise<void> {
    if (!this.recordId) throw new Error('record not saved yet')
    this.adoptStatus(await this.api.setStatus(this.recordId, 'confirmed'))
  }

  private adoptStatus(record: RecordDoc): void {
    this.status = record.status
    this.version = record.version
  }

  /** Serialized accepted links, for byte-identity round-trip checks. */
  linksSignature(): string {
    return linksKey(this.acceptedLinks())
  }
}
