/** Thin typed client over the backend HTTP API. The fetch implementation is
 * injected so tests can run against an in-memory fake of the same contract. */

import type {
  ConversionResult, Issue, Link, RecordDoc, SessionInfo, Stats, Status,
  SuggestResponse,
} from './types'

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly issues: (Issue | string)[],
    readonly currentVersion?: number,
  ) {
    super(`API error ${status}`)
  }
}

export interface RecordFilters {
  source?: string
  status?: string
  annotator?: string
  q?: string
}

export interface RecordPayload {
  id?: string
  informal: string
  formal: string
  links: Link[]
  source: string
  status: Status
  syntactic_change: boolean
  version?: number
}

export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly session: SessionInfo,
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.base + path, {
      method,
      headers: {
        'Authorization': `Bearer ${this.session.token}`,
        'Content-Type': 'application/json',
      },
      body: body === undefined ? undefined : JSON.stringify(body),
    })
    if (!response.ok) {
      let issues: (Issue | string)[] = []
      let currentVersion: number | undefined
      try {
        const detail = (await response.json()).detail
        issues = detail?.issues ?? []
        currentVersion = detail?.current_version
      } catch { /* non-JSON error body */ }
      throw new ApiError(response.status, issues, currentVersion)
    }
    return response.json() as Promise<T>
  }

  convert(text: string): Promise<ConversionResult> {
    return this.request('POST', '/convert', { text })
  }

  suggest(informal: string, formal: string): Promise<SuggestResponse> {
    return this.request('POST', '/suggest', { informal, formal })
  }

  createRecord(payload: RecordPayload): Promise<{ record: RecordDoc; warnings: Issue[] }> {
    return this.request('POST', '/records', payload)
  }

  updateRecord(id: string, payload: RecordPayload): Promise<{ record: RecordDoc; warnings: Issue[] }> {
    return this.request('PUT', `/records/${id}`, payload)
  }

  getRecord(id: string): Promise<RecordDoc> {
    return this.request('GET', `/records/${id}`)
  }

  listRecords(filters: RecordFilters = {}): Promise<{ records: RecordDoc[]; count: number }> {
    const params = new URLSearchParams()
    for (const [key, value] of Object.entries(filters)) {
      if (value) params.set(key, value)
    }
    const query = params.toString()
    return this.request('GET', '/records' + (query ? `?${query}` : ''))
  }

  setStatus(id: string, status: Status): Promise<RecordDoc> {
    return this.request('POST', `/records/${id}/status`, { status })
  }

  stats(): Promise<Stats> {
    return this.request('GET', '/stats')
  }

  statsSources(): Promise<{ sources: Record<string, number>; total: number }> {
    return this.request('GET', '/stats/sources')
  }
}
