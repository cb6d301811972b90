/** Payload types mirroring the backend API (docs/api.md in the repo root). */

/** Half-open token-index span. */
export type Span = [number, number]

export interface Link {
  informal_span: Span
  formal_span: Span
}

export type Provenance = 'history' | 'diagonal-fallback'

export interface Suggestion {
  link: Link
  score: number
  tie_break: number
  provenance: Provenance
}

export interface SuggestResponse {
  informal_tokens: string[]
  formal_tokens: string[]
  suggestions: Suggestion[]
}

export interface ConversionResult {
  informal_text: string
  formal_text: string
  links: Link[]
  trace: { stage: string; ref: string; informal_index: number; before: string; after: string }[]
  alternatives: { informal_index: number; expansions: string[] }[]
  syntactic_change: boolean
  emphasis: [number, number][]
}

export type Source =
  | 'web' | 'twitter' | 'instagram' | 'myself'
  | 'movie' | 'messenger' | 'weblog' | 'book'

export type Status = 'draft' | 'reviewed' | 'confirmed'

export interface RecordDoc {
  id: string
  informal: string
  formal: string
  links: Link[]
  source: Source
  annotator: string
  created_at: string
  status: Status
  syntactic_change: boolean
  version: number
}

export interface Issue {
  severity: 'error' | 'warning'
  message: string
}

export interface Stats {
  record_count: number
  avg_formal_length: number
  avg_informal_length: number
  alignment_count: number
  unique_word_pairs: number
  pct_syntactic_change: number
  dictionary_size: number
  source_distribution: Record<string, number>
}

export type Role = 'annotator' | 'leader'

export interface SessionInfo {
  token: string
  annotator: string
  role: Role
}
