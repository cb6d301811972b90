/** Record queue and reports view models. */

import { ApiClient, RecordFilters } from './api'
import type { RecordDoc, Stats } from './types'

export interface QueueState {
  filters: RecordFilters
  records: RecordDoc[]
  count: number
  error: string | null
}

export async function loadQueue(api: ApiClient, filters: RecordFilters): Promise<QueueState> {
  try {
    const { records, count } = await api.listRecords(filters)
    return { filters, records, count, error: null }
  } catch (err) {
    // API failures surface without discarding the current view
    return { filters, records: [], count: 0, error: String(err) }
  }
}

export interface ReportsModel {
  stats: Stats
  sources: { source: string; count: number }[]
  total: number
}

export async function loadReports(api: ApiClient): Promise<ReportsModel> {
  const stats = await api.stats()
  const dist = await api.statsSources()
  const sources = Object.entries(dist.sources)
    .map(([source, count]) => ({ source, count }))
    .sort((a, b) => b.count - a.count || a.source.localeCompare(b.source))
  return { stats, sources, total: dist.total }
}

/** The reports page shows totals that must agree with /stats. */
export function reportsConsistent(model: ReportsModel): boolean {
  return model.total === model.stats.record_count
    && model.sources.reduce((n, s) => n + s.count, 0) === model.stats.record_count
}
