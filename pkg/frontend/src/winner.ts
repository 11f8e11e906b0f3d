/** Alpha-preference lookups against the server-computed optimal set.
 *
 * The UI never re-runs the utility optimization: the winner at a given
 * alpha is found purely by locating alpha in the interval tiling the API
 * returned, so the UI and the CLI can never disagree.
 */

import type { ChartDocument } from "./types.js";

export function winnerIndex(doc: ChartDocument, alpha: number): number {
  const intervals = doc.optimal_set;
  if (intervals.length === 0) {
    throw new Error("chart document has an empty optimal set");
  }
  for (const iv of intervals) {
    if (alpha >= iv.alpha_min && alpha <= iv.alpha_max) {
      return iv.point_index;
    }
  }
  // alpha is clamped to [0, 1] by the slider; fall back to the edges
  const last = intervals[intervals.length - 1]!;
  return alpha > last.alpha_max ? last.point_index : intervals[0]!.point_index;
}

export function highlightedIndices(doc: ChartDocument): Set<number> {
  return new Set(doc.optimal_set.map((iv) => iv.point_index));
}
