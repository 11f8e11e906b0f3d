/** Typed client for the sweep API with single-flight request handling:
 * issuing a new sweep aborts the one in flight, so a stale response can
 * never clobber a newer one. */

import type { ApiErrorBody, ChartDocument, PresetsDoc, SweepRequestBody } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public field: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(public base: string) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, "") + path;
  }

  async presets(): Promise<PresetsDoc> {
    const resp = await fetch(this.url("/api/v1/presets"));
    if (!resp.ok) throw new ApiError(resp.status, "", `presets fetch failed (${resp.status})`);
    return (await resp.json()) as PresetsDoc;
  }

  /** POST a sweep, superseding any request still in flight. */
  async sweep(body: SweepRequestBody): Promise<ChartDocument> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    let resp: Response;
    try {
      resp = await fetch(this.url("/api/v1/sweep"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
    if (!resp.ok) {
      let detail: ApiErrorBody | null = null;
      try {
        detail = (await resp.json()) as ApiErrorBody;
      } catch {
        // non-JSON error body; fall through with the status line
      }
      throw new ApiError(resp.status, detail?.field ?? "",
        detail?.message ?? `sweep failed (${resp.status})`);
    }
    return (await resp.json()) as ChartDocument;
  }
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
