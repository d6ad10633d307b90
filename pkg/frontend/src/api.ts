/**
 * Talking to the profile service: debounced, latest-wins requests.
 *
 * Control changes arrive faster than the service round trip; a stale
 * response must never overwrite a newer plot, so each request aborts the
 * one in flight.
 */

import { ApiError, ConfigMapping, CurveDocument, ResultsDocument } from "./types.js";

export const DEBOUNCE_MS = 150;

export interface ProfilePayload {
  dataset: ResultsDocument;
  config: ConfigMapping;
  response_format: "json" | "svg" | "html";
}

export class ServiceError extends Error {
  constructor(public status: number, public report: ApiError) {
    super(report.errors.map((e) => `${e.path}: ${e.message}`).join("; ") || `HTTP ${status}`);
  }
}

async function postProfile(payload: ProfilePayload, signal?: AbortSignal): Promise<Response> {
  const response = await fetch("/api/profile", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
    signal,
  });
  if (!response.ok) {
    let report: ApiError = { errors: [{ path: "", message: `HTTP ${response.status}` }] };
    try {
      report = (await response.json()) as ApiError;
    } catch {
      // non-JSON error body: keep the status-only report
    }
    throw new ServiceError(response.status, report);
  }
  return response;
}

export async function fetchCurves(
  dataset: ResultsDocument,
  config: ConfigMapping,
  signal?: AbortSignal,
): Promise<CurveDocument> {
  const response = await postProfile({ dataset, config, response_format: "json" }, signal);
  return (await response.json()) as CurveDocument;
}

export async function fetchPlot(
  dataset: ResultsDocument,
  config: ConfigMapping,
  format: "svg" | "html",
  signal?: AbortSignal,
): Promise<Blob> {
  const response = await postProfile({ dataset, config, response_format: format }, signal);
  return await response.blob();
}

/** Wrap an async task so rapid calls coalesce and only the newest wins. */
export function latestWins<T extends unknown[]>(
  task: (signal: AbortSignal, ...args: T) => Promise<void>,
  debounceMs: number = DEBOUNCE_MS,
  setTimer: typeof setTimeout = setTimeout,
  clearTimer: typeof clearTimeout = clearTimeout,
): (...args: T) => void {
  let controller: AbortController | null = null;
  let timer: ReturnType<typeof setTimeout> | null = null;
  return (...args: T) => {
    if (timer !== null) clearTimer(timer);
    timer = setTimer(() => {
      controller?.abort();
      controller = new AbortController();
      const signal = controller.signal;
      void task(signal, ...args).catch((err) => {
        // tasks surface their own failures; aborts are routine
        if ((err as Error).name !== "AbortError") console.error(err);
      });
    }, debounceMs);
  };
}
