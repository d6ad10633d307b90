/**
 * Talking to the profile service: debounced, latest-wins requests.
 *
 * Control changes arrive faster than the service round trip; a stale
 * response must never overwrite a newer plot, so each request aborts the
 * one in flight.
 */
export const DEBOUNCE_MS = 150;
export class ServiceError extends Error {
    constructor(status, report) {
        super(report.errors.map((e) => `${e.path}: ${e.message}`).join("; ") || `HTTP ${status}`);
        this.status = status;
        this.report = report;
    }
}
async function postProfile(payload, signal) {
    const response = await fetch("/api/profile", {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
        signal,
    });
    if (!response.ok) {
        let report = { errors: [{ path: "", message: `HTTP ${response.status}` }] };
        try {
            report = (await response.json());
        }
        catch {
            // non-JSON error body: keep the status-only report
        }
        throw new ServiceError(response.status, report);
    }
    return response;
}
export async function fetchCurves(dataset, config, signal) {
    const response = await postProfile({ dataset, config, response_format: "json" }, signal);
    return (await response.json());
}
export async function fetchPlot(dataset, config, format, signal) {
    const response = await postProfile({ dataset, config, response_format: format }, signal);
    return await response.blob();
}
/** Wrap an async task so rapid calls coalesce and only the newest wins. */
export function latestWins(task, debounceMs = DEBOUNCE_MS, setTimer = setTimeout, clearTimer = clearTimeout) {
    let controller = null;
    let timer = null;
    return (...args) => {
        if (timer !== null)
            clearTimer(timer);
        timer = setTimer(() => {
            controller?.abort();
            controller = new AbortController();
            const signal = controller.signal;
            void task(signal, ...args).catch((err) => {
                // tasks surface their own failures; aborts are routine
                if (err.name !== "AbortError")
                    console.error(err);
            });
        }, debounceMs);
    };
}
