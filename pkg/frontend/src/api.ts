// All numbers shown anywhere in the UI come out of these two endpoints;
// nothing is computed client-side beyond pixel mapping.

import type { ViewState } from "./state.js";

export interface CurveArrays {
  x: number[];
  b1: number[];
  w12: number[];
}

export interface CurvesPayload {
  fold: CurveArrays;
  flip: CurveArrays;
  ns: CurveArrays;
}

export interface ScanPoint {
  leg: "first" | "second";
  step: number;
  params: Record<string, number>;
  x: number;
  y?: number;
}

export interface ScanPayload {
  points: ScanPoint[];
  hysteresis: {
    tolerance: number;
    windows: { param_lo: number; param_hi: number; max_gap: number }[];
  };
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export function curvesQuery(s: ViewState): string {
  const q = new URLSearchParams();
  q.set("system", "two");
  q.set("alpha", String(s.alpha));
  q.set("beta", String(s.beta));
  q.set("b2", String(s.b2));
  q.set("w11", String(s.w11));
  q.set("w21", String(s.w21));
  return q.toString();
}

async function asJson(resp: Response): Promise<any> {
  if (resp.ok) return resp.json();
  let message = resp.statusText;
  try {
    const body = await resp.json();
    if (typeof body.detail === "string") message = body.detail;
    else if (Array.isArray(body.detail)) {
      message = body.detail
        .map((d: { field: string; message: string }) => `${d.field}: ${d.message}`)
        .join("; ");
    }
  } catch {
    // non-JSON error body, keep the status text
  }
  throw new ApiError(resp.status, message);
}

export async function fetchCurves(
  s: ViewState,
  opts: { base?: string; signal?: AbortSignal } = {},
): Promise<CurvesPayload> {
  const resp = await fetch(`${opts.base ?? ""}/api/curves?${curvesQuery(s)}`, {
    signal: opts.signal,
  });
  return asJson(resp);
}

export function scanBody(s: ViewState): object {
  return {
    system: "two",
    task: "scan",
    params: {
      b1: s.scanParam === "b1" ? s.scanFrom : s.b1,
      b2: s.b2,
      w11: s.w11,
      w12: s.scanParam === "w12" ? s.scanFrom : s.w12,
      w21: s.w21,
      alpha: s.alpha,
      beta: s.beta,
    },
    scan: {
      schedules: [{ param: s.scanParam, start: s.scanFrom, end: s.scanTo }],
      step: s.step,
      initial_state: [s.x0, s.y0],
    },
  };
}

export async function postScan(
  s: ViewState,
  opts: { base?: string; signal?: AbortSignal } = {},
): Promise<ScanPayload> {
  const resp = await fetch(`${opts.base ?? ""}/api/scan`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(scanBody(s)),
    signal: opts.signal,
  });
  return asJson(resp);
}

// FNV-1a over the serialized payload; used by tests to prove the rendered
// data is exactly what the API returned.
export function checksum(payload: unknown): string {
  const text = JSON.stringify(payload);
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  return h.toString(16).padStart(8, "0");
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  ms: number,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), ms);
  };
}

// One in-flight request per endpoint; stale responses are dropped by
// sequence number and superseded fetches aborted.
export class RequestLane {
  private seq = 0;
  private controller: AbortController | undefined;

  begin(): { seq: number; signal: AbortSignal } {
    this.controller?.abort();
    this.controller = new AbortController();
    this.seq += 1;
    return { seq: this.seq, signal: this.controller.signal };
  }

  isCurrent(seq: number): boolean {
    return seq === this.seq;
  }
}
