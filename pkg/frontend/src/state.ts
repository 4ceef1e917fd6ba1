// Everything the explorer renders is a function of this state, and the URL
// carries all of it, so reloading a shared link reproduces the same fetches.

export interface ViewState {
  alpha: number;
  beta: number;
  b2: number;
  w11: number;
  w21: number;
  // fixed value of whichever control-plane coordinate is not being swept
  b1: number;
  w12: number;
  x0: number;
  y0: number;
  scanParam: "b1" | "w12";
  scanFrom: number;
  scanTo: number;
  step: number;
}

export const DEFAULTS: ViewState = {
  alpha: 1,
  beta: 0.3,
  b2: 3,
  w11: 0,
  w21: 5,
  b1: -5,
  w12: 5,
  x0: -7,
  y0: -2,
  scanParam: "b1",
  scanFrom: -5,
  scanTo: 5,
  step: 0.01,
};

const NUMERIC_KEYS = [
  "alpha", "beta", "b2", "w11", "w21", "b1", "w12",
  "x0", "y0", "scanFrom", "scanTo", "step",
] as const;

export function encodeState(s: ViewState): string {
  const q = new URLSearchParams();
  for (const k of NUMERIC_KEYS) q.set(k, String(s[k]));
  q.set("scanParam", s.scanParam);
  return q.toString();
}

export function decodeState(search: string): ViewState {
  const q = new URLSearchParams(search);
  const s: ViewState = { ...DEFAULTS };
  for (const k of NUMERIC_KEYS) {
    const raw = q.get(k);
    if (raw === null || raw === "") continue;  // Number("") is 0, not NaN
    const v = Number(raw);
    if (Number.isFinite(v)) s[k] = v;
  }
  const p = q.get("scanParam");
  if (p === "b1" || p === "w12") s.scanParam = p;
  return s;
}
