import {
  ApiError,
  RequestLane,
  debounce,
  fetchCurves,
  postScan,
} from "./api.js";
import { drawCurves, drawScan } from "./plot.js";
import { DEFAULTS, ViewState, decodeState, encodeState } from "./state.js";

const SLIDERS: {
  key: "alpha" | "beta" | "b2" | "w11" | "w21";
  min: number;
  max: number;
  step: number;
}[] = [
  { key: "alpha", min: 0.1, max: 3, step: 0.01 },
  { key: "beta", min: 0.05, max: 1, step: 0.01 },
  { key: "b2", min: -5, max: 5, step: 0.1 },
  { key: "w11", min: -4, max: 4, step: 0.1 },
  { key: "w21", min: -8, max: 8, step: 0.1 },
];

const FIELDS = ["b1", "w12", "x0", "y0", "scanFrom", "scanTo", "step"] as const;

const state: ViewState = decodeState(location.search.replace(/^\?/, ""));
const curveLane = new RequestLane();
const scanLane = new RequestLane();

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function syncUrl() {
  history.replaceState(null, "", `?${encodeState(state)}`);
}

function setStatus(id: string, text: string, isError = false) {
  const node = el<HTMLElement>(id);
  node.textContent = text;
  node.className = isError ? "status error" : "status";
}

async function refreshCurves() {
  const { seq, signal } = curveLane.begin();
  setStatus("curve-status", "fetching curves...");
  try {
    const payload = await fetchCurves(state, { signal });
    if (!curveLane.isCurrent(seq)) return;
    drawCurves(el<HTMLCanvasElement>("curves"), payload);
    setStatus("curve-status",
      `fold ${payload.fold.x.length} / flip ${payload.flip.x.length} / ns ${payload.ns.x.length} samples`);
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    setStatus("curve-status", String((err as Error).message), true);
  }
}

const refreshCurvesDebounced = debounce(refreshCurves, 150);

function updateLaunchEnabled() {
  el<HTMLButtonElement>("launch").disabled = state.scanFrom === state.scanTo;
}

async function launchScan() {
  const { seq, signal } = scanLane.begin();
  setStatus("scan-status", "scanning...");
  try {
    const payload = await postScan(state, { signal });
    if (!scanLane.isCurrent(seq)) return;
    drawScan(el<HTMLCanvasElement>("scan"), payload, state.scanParam);
    const wins = payload.hysteresis.windows;
    setStatus("scan-status", wins.length === 0
      ? `${payload.points.length} points, no hysteresis at tol ${payload.hysteresis.tolerance}`
      : `${payload.points.length} points; windows ` + wins
        .map((w) => `[${w.param_lo.toFixed(2)}, ${w.param_hi.toFixed(2)}] gap ${w.max_gap.toFixed(2)}`)
        .join(", "));
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    const e = err as ApiError;
    if (e.status === 413) {
      setStatus("scan-status", `${e.message} - raise the step size and relaunch`, true);
    } else {
      setStatus("scan-status", e.message, true);
    }
  }
}

function wireControls() {
  for (const s of SLIDERS) {
    const input = el<HTMLInputElement>(s.key);
    input.min = String(s.min);
    input.max = String(s.max);
    input.step = String(s.step);
    input.value = String(state[s.key]);
    const label = el<HTMLElement>(`${s.key}-value`);
    label.textContent = input.value;
    input.addEventListener("input", () => {
      state[s.key] = Number(input.value);
      label.textContent = input.value;
      syncUrl();
      refreshCurvesDebounced();
    });
  }
  for (const key of FIELDS) {
    const input = el<HTMLInputElement>(key);
    input.value = String(state[key]);
    input.addEventListener("change", () => {
      const v = Number(input.value);
      if (!Number.isFinite(v)) {
        input.value = String(state[key]);
        return;
      }
      state[key] = v;
      syncUrl();
      updateLaunchEnabled();
    });
  }
  const paramSel = el<HTMLSelectElement>("scanParam");
  paramSel.value = state.scanParam;
  paramSel.addEventListener("change", () => {
    state.scanParam = paramSel.value as "b1" | "w12";
    syncUrl();
  });
  el<HTMLButtonElement>("launch").addEventListener("click", launchScan);
  updateLaunchEnabled();
}

wireControls();
syncUrl();
refreshCurves();
