/** Editor entry point: wires canvas gestures, the request scheduler and the
 * renderer together. Everything stateful lives in the reducer. */

import { SkinClient, SkinServiceError } from "./client.js";
import { RequestScheduler } from "./debounce.js";
import { fitViewport, renderScene, screenToWorld } from "./render.js";
import {
  EditorState,
  hitTest,
  initialState,
  reduce,
  toRequest,
  type Action,
} from "./state.js";
import type { SkinResponse } from "./types.js";

function must<T extends Element>(sel: string): T {
  const el = document.querySelector<T>(sel);
  if (!el) throw new Error(`missing element: ${sel}`);
  return el;
}

export function startEditor(): void {
  const canvas = must<HTMLCanvasElement>("#editor");
  const status = must<HTMLElement>("#status");
  const modeSel = must<HTMLSelectElement>("#mode");
  const spineSel = must<HTMLSelectElement>("#spine");
  const offsetInput = must<HTMLInputElement>("#offsets");
  const clearBtn = must<HTMLButtonElement>("#clear");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("2d canvas context unavailable");

  let state: EditorState = initialState();
  let response: SkinResponse | null = null;
  let lastError: string | null = null;

  const client = new SkinClient("");
  const scheduler = new RequestScheduler<SkinResponse | null>({
    run: () => {
      const req = toRequest(state);
      return req ? client.skin(req) : Promise.resolve(null);
    },
    onResult: (r) => {
      response = r;
      lastError = null;
      draw();
    },
    onError: (err) => {
      response = null;
      lastError =
        err instanceof SkinServiceError ? err.message : "service unreachable";
      draw();
    },
  });

  function draw(): void {
    const vp = fitViewport(state.circles, canvas.width, canvas.height);
    renderScene(ctx!, vp, state.circles, state.selected, response);
    const diags = response?.diagnostics.length ?? 0;
    if (lastError) {
      status.textContent = `error: ${lastError}`;
    } else if (state.circles.length < 2) {
      status.textContent = "click to add circles (two or more to skin)";
    } else {
      status.textContent = diags
        ? `${diags} diagnostic(s); hover orange markers`
        : "ok";
    }
  }

  function dispatch(action: Action): void {
    const before = state;
    state = reduce(state, action);
    if (state.revision !== before.revision) scheduler.schedule();
    draw();
  }

  let dragging: number | null = null;
  canvas.addEventListener("pointerdown", (ev) => {
    const vp = fitViewport(state.circles, canvas.width, canvas.height);
    const [wx, wy] = screenToWorld(vp, ev.offsetX, ev.offsetY);
    const hit = hitTest(state.circles, wx, wy);
    if (hit === null) {
      dispatch({ kind: "add-circle", x: wx, y: wy });
    } else {
      dispatch({ kind: "select", index: hit });
      dragging = hit;
    }
  });
  canvas.addEventListener("pointermove", (ev) => {
    if (dragging === null) return;
    const vp = fitViewport(state.circles, canvas.width, canvas.height);
    const [wx, wy] = screenToWorld(vp, ev.offsetX, ev.offsetY);
    dispatch({ kind: "move-circle", index: dragging, x: wx, y: wy });
  });
  canvas.addEventListener("pointerup", () => {
    dragging = null;
  });
  canvas.addEventListener("wheel", (ev) => {
    if (state.selected === null) return;
    ev.preventDefault();
    const c = state.circles[state.selected];
    const factor = ev.deltaY < 0 ? 1.08 : 1 / 1.08;
    dispatch({ kind: "resize-circle", index: state.selected, r: c.r * factor });
  });
  window.addEventListener("keydown", (ev) => {
    if ((ev.key === "Delete" || ev.key === "Backspace") && state.selected !== null) {
      dispatch({ kind: "delete-circle", index: state.selected });
    }
  });

  modeSel.addEventListener("change", () => {
    dispatch({ kind: "set-mode", mode: modeSel.value as "inverse" | "baseline" });
  });
  spineSel.addEventListener("change", () => {
    dispatch({ kind: "set-spine", spine: spineSel.value as "cubic" | "ph" });
  });
  offsetInput.addEventListener("change", () => {
    const offsets = offsetInput.value
      .split(",")
      .map((s) => parseFloat(s.trim()))
      .filter((d) => Number.isFinite(d));
    dispatch({ kind: "set-offsets", offsets });
  });
  clearBtn.addEventListener("click", () => dispatch({ kind: "clear" }));

  draw();
}

if (typeof document !== "undefined" && document.querySelector("#editor")) {
  startEditor();
}
