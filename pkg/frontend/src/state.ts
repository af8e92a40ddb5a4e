/** Editor state and reducer. All gestures funnel through `reduce` so the
 * state transitions are pure and unit-testable. */

import type { CircleSpec, SkinRequestConfig } from "./types.js";

export const MIN_RADIUS = 0.05;
export const DEFAULT_RADIUS = 1.0;

export interface EditorState {
  circles: CircleSpec[];
  selected: number | null;
  config: Required<Pick<SkinRequestConfig, "mode" | "spine" | "samples">> & {
    offsets: number[];
  };
  /** monotonically increasing; bump on any change that needs a re-skin */
  revision: number;
}

export type Action =
  | { kind: "add-circle"; x: number; y: number; r?: number }
  | { kind: "select"; index: number | null }
  | { kind: "move-circle"; index: number; x: number; y: number }
  | { kind: "resize-circle"; index: number; r: number }
  | { kind: "delete-circle"; index: number }
  | { kind: "set-mode"; mode: "inverse" | "baseline" }
  | { kind: "set-spine"; spine: "cubic" | "ph" }
  | { kind: "set-offsets"; offsets: number[] }
  | { kind: "clear" };

export function initialState(): EditorState {
  return {
    circles: [],
    selected: null,
    config: { mode: "inverse", spine: "cubic", samples: 64, offsets: [] },
    revision: 0,
  };
}

function clampRadius(r: number): number {
  if (!Number.isFinite(r)) return MIN_RADIUS;
  return Math.max(MIN_RADIUS, r);
}

export function reduce(state: EditorState, action: Action): EditorState {
  switch (action.kind) {
    case "add-circle": {
      const circle: CircleSpec = {
        x: action.x,
        y: action.y,
        r: clampRadius(action.r ?? DEFAULT_RADIUS),
      };
      return {
        ...state,
        circles: [...state.circles, circle],
        selected: state.circles.length,
        revision: state.revision + 1,
      };
    }
    case "select": {
      if (action.index !== null && (action.index < 0 || action.index >= state.circles.length)) {
        return state;
      }
      if (action.index === state.selected) return state;
      return { ...state, selected: action.index };
    }
    case "move-circle": {
      const c = state.circles[action.index];
      if (!c) return state;
      if (!Number.isFinite(action.x) || !Number.isFinite(action.y)) return state;
      const circles = state.circles.slice();
      circles[action.index] = { ...c, x: action.x, y: action.y };
      return { ...state, circles, revision: state.revision + 1 };
    }
    case "resize-circle": {
      const c = state.circles[action.index];
      if (!c) return state;
      const r = clampRadius(action.r);
      if (r === c.r) return state;
      const circles = state.circles.slice();
      circles[action.index] = { ...c, r };
      return { ...state, circles, revision: state.revision + 1 };
    }
    case "delete-circle": {
      if (!state.circles[action.index]) return state;
      const circles = state.circles.filter((_, i) => i !== action.index);
      let selected = state.selected;
      if (selected !== null) {
        if (selected === action.index) selected = null;
        else if (selected > action.index) selected -= 1;
      }
      return { ...state, circles, selected, revision: state.revision + 1 };
    }
    case "set-mode":
      if (state.config.mode === action.mode) return state;
      return {
        ...state,
        config: { ...state.config, mode: action.mode },
        revision: state.revision + 1,
      };
    case "set-spine":
      if (state.config.spine === action.spine) return state;
      return {
        ...state,
        config: { ...state.config, spine: action.spine },
        revision: state.revision + 1,
      };
    case "set-offsets": {
      const offsets = action.offsets.filter((d) => Number.isFinite(d) && d >= 0);
      return {
        ...state,
        config: { ...state.config, offsets },
        revision: state.revision + 1,
      };
    }
    case "clear":
      if (state.circles.length === 0) return state;
      return { ...state, circles: [], selected: null, revision: state.revision + 1 };
  }
}

/** Hit test in world coordinates: nearest circle whose disk contains the
 * point, preferring the topmost (last drawn). */
export function hitTest(circles: CircleSpec[], x: number, y: number): number | null {
  for (let i = circles.length - 1; i >= 0; i--) {
    const c = circles[i];
    const dx = x - c.x;
    const dy = y - c.y;
    if (dx * dx + dy * dy <= c.r * c.r) return i;
  }
  return null;
}

/** Request body for the current state; null while fewer than two circles. */
export function toRequest(state: EditorState) {
  if (state.circles.length < 2) return null;
  return {
    circles: state.circles,
    config: {
      mode: state.config.mode,
      spine: state.config.spine,
      samples: state.config.samples,
      offsets: state.config.offsets,
      validate: false,
    },
  };
}
