/** Wire types for the skinning service (POST /skin). */

export interface CircleSpec {
  x: number;
  y: number;
  r: number;
}

export interface SkinRequestConfig {
  mode?: "inverse" | "baseline";
  lambda?: number;
  spine?: "cubic" | "ph";
  samples?: number;
  offsets?: number[];
  validate?: boolean;
}

export interface SkinRequest {
  circles: CircleSpec[];
  config?: SkinRequestConfig;
}

export type Polyline = [number, number][];

export interface TouchPointEntry {
  plus: [number, number];
  minus: [number, number];
  source_plus: string;
  source_minus: string;
}

export interface JointEntry {
  g1: boolean;
  angle: number;
}

export interface DiagnosticEntry {
  kind: string;
  detail: string;
  circle?: number;
  neighbor?: number;
  segment?: number;
  point?: [number, number];
}

export interface ViolationEntry {
  condition: number;
  circles: number[];
  description: string;
  interpreted: boolean;
}

export interface AdmissibilityReport {
  ok: boolean;
  violations: ViolationEntry[];
}

export interface SkinResponse {
  version: string;
  mode: string;
  circles: CircleSpec[];
  skins: { left: (Polyline | null)[]; right: (Polyline | null)[] };
  joints: { left: (JointEntry | null)[]; right: (JointEntry | null)[] };
  touch_points: (TouchPointEntry | null)[];
  mat: ([number, number, number][] | null)[];
  offsets: { d: number; left: (Polyline | null)[]; right: (Polyline | null)[] }[];
  diagnostics: DiagnosticEntry[];
  admissibility: AdmissibilityReport;
}

/** Error body returned with HTTP 400/422. */
export interface SkinErrorBody {
  error: string;
  admissibility?: AdmissibilityReport;
}
