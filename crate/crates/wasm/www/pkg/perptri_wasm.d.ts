/* tslint:disable */
/* eslint-disable */

export function construction_json(b_deg: number, g_deg: number, phi_deg: number): string;

/**
 * SVG figure for the triangle with angles B, Γ (degrees) and turning angle φ.
 */
export function construction_svg(b_deg: number, g_deg: number, phi_deg: number): string;

export function gk_curve(k: number, samples: number): Float64Array;

export function gk_minimum_json(k: number): string;

export function verify_json(b_deg: number, g_deg: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly construction_json: (a: number, b: number, c: number) => [number, number, number, number];
    readonly construction_svg: (a: number, b: number, c: number) => [number, number, number, number];
    readonly gk_curve: (a: number, b: number) => [number, number, number, number];
    readonly gk_minimum_json: (a: number) => [number, number, number, number];
    readonly verify_json: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
