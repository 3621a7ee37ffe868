/* tslint:disable */
/* eslint-disable */

/**
 * Depth of `pi:S`, `iota:S`, `theta:S`, `beta:i` or `pi_delta:i`.
 */
export function depth(algebra: string, morphism: string, max_dim: number): string;

/**
 * Postprojective (`post`) or preinjective (`pre`) partition.
 */
export function partitions(algebra: string, kind: string, max_dim: number): string;

/**
 * JSON text of a built-in algebra, or an empty string.
 */
export function preset_json(name: string): string;

/**
 * Names of the built-in algebras, comma separated.
 */
export function preset_names(): string;

/**
 * Table of `dim rad^n(M, N)`; empty `m`/`n` means all pairs.
 */
export function radical(algebra: string, m: string, n: string, power: number, max_dim: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly depth: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly partitions: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly preset_json: (a: number, b: number) => [number, number];
    readonly preset_names: () => [number, number];
    readonly radical: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
