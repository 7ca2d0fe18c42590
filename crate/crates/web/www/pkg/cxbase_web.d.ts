/* tslint:disable */
/* eslint-disable */

/**
 * Boundary polyline as interleaved `x, y` plus the boundary dimension.
 */
export class Boundary {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    xy(): Float64Array;
    readonly dimension: number;
}

/**
 * RGBA image ready for `ImageData`.
 */
export class Image {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    rgba(): Uint8Array;
    readonly height: number;
    readonly width: number;
}

export function attractorCount(n: bigint, d: bigint): number;

export function renderAttractors(n: bigint, d: bigint, radius: number, res: number): Image;

export function renderTile(n: bigint, d: bigint, k: number, res: number): Image;

export function traceBoundary(n: bigint, d: bigint, k: number): Boundary;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_boundary_free: (a: number, b: number) => void;
    readonly __wbg_image_free: (a: number, b: number) => void;
    readonly attractorCount: (a: bigint, b: bigint) => [number, number, number];
    readonly boundary_dimension: (a: number) => number;
    readonly boundary_xy: (a: number) => [number, number];
    readonly image_height: (a: number) => number;
    readonly image_rgba: (a: number) => [number, number];
    readonly image_width: (a: number) => number;
    readonly renderAttractors: (a: bigint, b: bigint, c: number, d: number) => [number, number, number];
    readonly renderTile: (a: bigint, b: bigint, c: number, d: number) => [number, number, number];
    readonly traceBoundary: (a: bigint, b: bigint, c: number) => [number, number, number];
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
