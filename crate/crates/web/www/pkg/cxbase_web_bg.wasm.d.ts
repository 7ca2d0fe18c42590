/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_boundary_free: (a: number, b: number) => void;
export const __wbg_image_free: (a: number, b: number) => void;
export const attractorCount: (a: bigint, b: bigint) => [number, number, number];
export const boundary_dimension: (a: number) => number;
export const boundary_xy: (a: number) => [number, number];
export const image_height: (a: number) => number;
export const image_rgba: (a: number) => [number, number];
export const image_width: (a: number) => number;
export const renderAttractors: (a: bigint, b: bigint, c: number, d: number) => [number, number, number];
export const renderTile: (a: bigint, b: bigint, c: number, d: number) => [number, number, number];
export const traceBoundary: (a: bigint, b: bigint, c: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
