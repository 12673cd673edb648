/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const construction_json: (a: number, b: number, c: number) => [number, number, number, number];
export const construction_svg: (a: number, b: number, c: number) => [number, number, number, number];
export const gk_curve: (a: number, b: number) => [number, number, number, number];
export const gk_minimum_json: (a: number) => [number, number, number, number];
export const verify_json: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
