/**
 * The downstream fusion tool's file schemas.
 *
 * Score CSV: header `sample_id,c0,...,c{n-1}`, one row per sample, decimal
 * floats. Labels CSV: header `sample_id,label` with integer class indices.
 * Emitted files must round-trip through the fusion CLI unchanged, so writing
 * and validation both live here.
 */

import { createHash } from 'crypto';
import * as fs from 'fs';

export function scoreHeader(nClasses: number): string {
  const cols = Array.from({ length: nClasses }, (_, c) => `c${c}`);
  return ['sample_id', ...cols].join(',');
}

export function writeScoreCsv(
  path: string,
  sampleIds: string[],
  rows: Float32Array[] | number[][],
): void {
  const lines = [scoreHeader(rowLength(rows))];
  for (let i = 0; i < sampleIds.length; i++) {
    const row = Array.from(rows[i], (v) => formatScore(v));
    lines.push([sampleIds[i], ...row].join(','));
  }
  fs.writeFileSync(path, lines.join('\n') + '\n', 'utf8');
}

export function writeLabelsCsv(path: string, labels: Map<string, number>): void {
  const lines = ['sample_id,label'];
  for (const [sampleId, label] of labels) {
    lines.push(`${sampleId},${label}`);
  }
  fs.writeFileSync(path, lines.join('\n') + '\n', 'utf8');
}

function rowLength(rows: Float32Array[] | number[][]): number {
  if (rows.length === 0) throw new Error('no rows to write');
  return rows[0].length;
}

function formatScore(value: number): string {
  if (!Number.isFinite(value)) throw new Error(`non-finite score ${value}`);
  // String(number) is the shortest round-trip form; Python's float() reads it back exactly
  return String(value);
}

export function sha256File(path: string): string {
  return createHash('sha256').update(fs.readFileSync(path)).digest('hex');
}

/** Re-read an emitted score CSV and check the schema the fusion tool enforces. */
export function validateScoreCsv(path: string): { sampleIds: string[]; nClasses: number } {
  const lines = fs.readFileSync(path, 'utf8').split('\n').filter((l) => l.length > 0);
  if (lines.length === 0) throw new Error(`${path}: empty file`);
  const header = lines[0].split(',');
  if (header[0] !== 'sample_id' || header.length < 2) {
    throw new Error(`${path}: bad header ${lines[0]}`);
  }
  header.slice(1).forEach((name, c) => {
    if (name !== `c${c}`) throw new Error(`${path}: column ${c + 1} named ${name}, expected c${c}`);
  });
  if (lines.length < 2) throw new Error(`${path}: no data rows`);
  const seen = new Set<string>();
  const sampleIds: string[] = [];
  for (const line of lines.slice(1)) {
    const fields = line.split(',');
    if (fields.length !== header.length) {
      throw new Error(`${path}: row has ${fields.length} fields, expected ${header.length}`);
    }
    if (seen.has(fields[0])) throw new Error(`${path}: duplicate sample id ${fields[0]}`);
    seen.add(fields[0]);
    sampleIds.push(fields[0]);
    for (const field of fields.slice(1)) {
      const value = Number(field);
      if (field === '' || !Number.isFinite(value)) {
        throw new Error(`${path}: bad score ${field}`);
      }
    }
  }
  return { sampleIds, nClasses: header.length - 1 };
}
