import * as fs from 'fs';
import * as path from 'path';
import { PNG } from 'pngjs';

function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export interface SmokeFolderOptions {
  count?: number;
  size?: number;
  classes?: number;
  withClassesFile?: boolean;
  seed?: number;
}

/** Seeded folder of PNGs + labels.csv (+ classes.txt) for offline smoke runs. */
export function makeSmokeFolder(dir: string, options: SmokeFolderOptions = {}): string {
  const { count = 10, size = 32, classes = 4, withClassesFile = true, seed = 1 } = options;
  fs.mkdirSync(dir, { recursive: true });
  const rand = mulberry32(seed);
  const labelLines = ['sample_id,label'];
  for (let i = 0; i < count; i++) {
    const png = new PNG({ width: size, height: size });
    for (let p = 0; p < size * size; p++) {
      png.data[p * 4] = Math.floor(rand() * 256);
      png.data[p * 4 + 1] = Math.floor(rand() * 256);
      png.data[p * 4 + 2] = Math.floor(rand() * 256);
      png.data[p * 4 + 3] = 255;
    }
    const sampleId = `img${String(i).padStart(2, '0')}`;
    fs.writeFileSync(path.join(dir, `${sampleId}.png`), PNG.sync.write(png));
    labelLines.push(`${sampleId},${i % classes}`);
  }
  fs.writeFileSync(path.join(dir, 'labels.csv'), labelLines.join('\n') + '\n');
  if (withClassesFile) {
    const names = Array.from({ length: classes }, (_, c) => `class_${c}`);
    fs.writeFileSync(path.join(dir, 'classes.txt'), names.join('\n') + '\n');
  }
  return dir;
}
