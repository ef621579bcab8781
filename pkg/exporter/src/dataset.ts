/**
 * Dataset resolution.
 *
 * `folder:<path>` points at a directory of PNG images plus a labels.csv
 * (`sample_id,label`, sample_id = image file stem) and an optional
 * classes.txt (one class name per line, order defines the index). Named
 * datasets (cifar10, ...) would need a download, which this environment
 * does not have; they raise DatasetUnavailable with that explanation.
 */

import * as fs from 'fs';
import * as path from 'path';
import { PNG } from 'pngjs';

import { DatasetUnavailable } from './errors';

export interface DecodedImage {
  width: number;
  height: number;
  /** RGB in [0, 1], row-major, 3 channels. */
  pixels: Float32Array;
}

export interface FolderDataset {
  name: string;
  split: string;
  sampleIds: string[];
  images: DecodedImage[];
  labels: Map<string, number>;
  classNames: string[] | null;
}

export function decodePng(filePath: string): DecodedImage {
  const png = PNG.sync.read(fs.readFileSync(filePath));
  const pixels = new Float32Array(png.width * png.height * 3);
  for (let i = 0; i < png.width * png.height; i++) {
    pixels[i * 3] = png.data[i * 4] / 255;
    pixels[i * 3 + 1] = png.data[i * 4 + 1] / 255;
    pixels[i * 3 + 2] = png.data[i * 4 + 2] / 255;
  }
  return { width: png.width, height: png.height, pixels };
}

function readLabels(csvPath: string): Map<string, number> {
  const lines = fs.readFileSync(csvPath, 'utf8').split('\n').filter((l) => l.length > 0);
  if (lines[0] !== 'sample_id,label') {
    throw new DatasetUnavailable(`${csvPath}: expected header 'sample_id,label'`);
  }
  const labels = new Map<string, number>();
  for (const line of lines.slice(1)) {
    const [sampleId, field] = line.split(',');
    const label = Number(field);
    if (!Number.isInteger(label) || label < 0) {
      throw new DatasetUnavailable(`${csvPath}: bad label ${field} for ${sampleId}`);
    }
    labels.set(sampleId, label);
  }
  return labels;
}

export function loadDataset(name: string, split: string): FolderDataset {
  if (!name.startsWith('folder:')) {
    throw new DatasetUnavailable(
      `dataset ${name} would need a download and this environment has none; ` +
        'use folder:<path> with PNG images and a labels.csv',
    );
  }
  const dir = name.slice('folder:'.length);
  if (!fs.existsSync(dir) || !fs.statSync(dir).isDirectory()) {
    throw new DatasetUnavailable(`dataset folder ${dir} does not exist`);
  }
  const labelsPath = path.join(dir, 'labels.csv');
  if (!fs.existsSync(labelsPath)) {
    throw new DatasetUnavailable(`dataset folder ${dir} has no labels.csv`);
  }
  const labels = readLabels(labelsPath);

  const files = fs.readdirSync(dir).filter((f) => f.toLowerCase().endsWith('.png')).sort();
  if (files.length === 0) {
    throw new DatasetUnavailable(`dataset folder ${dir} has no .png images`);
  }
  const sampleIds: string[] = [];
  const images: DecodedImage[] = [];
  for (const file of files) {
    const sampleId = path.basename(file, path.extname(file));
    if (!labels.has(sampleId)) {
      throw new DatasetUnavailable(`image ${file} has no label in labels.csv`);
    }
    sampleIds.push(sampleId);
    images.push(decodePng(path.join(dir, file)));
  }

  let classNames: string[] | null = null;
  const classesPath = path.join(dir, 'classes.txt');
  if (fs.existsSync(classesPath)) {
    classNames = fs.readFileSync(classesPath, 'utf8').split('\n').filter((l) => l.length > 0);
  }
  return { name, split, sampleIds, images, labels, classNames };
}
