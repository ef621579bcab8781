/**
 * Batched inference over an image dataset, one score CSV per model in the
 * fusion tool's schema, plus the labels CSV and a manifest with checksums.
 * Raw pre-softmax scores are written unless softmax is requested.
 */

import * as fs from 'fs';
import * as path from 'path';
import * as tf from '@tensorflow/tfjs';

import { DecodedImage, FolderDataset, loadDataset } from './dataset';
import { ShapeMismatch } from './errors';
import { headSize, resolveModel } from './models';
import { sha256File, writeLabelsCsv, writeScoreCsv } from './schema';

export interface ExportOptions {
  batchSize?: number;
  softmax?: boolean;
}

export interface ExportManifest {
  dataset: string;
  split: string;
  models: string[];
  class_labels: string[];
  softmax: boolean;
  files: Record<string, string>; // relative path -> sha256
}

function toBatchTensor(images: DecodedImage[], inputSize: number): tf.Tensor4D {
  return tf.tidy(() => {
    const tensors = images.map((img) => {
      const t = tf.tensor3d(img.pixels, [img.height, img.width, 3]);
      if (img.height === inputSize && img.width === inputSize) return t;
      return tf.image.resizeBilinear(t, [inputSize, inputSize]);
    });
    return tf.stack(tensors) as tf.Tensor4D;
  });
}

function inputSizeOf(model: tf.LayersModel): number {
  const shape = model.inputs[0].shape; // [null, H, W, C]
  const size = shape[1];
  if (typeof size !== 'number') {
    throw new ShapeMismatch('model input height is not static');
  }
  return size;
}

async function scoreAll(
  model: tf.LayersModel,
  dataset: FolderDataset,
  batchSize: number,
  softmax: boolean,
): Promise<number[][]> {
  const inputSize = inputSizeOf(model);
  const rows: number[][] = [];
  for (let start = 0; start < dataset.images.length; start += batchSize) {
    const batch = dataset.images.slice(start, start + batchSize);
    const scores = tf.tidy(() => {
      const input = toBatchTensor(batch, inputSize);
      const out = model.predict(input) as tf.Tensor2D;
      return softmax ? tf.softmax(out) : out;
    });
    const data = await scores.data();
    const n = scores.shape[1];
    scores.dispose();
    for (let i = 0; i < batch.length; i++) {
      rows.push(Array.from(data.slice(i * n, (i + 1) * n)));
    }
  }
  return rows;
}

function sanitize(name: string): string {
  return name.replace(/[^A-Za-z0-9_.-]+/g, '_');
}

export async function exportLogits(
  datasetName: string,
  split: string,
  models: string[],
  checkpoints: (string | undefined)[],
  outDir: string,
  options: ExportOptions = {},
): Promise<ExportManifest> {
  const batchSize = options.batchSize ?? 128;
  const softmax = options.softmax ?? false;
  await tf.setBackend('cpu');
  await tf.ready();

  const dataset = loadDataset(datasetName, split);
  const declaredClasses = dataset.classNames?.length;

  fs.mkdirSync(outDir, { recursive: true });
  const files: Record<string, string> = {};
  let nClasses: number | undefined = declaredClasses;

  for (let i = 0; i < models.length; i++) {
    const model = await resolveModel(models[i], checkpoints[i], nClasses ?? 10);
    const units = headSize(model);
    if (nClasses === undefined) {
      nClasses = units;
    } else if (units !== nClasses) {
      throw new ShapeMismatch(
        `model ${models[i]} has a ${units}-way head, expected ${nClasses} classes` +
          (declaredClasses ? ' (from classes.txt)' : ' (from the other models)'),
      );
    }
    const rows = await scoreAll(model, dataset, batchSize, softmax);
    const fileName = `scores_${sanitize(models[i])}.csv`;
    writeScoreCsv(path.join(outDir, fileName), dataset.sampleIds, rows);
    files[fileName] = sha256File(path.join(outDir, fileName));
    model.dispose();
  }

  const maxLabel = Math.max(...dataset.labels.values());
  if (nClasses !== undefined && maxLabel >= nClasses) {
    throw new ShapeMismatch(
      `labels reach class ${maxLabel} but the models only score ${nClasses} classes`,
    );
  }
  writeLabelsCsv(path.join(outDir, 'labels.csv'), dataset.labels);
  files['labels.csv'] = sha256File(path.join(outDir, 'labels.csv'));

  const classLabels =
    dataset.classNames ?? Array.from({ length: nClasses ?? 0 }, (_, c) => `c${c}`);
  const manifest: ExportManifest = {
    dataset: datasetName,
    split,
    models,
    class_labels: classLabels,
    softmax,
    files,
  };
  fs.writeFileSync(
    path.join(outDir, 'manifest.json'),
    JSON.stringify(manifest, null, 2) + '\n',
    'utf8',
  );
  return manifest;
}
