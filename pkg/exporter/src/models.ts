/**
 * Model resolution. A model is either a user-supplied checkpoint directory
 * (fine-tuned LayersModel) or a registry name. The only registry entry that
 * works offline is `tiny-cnn`, a small seeded-weight network for smoke runs;
 * the zoo backbones need weight downloads this environment cannot do.
 */

import * as tf from '@tensorflow/tfjs';

import { ModelUnavailable } from './errors';
import { loadModelFromDir } from './model-io';

export const TINY_CNN_INPUT = 32;

const ZOO_NAMES = new Set([
  'resnet50',
  'vgg19',
  'densenet121',
  'efficientnetv2-l',
  'swinv2-b',
  'mobilenet-v3',
]);

/** Deterministic PRNG so seeded weights reproduce bit-for-bit. */
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

export function buildTinyCnn(numClasses: number, seed = 7): tf.LayersModel {
  const model = tf.sequential({
    layers: [
      tf.layers.conv2d({
        inputShape: [TINY_CNN_INPUT, TINY_CNN_INPUT, 3],
        filters: 8,
        kernelSize: 3,
        activation: 'relu',
      }),
      tf.layers.maxPooling2d({ poolSize: 2 }),
      tf.layers.conv2d({ filters: 16, kernelSize: 3, activation: 'relu' }),
      tf.layers.globalAveragePooling2d({}),
      // linear head: raw logits out
      tf.layers.dense({ units: numClasses }),
    ],
  });
  const rand = mulberry32(seed);
  const seeded = model.getWeights().map((w) => {
    const values = new Float32Array(w.size);
    for (let i = 0; i < values.length; i++) values[i] = (rand() - 0.5) * 0.5;
    return tf.tensor(values, w.shape);
  });
  model.setWeights(seeded);
  seeded.forEach((t) => t.dispose());
  return model;
}

export async function resolveModel(
  name: string,
  checkpoint: string | undefined,
  numClasses: number,
): Promise<tf.LayersModel> {
  if (checkpoint !== undefined) {
    return loadModelFromDir(checkpoint);
  }
  if (name === 'tiny-cnn') {
    return buildTinyCnn(numClasses);
  }
  if (ZOO_NAMES.has(name.toLowerCase())) {
    throw new ModelUnavailable(
      `${name} needs a pretrained-weight download, which this environment cannot do; ` +
        'supply --checkpoint with a saved fine-tuned model instead',
    );
  }
  throw new ModelUnavailable(`unknown model ${name} and no --checkpoint given`);
}

export function headSize(model: tf.LayersModel): number {
  const shape = model.outputs[0].shape;
  const units = shape[shape.length - 1];
  if (typeof units !== 'number') {
    throw new ModelUnavailable('model output size is not static');
  }
  return units;
}
