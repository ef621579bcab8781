/**
 * Checkpoint save/load for LayersModels without the native tfjs-node binding:
 * model.json (topology + weights manifest) plus weights.bin side by side.
 */

import * as fs from 'fs';
import * as path from 'path';
import * as tf from '@tensorflow/tfjs';

import { ModelUnavailable } from './errors';

export async function saveModelToDir(model: tf.LayersModel, dir: string): Promise<void> {
  fs.mkdirSync(dir, { recursive: true });
  await model.save(
    tf.io.withSaveHandler(async (artifacts) => {
      const weightData = tf.io.CompositeArrayBuffer.join(artifacts.weightData);
      fs.writeFileSync(path.join(dir, 'weights.bin'), Buffer.from(weightData));
      const manifest = {
        modelTopology: artifacts.modelTopology,
        format: artifacts.format,
        generatedBy: artifacts.generatedBy,
        convertedBy: null,
        weightsManifest: [{ paths: ['weights.bin'], weights: artifacts.weightSpecs }],
      };
      fs.writeFileSync(path.join(dir, 'model.json'), JSON.stringify(manifest), 'utf8');
      return {
        modelArtifactsInfo: {
          dateSaved: new Date(),
          modelTopologyType: 'JSON',
        },
      };
    }),
  );
}

export async function loadModelFromDir(dir: string): Promise<tf.LayersModel> {
  const jsonPath = path.join(dir, 'model.json');
  if (!fs.existsSync(jsonPath)) {
    throw new ModelUnavailable(`checkpoint ${dir} has no model.json`);
  }
  const manifest = JSON.parse(fs.readFileSync(jsonPath, 'utf8'));
  const weightSpecs = manifest.weightsManifest.flatMap((group: any) => group.weights);
  const buffers: Buffer[] = manifest.weightsManifest.flatMap((group: any) =>
    group.paths.map((p: string) => fs.readFileSync(path.join(dir, p))),
  );
  const joined = Buffer.concat(buffers);
  const weightData = joined.buffer.slice(
    joined.byteOffset,
    joined.byteOffset + joined.byteLength,
  );
  return tf.loadLayersModel(
    tf.io.fromMemory({
      modelTopology: manifest.modelTopology,
      weightSpecs,
      weightData,
    }),
  );
}
