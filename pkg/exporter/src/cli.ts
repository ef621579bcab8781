#!/usr/bin/env node
/**
 * `dst-export export --dataset folder:DIR --split test --models tiny-cnn ...
 *  [--checkpoint DIR ...] --out DIR [--batch 128] [--softmax]`
 */

import { parseArgs } from 'util';

import { ExportError } from './errors';
import { exportLogits } from './exporter';

export async function main(argv: string[]): Promise<number> {
  const [command, ...rest] = argv;
  if (command !== 'export') {
    console.error('usage: dst-export export --dataset <name> --split <split> ' +
      '--models <name>... [--checkpoint <dir>...] --out <dir> [--batch N] [--softmax]');
    return command === '--help' || command === undefined ? (command ? 0 : 1) : 1;
  }
  let parsed;
  try {
    parsed = parseArgs({
      args: rest,
      options: {
        dataset: { type: 'string' },
        split: { type: 'string', default: 'test' },
        models: { type: 'string', multiple: true },
        checkpoint: { type: 'string', multiple: true },
        out: { type: 'string' },
        batch: { type: 'string', default: '128' },
        softmax: { type: 'boolean', default: false },
      },
    });
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  const { values } = parsed;
  if (!values.dataset || !values.models?.length || !values.out) {
    console.error('error: --dataset, --models and --out are required');
    return 1;
  }
  const checkpoints = values.checkpoint ?? [];
  if (checkpoints.length > 0 && checkpoints.length !== values.models.length) {
    console.error('error: --checkpoint count must match --models count');
    return 1;
  }
  const batchSize = Number(values.batch);
  if (!Number.isInteger(batchSize) || batchSize < 1) {
    console.error(`error: bad --batch ${values.batch}`);
    return 1;
  }
  try {
    const manifest = await exportLogits(
      values.dataset,
      values.split ?? 'test',
      values.models,
      values.models.map((_, i) => checkpoints[i]),
      values.out,
      { batchSize, softmax: values.softmax },
    );
    for (const file of Object.keys(manifest.files)) {
      console.log(`wrote ${file}`);
    }
    console.log('wrote manifest.json');
    return 0;
  } catch (err) {
    if (err instanceof ExportError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
}

if (require.main === module) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
