export class ExportError extends Error {}

export class ModelUnavailable extends ExportError {}

export class DatasetUnavailable extends ExportError {}

/** Model head size does not match the dataset's class count. */
export class ShapeMismatch extends ExportError {}
