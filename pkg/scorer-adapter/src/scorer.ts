import path from "node:path";
import { pathToFileURL } from "node:url";

export interface RawScore {
  valence: number;
  arousal: number;
}

/** Maps a text to raw (unbounded) valence/arousal scores. */
export type InferFn = (text: string) => RawScore | Promise<RawScore>;

/** Maps a text to protocol-ready scores, both guaranteed in [-1, 1]. */
export type Scorer = (text: string) => RawScore | Promise<RawScore>;

export const echoScorer: Scorer = () => ({ valence: 0, arousal: 0 });

export function squash(raw: RawScore): RawScore {
  return { valence: Math.tanh(raw.valence), arousal: Math.tanh(raw.arousal) };
}

function looksLikePath(name: string): boolean {
  return name.includes("/") || name.startsWith(".");
}

async function loadBackend(modelName: string): Promise<InferFn> {
  const specifier = looksLikePath(modelName)
    ? pathToFileURL(path.resolve(modelName)).href
    : modelName;
  let mod: Record<string, unknown>;
  try {
    mod = await import(specifier);
  } catch (error) {
    const reason = error instanceof Error ? error.message : String(error);
    throw new Error(`cannot load model backend "${modelName}": ${reason}`);
  }
  const infer = mod.infer ?? mod.default;
  if (typeof infer !== "function") {
    throw new Error(
      `model backend "${modelName}" does not export an infer(text) function`,
    );
  }
  return infer as InferFn;
}

/**
 * Model-backed scorer: resolves `modelName` to a backend exporting
 * `infer(text)` and squashes its raw outputs through tanh so every emitted
 * value lands in [-1, 1].  A backend may be injected directly for tests.
 */
export async function createModelScorer(
  modelName: string,
  infer?: InferFn,
): Promise<Scorer> {
  const backend = infer ?? (await loadBackend(modelName));
  return async (text: string) => {
    const raw = await backend(text);
    if (!Number.isFinite(raw?.valence) || !Number.isFinite(raw?.arousal)) {
      throw new Error("model backend returned non-numeric scores");
    }
    return squash(raw);
  };
}
