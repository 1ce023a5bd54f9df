import readline from "node:readline";

import { handshake, requestSchema, type ScoreResponse } from "./protocol.js";
import type { Scorer } from "./scorer.js";

export interface ServeStreams {
  input: NodeJS.ReadableStream;
  output: NodeJS.WritableStream;
}

function writeLine(output: NodeJS.WritableStream, payload: unknown): void {
  output.write(`${JSON.stringify(payload)}\n`);
}

/**
 * Run the request loop until the input stream closes.
 *
 * Emits the handshake first, then exactly one response per request, in
 * request order, with a single request in flight at a time.  A scorer
 * failure becomes a per-request error response; the loop keeps serving.
 */
export async function serve(scorer: Scorer, streams: ServeStreams): Promise<void> {
  writeLine(streams.output, handshake());
  const rl = readline.createInterface({
    input: streams.input,
    crlfDelay: Number.POSITIVE_INFINITY,
  });

  for await (const line of rl) {
    const trimmed = line.trim();
    if (!trimmed) {
      continue;
    }
    let parsed: unknown;
    try {
      parsed = JSON.parse(trimmed);
    } catch {
      writeLine(streams.output, { id: -1, error: "request is not valid JSON" });
      continue;
    }
    const request = requestSchema.safeParse(parsed);
    if (!request.success) {
      writeLine(streams.output, { id: -1, error: "malformed request object" });
      continue;
    }
    let response: ScoreResponse;
    try {
      const score = await scorer(request.data.text);
      response = {
        id: request.data.id,
        valence: score.valence,
        arousal: score.arousal,
      };
    } catch (error) {
      response = {
        id: request.data.id,
        error: error instanceof Error ? error.message : String(error),
      };
    }
    writeLine(streams.output, response);
  }
}
