import { z } from "zod";

export const PROTOCOL_NAME = "poemotion-scorer";
export const PROTOCOL_VERSION = 1;

export function handshake() {
  return { protocol: PROTOCOL_NAME, version: PROTOCOL_VERSION };
}

export const requestSchema = z.object({
  id: z.number().int(),
  text: z.string(),
});

export type ScoreRequest = z.infer<typeof requestSchema>;

export type ScoreResponse =
  | { id: number; valence: number; arousal: number }
  | { id: number; error: string };
