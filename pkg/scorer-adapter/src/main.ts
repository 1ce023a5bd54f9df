#!/usr/bin/env node
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { createModelScorer, echoScorer, type Scorer } from "./scorer.js";
import { serve } from "./serve.js";

async function main(): Promise<void> {
  const argv = yargs(hideBin(process.argv))
    .option("mode", {
      choices: ["echo", "model"] as const,
      default: "echo" as const,
      describe: "echo answers (0, 0); model wraps an inference backend",
    })
    .option("model", {
      type: "string",
      describe: "backend module exporting infer(text), required in model mode",
    })
    .strict()
    .parseSync();

  let scorer: Scorer;
  if (argv.mode === "model") {
    if (!argv.model) {
      console.error("scorer-adapter: --mode model requires --model <name>");
      process.exit(1);
    }
    try {
      scorer = await createModelScorer(argv.model);
    } catch (error) {
      const reason = error instanceof Error ? error.message : String(error);
      console.error(`scorer-adapter: ${reason}`);
      process.exit(1);
    }
  } else {
    scorer = echoScorer;
  }

  await serve(scorer, { input: process.stdin, output: process.stdout });
}

main().catch((error) => {
  console.error(`scorer-adapter: ${error}`);
  process.exit(1);
});
