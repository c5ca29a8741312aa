// Reconciliation invariant against the mock backend: a scripted session
// on each supported board, checking after every click that the rendered
// live-element set equals the server state and that illegal clicks
// change nothing.

import { describe, expect, it } from "vitest";

import { diffIsEmpty } from "../src/model.js";
import { playScripted } from "./driver.js";
import { setup } from "./helpers.js";

const BOARDS = ["kneser:5,2,0", "skeleton(s=3):complete:4"];

describe("scripted sessions stay reconciled", () => {
  for (const spec of BOARDS) {
    it(`${spec}, human first`, async () => {
      const { app, api } = setup();
      expect(await app.newGame(spec, true)).toBe(true);
      const report = await playScripted(app, api);

      expect(report.clicks).toBeGreaterThanOrEqual(3);
      expect(report.ghostClicks).toBeGreaterThanOrEqual(1);
      for (const diff of report.diffs) {
        expect(diffIsEmpty(diff)).toBe(true);
      }
      expect(report.ghostViolations).toEqual([]);
      expect(["human_lost", "engine_lost"]).toContain(report.finalStatus);
      expect(report.bannerTerminalMatches).toBe(true);
    });

    it(`${spec}, engine first`, async () => {
      const { app, api } = setup();
      expect(await app.newGame(spec, false)).toBe(true);
      expect(app.session()!.moves).toHaveLength(1);
      const report = await playScripted(app, api);

      for (const diff of report.diffs) {
        expect(diffIsEmpty(diff)).toBe(true);
      }
      expect(report.ghostViolations).toEqual([]);
      expect(report.bannerTerminalMatches).toBe(true);
    });
  }
});
