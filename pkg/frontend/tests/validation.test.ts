/** 422 parity: the client-side validator must reject exactly the request
 * bodies the server rejects. The fixture carries recorded server verdicts
 * for every case. */

import { describe, expect, it } from "vitest";

import type { SweepRequestBody } from "../src/types.js";
import { catalogFromPresets, validateRequest } from "../src/validation.js";
import { presetsFixture, validationCases } from "./helpers.js";

const catalog = catalogFromPresets(presetsFixture());
const cases = validationCases();

describe("validator verdicts match the server", () => {
  it("fixture covers at least 20 cases with both outcomes", () => {
    expect(cases.length).toBeGreaterThanOrEqual(20);
    expect(cases.some((c) => c.status === 200)).toBe(true);
    expect(cases.some((c) => c.status === 422)).toBe(true);
  });

  for (const testCase of cases) {
    it(testCase.name, () => {
      const errors = validateRequest(testCase.body as unknown as SweepRequestBody, catalog);
      if (testCase.status === 200) {
        expect(errors).toEqual([]);
      } else {
        expect(errors.length).toBeGreaterThan(0);
        // when the server names a concrete field, the client must flag a
        // matching one (the server's loc may carry list indices or stop at
        // the section when the check is cross-field)
        const serverField = testCase.error!.field;
        if (serverField && serverField !== "body") {
          const root = serverField.split(".").slice(0, 2).join(".");
          const hit = errors.some((e) =>
            e.field === serverField || e.field.startsWith(root) || root.startsWith(e.field));
          expect(hit, `client fields ${JSON.stringify(errors)} vs server ${serverField}`)
            .toBe(true);
        }
      }
    });
  }
});
