// Integration tests against a live lexicon server (started by globalSetup).
// These cover the editor's three end-to-end behaviors: create/save/reload
// round trip, the anaphora playground, and stale-write conflict surfacing.

import { beforeAll, describe, expect, inject, it } from "vitest";
import { Api, ApiError, type EntryDoc } from "../src/api.js";
import { editDraft, newDraft, openDraft, validateDraft } from "../src/draft.js";

const baseUrl = inject("baseUrl");

function editorApi(): Promise<Api> {
  const api = new Api(baseUrl);
  return api.bind("alice", "edit-pass").then(() => api);
}

describe("create, save, reload", () => {
  it("a saved draft reloads byte-identical from the server", async () => {
    const api = await editorApi();
    const types = await api.types();

    let draft = newDraft();
    draft = editDraft(draft, (entry) => {
      entry.lemma = "tonneau";
      entry.cat = "N";
      entry.gender = "m";
      entry.lexicalType = "artifact";
      entry.args = ["x:artifact"];
      entry.qualia.telicState = "contain(s1:state,x:artifact,y:liquid)";
    });
    expect(validateDraft(draft.entry, types)).toEqual([]);

    await api.putEntry(draft.entry);
    const fetched = await api.fetchEntry({ lemma: "tonneau", sense: 1 });
    expect(fetched.entry).toEqual(draft.entry);
    expect(fetched.etag).toMatch(/^[0-9a-f]{64}$/);

    const reopened = openDraft(fetched.entry, fetched.etag);
    expect(reopened.dirty).toBe(false);
    expect(reopened.entry).toEqual(draft.entry);

    const keys = await api.search("tonneau");
    expect(keys).toEqual([{ lemma: "tonneau", sense: 1 }]);

    await api.deleteEntry({ lemma: "tonneau", sense: 1 });
    await expect(api.fetchEntry({ lemma: "tonneau", sense: 1 })).rejects.toMatchObject({
      status: 404,
    });
  });

  it("anonymous users cannot save", async () => {
    const api = new Api(baseUrl);
    const { entry } = await api.fetchEntry({ lemma: "vin", sense: 1 });
    await expect(api.putEntry(entry)).rejects.toMatchObject({ status: 403 });
  });
});

describe("anaphora playground", () => {
  // Three slots: head surface form, determiner, modifier surface form.
  const TEMPLATE = "Ce %s est défectueux; %s %s restent entières.";

  it("renders the pressoir/olives verdict exactly as the API returns it", async () => {
    const api = new Api(baseUrl);
    const verdict = await api.validateAnaphora("pressoir", "olives", TEMPLATE);

    expect(verdict.category).toBe("TelicTrigger");
    expect(verdict.variants.map((v) => v.sentence)).toEqual([
      "Ce pressoir est défectueux; les olives restent entières.",
      "* Ce pressoir est défectueux; ses olives restent entières.",
      "* Ce pressoir est défectueux; ces olives restent entières.",
    ]);
    expect(verdict.variants.map((v) => v.valid)).toEqual([true, false, false]);

    // The playground shows the sentences verbatim, so byte-compare the
    // typed-client view with the raw HTTP body.
    const raw = await fetch(`${baseUrl}/anaphora/validate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ head: "pressoir", modifier: "olives", template: TEMPLATE }),
    });
    expect(raw.status).toBe(200);
    expect(await raw.json()).toEqual(verdict);
  });

  it("surfaces unknown words as a typed error", async () => {
    const api = new Api(baseUrl);
    await expect(api.validateAnaphora("pressoir", "zzz", TEMPLATE)).rejects.toMatchObject({
      status: 422,
      error: "UnknownWord",
    });
  });
});

describe("stale writes", () => {
  it("saving over a concurrent change reports a 409 conflict", async () => {
    const first = await editorApi();
    const second = await editorApi();

    const mine = await first.fetchEntry({ lemma: "citron", sense: 1 });
    const theirs = await second.fetchEntry({ lemma: "citron", sense: 1 });

    const theirEdit = structuredClone(theirs.entry) as EntryDoc;
    theirEdit.qualia.agentive = "grow(e1:process,y:human,z:fruit)";
    await second.putEntry(theirEdit, theirs.etag);

    const myEdit = structuredClone(mine.entry) as EntryDoc;
    myEdit.qualia.telicResult = "produce(e2:process,v:liquid)";
    let conflict: ApiError | null = null;
    try {
      await first.putEntry(myEdit, mine.etag);
    } catch (err) {
      conflict = err as ApiError;
    }
    expect(conflict).not.toBeNull();
    expect(conflict!.status).toBe(409);
    expect(conflict!.error).toBe("Conflict");

    // Reload picks up the winning write; saving with the fresh hash works.
    const refreshed = await first.fetchEntry({ lemma: "citron", sense: 1 });
    expect(refreshed.entry.qualia.agentive).toBe("grow(e1:process,y:human,z:fruit)");
    const retry = structuredClone(refreshed.entry) as EntryDoc;
    retry.qualia.telicResult = "produce(e2:process,v:liquid)";
    await first.putEntry(retry, refreshed.etag);

    // Restore the seed state for other tests.
    const final = await first.fetchEntry({ lemma: "citron", sense: 1 });
    expect(final.entry.qualia.telicResult).toBe("produce(e2:process,v:liquid)");
    const clean = structuredClone(final.entry) as EntryDoc;
    clean.qualia.agentive = null;
    clean.qualia.telicResult = null;
    await first.putEntry(clean, final.etag);
  });
});
