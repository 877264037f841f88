// Editor draft state: dirty tracking, client-side pre-flight validation,
// and the compare-and-set hash carried from fetch to save.

import type { EntryDoc, TypesDoc } from "./api.js";
import { checkPredicate } from "./predicate.js";

export interface Draft {
  entry: EntryDoc;
  etag: string; // "" for a brand-new entry
  dirty: boolean;
  isNew: boolean;
}

export interface DraftProblem {
  field: string;
  message: string;
}

export function emptyEntry(): EntryDoc {
  return {
    lemma: "",
    sense: 1,
    cat: "N",
    gender: "m",
    elision: false,
    lexicalType: "",
    args: [],
    events: [],
    qualia: {
      formal: null,
      const: [],
      telicState: null,
      telicTrigger: null,
      telicResult: null,
      agentive: null,
    },
  };
}

export function newDraft(): Draft {
  return { entry: emptyEntry(), etag: "", dirty: false, isNew: true };
}

export function openDraft(entry: EntryDoc, etag: string): Draft {
  return { entry: structuredClone(entry), etag, dirty: false, isNew: false };
}

export function editDraft(draft: Draft, change: (entry: EntryDoc) => void): Draft {
  const entry = structuredClone(draft.entry);
  change(entry);
  return { ...draft, entry, dirty: true };
}

const TYPED_ARG_RE = /^[A-Za-z][A-Za-z0-9]*:[a-z][a-z0-9-]*$/;
const PREDICATE_FIELDS: Array<[string, (e: EntryDoc) => string | null]> = [
  ["qualia.formal", (e) => e.qualia.formal],
  ["qualia.telicState", (e) => e.qualia.telicState],
  ["qualia.telicTrigger", (e) => e.qualia.telicTrigger],
  ["qualia.telicResult", (e) => e.qualia.telicResult],
  ["qualia.agentive", (e) => e.qualia.agentive],
];

// Pre-flight checks before PUT; the server's validator is authoritative
// and its report is surfaced verbatim when it still rejects the entry.
export function validateDraft(entry: EntryDoc, types?: TypesDoc): DraftProblem[] {
  const problems: DraftProblem[] = [];
  if (!entry.lemma) problems.push({ field: "lemma", message: "lemma is required" });
  if (entry.lemma.includes(",")) {
    problems.push({ field: "lemma", message: "lemma must not contain a comma" });
  }
  if (!Number.isInteger(entry.sense) || entry.sense < 1) {
    problems.push({ field: "sense", message: "sense must be a positive integer" });
  }
  if (!entry.cat) problems.push({ field: "cat", message: "category is required" });
  if (entry.gender !== "m" && entry.gender !== "f") {
    problems.push({ field: "gender", message: "gender must be m or f" });
  }
  if (!entry.lexicalType) {
    problems.push({ field: "lexicalType", message: "lexical type is required" });
  } else if (types && !(entry.lexicalType in types.nodes)) {
    problems.push({
      field: "lexicalType",
      message: `unknown type '${entry.lexicalType}'`,
    });
  }
  entry.args.forEach((a, i) => {
    if (!TYPED_ARG_RE.test(a)) {
      problems.push({ field: `args[${i}]`, message: `expected var:type, got '${a}'` });
    }
  });
  entry.events.forEach((a, i) => {
    if (!TYPED_ARG_RE.test(a)) {
      problems.push({ field: `events[${i}]`, message: `expected var:type, got '${a}'` });
    } else if (!/^[es][0-9]*:/.test(a)) {
      problems.push({ field: `events[${i}]`, message: "event variables are e.. or s.." });
    }
  });
  for (const [field, get] of PREDICATE_FIELDS) {
    const text = get(entry);
    if (text === null || text === "") continue;
    const feedback = checkPredicate(text);
    if (!feedback.ok) {
      problems.push({
        field,
        message: `${feedback.message} (at offset ${feedback.offset})`,
      });
    }
  }
  entry.qualia.const.forEach((text, i) => {
    const feedback = checkPredicate(text);
    if (!feedback.ok) {
      problems.push({
        field: `qualia.const[${i}]`,
        message: `${feedback.message} (at offset ${feedback.offset})`,
      });
    } else if (!text.trimStart().startsWith("part_of")) {
      problems.push({
        field: `qualia.const[${i}]`,
        message: "constitutive predicates must be named part_of",
      });
    }
  });
  return problems;
}

// A dirty draft is never silently discarded: callers must consult this
// before replacing the open draft.
export function canDiscard(draft: Draft | null, confirmed: boolean): boolean {
  if (draft === null || !draft.dirty) return true;
  return confirmed;
}
