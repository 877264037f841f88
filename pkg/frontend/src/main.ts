// DOM wiring for the lexicon editor: browse pane, entry form with live
// predicate feedback, anaphora playground, and type hierarchy outline.

import { Api, ApiError, type EntryDoc, type EntryKey, type TypesDoc } from "./api.js";
import {
  canDiscard,
  editDraft,
  newDraft,
  openDraft,
  validateDraft,
  type Draft,
} from "./draft.js";
import { outline } from "./hierarchy.js";
import { checkPredicate } from "./predicate.js";
import { groupByInitial, labelFor } from "./tree.js";

const api = new Api("");
let draft: Draft | null = null;
let types: TypesDoc | null = null;

const $ = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
};

function setStatus(message: string, kind: "info" | "error" | "ok" = "info"): void {
  const bar = $("status");
  bar.textContent = message;
  bar.className = `status ${kind}`;
}

function reportError(err: unknown): void {
  if (err instanceof ApiError) {
    if (err.status === 409) {
      setStatus(
        "Conflict (409): the entry changed on the server since you opened it. " +
          "Reload it to pick up the latest version before saving.",
        "error",
      );
      return;
    }
    const extra = err.problems.map((p) => `${p.path}: ${p.message}`).join("; ");
    setStatus(`${err.error} (${err.status}): ${err.detail}${extra ? ` — ${extra}` : ""}`, "error");
    return;
  }
  setStatus(String(err), "error");
}

// --- browse pane ---------------------------------------------------------

async function refreshTree(filter = "*"): Promise<void> {
  const keys = await api.search(filter);
  const tree = $("tree");
  tree.replaceChildren();
  for (const group of groupByInitial(keys)) {
    const heading = document.createElement("div");
    heading.className = "tree-letter";
    heading.textContent = group.letter;
    tree.appendChild(heading);
    for (const key of group.keys) {
      const item = document.createElement("button");
      item.type = "button";
      item.className = "tree-entry";
      item.textContent = labelFor(key);
      item.addEventListener("click", () => void openEntry(key));
      tree.appendChild(item);
    }
  }
}

async function openEntry(key: EntryKey): Promise<void> {
  if (!canDiscard(draft, confirmDiscard())) return;
  try {
    const fetched = await api.fetchEntry(key);
    draft = openDraft(fetched.entry, fetched.etag);
    renderForm();
    setStatus(`Opened ${labelFor(key)}.`, "ok");
  } catch (err) {
    reportError(err);
  }
}

function confirmDiscard(): boolean {
  return window.confirm("Discard unsaved changes?");
}

// --- entry form ----------------------------------------------------------

const SCALAR_FIELDS: Array<[string, (e: EntryDoc) => string, (e: EntryDoc, v: string) => void]> = [
  ["lemma", (e) => e.lemma, (e, v) => (e.lemma = v)],
  ["sense", (e) => String(e.sense), (e, v) => (e.sense = Number(v))],
  ["cat", (e) => e.cat, (e, v) => (e.cat = v)],
  ["gender", (e) => e.gender, (e, v) => (e.gender = v)],
  ["lexicalType", (e) => e.lexicalType, (e, v) => (e.lexicalType = v)],
  ["args", (e) => e.args.join(", "), (e, v) => (e.args = splitList(v))],
  ["events", (e) => e.events.join(", "), (e, v) => (e.events = splitList(v))],
  ["formal", (e) => e.qualia.formal ?? "", (e, v) => (e.qualia.formal = v || null)],
  ["const", (e) => e.qualia.const.join("\n"), (e, v) => (e.qualia.const = splitLines(v))],
  ["telicState", (e) => e.qualia.telicState ?? "", (e, v) => (e.qualia.telicState = v || null)],
  [
    "telicTrigger",
    (e) => e.qualia.telicTrigger ?? "",
    (e, v) => (e.qualia.telicTrigger = v || null),
  ],
  ["telicResult", (e) => e.qualia.telicResult ?? "", (e, v) => (e.qualia.telicResult = v || null)],
  ["agentive", (e) => e.qualia.agentive ?? "", (e, v) => (e.qualia.agentive = v || null)],
];

const PREDICATE_INPUTS = new Set([
  "formal",
  "telicState",
  "telicTrigger",
  "telicResult",
  "agentive",
]);

function splitList(text: string): string[] {
  return text
    .split(",")
    .map((s) => s.trim())
    .filter(Boolean);
}

function splitLines(text: string): string[] {
  return text
    .split("\n")
    .map((s) => s.trim())
    .filter(Boolean);
}

function renderForm(): void {
  const form = $("entry-form");
  form.classList.toggle("hidden", draft === null);
  if (draft === null) return;
  for (const [field, get] of SCALAR_FIELDS) {
    const input = $(`field-${field}`) as HTMLInputElement | HTMLTextAreaElement;
    input.value = get(draft.entry);
  }
  ($("field-elision") as HTMLInputElement).checked = draft.entry.elision;
  ($("field-lemma") as HTMLInputElement).disabled = !draft.isNew;
  ($("field-sense") as HTMLInputElement).disabled = !draft.isNew;
  $("form-title").textContent = draft.isNew
    ? "New entry"
    : `${draft.entry.lemma} / sense ${draft.entry.sense}`;
  renderProblems();
}

function renderProblems(): void {
  const list = $("problems");
  list.replaceChildren();
  if (draft === null) return;
  for (const problem of validateDraft(draft.entry, types ?? undefined)) {
    const li = document.createElement("li");
    li.textContent = `${problem.field}: ${problem.message}`;
    list.appendChild(li);
  }
}

function wireForm(): void {
  for (const [field, , set] of SCALAR_FIELDS) {
    const input = $(`field-${field}`) as HTMLInputElement | HTMLTextAreaElement;
    input.addEventListener("input", () => {
      if (draft === null) return;
      draft = editDraft(draft, (entry) => set(entry, input.value));
      if (PREDICATE_INPUTS.has(field)) {
        const feedback = checkPredicate(input.value);
        input.classList.toggle("invalid", input.value !== "" && !feedback.ok);
        input.title = feedback.ok ? "" : `${feedback.message} (offset ${feedback.offset})`;
      }
      renderProblems();
    });
  }
  $("field-elision").addEventListener("change", () => {
    if (draft === null) return;
    const checked = ($("field-elision") as HTMLInputElement).checked;
    draft = editDraft(draft, (entry) => (entry.elision = checked));
  });

  $("btn-new").addEventListener("click", () => {
    if (!canDiscard(draft, confirmDiscard())) return;
    draft = newDraft();
    renderForm();
    setStatus("Editing a new entry.", "info");
  });

  $("btn-save").addEventListener("click", () => void saveDraft());
  $("btn-delete").addEventListener("click", () => void deleteCurrent());
  $("btn-reload").addEventListener("click", () => {
    if (draft !== null && !draft.isNew) {
      void openEntry({ lemma: draft.entry.lemma, sense: draft.entry.sense });
    }
  });
}

async function saveDraft(): Promise<void> {
  if (draft === null) return;
  const problems = validateDraft(draft.entry, types ?? undefined);
  if (problems.length > 0) {
    setStatus("Fix the listed problems before saving.", "error");
    return;
  }
  try {
    await api.putEntry(draft.entry, draft.isNew ? undefined : draft.etag);
    const key = { lemma: draft.entry.lemma, sense: draft.entry.sense };
    const fetched = await api.fetchEntry(key);
    draft = openDraft(fetched.entry, fetched.etag);
    renderForm();
    await refreshTree();
    setStatus(`Saved ${labelFor(key)}.`, "ok");
  } catch (err) {
    reportError(err);
  }
}

async function deleteCurrent(): Promise<void> {
  if (draft === null || draft.isNew) return;
  const key = { lemma: draft.entry.lemma, sense: draft.entry.sense };
  if (!window.confirm(`Delete ${labelFor(key)}?`)) return;
  try {
    await api.deleteEntry(key);
    draft = null;
    renderForm();
    await refreshTree();
    setStatus(`Deleted ${labelFor(key)}.`, "ok");
  } catch (err) {
    reportError(err);
  }
}

// --- anaphora playground -------------------------------------------------

async function runPlayground(): Promise<void> {
  const head = ($("ana-head") as HTMLInputElement).value.trim();
  const modifier = ($("ana-modifier") as HTMLInputElement).value.trim();
  const template = ($("ana-template") as HTMLInputElement).value;
  const possessor = ($("ana-possessor") as HTMLSelectElement).value as "sg" | "pl";
  const out = $("ana-output");
  out.replaceChildren();
  try {
    const verdict = await api.validateAnaphora(head, modifier, template, possessor);
    const category = document.createElement("div");
    category.className = "ana-category";
    category.textContent = `relation: ${verdict.category}`;
    out.appendChild(category);
    for (const variant of verdict.variants) {
      const line = document.createElement("div");
      line.className = variant.valid ? "ana-line valid" : "ana-line invalid";
      line.textContent = variant.sentence;
      out.appendChild(line);
    }
    for (const note of verdict.diagnostics) {
      const line = document.createElement("div");
      line.className = "ana-diag";
      line.textContent = note;
      out.appendChild(line);
    }
    setStatus("Anaphora check complete.", "ok");
  } catch (err) {
    reportError(err);
  }
}

// --- hierarchy outline ---------------------------------------------------

async function refreshHierarchy(): Promise<void> {
  types = await api.types();
  const pane = $("hierarchy");
  pane.replaceChildren();
  for (const row of outline(types)) {
    const line = document.createElement("div");
    line.className = "type-row";
    line.style.paddingLeft = `${row.depth * 1.25}rem`;
    line.textContent = row.name;
    pane.appendChild(line);
  }
}

// --- session -------------------------------------------------------------

async function signIn(): Promise<void> {
  const username = ($("auth-user") as HTMLInputElement).value;
  const password = ($("auth-pass") as HTMLInputElement).value;
  try {
    await api.bind(username, password);
    setStatus(`Signed in as ${username}.`, "ok");
  } catch (err) {
    reportError(err);
  }
}

// --- boot ----------------------------------------------------------------

async function boot(): Promise<void> {
  wireForm();
  $("btn-signin").addEventListener("click", () => void signIn());
  $("btn-run-anaphora").addEventListener("click", () => void runPlayground());
  $("search").addEventListener("change", () => {
    const value = ($("search") as HTMLInputElement).value.trim();
    void refreshTree(value || "*").catch(reportError);
  });
  try {
    await refreshHierarchy();
    await refreshTree();
    setStatus("Connected.", "ok");
  } catch (err) {
    reportError(err);
  }
}

document.addEventListener("DOMContentLoaded", () => void boot());
