// Grouping of entry keys for the browse pane: one section per initial
// letter, entries in server order (the server already sorts by lemma bytes
// then sense).

import type { EntryKey } from "./api.js";

export interface LetterGroup {
  letter: string;
  keys: EntryKey[];
}

export function groupByInitial(keys: EntryKey[]): LetterGroup[] {
  const groups: LetterGroup[] = [];
  for (const key of keys) {
    const letter = (key.lemma[0] ?? "?").toLocaleUpperCase("fr");
    const last = groups[groups.length - 1];
    if (last && last.letter === letter) {
      last.keys.push(key);
    } else {
      groups.push({ letter, keys: [key] });
    }
  }
  return groups;
}

export function labelFor(key: EntryKey): string {
  return key.sense === 1 ? key.lemma : `${key.lemma} (${key.sense})`;
}
