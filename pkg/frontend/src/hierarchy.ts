// Render the type hierarchy (a rooted DAG given as child -> parents) as an
// indented outline. A node with several parents appears once under each.

import type { TypesDoc } from "./api.js";

export interface OutlineRow {
  name: string;
  depth: number;
}

export function outline(doc: TypesDoc): OutlineRow[] {
  const children = new Map<string, string[]>();
  for (const name of Object.keys(doc.nodes)) children.set(name, []);
  for (const [name, parents] of Object.entries(doc.nodes)) {
    for (const parent of parents) children.get(parent)?.push(name);
  }
  for (const list of children.values()) list.sort();

  const rows: OutlineRow[] = [];
  const walk = (name: string, depth: number, trail: Set<string>) => {
    rows.push({ name, depth });
    if (trail.has(name)) return; // defensive: the server guarantees acyclicity
    const next = new Set(trail).add(name);
    for (const child of children.get(name) ?? []) walk(child, depth + 1, next);
  };
  walk(doc.root, 0, new Set());
  return rows;
}
