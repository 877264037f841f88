// Live parse feedback for predicate text fields. This mirrors the server's
// canonical grammar `name(var:type,...)` closely enough to point at the
// offending character while typing; the server stays authoritative on save.

export interface ParseFeedback {
  ok: boolean;
  message: string;
  offset: number;
}

const NAME_RE = /^[A-Za-z_][A-Za-z0-9_-]*/;
const VAR_RE = /^[A-Za-z][A-Za-z0-9]*/;
const TYPE_RE = /^[a-z][a-z0-9-]*/;

export function checkPredicate(text: string): ParseFeedback {
  let pos = 0;

  const skipWs = () => {
    while (pos < text.length && /\s/.test(text[pos]!)) pos++;
  };
  const fail = (message: string): ParseFeedback => ({ ok: false, message, offset: pos });
  const take = (re: RegExp, what: string): string | ParseFeedback => {
    skipWs();
    const m = re.exec(text.slice(pos));
    if (!m) return fail(`expected ${what}`);
    pos += m[0].length;
    return m[0];
  };

  const name = take(NAME_RE, "predicate name");
  if (typeof name !== "string") return name;
  skipWs();
  if (text[pos] !== "(") return fail("expected '('");
  pos++;

  const seen = new Set<string>();
  for (;;) {
    const variable = take(VAR_RE, "variable");
    if (typeof variable !== "string") return variable;
    if (seen.has(variable)) {
      pos -= variable.length;
      return fail(`variable '${variable}' repeats`);
    }
    seen.add(variable);
    skipWs();
    if (text[pos] === ":") {
      pos++;
      const type = take(TYPE_RE, "type name");
      if (typeof type !== "string") return type;
      skipWs();
    }
    if (text[pos] === ",") {
      pos++;
      continue;
    }
    if (text[pos] === ")") {
      pos++;
      break;
    }
    return fail("expected ',' or ')'");
  }
  skipWs();
  if (pos !== text.length) return fail("trailing input");
  return { ok: true, message: "", offset: -1 };
}
