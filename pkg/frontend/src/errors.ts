/** Turning the API's 400 payloads into input-level hints. */

export interface ParamError {
  /** Which query parameter the server blamed, when it said. */
  param: string | null;
  detail: string;
}

// Errors from expression parsing arrive as "classical: expected ... (at offset 2)".
export function splitParamError(message: string): ParamError {
  const match = /^([a-z_]+): (.*)$/i.exec(message);
  if (!match) return { param: null, detail: message };
  return { param: match[1]!.toLowerCase(), detail: match[2]! };
}

/**
 * A two-line monospace snippet pointing at the offending character:
 *
 *     log(n
 *          ^
 */
export function markOffset(text: string, offset: number): string {
  const clamped = Math.max(0, Math.min(offset, text.length));
  return `${text}\n${" ".repeat(clamped)}^`;
}
