/**
 * Errors surfaced by a session.
 *
 * The engine subprocess reports failures as `{ok: false, kind, error}`
 * replies. `kind` is the engine-side exception name; it is preserved on
 * the thrown error so callers can branch on it without string-matching
 * the message.
 */

/** Base class for failures reported by the engine subprocess. */
export class EngineError extends Error {
  /** Engine-side exception name, e.g. "InvalidAction". */
  readonly kind: string;

  constructor(kind: string, message: string) {
    super(message);
    this.name = kind;
    this.kind = kind;
  }
}

/** The episode is over (or was never started); no further steps accepted. */
export class SessionClosed extends EngineError {
  constructor(message: string) {
    super("SessionClosed", message);
  }
}

/** The subprocess died, spoke garbage, or the pipe broke. */
export class ProtocolError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "ProtocolError";
  }
}

/** Turn a `{kind, error}` reply into the exception the caller should see. */
export function mapEngineError(kind: string, message: string): Error {
  if (kind === "SessionClosed") {
    return new SessionClosed(message);
  }
  // Bad arguments (unknown game id, index out of range, malformed index)
  // arrive as Python ValueErrors; surface them as the host range error.
  if (kind === "ValueError") {
    return new RangeError(message);
  }
  return new EngineError(kind, message);
}
