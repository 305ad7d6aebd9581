/**
 * Wire types for the session-service HTTP API.
 *
 * Everything the console displays is one of these payloads; the client does
 * no inference of its own.  Field names mirror the JSON exactly.
 */

export type Mode = "DMA" | "MIS";

export interface SessionInfo {
  id: string;
  mode: Mode;
  auto: boolean;
  pending: PendingChoice | null;
}

export interface Culprit {
  index: number;
  formula: string;
  entrenchment: number;
}

/** A suspended revision waiting on a human choice. */
export interface PendingChoice {
  contradiction: number;
  culprits: Culprit[];
}

export interface BeliefFrom {
  kind: string; // "hu" for entered axioms, "derived" otherwise
  rule?: string;
  premises?: number[];
}

export interface BeliefEntry {
  index: number;
  formula: string;
  status: "bel" | "disbel";
  from: BeliefFrom;
  to: number[];
  entrenchment: number;
  category: string;
}

export type NodeKind = "category" | "document" | "kind" | "object" | "property";

export interface GraphNode {
  id: string;
  kind: NodeKind;
  // kind/object nodes carry hierarchy addresses; property nodes carry
  // their literal parts instead
  addresses?: number[][];
  property?: string;
  negated?: boolean;
  occurrence?: number;
}

export type LinkKind =
  | "element"
  | "subclass"
  | "disjoint"
  | "objectKind"
  | "subkind"
  | "hasProperty";

export interface GraphLink {
  source: string;
  target: string;
  kind: LinkKind;
}

export interface GraphSnapshot {
  mode: Mode;
  nodes: GraphNode[];
  links: GraphLink[];
}

/**
 * One step of an event report.  The `kind` discriminator is one of:
 * entered, duplicate, step-consumed, link, node, revision, removed,
 * choice-required, choice.  Extra fields vary by kind and are rendered
 * generically in the timeline.
 */
export interface Step {
  kind: string;
  [field: string]: unknown;
}

export interface MutationResult {
  report: Step[];
  pending: PendingChoice | null;
}

/** Error body every refusal carries: a stable code plus a message. */
export interface ApiErrorBody {
  code: string;
  message: string;
  span?: [number, number];
  existingIndex?: number;
}
