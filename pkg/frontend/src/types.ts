/** Wire types for the gateway's /query and /comparison/filter endpoints. */

export interface ErrorEntry {
  source: string;
  key: string;
  kind: string;
  message: string;
}

export interface Envelope<T> {
  data: T | null;
  errors: ErrorEntry[];
  timing?: {
    total_ms: number;
    sources: Record<string, { ms: number; cached: boolean }>;
  };
}

export interface WorkRef {
  title: string;
  doi: string | null;
}

export interface PaperData {
  doi?: string;
  title?: string;
  abstract?: string | null;
  citations?: WorkRef[];
  references?: WorkRef[];
  project?: { funder: string | null; project: string | null }[] | null;
  topicDetails?: { topic: string }[] | null;
  metricsInformation?: {
    url: string;
    image: string;
    score?: number | null;
  } | null;
}

export interface EmploymentEntry {
  organizationName: string;
  organizationId: string | null;
  startDate: string | null;
  endDate: string | null;
}

export interface ArtifactNode {
  id: string;
  type: string;
  titles: { title: string }[];
  creators?: { givenName: string | null; familyName: string | null; id: string | null }[];
  fundingReferences?: { awardTitle: string | null; awardNumber: string | null }[];
}

export interface Connection {
  totalCount: number;
  nodes: ArtifactNode[];
}

export interface PersonData {
  id?: string;
  name?: string;
  employment?: EmploymentEntry[];
  publications?: Connection;
  datasets?: Connection;
  softwares?: Connection;
  topics?: string[] | null;
}

export interface ColumnSpec {
  name: string;
  kind: "text" | "numeric";
}

export interface TableRow {
  label: string;
  doi?: string;
  cells: Record<string, unknown>;
  citation_count?: number;
}

export interface ComparisonDocument {
  title: string;
  columns: ColumnSpec[];
  rows: TableRow[];
}

export interface FacetFilterSpec {
  target: string;
  op: "lt" | "le" | "gt" | "ge" | "eq";
  threshold: number;
}

export interface FilterResponse {
  table: ComparisonDocument;
  summary: { kept: number; dropped: number; unknown: number };
  bounds: Record<string, { min: number | null; max: number | null; present: number }>;
}

export interface HealthResponse {
  status: string;
  mode: string;
  upstreams: Record<string, { reachable: boolean }>;
}

export const CITATION_TARGET = "citation_count";
