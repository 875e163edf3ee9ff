/**
 * Typed client for the analytics service.
 *
 * The UI is a thin client: every number, label, and highlight it renders
 * comes verbatim from one of these responses. The fetch function is
 * injectable so tests can replay recorded sessions.
 */

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface MatrixCell {
  value: number | string;
  normalized: number | null;
  evidence: [number, number][];
}

export interface Matrix {
  kind: string;
  level: "chapter" | "sentence";
  focus_chapter: number | null;
  rows: string[];
  row_names: string[];
  columns: number[];
  cells: (MatrixCell | null)[][];
}

export interface ChapterInfo {
  index: number;
  title: string | null;
  span: [number, number];
}

export interface CharacterInfo {
  id: string;
  display_name: string;
  mentions: number;
  provisional: boolean;
}

export interface ProjectSummary {
  id: string;
  revision: number;
  status: { state: string; last_run: number | null };
  chapters: ChapterInfo[];
  characters: CharacterInfo[];
}

export interface ClusterRow {
  cluster_id: string;
  source_chapter: number | null;
  hint: string | null;
  assigned_name: string | null;
  label: string;
  merged_into: string | null;
  mention_count: number;
  samples: string[];
}

export interface WordZoneEntry {
  lemma: string;
  weight: number;
  tf: number;
  df: number;
  cluster: number;
  rank: number;
}

export interface WordZone {
  character: string;
  kind: string;
  entries: WordZoneEntry[];
}

export interface ContextPlacement {
  text: string;
  chapter: number;
  width: number;
  row: number | null;
}

export class ApiClient {
  constructor(
    private base: string,
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.base}${path}`, init);
    if (!response.ok) {
      const body = await response.json().catch(() => ({ message: response.statusText }));
      throw new Error(`${body.code ?? response.status}: ${body.message ?? "request failed"}`);
    }
    return (await response.json()) as T;
  }

  getProject(projectId: string): Promise<ProjectSummary> {
    return this.request(`/projects/${projectId}`);
  }

  getStatus(projectId: string): Promise<{ state: string; last_run: number | null }> {
    return this.request(`/projects/${projectId}/status`);
  }

  analyze(projectId: string): Promise<{ state: string; last_run: number | null }> {
    return this.request(`/projects/${projectId}/analyze`, { method: "POST" });
  }

  getText(projectId: string, start?: number, end?: number): Promise<{ start: number; end: number; text: string }> {
    const params = start !== undefined && end !== undefined ? `?start=${start}&end=${end}` : "";
    return this.request(`/projects/${projectId}/text${params}`);
  }

  getMatrix(
    projectId: string,
    kind: string,
    options: { level?: string; chapter?: number; characters?: string[] } = {},
  ): Promise<Matrix> {
    const params = new URLSearchParams({ kind });
    if (options.level) params.set("level", options.level);
    if (options.chapter !== undefined) params.set("chapter", String(options.chapter));
    if (options.characters?.length) params.set("characters", options.characters.join(","));
    return this.request(`/projects/${projectId}/matrix?${params.toString()}`);
  }

  getCooccurrence(
    projectId: string,
    character: string,
    chapter: number,
  ): Promise<{ character: string; chapter: number; cooccurring: string[] }> {
    const params = new URLSearchParams({ character, chapter: String(chapter) });
    return this.request(`/projects/${projectId}/cooccurrence?${params.toString()}`);
  }

  getWordZone(projectId: string, character: string, kind: string): Promise<WordZone> {
    const params = new URLSearchParams({ character, kind });
    return this.request(`/projects/${projectId}/wordzone?${params.toString()}`);
  }

  getContexts(projectId: string, maxRows: number): Promise<{ placements: ContextPlacement[]; max_rows: number }> {
    return this.request(`/projects/${projectId}/contexts?max_rows=${maxRows}`);
  }

  listClusters(projectId: string): Promise<{ clusters: ClusterRow[]; revision: number }> {
    return this.request(`/projects/${projectId}/clusters`);
  }

  patchCluster(
    projectId: string,
    clusterId: string,
    changes: { name?: string; label?: string },
  ): Promise<{ revision: number }> {
    return this.request(`/projects/${projectId}/clusters`, {
      method: "PATCH",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ cluster_id: clusterId, ...changes }),
    });
  }

  mergeClusters(projectId: string, source: string, target: string): Promise<{ revision: number }> {
    return this.request(`/projects/${projectId}/clusters/merge`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ source, target }),
    });
  }
}
