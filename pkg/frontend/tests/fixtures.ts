/**
 * Recorded service responses for a miniature two-character project, shaped
 * exactly like the engine's canonical JSON bodies. The FakeFetch replays
 * them and records every request so tests can assert request counts.
 */

import { FetchLike } from "../src/api.js";

export const PROJECT = {
  id: "demo",
  revision: 9,
  status: { state: "current", last_run: 9 },
  source_meta: {},
  chapters: [
    { index: 0, title: "The Letter", span: [21, 400] as [number, number] },
    { index: 1, title: "The Storm", span: [420, 800] as [number, number] },
  ],
  characters: [
    { id: "c-anne", display_name: "Anne", mentions: 20, provisional: false },
    { id: "c-rook", display_name: "Rook", mentions: 12, provisional: false },
  ],
};

export const TEXT_BODY = {
  start: 0,
  end: 800,
  text: "CHAPTER I\nThe Letter\n\n" + "Anne read the letter. ".repeat(17) + "\n\nCHAPTER II\nThe Storm\n\n" + "Rook sailed home. ".repeat(20),
};

export const PRESENCE_CHAPTER = {
  kind: "presence",
  level: "chapter",
  focus_chapter: null,
  rows: ["c-anne", "c-rook"],
  row_names: ["Anne", "Rook"],
  columns: [0, 1],
  cells: [
    [
      { value: 12, normalized: 1.0, evidence: [[22, 26]] as [number, number][] },
      { value: 8, normalized: 0.6667, evidence: [[444, 448]] as [number, number][] },
    ],
    [null, { value: 12, normalized: 1.0, evidence: [[444, 448]] as [number, number][] }],
  ],
};

export const SPEECH_CHAPTER = {
  kind: "speech",
  level: "chapter",
  focus_chapter: null,
  rows: ["c-anne", "c-rook"],
  row_names: ["Anne", "Rook"],
  columns: [0, 1],
  cells: [
    [{ value: 3, normalized: 1.0, evidence: [[40, 60]] as [number, number][] }, null],
    [null, { value: 2, normalized: 0.6667, evidence: [[460, 470]] as [number, number][] }],
  ],
};

export const SENTIMENT_CHAPTER = {
  kind: "sentiment",
  level: "chapter",
  focus_chapter: null,
  rows: ["c-anne", "c-rook"],
  row_names: ["Anne", "Rook"],
  columns: [0, 1],
  cells: [
    [
      { value: 0.31, normalized: 0.655, evidence: [[22, 43]] as [number, number][] },
      { value: -0.12, normalized: 0.44, evidence: [[444, 461]] as [number, number][] },
    ],
    [null, { value: 0.05, normalized: 0.525, evidence: [[444, 461]] as [number, number][] }],
  ],
};

export const PRESENCE_SENTENCES_CH0 = {
  kind: "presence",
  level: "sentence",
  focus_chapter: 0,
  rows: ["c-anne", "c-rook"],
  row_names: ["Anne", "Rook"],
  columns: [0, 1, 2],
  cells: [
    [
      { value: 2, normalized: 1.0, evidence: [[22, 26]] as [number, number][] },
      null,
      { value: 1, normalized: 0.5, evidence: [[66, 70]] as [number, number][] },
    ],
    [null, null, null],
  ],
};

export const SPEECH_SENTENCES_CH0 = {
  ...SPEECH_CHAPTER,
  level: "sentence",
  focus_chapter: 0,
  columns: [0, 1, 2],
  cells: [
    [null, { value: 1, normalized: 1.0, evidence: [[40, 60]] as [number, number][] }, null],
    [null, null, null],
  ],
};

export const SENTIMENT_SENTENCES_CH0 = {
  ...SENTIMENT_CHAPTER,
  level: "sentence",
  focus_chapter: 0,
  columns: [0, 1, 2],
  cells: [
    [{ value: 0.42, normalized: 0.71, evidence: [[22, 43]] as [number, number][] }, null, null],
    [null, null, null],
  ],
};

export const COOCCURRENCE = { character: "c-anne", chapter: 0, cooccurring: ["c-rook"] };

export const CLUSTERS = {
  revision: 9,
  clusters: [
    {
      cluster_id: "k0",
      source_chapter: 0,
      hint: "Anne",
      assigned_name: "Anne",
      label: "character",
      merged_into: null,
      mention_count: 20,
      samples: ["Anne", "she"],
    },
    {
      cluster_id: "k1",
      source_chapter: 1,
      hint: "Anne M.",
      assigned_name: null,
      label: "unreviewed",
      merged_into: null,
      mention_count: 4,
      samples: ["Anne"],
    },
  ],
};

export class FakeFetch {
  requests: { url: string; method: string; body?: string }[] = [];
  routes: [RegExp, unknown][] = [];

  constructor() {
    this.routes = [
      [/\/projects\/demo\/text/, TEXT_BODY],
      [/\/projects\/demo\/status/, PROJECT.status],
      [/\/projects\/demo\/matrix\?kind=presence&level=sentence/, PRESENCE_SENTENCES_CH0],
      [/\/projects\/demo\/matrix\?kind=speech&level=sentence/, SPEECH_SENTENCES_CH0],
      [/\/projects\/demo\/matrix\?kind=sentiment&level=sentence/, SENTIMENT_SENTENCES_CH0],
      [/\/projects\/demo\/matrix\?kind=presence/, PRESENCE_CHAPTER],
      [/\/projects\/demo\/matrix\?kind=speech/, SPEECH_CHAPTER],
      [/\/projects\/demo\/matrix\?kind=sentiment/, SENTIMENT_CHAPTER],
      [/\/projects\/demo\/cooccurrence/, COOCCURRENCE],
      [/\/projects\/demo\/clusters\/merge/, { revision: 10 }],
      [/\/projects\/demo\/clusters/, CLUSTERS],
      [/\/projects\/demo$/, PROJECT],
    ];
  }

  fetch: FetchLike = (url, init) => {
    this.requests.push({ url, method: init?.method ?? "GET", body: init?.body as string | undefined });
    for (const [pattern, payload] of this.routes) {
      if (pattern.test(url)) {
        return Promise.resolve(
          new Response(JSON.stringify(payload), { status: 200, headers: { "content-type": "application/json" } }),
        );
      }
    }
    return Promise.resolve(new Response(JSON.stringify({ code: "unknown", message: url }), { status: 404 }));
  };

  count(pattern: RegExp): number {
    return this.requests.filter((r) => pattern.test(r.url)).length;
  }
}

/** Every scalar leaf value in a recorded response, as display strings. */
export function responseValues(payload: unknown): Set<string> {
  const out = new Set<string>();
  const walk = (node: unknown): void => {
    if (node === null || node === undefined) return;
    if (Array.isArray(node)) {
      node.forEach(walk);
    } else if (typeof node === "object") {
      Object.values(node as Record<string, unknown>).forEach(walk);
    } else if (typeof node === "number") {
      out.add(String(node));
      out.add(node.toFixed(2));
    } else {
      out.add(String(node));
    }
  };
  walk(payload);
  return out;
}
