/**
 * Interaction hub for the card interface.
 *
 * The app owns the view state (active indicator kinds, chapter vs sentence
 * level, focus chapter, character filter) and wires the cross-card
 * behaviors: hovering a cell pops up the character and chapter name, tints
 * the focus character red and the chapter's co-occurring characters orange
 * in every visible card; clicking a cell drills all cards down to the
 * sentences of that chapter and scrolls the text pane there. Everything
 * shown comes from service responses; the client computes nothing.
 */

import { ApiClient, Matrix, MatrixCell, ProjectSummary } from "./api.js";
import { renderCard, tintRows } from "./cards.js";
import { TextPane } from "./textpane.js";

export interface AppOptions {
  kinds?: string[];
  characters?: string[];
}

export class CharlensApp {
  readonly state = {
    level: "chapter" as "chapter" | "sentence",
    focusChapter: null as number | null,
    kinds: ["presence", "speech", "sentiment"],
    characters: undefined as string[] | undefined,
  };

  private summary: ProjectSummary | null = null;
  private cards = new Map<string, HTMLElement>();
  private inflight = new Map<string, Promise<unknown>>();
  readonly textPane: TextPane;
  private popup: HTMLElement;
  private banner: HTMLElement;

  constructor(
    private api: ApiClient,
    private projectId: string,
    private cardsRoot: HTMLElement,
    textRoot: HTMLElement,
    options: AppOptions = {},
  ) {
    if (options.kinds) this.state.kinds = options.kinds;
    if (options.characters) this.state.characters = options.characters;
    this.textPane = new TextPane(textRoot);
    this.popup = document.createElement("div");
    this.popup.className = "popup hidden";
    this.cardsRoot.appendChild(this.popup);
    this.banner = document.createElement("div");
    this.banner.className = "stale-banner hidden";
    this.banner.textContent = "analysis is stale: registry changed since the last run";
    this.cardsRoot.appendChild(this.banner);
  }

  /** Deduplicate identical in-flight requests per card/key. */
  private shared<T>(key: string, make: () => Promise<T>): Promise<T> {
    const pending = this.inflight.get(key);
    if (pending) return pending as Promise<T>;
    const request = make().finally(() => this.inflight.delete(key));
    this.inflight.set(key, request);
    return request;
  }

  async start(): Promise<void> {
    this.summary = await this.api.getProject(this.projectId);
    const body = await this.api.getText(this.projectId);
    this.textPane.setText(body.text);
    await this.refreshStatus();
    await this.loadCards();
  }

  async refreshStatus(): Promise<void> {
    const status = await this.api.getStatus(this.projectId);
    this.banner.classList.toggle("hidden", status.state !== "stale");
  }

  async loadCards(): Promise<void> {
    const matrices = await Promise.all(
      this.state.kinds.map((kind) =>
        this.shared(`matrix:${kind}:${this.state.level}:${this.state.focusChapter}`, () =>
          this.api.getMatrix(this.projectId, kind, {
            level: this.state.level,
            chapter: this.state.level === "sentence" ? this.state.focusChapter ?? undefined : undefined,
            characters: this.state.characters,
          }),
        ),
      ),
    );
    for (const card of this.cards.values()) card.remove();
    this.cards.clear();
    for (const matrix of matrices) {
      const card = renderCard(matrix, {
        onHoverCell: (character, column, cell) => void this.onHoverCell(matrix, character, column, cell),
        onLeaveCell: () => this.onLeaveCell(),
        onClickCell: (character, column) => void this.onClickCell(matrix, character, column),
        onClose: (kind) => void this.removeCard(kind),
      });
      this.cards.set(matrix.kind, card);
      this.cardsRoot.appendChild(card);
    }
  }

  columnCount(): number | null {
    const counts = new Set<number>();
    for (const card of this.cards.values()) {
      counts.add(card.querySelectorAll(".cell").length / Math.max(1, card.querySelectorAll(".row-label").length));
    }
    return counts.size === 1 ? [...counts][0] : null;
  }

  private chapterName(index: number): string {
    const chapter = this.summary?.chapters[index];
    return chapter?.title ? chapter.title : `chapter ${index}`;
  }

  private characterName(id: string): string {
    return this.summary?.characters.find((c) => c.id === id)?.display_name ?? id;
  }

  async onHoverCell(matrix: Matrix, characterId: string, column: number, cell: MatrixCell): Promise<void> {
    const chapter = matrix.level === "chapter" ? column : matrix.focus_chapter ?? 0;
    this.popup.textContent = `${this.characterName(characterId)} — ${this.chapterName(chapter)}`;
    this.popup.classList.remove("hidden");

    if (matrix.level === "sentence") {
      this.textPane.highlight(cell.evidence);
      tintForAll(this.cards, characterId, new Set());
      return;
    }
    const co = await this.shared(`cooccur:${characterId}:${chapter}`, () =>
      this.api.getCooccurrence(this.projectId, characterId, chapter),
    );
    tintForAll(this.cards, characterId, new Set(co.cooccurring));
  }

  onLeaveCell(): void {
    this.popup.classList.add("hidden");
    tintForAll(this.cards, null, new Set());
  }

  async onClickCell(matrix: Matrix, _characterId: string, column: number): Promise<void> {
    if (matrix.level !== "chapter") return;
    this.state.level = "sentence";
    this.state.focusChapter = column;
    await this.loadCards();
    const chapter = this.summary?.chapters[column];
    if (chapter) this.textPane.highlight([chapter.span]);
  }

  async backToChapters(): Promise<void> {
    this.state.level = "chapter";
    this.state.focusChapter = null;
    await this.loadCards();
    this.textPane.clear();
  }

  async removeCard(kind: string): Promise<void> {
    this.state.kinds = this.state.kinds.filter((k) => k !== kind);
    this.cards.get(kind)?.remove();
    this.cards.delete(kind);
  }

  async addCard(kind: string): Promise<void> {
    if (!this.state.kinds.includes(kind)) {
      this.state.kinds.push(kind);
      await this.loadCards();
    }
  }
}

function tintForAll(cards: Map<string, HTMLElement>, focus: string | null, cooccurring: Set<string>): void {
  for (const card of cards.values()) {
    tintRows(card, focus, cooccurring);
  }
}
