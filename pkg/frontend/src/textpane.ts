/**
 * The linked text pane. It displays the project text read-only-ish and can
 * highlight evidence spans (character offsets from the service) and scroll
 * them into view. Highlights always come from service evidence, never from
 * any client-side search.
 */

export class TextPane {
  private text = "";

  constructor(private root: HTMLElement) {
    this.root.classList.add("text-pane");
  }

  setText(text: string): void {
    this.text = text;
    this.render([]);
  }

  /** Re-render with the given [start, end) spans marked. */
  highlight(spans: [number, number][]): void {
    this.render(spans);
    const first = this.root.querySelector("mark");
    if (first && typeof (first as HTMLElement).scrollIntoView === "function") {
      (first as HTMLElement).scrollIntoView({ block: "center" });
    }
  }

  clear(): void {
    this.render([]);
  }

  private render(spans: [number, number][]): void {
    const ordered = [...spans].sort((a, b) => a[0] - b[0]);
    this.root.textContent = "";
    let cursor = 0;
    for (const [start, end] of ordered) {
      if (start < cursor || end > this.text.length) continue;
      if (start > cursor) {
        this.root.appendChild(document.createTextNode(this.text.slice(cursor, start)));
      }
      const mark = document.createElement("mark");
      mark.dataset.start = String(start);
      mark.dataset.end = String(end);
      mark.textContent = this.text.slice(start, end);
      this.root.appendChild(mark);
      cursor = end;
    }
    if (cursor < this.text.length) {
      this.root.appendChild(document.createTextNode(this.text.slice(cursor)));
    }
  }
}
