/**
 * Card rendering: one card per trait indicator, all sharing the same
 * column domain so stacked cards align vertically. A card shows its name,
 * an info line, a legend, a control strip, the matrix itself, and a close
 * icon. Cells render only values returned by the service and remember
 * their coordinates for the interaction layer.
 */

import { Matrix, MatrixCell } from "./api.js";
import { cellColor, legendFor } from "./colors.js";

export interface CardHandlers {
  onHoverCell?: (characterId: string, column: number, cell: MatrixCell) => void;
  onLeaveCell?: () => void;
  onClickCell?: (characterId: string, column: number, cell: MatrixCell) => void;
  onClose?: (kind: string) => void;
  onToggleSmooth?: (enabled: boolean) => void;
}

const INFO_LINES: Record<string, string> = {
  presence: "mentions per column; brighter means more",
  speech: "attributed direct quotes per column",
  sentiment: "mean smoothed sentiment of sentences mentioning the character",
  emotion: "modal emotion of sentences mentioning the character",
  action_change: "chapter-over-chapter change of the character's actions",
};

function formatValue(cell: MatrixCell): string {
  if (typeof cell.value === "number" && !Number.isInteger(cell.value)) {
    return cell.value.toFixed(2);
  }
  return String(cell.value);
}

export function renderCard(matrix: Matrix, handlers: CardHandlers = {}): HTMLElement {
  const card = document.createElement("section");
  card.className = "card";
  card.dataset.kind = matrix.kind;
  card.dataset.level = matrix.level;

  const header = document.createElement("header");
  const title = document.createElement("h2");
  title.textContent = matrix.kind.replace("_", " ");
  header.appendChild(title);

  const info = document.createElement("p");
  info.className = "card-info";
  info.textContent = INFO_LINES[matrix.kind] ?? "";
  header.appendChild(info);

  const legend = document.createElement("div");
  legend.className = "legend";
  for (const entry of legendFor(matrix.kind)) {
    const chip = document.createElement("span");
    chip.className = "legend-chip";
    chip.style.background = entry.color;
    chip.title = entry.label;
    chip.textContent = entry.label;
    legend.appendChild(chip);
  }
  header.appendChild(legend);

  if (matrix.kind === "sentiment" && handlers.onToggleSmooth) {
    const controls = document.createElement("label");
    controls.className = "card-controls";
    const toggle = document.createElement("input");
    toggle.type = "checkbox";
    toggle.checked = true;
    toggle.addEventListener("change", () => handlers.onToggleSmooth?.(toggle.checked));
    controls.appendChild(toggle);
    controls.appendChild(document.createTextNode(" smooth"));
    header.appendChild(controls);
  }

  const close = document.createElement("button");
  close.className = "card-close";
  close.textContent = "×";
  close.addEventListener("click", () => handlers.onClose?.(matrix.kind));
  header.appendChild(close);
  card.appendChild(header);

  const grid = document.createElement("div");
  grid.className = "matrix";
  grid.style.gridTemplateColumns = `10rem repeat(${matrix.columns.length}, minmax(0.6rem, 1fr))`;
  for (let r = 0; r < matrix.rows.length; r += 1) {
    const rowLabel = document.createElement("div");
    rowLabel.className = "row-label";
    rowLabel.dataset.character = matrix.rows[r];
    rowLabel.textContent = matrix.row_names[r];
    grid.appendChild(rowLabel);
    for (let c = 0; c < matrix.columns.length; c += 1) {
      const cell = matrix.cells[r][c];
      const el = document.createElement("div");
      el.className = "cell";
      el.dataset.character = matrix.rows[r];
      el.dataset.column = String(matrix.columns[c]);
      if (cell) {
        el.classList.add("filled");
        el.style.background = cellColor(matrix.kind, cell.value, cell.normalized);
        el.dataset.value = formatValue(cell);
        el.title = formatValue(cell);
        el.addEventListener("mouseenter", () => handlers.onHoverCell?.(matrix.rows[r], matrix.columns[c], cell));
        el.addEventListener("mouseleave", () => handlers.onLeaveCell?.());
        el.addEventListener("click", () => handlers.onClickCell?.(matrix.rows[r], matrix.columns[c], cell));
      }
      grid.appendChild(el);
    }
  }
  card.appendChild(grid);
  return card;
}

/** Tint the focus row red and co-occurring rows orange, across one card. */
export function tintRows(card: HTMLElement, focus: string | null, cooccurring: Set<string>): void {
  card.querySelectorAll<HTMLElement>("[data-character]").forEach((el) => {
    el.classList.toggle("focus", focus !== null && el.dataset.character === focus);
    el.classList.toggle("cooccur", el.dataset.character !== undefined && cooccurring.has(el.dataset.character));
  });
}
