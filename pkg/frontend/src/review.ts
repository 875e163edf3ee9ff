/**
 * Cluster review screen: one row per detected cluster with its sample
 * mentions, a name box, a character/context/discard selector, and a merge
 * target. All edits go straight to the service; the screen re-renders from
 * the next listing response.
 */

import { ApiClient, ClusterRow } from "./api.js";

const LABELS = ["unreviewed", "character", "context", "discarded"];

export class ReviewScreen {
  constructor(
    private api: ApiClient,
    private projectId: string,
    private root: HTMLElement,
    private onRevision: (revision: number) => void = () => {},
  ) {
    this.root.classList.add("review");
  }

  async refresh(): Promise<void> {
    const { clusters, revision } = await this.api.listClusters(this.projectId);
    this.render(clusters);
    this.onRevision(revision);
  }

  private render(rows: ClusterRow[]): void {
    this.root.textContent = "";
    const table = document.createElement("table");
    const head = document.createElement("tr");
    for (const column of ["cluster", "chapter", "samples", "name", "label", "merge into"]) {
      const th = document.createElement("th");
      th.textContent = column;
      head.appendChild(th);
    }
    table.appendChild(head);

    for (const row of rows) {
      const tr = document.createElement("tr");
      tr.dataset.cluster = row.cluster_id;

      const id = document.createElement("td");
      id.textContent = row.merged_into ? `${row.cluster_id} → ${row.merged_into}` : row.cluster_id;
      tr.appendChild(id);

      const chapter = document.createElement("td");
      chapter.textContent = row.source_chapter === null ? "-" : String(row.source_chapter);
      tr.appendChild(chapter);

      const samples = document.createElement("td");
      samples.className = "samples";
      samples.textContent = row.samples.join(", ");
      samples.title = `${row.mention_count} mentions`;
      tr.appendChild(samples);

      const nameCell = document.createElement("td");
      const name = document.createElement("input");
      name.value = row.assigned_name ?? row.hint ?? "";
      name.addEventListener("change", () => {
        void this.api
          .patchCluster(this.projectId, row.cluster_id, { name: name.value })
          .then(() => this.refresh());
      });
      nameCell.appendChild(name);
      tr.appendChild(nameCell);

      const labelCell = document.createElement("td");
      const label = document.createElement("select");
      label.className = "label-select";
      for (const option of LABELS) {
        const el = document.createElement("option");
        el.value = option;
        el.textContent = option;
        el.selected = option === row.label;
        label.appendChild(el);
      }
      label.addEventListener("change", () => {
        void this.api
          .patchCluster(this.projectId, row.cluster_id, { label: label.value })
          .then(() => this.refresh());
      });
      labelCell.appendChild(label);
      tr.appendChild(labelCell);

      const mergeCell = document.createElement("td");
      const merge = document.createElement("select");
      merge.className = "merge-select";
      const none = document.createElement("option");
      none.value = "";
      none.textContent = "—";
      merge.appendChild(none);
      for (const other of rows) {
        if (other.cluster_id === row.cluster_id) continue;
        const el = document.createElement("option");
        el.value = other.cluster_id;
        el.textContent = other.cluster_id;
        el.selected = other.cluster_id === row.merged_into;
        merge.appendChild(el);
      }
      merge.addEventListener("change", () => {
        if (!merge.value) return;
        void this.api
          .mergeClusters(this.projectId, row.cluster_id, merge.value)
          .then(() => this.refresh())
          .catch(() => this.refresh());
      });
      mergeCell.appendChild(merge);
      tr.appendChild(mergeCell);

      table.appendChild(tr);
    }
    this.root.appendChild(table);
  }
}
