/**
 * Browser entry point: connect to the service, mount the review screen and
 * the card interface, and expose simple top-bar controls (indicator picker,
 * back-to-chapters, analyze).
 */

import { ApiClient } from "./api.js";
import { CharlensApp } from "./app.js";
import { ReviewScreen } from "./review.js";

const ALL_KINDS = ["presence", "speech", "sentiment", "emotion", "action_change"];

function query(name: string, fallback: string): string {
  return new URLSearchParams(window.location.search).get(name) ?? fallback;
}

async function boot(): Promise<void> {
  const base = query("service", "http://127.0.0.1:8765");
  const projectId = query("project", "demo");
  const api = new ApiClient(base);

  const controls = document.getElementById("controls")!;
  const cardsRoot = document.getElementById("cards")!;
  const textRoot = document.getElementById("text")!;
  const reviewRoot = document.getElementById("review")!;

  const app = new CharlensApp(api, projectId, cardsRoot, textRoot);
  const review = new ReviewScreen(api, projectId, reviewRoot, () => void app.refreshStatus());

  const picker = document.createElement("select");
  for (const kind of ALL_KINDS) {
    const option = document.createElement("option");
    option.value = kind;
    option.textContent = kind.replace("_", " ");
    picker.appendChild(option);
  }
  const addButton = document.createElement("button");
  addButton.textContent = "show trait";
  addButton.addEventListener("click", () => void app.addCard(picker.value));

  const back = document.createElement("button");
  back.textContent = "back to chapters";
  back.addEventListener("click", () => void app.backToChapters());

  const analyze = document.createElement("button");
  analyze.textContent = "analyze";
  analyze.addEventListener("click", async () => {
    await api.analyze(projectId);
    await app.refreshStatus();
    await app.loadCards();
  });

  const reviewToggle = document.createElement("button");
  reviewToggle.textContent = "review clusters";
  reviewToggle.addEventListener("click", async () => {
    reviewRoot.classList.toggle("hidden");
    if (!reviewRoot.classList.contains("hidden")) await review.refresh();
  });

  controls.append(picker, addButton, back, analyze, reviewToggle);

  try {
    await app.start();
  } catch (error) {
    const toast = document.createElement("div");
    toast.className = "toast";
    toast.textContent = String(error);
    document.body.appendChild(toast);
  }
}

void boot();
