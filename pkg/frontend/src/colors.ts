/**
 * Color encodings for the cards: a sequential luminance ramp for counts
 * (the brighter, the more), a diverging ramp for sentiment, and a fixed
 * categorical palette for the six emotions. All scales ship with legend
 * entries so every card can explain itself.
 */

export const EMOTION_PALETTE: Record<string, string> = {
  joy: "#f6c744",
  sadness: "#5b7fd4",
  love: "#e2639b",
  anger: "#d1462f",
  fear: "#6c4bb8",
  surprise: "#3fb58e",
};

function channel(value: number): string {
  return Math.round(Math.max(0, Math.min(255, value)))
    .toString(16)
    .padStart(2, "0");
}

/** Sequential: dark navy at 0 to bright amber at 1. */
export function sequential(normalized: number): string {
  const t = Math.max(0, Math.min(1, normalized));
  const r = 24 + t * (246 - 24);
  const g = 33 + t * (199 - 33);
  const b = 70 + t * (68 - 70);
  return `#${channel(r)}${channel(g)}${channel(b)}`;
}

/** Diverging: red below the midpoint, green above, white at 0.5. */
export function diverging(normalized: number): string {
  const t = Math.max(0, Math.min(1, normalized));
  if (t < 0.5) {
    const u = t / 0.5;
    return `#${channel(200)}${channel(60 + u * 190)}${channel(50 + u * 200)}`;
  }
  const u = (t - 0.5) / 0.5;
  return `#${channel(250 - u * 190)}${channel(250 - u * 80)}${channel(250 - u * 170)}`;
}

export function categorical(label: string): string {
  return EMOTION_PALETTE[label] ?? "#999999";
}

export function cellColor(kind: string, value: number | string, normalized: number | null): string {
  if (kind === "emotion") return categorical(String(value));
  if (kind === "sentiment") return diverging(normalized ?? 0.5);
  return sequential(normalized ?? 0);
}

export interface LegendEntry {
  label: string;
  color: string;
}

export function legendFor(kind: string): LegendEntry[] {
  if (kind === "emotion") {
    return Object.entries(EMOTION_PALETTE).map(([label, color]) => ({ label, color }));
  }
  if (kind === "sentiment") {
    return [
      { label: "-1", color: diverging(0) },
      { label: "0", color: diverging(0.5) },
      { label: "+1", color: diverging(1) },
    ];
  }
  return [
    { label: "low", color: sequential(0.1) },
    { label: "high", color: sequential(1) },
  ];
}
