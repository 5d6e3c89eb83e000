/**
 * Minimal deterministic SVG assembly: plain string building, attributes in
 * the order given, all coordinates rounded to 2 decimals. No timestamps, no
 * randomness — identical input yields identical bytes.
 */

export type Attrs = Record<string, string | number>;

export function fmt(value: number): string {
  const rounded = value.toFixed(2);
  return rounded === "-0.00" ? "0.00" : rounded;
}

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function el(tag: string, attrs: Attrs, children: string[] = [], text?: string): string {
  const parts = Object.entries(attrs).map(
    ([key, value]) => `${key}="${typeof value === "number" ? fmt(value) : value}"`,
  );
  const open = parts.length ? `<${tag} ${parts.join(" ")}` : `<${tag}`;
  if (children.length === 0 && text === undefined) return `${open}/>`;
  const body = text !== undefined ? escapeText(text) : children.join("");
  return `${open}>${body}</${tag}>`;
}

export function document(width: number, height: number, children: string[]): string {
  return [
    `<?xml version="1.0" encoding="UTF-8"?>`,
    el(
      "svg",
      {
        xmlns: "http://www.w3.org/2000/svg",
        width: String(width),
        height: String(height),
        viewBox: `0 0 ${width} ${height}`,
        "font-family": "Helvetica, Arial, sans-serif",
      },
      children,
    ),
    "",
  ].join("\n");
}

/** Marker shapes centered on (x, y); `size` is the circumradius-ish extent. */
export function marker(shape: "circle" | "square" | "triangle", x: number, y: number, size: number, color: string): string {
  switch (shape) {
    case "circle":
      return el("circle", { cx: x, cy: y, r: size, fill: color });
    case "square":
      return el("rect", {
        x: x - size,
        y: y - size,
        width: 2 * size,
        height: 2 * size,
        fill: color,
      });
    case "triangle": {
      const points = [
        `${fmt(x)},${fmt(y - size)}`,
        `${fmt(x - size)},${fmt(y + size)}`,
        `${fmt(x + size)},${fmt(y + size)}`,
      ].join(" ");
      return el("polygon", { points, fill: color });
    }
  }
}
