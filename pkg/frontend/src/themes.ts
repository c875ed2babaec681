/** Client-side style themes applied to inserted images as CSS filters. */

export interface Theme {
  name: string;
  label: string;
  filter: string;
}

export const THEMES: Theme[] = [
  { name: 'plain', label: 'Plain', filter: 'none' },
  { name: 'sepia', label: 'Sepia', filter: 'sepia(0.85) contrast(1.05)' },
  { name: 'ink', label: 'Ink sketch', filter: 'grayscale(1) contrast(1.6) brightness(1.1)' },
  { name: 'watercolor', label: 'Watercolor', filter: 'saturate(1.6) blur(0.6px) brightness(1.08)' },
];

export function themeFilter(name: string): string {
  const theme = THEMES.find((t) => t.name === name);
  return theme ? theme.filter : 'none';
}
