/** Preset stories offered on the landing page as starting points. */

export interface PresetStory {
  title: string;
  paragraphs: string[];
}

export const PRESET_STORIES: PresetStory[] = [
  {
    title: 'The Moon Kitten',
    paragraphs: [
      'Once upon a time there lived a small grey kitten who loved the moon.',
      'Every night the kitten climbed the tallest chimney in the village and sang to the silver sky.',
    ],
  },
  {
    title: 'The Bell of the Hill',
    paragraphs: [
      'High on a green hill stood a crooked bell tower that had been silent for a hundred years.',
      'A young shepherd found the tower while chasing a runaway lamb.',
    ],
  },
  {
    title: 'Three Wishes from the Net',
    paragraphs: [
      'The fisherman pulled a strange glowing net from the evening sea.',
      'Inside the net was a small mermaid with bright eyes, and she spoke of three wishes.',
    ],
  },
];

export function randomPreset(pick: () => number = Math.random): PresetStory {
  return PRESET_STORIES[Math.floor(pick() * PRESET_STORIES.length)];
}
