"""Emotion keyword spotting with intensity and negation annotations.

Matching is longest-first, left to right, over normalized tokens; matched
tokens are consumed so hits never overlap, and a multiword keyword never
crosses a sentence boundary. Each hit records whether a negation cue occurs
shortly before it in the same sentence and the multiplier of the nearest
preceding intensity modifier, if any.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

from .errors import MalformedLineError
from .ontology import EmotionOntology
from .textproc import Token

DEFAULT_NEGATION_WINDOW = 3
DEFAULT_INTENSITY_WINDOW = 2


@dataclass(frozen=True)
class EmotionHit:
    """One matched keyword occurrence.

    ``token_span`` is the inclusive [first, last] token-index pair of the
    match; ``intensity`` scales the hit's contribution downstream, and a
    negated hit contributes nothing at all.
    """

    node_name: str
    token_span: tuple[int, int]
    intensity: float = 1.0
    negated: bool = False


@dataclass(frozen=True)
class SpottingConfig:
    """Negation cues and intensity modifiers used while spotting.

    Windows are measured in tokens, look backwards from a match, and never
    cross a sentence boundary.
    """

    negation_cues: frozenset[str] = frozenset()
    intensity_map: dict[str, float] = field(default_factory=dict)
    negation_window: int = DEFAULT_NEGATION_WINDOW
    intensity_window: int = DEFAULT_INTENSITY_WINDOW

    def __post_init__(self):
        if self.negation_window < 0 or self.intensity_window < 0:
            raise ValueError("windows must be nonnegative")
        for token, multiplier in self.intensity_map.items():
            if multiplier <= 0:
                raise ValueError(
                    f"intensity multiplier for '{token}' must be positive"
                )


def find_hits(
    tokens: list[Token], ontology: EmotionOntology, config: SpottingConfig
) -> list[EmotionHit]:
    """Scan the token stream and return hits in text order."""
    index = ontology.keyword_index
    max_len = ontology.max_keyword_tokens
    hits: list[EmotionHit] = []
    i, n = 0, len(tokens)
    while i < n:
        match = None
        limit = min(max_len, n - i)
        for length in range(limit, 0, -1):
            if tokens[i + length - 1].sentence_index != tokens[i].sentence_index:
                continue
            key = tuple(t.normalized for t in tokens[i : i + length])
            node_name = index.get(key)
            if node_name is not None:
                match = (length, node_name)
                break
        if match is None:
            i += 1
            continue
        length, node_name = match
        sentence = tokens[i].sentence_index

        negated = any(
            tokens[j].normalized in config.negation_cues
            for j in range(max(0, i - config.negation_window), i)
            if tokens[j].sentence_index == sentence
        )

        intensity = 1.0
        for j in range(i - 1, max(0, i - config.intensity_window) - 1, -1):
            if j < 0 or tokens[j].sentence_index != sentence:
                break
            multiplier = config.intensity_map.get(tokens[j].normalized)
            if multiplier is not None:
                intensity = multiplier
                break

        hits.append(
            EmotionHit(
                node_name=node_name,
                token_span=(i, i + length - 1),
                intensity=intensity,
                negated=negated,
            )
        )
        i += length
    return hits


def load_negation_cues(source: str | TextIO) -> frozenset[str]:
    """Read a cue file: one lowercase token per line, '#' comment lines."""
    text = source.read() if hasattr(source, "read") else source
    cues = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if any(ch.isspace() for ch in line):
            raise MalformedLineError(lineno, f"cue '{line}' must be a single token")
        if line != line.lower():
            raise MalformedLineError(lineno, f"cue '{line}' must be lowercase")
        cues.add(line)
    return frozenset(cues)


def load_intensity_map(source: str | TextIO) -> dict[str, float]:
    """Read an intensity file: ``token<TAB>multiplier`` per line, '#' comments."""
    text = source.read() if hasattr(source, "read") else source
    mapping: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedLineError(lineno, "expected token<TAB>multiplier")
        token, value = parts[0].strip(), parts[1].strip()
        if not token or any(ch.isspace() for ch in token) or token != token.lower():
            raise MalformedLineError(
                lineno, f"modifier '{token}' must be a single lowercase token"
            )
        try:
            multiplier = float(value)
        except ValueError:
            raise MalformedLineError(lineno, f"bad multiplier '{value}'") from None
        if multiplier <= 0:
            raise MalformedLineError(lineno, f"multiplier must be positive: {value}")
        mapping[token] = multiplier
    return mapping
