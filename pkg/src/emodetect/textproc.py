"""Tokenization and sentence segmentation.

Tokens are maximal runs of letters and digits; an ASCII apostrophe or hyphen
is kept inside a token only when flanked by letters on both sides, so
contractions like "don't" stay whole. Sentence boundaries fall after any run
of '.', '!', or '?'. There is no stemming, stop-word removal, or syntax
analysis; matching downstream is purely surface-level.
"""

from __future__ import annotations

from dataclasses import dataclass

_SENTENCE_ENDERS = frozenset(".!?")
_JOINERS = frozenset("'-")


@dataclass(frozen=True)
class Token:
    """One word unit with its position in the source document.

    ``char_span`` is the [start, end) code-point range of ``surface`` in the
    original text; ``normalized`` is the lowercased surface form.
    """

    surface: str
    normalized: str
    char_span: tuple[int, int]
    sentence_index: int
    token_index: int


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit()


def tokenize(text: str) -> list[Token]:
    """Split a document into tokens; deterministic, empty input gives []."""
    tokens: list[Token] = []
    sentence = 0
    boundary_pending = False
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if _is_word_char(ch):
            start = i
            i += 1
            while i < n:
                c = text[i]
                if _is_word_char(c):
                    i += 1
                elif (
                    c in _JOINERS
                    and text[i - 1].isalpha()
                    and i + 1 < n
                    and text[i + 1].isalpha()
                ):
                    i += 1
                else:
                    break
            if boundary_pending and tokens:
                sentence += 1
            boundary_pending = False
            surface = text[start:i]
            tokens.append(
                Token(
                    surface=surface,
                    normalized=surface.lower(),
                    char_span=(start, i),
                    sentence_index=sentence,
                    token_index=len(tokens),
                )
            )
        else:
            if ch in _SENTENCE_ENDERS:
                boundary_pending = True
            i += 1
    return tokens


def split_sentences(tokens: list[Token]) -> list[tuple[int, int]]:
    """Contiguous [start, end) token-index ranges, one per sentence.

    The ranges partition the token list in order.
    """
    ranges: list[tuple[int, int]] = []
    start = 0
    for i in range(1, len(tokens)):
        if tokens[i].sentence_index != tokens[i - 1].sentence_index:
            ranges.append((start, i))
            start = i
    if tokens:
        ranges.append((start, len(tokens)))
    return ranges
