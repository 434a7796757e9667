"""Score propagation and the final emotion decision.

Each node's own score is its effective keyword frequency weighted by depth
(frequency/depth by default, so shallower classes count more per occurrence;
frequency*depth in the alternative mode that favors specific classes).
Scores accumulate bottom-up so every primary class ends up with the total
over its whole subtree, and the primary with the highest score wins. A table
of all zeros means no emotion evidence at all and yields the Neutral label.

All functions here are pure; ontologies and configs are immutable, so batch
callers may score many documents concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .errors import (
    MalformedLineError,
    MismatchedPrimariesError,
    UnknownPrimaryError,
)
from .ontology import CANONICAL_PRIMARIES, EmotionOntology, bfs_traverse
from .spotting import EmotionHit, SpottingConfig, find_hits
from .textproc import Token, tokenize

#: Label returned when every primary class scores zero.
NEUTRAL_LABEL = "Neutral"

#: Valid ``depth_weighting`` arguments.
DEPTH_WEIGHTINGS = ("inverse", "proportional")


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of classifying one document.

    ``scores`` maps every primary class name to its total; ``label`` is the
    winning primary, or Neutral when all scores are zero. ``tie`` is set when
    at least two primaries share the maximal nonzero score (the label is then
    the tied name earliest in the tie order).
    """

    label: str
    scores: dict[str, float]
    tie: bool
    evidence: tuple[EmotionHit, ...]
    mode: str = "keyword"


@dataclass(frozen=True)
class CounterPairing:
    """Unordered opposing-class pairs, each primary in at most one pair."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        seen: set[str] = set()
        for a, b in self.pairs:
            if a == b:
                raise ValueError(f"pair members must differ: ({a}, {b})")
            for name in (a, b):
                if name in seen:
                    raise ValueError(f"'{name}' appears in more than one pair")
                seen.add(name)


def node_frequencies(hits: Iterable[EmotionHit]) -> dict[str, float]:
    """Effective frequency per node: intensity summed over non-negated hits.

    Negated hits contribute nothing; nodes without hits are absent.
    """
    freqs: dict[str, float] = {}
    for hit in hits:
        if hit.negated:
            continue
        freqs[hit.node_name] = freqs.get(hit.node_name, 0.0) + hit.intensity
    return freqs


def propagate_scores(
    ontology: EmotionOntology,
    freqs: dict[str, float],
    depth_weighting: str = "inverse",
) -> dict[str, float]:
    """Total depth-weighted score per primary class.

    Own scores (freq/depth or freq*depth) are accumulated bottom-up, all
    depth-3 nodes into their parents and then depth-2 nodes into primaries,
    so each primary's entry is the sum over its entire subtree. Raises
    :class:`~emodetect.errors.UnknownNodeError` for a frequency key naming
    no node.
    """
    if depth_weighting not in DEPTH_WEIGHTINGS:
        raise ValueError(f"depth_weighting must be one of {DEPTH_WEIGHTINGS}")
    resolved: dict[str, float] = {}
    for name, freq in freqs.items():
        if freq < 0:
            raise ValueError(f"negative frequency for '{name}'")
        node = ontology.node(name)
        resolved[node.name] = resolved.get(node.name, 0.0) + freq

    order = bfs_traverse(ontology)
    totals: dict[str, float] = {}
    for node in order:
        freq = resolved.get(node.name, 0.0)
        if depth_weighting == "inverse":
            totals[node.name] = freq / node.depth
        else:
            totals[node.name] = freq * node.depth
    for node in reversed(order):
        if node.parent is not None:
            totals[node.parent.name] += totals[node.name]
    return {p.name: totals[p.name] for p in ontology.primaries}


def choose_label(
    scores: dict[str, float], tie_order: Sequence[str] | None = None
) -> tuple[str, bool]:
    """Pick the winning label from a score table.

    Returns ``(label, tie)``; all-zero tables give Neutral. Ties go to the
    name earliest in ``tie_order`` (primaries missing from the order are
    considered last, in table order).
    """
    if not scores:
        return NEUTRAL_LABEL, False
    order = list(tie_order) if tie_order is not None else []
    order += [name for name in scores if name not in order]
    top = max(scores.values())
    if top <= 0.0:
        return NEUTRAL_LABEL, False
    winners = [name for name in order if name in scores and scores[name] == top]
    return winners[0], len(winners) > 1


def detect(
    text: str,
    ontology: EmotionOntology,
    config: SpottingConfig,
    depth_weighting: str = "inverse",
    tie_order: Sequence[str] | None = None,
) -> DetectionResult:
    """Classify one document by keyword spotting.

    Runs tokenize -> find_hits -> node_frequencies -> propagate_scores and
    picks the highest-scoring primary. Never fails on document content.
    """
    tokens = tokenize(text)
    hits = find_hits(tokens, ontology, config)
    freqs = node_frequencies(hits)
    scores = propagate_scores(ontology, freqs, depth_weighting)
    if tie_order is None:
        tie_order = ontology.tie_order
    label, tie = choose_label(scores, tie_order)
    return DetectionResult(
        label=label, scores=scores, tie=tie, evidence=tuple(hits), mode="keyword"
    )


def counter_compare(
    scores: dict[str, float],
    pairing: CounterPairing,
    tie_order: Sequence[str] | None = None,
) -> dict[tuple[str, str], tuple[str, bool]]:
    """Compare each opposing pair and report the stronger member.

    Returns ``{pair: (winner, tied)}``; equal scores go to the member
    earlier in the tie order, flagged as tied. This is a reporting aid and
    never overrides the argmax label.
    """
    if tie_order is None:
        tie_order = [c for c in CANONICAL_PRIMARIES if c in scores]
        tie_order += [name for name in scores if name not in tie_order]
    results: dict[tuple[str, str], tuple[str, bool]] = {}
    for a, b in pairing.pairs:
        for name in (a, b):
            if name not in scores:
                raise UnknownPrimaryError(f"unknown primary '{name}'")
        if scores[a] > scores[b]:
            results[(a, b)] = (a, False)
        elif scores[b] > scores[a]:
            results[(a, b)] = (b, False)
        else:
            order = list(tie_order)
            first = a if order.index(a) <= order.index(b) else b
            results[(a, b)] = (first, True)
    return results


def affinity_score(
    tokens: list[Token],
    affinity_lexicon: dict[str, tuple[str, float]],
    primaries: Sequence[str],
) -> dict[str, float]:
    """Word-level probabilistic scoring, independent of the ontology tree.

    Each token occurrence with a lexicon entry adds its probability to the
    entry's target primary. No depth weighting and no negation handling:
    this mode is deliberately word-level only.
    """
    scores = {name: 0.0 for name in primaries}
    for token in tokens:
        entry = affinity_lexicon.get(token.normalized)
        if entry is None:
            continue
        target, probability = entry
        if target not in scores:
            raise UnknownPrimaryError(
                f"affinity target '{target}' is not a primary class"
            )
        scores[target] += probability
    return scores


def hybrid_blend(
    keyword_scores: dict[str, float],
    affinity_scores: dict[str, float],
    alpha: float,
) -> dict[str, float]:
    """Convex blend: alpha*keyword + (1-alpha)*affinity, per primary."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must be in [0, 1]")
    if set(keyword_scores) != set(affinity_scores):
        raise MismatchedPrimariesError(
            "score tables cover different primary classes"
        )
    return {
        name: alpha * keyword_scores[name] + (1.0 - alpha) * affinity_scores[name]
        for name in keyword_scores
    }


def load_affinity_lexicon(source: str | TextIO) -> dict[str, tuple[str, float]]:
    """Read ``token<TAB>PrimaryName<TAB>probability`` lines, '#' comments.

    Probabilities must lie in [0, 1]; a repeated token keeps the last entry.
    """
    text = source.read() if hasattr(source, "read") else source
    lexicon: dict[str, tuple[str, float]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedLineError(
                lineno, "expected token<TAB>PrimaryName<TAB>probability"
            )
        token, target, value = (p.strip() for p in parts)
        if not token or any(ch.isspace() for ch in token) or token != token.lower():
            raise MalformedLineError(
                lineno, f"token '{token}' must be a single lowercase word"
            )
        if not target:
            raise MalformedLineError(lineno, "empty primary name")
        try:
            probability = float(value)
        except ValueError:
            raise MalformedLineError(lineno, f"bad probability '{value}'") from None
        if not 0.0 <= probability <= 1.0:
            raise MalformedLineError(
                lineno, f"probability out of range [0, 1]: {value}"
            )
        lexicon[token] = (target, probability)
    return lexicon


def load_counter_pairs(source: str | TextIO) -> CounterPairing:
    """Read ``PrimaryA<TAB>PrimaryB`` lines, '#' comments."""
    text = source.read() if hasattr(source, "read") else source
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise MalformedLineError(lineno, "expected PrimaryA<TAB>PrimaryB")
        a, b = parts[0].strip(), parts[1].strip()
        if not a or not b:
            raise MalformedLineError(lineno, "empty primary name")
        pairs.append((a, b))
    try:
        return CounterPairing(pairs=tuple(pairs))
    except ValueError as exc:
        raise MalformedLineError(len(text.splitlines()), str(exc)) from None
