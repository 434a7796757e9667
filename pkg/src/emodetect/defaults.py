"""Access to the data files bundled with the package.

The shipped ontology covers the six standard primary classes with secondary
and tertiary subclasses and their keyword lists; cue, intensity, and pairing
defaults live beside it. All of these are plain data files that users can
copy and edit, then point the CLI at with the corresponding flags.
"""

from __future__ import annotations

from importlib import resources

from .ontology import EmotionOntology, load_ontology
from .scorer import CounterPairing, load_counter_pairs
from .spotting import (
    DEFAULT_INTENSITY_WINDOW,
    DEFAULT_NEGATION_WINDOW,
    SpottingConfig,
    load_intensity_map,
    load_negation_cues,
)

ONTOLOGY_FILE = "parrott.ont"
NEGATION_FILE = "negation.txt"
INTENSITY_FILE = "intensity.tsv"
COUNTER_PAIRS_FILE = "counter_pairs.tsv"


def bundled_text(name: str) -> str:
    """Raw UTF-8 content of a bundled data file."""
    return (resources.files(__package__) / "data" / name).read_text(encoding="utf-8")


def default_ontology() -> EmotionOntology:
    return load_ontology(bundled_text(ONTOLOGY_FILE))


def default_spotting_config(
    negation_window: int = DEFAULT_NEGATION_WINDOW,
    intensity_window: int = DEFAULT_INTENSITY_WINDOW,
) -> SpottingConfig:
    return SpottingConfig(
        negation_cues=load_negation_cues(bundled_text(NEGATION_FILE)),
        intensity_map=load_intensity_map(bundled_text(INTENSITY_FILE)),
        negation_window=negation_window,
        intensity_window=intensity_window,
    )


def default_counter_pairing() -> CounterPairing:
    return load_counter_pairs(bundled_text(COUNTER_PAIRS_FILE))
