"""Emotion ontology: a three-level class/subclass forest with keyword sets.

Ontology file format (UTF-8, line oriented):

    # comment (whole line)
    Love
    Love/Affection: affection, fondness
    Love/Affection/Adoration: adoration

Each non-blank line declares one node as a path of one to three names
(``primary``, ``primary/secondary``, ``primary/secondary/tertiary``). Names
start with a letter and may contain letters and single spaces. A parent must
be declared on an earlier line than any of its children. Keywords after the
colon are lowercase, comma separated, and may span up to four space-separated
words. The node's own lowercased name is always one of its keywords, and no
keyword may belong to more than one node anywhere in the ontology.

Loaded ontologies are immutable and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import TextIO

from .errors import (
    DepthExceededError,
    DuplicateKeywordError,
    DuplicateNameError,
    MalformedLineError,
    OrphanPathError,
    UnknownNodeError,
)

#: The six standard primary classes, in the order used for tie-breaking
#: and serialization.
CANONICAL_PRIMARIES = ("Love", "Joy", "Anger", "Sadness", "Fear", "Surprise")

MAX_DEPTH = 3
MAX_PRIMARIES = 6
MAX_KEYWORD_TOKENS = 4

_LEVEL_NAMES = {1: "primary", 2: "secondary", 3: "tertiary"}
_NAME_RE = re.compile(r"[A-Za-z][A-Za-z ]*\Z")


@dataclass(eq=False)
class EmotionNode:
    """One class in the ontology.

    ``depth`` is 1 for primary nodes (so depth-weighted scores never divide
    by zero), 2 for secondary, 3 for tertiary. ``keywords`` holds lowercase
    surface forms in declaration order, the node's own name among them.
    """

    name: str
    depth: int
    parent: "EmotionNode | None" = field(default=None, repr=False)
    children: list["EmotionNode"] = field(default_factory=list, repr=False)
    keywords: tuple[str, ...] = ()

    @property
    def level(self) -> str:
        return _LEVEL_NAMES[self.depth]

    @property
    def is_primary(self) -> bool:
        return self.depth == 1

    def primary_ancestor(self) -> "EmotionNode":
        """The primary node at the root of this node's tree (may be self)."""
        node = self
        while node.parent is not None:
            node = node.parent
        return node

    def path(self) -> tuple[str, ...]:
        """Display names from the primary root down to this node."""
        names: list[str] = []
        node: EmotionNode | None = self
        while node is not None:
            names.append(node.name)
            node = node.parent
        return tuple(reversed(names))


class EmotionOntology:
    """An immutable forest of :class:`EmotionNode` with lookup indexes.

    Built by :func:`load_ontology`; not intended to be constructed by hand.
    """

    def __init__(self, nodes: list[EmotionNode]):
        self.nodes: tuple[EmotionNode, ...] = tuple(nodes)
        self.primaries: tuple[EmotionNode, ...] = tuple(
            n for n in self.nodes if n.is_primary
        )
        self._by_name = {n.name.lower(): n for n in self.nodes}
        #: token-tuple -> node display name, for multiword keyword matching
        self.keyword_index: dict[tuple[str, ...], str] = {
            tuple(kw.split(" ")): n.name for n in self.nodes for kw in n.keywords
        }
        self.max_keyword_tokens = max(
            (len(k) for k in self.keyword_index), default=0
        )

    def __contains__(self, name: str) -> bool:
        return name.lower() in self._by_name

    def __len__(self) -> int:
        return len(self.nodes)

    def node(self, name: str) -> EmotionNode:
        """Look up a node by name, case-insensitively."""
        try:
            return self._by_name[name.lower()]
        except KeyError:
            raise UnknownNodeError(f"unknown node '{name}'") from None

    @property
    def primary_names(self) -> tuple[str, ...]:
        return tuple(n.name for n in self.primaries)

    @property
    def tie_order(self) -> tuple[str, ...]:
        """Primary names with the canonical six first, then file order."""
        canonical_lower = [c.lower() for c in CANONICAL_PRIMARIES]
        present = {n.name.lower(): n.name for n in self.primaries}
        ordered = [present[c] for c in canonical_lower if c in present]
        ordered += [
            n.name for n in self.primaries if n.name.lower() not in canonical_lower
        ]
        return tuple(ordered)


def _canonical_name(segment: str, lineno: int) -> str:
    name = " ".join(segment.split())
    if not name:
        raise MalformedLineError(lineno, "empty name in node path")
    if not _NAME_RE.match(name):
        raise MalformedLineError(
            lineno, f"invalid name '{name}' (letters and spaces, starting with a letter)"
        )
    return name


def _check_keyword(keyword: str, lineno: int) -> None:
    if not keyword:
        raise MalformedLineError(lineno, "empty keyword")
    if keyword != keyword.lower():
        raise MalformedLineError(lineno, f"keyword '{keyword}' must be lowercase")
    if any(ch.isspace() and ch != " " for ch in keyword):
        raise MalformedLineError(
            lineno, f"keyword '{keyword}' may only use single spaces"
        )
    parts = keyword.split(" ")
    if any(not p for p in parts):
        raise MalformedLineError(
            lineno, f"keyword '{keyword}' may only use single spaces"
        )
    if len(parts) > MAX_KEYWORD_TOKENS:
        raise MalformedLineError(
            lineno, f"keyword '{keyword}' longer than {MAX_KEYWORD_TOKENS} words"
        )


def load_ontology(source: str | TextIO) -> EmotionOntology:
    """Parse and validate an ontology from file content or an open stream.

    Raises a :class:`~emodetect.errors.DataFormatError` subclass naming the
    offending 1-based line for any format or consistency violation.
    """
    text = source.read() if hasattr(source, "read") else source
    nodes: list[EmotionNode] = []
    by_name: dict[str, EmotionNode] = {}
    by_path: dict[tuple[str, ...], EmotionNode] = {}
    keyword_owner: dict[str, str] = {}
    primary_count = 0

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        path_part, colon, keyword_part = line.partition(":")
        segments = [_canonical_name(s, lineno) for s in path_part.split("/")]
        if len(segments) > MAX_DEPTH:
            raise DepthExceededError(
                lineno, f"path '{path_part.strip()}' deeper than {MAX_DEPTH} levels"
            )

        path_key = tuple(s.lower() for s in segments)
        parent = None
        if len(segments) > 1:
            parent = by_path.get(path_key[:-1])
            if parent is None:
                raise OrphanPathError(
                    lineno,
                    f"parent path '{'/'.join(segments[:-1])}' not declared earlier",
                )

        name = segments[-1]
        if name.lower() in by_name:
            raise DuplicateNameError(lineno, f"node '{name}' already declared")

        keywords: list[str] = []
        if colon:
            if not keyword_part.strip():
                raise MalformedLineError(lineno, "missing keywords after ':'")
            for piece in keyword_part.split(","):
                keyword = piece.strip()
                _check_keyword(keyword, lineno)
                if keyword not in keywords:
                    keywords.append(keyword)
        name_keyword = name.lower()
        _check_keyword(name_keyword, lineno)
        if name_keyword not in keywords:
            keywords.append(name_keyword)

        for keyword in keywords:
            owner = keyword_owner.get(keyword)
            if owner is not None:
                raise DuplicateKeywordError(lineno, keyword, owner, name)

        if parent is None:
            primary_count += 1
            if primary_count > MAX_PRIMARIES:
                raise MalformedLineError(
                    lineno, f"more than {MAX_PRIMARIES} primary classes"
                )

        node = EmotionNode(
            name=name, depth=len(segments), parent=parent, keywords=tuple(keywords)
        )
        if parent is not None:
            parent.children.append(node)
        nodes.append(node)
        by_name[name.lower()] = node
        by_path[path_key] = node
        for keyword in keywords:
            keyword_owner[keyword] = name

    return EmotionOntology(nodes)


def bfs_traverse(ontology: EmotionOntology) -> list[EmotionNode]:
    """All nodes, parents before children: primaries in file order, then all
    depth-2 nodes, then all depth-3 nodes; within a depth, parent order then
    declaration order."""
    order: list[EmotionNode] = []
    queue = list(ontology.primaries)
    while queue:
        node = queue.pop(0)
        order.append(node)
        queue.extend(node.children)
    return order


def dump_ontology(ontology: EmotionOntology) -> str:
    """Serialize back to the file format; ``load_ontology`` of the result
    reproduces the same nodes, parents, keywords, and order."""
    lines = []
    for node in ontology.nodes:
        lines.append(f"{'/'.join(node.path())}: {', '.join(node.keywords)}")
    return "\n".join(lines) + ("\n" if lines else "")
