"""CoNLL-U ingestion and dependency-subtree phrase extraction.

The reader keeps only the columns the extractor needs (id, form, lemma,
upos, head, deprel) and rejects blocks whose head links do not form a
single rooted tree.  Extraction walks the tree twice: once collecting noun
phrases around subject/object tokens, once collecting verb phrases around
root/conjoined verbs.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, TextIO

from .errors import FormatError, TreeError

# Relations whose dependents stay attached to a noun-phrase head.  Closed
# inventory: modifiers, determiners, compounds and case marking.
NP_CLOSURE_DEPRELS = frozenset(
    {"det", "amod", "compound", "nmod", "nummod", "poss", "case"}
)
# Tokens that anchor a noun phrase.
NP_HEAD_DEPRELS = frozenset({"nsubj", "nsubj:pass", "obj", "dobj", "iobj"})
# Dependents folded (with their full subtrees) into a verb phrase.
VP_OBJECT_DEPRELS = frozenset({"obj", "dobj", "iobj", "xcomp"})
# Verbs that anchor a verb phrase.
VP_HEAD_DEPRELS = frozenset({"root", "conj"})


class SegmentKind(Enum):
    NOUN_PHRASE = "NounPhrase"
    VERB_PHRASE = "VerbPhrase"


@dataclass(frozen=True)
class DepToken:
    id: int  # 1-based within the sentence
    form: str
    lemma: str
    upos: str
    head: int  # 0 = root
    deprel: str


@dataclass(frozen=True)
class DepSentence:
    tokens: tuple[DepToken, ...]
    text_hint: str | None = None


@dataclass(frozen=True)
class SemanticSegment:
    """A noun or verb phrase lifted out of one sentence's parse."""

    id: int
    text: str
    kind: SegmentKind
    sentence_id: int
    token_ids: tuple[int, ...]

    def position_key(self) -> tuple[int, int]:
        """Document-order key: sentence first, then first token."""
        return (self.sentence_id, self.token_ids[0])


def _finish_block(
    rows: list[tuple[int, DepToken]], text_hint: str | None
) -> DepSentence:
    """Validate one token block (rows carry their source line numbers)."""
    n = len(rows)
    first_line = rows[0][0]
    expected = 1
    for line_no, tok in rows:
        if tok.id != expected:
            raise FormatError(f"token ids not consecutive (saw {tok.id})", line_no)
        expected += 1
        if tok.head < 0 or tok.head > n:
            raise TreeError(f"head {tok.head} outside sentence of {n} tokens", line_no)
        if tok.head == tok.id:
            raise TreeError(f"token {tok.id} is its own head", line_no)

    roots = [(line_no, tok) for line_no, tok in rows if tok.head == 0]
    if not roots:
        raise TreeError("sentence has no root token", first_line)
    if len(roots) > 1:
        raise TreeError("sentence has multiple root tokens", roots[1][0])

    # Tree check: every token must reach the root through head links.
    heads = {tok.id: tok.head for _, tok in rows}
    for line_no, tok in rows:
        seen = set()
        cur = tok.id
        while cur != 0:
            if cur in seen:
                raise TreeError(f"cycle through token {tok.id}", line_no)
            seen.add(cur)
            cur = heads[cur]

    return DepSentence(tokens=tuple(tok for _, tok in rows), text_hint=text_hint)


def parse_conllu(stream: TextIO | Iterable[str]) -> list[DepSentence]:
    """Read CoNLL-U blocks into dependency sentences.

    Comment lines are skipped (``# text =`` is kept as a hint), multiword
    ranges (``1-2``) and empty nodes (``1.1``) are dropped.  Raises
    FormatError / TreeError naming the offending line.
    """
    sentences: list[DepSentence] = []
    rows: list[tuple[int, DepToken]] = []
    text_hint: str | None = None

    def close() -> None:
        nonlocal rows, text_hint
        if rows:
            sentences.append(_finish_block(rows, text_hint))
        rows = []
        text_hint = None

    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            close()
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("text") and "=" in body:
                text_hint = body.split("=", 1)[1].strip()
            continue
        cols = line.split("\t")
        if len(cols) != 10:
            raise FormatError(f"expected 10 columns, got {len(cols)}", line_no)
        if "-" in cols[0] or "." in cols[0]:
            continue  # multiword token range / empty node
        try:
            tok_id = int(cols[0])
        except ValueError:
            raise FormatError(f"non-integer token id {cols[0]!r}", line_no) from None
        try:
            head = int(cols[6])
        except ValueError:
            raise FormatError(f"non-integer head {cols[6]!r}", line_no) from None
        rows.append(
            (
                line_no,
                DepToken(
                    id=tok_id,
                    form=cols[1],
                    lemma=cols[2],
                    upos=cols[3],
                    head=head,
                    deprel=cols[7],
                ),
            )
        )
    close()
    return sentences


def _children(sentence: DepSentence) -> dict[int, list[DepToken]]:
    by_head: dict[int, list[DepToken]] = {}
    for tok in sentence.tokens:
        by_head.setdefault(tok.head, []).append(tok)
    return by_head


def _closure(
    root: DepToken, children: dict[int, list[DepToken]], allowed: frozenset[str]
) -> set[int]:
    """Token ids reachable from ``root`` through child edges whose deprel is
    in ``allowed`` (the root itself is always included)."""
    ids = {root.id}
    stack = [root]
    while stack:
        tok = stack.pop()
        for child in children.get(tok.id, ()):
            if child.deprel in allowed and child.id not in ids:
                ids.add(child.id)
                stack.append(child)
    return ids


def _full_subtree(root: DepToken, children: dict[int, list[DepToken]]) -> set[int]:
    ids = {root.id}
    stack = [root]
    while stack:
        tok = stack.pop()
        for child in children.get(tok.id, ()):
            if child.id not in ids:
                ids.add(child.id)
                stack.append(child)
    return ids


def segment_text(sentence: DepSentence, token_ids: Iterable[int]) -> str:
    forms = {tok.id: tok.form for tok in sentence.tokens}
    return " ".join(forms[i] for i in sorted(token_ids))


def extract_segments(sentence: DepSentence, sentence_id: int) -> list[SemanticSegment]:
    """Noun and verb phrases of one parsed sentence, deduplicated by token
    set and ordered by position.  Segment ids are local (0-based); the
    pooling step renumbers them."""
    children = _children(sentence)
    candidates: list[tuple[SegmentKind, set[int]]] = []

    for tok in sentence.tokens:
        if tok.deprel in NP_HEAD_DEPRELS:
            candidates.append(
                (SegmentKind.NOUN_PHRASE, _closure(tok, children, NP_CLOSURE_DEPRELS))
            )
    for tok in sentence.tokens:
        if tok.deprel in VP_HEAD_DEPRELS and tok.upos == "VERB":
            ids = {tok.id}
            for child in children.get(tok.id, ()):
                if child.deprel in VP_OBJECT_DEPRELS:
                    ids |= _full_subtree(child, children)
            candidates.append((SegmentKind.VERB_PHRASE, ids))

    seen: set[tuple[int, ...]] = set()
    unique: list[tuple[SegmentKind, tuple[int, ...]]] = []
    for kind, ids in candidates:
        key = tuple(sorted(ids))
        if key not in seen:
            seen.add(key)
            unique.append((kind, key))

    unique.sort(key=lambda item: (item[1][0], item[1][-1], item[0].value))
    return [
        SemanticSegment(
            id=i,
            text=segment_text(sentence, ids),
            kind=kind,
            sentence_id=sentence_id,
            token_ids=ids,
        )
        for i, (kind, ids) in enumerate(unique)
    ]


def whole_sentence_segment(text: str, sentence_id: int) -> SemanticSegment:
    """Plain-text fallback when no parse is available: the whole sentence as
    one segment.  Tagged NounPhrase by convention to keep the kind enum
    closed."""
    forms = text.split()
    return SemanticSegment(
        id=0,
        text=" ".join(forms),
        kind=SegmentKind.NOUN_PHRASE,
        sentence_id=sentence_id,
        token_ids=tuple(range(1, len(forms) + 1)),
    )


def renumber(segments: Iterable[SemanticSegment]) -> list[SemanticSegment]:
    """Assign dense pool-wide ids in the given order."""
    return [replace(seg, id=i) for i, seg in enumerate(segments)]
