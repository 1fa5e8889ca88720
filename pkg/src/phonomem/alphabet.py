"""Symbol inventories, tokenization, and word-list corpora.

A Word is a tuple of indices into an ordered Alphabet. Symbols are Unicode
grapheme clusters (composed normal form: base character plus any trailing
combining marks); an optional digraph table turns multi-character spellings
into single symbols. First-appearance order over the ingested corpus fixes
the symbol indices, and that order is the tie-break order everywhere
downstream.
"""

from __future__ import annotations

import hashlib
import unicodedata
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .errors import CorpusError, UnknownSymbolError

Word = tuple[int, ...]

EMBEDDED_CORPORA = ("latin", "turkish")


def normalize(text: str) -> str:
    """Composed (NFC) normalization; applied before any clustering."""
    return unicodedata.normalize("NFC", text)


def _split_tokens(line: str) -> list[str]:
    if line.lstrip().startswith("#"):
        return []
    return line.replace(",", " ").split()


def _check_well_formed(line: str, lineno: int) -> None:
    for ch in line:
        if 0xD800 <= ord(ch) <= 0xDFFF:
            raise CorpusError(f"line {lineno}: malformed byte sequence")


def _clusters(text: str, digraphs: Mapping[str, str]) -> list[str]:
    """Split normalized text into symbols: digraph spellings win (longest
    first), otherwise one base character plus trailing combining marks."""
    keys = sorted(digraphs, key=len, reverse=True)
    out: list[str] = []
    i = 0
    while i < len(text):
        for key in keys:
            if text.startswith(key, i):
                out.append(digraphs[key])
                i += len(key)
                break
        else:
            j = i + 1
            while j < len(text) and unicodedata.combining(text[j]):
                j += 1
            out.append(text[i:j])
            i = j
    return out


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbol inventory; immutable, safe to share across threads."""

    symbols: tuple[str, ...]
    digraphs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if not self.symbols:
            raise CorpusError("empty corpus")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("duplicate symbols in alphabet")
        index = {s: i for i, s in enumerate(self.symbols)}
        for spelling, symbol in self.digraphs:
            if symbol not in index:
                raise ValueError(f"digraph {spelling!r} maps to unknown symbol {symbol!r}")
        spellings = dict(self.digraphs)
        spellings.update({s: s for s in self.symbols})
        matchers = sorted(spellings.items(), key=lambda kv: len(kv[0]), reverse=True)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_matchers", tuple((sp, index[sym]) for sp, sym in matchers))

    @property
    def d(self) -> int:
        return len(self.symbols)

    def index_of(self, symbol: str) -> int:
        return self._index[symbol]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._index


def build_inventory(
    lines: Iterable[str], digraph_table: Optional[Mapping[str, str]] = None
) -> Alphabet:
    """Collect every distinct symbol over the input lines, in first-appearance
    order. Lines starting with '#' are comments; commas count as whitespace."""
    digraphs = dict(digraph_table or {})
    seen: dict[str, None] = {}
    tokens = 0
    for lineno, line in enumerate(lines, start=1):
        _check_well_formed(line, lineno)
        for token in _split_tokens(line):
            tokens += 1
            for symbol in _clusters(normalize(token), digraphs):
                seen.setdefault(symbol)
    if tokens == 0:
        raise CorpusError("empty corpus")
    return Alphabet(tuple(seen), tuple(digraphs.items()))


def tokenize(text: str, alphabet: Alphabet) -> Word:
    """Map a surface string to symbol indices; the longest known spelling wins
    at each position."""
    s = normalize(text)
    out: list[int] = []
    i = 0
    while i < len(s):
        for spelling, idx in alphabet._matchers:
            if s.startswith(spelling, i):
                out.append(idx)
                i += len(spelling)
                break
        else:
            cluster = _clusters(s[i:], dict(alphabet.digraphs))[0]
            raise UnknownSymbolError(cluster, len(s[:i].encode("utf-8")))
    return tuple(out)


def detokenize(word: Sequence[int], alphabet: Alphabet) -> str:
    """Concatenate symbol spellings; inverse of tokenize on valid words."""
    symbols = alphabet.symbols
    for i in word:
        if not 0 <= i < len(symbols):
            raise ValueError(f"symbol index {i} out of range 0..{len(symbols) - 1}")
    return "".join(symbols[i] for i in word)


@dataclass(frozen=True)
class Corpus:
    """A tokenized word list plus the alphabet it was ingested under."""

    alphabet: Alphabet
    words: tuple[Word, ...]
    source: str = "<memory>"

    def __post_init__(self) -> None:
        d = self.alphabet.d
        for w in self.words:
            if not w:
                raise CorpusError("empty word in corpus")
            if any(not 0 <= s < d for s in w):
                raise CorpusError("word with out-of-range symbol index")

    def surface_words(self) -> list[str]:
        return [detokenize(w, self.alphabet) for w in self.words]

    def sha256(self) -> str:
        """Platform-stable digest of the normalized word list."""
        joined = "\n".join(self.surface_words())
        return hashlib.sha256(joined.encode("utf-8")).hexdigest()


def parse_corpus(
    lines: Iterable[str],
    source: str = "<memory>",
    digraph_table: Optional[Mapping[str, str]] = None,
) -> Corpus:
    lines = list(lines)
    alphabet = build_inventory(lines, digraph_table)
    words = []
    for line in lines:
        for token in _split_tokens(line):
            words.append(tokenize(token, alphabet))
    return Corpus(alphabet, tuple(words), source)


def load_corpus(path, digraph_table: Optional[Mapping[str, str]] = None) -> Corpus:
    """Read a UTF-8 word-list file (words split on whitespace, commas, and
    newlines; '#' lines are comments)."""
    data = Path(path).read_bytes()
    lines = []
    for lineno, raw in enumerate(data.split(b"\n"), start=1):
        try:
            lines.append(raw.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise CorpusError(
                f"{path}: line {lineno}: malformed byte sequence ({exc.reason})"
            ) from exc
    return parse_corpus(lines, source=str(path), digraph_table=digraph_table)


def load_embedded(name: str) -> Corpus:
    """Load one of the corpora shipped with the package ('latin', 'turkish')."""
    if name not in EMBEDDED_CORPORA:
        raise CorpusError(
            f"no embedded corpus {name!r}; available: {', '.join(EMBEDDED_CORPORA)}"
        )
    text = resources.files("phonomem").joinpath(f"data/{name}.txt").read_text("utf-8")
    return parse_corpus(text.split("\n"), source=f"embedded:{name}")
