"""Branch-space export: graphviz DOT and a JSON node/edge equivalent.

Nodes are flagged against the training word list: an exact match is an
input word, a proper prefix of one is a partial input word, and anything
else is a pseudoword.
"""

from __future__ import annotations

from typing import Iterable

from .alphabet import Alphabet, Word, detokenize
from .generator import BranchSpace


def proper_prefixes(words: Iterable[Word]) -> set[Word]:
    out: set[Word] = set()
    for w in words:
        for k in range(1, len(w)):
            out.add(w[:k])
    return out


def classify(word: Word, input_words: set[Word], prefixes: set[Word]) -> str:
    if word in input_words:
        return "input-word"
    if word in prefixes:
        return "partial-input-word"
    return "pseudoword"


def branch_to_json(
    space: BranchSpace, alphabet: Alphabet, input_words: Iterable[Word] = ()
) -> dict:
    """Node/edge arrays for the materialized space. Right edges join a word
    to its ground continuation; down edges join consecutive same-parent
    siblings. Node ids are the word strings themselves (the root's id is
    '.' when the root prefix is empty)."""
    input_set = {tuple(w) for w in input_words}
    prefixes = proper_prefixes(input_set)
    nodes = []
    edges = []
    for column in space.columns:
        for node in column:
            nodes.append(
                {
                    "id": detokenize(node.word, alphabet) or ".",
                    "word": detokenize(node.word, alphabet),
                    "energy": node.energy,
                    "col": node.col,
                    "rank": node.depth_down,
                    "flag": classify(node.word, input_set, prefixes),
                }
            )
            if node.children_right:
                word_id = detokenize(node.word, alphabet) or "."
                children = node.children_right
                edges.append(
                    {
                        "src": word_id,
                        "dst": detokenize(children[0].word, alphabet),
                        "kind": "right",
                    }
                )
                for above, below in zip(children, children[1:]):
                    edges.append(
                        {
                            "src": detokenize(above.word, alphabet),
                            "dst": detokenize(below.word, alphabet),
                            "kind": "down",
                        }
                    )
    return {"format": "branch-space", "version": 1, "nodes": nodes, "edges": edges}


def _quote(s: str) -> str:
    escaped = s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


_FLAG_ATTRS = {
    "input-word": ", shape=box, penwidth=2",
    "partial-input-word": ", shape=box, style=dashed",
    "pseudoword": ", shape=ellipse",
}


def branch_to_dot(
    space: BranchSpace, alphabet: Alphabet, input_words: Iterable[Word] = ()
) -> str:
    """DOT digraph: columns advance left to right (one rank group per word
    length, ordered by energy within it); down edges are dashed."""
    payload = branch_to_json(space, alphabet, input_words)
    by_col: dict[int, list[dict]] = {}
    for node in payload["nodes"]:
        by_col.setdefault(node["col"], []).append(node)
    lines = [
        "digraph branch_space {",
        "  rankdir=LR;",
        '  node [fontname="monospace"];',
    ]
    for col in sorted(by_col):
        lines.append("  { rank=same;")
        for node in sorted(by_col[col], key=lambda n: (n["energy"], n["word"])):
            label = _quote(f"{node['word']}\nE={node['energy']:.6g}")
            lines.append(
                f"    {_quote(node['id'])} [label={label}{_FLAG_ATTRS[node['flag']]}];"
            )
        lines.append("  }")
    for edge in payload["edges"]:
        style = " [style=dashed]" if edge["kind"] == "down" else ""
        lines.append(f"  {_quote(edge['src'])} -> {_quote(edge['dst'])}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
