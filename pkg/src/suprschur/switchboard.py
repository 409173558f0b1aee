"""Switch graphs on colored words: construction, validation, components,
per-component Schur expansions, and DOT export.

Edges are switches in some interior position i: two words that differ only
in the window (i-1, i, i+1) by one of six local patterns.  A board is valid
when every vertex with exactly one natural-order descent among positions
i-1, i lies on exactly one i-edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .alphabet_words import (
    ColoredWord,
    Letter,
    ShuffleOrder,
    descent_set,
    letter_from_code,
    natural_order,
    word_key,
    word_str,
)
from .errors import ConstructionFailureError, VerificationFailureError
from .free_algebra import NCPoly, kron_ideal, kronknuth_ideal, perp_contains
from .symfun import F_of_set, SymFunc, schur_expand, schur_expand_by_tableaux

KNUTH = "knuth"
ROTATION = "rotation"


@dataclass(frozen=True)
class Switch:
    position: int
    kind: str
    words: tuple[ColoredWord, ColoredWord]  # sorted by word key

    @staticmethod
    def make(position: int, kind: str, w1: ColoredWord, w2: ColoredWord) -> "Switch":
        lo, hi = sorted((w1, w2), key=word_key)
        return Switch(position, kind, (lo, hi))

    def other(self, word: ColoredWord) -> ColoredWord:
        return self.words[1] if word == self.words[0] else self.words[0]


def _window_partners(window: tuple[Letter, Letter, Letter]) -> list[tuple[tuple[Letter, Letter, Letter], str]]:
    """All local switch moves available on a three-letter window."""
    p, q, r = window
    out = []
    codes = (p.code, q.code, r.code)
    if len(set(codes)) == 3:
        lo, mid, hi = sorted(codes)
        x, y, z = letter_from_code(lo), letter_from_code(mid), letter_from_code(hi)
        knuth_moves = {
            (x, z, y): (z, x, y),
            (z, x, y): (x, z, y),
            (y, x, z): (y, z, x),
            (y, z, x): (y, x, z),
        }
        partner = knuth_moves.get(window)
        if partner is not None:
            out.append((partner, KNUTH))
        if (mid, hi) == (lo + 1, lo + 2):
            rotation_moves = {
                (y, x, z): (x, z, y),
                (x, z, y): (y, x, z),
                (y, z, x): (z, x, y),
                (z, x, y): (y, z, x),
            }
            partner = rotation_moves.get(window)
            if partner is not None:
                out.append((partner, ROTATION))
    else:
        moves = []
        if p == q and p != r:
            # (y,y,x) -> (y,x,y) for unbarred y above x; (y,y,z) -> (y,z,y) for barred y below z
            if (not p.barred and r.code < p.code) or (p.barred and r.code > p.code):
                moves.append((p, r, p))
        if q == r and p != q:
            # (z,y,y) -> (y,z,y) for unbarred y below z; (x,y,y) -> (y,x,y) for barred y above x
            if (not q.barred and p.code > q.code) or (q.barred and p.code < q.code):
                moves.append((q, p, q))
        if p == r and p != q:
            if not p.barred and q.code < p.code:
                moves.append((p, p, q))  # (y,x,y) -> (y,y,x)
            elif not p.barred and q.code > p.code:
                moves.append((q, p, p))  # (y,z,y) -> (z,y,y)
            elif p.barred and q.code > p.code:
                moves.append((p, p, q))  # (y,z,y) -> (y,y,z)
            elif p.barred and q.code < p.code:
                moves.append((q, p, p))  # (y,x,y) -> (x,y,y)
        out.extend((m, KNUTH) for m in moves)
    return out


def find_switch_partners(word: ColoredWord, i: int) -> list[tuple[ColoredWord, str]]:
    """All words related to the given one by a switch in position i (1-based,
    2 <= i <= len-1), with the switch kind."""
    if not 2 <= i <= len(word) - 1:
        raise ConstructionFailureError(f"switch position {i} out of range", word=word, position=i)
    window = (word[i - 2], word[i - 1], word[i])
    seen = set()
    out = []
    for partner_window, kind in _window_partners(window):
        partner = word[: i - 2] + partner_window + word[i + 1:]
        if (partner, kind) not in seen:
            seen.add((partner, kind))
            out.append((partner, kind))
    return out


class Switchboard:
    """An edge-labeled switch graph on a fixed set of colored words."""

    def __init__(self, vertices: Iterable[ColoredWord], edges: Iterable[Switch]):
        self.vertices = tuple(sorted(set(vertices), key=word_key))
        self.edges = frozenset(edges)
        self._incident: dict[tuple[ColoredWord, int], list[Switch]] = {}
        for edge in self.edges:
            for w in edge.words:
                self._incident.setdefault((w, edge.position), []).append(edge)

    def word_length(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    def i_edges(self, word: ColoredWord, i: int) -> list[Switch]:
        return self._incident.get((word, i), [])

    def indicator(self) -> NCPoly:
        return NCPoly({w: 1 for w in self.vertices})

    def to_dot(self) -> str:
        lines = ["graph switchboard {"]
        index = {w: f"v{k}" for k, w in enumerate(self.vertices, start=1)}
        for w in self.vertices:
            lines.append(f'  {index[w]} [label="{word_str(w)}"];')
        for edge in sorted(self.edges, key=lambda e: (e.position, word_key(e.words[0]), word_key(e.words[1]))):
            label = f"{edge.position}" if edge.kind == KNUTH else f"~{edge.position}"
            lines.append(f'  {index[edge.words[0]]} -- {index[edge.words[1]]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "vertices": [word_str(w) for w in self.vertices],
            "edges": [
                {
                    "position": e.position,
                    "kind": e.kind,
                    "words": [word_str(e.words[0]), word_str(e.words[1])],
                }
                for e in sorted(self.edges, key=lambda e: (e.position, word_key(e.words[0])))
            ],
        }
        return json.dumps(payload, indent=2)


def _needs_edge(word: ColoredWord, i: int, order: ShuffleOrder) -> bool:
    des = descent_set(word, order)
    return ((i - 1) in des) != (i in des)


def build_cyw_switchboard(lam: Sequence[int], d: int) -> Switchboard:
    """The canonical board on the colored Yamanouchi words: rotation switches
    whenever the window letters occupy three consecutive positions of the
    natural order, Knuth switches otherwise."""
    from .alphabet_words import enumerate_cyw

    vertices = enumerate_cyw(tuple(lam), d)
    return build_switchboard(vertices)


def build_switchboard(vertices: Sequence[ColoredWord]) -> Switchboard:
    """Canonical-preference board construction over an arbitrary vertex set."""
    order = natural_order(max((x.value for w in vertices for x in w), default=1))
    pool = set(vertices)
    n = len(vertices[0]) if vertices else 0
    edges = set()
    for w in vertices:
        for i in range(2, n):
            if not _needs_edge(w, i, order):
                continue
            partners = find_switch_partners(w, i)
            rotations = [p for p, kind in partners if kind == ROTATION]
            knuths = [p for p, kind in partners if kind == KNUTH]
            if rotations:
                partner, kind = rotations[0], ROTATION
            elif knuths:
                partner, kind = knuths[0], KNUTH
            else:
                raise ConstructionFailureError("vertex admits no switch", word=w, position=i)
            if partner not in pool:
                raise ConstructionFailureError(
                    f"required partner {word_str(partner)} missing from the vertex set",
                    word=w,
                    position=i,
                )
            edges.add(Switch.make(i, kind, w, partner))
    board = Switchboard(vertices, edges)
    if not validate_switchboard(board):
        raise ConstructionFailureError("constructed board violates the one-edge axiom")
    return board


def validate_switchboard(board: Switchboard) -> bool:
    """Each edge is a genuine switch and each vertex with exactly one descent
    among positions i-1, i lies on exactly one i-edge."""
    order = natural_order(max((x.value for w in board.vertices for x in w), default=1))
    for edge in board.edges:
        w1, w2 = edge.words
        if (w2, edge.kind) not in find_switch_partners(w1, edge.position):
            return False
    n = board.word_length()
    for w in board.vertices:
        for i in range(2, n):
            expected = 1 if _needs_edge(w, i, order) else 0
            if len(board.i_edges(w, i)) != expected:
                return False
    return True


def components(board: Switchboard) -> list[tuple[ColoredWord, ...]]:
    """Connected components, each sorted, ordered by their smallest vertex."""
    parent = {w: w for w in board.vertices}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for edge in board.edges:
        r1, r2 = find(edge.words[0]), find(edge.words[1])
        if r1 != r2:
            parent[max(r1, r2, key=word_key)] = min(r1, r2, key=word_key)
    groups: dict[ColoredWord, list[ColoredWord]] = {}
    for w in board.vertices:
        groups.setdefault(find(w), []).append(w)
    return [tuple(sorted(group, key=word_key)) for root, group in sorted(groups.items(), key=lambda kv: word_key(kv[0]))]


def component_schur(board: Switchboard) -> list[SymFunc]:
    """Per-component Schur expansion via tableau counting, cross-checked
    against the monomial-basis oracle; the component indicator must pair to
    zero with the whole Kronecker ideal."""
    N = max((x.value for w in board.vertices for x in w), default=1)
    order = natural_order(N)
    out = []
    for component in components(board):
        gamma = NCPoly({w: 1 for w in component})
        if not perp_contains(kron_ideal(N), gamma):
            raise VerificationFailureError("component indicator is not orthogonal to the Kronecker ideal")
        by_tableaux = schur_expand_by_tableaux(component, order)
        by_oracle = schur_expand(F_of_set(component, order))
        if by_tableaux != by_oracle:
            raise VerificationFailureError(
                f"tableau count {by_tableaux} disagrees with the monomial oracle {by_oracle}"
            )
        out.append(by_tableaux)
    return out
