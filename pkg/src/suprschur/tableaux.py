"""Colored tableaux, restricted shapes, reading words, insertion, and conversion.

Boxes are (row, col) pairs with the English matrix convention, 1-based.
A restricted shape is a lower order ideal of a partition diagram for the
order that grows to the northeast; concretely: occupied columns form a
prefix 1..m, each column is a contiguous interval of rows, column tops are
weakly increasing and column bottoms weakly decreasing.  A partition shape
is the special case where every column starts at row 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence

from .alphabet_words import (
    ColoredWord,
    Letter,
    ShuffleOrder,
    parse_word,
    word_key,
    word_str,
)
from .errors import InvalidParameterError, MalformedInputError

Box = tuple[int, int]


# ---------------------------------------------------------------------------
# partitions


def is_partition(parts: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(a > 0 for a in parts)


def check_partition(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(parts)
    if not is_partition(parts):
        raise InvalidParameterError(f"{parts} is not a partition")
    return parts


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0])) if lam else ()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in reverse-lexicographic (largest-first) order."""

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return check_partition(int(tok) for tok in text.split(","))


def partition_str(lam: Sequence[int]) -> str:
    return ",".join(str(part) for part in lam)


# ---------------------------------------------------------------------------
# shapes


class RestrictedShape:
    """A set of boxes closed under moving southwest inside a partition diagram."""

    __slots__ = ("boxes", "column_intervals")

    def __init__(self, boxes: Iterable[Box]):
        boxes = frozenset(boxes)
        cols: dict[int, list[int]] = {}
        for r, c in boxes:
            if r < 1 or c < 1:
                raise MalformedInputError("boxes must have positive coordinates")
            cols.setdefault(c, []).append(r)
        if boxes and sorted(cols) != list(range(1, len(cols) + 1)):
            raise MalformedInputError("occupied columns must form a prefix 1..m")
        intervals = []
        for c in range(1, len(cols) + 1):
            rows = sorted(cols[c])
            if rows != list(range(rows[0], rows[-1] + 1)):
                raise MalformedInputError(f"column {c} is not a contiguous interval of rows")
            intervals.append((rows[0], rows[-1]))
        for (t1, b1), (t2, b2) in zip(intervals, intervals[1:]):
            if t2 < t1 or b2 > b1:
                raise MalformedInputError("column tops must increase and bottoms decrease")
        object.__setattr__(self, "boxes", boxes)
        object.__setattr__(self, "column_intervals", tuple(intervals))

    @classmethod
    def from_intervals(cls, intervals: Sequence[tuple[int, int]]) -> "RestrictedShape":
        return cls({(r, c + 1) for c, (top, bottom) in enumerate(intervals) for r in range(top, bottom + 1)})

    @classmethod
    def from_partition(cls, lam: Sequence[int]) -> "RestrictedShape":
        lam = check_partition(lam) if lam else ()
        return cls({(r + 1, c + 1) for r, row in enumerate(lam) for c in range(row)})

    @classmethod
    def from_column_pair(cls, heights: Sequence[int], alpha: Sequence[int]) -> "RestrictedShape":
        """The difference of column diagrams: column c keeps rows alpha[c]+1..heights[c]."""
        if len(heights) != len(alpha):
            raise InvalidParameterError("heights and alpha must have equal length")
        boxes = set()
        for c, (height, cut) in enumerate(zip(heights, alpha), start=1):
            if not 0 <= cut <= height:
                raise InvalidParameterError(f"need 0 <= alpha_{c} <= {height}")
            boxes.update((r, c) for r in range(cut + 1, height + 1))
        return cls(boxes)

    def is_partition_shape(self) -> bool:
        return all(top == 1 for top, _ in self.column_intervals)

    def as_partition(self) -> tuple[int, ...]:
        if not self.is_partition_shape():
            raise InvalidParameterError("not a partition shape")
        widths: dict[int, int] = {}
        for r, c in self.boxes:
            widths[r] = max(widths.get(r, 0), c)
        return tuple(widths[r] for r in sorted(widths))

    def serialize(self) -> list[tuple[int, int]]:
        return list(self.column_intervals)

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, box: Box) -> bool:
        return box in self.boxes

    def __eq__(self, other) -> bool:
        return isinstance(other, RestrictedShape) and self.boxes == other.boxes

    def __hash__(self) -> int:
        return hash(self.boxes)

    def __repr__(self) -> str:
        return f"RestrictedShape({self.column_intervals})"


def restricted_shapes_in_box(max_rows: int, max_cols: int, max_boxes: int | None = None) -> list[RestrictedShape]:
    """All nonempty restricted shapes fitting inside the given box."""
    shapes = []

    def extend(intervals: list[tuple[int, int]]):
        if intervals:
            shape = RestrictedShape.from_intervals(intervals)
            if max_boxes is None or len(shape) <= max_boxes:
                shapes.append(shape)
        if len(intervals) == max_cols:
            return
        min_top = intervals[-1][0] if intervals else 1
        max_bottom = intervals[-1][1] if intervals else max_rows
        for top in range(min_top, max_rows + 1):
            for bottom in range(top, max_bottom + 1):
                if max_boxes is not None and intervals and sum(b - t + 1 for t, b in intervals) + bottom - top + 1 > max_boxes:
                    continue
                extend(intervals + [(top, bottom)])

    extend([])
    return shapes


# ---------------------------------------------------------------------------
# colored tableaux


class ColoredTableau:
    """A filling of a shape by letters, tagged with the order it lives in."""

    __slots__ = ("entries", "order", "boxes", "_hash")

    def __init__(self, entries: Mapping[Box, Letter], order: ShuffleOrder, shape: RestrictedShape | None = None):
        entries = dict(entries)
        if shape is not None:
            missing = shape.boxes - entries.keys()
            if missing:
                raise MalformedInputError(f"boxes without entries: {sorted(missing)}")
            extra = entries.keys() - shape.boxes
            if extra:
                raise MalformedInputError(f"entries outside the shape: {sorted(extra)}")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "boxes", frozenset(entries))
        object.__setattr__(self, "_hash", hash((frozenset(entries.items()), order)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Letter]], order: ShuffleOrder) -> "ColoredTableau":
        entries = {(r + 1, c + 1): x for r, row in enumerate(rows) for c, x in enumerate(row)}
        return cls(entries, order)

    @classmethod
    def parse(cls, text: str, order: ShuffleOrder) -> "ColoredTableau":
        """One row per line (or rows separated by ``/``), space-separated letters."""
        lines = [ln for ln in text.replace("/", "\n").splitlines() if ln.strip()]
        return cls.from_rows([parse_word(ln) for ln in lines], order)

    def __getitem__(self, box: Box) -> Letter:
        return self.entries[box]

    def shape(self) -> RestrictedShape:
        return RestrictedShape(self.boxes)

    def rows(self) -> list[tuple[int, list[tuple[int, Letter]]]]:
        by_row: dict[int, list[tuple[int, Letter]]] = {}
        for (r, c), x in self.entries.items():
            by_row.setdefault(r, []).append((c, x))
        return [(r, sorted(by_row[r])) for r in sorted(by_row)]

    def row_words(self) -> list[list[Letter]]:
        return [[x for _, x in cells] for _, cells in self.rows()]

    def word_multiset(self) -> tuple[Letter, ...]:
        return tuple(sorted(self.entries.values(), key=lambda x: x.code))

    def to_text(self) -> str:
        return "\n".join(word_str(row) for row in self.row_words())

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ColoredTableau)
            and self.entries == other.entries
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"ColoredTableau({self.to_text()!r})"


def validate_tableau(tab: ColoredTableau) -> bool:
    """Rows and columns weakly increase; unbarred letters strictly increase
    down columns and barred letters strictly increase along rows."""
    tab.shape()  # raises MalformedInputError when the box set is not a restricted shape
    order = tab.order
    for (r, c), x in tab.entries.items():
        east = tab.entries.get((r, c + 1))
        if east is not None and not order.lerow(x, east):
            return False
        south = tab.entries.get((r + 1, c))
        if south is not None and not order.lecol(x, south):
            return False
    return True


def sqread(tab: ColoredTableau) -> ColoredWord:
    """Diagonal reading word: per diagonal from the southwest, unbarred
    entries toward the northwest, then barred entries toward the southeast."""
    diagonals: dict[int, list[Box]] = {}
    for box in tab.boxes:
        diagonals.setdefault(box[0] - box[1], []).append(box)
    out: list[Letter] = []
    for d in sorted(diagonals, reverse=True):
        boxes = sorted(diagonals[d], reverse=True)
        out.extend(tab[b] for b in boxes if not tab[b].barred)
        out.extend(tab[b] for b in reversed(boxes) if tab[b].barred)
    return tuple(out)


def column_reading(tab: ColoredTableau) -> ColoredWord:
    """Concatenate columns bottom to top, leftmost column first."""
    columns: dict[int, list[Box]] = {}
    for box in tab.boxes:
        columns.setdefault(box[1], []).append(box)
    out: list[Letter] = []
    for c in sorted(columns):
        out.extend(tab[b] for b in sorted(columns[c], reverse=True))
    return tuple(out)


def insert(word: ColoredWord, order: ShuffleOrder) -> ColoredTableau:
    """Row insertion where a barred letter also bumps its own copies.

    An unbarred letter bumps the smallest row entry strictly above it; a
    barred letter bumps the smallest entry that is strictly above it or an
    equal barred letter.
    """
    rows: list[list[Letter]] = []
    for x in word:
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                break
            row = rows[r]
            bump = None
            for i, y in enumerate(row):
                if order.rank(y) > order.rank(x) or (y == x and x.barred):
                    bump = i
                    break
            if bump is None:
                row.append(x)
                break
            row[bump], x = x, row[bump]
            r += 1
    return ColoredTableau.from_rows(rows, order)


def enumerate_fillings(shape: RestrictedShape, order: ShuffleOrder, max_letter: Letter) -> Iterator[ColoredTableau]:
    """All valid colored fillings of a shape with entries at most max_letter."""
    boxes = sorted(shape.boxes)
    letters = [x for x in order.letters if order.rank(x) <= order.rank(max_letter)]
    entries: dict[Box, Letter] = {}

    def fill(i: int) -> Iterator[ColoredTableau]:
        if i == len(boxes):
            yield ColoredTableau(entries, order, shape)
            return
        r, c = boxes[i]
        west = entries.get((r, c - 1))
        north = entries.get((r - 1, c))
        for x in letters:
            if west is not None and not order.lerow(west, x):
                continue
            if north is not None and not order.lecol(north, x):
                continue
            entries[(r, c)] = x
            yield from fill(i + 1)
        entries.pop((r, c), None)

    yield from fill(0)


def enumerate_tableaux(nu: Sequence[int], order: ShuffleOrder, max_letter: Letter) -> list[ColoredTableau]:
    """All valid colored tableaux of partition shape nu, entries <= max_letter."""
    shape = RestrictedShape.from_partition(tuple(nu))
    return list(enumerate_fillings(shape, order, max_letter))


# ---------------------------------------------------------------------------
# arrows on restricted colored tableaux (natural order)


@dataclass(frozen=True)
class Arrow:
    tail: Box
    head: Box
    direction: str  # "NW" or "SE"


def _rectangle_meets_hook_only(boxes: frozenset[Box], r1: int, c1: int, r2: int, c2: int) -> bool:
    # nothing in the rectangle outside (first column + last row)
    for r in range(r1, r2):
        for c in range(c1 + 1, c2 + 1):
            if (r, c) in boxes:
                return False
    return True


def arrows(tab: ColoredTableau) -> frozenset[Arrow]:
    """Arrows between boxes holding consecutive values, per the six templates.

    A 2x2 rectangle whose corners hold a (northwest) and a+1 (southeast),
    both unbarred, always carries an arrow pointing northwest; rectangles
    with more than two rows carry one exactly when the shape meets them in
    the first column and last row only.  Barred letters behave dually, with
    arrows pointing southeast and the roles of rows and columns exchanged.
    """
    out = []
    boxes = tab.boxes
    for r1, c1 in boxes:
        x = tab[(r1, c1)]
        for r2, c2 in boxes:
            if r2 <= r1 or c2 <= c1:
                continue
            y = tab[(r2, c2)]
            if y.barred != x.barred or y.value != x.value + 1:
                continue
            two_by_two = r2 == r1 + 1 and c2 == c1 + 1
            if not x.barred:
                if two_by_two or (r2 - r1 >= 2 and _rectangle_meets_hook_only(boxes, r1, c1, r2, c2)):
                    out.append(Arrow(tail=(r2, c2), head=(r1, c1), direction="NW"))
            else:
                if two_by_two or (c2 - c1 >= 2 and _rectangle_meets_hook_only(boxes, r1, c1, r2, c2)):
                    out.append(Arrow(tail=(r1, c1), head=(r2, c2), direction="SE"))
    return frozenset(out)


def ne_maximal_boxes(tab: ColoredTableau) -> list[Box]:
    """Boxes with no other box weakly north and weakly east of them."""
    out = []
    for r, c in tab.boxes:
        if not any((r2 <= r and c2 >= c) and (r2, c2) != (r, c) for r2, c2 in tab.boxes):
            out.append((r, c))
    return sorted(out)


def nontail_removable(tab: ColoredTableau) -> list[Box]:
    tails = {arrow.tail for arrow in arrows(tab)}
    return [box for box in ne_maximal_boxes(tab) if box not in tails]


def _reading_predecessors(tab: ColoredTableau) -> dict[Box, set[Box]]:
    preds: dict[Box, set[Box]] = {box: set() for box in tab.boxes}
    for b1 in tab.boxes:
        for b2 in tab.boxes:
            if b1 != b2 and b1[0] >= b2[0] and b1[1] <= b2[1]:
                preds[b2].add(b1)  # b1 is southwest of b2, so it is read first
    for arrow in arrows(tab):
        preds[arrow.head].add(arrow.tail)
    return preds


def is_arrow_respecting(tab: ColoredTableau, word: ColoredWord) -> bool:
    """Whether the word can be read off the tableau in an order compatible
    with the southwest-to-northeast box order and with every arrow."""
    if tuple(sorted(word_key(word))) != tuple(sorted(x.code for x in tab.entries.values())):
        raise InvalidParameterError("word is not a rearrangement of the tableau entries")
    preds = _reading_predecessors(tab)
    read: set[Box] = set()

    def place(i: int) -> bool:
        if i == len(word):
            return True
        for box in tab.boxes:
            if box not in read and tab[box] == word[i] and preds[box] <= read:
                read.add(box)
                if place(i + 1):
                    return True
                read.remove(box)
        return False

    return place(0)


def arrow_respecting_extensions(tab: ColoredTableau) -> Iterator[tuple[Box, ...]]:
    """All box orders compatible with the box poset and the arrows."""
    preds = _reading_predecessors(tab)
    boxes = sorted(tab.boxes)
    read: list[Box] = []
    read_set: set[Box] = set()

    def extend() -> Iterator[tuple[Box, ...]]:
        if len(read) == len(boxes):
            yield tuple(read)
            return
        for box in boxes:
            if box not in read_set and preds[box] <= read_set:
                read.append(box)
                read_set.add(box)
                yield from extend()
                read.pop()
                read_set.remove(box)

    yield from extend()


def arrow_respecting_words(tab: ColoredTableau) -> list[ColoredWord]:
    words = {tuple(tab[box] for box in seq) for seq in arrow_respecting_extensions(tab)}
    return sorted(words, key=word_key)


def some_arrow_respecting_word(tab: ColoredTableau) -> ColoredWord:
    """Deterministic arrow-respecting reading word, built by repeatedly
    removing the southeast-most nontail removable box."""
    if not tab.boxes:
        return ()
    candidates = nontail_removable(tab)
    if not candidates:
        raise MalformedInputError("tableau has no nontail removable box")
    box = max(candidates)
    rest = {b: x for b, x in tab.entries.items() if b != box}
    return some_arrow_respecting_word(ColoredTableau(rest, tab.order)) + (tab[box],)


# ---------------------------------------------------------------------------
# conversion between shuffle orders

from .alphabet_words import covering_swap_path  # noqa: E402  (cycle-free; keeps imports grouped by topic)


def _ribbon_components(boxes: set[Box]) -> list[set[Box]]:
    remaining = set(boxes)
    components = []
    while remaining:
        seed = remaining.pop()
        component = {seed}
        frontier = [seed]
        while frontier:
            r, c = frontier.pop()
            for nbr in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nbr in remaining:
                    remaining.remove(nbr)
                    component.add(nbr)
                    frontier.append(nbr)
        components.append(component)
    return components


def _refill_component(component: set[Box], entries: dict[Box, Letter], b: Letter, abar: Letter) -> None:
    """Refill one ribbon component for the swapped order, in place.

    If the northeast end holds the unbarred letter, every copy of it drops to
    the bottom of its column; otherwise every copy moves one step right in
    its row.
    """
    degree = {
        box: sum(1 for nbr in ((box[0] - 1, box[1]), (box[0] + 1, box[1]), (box[0], box[1] - 1), (box[0], box[1] + 1)) if nbr in component)
        for box in component
    }
    assert all(deg <= 2 for deg in degree.values()), "letters adjacent in the order must fill a ribbon"
    ends = [box for box, deg in degree.items() if deg <= 1]
    ne_corner = min(ends, key=lambda box: (box[0], -box[1]))
    if entries[ne_corner] == b:
        columns: dict[int, list[Box]] = {}
        for box in component:
            columns.setdefault(box[1], []).append(box)
        for boxes in columns.values():
            boxes.sort()
            has_b = any(entries[box] == b for box in boxes)
            for box in boxes:
                entries[box] = abar
            if has_b:
                entries[boxes[-1]] = b
    else:
        rows: dict[int, list[Box]] = {}
        for box in component:
            rows.setdefault(box[0], []).append(box)
        for boxes in rows.values():
            boxes.sort()
            count = sum(1 for box in boxes if entries[box] == b)
            if count:
                assert entries[boxes[-1]] == abar, "row being shifted must end with the barred letter"
                entries[boxes[0]] = abar
                for box in boxes[1:]:
                    entries[box] = b


def _unique_refill(component: set[Box], entries: dict[Box, Letter], b: Letter, abar: Letter, target: ShuffleOrder) -> None:
    """Refill one component with the same letter counts, compatible with the
    target order; the filling is unique and this asserts it."""
    boxes = sorted(component)
    want_b = sum(1 for box in boxes if entries[box] == b)
    assignment: dict[Box, Letter] = {}
    solutions: list[dict[Box, Letter]] = []

    def fill(i: int, used_b: int) -> None:
        if want_b - used_b > len(boxes) - i:
            return
        if i == len(boxes):
            if used_b == want_b:
                solutions.append(dict(assignment))
            return
        r, c = boxes[i]
        west = assignment.get((r, c - 1))
        north = assignment.get((r - 1, c))
        for x in (b, abar):
            if x == b and used_b == want_b:
                continue
            if west is not None and not target.lerow(west, x):
                continue
            if north is not None and not target.lecol(north, x):
                continue
            assignment[(r, c)] = x
            fill(i + 1, used_b + (x == b))
            del assignment[(r, c)]

    fill(0, 0)
    assert len(solutions) == 1, "ribbon refill is not unique"
    entries.update(solutions[0])


def convert_step(tab: ColoredTableau, target: ShuffleOrder, b: Letter, abar: Letter, forward: bool = True) -> ColoredTableau:
    """Convert across one covering swap.

    In the defining direction (b just below a-bar becomes a-bar just below b)
    the two shift rules apply; the inverse swap is resolved through the
    uniqueness of the compatible refill.
    """
    entries = dict(tab.entries)
    ribbon = {box for box, x in entries.items() if x == b or x == abar}
    for component in _ribbon_components(ribbon):
        if forward:
            _refill_component(component, entries, b, abar)
        else:
            _unique_refill(component, entries, b, abar, target)
    return ColoredTableau(entries, target)


def convert(tab: ColoredTableau, frm: ShuffleOrder, to: ShuffleOrder) -> ColoredTableau:
    """Haiman's ribbon-refilling bijection between colored tableaux for two orders."""
    if frm.N != to.N:
        raise InvalidParameterError("orders are over different alphabets")
    if tab.order != frm:
        raise InvalidParameterError("tableau does not carry the source order")
    result = tab
    for before, nxt, b, abar in covering_swap_path(frm, to):
        result = convert_step(result, nxt, b, abar, forward=before.lt(b, abar))
    return result


# ---------------------------------------------------------------------------
# ordinary (uncolored) tableaux: superstandard fillings and RSK

IntRows = tuple[tuple[int, ...], ...]


def superstandard(lam: Sequence[int]) -> IntRows:
    """Rows labeled consecutively left to right, top to bottom."""
    lam = check_partition(lam)
    rows = []
    nxt = 1
    for part in lam:
        rows.append(tuple(range(nxt, nxt + part)))
        nxt += part
    return tuple(rows)


def is_superstandard_ssyt(rows: Sequence[Sequence[int]]) -> bool:
    """Row i filled entirely with the value i."""
    return all(all(x == i + 1 for x in row) for i, row in enumerate(rows))


def ordinary_rsk(word: Sequence[int]) -> tuple[IntRows, IntRows]:
    """Row insertion with recording tableau."""
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            bump = None
            for i, y in enumerate(row):
                if y > x:
                    bump = i
                    break
            if bump is None:
                row.append(x)
                q_rows[r].append(step)
                break
            row[bump], x = x, row[bump]
            r += 1
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


def ordinary_insertion_tableau(word: Sequence[int]) -> IntRows:
    return ordinary_rsk(word)[0]


def inverse_rsk(p_rows: IntRows, q_rows: IntRows) -> tuple[int, ...]:
    """Recover the word inserting to P with recording tableau Q."""
    rows = [list(row) for row in p_rows]
    positions = {value: (r, c) for r, row in enumerate(q_rows) for c, value in enumerate(row)}
    word = []
    for step in range(len(positions), 0, -1):
        r, c = positions[step]
        x = rows[r].pop(c)
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            # rightmost entry smaller than x comes out
            i = max(j for j, y in enumerate(row) if y < x)
            row[i], x = x, row[i]
        word.append(x)
    if any(row for row in rows):
        raise InvalidParameterError("recording tableau does not match the insertion tableau")
    return tuple(reversed(word))


def standard_tableaux(lam: Sequence[int]) -> Iterator[IntRows]:
    """All standard Young tableaux of the given shape."""
    lam = check_partition(lam) if lam else ()
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def fill(value: int) -> Iterator[IntRows]:
        if value > n:
            yield tuple(tuple(row) for row in rows)
            return
        for r, row in enumerate(rows):
            if len(row) < lam[r] and (r == 0 or len(rows[r - 1]) > len(row)):
                row.append(value)
                yield from fill(value + 1)
                row.pop()

    yield from fill(1)
