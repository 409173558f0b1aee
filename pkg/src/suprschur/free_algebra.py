"""The free algebra on colored words, its relation ideals, and exact
degree-bounded membership tests.

All four relation families preserve the colored content of a word, so the
degree-m component of each ideal splits across contents.  Membership is
decided per content: the two-term relations are handled by a union-find on
the words of that content (their padded instances span exactly the vectors
with zero coefficient sum on every connected class), and the four-term
rotation relations project to short rows over the classes, which a small
exact elimination finishes off.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator, Sequence

from .alphabet_words import (
    ColoredWord,
    Letter,
    ShuffleOrder,
    double_down,
    down_arrow,
    letter_from_code,
    natural_order,
    parse_word,
    word_key,
    word_str,
)
from .errors import InvalidParameterError, ResourceLimitError

DEFAULT_BUDGET = 200_000


def monomial_budget() -> int:
    """Largest number of monomials handled in one degree/content component."""
    return int(os.environ.get("SUPRSCHUR_BUDGET", DEFAULT_BUDGET))


class NCPoly:
    """Finitely supported integer combination of colored words."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[ColoredWord, int] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def from_word(cls, word: ColoredWord, coeff: int = 1) -> "NCPoly":
        return cls({tuple(word): coeff})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NCPoly(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, int):
            return NCPoly({w: c * other for w, c in self.terms.items()})
        out: dict[ColoredWord, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NCPoly(out)

    def __rmul__(self, other: int) -> "NCPoly":
        return self * other

    def pairing(self, other: "NCPoly") -> int:
        """Bilinear form for which the colored words are orthonormal."""
        small, large = sorted((self.terms, other.terms), key=len)
        return sum(c * large.get(w, 0) for w, c in small.items())

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) > 1:
            raise InvalidParameterError("polynomial is not homogeneous")
        return degs.pop() if degs else 0

    def content_split(self) -> dict[tuple[int, ...], dict[ColoredWord, int]]:
        out: dict[tuple[int, ...], dict[ColoredWord, int]] = {}
        for w, c in self.terms.items():
            key = tuple(sorted(x.code for x in w))
            out.setdefault(key, {})[w] = c
        return out

    def support(self) -> list[ColoredWord]:
        return sorted(self.terms, key=word_key)

    def to_text(self) -> str:
        lines = []
        for w in self.support():
            c = self.terms[w]
            lines.append(f"{'+' if c >= 0 else '-'}{abs(c)} * {word_str(w)}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "NCPoly":
        terms: dict[ColoredWord, int] = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            coeff_part, _, word_part = line.partition("*")
            word = parse_word(word_part)
            terms[word] = terms.get(word, 0) + int(coeff_part.replace(" ", ""))
        return cls(terms)

    def __repr__(self) -> str:
        return f"NCPoly({self.to_text()!r})" if self.terms else "NCPoly(0)"


# ---------------------------------------------------------------------------
# relation ideals

FAMILIES = ("plac", "kron", "kronknuth", "jshuffle")


@dataclass(frozen=True)
class IdealSpec:
    family: str
    N: int
    order: ShuffleOrder | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameterError(f"unknown ideal family {self.family!r}")
        if (self.family == "plac") != (self.order is not None):
            raise InvalidParameterError("exactly the plactic family takes an order")
        if self.order is not None and self.order.N != self.N:
            raise InvalidParameterError("order does not match alphabet size")

    def key(self) -> tuple:
        return (self.family, self.N, self.order.key() if self.order else None)

    def name(self) -> str:
        if self.family == "plac":
            return "plac-natural" if self.order == natural_order(self.N) else "plac-bigbar"
        return self.family


def plac_ideal(order: ShuffleOrder) -> IdealSpec:
    return IdealSpec("plac", order.N, order)


def kron_ideal(N: int) -> IdealSpec:
    return IdealSpec("kron", N)


def kronknuth_ideal(N: int) -> IdealSpec:
    return IdealSpec("kronknuth", N)


def jshuffle_ideal(N: int) -> IdealSpec:
    return IdealSpec("jshuffle", N)


def parse_ideal(name: str, N: int) -> IdealSpec:
    from .alphabet_words import big_bar_order

    table = {
        "plac-natural": lambda: plac_ideal(natural_order(N)),
        "plac-bigbar": lambda: plac_ideal(big_bar_order(N)),
        "kron": lambda: kron_ideal(N),
        "kronknuth": lambda: kronknuth_ideal(N),
        "jshuffle": lambda: jshuffle_ideal(N),
    }
    if name not in table:
        raise InvalidParameterError(f"unknown ideal {name!r} (expected one of {sorted(table)})")
    return table[name]()


def _letters(N: int) -> list[Letter]:
    return [letter_from_code(c) for c in range(2 * N)]


def _super_knuth_doubles(order: ShuffleOrder) -> list[tuple[ColoredWord, ColoredWord]]:
    pairs = []
    letters = order.letters
    for y in letters:
        if not y.barred:
            pairs.extend(((y, y, x), (y, x, y)) for x in letters if order.lt(x, y))
            pairs.extend(((z, y, y), (y, z, y)) for z in letters if order.lt(y, z))
        else:
            pairs.extend(((y, y, z), (y, z, y)) for z in letters if order.lt(y, z))
            pairs.extend(((x, y, y), (y, x, y)) for x in letters if order.lt(x, y))
    return pairs


def _knuth_triples(order: ShuffleOrder, min_gap: int | None = None) -> list[tuple[ColoredWord, ColoredWord]]:
    """xzy = zxy and yxz = yzx for x < y < z, optionally with x below the
    natural predecessor of the predecessor of z."""
    pairs = []
    letters = order.letters
    for i, x in enumerate(letters):
        for j in range(i + 1, len(letters)):
            y = letters[j]
            for k in range(j + 1, len(letters)):
                z = letters[k]
                if min_gap is not None and z.code - x.code < min_gap:
                    continue
                pairs.append(((x, z, y), (z, x, y)))
                pairs.append(((y, x, z), (y, z, x)))
    return pairs


def _far_pairs(N: int) -> list[tuple[ColoredWord, ColoredWord]]:
    out = []
    for x in _letters(N):
        for z in _letters(N):
            if z.code - x.code >= 3:
                out.append(((x, z), (z, x)))
    return out


def _mixed_pairs(N: int) -> list[tuple[ColoredWord, ColoredWord]]:
    out = []
    for x in _letters(N):
        for z in _letters(N):
            if not x.barred and z.barred:
                out.append(((x, z), (z, x)))
    return out


def binary_pairs(spec: IdealSpec) -> list[tuple[ColoredWord, ColoredWord]]:
    """All two-term generators of the ideal, as (left word, right word)."""
    if spec.family == "plac":
        return _super_knuth_doubles(spec.order) + _knuth_triples(spec.order)
    nat = natural_order(spec.N)
    if spec.family == "kron":
        return _super_knuth_doubles(nat) + _far_pairs(spec.N)
    if spec.family == "kronknuth":
        return _super_knuth_doubles(nat) + _knuth_triples(nat, min_gap=3)
    # jshuffle: commute every unbarred letter past every barred one, plus far pairs
    seen = set()
    pairs = []
    for pair in _super_knuth_doubles(nat) + _far_pairs(spec.N) + _mixed_pairs(spec.N):
        key = frozenset(pair)
        if key not in seen:
            seen.add(key)
            pairs.append(pair)
    return pairs


def rotation_triples(spec: IdealSpec) -> list[tuple[Letter, Letter, Letter]]:
    """Triples (x, y, z) occupying three consecutive natural-order positions."""
    if spec.family not in ("kron", "kronknuth"):
        return []
    letters = _letters(spec.N)
    return [tuple(letters[k : k + 3]) for k in range(2 * spec.N - 2)]


def _rotation_poly(x: Letter, y: Letter, z: Letter) -> NCPoly:
    return NCPoly({(x, z, y): 1, (z, x, y): -1, (y, x, z): -1, (y, z, x): 1})


def generator_polys(spec: IdealSpec) -> list[NCPoly]:
    gens = [NCPoly({w1: 1, w2: -1}) for w1, w2 in binary_pairs(spec)]
    gens.extend(_rotation_poly(*triple) for triple in rotation_triples(spec))
    return gens


@lru_cache(maxsize=None)
def _binary_window_map(spec_key, family: str, N: int, order_key) -> dict[ColoredWord, tuple[ColoredWord, ...]]:
    del spec_key  # the remaining arguments reconstruct the spec; key kept for clarity
    if family == "plac":
        order = ShuffleOrder(tuple(letter_from_code(c) for c in order_key))
        spec = plac_ideal(order)
    else:
        spec = IdealSpec(family, N)
    moves: dict[ColoredWord, list[ColoredWord]] = {}
    for w1, w2 in binary_pairs(spec):
        moves.setdefault(w1, []).append(w2)
        moves.setdefault(w2, []).append(w1)
    return {w: tuple(ps) for w, ps in moves.items()}


def binary_window_map(spec: IdealSpec) -> dict[ColoredWord, tuple[ColoredWord, ...]]:
    return _binary_window_map(spec.key(), spec.family, spec.N, spec.order.key() if spec.order else None)


def _is_rotation_window(window: ColoredWord) -> tuple[Letter, Letter, Letter] | None:
    """The consecutive triple (x, y, z) when the window is one of the four
    rotation arrangements, else None."""
    codes = sorted(x.code for x in window)
    if len(set(codes)) != 3 or codes[2] - codes[0] != 2:
        return None
    x, y, z = (letter_from_code(c) for c in codes)
    if window in ((x, y, z), (z, y, x)):
        return None
    return x, y, z


def multiset_words(letters: Sequence[Letter]) -> Iterator[ColoredWord]:
    """Distinct arrangements of a letter multiset, lexicographic by code."""
    pool = sorted(letters, key=lambda x: x.code)
    distinct = []
    counts = []
    for x in pool:
        if distinct and distinct[-1] == x:
            counts[-1] += 1
        else:
            distinct.append(x)
            counts.append(1)
    word: list[Letter] = []

    def rec(remaining: int) -> Iterator[ColoredWord]:
        if remaining == 0:
            yield tuple(word)
            return
        for i, x in enumerate(distinct):
            if counts[i]:
                counts[i] -= 1
                word.append(x)
                yield from rec(remaining - 1)
                word.pop()
                counts[i] += 1

    yield from rec(len(pool))


def _content_size(codes: Sequence[int]) -> int:
    size = factorial(len(codes))
    mult: dict[int, int] = {}
    for c in codes:
        mult[c] = mult.get(c, 0) + 1
    for m in mult.values():
        size //= factorial(m)
    return size


class _ContentSpace:
    """Exact model of one content component of U modulo an ideal."""

    def __init__(self, spec: IdealSpec, codes: tuple[int, ...]):
        budget = monomial_budget()
        size = _content_size(codes)
        if size > budget:
            raise ResourceLimitError(
                f"content component has {size} monomials, over the budget of {budget}"
                " (raise SUPRSCHUR_BUDGET to proceed)",
                required=size,
            )
        letters = [letter_from_code(c) for c in codes]
        self.words = list(multiset_words(letters))
        self.index = {w: i for i, w in enumerate(self.words)}
        parent = list(range(len(self.words)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a: int, b: int) -> None:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        moves = binary_window_map(spec)
        for wi, w in enumerate(self.words):
            for i in range(len(w) - 1):
                for width in (2, 3):
                    if i + width > len(w):
                        continue
                    for partner in moves.get(w[i : i + width], ()):
                        union(wi, self.index[w[:i] + partner + w[i + width:]])
        roots: dict[int, int] = {}
        self.class_of = []
        for i in range(len(self.words)):
            root = find(i)
            self.class_of.append(roots.setdefault(root, len(roots)))
        self.num_classes = len(roots)

        # project the rotation relations onto the classes and echelonize
        self._pivots: dict[int, dict[int, Fraction]] = {}
        if rotation_triples(spec):
            seen = set()
            for w in self.words:
                for i in range(len(w) - 2):
                    triple = _is_rotation_window(w[i : i + 3])
                    if triple is None:
                        continue
                    key = (i, w[:i], w[i + 3:])
                    if key in seen:
                        continue
                    seen.add(key)
                    x, y, z = triple
                    row: dict[int, Fraction] = {}
                    for window, sign in (((x, z, y), 1), ((z, x, y), -1), ((y, x, z), -1), ((y, z, x), 1)):
                        cls = self.class_of[self.index[w[:i] + window + w[i + 3:]]]
                        row[cls] = row.get(cls, Fraction(0)) + sign
                    self._add_row({c: v for c, v in row.items() if v})

    def _add_row(self, row: dict[int, Fraction]) -> None:
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                inv = 1 / row[lead]
                self._pivots[lead] = {c: v * inv for c, v in row.items()}
                return
            factor = row[lead]
            for c, v in pivot.items():
                new = row.get(c, Fraction(0)) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)

    def contains(self, component: dict[ColoredWord, int]) -> bool:
        row: dict[int, Fraction] = {}
        for w, coeff in component.items():
            cls = self.class_of[self.index[w]]
            new = row.get(cls, Fraction(0)) + coeff
            if new:
                row[cls] = new
            else:
                row.pop(cls, None)
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return False
            factor = row[lead]
            for c, v in pivot.items():
                new = row.get(c, Fraction(0)) - factor * v
                if new:
                    row[c] = new
                else:
                    row.pop(c, None)
        return True


_content_cache: dict[tuple, _ContentSpace] = {}


def _content_space(spec: IdealSpec, codes: tuple[int, ...]) -> _ContentSpace:
    key = (spec.key(), codes)
    space = _content_cache.get(key)
    if space is None:
        space = _content_cache[key] = _ContentSpace(spec, codes)
    return space


def ideal_contains(spec: IdealSpec, poly: NCPoly) -> bool:
    """Exact membership of a homogeneous polynomial in the degree component
    of the ideal, decided content by content."""
    if not poly:
        return True
    poly.degree()  # raises on non-homogeneous input
    return all(
        _content_space(spec, codes).contains(component)
        for codes, component in poly.content_split().items()
    )


def congruent(spec: IdealSpec, f: NCPoly, g: NCPoly) -> bool:
    return ideal_contains(spec, f - g)


def perp_violation(spec: IdealSpec, gamma: NCPoly):
    """A padded generator with nonzero pairing against gamma, or None.

    Only instances whose support meets the support of gamma can pair
    nonzero, so it is enough to scan windows of the support words.
    """
    moves = binary_window_map(spec)
    has_rotations = bool(rotation_triples(spec))
    terms = gamma.terms
    for w in gamma.support():
        for i in range(len(w)):
            for width in (2, 3):
                if i + width > len(w):
                    continue
                window = w[i : i + width]
                for partner in moves.get(window, ()):
                    other = w[:i] + partner + w[i + width:]
                    if terms.get(w, 0) != terms.get(other, 0):
                        gen = NCPoly({window: 1, partner: -1})
                        return {"generator": gen, "left": w[:i], "right": w[i + width:], "pair": (w, other)}
            if has_rotations and i + 3 <= len(w):
                triple = _is_rotation_window(w[i : i + 3])
                if triple is None:
                    continue
                x, y, z = triple
                total = 0
                for window, sign in (((x, z, y), 1), ((z, x, y), -1), ((y, x, z), -1), ((y, z, x), 1)):
                    total += sign * terms.get(w[:i] + window + w[i + 3:], 0)
                if total:
                    return {"generator": _rotation_poly(x, y, z), "left": w[:i], "right": w[i + 3:], "pair": None}
    return None


def perp_contains(spec: IdealSpec, gamma: NCPoly) -> bool:
    """Whether gamma pairs to zero with the whole ideal."""
    return perp_violation(spec, gamma) is None


def ideal_degree_basis(spec: IdealSpec, degree: int) -> list[NCPoly]:
    """Spanning set of the degree component: every padding of every generator."""
    if degree < 2:
        raise InvalidParameterError("generators start in degree 2")
    total = (2 * spec.N) ** degree
    budget = monomial_budget()
    if total > budget:
        raise ResourceLimitError(
            f"degree component has {total} monomials, over the budget of {budget}"
            " (raise SUPRSCHUR_BUDGET to proceed)",
            required=total,
        )
    letters = _letters(spec.N)
    out = []
    for gen in generator_polys(spec):
        k = gen.degree()
        if k > degree:
            continue
        for left_len in range(degree - k + 1):
            for left in product(letters, repeat=left_len):
                lead = NCPoly.from_word(left)
                for right in product(letters, repeat=degree - k - left_len):
                    out.append(lead * gen * NCPoly.from_word(right))
    return out


# ---------------------------------------------------------------------------
# noncommutative super elementary / homogeneous / Schur functions


def _chains(letters_desc: Sequence[Letter], k: int, step_ok) -> Iterator[ColoredWord]:
    chain: list[Letter] = []

    def rec() -> Iterator[ColoredWord]:
        if len(chain) == k:
            yield tuple(chain)
            return
        for z in letters_desc:
            if not chain or step_ok(chain[-1], z):
                chain.append(z)
                yield from rec()
                chain.pop()

    yield from rec()


_e_cache: dict[tuple, NCPoly] = {}


def e_k_order(k: int, order: ShuffleOrder) -> NCPoly:
    """Sum of decreasing chains, allowing repeats only at barred letters."""
    if k < 0:
        return NCPoly()
    if k == 0:
        return NCPoly.one()
    key = ("e", k, order.key())
    if key not in _e_cache:
        desc = list(reversed(order.letters))
        step = lambda prev, z: order.gecol(prev, z)  # noqa: E731
        _e_cache[key] = NCPoly({w: 1 for w in _chains(desc, k, step)})
    return _e_cache[key]


def e_k(k: int, N: int) -> NCPoly:
    return e_k_order(k, natural_order(N))


def e_k_subset(k: int, letters: Iterable[Letter]) -> NCPoly:
    """Like e_k but with letters drawn from a subset, in the natural order."""
    if k < 0:
        return NCPoly()
    if k == 0:
        return NCPoly.one()
    pool = tuple(sorted(set(letters), key=lambda x: x.code, reverse=True))
    key = ("eS", k, tuple(x.code for x in pool))
    if key not in _e_cache:
        step = lambda prev, z: z.code < prev.code or (z == prev and z.barred)  # noqa: E731
        _e_cache[key] = NCPoly({w: 1 for w in _chains(pool, k, step)})
    return _e_cache[key]


def h_k_order(k: int, order: ShuffleOrder) -> NCPoly:
    """Sum of increasing chains, allowing repeats only at unbarred letters."""
    if k < 0:
        return NCPoly()
    if k == 0:
        return NCPoly.one()
    key = ("h", k, order.key())
    if key not in _e_cache:
        asc = list(order.letters)
        step = lambda prev, z: order.ledotrow(prev, z)  # noqa: E731
        _e_cache[key] = NCPoly({w: 1 for w in _chains(asc, k, step)})
    return _e_cache[key]


def h_k(k: int, N: int) -> NCPoly:
    return h_k_order(k, natural_order(N))


def J_nu(nu: Sequence[int], N: int, order: ShuffleOrder | None = None) -> NCPoly:
    """Noncommutative super Schur function via the signed sum over column sets."""
    from .tableaux import check_partition, conjugate

    nu = check_partition(nu) if nu else ()
    if order is None:
        order = natural_order(N)
    if not nu:
        return NCPoly.one()
    nuprime = conjugate(nu)
    t = nu[0]
    total = NCPoly()
    for pi in permutations(range(1, t + 1)):
        sign = _permutation_sign(pi)
        term = NCPoly.one()
        for j, pj in enumerate(pi, start=1):
            factor = e_k_order(nuprime[j - 1] + pj - j, order)
            if not factor:
                term = NCPoly()
                break
            term = term * factor
        total = total + (term * sign)
    return total


def _permutation_sign(pi: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(pi)
    for start in range(len(pi)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = pi[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


FlagValue = Letter | None  # None is the adjoined bottom element


def letters_at_most(flag: FlagValue, N: int) -> tuple[Letter, ...]:
    if flag is None:
        return ()
    return tuple(letter_from_code(c) for c in range(flag.code + 1))


def check_flag_tuple(flags: Sequence[FlagValue]) -> tuple[FlagValue, ...]:
    flags = tuple(flags)
    ranks = [-1 if f is None else f.code for f in flags]
    if any(a > b for a, b in zip(ranks, ranks[1:])):
        raise InvalidParameterError("flags must be weakly increasing")
    return flags


def J_augmented(
    alpha: Sequence[int],
    flags: Sequence[FlagValue],
    inserts: Sequence[ColoredWord],
    N: int,
) -> NCPoly:
    """Column-flagged super Schur function with words spliced between columns."""
    alpha = tuple(alpha)
    flags = tuple(flags)
    inserts = tuple(tuple(w) for w in inserts)
    l = len(alpha)
    if len(flags) != l:
        raise InvalidParameterError("alpha and flags must have equal length")
    if len(inserts) != max(l - 1, 0):
        raise InvalidParameterError("need one insert word per gap between columns")
    if l == 0:
        return NCPoly.one()
    pools = [letters_at_most(flag, N) for flag in flags]
    total = NCPoly()
    for pi in permutations(range(1, l + 1)):
        sign = _permutation_sign(pi)
        term = NCPoly.one()
        for j, pj in enumerate(pi, start=1):
            factor = e_k_subset(alpha[j - 1] + pj - j, pools[j - 1])
            if not factor:
                term = NCPoly()
                break
            term = term * factor
            if j < l and inserts[j - 1]:
                term = term * NCPoly.from_word(inserts[j - 1])
        if term:
            total = total + (term * sign)
    return total


def J_flagged(alpha: Sequence[int], flags: Sequence[FlagValue], N: int) -> NCPoly:
    """Eq-style column-flagged super Schur function J_alpha^n."""
    return J_augmented(alpha, flags, [()] * max(len(alpha) - 1, 0), N)
