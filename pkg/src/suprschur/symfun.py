"""Fundamental quasisymmetric functions, Schur expansions, and word conversion.

The Schur expansion oracle works in exactly n = degree variables, where the
Schur polynomials of that degree are linearly independent; their monomial
expansions come from semistandard tableau enumeration, so the oracle is
independent of the tableau-counting route it is used to check.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .alphabet_words import (
    ColoredWord,
    Letter,
    ShuffleOrder,
    covering_swap_path,
    descent_set,
    word_key,
)
from .errors import InvalidParameterError, NotSymmetricError
from .tableaux import check_partition, partitions_of

Exponents = tuple[int, ...]
SymFunc = dict[tuple[int, ...], int]  # partition -> coefficient in the Schur basis


class QSymMonomialVector:
    """A polynomial of fixed degree in finitely many variables, stored as a
    map from exponent vectors to integer coefficients."""

    __slots__ = ("degree", "nvars", "coeffs")

    def __init__(self, degree: int, nvars: int, coeffs: Mapping[Exponents, int] | None = None):
        self.degree = degree
        self.nvars = nvars
        self.coeffs: dict[Exponents, int] = {}
        for exps, c in (coeffs or {}).items():
            if c:
                if len(exps) != nvars or sum(exps) != degree:
                    raise InvalidParameterError("exponent vector does not match degree/variables")
                self.coeffs[exps] = c

    def add_inplace(self, other: "QSymMonomialVector", scale: int = 1) -> None:
        if (other.degree, other.nvars) != (self.degree, self.nvars):
            raise InvalidParameterError("degree/variable mismatch")
        for exps, c in other.coeffs.items():
            new = self.coeffs.get(exps, 0) + scale * c
            if new:
                self.coeffs[exps] = new
            else:
                self.coeffs.pop(exps, None)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QSymMonomialVector)
            and self.degree == other.degree
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def table(self) -> list[tuple[Exponents, int]]:
        return sorted(self.coeffs.items(), reverse=True)


@lru_cache(maxsize=None)
def fundamental_qsym(descents: frozenset[int], degree: int, nvars: int) -> QSymMonomialVector:
    """Gessel's fundamental quasisymmetric function for a descent set.

    Sums x_{i_1}...x_{i_t} over weakly increasing index sequences that step
    strictly at every descent position.
    """
    if any(not 1 <= pos <= degree - 1 for pos in descents):
        raise InvalidParameterError("descents must lie between 1 and degree-1")
    coeffs: dict[Exponents, int] = {}
    indices = [0] * degree

    def rec(pos: int) -> None:
        if pos == degree:
            exps = [0] * nvars
            for i in indices:
                exps[i] += 1
            key = tuple(exps)
            coeffs[key] = coeffs.get(key, 0) + 1
            return
        lo = 0 if pos == 0 else indices[pos - 1] + (1 if pos in descents else 0)
        for i in range(lo, nvars):
            indices[pos] = i
            rec(pos + 1)

    rec(0)
    return QSymMonomialVector(degree, nvars, coeffs)


def F_of_poly(terms: Mapping[ColoredWord, int], order: ShuffleOrder, nvars: int | None = None) -> QSymMonomialVector:
    """Sum of fundamental quasisymmetric functions over the descent sets of
    the support, with the given integer weights."""
    lengths = {len(w) for w in terms}
    if len(lengths) > 1:
        raise InvalidParameterError("all words must have the same length")
    degree = lengths.pop() if lengths else 0
    if nvars is None:
        nvars = max(degree, 1)
    out = QSymMonomialVector(degree, nvars)
    for w, c in terms.items():
        out.add_inplace(fundamental_qsym(descent_set(w, order), degree, nvars), c)
    return out


def F_of_set(words: Iterable[ColoredWord], order: ShuffleOrder, nvars: int | None = None) -> QSymMonomialVector:
    return F_of_poly({w: 1 for w in words}, order, nvars)


def is_symmetric(vec: QSymMonomialVector) -> bool:
    """Invariance of coefficients under sorting the exponent vector."""
    canonical: dict[Exponents, int] = {}
    for exps, c in vec.coeffs.items():
        key = tuple(sorted(exps, reverse=True))
        if canonical.setdefault(key, c) != c:
            return False
    for key, c in canonical.items():
        orbit = set(_rearrangements(key, vec.nvars))
        for exps in orbit:
            if vec.coeffs.get(exps, 0) != c:
                return False
    return True


def _rearrangements(exps: Exponents, nvars: int):
    parts = [e for e in exps if e]
    slots = list(range(nvars))

    def rec(remaining: list[int], free: list[int]):
        if not remaining:
            yield tuple(free)
            return
        seen = set()
        for i, e in enumerate(remaining):
            if e in seen:
                continue
            seen.add(e)
            for pos in range(len(free)):
                if free[pos] == 0:
                    free[pos] = e
                    yield from rec(remaining[:i] + remaining[i + 1:], free)
                    free[pos] = 0

    yield from rec(parts, [0] * nvars)


@lru_cache(maxsize=None)
def schur_monomials(nu: tuple[int, ...], nvars: int) -> dict[Exponents, int]:
    """Monomial expansion of the Schur polynomial by semistandard tableau
    enumeration (Kostka numbers)."""
    nu = check_partition(nu) if nu else ()
    coeffs: dict[Exponents, int] = {}
    rows = len(nu)
    if rows > nvars:
        return {}
    if not nu:
        return {(0,) * nvars: 1}
    tableau = [[0] * part for part in nu]
    boxes = [(r, c) for r, part in enumerate(nu) for c in range(part)]

    def rec(i: int) -> None:
        if i == len(boxes):
            exps = [0] * nvars
            for row in tableau:
                for v in row:
                    exps[v - 1] += 1
            key = tuple(exps)
            coeffs[key] = coeffs.get(key, 0) + 1
            return
        r, c = boxes[i]
        lo = tableau[r][c - 1] if c else 1
        lo = max(lo, tableau[r - 1][c] + 1 if r else 1)
        for v in range(lo, nvars + 1):
            tableau[r][c] = v
            rec(i + 1)
        tableau[r][c] = 0

    rec(0)
    return coeffs


def schur_expand(vec: QSymMonomialVector) -> SymFunc:
    """Expand a symmetric monomial vector in Schur polynomials by peeling
    dominance-leading terms; exact and unique when nvars >= degree."""
    if vec.nvars < vec.degree and vec.degree > 0:
        raise InvalidParameterError("need at least as many variables as the degree")
    if not is_symmetric(vec):
        raise NotSymmetricError("vector is not symmetric")
    residue = dict(vec.coeffs)
    out: SymFunc = {}
    while residue:
        lead = max(tuple(sorted(exps, reverse=True)) for exps in residue)
        nu = tuple(part for part in lead if part)
        coeff = residue[lead]
        out[nu] = coeff
        for exps, c in schur_monomials(nu, vec.nvars).items():
            new = residue.get(exps, 0) - coeff * c
            if new:
                residue[exps] = new
            else:
                residue.pop(exps, None)
    return {nu: c for nu, c in out.items() if c}


def schur_expand_by_tableaux(words: Iterable[ColoredWord], order: ShuffleOrder) -> SymFunc:
    """Coefficient of each Schur function as a count of colored tableaux
    whose diagonal reading word lies in the set."""
    from .tableaux import enumerate_tableaux, sqread

    pool = set(words)
    if not pool:
        return {}
    lengths = {len(w) for w in pool}
    if len(lengths) > 1:
        raise InvalidParameterError("all words must have the same length")
    degree = lengths.pop()
    top = max((x for w in pool for x in w), key=order.rank)
    out: SymFunc = {}
    for nu in partitions_of(degree):
        count = sum(1 for T in enumerate_tableaux(nu, order, top) if sqread(T) in pool)
        if count:
            out[nu] = count
    return out


def symfunc_str(f: SymFunc) -> str:
    if not f:
        return "0"
    bits = []
    for nu in sorted(f, reverse=True):
        c = f[nu]
        label = "s[" + ",".join(map(str, nu)) + "]"
        bits.append(f"{'+' if c >= 0 else '-'}{abs(c)}*{label}")
    return " ".join(bits)


def symfunc_serialize(f: SymFunc) -> dict[str, int]:
    return {",".join(map(str, nu)): c for nu, c in sorted(f.items(), reverse=True)}


# ---------------------------------------------------------------------------
# word conversion


def word_convert_step(word: ColoredWord, b: Letter, abar: Letter, forward: bool = True) -> ColoredWord:
    """One covering swap: rotate each maximal run of b/a-bar letters once.

    The defining direction moves the unbarred letter up past the barred one
    and rotates right; the inverse swap undoes it by rotating left.
    """
    out = list(word)
    i = 0
    while i < len(out):
        if out[i] == b or out[i] == abar:
            j = i
            while j + 1 < len(out) and (out[j + 1] == b or out[j + 1] == abar):
                j += 1
            if forward:
                out[i : j + 1] = [out[j]] + out[i:j]
            else:
                out[i : j + 1] = out[i + 1 : j + 1] + [out[i]]
            i = j + 1
        else:
            i += 1
    return tuple(out)


def word_convert(word: ColoredWord, frm: ShuffleOrder, to: ShuffleOrder) -> ColoredWord:
    """Convert a colored word between shuffle orders, one covering swap at a
    time; preserves descent sets step by step."""
    out = tuple(word)
    for before, _, b, abar in covering_swap_path(frm, to):
        out = word_convert_step(out, b, abar, forward=before.lt(b, abar))
    return out
