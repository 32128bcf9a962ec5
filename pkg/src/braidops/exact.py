"""Exact rational substrate: truncated noncommutative series and linear solving.

Scalars are `fractions.Fraction` throughout; there is no floating point
anywhere in this package.  A noncommutative series is a finite map from
generator words (tuples of generator indices) to nonzero rationals, truncated
at a fixed total degree.  Equality of series is structural equality of the
normalized term maps.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

Word = tuple[int, ...]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class NCSeries:
    """Truncated series in noncommuting generators 0..alphabet-1.

    ``terms`` maps words (tuples of generator indices) to nonzero Fractions;
    words longer than ``degree`` are dropped on construction.
    """

    __slots__ = ("alphabet", "degree", "terms")

    def __init__(self, alphabet: int, degree: int, terms: Mapping[Word, Fraction] | None = None):
        assert alphabet >= 0 and degree >= 0
        self.alphabet = alphabet
        self.degree = degree
        clean: dict[Word, Fraction] = {}
        if terms:
            for word, coef in terms.items():
                word = tuple(word)
                if len(word) > degree:
                    continue
                assert all(0 <= g < alphabet for g in word), f"letter out of range in {word}"
                c = _as_fraction(coef)
                if c != 0:
                    acc = clean.get(word, Fraction(0)) + c
                    if acc == 0:
                        clean.pop(word, None)
                    else:
                        clean[word] = acc
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, alphabet: int, degree: int) -> "NCSeries":
        return cls(alphabet, degree)

    @classmethod
    def one(cls, alphabet: int, degree: int) -> "NCSeries":
        return cls(alphabet, degree, {(): Fraction(1)})

    @classmethod
    def generator(cls, alphabet: int, degree: int, g: int) -> "NCSeries":
        return cls(alphabet, degree, {(g,): Fraction(1)})

    # -- ring operations ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCSeries):
            return NotImplemented
        return (self.alphabet == other.alphabet and self.terms == other.terms)

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __add__(self, other: "NCSeries") -> "NCSeries":
        assert self.alphabet == other.alphabet, "alphabet mismatch"
        degree = min(self.degree, other.degree)
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w, Fraction(0)) + c
            if acc == 0:
                out.pop(w, None)
            else:
                out[w] = acc
        return NCSeries(self.alphabet, degree, out)

    def __neg__(self) -> "NCSeries":
        return NCSeries(self.alphabet, self.degree, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return self + (-other)

    def scale(self, c) -> "NCSeries":
        c = _as_fraction(c)
        if c == 0:
            return NCSeries.zero(self.alphabet, self.degree)
        return NCSeries(self.alphabet, self.degree, {w: c * v for w, v in self.terms.items()})

    def truncate(self, degree: int) -> "NCSeries":
        return NCSeries(self.alphabet, degree, {w: c for w, c in self.terms.items() if len(w) <= degree})

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def homogeneous_part(self, d: int) -> "NCSeries":
        return NCSeries(self.alphabet, self.degree, {w: c for w, c in self.terms.items() if len(w) == d})

    def max_stored_degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        return f"NCSeries(alphabet={self.alphabet}, degree={self.degree}, {len(self.terms)} terms)"


def series_mul(a: NCSeries, b: NCSeries, degree: int | None = None) -> NCSeries:
    """Product of truncated series; the coefficient of w sums a(u)b(v) over w = uv."""
    assert a.alphabet == b.alphabet, "alphabet mismatch"
    if degree is None:
        degree = min(a.degree, b.degree)
    assert degree <= min(a.degree, b.degree)
    out: dict[Word, Fraction] = {}
    for u, cu in a.terms.items():
        if len(u) > degree:
            continue
        room = degree - len(u)
        for v, cv in b.terms.items():
            if len(v) > room:
                continue
            w = u + v
            acc = out.get(w, Fraction(0)) + cu * cv
            if acc == 0:
                out.pop(w, None)
            else:
                out[w] = acc
    return NCSeries(a.alphabet, degree, out)


def series_exp(x: NCSeries, degree: int | None = None) -> NCSeries:
    """exp(x) truncated; requires zero constant term."""
    if degree is None:
        degree = x.degree
    if x.constant_term() != 0:
        raise ValueError("series_exp requires zero constant term")
    out = NCSeries.one(x.alphabet, degree)
    power = NCSeries.one(x.alphabet, degree)
    fact = 1
    for k in range(1, degree + 1):
        power = series_mul(power, x, degree)
        if power.is_zero():
            break
        fact *= k
        out = out + power.scale(Fraction(1, fact))
    return out


def series_inverse(g: NCSeries, degree: int | None = None) -> NCSeries:
    """Inverse of a series with constant term 1, via the geometric series."""
    if degree is None:
        degree = g.degree
    c0 = g.constant_term()
    if c0 != 1:
        raise ValueError("series_inverse expects constant term 1")
    h = NCSeries(g.alphabet, degree, {w: c for w, c in g.terms.items() if w != ()})
    # sum_k (-h)^k, finite at this truncation
    out = NCSeries.one(g.alphabet, degree)
    power = NCSeries.one(g.alphabet, degree)
    neg_h = -h
    for _ in range(degree):
        power = series_mul(power, neg_h, degree)
        if power.is_zero():
            break
        out = out + power
    return out


# -- exact linear algebra ---------------------------------------------------


class LinearSystem:
    """Sparse rows (coefficient map over column indices, rhs)."""

    def __init__(self, num_columns: int):
        assert num_columns >= 0
        self.num_columns = num_columns
        self.rows: list[tuple[dict[int, Fraction], Fraction]] = []

    def add_row(self, coeffs: Mapping[int, Fraction], rhs) -> None:
        row = {j: _as_fraction(c) for j, c in coeffs.items() if c != 0}
        for j in row:
            assert 0 <= j < self.num_columns, f"column {j} out of range"
        self.rows.append((row, _as_fraction(rhs)))


class Solution:
    """Outcome of exact elimination: a particular solution and a nullspace basis."""

    def __init__(self, consistent: bool, particular: list[Fraction] | None, nullspace: list[list[Fraction]]):
        self.consistent = consistent
        self.particular = particular
        self.nullspace = nullspace

    @property
    def nullity(self) -> int:
        return len(self.nullspace)


def solve_exact(system: LinearSystem) -> Solution:
    """Gaussian elimination over Fraction.

    Returns a particular solution with all free coordinates set to zero, plus a
    basis of the homogeneous solution space.  Inconsistency is reported in the
    returned object; it is not an error.
    """
    n = system.num_columns
    rows = [(dict(r), b) for r, b in system.rows]
    # forward elimination, sparse rows kept reduced against chosen pivots
    pivots: dict[int, tuple[dict[int, Fraction], Fraction]] = {}

    def reduce_row(row: dict[int, Fraction], rhs: Fraction):
        changed = True
        while changed:
            changed = False
            for col in sorted(row):
                if col in pivots:
                    prow, prhs = pivots[col]
                    factor = row[col]
                    for j, c in prow.items():
                        acc = row.get(j, Fraction(0)) - factor * c
                        if acc == 0:
                            row.pop(j, None)
                        else:
                            row[j] = acc
                    rhs -= factor * prhs
                    changed = True
                    break
        return row, rhs

    inconsistent = False
    for row, rhs in rows:
        row, rhs = reduce_row(row, rhs)
        if not row:
            if rhs != 0:
                inconsistent = True
            continue
        lead = min(row)
        inv = Fraction(1) / row[lead]
        row = {j: c * inv for j, c in row.items()}
        rhs = rhs * inv
        # back-substitute into existing pivot rows
        for col, (prow, prhs) in list(pivots.items()):
            if lead in prow:
                factor = prow[lead]
                for j, c in row.items():
                    acc = prow.get(j, Fraction(0)) - factor * c
                    if acc == 0:
                        prow.pop(j, None)
                    else:
                        prow[j] = acc
                prhs -= factor * rhs
                pivots[col] = (prow, prhs)
        pivots[lead] = (row, rhs)

    if inconsistent:
        return Solution(False, None, [])

    free_cols = [j for j in range(n) if j not in pivots]
    particular = [Fraction(0)] * n
    for col, (row, rhs) in pivots.items():
        particular[col] = rhs  # free coordinates are zero
    nullspace = []
    for fc in free_cols:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for col, (row, rhs) in pivots.items():
            vec[col] = -row.get(fc, Fraction(0))
        nullspace.append(vec)
    return Solution(True, particular, nullspace)


# -- serialization -----------------------------------------------------------


def fraction_to_str(c: Fraction) -> str:
    c = _as_fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def fraction_from_str(s: str) -> Fraction:
    return Fraction(s)


def series_to_json(a: NCSeries) -> dict:
    items = sorted(a.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return {
        "alphabet": a.alphabet,
        "degree": a.degree,
        "terms": [{"coef": fraction_to_str(c), "word": list(w)} for w, c in items],
    }


def series_from_json(data: dict) -> NCSeries:
    terms = {tuple(t["word"]): fraction_from_str(t["coef"]) for t in data["terms"]}
    return NCSeries(int(data["alphabet"]), int(data["degree"]), terms)


def all_words(alphabet: int, length: int) -> Iterable[Word]:
    return itertools.product(range(alphabet), repeat=length)
