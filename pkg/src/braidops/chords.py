"""Truncated enveloping algebra of the infinitesimal braid relations.

Elements live in the tensor algebra on the generators t_ij (1 <= i < j <= r,
weight 1) modulo the two-sided ideal generated by

    [t_ij, t_kl]           for {i,j} and {k,l} disjoint,
    [t_ik, t_ij + t_jk]    for distinct i, j, k,

truncated above a fixed total degree N.  Normal forms are computed degreewise
against a cached reduced row echelon basis of the ideal's graded pieces over
the deglex-ordered word basis, so equality of elements is structural equality
of normal forms and everything stays exact.

Strand conventions: the strand index of a chord generator is the input label
it touches; operadic insertion at strand k doubles the strand into a block
(t_ik becomes a sum over the block) and multiplies by the shifted inserted
element on the right.  Restriction kills any monomial with a chord on the
removed strand.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .exact import NCSeries, series_exp, series_inverse, series_mul
from .trees import Tree, closed_labels, color, relabel_tree


def dk_generators(r: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]


def _gen_index(r: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(dk_generators(r))}


def _relations(r: int) -> list[dict[tuple[int, ...], Fraction]]:
    """Degree-2 generators of the relation ideal, as word vectors."""
    idx = _gen_index(r)
    rels = []

    def comm(a, b):
        return {(idx[a], idx[b]): Fraction(1), (idx[b], idx[a]): Fraction(-1)}

    pairs = dk_generators(r)
    for p1, p2 in itertools.combinations(pairs, 2):
        if not set(p1) & set(p2):
            rels.append(comm(p1, p2))
    for a, b, c in itertools.combinations(range(1, r + 1), 3):
        # [t_ab, t_ac + t_bc], rotated
        for lead, s1, s2 in (((a, b), (a, c), (b, c)),
                             ((a, c), (a, b), (b, c)),
                             ((b, c), (a, b), (a, c))):
            row: dict[tuple[int, ...], Fraction] = {}
            for other in (s1, s2):
                for w, cc in comm(lead, other).items():
                    row[w] = row.get(w, Fraction(0)) + cc
            rels.append({w: cc for w, cc in row.items() if cc != 0})
    return rels


# Observationally transparent cache: concurrent builders may race but compute
# identical rows, and reads after construction are safe.
_REDUCER_CACHE: dict[tuple[int, int], dict] = {}


def _reducer(r: int, d: int) -> dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]:
    """RREF rows of the ideal's degree-d piece, keyed by leading (max) word."""
    key = (r, d)
    cached = _REDUCER_CACHE.get(key)
    if cached is not None:
        return cached
    rows: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
    if d >= 2:
        g = len(dk_generators(r))
        rels = _relations(r)
        for left_len in range(d - 1):
            right_len = d - 2 - left_len
            for u in itertools.product(range(g), repeat=left_len):
                for v in itertools.product(range(g), repeat=right_len):
                    for rel in rels:
                        raw = {u + w + v: c for w, c in rel.items()}
                        _rref_insert(rows, raw)
    _REDUCER_CACHE[key] = rows
    return rows


def _rref_insert(rows: dict, row: dict) -> None:
    row = dict(row)
    while row:
        lead = max(row)
        pivot = rows.get(lead)
        if pivot is None:
            break
        c = row[lead]
        for w, pc in pivot.items():
            acc = row.get(w, Fraction(0)) - c * pc
            if acc == 0:
                row.pop(w, None)
            else:
                row[w] = acc
    if not row:
        return
    lead = max(row)
    inv = Fraction(1) / row[lead]
    row = {w: c * inv for w, c in row.items()}
    for other_lead, other in list(rows.items()):
        if lead in other:
            c = other[lead]
            for w, pc in row.items():
                acc = other.get(w, Fraction(0)) - c * pc
                if acc == 0:
                    other.pop(w, None)
                else:
                    other[w] = acc
    rows[lead] = row


def _reduce_terms(terms: dict, r: int) -> dict:
    out: dict[tuple[int, ...], Fraction] = {}
    by_degree: dict[int, dict] = {}
    for w, c in terms.items():
        by_degree.setdefault(len(w), {})[w] = c
    for d, vec in by_degree.items():
        reducer = _reducer(r, d)
        work = dict(vec)
        while work:
            w = max(work)
            c = work.pop(w)
            if c == 0:
                continue
            row = reducer.get(w)
            if row is None:
                acc = out.get(w, Fraction(0)) + c
                if acc == 0:
                    out.pop(w, None)
                else:
                    out[w] = acc
            else:
                for w2, c2 in row.items():
                    if w2 == w:
                        continue
                    work[w2] = work.get(w2, Fraction(0)) - c * c2
    return out


class DKElement:
    """Normal-form element of the truncated enveloping algebra on r strands."""

    __slots__ = ("strands", "degree", "series")

    def __init__(self, strands: int, degree: int, terms=None, _normalized=False):
        self.strands = strands
        self.degree = degree
        g = len(dk_generators(strands))
        series = NCSeries(g, degree, terms or {})
        if not _normalized:
            series = NCSeries(g, degree, _reduce_terms(series.terms, strands))
        self.series = series

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, r: int, degree: int) -> "DKElement":
        return cls(r, degree, {}, _normalized=True)

    @classmethod
    def one(cls, r: int, degree: int) -> "DKElement":
        return cls(r, degree, {(): Fraction(1)}, _normalized=True)

    @classmethod
    def generator(cls, r: int, degree: int, i: int, j: int) -> "DKElement":
        assert 1 <= i < j <= r, "generator indices out of range"
        idx = _gen_index(r)[(i, j)]
        return cls(r, degree, {(idx,): Fraction(1)})

    @classmethod
    def from_series(cls, r: int, series: NCSeries) -> "DKElement":
        return cls(r, series.degree, series.terms)

    # -- ring structure ---------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, DKElement) and self.strands == other.strands
                and self.series == other.series)

    def __hash__(self):
        return hash((self.strands, self.series))

    def __add__(self, other: "DKElement") -> "DKElement":
        assert self.strands == other.strands
        return DKElement.from_series(self.strands, self.series + other.series)

    def __sub__(self, other: "DKElement") -> "DKElement":
        return self + other.scale(-1)

    def scale(self, c) -> "DKElement":
        return DKElement(self.strands, self.degree, self.series.scale(c).terms, _normalized=True)

    def mul(self, other: "DKElement", degree: int | None = None) -> "DKElement":
        assert self.strands == other.strands
        prod = series_mul(self.series, other.series, degree)
        return DKElement(self.strands, prod.degree, prod.terms)

    def exp(self) -> "DKElement":
        return DKElement(self.strands, self.degree, series_exp(self.series).terms)

    def inverse(self) -> "DKElement":
        return DKElement(self.strands, self.degree, series_inverse(self.series).terms)

    def is_zero(self) -> bool:
        return self.series.is_zero()

    def constant_term(self) -> Fraction:
        return self.series.constant_term()

    def truncate(self, degree: int) -> "DKElement":
        return DKElement(self.strands, degree, self.series.truncate(degree).terms, _normalized=True)

    def homogeneous_part(self, d: int) -> "DKElement":
        return DKElement(self.strands, self.degree,
                         self.series.homogeneous_part(d).terms, _normalized=True)

    def __repr__(self):
        return f"DKElement({self.strands} strands, {format_dk(self)!r})"


def dk_normal_form(e: DKElement) -> DKElement:
    """Idempotent by construction; exposed for round-trip checks."""
    return DKElement(e.strands, e.degree, e.series.terms)


def dimension_of_degree(r: int, d: int) -> int:
    g = len(dk_generators(r))
    return g ** d - len(_reducer(r, d))


# -- operadic structure ----------------------------------------------------------


def dk_relabel(e: DKElement, images: dict[int, int]) -> DKElement:
    """Strand relabeling along a bijection."""
    pairs = dk_generators(e.strands)
    idx = _gen_index(e.strands)
    out = {}
    for w, c in e.series.terms.items():
        new = tuple(idx[tuple(sorted((images[pairs[l][0]], images[pairs[l][1]])))] for l in w)
        out[new] = out.get(new, Fraction(0)) + c
    return DKElement(e.strands, e.degree, out)


def dk_insert(u: DKElement, k: int, v: DKElement) -> DKElement:
    """Insertion of v at strand k: double the strand, then multiply by v shifted."""
    if not (1 <= k <= u.strands):
        raise ValueError("strand index out of range")
    r, s = u.strands, v.strands
    total = r + s - 1
    degree = min(u.degree, v.degree)
    pairs_u = dk_generators(r)
    idx_tot = _gen_index(total)

    def shifted(a: int) -> int:
        return a if a < k else a + s - 1

    gen_image: list[NCSeries] = []
    g_tot = len(dk_generators(total))
    for (a, b) in pairs_u:
        if a != k and b != k:
            gen_image.append(NCSeries.generator(g_tot, degree,
                                                idx_tot[(shifted(a), shifted(b))]))
        else:
            other = shifted(b if a == k else a)
            terms = {}
            for l in range(k, k + s):
                pair = (l, other) if l < other else (other, l)
                terms[(idx_tot[pair],)] = Fraction(1)
            gen_image.append(NCSeries(g_tot, degree, terms))

    out = NCSeries.zero(g_tot, degree)
    for w, c in u.series.terms.items():
        acc = NCSeries.one(g_tot, degree)
        for letter in w:
            acc = series_mul(acc, gen_image[letter])
        out = out + acc.scale(c)
    # shift v's strands into the block
    idx_v = dk_generators(s)
    vterms = {}
    for w, c in v.series.terms.items():
        new = tuple(idx_tot[(idx_v[l][0] + k - 1, idx_v[l][1] + k - 1)] for l in w)
        vterms[new] = vterms.get(new, Fraction(0)) + c
    vshift = NCSeries(g_tot, degree, vterms)
    return DKElement(total, degree, series_mul(out, vshift).terms)


def dk_restrict(e: DKElement, k: int) -> DKElement:
    """Delete strand k; monomials touching it are sent to zero."""
    if not (1 <= k <= e.strands):
        raise ValueError("strand index out of range")
    pairs = dk_generators(e.strands)
    idx_new = _gen_index(e.strands - 1)
    out = {}
    for w, c in e.series.terms.items():
        letters = []
        dead = False
        for l in w:
            a, b = pairs[l]
            if a == k or b == k:
                dead = True
                break
            letters.append(idx_new[(a if a < k else a - 1, b if b < k else b - 1)])
        if not dead:
            key = tuple(letters)
            out[key] = out.get(key, Fraction(0)) + c
    return DKElement(e.strands - 1, e.degree, out)


# -- coproduct and grouplikes ------------------------------------------------------


def dk_coproduct(e: DKElement) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction]:
    """Truncated coproduct with every generator primitive, factorwise-normalized."""
    raw: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
    for w, c in e.series.terms.items():
        npos = len(w)
        for bits in itertools.product((0, 1), repeat=npos):
            left = tuple(w[i] for i in range(npos) if bits[i] == 0)
            right = tuple(w[i] for i in range(npos) if bits[i] == 1)
            key = (left, right)
            raw[key] = raw.get(key, Fraction(0)) + c
    return _tensor_normalize(raw, e.strands)


def _tensor_normalize(tensor: dict, r: int) -> dict:
    stage: dict = {}
    for (w1, w2), c in tensor.items():
        for w1n, c1 in _reduce_terms({w1: c}, r).items():
            key = (w1n, w2)
            acc = stage.get(key, Fraction(0)) + c1
            if acc == 0:
                stage.pop(key, None)
            else:
                stage[key] = acc
    out: dict = {}
    for (w1, w2), c in stage.items():
        for w2n, c2 in _reduce_terms({w2: c}, r).items():
            key = (w1, w2n)
            acc = out.get(key, Fraction(0)) + c2
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
    return out


def tensor_square(g: DKElement, h: DKElement) -> dict:
    """g (x) h truncated at total degree, factorwise-normalized."""
    assert g.strands == h.strands and g.degree == h.degree
    out: dict = {}
    for w1, c1 in g.series.terms.items():
        for w2, c2 in h.series.terms.items():
            if len(w1) + len(w2) > g.degree:
                continue
            key = (w1, w2)
            acc = out.get(key, Fraction(0)) + c1 * c2
            if acc == 0:
                out.pop(key, None)
            else:
                out[key] = acc
    return _tensor_normalize(out, g.strands)


def grouplike_check(g: DKElement) -> bool:
    if g.constant_term() != 1:
        return False
    return dk_coproduct(g) == tensor_square(g, g)


# -- parenthesized chord morphisms --------------------------------------------------


class PaCDMorphism:
    """Morphism between parenthesized permutations carried by a chord element."""

    __slots__ = ("src", "tgt", "element")

    def __init__(self, src: Tree, tgt: Tree, element: DKElement):
        assert color(src) == "c" and color(tgt) == "c"
        m = len(closed_labels(src))
        assert len(closed_labels(tgt)) == m, "arity mismatch"
        assert element.strands == m
        self.src = src
        self.tgt = tgt
        self.element = element

    @classmethod
    def identity(cls, tree: Tree, degree: int) -> "PaCDMorphism":
        m = len(closed_labels(tree))
        return cls(tree, tree, DKElement.one(m, degree))

    def compose(self, other: "PaCDMorphism") -> "PaCDMorphism":
        """self then other."""
        assert self.tgt == other.src, "object mismatch"
        return PaCDMorphism(self.src, other.tgt, self.element.mul(other.element))

    def inverse(self) -> "PaCDMorphism":
        return PaCDMorphism(self.tgt, self.src, self.element.inverse())

    def equals(self, other: "PaCDMorphism") -> bool:
        return self.src == other.src and self.tgt == other.tgt and self.element == other.element


def pacd_insert(outer: PaCDMorphism, i: int, inner: PaCDMorphism) -> PaCDMorphism:
    from .trees import graft_closed

    return PaCDMorphism(graft_closed(outer.src, i, inner.src),
                        graft_closed(outer.tgt, i, inner.tgt),
                        dk_insert(outer.element, i, inner.element))


def pacd_relabel(mor: PaCDMorphism, closed_map: dict[int, int]) -> PaCDMorphism:
    return PaCDMorphism(relabel_tree(mor.src, None, closed_map),
                        relabel_tree(mor.tgt, None, closed_map),
                        dk_relabel(mor.element, closed_map))


# -- text and JSON -------------------------------------------------------------------


def format_dk(e: DKElement) -> str:
    """Chord monomial text, e.g. "t12*t13 - 1/24*t13*t12"."""
    from .exact import fraction_to_str

    if e.is_zero():
        return "0"
    pairs = dk_generators(e.strands)
    items = sorted(e.series.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    parts = []
    for w, c in items:
        mono = "*".join(f"t{pairs[l][0]}{pairs[l][1]}" for l in w)
        if not mono:
            body = fraction_to_str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{fraction_to_str(abs(c))}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def dk_to_json(e: DKElement) -> dict:
    from .exact import fraction_to_str

    pairs = dk_generators(e.strands)
    items = sorted(e.series.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
    return {"strands": e.strands, "degree": e.degree,
            "terms": [{"coef": fraction_to_str(c), "word": [list(pairs[l]) for l in w]}
                      for w, c in items]}


def dk_from_json(data: dict) -> DKElement:
    r = int(data["strands"])
    idx = _gen_index(r)
    terms = {}
    for t in data["terms"]:
        w = tuple(idx[tuple(pair)] for pair in t["word"])
        terms[w] = Fraction(t["coef"])
    return DKElement(r, int(data["degree"]), terms)
