"""Split-form morphisms [u, x, mu] and their shifted payloads.

An element holds a terrestrial reparenthesization pair u, an aerial carrier x
(a braid morphism, or a chord-series morphism in the chord variant), and a
shuffle part mu recording both interleaved endpoint trees.  Elements are kept
in a canonical coinvariant representative: u is identity-labeled, the
x-carrier's source is identity-labeled, and all label data lives in mu, with
the carrier's target labeling folded into mu's target tree (so mu's endpoint
label tuples differ exactly by the carrier permutation, which is the
relabeling twist of the quotient).  The object condition ties the aerial
parenthesization of mu's endpoints (after plugging units into every
terrestrial slot) to the endpoints of the carrier.

The map rho flattens an element to a single payload morphism on n+m strands:
conjugate the concatenation of u and x by the two corridor-weaving shuffles.
Terrestrial-origin strands never cross each other and always pass behind the
plain strands they do cross.  Composition plugs the inner aerial carriers into
the shifted (terrestrial-origin) strands of the payload and re-canonicalizes,
which realizes the relabeling twist of the coinvariant formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .associator import Associator, phi_eval
from .braids import BraidWord, braids_equal, weave
from .chords import DKElement, PaCDMorphism, dk_relabel, pacd_insert, pacd_relabel
from .colored import CoPBMorphism
from .parenthesized import PaBMorphism, pab_insert, pab_relabel
from .trees import (
    Tree,
    UNIT_C,
    UNIT_O,
    arity,
    closed_labels,
    color,
    graft_all_open,
    graft_closed,
    graft_open,
    omega,
    open_labels,
    relabel_tree,
    starred_flatten,
    u_flatten,
)


def plug_units(tree: Tree) -> Tree:
    """Graft the open unit into every terrestrial slot."""
    n, _ = arity(tree)
    out = tree
    for j in range(n, 0, -1):
        out = graft_open(out, j, UNIT_O)
    return out


def aerial_shape(tree: Tree) -> Tree:
    """Shape of the aerial parenthesization left after forgetting terrestrials."""
    return strip_labels(u_flatten(plug_units(tree)))


def strip_labels(tree: Tree) -> Tree:
    return relabel_tree(tree, {l: 0 for l in open_labels(tree)},
                        {l: 0 for l in closed_labels(tree)})


def identity_labeled(tree: Tree) -> Tree:
    """Relabel a closed tree so the leaf at position k carries label k."""
    seq = closed_labels(tree)
    return relabel_tree(tree, None, {lab: k + 1 for k, lab in enumerate(seq)})


@dataclass(frozen=True)
class ShiftedElement:
    """Morphism of a shifted operad: payload in arity (shifted + ordinary)."""

    base: str
    shifted: int
    ordinary: int
    payload: object  # PaBMorphism for "pab", PaCDMorphism for "pacd"


class PaPBPrimeElement:
    """Canonical split-form morphism with braid content."""

    __slots__ = ("u_src", "u_tgt", "x", "mu_src", "mu_tgt")

    def __init__(self, u_src: Tree, u_tgt: Tree, x: PaBMorphism, mu_src: Tree, mu_tgt: Tree):
        self.u_src = u_src
        self.u_tgt = u_tgt
        self.x = x
        self.mu_src = mu_src
        self.mu_tgt = mu_tgt
        self._validate()

    def _validate(self):
        n, m = self.narity()
        for u in (self.u_src, self.u_tgt):
            assert arity(u) == (n, 0)
            assert open_labels(u) == tuple(range(1, n + 1)), "u must be identity-labeled"
        assert closed_labels(self.x.src) == tuple(range(1, m + 1)), "x source must be identity-labeled"
        # the underlying configuration morphism must assemble (this pins the
        # terrestrial order and the folded aerial labels of mu's target)
        CoPBMorphism(omega(self.mu_src), omega(self.mu_tgt), self.x.braid)
        assert aerial_shape(self.mu_src) == strip_labels(self.x.src), \
            "object condition fails at the source"
        assert aerial_shape(self.mu_tgt) == strip_labels(self.x.tgt), \
            "object condition fails at the target"

    def narity(self) -> tuple[int, int]:
        return arity(self.mu_src)

    @classmethod
    def identity_element(cls) -> "PaPBPrimeElement":
        y1 = ("y", 1)
        return cls(y1, y1, PaBMorphism(UNIT_C, UNIT_C, BraidWord(0)), y1, y1)

    @classmethod
    def pure_aerial(cls, x: PaBMorphism, mu_src: Tree, mu_tgt: Tree) -> "PaPBPrimeElement":
        return cls(UNIT_O, UNIT_O, x, mu_src, mu_tgt)

    def equals(self, other: "PaPBPrimeElement") -> bool:
        return (self.u_src == other.u_src and self.u_tgt == other.u_tgt
                and self.mu_src == other.mu_src and self.mu_tgt == other.mu_tgt
                and self.x.src == other.x.src and self.x.tgt == other.x.tgt
                and braids_equal(self.x.braid, other.x.braid))

    def relabel(self, open_map: dict | None, closed_map: dict | None) -> "PaPBPrimeElement":
        """Symmetric-group action; all label data lives in the shuffle part."""
        return PaPBPrimeElement(self.u_src, self.u_tgt, self.x,
                                relabel_tree(self.mu_src, open_map, closed_map),
                                relabel_tree(self.mu_tgt, open_map, closed_map))


def rho(e: PaPBPrimeElement) -> ShiftedElement:
    """Flatten to a single braid payload on n+m strands (shifted slots first)."""
    n, m = e.narity()
    flags = tuple(s == "t" for s in omega(e.mu_src).pattern)
    tgt_flags = tuple(s == "t" for s in omega(e.mu_tgt).pattern)
    braid = weave(e.x.braid, flags, tgt_flags)
    payload = PaBMorphism(starred_flatten(e.mu_src), starred_flatten(e.mu_tgt), braid)
    return ShiftedElement("pab", n, m, payload)


def to_copb(e: PaPBPrimeElement) -> CoPBMorphism:
    """The categorical-equivalence image in the colored model."""
    return CoPBMorphism(omega(e.mu_src), omega(e.mu_tgt), e.x.braid)


def _canonical_carrier_pab(plugged: PaBMorphism) -> PaBMorphism:
    """Relabel a plugged payload so its source is identity-labeled."""
    seq = closed_labels(plugged.src)
    back = {lab: k + 1 for k, lab in enumerate(seq)}
    return pab_relabel(plugged, back)


def compose_prime(outer: PaPBPrimeElement, inners: list[PaPBPrimeElement]) -> PaPBPrimeElement:
    """Full operadic composition of split-form elements."""
    r, s = outer.narity()
    if len(inners) != r:
        raise ValueError("arity mismatch")
    # u's k-th input is the k-th terrestrial point in reading order, which
    # carries the configuration label T[k]
    T = omega(outer.mu_src).terrestrial
    u_src = graft_all_open(outer.u_src, [inners[T[k] - 1].u_src for k in range(r)])
    u_tgt = graft_all_open(outer.u_tgt, [inners[T[k] - 1].u_tgt for k in range(r)])
    mu_src = graft_all_open(outer.mu_src, [inn.mu_src for inn in inners])
    mu_tgt = graft_all_open(outer.mu_tgt, [inn.mu_tgt for inn in inners])
    payload = rho(outer).payload
    for j in range(r, 0, -1):
        payload = pab_insert(payload, j, inners[j - 1].x)
    x = _canonical_carrier_pab(payload)
    return PaPBPrimeElement(u_src, u_tgt, x, mu_src, mu_tgt)


def prime_insert_closed(e: PaPBPrimeElement, i: int, y: PaBMorphism) -> PaPBPrimeElement:
    """Right-module action of the aerial braid operad (slot = aerial label i)."""
    pos = omega(e.mu_src).aerial.index(i) + 1  # the carrier's input at that point
    x = pab_insert(e.x, pos, y)
    mu_src = graft_closed(e.mu_src, i, y.src)
    mu_tgt = graft_closed(e.mu_tgt, i, y.tgt)
    return PaPBPrimeElement(e.u_src, e.u_tgt, _canonical_carrier_pab(x), mu_src, mu_tgt)


# -- the chord-diagram variant -----------------------------------------------------


class PaPCDElement:
    """Split-form morphism whose aerial carrier is a chord-series morphism."""

    __slots__ = ("u_src", "u_tgt", "alpha", "mu_src", "mu_tgt")

    def __init__(self, u_src: Tree, u_tgt: Tree, alpha: PaCDMorphism, mu_src: Tree, mu_tgt: Tree):
        self.u_src = u_src
        self.u_tgt = u_tgt
        self.alpha = alpha
        self.mu_src = mu_src
        self.mu_tgt = mu_tgt
        self._validate()

    def _validate(self):
        n, m = self.narity()
        for u in (self.u_src, self.u_tgt):
            assert arity(u) == (n, 0)
            assert open_labels(u) == tuple(range(1, n + 1))
        assert closed_labels(self.alpha.src) == tuple(range(1, m + 1)), \
            "carrier source must be identity-labeled"
        ob1, ob2 = omega(self.mu_src), omega(self.mu_tgt)
        assert (ob1.n, ob1.m) == (n, m) and (ob2.n, ob2.m) == (n, m)
        assert ob1.terrestrial == ob2.terrestrial
        lam = closed_labels(self.alpha.tgt)
        assert ob2.aerial == tuple(ob1.aerial[lam[k] - 1] for k in range(m)), \
            "mu target labels must fold the carrier's target labeling"
        assert aerial_shape(self.mu_src) == strip_labels(self.alpha.src)
        assert aerial_shape(self.mu_tgt) == strip_labels(self.alpha.tgt)

    def narity(self) -> tuple[int, int]:
        return arity(self.mu_src)

    @property
    def degree(self) -> int:
        return self.alpha.element.degree

    def equals(self, other: "PaPCDElement") -> bool:
        return (self.u_src == other.u_src and self.u_tgt == other.u_tgt
                and self.mu_src == other.mu_src and self.mu_tgt == other.mu_tgt
                and self.alpha.equals(other.alpha))


def apply_phi(assoc: Associator, e: PaPBPrimeElement, degree: int | None = None) -> PaPCDElement:
    """Push the braid carrier through the associator evaluation, componentwise."""
    alpha = phi_eval(assoc, e.x, degree)
    return PaPCDElement(e.u_src, e.u_tgt, alpha, e.mu_src, e.mu_tgt)


def _dk_embed(e: DKElement, offset: int, total: int) -> DKElement:
    from .chords import _gen_index, dk_generators

    idx_tot = _gen_index(total)
    pairs = dk_generators(e.strands)
    terms = {}
    for w, c in e.series.terms.items():
        new = tuple(idx_tot[(pairs[l][0] + offset, pairs[l][1] + offset)] for l in w)
        terms[new] = terms.get(new, Fraction(0)) + c
    return DKElement(total, e.degree, terms)


def rho_phi(assoc: Associator, e: PaPCDElement, degree: int | None = None) -> ShiftedElement:
    """Chord-series payload: corridor conjugators pass through the associator."""
    n, m = e.narity()
    N = degree if degree is not None else e.degree
    ob1 = omega(e.mu_src)
    flags = tuple(s == "t" for s in ob1.pattern)
    tgt_flags = tuple(s == "t" for s in omega(e.mu_tgt).pattern)
    T, A = ob1.terrestrial, ob1.aerial

    src_flat = starred_flatten(e.mu_src)
    tgt_flat = starred_flatten(e.mu_tgt)

    fold_map = {j: T[j - 1] for j in range(1, n + 1)}
    fold_map.update({n + a: n + A[a - 1] for a in range(1, m + 1)})

    flat_u_src = starred_flatten(e.u_src)
    flat_u_tgt = starred_flatten(e.u_tgt)
    shift_map = {l: l + n for l in range(1, m + 1)}

    def concat_tree(uflat: Tree, atree: Tree) -> Tree:
        shifted = relabel_tree(atree, None, shift_map)
        if n == 0:
            return shifted
        if m == 0:
            return uflat
        return ("mc", uflat, shifted)

    concat_src = relabel_tree(concat_tree(flat_u_src, e.alpha.src), None, fold_map)
    concat_tgt = relabel_tree(concat_tree(flat_u_tgt, e.alpha.tgt), None, fold_map)

    # series of the middle: u-part through the associator, carrier shifted
    if n > 0:
        iota_u = PaBMorphism(flat_u_src, flat_u_tgt, BraidWord(n))
        u_series = phi_eval(assoc, iota_u, N).element
    else:
        u_series = DKElement.one(0, N)
    middle_elem = _dk_embed(u_series, 0, n + m).mul(_dk_embed(e.alpha.element.truncate(N), n, n + m))
    middle_elem = dk_relabel(middle_elem, fold_map) if n + m else middle_elem
    middle = PaCDMorphism(concat_src, concat_tgt, middle_elem)

    from .braids import comb_word

    conj1 = PaBMorphism(src_flat, concat_src, comb_word(flags))
    conj2 = PaBMorphism(concat_tgt, tgt_flat, comb_word(tgt_flags).inverse())
    payload = phi_eval(assoc, conj1, N).compose(middle).compose(phi_eval(assoc, conj2, N))
    return ShiftedElement("pacd", n, m, payload)


def _canonical_carrier_pacd(plugged: PaCDMorphism) -> PaCDMorphism:
    seq = closed_labels(plugged.src)
    back = {lab: k + 1 for k, lab in enumerate(seq)}
    return pacd_relabel(plugged, back)


def compose_papcd(assoc: Associator, outer: PaPCDElement, inners: list[PaPCDElement],
                  degree: int | None = None) -> PaPCDElement:
    r, s = outer.narity()
    if len(inners) != r:
        raise ValueError("arity mismatch")
    T = omega(outer.mu_src).terrestrial
    u_src = graft_all_open(outer.u_src, [inners[T[k] - 1].u_src for k in range(r)])
    u_tgt = graft_all_open(outer.u_tgt, [inners[T[k] - 1].u_tgt for k in range(r)])
    mu_src = graft_all_open(outer.mu_src, [inn.mu_src for inn in inners])
    mu_tgt = graft_all_open(outer.mu_tgt, [inn.mu_tgt for inn in inners])
    payload = rho_phi(assoc, outer, degree).payload
    for j in range(r, 0, -1):
        payload = pacd_insert(payload, j, inners[j - 1].alpha)
    alpha = _canonical_carrier_pacd(payload)
    return PaPCDElement(u_src, u_tgt, alpha, mu_src, mu_tgt)


# -- enumeration hooks ---------------------------------------------------------------


def canonical_objects(n: int, m: int):
    """Canonical object triples (u shape, carrier object, shuffle tree)."""
    from .trees import enumerate_trees

    u_shapes = enumerate_trees(n, 0) if n else [UNIT_O]
    u_identity = [u for u in u_shapes if open_labels(u) == tuple(range(1, n + 1))]
    out = []
    for mu in enumerate_trees(n, m):
        xobj = identity_labeled(u_flatten(plug_units(mu)))
        for u in u_identity:
            out.append((u, xobj, mu))
    return out
