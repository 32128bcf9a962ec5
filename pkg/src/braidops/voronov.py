"""Voronov products: a closed-part operad acting alongside an open-part operad.

The generic construction pairs an operad P carrying a commutative-algebra
morphism (the merge) with an operad Q: components are plain pairs
(P-part in arity m, Q-part in arity n).  Closed insertion composes the P-part;
open insertion composes the Q-part and merges the P-parts through the
commutative multiplication, with the outer P-part keeping strands 1..m and
the inner block appended.  Removing the components with zero closed and zero
open inputs gives the based variant.

The shipped instance pairs truncated chord series (merge = juxtaposition on
disjoint strands, the image of the empty-diagram morphism) with parenthesized
permutations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chords import DKElement, dk_insert, dk_relabel
from .trees import Tree, arity, color, graft_open, leftcomb_open, open_labels, relabel_tree


class ChordStrandOperad:
    """Closed part: grouplike chord series at a fixed truncation."""

    def __init__(self, degree: int):
        self.degree = degree

    def identity(self, m: int = 1) -> DKElement:
        return DKElement.one(m, self.degree)

    def arity(self, p: DKElement) -> int:
        return p.strands

    def insert(self, p: DKElement, i: int, q: DKElement) -> DKElement:
        return dk_insert(p, i, q)

    def merge(self, p: DKElement, q: DKElement) -> DKElement:
        """Juxtaposition: the commuting product of disjoint strand blocks."""
        grown = dk_insert(dk_insert(DKElement.one(2, self.degree), 2, q), 1, p)
        return grown

    def relabel(self, p: DKElement, images: dict[int, int]) -> DKElement:
        return dk_relabel(p, images)

    def equal(self, p: DKElement, q: DKElement) -> bool:
        return p == q


@dataclass(frozen=True)
class PaPMorphismPair:
    """Open part: the unique reparenthesization between order-equal trees."""

    src: Tree
    tgt: Tree

    def __post_init__(self):
        assert color(self.src) == "o" and arity(self.src)[1] == 0
        assert color(self.tgt) == "o" and arity(self.tgt)[1] == 0
        assert open_labels(self.src) == open_labels(self.tgt), "label orders must agree"


class PaPOperad:
    def identity(self, n: int = 1) -> PaPMorphismPair:
        tree = leftcomb_open(tuple(range(1, n + 1)))
        return PaPMorphismPair(tree, tree)

    def arity(self, q: PaPMorphismPair) -> int:
        return arity(q.src)[0]

    def insert(self, q: PaPMorphismPair, j: int, q2: PaPMorphismPair) -> PaPMorphismPair:
        return PaPMorphismPair(graft_open(q.src, j, q2.src), graft_open(q.tgt, j, q2.tgt))

    def relabel(self, q: PaPMorphismPair, images: dict[int, int]) -> PaPMorphismPair:
        return PaPMorphismPair(relabel_tree(q.src, images, None),
                               relabel_tree(q.tgt, images, None))

    def equal(self, q: PaPMorphismPair, q2: PaPMorphismPair) -> bool:
        return q == q2


@dataclass(frozen=True)
class VoronovElement:
    p_part: object
    q_part: object


class VoronovProduct:
    """Generic product; ``based`` removes the (0, 0) component."""

    def __init__(self, p_operad, q_operad, based: bool = True):
        self.p = p_operad
        self.q = q_operad
        self.based = based

    def make(self, p_part, q_part) -> VoronovElement:
        e = VoronovElement(p_part, q_part)
        if self.based:
            assert self.narity(e) != (0, 0), "the based variant removes the (0,0) component"
        return e

    def narity(self, e: VoronovElement) -> tuple[int, int]:
        return (self.q.arity(e.q_part), self.p.arity(e.p_part))

    def identity_closed(self) -> object:
        return self.p.identity(1)

    def identity_open(self) -> VoronovElement:
        return self.make(self.p.identity(0), self.q.identity(1))

    def insert_closed(self, e: VoronovElement, i: int, p_part) -> VoronovElement:
        n, m = self.narity(e)
        if not (1 <= i <= m):
            raise ValueError("slot out of range")
        return self.make(self.p.insert(e.p_part, i, p_part), e.q_part)

    def insert_open(self, e: VoronovElement, j: int, e2: VoronovElement) -> VoronovElement:
        n, m = self.narity(e)
        if not (1 <= j <= n):
            raise ValueError("slot out of range")
        return self.make(self.p.merge(e.p_part, e2.p_part),
                         self.q.insert(e.q_part, j, e2.q_part))

    def equal(self, e1: VoronovElement, e2: VoronovElement) -> bool:
        return self.p.equal(e1.p_part, e2.p_part) and self.q.equal(e1.q_part, e2.q_part)


def build_cd_pap_instance(degree: int) -> VoronovProduct:
    """The based product of truncated chord series with parenthesized permutations."""
    return VoronovProduct(ChordStrandOperad(degree), PaPOperad(), based=True)


def voronov_to_json(vp: VoronovProduct, e: VoronovElement) -> dict:
    from .chords import dk_to_json
    from .trees import show_tree

    return {"p": dk_to_json(e.p_part),
            "q": {"src": show_tree(e.q_part.src), "tgt": show_tree(e.q_part.tgt)}}


def voronov_from_json(vp: VoronovProduct, data: dict) -> VoronovElement:
    from .chords import dk_from_json
    from .trees import parse_tree

    return vp.make(dk_from_json(data["p"]),
                   PaPMorphismPair(parse_tree(data["q"]["src"]), parse_tree(data["q"]["tgt"])))
