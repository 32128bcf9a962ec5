"""Parenthesized permutation-braid operads and their generator calculus.

Morphisms between trees are the morphisms between their interval
configurations (a pullback along the translation ``omega``), so a morphism is
(source tree, target tree, underlying configuration morphism).

The module also implements a small expression language of *generator words*:
formal composites of the five morphism generators (tau, p, psi, alpha_c,
alpha_o), identities of object trees, groupoid composition and inversion,
operadic insertion, and symmetric-group relabeling.  Words evaluate against
any algebra exposing the evaluation interface; evaluating inside the operad
itself recovers the morphism, which is the correctness criterion for the
decomposition algorithms below (split aerial blocks apart, transport with
psi moves between left-combed shapes, emit one crossing per braid letter).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braids import BraidWord, braids_equal, cable, permute_seq
from .colored import (
    CoBMorphism,
    CoPBMorphism,
    copb_compose,
    copb_insert_closed,
    copb_insert_open,
    shuffle_type_morphism,
)
from .trees import (
    Tree,
    UNIT_C,
    UNIT_O,
    arity,
    closed_labels,
    color,
    graft_closed,
    graft_open,
    leftcomb_closed,
    leftcomb_nodes,
    leftcomb_open,
    omega,
    open_labels,
    relabel_tree,
    show_tree,
)


@dataclass(frozen=True)
class PaBMorphism:
    """Morphism of the closed (braid) component: trees plus a braid."""

    src: Tree
    tgt: Tree
    braid: BraidWord

    def __post_init__(self):
        assert color(self.src) == "c" and color(self.tgt) == "c"
        sseq, tseq = closed_labels(self.src), closed_labels(self.tgt)
        assert self.braid.strands == len(sseq)
        assert tseq == permute_seq(sseq, self.braid.permutation()), \
            "braid permutation does not match endpoint labels"

    @classmethod
    def identity(cls, tree: Tree) -> "PaBMorphism":
        return cls(tree, tree, BraidWord(len(closed_labels(tree))))

    @property
    def strands(self) -> int:
        return self.braid.strands

    def compose(self, other: "PaBMorphism") -> "PaBMorphism":
        """self then other."""
        assert self.tgt == other.src, "object mismatch"
        return PaBMorphism(self.src, other.tgt, self.braid * other.braid)

    def inverse(self) -> "PaBMorphism":
        return PaBMorphism(self.tgt, self.src, self.braid.inverse())

    def equals(self, other: "PaBMorphism") -> bool:
        return (self.src == other.src and self.tgt == other.tgt
                and braids_equal(self.braid, other.braid))

    def as_cob(self) -> CoBMorphism:
        return CoBMorphism(closed_labels(self.src), closed_labels(self.tgt), self.braid)


def pab_insert(outer: PaBMorphism, i: int, inner: PaBMorphism) -> PaBMorphism:
    """Operadic insertion in the closed component (cable and splice)."""
    src = graft_closed(outer.src, i, inner.src)
    tgt = graft_closed(outer.tgt, i, inner.tgt)
    k = inner.strands
    seq = closed_labels(outer.src)
    p = seq.index(i) + 1
    q = outer.braid.permutation()(p)
    braid = cable(outer.braid, p, k)
    braid = braid * inner.braid.shift(q - 1, braid.strands)
    return PaBMorphism(src, tgt, braid)


def pab_relabel(mor: PaBMorphism, closed_map: dict[int, int]) -> PaBMorphism:
    return PaBMorphism(relabel_tree(mor.src, None, closed_map),
                       relabel_tree(mor.tgt, None, closed_map), mor.braid)


def pab_restrict(mor: PaBMorphism, i: int) -> PaBMorphism:
    """Compose with the closed unit at slot i: delete that strand everywhere."""
    from .braids import delete_strand

    seq = closed_labels(mor.src)
    p = seq.index(i) + 1
    return PaBMorphism(graft_closed(mor.src, i, UNIT_C),
                       graft_closed(mor.tgt, i, UNIT_C),
                       delete_strand(mor.braid, p))


@dataclass(frozen=True)
class PaPBMorphism:
    """Morphism of the parenthesized two-colored operad."""

    source: Tree
    target: Tree
    underlying: CoPBMorphism

    def __post_init__(self):
        assert color(self.source) == "o" and color(self.target) == "o"
        assert omega(self.source) == self.underlying.src, "source does not project to the underlying source"
        assert omega(self.target) == self.underlying.tgt, "target does not project to the underlying target"

    @classmethod
    def identity(cls, tree: Tree) -> "PaPBMorphism":
        return cls(tree, tree, CoPBMorphism.identity(omega(tree)))

    @property
    def braid(self) -> BraidWord:
        return self.underlying.braid

    def narity(self) -> tuple[int, int]:
        return arity(self.source)

    def compose(self, other: "PaPBMorphism") -> "PaPBMorphism":
        """self then other."""
        assert self.target == other.source, "object mismatch"
        return PaPBMorphism(self.source, other.target,
                            copb_compose(other.underlying, self.underlying))

    def inverse(self) -> "PaPBMorphism":
        return PaPBMorphism(self.target, self.source, self.underlying.inverse())

    def equals(self, other: "PaPBMorphism") -> bool:
        return (self.source == other.source and self.target == other.target
                and self.underlying.equals(other.underlying))


def papb_compose(g: PaPBMorphism, f: PaPBMorphism) -> PaPBMorphism:
    return f.compose(g)


def papb_insert_closed(outer: PaPBMorphism, i: int, inner: PaBMorphism) -> PaPBMorphism:
    return PaPBMorphism(graft_closed(outer.source, i, inner.src),
                        graft_closed(outer.target, i, inner.tgt),
                        copb_insert_closed(outer.underlying, i, inner.as_cob()))


def papb_insert_open(outer: PaPBMorphism, j: int, inner: PaPBMorphism) -> PaPBMorphism:
    return PaPBMorphism(graft_open(outer.source, j, inner.source),
                        graft_open(outer.target, j, inner.target),
                        copb_insert_open(outer.underlying, j, inner.underlying))


def papb_restrict_closed(mor: PaPBMorphism, i: int) -> PaPBMorphism:
    """Forget the aerial strand labeled i (unitary extension)."""
    from .colored import restrict_unit_closed

    return PaPBMorphism(graft_closed(mor.source, i, UNIT_C),
                        graft_closed(mor.target, i, UNIT_C),
                        restrict_unit_closed(mor.underlying, i))


def papb_restrict_open(mor: PaPBMorphism, j: int) -> PaPBMorphism:
    """Forget the terrestrial point labeled j (unitary extension)."""
    from .colored import restrict_unit_open

    return PaPBMorphism(graft_open(mor.source, j, UNIT_O),
                        graft_open(mor.target, j, UNIT_O),
                        restrict_unit_open(mor.underlying, j))


def papb_relabel(mor: PaPBMorphism, open_map: dict[int, int] | None,
                 closed_map: dict[int, int] | None) -> PaPBMorphism:
    operm = (lambda l: open_map.get(l, l)) if open_map else None
    cperm = (lambda l: closed_map.get(l, l)) if closed_map else None
    return PaPBMorphism(relabel_tree(mor.source, open_map, closed_map),
                        relabel_tree(mor.target, open_map, closed_map),
                        CoPBMorphism(mor.underlying.src.relabel(operm, cperm),
                                     mor.underlying.tgt.relabel(operm, cperm),
                                     mor.underlying.braid))


def papb_shuffle_type(src: Tree, tgt: Tree) -> PaPBMorphism | None:
    under = shuffle_type_morphism(omega(src), omega(tgt))
    if under is None:
        return None
    return PaPBMorphism(src, tgt, under)


# -- the named generators ------------------------------------------------------

_X1, _X2, _X3 = ("x", 1), ("x", 2), ("x", 3)
_Y1, _Y2, _Y3 = ("y", 1), ("y", 2), ("y", 3)


def generators() -> dict:
    """The three object generators and five morphism generators."""
    tau = PaBMorphism(("mc", _X1, _X2), ("mc", _X2, _X1), BraidWord(2, [1]))
    alpha_c = PaBMorphism(("mc", ("mc", _X1, _X2), _X3),
                          ("mc", _X1, ("mc", _X2, _X3)), BraidWord(3))
    alpha_o_src = ("mo", ("mo", _Y1, _Y2), _Y3)
    alpha_o_tgt = ("mo", _Y1, ("mo", _Y2, _Y3))
    alpha_o = PaPBMorphism(alpha_o_src, alpha_o_tgt,
                           CoPBMorphism(omega(alpha_o_src), omega(alpha_o_tgt), BraidWord(0)))
    p_src = ("mo", ("f", _X1), ("f", _X2))
    p_tgt = ("f", ("mc", _X1, _X2))
    p = PaPBMorphism(p_src, p_tgt, CoPBMorphism(omega(p_src), omega(p_tgt), BraidWord(2)))
    psi_src = ("mo", ("f", _X1), _Y1)
    psi_tgt = ("mo", _Y1, ("f", _X1))
    psi = PaPBMorphism(psi_src, psi_tgt,
                       CoPBMorphism(omega(psi_src), omega(psi_tgt), BraidWord(1)))
    return {
        "mu_c": ("mc", _X1, _X2),
        "mu_o": ("mo", _Y1, _Y2),
        "f": ("f", _X1),
        "tau": tau,
        "alpha_c": alpha_c,
        "alpha_o": alpha_o,
        "p": p,
        "psi": psi,
    }


# -- generator words -----------------------------------------------------------
#
# word grammar (nested tuples):
#   ("gen", name, sign)            named generator or its inverse
#   ("id", tree)                   identity of an object tree
#   ("comp", w2, w1)               w1 first, then w2
#   ("inv", w)
#   ("ic", outer, slot, inner)     closed operadic insertion
#   ("io", outer, slot, inner)     open operadic insertion
#   ("rl", w, open_map, closed_map)  relabeling action (dicts or None)

Word = tuple


def w_gen(name: str, sign: int = 1) -> Word:
    return ("gen", name, sign)


def w_id(tree: Tree) -> Word:
    return ("id", tree)


def w_comp(g: Word, f: Word) -> Word:
    return ("comp", g, f)


def w_inv(w: Word) -> Word:
    return ("inv", w)


def w_ic(outer: Word, slot: int, inner: Word) -> Word:
    return ("ic", outer, slot, inner)


def w_io(outer: Word, slot: int, inner: Word) -> Word:
    return ("io", outer, slot, inner)


def w_rl(w: Word, open_map: dict | None, closed_map: dict | None) -> Word:
    return ("rl", w, open_map, closed_map)


def w_path(steps: list[Word], fallback_tree: Tree | None = None) -> Word:
    """Compose a list of words given in application order."""
    if not steps:
        assert fallback_tree is not None, "empty path needs an identity object"
        return w_id(fallback_tree)
    out = steps[0]
    for step in steps[1:]:
        out = w_comp(step, out)
    return out


def evaluate_word(word: Word, algebra):
    tag = word[0]
    if tag == "gen":
        g = algebra.generator(word[1])
        return algebra.invert(g) if word[2] < 0 else g
    if tag == "id":
        return algebra.identity(word[1])
    if tag == "comp":
        return algebra.compose(evaluate_word(word[1], algebra), evaluate_word(word[2], algebra))
    if tag == "inv":
        return algebra.invert(evaluate_word(word[1], algebra))
    if tag == "ic":
        return algebra.insert_closed(evaluate_word(word[1], algebra), word[2],
                                     evaluate_word(word[3], algebra))
    if tag == "io":
        return algebra.insert_open(evaluate_word(word[1], algebra), word[2],
                                   evaluate_word(word[3], algebra))
    if tag == "rl":
        return algebra.relabel(evaluate_word(word[1], algebra), word[2], word[3])
    raise ValueError(f"bad word tag {tag!r}")


def word_to_sexpr(word: Word) -> str:
    tag = word[0]
    if tag == "gen":
        name = word[1]
        return name if word[2] > 0 else f"(inv {name})"
    if tag == "id":
        return f"(id {show_tree(word[1])})"
    if tag == "comp":
        return f"(compose {word_to_sexpr(word[1])} {word_to_sexpr(word[2])})"
    if tag == "inv":
        return f"(inv {word_to_sexpr(word[1])})"
    if tag == "ic":
        return f"(insert-c {word_to_sexpr(word[1])} {word[2]} {word_to_sexpr(word[3])})"
    if tag == "io":
        return f"(insert-o {word_to_sexpr(word[1])} {word[2]} {word_to_sexpr(word[3])})"
    if tag == "rl":
        om = ";".join(f"{k}>{v}" for k, v in sorted((word[2] or {}).items()))
        cm = ";".join(f"{k}>{v}" for k, v in sorted((word[3] or {}).items()))
        return f"(relabel {word_to_sexpr(word[1])} [{om}] [{cm}])"
    raise ValueError(tag)


class PaPBAlgebra:
    """Evaluation of generator words inside the operad itself."""

    def __init__(self):
        self.gens = generators()

    def generator(self, name: str):
        return self.gens[name]

    def identity(self, tree: Tree):
        if color(tree) == "c":
            return PaBMorphism.identity(tree)
        return PaPBMorphism.identity(tree)

    def compose(self, g, f):
        return f.compose(g)

    def invert(self, v):
        return v.inverse()

    def insert_closed(self, outer, i: int, inner):
        assert isinstance(inner, PaBMorphism)
        if isinstance(outer, PaBMorphism):
            return pab_insert(outer, i, inner)
        return papb_insert_closed(outer, i, inner)

    def insert_open(self, outer, j: int, inner):
        assert isinstance(outer, PaPBMorphism) and isinstance(inner, PaPBMorphism)
        return papb_insert_open(outer, j, inner)

    def relabel(self, v, open_map, closed_map):
        if isinstance(v, PaBMorphism):
            assert not open_map
            return pab_relabel(v, closed_map or {})
        return papb_relabel(v, open_map, closed_map)


# -- elementary localized moves --------------------------------------------------

_GEN_PATTERNS = {
    # name: (closed slot count, open slot count, src builder, tgt builder)
    "tau": (2, 0, lambda c, o: ("mc", c[0], c[1]), lambda c, o: ("mc", c[1], c[0])),
    "alpha_c": (3, 0, lambda c, o: ("mc", ("mc", c[0], c[1]), c[2]),
                lambda c, o: ("mc", c[0], ("mc", c[1], c[2]))),
    "alpha_o": (0, 3, lambda c, o: ("mo", ("mo", o[0], o[1]), o[2]),
                lambda c, o: ("mo", o[0], ("mo", o[1], o[2]))),
    "p": (2, 0, lambda c, o: ("mo", ("f", c[0]), ("f", c[1])),
          lambda c, o: ("f", ("mc", c[0], c[1]))),
    "psi": (1, 1, lambda c, o: ("mo", ("f", c[0]), o[0]),
            lambda c, o: ("mo", o[0], ("f", c[0]))),
}


def _match_parts(name: str, sign: int, s: Tree) -> tuple[list[Tree], list[Tree]]:
    """Extract the slot subtrees of a generator instance from its source."""
    if name == "tau":
        assert s[0] == "mc"
        return ([s[1], s[2]], []) if sign > 0 else ([s[2], s[1]], [])
    if name == "alpha_c" or name == "alpha_o":
        k = s[0]
        assert k == ("mc" if name == "alpha_c" else "mo")
        if sign > 0:
            assert s[1][0] == k, f"expected {k}-nested-left at {show_tree(s)}"
            return ([s[1][1], s[1][2], s[2]], []) if name == "alpha_c" else ([], [s[1][1], s[1][2], s[2]])
        assert s[2][0] == k, f"expected {k}-nested-right at {show_tree(s)}"
        return ([s[1], s[2][1], s[2][2]], []) if name == "alpha_c" else ([], [s[1], s[2][1], s[2][2]])
    if name == "p":
        if sign > 0:
            assert s[0] == "mo" and s[1][0] == "f" and s[2][0] == "f"
            return [s[1][1], s[2][1]], []
        assert s[0] == "f" and s[1][0] == "mc"
        return [s[1][1], s[1][2]], []
    if name == "psi":
        if sign > 0:
            assert s[0] == "mo" and s[1][0] == "f"
            return [s[1][1]], [s[2]]
        assert s[0] == "mo" and s[2][0] == "f"
        return [s[2][1]], [s[1]]
    raise ValueError(name)


def subtree_at(t: Tree, path: tuple[int, ...]) -> Tree:
    for i in path:
        t = t[i]
    return t


def replace_at(t: Tree, path: tuple[int, ...], s: Tree) -> Tree:
    if not path:
        return s
    parts = list(t)
    parts[path[0]] = replace_at(t[path[0]], path[1:], s)
    return tuple(parts)


def _rank_map(labels) -> dict[int, int]:
    return {lab: r + 1 for r, lab in enumerate(sorted(labels))}


def context_apply(tree: Tree, path: tuple[int, ...], name: str, sign: int) -> tuple[Word, Tree]:
    """Word applying a generator at a subtree of ``tree``; returns (word, next tree).

    The word is a relabeled context insertion of the generator grafted with the
    identities of the slot subtrees, so its evaluation has source ``tree``.
    """
    s = subtree_at(tree, path)
    cparts, oparts = _match_parts(name, sign, s)
    ncl, nol, src_b, tgt_b = _GEN_PATTERNS[name]
    assert len(cparts) == ncl and len(oparts) == nol
    src_check = src_b(cparts, oparts) if sign > 0 else tgt_b(cparts, oparts)
    assert src_check == s
    s_next = tgt_b(cparts, oparts) if sign > 0 else src_b(cparts, oparts)
    next_tree = replace_at(tree, path, s_next)

    # base generator word with normalized slot subtrees grafted in
    base: Word = w_gen(name, sign)
    open_parts_norm = []
    for part in oparts:
        norm = relabel_tree(part, _rank_map(open_labels(part)), _rank_map(closed_labels(part)))
        open_parts_norm.append(norm)
    closed_parts_norm = [relabel_tree(part, None, _rank_map(closed_labels(part)))
                         for part in cparts]
    for j in range(nol, 0, -1):
        base = w_io(base, j, w_id(open_parts_norm[j - 1]))
    closed_shift = sum(len(closed_labels(p)) for p in oparts)
    for i in range(ncl, 0, -1):
        base = w_ic(base, closed_shift + i, w_id(closed_parts_norm[i - 1]))

    # label layout of the grafted word: open-part closed blocks (slot order),
    # then closed-part blocks (slot order); opens in slot order
    grafted_closed: list[int] = []
    for part in oparts:
        grafted_closed.extend(sorted(closed_labels(part)))
    for part in cparts:
        grafted_closed.extend(sorted(closed_labels(part)))
    grafted_open: list[int] = []
    for part in oparts:
        grafted_open.extend(sorted(open_labels(part)))

    n_tree, m_tree = arity(tree)
    s_closed = sorted(closed_labels(s))
    s_open = sorted(open_labels(s))
    others_c = sorted(set(range(1, m_tree + 1)) - set(s_closed))
    others_o = sorted(set(range(1, n_tree + 1)) - set(s_open))

    if color(s) == "c":
        hole_c = 1 + sum(1 for c in others_c if c < s_closed[0]) if s_closed else 1
        ctx_closed_of = {}
        r = 0
        for c in others_c:
            r += 1
            ctx_closed_of[c] = r if r < hole_c else r + 1
        ctx = replace_at(tree, path, ("x", 0))
        ctx = relabel_tree(ctx, None, {**ctx_closed_of, 0: hole_c})
        word = w_ic(w_id(ctx), hole_c, base)
        # final relabel back to the tree's own labels
        closed_back = {}
        for c in others_c:
            fin = ctx_closed_of[c]
            closed_back[fin if fin < hole_c else fin + len(s_closed) - 1] = c
        for l, lab in enumerate(grafted_closed, start=1):
            closed_back[hole_c - 1 + l] = lab
        word = w_rl(word, None, closed_back)
        return word, next_tree

    # open-colored subtree: closed block is forced to the front
    hole_o = 1 + sum(1 for o in others_o if s_open and o < s_open[0]) if s_open else 1
    ctx_open_of = {}
    r = 0
    for o in others_o:
        r += 1
        ctx_open_of[o] = r if r < hole_o else r + 1
    ctx_closed_of = {c: r + 1 for r, c in enumerate(others_c)}
    ctx = replace_at(tree, path, ("y", 0))
    ctx = relabel_tree(ctx, {**ctx_open_of, 0: hole_o}, ctx_closed_of)
    word = w_io(w_id(ctx), hole_o, base)
    open_back = {}
    for o in others_o:
        fin = ctx_open_of[o]
        open_back[fin if fin < hole_o else fin + len(s_open) - 1] = o
    for l, lab in enumerate(grafted_open, start=1):
        open_back[hole_o - 1 + l] = lab
    closed_back = {}
    for l, lab in enumerate(grafted_closed, start=1):
        closed_back[l] = lab
    for c in others_c:
        closed_back[ctx_closed_of[c] + len(s_closed)] = c
    word = w_rl(word, open_back, closed_back)
    return word, next_tree


# -- rotation and transport algorithms -------------------------------------------


def _skeleton_redex(tree: Tree, kind: str, path=()) -> tuple[int, ...] | None:
    """First preorder position of kind(A, kind(B, C)) within the top skeleton."""
    if tree[0] != kind:
        return None
    if tree[2][0] == kind:
        return path
    left = _skeleton_redex(tree[1], kind, path + (1,))
    if left is not None:
        return left
    return _skeleton_redex(tree[2], kind, path + (2,))


def skeleton_to_leftcomb(tree: Tree, col: str) -> tuple[list[Word], Tree]:
    """Right rotations to the left comb of the top-level product skeleton."""
    kind = "mc" if col == "c" else "mo"
    alpha = "alpha_c" if col == "c" else "alpha_o"
    words: list[Word] = []
    cur = tree
    while True:
        pos = _skeleton_redex(cur, kind) if cur[0] == kind else None
        if pos is None:
            break
        w, cur = context_apply(cur, pos, alpha, -1)
        words.append(w)
    return words, cur


def skeleton_atoms(tree: Tree, col: str) -> list[Tree]:
    """Maximal non-product subtrees of the top skeleton, left to right."""
    kind = "mc" if col == "c" else "mo"
    if tree[0] != kind:
        return [tree]
    return skeleton_atoms(tree[1], col) + skeleton_atoms(tree[2], col)


def assoc_word(src: Tree, tgt: Tree, col: str) -> Word:
    """Word of associativity moves between trees with equal atom sequences."""
    assert skeleton_atoms(src, col) == skeleton_atoms(tgt, col), "atom sequences differ"
    down, lc1 = skeleton_to_leftcomb(src, col)
    up, lc2 = skeleton_to_leftcomb(tgt, col)
    assert lc1 == lc2
    steps = down + [w_inv(w) for w in reversed(up)]
    return w_path(steps, src)


def _pair_path(natoms: int, i: int) -> tuple[int, ...]:
    """Path to the i-th node of a left comb over ``natoms`` skeleton leaves."""
    if i == 1:
        return (1,) * (natoms - 2)
    return (1,) * (natoms - 1 - i) + (2,)


def pab_to_word(mor: PaBMorphism) -> Word:
    """Express a closed-component morphism through tau and alpha_c moves."""
    m = mor.strands
    if m <= 1:
        assert braids_equal(mor.braid, BraidWord(m))
        assert mor.src == mor.tgt
        return w_id(mor.src)
    steps, cur = skeleton_to_leftcomb(mor.src, "c")
    natoms = m
    for letter in mor.braid.letters:
        i = abs(letter)
        sign = 1 if letter > 0 else -1
        if i >= 2:
            bridge = (1,) * (natoms - i - 1)
            w, cur = context_apply(cur, bridge, "alpha_c", 1)
            steps.append(w)
        pair = _pair_path(natoms, i)
        w, cur = context_apply(cur, pair, "tau", sign)
        steps.append(w)
        if i >= 2:
            bridge = (1,) * (natoms - i - 1)
            w, cur = context_apply(cur, bridge, "alpha_c", -1)
            steps.append(w)
    up, lc2 = skeleton_to_leftcomb(mor.tgt, "c")
    assert cur == lc2, "letter transport did not land on the target comb"
    steps.extend(w_inv(w) for w in reversed(up))
    return w_path(steps, mor.src)


def pap_to_word(src: Tree, tgt: Tree) -> Word:
    """Word for the unique reparenthesization between order-equal open trees."""
    return assoc_word(src, tgt, "o")


def _split_all(tree: Tree) -> tuple[list[Word], Tree]:
    """p-inverse moves until every f wraps a single leaf."""

    def find(t: Tree, path=()):
        tag = t[0]
        if tag == "f" and t[1][0] == "mc":
            return path
        if tag in ("mc", "mo"):
            hit = find(t[1], path + (1,))
            if hit is not None:
                return hit
            return find(t[2], path + (2,))
        if tag == "f":
            return find(t[1], path + (1,))
        return None

    words: list[Word] = []
    cur = tree
    while True:
        pos = find(cur)
        if pos is None:
            return words, cur
        w, cur = context_apply(cur, pos, "p", -1)
        words.append(w)


def _sort_atoms(tree: Tree, natoms: int) -> tuple[list[Word], Tree]:
    """Bubble every terrestrial atom left of every aerial atom (psi moves)."""
    words: list[Word] = []
    cur = tree
    while True:
        atoms = skeleton_atoms(cur, "o")
        swap_at = None
        for i in range(len(atoms) - 1):
            if atoms[i][0] == "f" and atoms[i + 1][0] == "y":
                swap_at = i + 1
                break
        if swap_at is None:
            return words, cur
        i = swap_at
        if i >= 2:
            bridge = (1,) * (natoms - i - 1)
            w, cur = context_apply(cur, bridge, "alpha_o", 1)
            words.append(w)
        pair = _pair_path(natoms, i)
        w, cur = context_apply(cur, pair, "psi", 1)
        words.append(w)
        if i >= 2:
            bridge = (1,) * (natoms - i - 1)
            w, cur = context_apply(cur, bridge, "alpha_o", -1)
            words.append(w)


def _shuffle_route(tree: Tree) -> tuple[list[Word], Tree]:
    """Route to the normal form: split all aerial blocks, comb, sort."""
    n, m = arity(tree)
    words, cur = _split_all(tree)
    more, cur = skeleton_to_leftcomb(cur, "o")
    words += more
    if n > 0 and m > 0:
        more, cur = _sort_atoms(cur, n + m)
        words += more
    return words, cur


def shuffle_word(src: Tree, tgt: Tree) -> Word:
    """Word for the unique shuffle-type morphism (orders must agree)."""
    assert omega(src).terrestrial == omega(tgt).terrestrial
    assert omega(src).aerial == omega(tgt).aerial
    down, nf1 = _shuffle_route(src)
    up, nf2 = _shuffle_route(tgt)
    assert nf1 == nf2, f"normal forms differ: {show_tree(nf1)} vs {show_tree(nf2)}"
    steps = down + [w_inv(w) for w in reversed(up)]
    return w_path(steps, src)


# -- decomposition ----------------------------------------------------------------


def concat_form(tree: Tree, combed: bool = True) -> Tree:
    """The standard intermediate: terrestrial part next to one aerial block."""
    ob = omega(tree)
    if ob.n == 0 and ob.m == 0:
        return UNIT_O
    if ob.n == 0:
        return ("f", leftcomb_closed(ob.aerial))
    if ob.m == 0:
        return leftcomb_open(ob.terrestrial)
    return ("mo", leftcomb_open(ob.terrestrial), ("f", leftcomb_closed(ob.aerial)))


def decompose(mor: PaPBMorphism, x1p: Tree | None = None, x2p: Tree | None = None):
    """Split a morphism as shuffle / (terrestrial x aerial) / shuffle.

    Returns (mu, x_open, x_closed, mu_prime) where mu: source -> x1p and
    mu_prime: x2p -> target are shuffle-type, x_open is the terrestrial
    reparenthesization and x_closed carries the whole braid.
    """
    if x1p is None:
        x1p = concat_form(mor.source)
    if x2p is None:
        x2p = concat_form(mor.target)
    mu = papb_shuffle_type(mor.source, x1p)
    mu_prime = papb_shuffle_type(x2p, mor.target)
    assert mu is not None and mu_prime is not None, "intermediates must preserve both orders"
    ob1, ob2 = omega(mor.source), omega(mor.target)
    n, m = ob1.n, ob1.m
    if n > 0:
        u1 = subtree_at(x1p, (1,)) if m > 0 else x1p
        u2 = subtree_at(x2p, (1,)) if m > 0 else x2p
        assert open_labels(u1) == ob1.terrestrial and open_labels(u2) == ob2.terrestrial
        x_open = (u1, u2)
    else:
        x_open = None
    if m > 0:
        c1 = subtree_at(x1p, (2, 1)) if n > 0 else subtree_at(x1p, (1,))
        c2 = subtree_at(x2p, (2, 1)) if n > 0 else subtree_at(x2p, (1,))
        x_closed = PaBMorphism(c1, c2, mor.braid)
    else:
        x_closed = None
    return mu, x_open, x_closed, mu_prime


def recompose(mu: PaPBMorphism, x_open, x_closed, mu_prime: PaPBMorphism) -> PaPBMorphism:
    """Inverse of decompose: mu' o (middle) o mu."""
    middle = _concat_morphism(x_open, x_closed)
    return mu.compose(middle).compose(mu_prime)


def _concat_morphism(x_open, x_closed) -> PaPBMorphism:
    if x_open is None and x_closed is None:
        return PaPBMorphism.identity(UNIT_O)
    if x_open is None:
        src, tgt = ("f", x_closed.src), ("f", x_closed.tgt)
        under = CoPBMorphism(omega(src), omega(tgt), x_closed.braid)
        return PaPBMorphism(src, tgt, under)
    u1, u2 = x_open
    if x_closed is None:
        under = CoPBMorphism(omega(u1), omega(u2), BraidWord(0))
        return PaPBMorphism(u1, u2, under)
    src = ("mo", u1, ("f", x_closed.src))
    tgt = ("mo", u2, ("f", x_closed.tgt))
    under = CoPBMorphism(omega(src), omega(tgt), x_closed.braid)
    return PaPBMorphism(src, tgt, under)


def to_generator_word(mor: PaPBMorphism, x1p: Tree | None = None, x2p: Tree | None = None) -> Word:
    """Express a morphism in the eight generators; evaluation reproduces it."""
    if x1p is None:
        x1p = concat_form(mor.source)
    if x2p is None:
        x2p = concat_form(mor.target)
    mu, x_open, x_closed, mu_prime = decompose(mor, x1p, x2p)
    w_mu = shuffle_word(mor.source, x1p)
    w_mu_prime = shuffle_word(x2p, mor.target)

    if x_open is None and x_closed is None:
        middle = w_id(UNIT_O)
    elif x_open is None:
        middle = w_ic(w_id(("f", _X1)), 1, pab_to_word(x_closed))
    elif x_closed is None:
        middle = pap_to_word(*x_open)
    else:
        wrapped = w_ic(w_id(("f", _X1)), 1, pab_to_word(x_closed))
        middle = w_io(w_io(w_id(("mo", _Y1, _Y2)), 2, wrapped), 1, pap_to_word(*x_open))
    return w_comp(w_mu_prime, w_comp(middle, w_mu))


# -- JSON ---------------------------------------------------------------------------


def papb_to_json(mor: PaPBMorphism) -> dict:
    from .colored import copb_to_json

    return {"src": show_tree(mor.source), "tgt": show_tree(mor.target),
            "underlying": copb_to_json(mor.underlying)}


def papb_from_json(data: dict) -> PaPBMorphism:
    from .colored import copb_from_json
    from .trees import parse_tree

    return PaPBMorphism(parse_tree(data["src"]), parse_tree(data["tgt"]),
                        copb_from_json(data["underlying"]))
