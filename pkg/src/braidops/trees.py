"""Two-colored magma trees and the interval configurations they map onto.

Trees are nested tagged tuples built from binary products ``mc`` (closed
color) and ``mo`` (open color), the unary color-change ``f`` (closed child,
open output), input leaves ``x_i`` (closed) and ``y_j`` (open), and the
nullary units ``uc``/``uo`` of the unitary variant.

An arity-(n, m) tree has open inputs labeled bijectively by 1..n and closed
inputs by 1..m.  Grafting composes trees operadically with the canonical
relabeling: slots of the grafted color renumber around the insertion point;
for open grafting the inner tree's closed labels come first.  Unit leaves are
rewritten away (``mc(uc, t) = t`` etc., ``f(uc) = uo``), so normal forms carry
unit leaves only as the whole tree.

The translation ``omega`` forgets parenthesization, keeping the left-to-right
interval pattern of terrestrial (open) and aerial (closed) points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Tree = tuple

UNIT_C: Tree = ("uc",)
UNIT_O: Tree = ("uo",)


def x(i: int) -> Tree:
    assert i >= 1
    return ("x", i)


def y(j: int) -> Tree:
    assert j >= 1
    return ("y", j)


def mc(a: Tree, b: Tree) -> Tree:
    assert color(a) == "c" and color(b) == "c", "mc children must be closed"
    return ("mc", a, b)


def mo(a: Tree, b: Tree) -> Tree:
    assert color(a) == "o" and color(b) == "o", "mo children must be open"
    return ("mo", a, b)


def f(t: Tree) -> Tree:
    assert color(t) == "c", "f child must be closed"
    return ("f", t)


def color(t: Tree) -> str:
    tag = t[0]
    if tag in ("x", "uc", "mc"):
        return "c"
    if tag in ("y", "uo", "mo", "f"):
        return "o"
    raise ValueError(f"bad tree tag {tag!r}")


def closed_labels(t: Tree) -> tuple[int, ...]:
    """Closed input labels in left-to-right leaf order."""
    tag = t[0]
    if tag == "x":
        return (t[1],)
    if tag in ("y", "uc", "uo"):
        return ()
    if tag == "f":
        return closed_labels(t[1])
    return closed_labels(t[1]) + closed_labels(t[2])


def open_labels(t: Tree) -> tuple[int, ...]:
    """Open input labels in left-to-right leaf order."""
    tag = t[0]
    if tag == "y":
        return (t[1],)
    if tag in ("x", "uc", "uo"):
        return ()
    if tag == "f":
        return ()
    return open_labels(t[1]) + open_labels(t[2])


def arity(t: Tree) -> tuple[int, int]:
    return (len(open_labels(t)), len(closed_labels(t)))


def _check_colors(t: Tree, unitary: bool) -> None:
    tag = t[0]
    if tag in ("uc", "uo"):
        assert unitary, "unit leaf outside the unitary variant"
    elif tag == "mc":
        assert color(t[1]) == "c" and color(t[2]) == "c"
        _check_colors(t[1], unitary)
        _check_colors(t[2], unitary)
    elif tag == "mo":
        assert color(t[1]) == "o" and color(t[2]) == "o"
        _check_colors(t[1], unitary)
        _check_colors(t[2], unitary)
    elif tag == "f":
        assert color(t[1]) == "c"
        _check_colors(t[1], unitary)
    elif tag not in ("x", "y"):
        raise ValueError(f"bad tag {tag!r}")


def validate(t: Tree, unitary: bool = False) -> None:
    _check_colors(t, unitary)
    n, m = arity(t)
    assert sorted(open_labels(t)) == list(range(1, n + 1)), "open labels not 1..n"
    assert sorted(closed_labels(t)) == list(range(1, m + 1)), "closed labels not 1..m"


def relabel_tree(t: Tree, open_map: dict[int, int] | None = None,
                 closed_map: dict[int, int] | None = None) -> Tree:
    tag = t[0]
    if tag == "x":
        return ("x", closed_map[t[1]]) if closed_map else t
    if tag == "y":
        return ("y", open_map[t[1]]) if open_map else t
    if tag in ("uc", "uo"):
        return t
    if tag == "f":
        return ("f", relabel_tree(t[1], open_map, closed_map))
    return (tag, relabel_tree(t[1], open_map, closed_map), relabel_tree(t[2], open_map, closed_map))


def unit_normalize(t: Tree) -> Tree:
    """Unique normal form under mc(uc,s)=mc(s,uc)=s, mo(uo,s)=mo(s,uo)=s, f(uc)=uo."""
    tag = t[0]
    if tag in ("x", "y", "uc", "uo"):
        return t
    if tag == "f":
        c = unit_normalize(t[1])
        return UNIT_O if c == UNIT_C else ("f", c)
    a = unit_normalize(t[1])
    b = unit_normalize(t[2])
    unit = UNIT_C if tag == "mc" else UNIT_O
    if a == unit:
        return b
    if b == unit:
        return a
    return (tag, a, b)


def _substitute(t: Tree, slot: Tree, replacement: Tree) -> Tree:
    if t == slot:
        return replacement
    tag = t[0]
    if tag in ("x", "y", "uc", "uo"):
        return t
    if tag == "f":
        return ("f", _substitute(t[1], slot, replacement))
    return (tag, _substitute(t[1], slot, replacement), _substitute(t[2], slot, replacement))


def graft_closed(outer: Tree, i: int, inner: Tree) -> Tree:
    """Operadic composition at closed slot i; inner must be closed-colored."""
    if color(inner) != "c":
        raise ValueError("color mismatch: closed slot needs a closed tree")
    n, m = arity(outer)
    if not (1 <= i <= m):
        raise ValueError("slot out of range")
    _, mi = arity(inner)
    outer_map = {l: (l if l < i else l + mi - 1) for l in closed_labels(outer) if l != i}
    inner_map = {l: l + i - 1 for l in closed_labels(inner)}
    outer_re = relabel_tree(outer, None, {**outer_map, i: 0})
    inner_re = relabel_tree(inner, None, inner_map)
    return unit_normalize(_substitute(outer_re, ("x", 0), inner_re))


def graft_open(outer: Tree, j: int, inner: Tree) -> Tree:
    """Operadic composition at open slot j; inner closed labels come first."""
    if color(inner) != "o":
        raise ValueError("color mismatch: open slot needs an open tree")
    n, m = arity(outer)
    if not (1 <= j <= n):
        raise ValueError("slot out of range")
    ni, mi = arity(inner)
    outer_open = {l: (l if l < j else l + ni - 1) for l in open_labels(outer) if l != j}
    outer_closed = {l: l + mi for l in closed_labels(outer)}
    inner_open = {l: l + j - 1 for l in open_labels(inner)}
    outer_re = relabel_tree(outer, {**outer_open, j: 0}, outer_closed)
    inner_re = relabel_tree(inner, inner_open, None)
    return unit_normalize(_substitute(outer_re, ("y", 0), inner_re))


def graft_all_open(outer: Tree, inners: Sequence[Tree]) -> Tree:
    """Graft one inner tree into every open slot (full composition)."""
    n, _ = arity(outer)
    assert len(inners) == n
    out = outer
    for j in range(n, 0, -1):
        out = graft_open(out, j, inners[j - 1])
    return out


# -- interval configurations ---------------------------------------------------


@dataclass(frozen=True)
class ShuffleObject:
    """Interval configuration: pattern of terrestrial/aerial slots with labels."""

    pattern: tuple[str, ...]
    terrestrial: tuple[int, ...]
    aerial: tuple[int, ...]

    def __post_init__(self):
        assert all(s in ("t", "a") for s in self.pattern)
        assert self.pattern.count("t") == len(self.terrestrial)
        assert self.pattern.count("a") == len(self.aerial)
        assert sorted(self.terrestrial) == list(range(1, len(self.terrestrial) + 1))
        assert sorted(self.aerial) == list(range(1, len(self.aerial) + 1))

    @property
    def n(self) -> int:
        return len(self.terrestrial)

    @property
    def m(self) -> int:
        return len(self.aerial)

    def slots(self) -> list[tuple[str, int]]:
        """Left-to-right (kind, label) pairs."""
        it_t = iter(self.terrestrial)
        it_a = iter(self.aerial)
        return [("t", next(it_t)) if s == "t" else ("a", next(it_a)) for s in self.pattern]

    @classmethod
    def from_slots(cls, slots: Iterable[tuple[str, int]]) -> "ShuffleObject":
        slots = list(slots)
        return cls(tuple(k for k, _ in slots),
                   tuple(l for k, l in slots if k == "t"),
                   tuple(l for k, l in slots if k == "a"))

    def insert_closed(self, i: int, inner_seq: Sequence[int]) -> "ShuffleObject":
        """Replace aerial point i by a block carrying ``inner_seq`` (relabeled)."""
        if not (1 <= i <= self.m):
            raise ValueError("slot out of range")
        k = len(inner_seq)
        out = []
        for kind, label in self.slots():
            if kind == "a" and label == i:
                out.extend(("a", i - 1 + l) for l in inner_seq)
            elif kind == "a":
                out.append(("a", label if label < i else label + k - 1))
            else:
                out.append((kind, label))
        return ShuffleObject.from_slots(out)

    def insert_open(self, j: int, inner: "ShuffleObject") -> "ShuffleObject":
        """Replace terrestrial point j by the inner configuration (relabeled)."""
        if not (1 <= j <= self.n):
            raise ValueError("slot out of range")
        ni, mi = inner.n, inner.m
        out = []
        for kind, label in self.slots():
            if kind == "t" and label == j:
                for ik, il in inner.slots():
                    out.append(("t", j - 1 + il) if ik == "t" else ("a", il))
            elif kind == "t":
                out.append(("t", label if label < j else label + ni - 1))
            else:
                out.append(("a", label + mi))
        return ShuffleObject.from_slots(out)

    def delete_aerial(self, i: int) -> "ShuffleObject":
        out = []
        for kind, label in self.slots():
            if kind == "a" and label == i:
                continue
            if kind == "a":
                out.append(("a", label if label < i else label - 1))
            else:
                out.append((kind, label))
        return ShuffleObject.from_slots(out)

    def delete_terrestrial(self, j: int) -> "ShuffleObject":
        out = []
        for kind, label in self.slots():
            if kind == "t" and label == j:
                continue
            if kind == "t":
                out.append(("t", label if label < j else label - 1))
            else:
                out.append((kind, label))
        return ShuffleObject.from_slots(out)

    def relabel(self, open_perm=None, closed_perm=None) -> "ShuffleObject":
        out = []
        for kind, label in self.slots():
            if kind == "t" and open_perm is not None:
                out.append(("t", open_perm(label)))
            elif kind == "a" and closed_perm is not None:
                out.append(("a", closed_perm(label)))
            else:
                out.append((kind, label))
        return ShuffleObject.from_slots(out)

    def __str__(self):
        return " ".join(f"{k}{l}" for k, l in self.slots())


def omega(t: Tree) -> ShuffleObject:
    """Forget parenthesization: leaves in left-to-right order, x aerial, y terrestrial."""
    if t in (UNIT_O, UNIT_C):
        return ShuffleObject((), (), ())
    slots: list[tuple[str, int]] = []

    def walk(s: Tree):
        tag = s[0]
        if tag == "x":
            slots.append(("a", s[1]))
        elif tag == "y":
            slots.append(("t", s[1]))
        elif tag == "f":
            walk(s[1])
        elif tag in ("mc", "mo"):
            walk(s[1])
            walk(s[2])
        else:
            raise ValueError("unit leaf inside a tree; normalize first")

    walk(t)
    return ShuffleObject.from_slots(slots)


def u_flatten(t: Tree) -> Tree:
    """Forget the second level of parenthesization of an (0, m) tree."""
    tag = t[0]
    if tag == "uo":
        return UNIT_C
    if tag == "f":
        return t[1]
    if tag == "mo":
        a, b = u_flatten(t[1]), u_flatten(t[2])
        if a == UNIT_C:
            return b
        if b == UNIT_C:
            return a
        return ("mc", a, b)
    if tag in ("x", "uc", "mc"):
        return t
    raise ValueError("open inputs present; u_flatten needs an (0, m) tree")


def starred_flatten(t: Tree) -> Tree:
    """Collapse an (n, m) tree to a closed tree on n+m leaves, open inputs first."""
    n, _ = arity(t)

    def walk(s: Tree) -> Tree:
        tag = s[0]
        if tag == "x":
            return ("x", n + s[1])
        if tag == "y":
            return ("x", s[1])
        if tag == "f":
            return walk(s[1])
        if tag in ("mc", "mo"):
            return ("mc", walk(s[1]), walk(s[2]))
        if tag == "uo":
            return UNIT_C
        raise ValueError("unit leaf inside a tree")

    return walk(t)


def leftcomb_closed(labels: Sequence[int]) -> Tree:
    if not labels:
        return UNIT_C
    out = ("x", labels[0])
    for l in labels[1:]:
        out = ("mc", out, ("x", l))
    return out


def leftcomb_open(labels: Sequence[int]) -> Tree:
    if not labels:
        return UNIT_O
    out = ("y", labels[0])
    for l in labels[1:]:
        out = ("mo", out, ("y", l))
    return out


def leftcomb_nodes(parts: Sequence[Tree], kind: str) -> Tree:
    """Left-nested product of already-built subtrees of one color."""
    assert parts
    out = parts[0]
    for p in parts[1:]:
        out = (kind, out, p)
    return out


# -- enumeration ----------------------------------------------------------------


def _closed_trees(labels: frozenset) -> list[Tree]:
    if len(labels) == 1:
        return [("x", next(iter(labels)))]
    out = []
    items = sorted(labels)
    for r in range(1, len(items)):
        for left in itertools.combinations(items, r):
            lset = frozenset(left)
            rset = labels - lset
            for a in _closed_trees(lset):
                for b in _closed_trees(rset):
                    out.append(("mc", a, b))
    return out


def _open_trees(olabels: frozenset, clabels: frozenset) -> list[Tree]:
    out = []
    if len(olabels) == 1 and not clabels:
        out.append(("y", next(iter(olabels))))
    if not olabels and clabels:
        out.extend(("f", t) for t in _closed_trees(clabels))
    oitems, citems = sorted(olabels), sorted(clabels)
    for ro in range(len(oitems) + 1):
        for oleft in itertools.combinations(oitems, ro):
            for rc in range(len(citems) + 1):
                for cleft in itertools.combinations(citems, rc):
                    ol, cl = frozenset(oleft), frozenset(cleft)
                    orr, crr = olabels - ol, clabels - cl
                    if not (ol or cl) or not (orr or crr):
                        continue
                    for a in _open_trees(ol, cl):
                        for b in _open_trees(orr, crr):
                            out.append(("mo", a, b))
    return out


def enumerate_trees(n: int, m: int, with_units: bool = False) -> list[Tree]:
    """All arity-(n, m) open-output normal forms."""
    if n == 0 and m == 0:
        return [UNIT_O] if with_units else []
    return _open_trees(frozenset(range(1, n + 1)), frozenset(range(1, m + 1)))


def enumerate_closed_trees(m: int, with_units: bool = False) -> list[Tree]:
    if m == 0:
        return [UNIT_C] if with_units else []
    return _closed_trees(frozenset(range(1, m + 1)))


def enumerate_shuffle_objects(n: int, m: int) -> list[ShuffleObject]:
    out = []
    for positions in itertools.combinations(range(n + m), n):
        pattern = tuple("t" if i in positions else "a" for i in range(n + m))
        for tp in itertools.permutations(range(1, n + 1)):
            for ap in itertools.permutations(range(1, m + 1)):
                out.append(ShuffleObject(pattern, tp, ap))
    return out


def count_shuffles(n: int, m: int) -> int:
    import math
    return math.comb(n + m, n)


# -- s-expressions ----------------------------------------------------------------


def show_tree(t: Tree) -> str:
    tag = t[0]
    if tag == "x":
        return f"x{t[1]}"
    if tag == "y":
        return f"y{t[1]}"
    if tag == "uc":
        return "uc"
    if tag == "uo":
        return "uo"
    if tag == "f":
        return f"f({show_tree(t[1])})"
    return f"{tag}({show_tree(t[1])},{show_tree(t[2])})"


def parse_tree(text: str) -> Tree:
    text = text.replace(" ", "")
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        for tag in ("mc", "mo"):
            if text.startswith(tag + "(", pos):
                pos += len(tag) + 1
                a = parse()
                assert text[pos] == ",", f"expected ',' at {pos}"
                pos += 1
                b = parse()
                assert text[pos] == ")", f"expected ')' at {pos}"
                pos += 1
                return (tag, a, b)
        if text.startswith("f(", pos):
            pos += 2
            a = parse()
            assert text[pos] == ")"
            pos += 1
            return ("f", a)
        if text.startswith("uc", pos):
            pos += 2
            return UNIT_C
        if text.startswith("uo", pos):
            pos += 2
            return UNIT_O
        if text[pos] in "xy":
            kind = text[pos]
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            assert pos > start, f"expected label at {start}"
            return (kind, int(text[start:pos]))
        raise ValueError(f"cannot parse tree at {pos}: {text[pos:]}")

    out = parse()
    assert pos == len(text), f"trailing input: {text[pos:]}"
    return out
