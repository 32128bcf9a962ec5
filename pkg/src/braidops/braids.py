"""Braid words, a decidable equality oracle, cabling and strand deletion.

Conventions, fixed once for the whole package:

* A braid word is read left to right, which is top to bottom in diagrams.
* The generator ``i`` (written ``s<i>``) crosses the strand at position ``i``
  over the strand at position ``i+1``; ``-i`` (written ``S<i>``) is its
  inverse.
* ``Permutation`` multiplication is diagrammatic: ``(p * q)(x) = q(p(x))``,
  i.e. ``p`` acts first.  With this convention ``b.permutation()`` maps a
  strand's starting position to its ending position and is a homomorphism for
  word concatenation.

Equality of braids is decided with the faithful action on the free group
(sigma_i sends x_i to x_i x_{i+1} x_i^{-1} and x_{i+1} to x_i).
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Permutation:
    """Bijection of {1..n}; images[i-1] is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        n = len(images)
        assert sorted(images) == list(range(1, n + 1)), f"not a permutation: {images}"
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int) -> "Permutation":
        assert 1 <= i < n
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(images)

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # self first, then other
        assert self.size == other.size
        return Permutation(tuple(other(self(i)) for i in range(1, self.size + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.size
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(images)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def permute_seq(seq: Sequence, perm: Permutation) -> tuple:
    """Move seq entries along the permutation: out[perm(i)] = seq[i] (1-based)."""
    assert len(seq) == perm.size
    out = [None] * len(seq)
    for p in range(1, len(seq) + 1):
        out[perm(p) - 1] = seq[p - 1]
    return tuple(out)


class BraidWord:
    """Word in Artin generators on ``strands`` strands."""

    __slots__ = ("strands", "letters")

    def __init__(self, strands: int, letters: Iterable[int] = ()):
        assert strands >= 0
        letters = tuple(letters)
        for l in letters:
            assert l != 0 and 1 <= abs(l) <= strands - 1, f"letter {l} out of range for {strands} strands"
        self.strands = strands
        self.letters = letters

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        assert self.strands == other.strands, "strand-count mismatch"
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-l for l in reversed(self.letters)))

    def shift(self, k: int, strands: int | None = None) -> "BraidWord":
        """Embed into a larger braid group, moving all positions up by k."""
        if strands is None:
            strands = self.strands + k
        assert strands >= self.strands + k
        return BraidWord(strands, tuple(l + k if l > 0 else l - k for l in self.letters))

    def pad(self, strands: int) -> "BraidWord":
        """Reinterpret on more strands (extra strands on the right, untouched)."""
        assert strands >= self.strands
        return BraidWord(strands, self.letters)

    def permutation(self) -> Permutation:
        perm = Permutation.identity(self.strands)
        for l in self.letters:
            perm = perm * Permutation.transposition(self.strands, abs(l))
        return perm

    def __eq__(self, other):
        return (isinstance(other, BraidWord)
                and self.strands == other.strands and self.letters == other.letters)

    def __hash__(self):
        return hash((self.strands, self.letters))

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        return f"BraidWord({self.strands}, {format_braid(self)!r})"


# -- free group and the Artin action -----------------------------------------


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a word over x_1, x_2, ... (negative = inverse)."""
    stack: list[int] = []
    for l in letters:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


def _act_letter(letter: int, word: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a free word under one Artin generator, freely reduced."""
    i = abs(letter)
    out: list[int] = []
    if letter > 0:
        # x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
        for l in word:
            a = abs(l)
            if a == i:
                seq = (i, i + 1, -i) if l > 0 else (i, -(i + 1), -i)
            elif a == i + 1:
                seq = (i,) if l > 0 else (-i,)
            else:
                seq = (l,)
            for s in seq:
                if out and out[-1] == -s:
                    out.pop()
                else:
                    out.append(s)
    else:
        # inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
        for l in word:
            a = abs(l)
            if a == i:
                seq = (i + 1,) if l > 0 else (-(i + 1),)
            elif a == i + 1:
                seq = (-(i + 1), i, i + 1) if l > 0 else (-(i + 1), -i, i + 1)
            else:
                seq = (l,)
            for s in seq:
                if out and out[-1] == -s:
                    out.pop()
                else:
                    out.append(s)
    return tuple(out)


def artin_action(braid: BraidWord, word: Iterable[int]) -> tuple[int, ...]:
    """Act on a free-group word over x_1..x_n; letters apply in word order."""
    w = free_reduce(word)
    for l in w:
        assert 1 <= abs(l) <= braid.strands, "alphabet mismatch"
    for letter in braid.letters:
        w = _act_letter(letter, w)
    return w


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    """Whether two words represent the same braid group element."""
    if a.strands != b.strands:
        raise ValueError("strand-count mismatch")
    if a.letters == b.letters:
        return True
    if a.permutation() != b.permutation():
        return False
    c = a * b.inverse()
    return all(artin_action(c, (i,)) == (i,) for i in range(1, a.strands + 1))


def underlying_permutation(b: BraidWord) -> Permutation:
    return b.permutation()


# -- cabling and deletion -----------------------------------------------------


def inflate(b: BraidWord, widths: Sequence[int]) -> BraidWord:
    """Replace the strand starting at position p by widths[p-1] parallel strands.

    Each crossing becomes a block crossing with the same sign; width 0 deletes
    the strand.  The underlying permutation of the result is the block
    inflation of ``b``'s permutation.
    """
    widths = list(widths)
    assert len(widths) == b.strands and all(w >= 0 for w in widths)
    total = sum(widths)
    cur = widths[:]  # widths indexed by current geometric position
    letters: list[int] = []
    for l in b.letters:
        i = abs(l)
        sign = 1 if l > 0 else -1
        a_w = cur[i - 1]
        b_w = cur[i]
        s = sum(cur[: i - 1])
        for ii in range(a_w, 0, -1):
            for jj in range(1, b_w + 1):
                letters.append(sign * (s + ii + jj - 1))
        cur[i - 1], cur[i] = cur[i], cur[i - 1]
    return BraidWord(total, letters)


def cable(b: BraidWord, position: int, width: int) -> BraidWord:
    """Replace the strand starting at ``position`` by ``width`` parallel strands."""
    if not (1 <= position <= b.strands):
        raise ValueError("position out of range")
    widths = [1] * b.strands
    widths[position - 1] = width
    return inflate(b, widths)


def delete_strand(b: BraidWord, position: int) -> BraidWord:
    """Remove the strand starting at ``position`` and every crossing it carries."""
    if not (1 <= position <= b.strands):
        raise ValueError("position out of range")
    return cable(b, position, 0)


def block_inflation(perm: Permutation, widths: Sequence[int]) -> Permutation:
    """Permutation obtained by replacing point i with a block of widths[i-1] points."""
    n = perm.size
    widths = list(widths)
    start_off = [0] * n
    acc = 0
    for i in range(n):
        start_off[i] = acc
        acc += widths[i]
    # offsets on the target side follow the permuted widths
    end_off = [0] * n
    acc = 0
    for q in range(1, n + 1):
        p = perm.inverse()(q)
        end_off[p - 1] = acc
        acc += widths[p - 1]
    images = [0] * sum(widths)
    for p in range(1, n + 1):
        for k in range(widths[p - 1]):
            images[start_off[p - 1] + k] = end_off[p - 1] + k + 1
    return Permutation(images)


# -- corridor weaving ---------------------------------------------------------


def comb_word(flags: Sequence[bool]) -> BraidWord:
    """Braid gathering all flagged strands on the left, orders preserved.

    At every crossing the unflagged strand passes over the flagged one; two
    flagged strands never cross, nor do two unflagged ones.
    """
    n = len(flags)
    arrangement = list(flags)
    letters: list[int] = []
    target = 0
    for k in range(n):
        if not flags[k]:
            continue
        # locate the next flagged strand in the current arrangement
        pos = arrangement.index(True, target)
        for q in range(pos, target, -1):
            letters.append(q)  # strand at q (unflagged) over strand at q+1
            arrangement[q - 1], arrangement[q] = arrangement[q], arrangement[q - 1]
        target += 1
    return BraidWord(n, letters)


def weave(braid: BraidWord, src_flags: Sequence[bool], tgt_flags: Sequence[bool]) -> BraidWord:
    """Weave silent corridor strands through ``braid``.

    ``src_flags``/``tgt_flags`` mark the corridor positions at top and bottom;
    both must contain the same number k of corridors, and ``braid`` acts on the
    remaining n unflagged strands.  Corridor strands keep their relative order,
    never cross each other, and every corridor/plain crossing has the plain
    strand on top.
    """
    k = sum(src_flags)
    assert sum(tgt_flags) == k
    n = len(src_flags) - k
    assert braid.strands == n and len(tgt_flags) == len(src_flags)
    middle = braid.shift(k, n + k)
    return comb_word(src_flags) * middle * comb_word(tgt_flags).inverse()


# -- crossing audit (oracle support) ------------------------------------------


def crossings(b: BraidWord) -> list[tuple[int, int, int]]:
    """Per letter: (starting position of over-strand, of under-strand, sign)."""
    occupant = list(range(1, b.strands + 1))  # occupant[pos-1] = starting position
    out = []
    for l in b.letters:
        i = abs(l)
        upper, lower = occupant[i - 1], occupant[i]
        if l > 0:
            out.append((upper, lower, 1))
        else:
            out.append((lower, upper, -1))
        occupant[i - 1], occupant[i] = occupant[i], occupant[i - 1]
    return out


# -- text and JSON formats ----------------------------------------------------


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse "s1 S2 s1" notation (lowercase positive, uppercase inverse)."""
    letters = []
    for tok in text.split():
        if not tok or tok[0] not in "sS" or not tok[1:].isdigit():
            raise ValueError(f"bad braid token: {tok!r}")
        i = int(tok[1:])
        letters.append(i if tok[0] == "s" else -i)
    return BraidWord(strands, letters)


def format_braid(b: BraidWord) -> str:
    return " ".join((f"s{l}" if l > 0 else f"S{-l}") for l in b.letters)


def braid_to_json(b: BraidWord) -> dict:
    return {"strands": b.strands, "word": list(b.letters)}


def braid_from_json(data: dict) -> BraidWord:
    return BraidWord(int(data["strands"]), [int(x) for x in data["word"]])
