"""Associator series: solving, verification, and the lift to parenthesized chords.

An associator is a pair (mu, Phi) with Phi a grouplike 3-strand chord series
written in the chords t12, t13.  It determines an evaluation of the closed
braid component into chord series sending the elementary braiding to
exp(mu t12 / 2) and the reparenthesization to Phi.  The pentagon and hexagon
constraints are not hard-coded: they are generated by pushing the shared
coherence diagrams through this evaluation, which keeps all conventions
aligned with the braid-side checks.

The solver works degree by degree.  At degree d the unknown homogeneous piece
enters every constraint linearly (a product of two unknowns has degree at
least 2d), so exact linear solving applies; free coordinates are set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chords import (
    DKElement,
    PaCDMorphism,
    dk_coproduct,
    dk_from_json,
    dk_to_json,
    grouplike_check,
    pacd_insert,
    pacd_relabel,
    tensor_square,
)
from .diagrams import CLOSED_FAMILIES, family_word_pairs
from .exact import LinearSystem, fraction_to_str, solve_exact
from .parenthesized import PaBMorphism, Word, evaluate_word, pab_to_word
from .trees import Tree, color, mc, x

_T12 = 0  # generator indices in the 3-strand alphabet (1,2), (1,3), (2,3)
_T13 = 1


@dataclass
class Associator:
    mu: Fraction
    degree: int
    phi: DKElement                      # normal form, 3 strands
    phi_free: dict[tuple[int, ...], Fraction] | None = None  # raw (t12, t13) words

    def __post_init__(self):
        self.mu = Fraction(self.mu)
        assert self.phi.strands == 3
        assert self.phi.constant_term() == 1, "constant term must be 1"


class CDAlgebra:
    """Evaluate closed-color generator words as chord-series morphisms."""

    #: largest strand count accepted before refusing (desk scale is <= 4)
    MAX_STRANDS = 8

    def __init__(self, assoc: Associator, degree: int | None = None):
        self.degree = assoc.degree if degree is None else degree
        self.mu = assoc.mu
        self.phi = assoc.phi.truncate(self.degree)
        braiding = DKElement.generator(2, self.degree, 1, 2).scale(self.mu / 2).exp()
        self._tau = PaCDMorphism(mc(x(1), x(2)), mc(x(2), x(1)), braiding)
        self._alpha = PaCDMorphism(mc(mc(x(1), x(2)), x(3)), mc(x(1), mc(x(2), x(3))), self.phi)

    def generator(self, name: str):
        if name == "tau":
            return self._tau
        if name == "alpha_c":
            return self._alpha
        raise ValueError(f"closed-color algebra has no generator {name!r}")

    def identity(self, tree: Tree):
        assert color(tree) == "c", "closed-color algebra evaluates closed words only"
        return PaCDMorphism.identity(tree, self.degree)

    def compose(self, g: PaCDMorphism, f: PaCDMorphism):
        return f.compose(g)

    def invert(self, v: PaCDMorphism):
        return v.inverse()

    def insert_closed(self, outer: PaCDMorphism, i: int, inner: PaCDMorphism):
        return pacd_insert(outer, i, inner)

    def insert_open(self, outer, j, inner):
        raise ValueError("open insertion does not exist in the closed-color algebra")

    def relabel(self, v: PaCDMorphism, open_map, closed_map):
        assert not open_map
        return pacd_relabel(v, closed_map or {})


def phi_eval(assoc: Associator, mor: PaBMorphism, degree: int | None = None) -> PaCDMorphism:
    """Image of a closed braid morphism under the associator evaluation."""
    if mor.strands > CDAlgebra.MAX_STRANDS:
        raise ValueError(
            f"arity {mor.strands} too large for the configured truncation resources")
    word = pab_to_word(mor)
    return evaluate_word(word, CDAlgebra(assoc, degree))


def phi_eval_word(assoc: Associator, word: Word, degree: int | None = None) -> PaCDMorphism:
    return evaluate_word(word, CDAlgebra(assoc, degree))


_CLOSED_PAIRS = None


def _closed_pairs():
    global _CLOSED_PAIRS
    if _CLOSED_PAIRS is None:
        _CLOSED_PAIRS = family_word_pairs(CLOSED_FAMILIES)
    return _CLOSED_PAIRS


def check_pentagon(assoc: Associator, degree: int | None = None) -> DKElement:
    """Difference of the two pentagon paths in the 4-strand algebra."""
    wl, wr, _s, _e = _closed_pairs()["pentagon"][0]
    algebra = CDAlgebra(assoc, degree)
    return evaluate_word(wl, algebra).element - evaluate_word(wr, algebra).element


def check_hexagons(assoc: Associator, degree: int | None = None) -> tuple[DKElement, DKElement]:
    """Differences of the two hexagon path pairs in the 3-strand algebra."""
    algebra = CDAlgebra(assoc, degree)
    out = []
    for wl, wr, _s, _e in _closed_pairs()["hexagon"]:
        out.append(evaluate_word(wl, algebra).element - evaluate_word(wr, algebra).element)
    return out[0], out[1]


def grouplike_residual(assoc: Associator, degree: int | None = None) -> dict:
    phi = assoc.phi.truncate(degree if degree is not None else assoc.degree)
    delta = dk_coproduct(phi)
    square = tensor_square(phi, phi)
    keys = set(delta) | set(square)
    return {k: delta.get(k, Fraction(0)) - square.get(k, Fraction(0))
            for k in keys
            if delta.get(k, Fraction(0)) != square.get(k, Fraction(0))}


def associator_valid(assoc: Associator) -> bool:
    if not grouplike_check(assoc.phi):
        return False
    if not check_pentagon(assoc).is_zero():
        return False
    h1, h2 = check_hexagons(assoc)
    return h1.is_zero() and h2.is_zero()


# -- solving -----------------------------------------------------------------------


def _free_words(d: int) -> list[tuple[int, ...]]:
    """Degree-d words in the two letters t12, t13."""
    import itertools

    return [w for w in itertools.product((_T12, _T13), repeat=d)]


def _residual_entries(mu: Fraction, phi_terms: dict, d: int) -> dict:
    """All constraint entries at truncation d, flattened to a single dict."""
    assoc = Associator(mu, d, DKElement(3, d, phi_terms))
    entries: dict = {}
    pent = check_pentagon(assoc)
    for w, c in pent.series.terms.items():
        entries[("pent", w)] = c
    h1, h2 = check_hexagons(assoc)
    for tag, res in (("hex1", h1), ("hex2", h2)):
        for w, c in res.series.terms.items():
            entries[(tag, w)] = c
    for key, c in grouplike_residual(assoc).items():
        entries[("grp", key)] = c
    return entries


def solve_degree(mu: Fraction, phi_terms: dict, d: int) -> dict:
    """Homogeneous degree-d piece extending a solution below degree d."""
    basis = _free_words(d)
    base = _residual_entries(mu, phi_terms, d)
    columns = []
    for w in basis:
        probe = dict(phi_terms)
        probe[w] = probe.get(w, Fraction(0)) + 1
        ent = _residual_entries(mu, probe, d)
        keys = set(ent) | set(base)
        columns.append({k: ent.get(k, Fraction(0)) - base.get(k, Fraction(0)) for k in keys})
    row_keys = sorted({k for col in columns for k in col} | set(base), key=repr)
    system = LinearSystem(len(basis))
    for key in row_keys:
        coeffs = {ci: col.get(key, Fraction(0)) for ci, col in enumerate(columns)}
        system.add_row(coeffs, -base.get(key, Fraction(0)))
    sol = solve_exact(system)
    if not sol.consistent:
        raise ArithmeticError(f"degree-{d} associator system inconsistent")
    return {w: c for w, c in zip(basis, sol.particular) if c != 0}


def solve_associator(mu, degree: int) -> Associator:
    """Construct an associator degree by degree (free coordinates zeroed)."""
    mu = Fraction(mu)
    phi_terms: dict = {(): Fraction(1)}
    for d in range(1, degree + 1):
        phi_terms.update(solve_degree(mu, phi_terms, d))
    phi_free = dict(phi_terms)
    out = Associator(mu, degree, DKElement(3, degree, phi_terms), phi_free)
    assert associator_valid(out), "solver output failed re-verification"
    return out


def solve_associator_oneshot2(mu) -> Associator:
    """Independent degree-2 construction: one joint linear pass, then exact check.

    Builds a single system over all degree-1 and degree-2 coordinates from
    residual probes at truncation 2 and verifies the candidate exactly; the
    degree-1 block is forced to zero by the system itself.
    """
    mu = Fraction(mu)
    basis = _free_words(1) + _free_words(2)
    base = _residual_entries(mu, {(): Fraction(1)}, 2)
    columns = []
    for w in basis:
        ent = _residual_entries(mu, {(): Fraction(1), w: Fraction(1)}, 2)
        keys = set(ent) | set(base)
        columns.append({k: ent.get(k, Fraction(0)) - base.get(k, Fraction(0)) for k in keys})
    row_keys = sorted({k for col in columns for k in col} | set(base), key=repr)
    system = LinearSystem(len(basis))
    for key in row_keys:
        system.add_row({ci: col.get(key, Fraction(0)) for ci, col in enumerate(columns)},
                       -base.get(key, Fraction(0)))
    sol = solve_exact(system)
    if not sol.consistent:
        raise ArithmeticError("joint degree-2 system inconsistent")
    phi_terms = {(): Fraction(1)}
    for w, c in zip(basis, sol.particular):
        if c != 0:
            phi_terms[w] = c
    out = Associator(mu, 2, DKElement(3, 2, phi_terms), dict(phi_terms))
    assert associator_valid(out), "one-shot candidate failed exact verification"
    return out


# -- the lift to parenthesized chord diagrams ----------------------------------------


class PhiLift:
    """The induced map on parenthesized-braid morphisms; identity on objects."""

    def __init__(self, assoc: Associator, degree: int | None = None):
        self.assoc = assoc
        self.degree = degree if degree is not None else assoc.degree

    def __call__(self, mor: PaBMorphism) -> PaCDMorphism:
        out = phi_eval(self.assoc, mor, self.degree)
        assert out.src == mor.src and out.tgt == mor.tgt
        return out


def lift_phi_tilde(assoc: Associator, degree: int | None = None) -> PhiLift:
    return PhiLift(assoc, degree)


# -- conventions and serialization ----------------------------------------------------


def phi_in_t12_t23(assoc: Associator) -> DKElement:
    """The same coefficients read in the variables (t12, t23).

    Substitutes t23 for t13 in the recorded free words.  Both conventions are
    supported; neither is asserted to be canonical.
    """
    assert assoc.phi_free is not None, "no free-word representation recorded"
    t23_idx = 2
    terms = {}
    for w, c in assoc.phi_free.items():
        new = tuple(t23_idx if l == _T13 else l for l in w)
        terms[new] = terms.get(new, Fraction(0)) + c
    return DKElement(3, assoc.degree, terms)


def associator_to_json(assoc: Associator) -> dict:
    phi_raw = assoc.phi_free if assoc.phi_free is not None else assoc.phi.series.terms
    raw_elem = DKElement(3, assoc.degree, phi_raw)
    data = dk_to_json(raw_elem)
    # serialize the raw words, not the normal form, so both sides reload exactly
    pairs = [(1, 2), (1, 3), (2, 3)]
    items = sorted(phi_raw.items(), key=lambda kv: (len(kv[0]), kv[0]))
    data["terms"] = [{"coef": fraction_to_str(c), "word": [list(pairs[l]) for l in w]}
                     for w, c in items if c != 0]
    return {"mu": fraction_to_str(assoc.mu), "degree": assoc.degree, "phi": data}


def associator_from_json(data: dict) -> Associator:
    mu = Fraction(data["mu"])
    degree = int(data["degree"])
    pair_index = {(1, 2): 0, (1, 3): 1, (2, 3): 2}
    phi_free = {}
    for t in data["phi"]["terms"]:
        w = tuple(pair_index[tuple(p)] for p in t["word"])
        phi_free[w] = Fraction(t["coef"])
    return Associator(mu, degree, DKElement(3, degree, phi_free), phi_free)
