"""Coherence checking for candidate algebra data on finite categories.

The data of a candidate algebra is two finite categories, three functors
(two tensor products and a comparison functor), and five structure
isomorphisms given as object-indexed component tables.  Validation checks
category axioms, functor laws, well-typedness of every component, naturality,
and invertibility, all by exhaustive enumeration.  The checker then evaluates
both composite paths of the six shared coherence families at every object
tuple and reports each failing instance.

Generator words evaluate to natural-transformation tables, so two different
generator-word decompositions of the same morphism can be compared on the
nose; well-definedness of that evaluation is exactly what the six diagram
families guarantee.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .diagrams import family_word_pairs
from .parenthesized import Word, evaluate_word
from .trees import Tree, arity, color


class CoherenceTypeError(Exception):
    """Structure data is ill-typed (missing or wrongly-shaped component)."""


class FiniteCategory:
    def __init__(self, name, objects, morphisms, src, tgt, compose, identities):
        self.name = name
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.compose_table = dict(compose)
        self.identities = dict(identities)
        self._inverses: dict = {}

    def validate(self) -> None:
        for o in self.objects:
            i = self.identities.get(o)
            if i is None or self.src[i] != o or self.tgt[i] != o:
                raise CoherenceTypeError(f"{self.name}: bad identity at {o!r}")
        for g in self.morphisms:
            for f in self.morphisms:
                if self.tgt[f] == self.src[g]:
                    if (g, f) not in self.compose_table:
                        raise CoherenceTypeError(f"{self.name}: composition not total at ({g!r}, {f!r})")
                    gf = self.compose_table[(g, f)]
                    if self.src[gf] != self.src[f] or self.tgt[gf] != self.tgt[g]:
                        raise CoherenceTypeError(f"{self.name}: composite endpoints wrong at ({g!r}, {f!r})")
        for f in self.morphisms:
            assert self.comp(f, self.identities[self.src[f]]) == f, "right identity law"
            assert self.comp(self.identities[self.tgt[f]], f) == f, "left identity law"
        for h in self.morphisms:
            for g in self.morphisms:
                if self.tgt[g] != self.src[h]:
                    continue
                for f in self.morphisms:
                    if self.tgt[f] != self.src[g]:
                        continue
                    assert self.comp(self.comp(h, g), f) == self.comp(h, self.comp(g, f)), \
                        f"{self.name}: associativity fails at ({h!r}, {g!r}, {f!r})"

    def comp(self, g, f):
        assert self.tgt[f] == self.src[g], f"{self.name}: not composable"
        return self.compose_table[(g, f)]

    def identity(self, obj):
        return self.identities[obj]

    def inverse(self, f):
        if f in self._inverses:
            return self._inverses[f]
        for g in self.morphisms:
            if (self.src[g] == self.tgt[f] and self.tgt[g] == self.src[f]
                    and self.comp(g, f) == self.identities[self.src[f]]
                    and self.comp(f, g) == self.identities[self.tgt[f]]):
                self._inverses[f] = g
                return g
        raise CoherenceTypeError(f"{self.name}: morphism {f!r} is not invertible")


@dataclass
class FunctorTable:
    """A functor of several typed arguments, given by total tables."""

    name: str
    sources: list          # list of FiniteCategory
    target: object         # FiniteCategory
    obj_map: dict          # tuple of objects -> object
    mor_map: dict          # tuple of morphisms -> morphism

    def on_objects(self, args: tuple):
        try:
            return self.obj_map[tuple(args)]
        except KeyError:
            raise CoherenceTypeError(f"functor {self.name}: no value at {args!r}")

    def on_morphisms(self, args: tuple):
        try:
            return self.mor_map[tuple(args)]
        except KeyError:
            raise CoherenceTypeError(f"functor {self.name}: no morphism value at {args!r}")

    def validate(self) -> None:
        for objs in itertools.product(*[c.objects for c in self.sources]):
            if tuple(objs) not in self.obj_map:
                raise CoherenceTypeError(f"functor {self.name}: missing object value at {objs!r}")
        for mors in itertools.product(*[c.morphisms for c in self.sources]):
            out = self.on_morphisms(tuple(mors))
            srcs = tuple(c.src[f] for c, f in zip(self.sources, mors))
            tgts = tuple(c.tgt[f] for c, f in zip(self.sources, mors))
            if self.target.src[out] != self.on_objects(srcs) or \
               self.target.tgt[out] != self.on_objects(tgts):
                raise CoherenceTypeError(f"functor {self.name}: endpoints wrong at {mors!r}")
        # identities and composition
        for objs in itertools.product(*[c.objects for c in self.sources]):
            ids = tuple(c.identity(o) for c, o in zip(self.sources, objs))
            assert self.on_morphisms(ids) == self.target.identity(self.on_objects(objs)), \
                f"functor {self.name}: identity law fails at {objs!r}"
        for gs in itertools.product(*[c.morphisms for c in self.sources]):
            for fs in itertools.product(*[c.morphisms for c in self.sources]):
                if all(c.tgt[f] == c.src[g] for c, g, f in zip(self.sources, gs, fs)):
                    comp_args = tuple(c.comp(g, f) for c, g, f in zip(self.sources, gs, fs))
                    assert self.on_morphisms(comp_args) == \
                        self.target.comp(self.on_morphisms(gs), self.on_morphisms(fs)), \
                        f"functor {self.name}: composition law fails"


class AlgebraData:
    """Candidate structure: categories, functors, and the five isomorphisms.

    ``unit_m``/``unit_n`` are optional unit objects; when both are present the
    strict-unit check verifies that they are strict units for the tensors and
    that the comparison functor preserves them.
    """

    def __init__(self, m_cat: FiniteCategory, n_cat: FiniteCategory,
                 m_c: FunctorTable, m_o: FunctorTable, f_functor: FunctorTable,
                 a_c: dict, a_o: dict, t: dict, p_iso: dict, psi: dict,
                 unit_m=None, unit_n=None):
        self.m_cat = m_cat
        self.n_cat = n_cat
        self.m_c = m_c
        self.m_o = m_o
        self.f_functor = f_functor
        self.a_c = dict(a_c)
        self.a_o = dict(a_o)
        self.t = dict(t)
        self.p_iso = dict(p_iso)
        self.psi = dict(psi)
        self.unit_m = unit_m
        self.unit_n = unit_n

    def check_strict_units(self) -> None:
        if self.unit_m is None or self.unit_n is None:
            raise CoherenceTypeError("strict-unit check needs unit objects for both categories")
        one_m, one_n = self.unit_m, self.unit_n
        for X in self.m_cat.objects:
            if self.m_c.on_objects((one_m, X)) != X or self.m_c.on_objects((X, one_m)) != X:
                raise CoherenceTypeError(f"unit is not strict for the closed tensor at {X!r}")
        for Y in self.n_cat.objects:
            if self.m_o.on_objects((one_n, Y)) != Y or self.m_o.on_objects((Y, one_n)) != Y:
                raise CoherenceTypeError(f"unit is not strict for the open tensor at {Y!r}")
        if self.f_functor.on_objects((one_m,)) != one_n:
            raise CoherenceTypeError("comparison functor does not preserve the unit")

    # -- validation ------------------------------------------------------

    def validate(self) -> None:
        self.m_cat.validate()
        self.n_cat.validate()
        self.m_c.validate()
        self.m_o.validate()
        self.f_functor.validate()
        M, N = self.m_cat, self.n_cat
        mc_, mo_, F = self.m_c.on_objects, self.m_o.on_objects, self.f_functor.on_objects

        def need(table, key, cat, src, tgt, name):
            comp = table.get(key)
            if comp is None:
                raise CoherenceTypeError(f"{name}: no component at {key!r}")
            if comp not in cat.morphisms or cat.src[comp] != src or cat.tgt[comp] != tgt:
                raise CoherenceTypeError(
                    f"{name}: component at {key!r} must be a morphism {src!r} -> {tgt!r}")
            cat.inverse(comp)

        for X, Y, Z in itertools.product(M.objects, repeat=3):
            need(self.a_c, (X, Y, Z), M, mc_((mc_((X, Y)), Z)), mc_((X, mc_((Y, Z)))), "a_c")
        for X, Y, Z in itertools.product(N.objects, repeat=3):
            need(self.a_o, (X, Y, Z), N, mo_((mo_((X, Y)), Z)), mo_((X, mo_((Y, Z)))), "a_o")
        for X, Y in itertools.product(M.objects, repeat=2):
            need(self.t, (X, Y), M, mc_((X, Y)), mc_((Y, X)), "t")
            need(self.p_iso, (X, Y), N, mo_((F((X,)), F((Y,)))), F((mc_((X, Y)),)), "p")
        for X in M.objects:
            for Y in N.objects:
                need(self.psi, (X, Y), N, mo_((F((X,)), Y)), mo_((Y, F((X,)))), "psi")
        self._check_naturality()

    def _check_naturality(self) -> None:
        M, N = self.m_cat, self.n_cat

        def square(table, key_src, key_tgt, lhs_mor, rhs_mor, cat, name):
            lhs = cat.comp(table[key_tgt], lhs_mor)
            rhs = cat.comp(rhs_mor, table[key_src])
            assert lhs == rhs, f"naturality of {name} fails at {key_src!r}"

        for f1 in M.morphisms:
            for f2 in M.morphisms:
                key_s = (M.src[f1], M.src[f2])
                key_t = (M.tgt[f1], M.tgt[f2])
                square(self.t, key_s, key_t,
                       self.m_c.on_morphisms((f1, f2)),
                       self.m_c.on_morphisms((f2, f1)), M, "t")
                square(self.p_iso, key_s, key_t,
                       self.m_o.on_morphisms((self.f_functor.on_morphisms((f1,)),
                                              self.f_functor.on_morphisms((f2,)))),
                       self.f_functor.on_morphisms((self.m_c.on_morphisms((f1, f2)),)),
                       N, "p")
        for f1 in M.morphisms:
            for g1 in N.morphisms:
                key_s = (M.src[f1], N.src[g1])
                key_t = (M.tgt[f1], N.tgt[g1])
                square(self.psi, key_s, key_t,
                       self.m_o.on_morphisms((self.f_functor.on_morphisms((f1,)), g1)),
                       self.m_o.on_morphisms((g1, self.f_functor.on_morphisms((f1,)))),
                       N, "psi")
        for fs in itertools.product(M.morphisms, repeat=3):
            key_s = tuple(M.src[f] for f in fs)
            key_t = tuple(M.tgt[f] for f in fs)
            square(self.a_c, key_s, key_t,
                   self.m_c.on_morphisms((self.m_c.on_morphisms(fs[:2]), fs[2])),
                   self.m_c.on_morphisms((fs[0], self.m_c.on_morphisms(fs[1:]))), M, "a_c")
        for fs in itertools.product(N.morphisms, repeat=3):
            key_s = tuple(N.src[f] for f in fs)
            key_t = tuple(N.tgt[f] for f in fs)
            square(self.a_o, key_s, key_t,
                   self.m_o.on_morphisms((self.m_o.on_morphisms(fs[:2]), fs[2])),
                   self.m_o.on_morphisms((fs[0], self.m_o.on_morphisms(fs[1:]))), N, "a_o")


# -- evaluation of generator words -------------------------------------------------


class TreeFunctor:
    """The multi-argument functor carved out by an object tree."""

    def __init__(self, data: AlgebraData, tree: Tree):
        self.data = data
        self.tree = tree
        n, m = arity(tree)
        self.n, self.m = n, m
        self.target = data.m_cat if color(tree) == "c" else data.n_cat

    def on_objects(self, oargs: dict, cargs: dict):
        return self._eval(self.tree, oargs, cargs, objects=True)

    def on_morphisms(self, oargs: dict, cargs: dict):
        return self._eval(self.tree, oargs, cargs, objects=False)

    def _eval(self, t: Tree, oargs, cargs, objects: bool):
        tag = t[0]
        if tag == "x":
            return cargs[t[1]]
        if tag == "y":
            return oargs[t[1]]
        if tag == "f":
            inner = self._eval(t[1], oargs, cargs, objects)
            table = self.data.f_functor
            return table.on_objects((inner,)) if objects else table.on_morphisms((inner,))
        if tag in ("mc", "mo"):
            a = self._eval(t[1], oargs, cargs, objects)
            b = self._eval(t[2], oargs, cargs, objects)
            table = self.data.m_c if tag == "mc" else self.data.m_o
            return table.on_objects((a, b)) if objects else table.on_morphisms((a, b))
        raise CoherenceTypeError(f"cannot evaluate tree node {tag!r}")


class NatTransTable:
    """Natural transformation between tree functors, as a component table."""

    def __init__(self, data: AlgebraData, src_tree: Tree, tgt_tree: Tree, components: dict):
        self.data = data
        self.src_tree = src_tree
        self.tgt_tree = tgt_tree
        self.components = components  # (oargs tuple, cargs tuple) -> morphism

    def __eq__(self, other):
        return (isinstance(other, NatTransTable) and self.src_tree == other.src_tree
                and self.tgt_tree == other.tgt_tree and self.components == other.components)

    def component(self, oargs: tuple, cargs: tuple):
        return self.components[(tuple(oargs), tuple(cargs))]


def _arg_tuples(data: AlgebraData, n: int, m: int):
    return itertools.product(itertools.product(data.n_cat.objects, repeat=n),
                             itertools.product(data.m_cat.objects, repeat=m))


class FinCatAlgebra:
    """Evaluate generator words against candidate structure data."""

    def __init__(self, data: AlgebraData):
        self.data = data
        g = {}
        from .trees import f as f_, mc, mo, x, y

        g["tau"] = (mc(x(1), x(2)), mc(x(2), x(1)),
                    lambda o, c: self.data.t[(c[0], c[1])])
        g["alpha_c"] = (mc(mc(x(1), x(2)), x(3)), mc(x(1), mc(x(2), x(3))),
                        lambda o, c: self.data.a_c[(c[0], c[1], c[2])])
        g["alpha_o"] = (mo(mo(y(1), y(2)), y(3)), mo(y(1), mo(y(2), y(3))),
                        lambda o, c: self.data.a_o[(o[0], o[1], o[2])])
        g["p"] = (mo(f_(x(1)), f_(x(2))), f_(mc(x(1), x(2))),
                  lambda o, c: self.data.p_iso[(c[0], c[1])])
        g["psi"] = (mo(f_(x(1)), y(1)), mo(y(1), f_(x(1))),
                    lambda o, c: self.data.psi[(c[0], o[0])])
        self._gens = g

    def _table(self, src_tree: Tree, tgt_tree: Tree, fn) -> NatTransTable:
        n, m = arity(src_tree)
        comps = {}
        for oargs, cargs in _arg_tuples(self.data, n, m):
            comps[(oargs, cargs)] = fn(oargs, cargs)
        return NatTransTable(self.data, src_tree, tgt_tree, comps)

    def generator(self, name: str) -> NatTransTable:
        src, tgt, fn = self._gens[name]
        return self._table(src, tgt, fn)

    def identity(self, tree: Tree) -> NatTransTable:
        functor = TreeFunctor(self.data, tree)

        def fn(oargs, cargs):
            obj = functor.on_objects(dict(enumerate(oargs, 1)), dict(enumerate(cargs, 1)))
            return functor.target.identity(obj)

        return self._table(tree, tree, fn)

    def compose(self, g: NatTransTable, f: NatTransTable) -> NatTransTable:
        assert f.tgt_tree == g.src_tree, "object mismatch"
        cat = self.data.m_cat if color(f.src_tree) == "c" else self.data.n_cat

        def fn(oargs, cargs):
            return cat.comp(g.component(oargs, cargs), f.component(oargs, cargs))

        return self._table(f.src_tree, g.tgt_tree, fn)

    def invert(self, v: NatTransTable) -> NatTransTable:
        cat = self.data.m_cat if color(v.src_tree) == "c" else self.data.n_cat

        def fn(oargs, cargs):
            return cat.inverse(v.component(oargs, cargs))

        return self._table(v.tgt_tree, v.src_tree, fn)

    def insert_closed(self, outer: NatTransTable, i: int, inner: NatTransTable) -> NatTransTable:
        from .trees import graft_closed

        src_tree = graft_closed(outer.src_tree, i, inner.src_tree)
        tgt_tree = graft_closed(outer.tgt_tree, i, inner.tgt_tree)
        return self._insert(outer, inner, src_tree, tgt_tree, i, "c")

    def insert_open(self, outer: NatTransTable, j: int, inner: NatTransTable) -> NatTransTable:
        from .trees import graft_open

        src_tree = graft_open(outer.src_tree, j, inner.src_tree)
        tgt_tree = graft_open(outer.tgt_tree, j, inner.tgt_tree)
        return self._insert(outer, inner, src_tree, tgt_tree, j, "o")

    def _insert(self, outer, inner, src_tree, tgt_tree, slot, col) -> NatTransTable:
        n_out, m_out = arity(outer.src_tree)
        n_in, m_in = arity(inner.src_tree)
        inner_src = TreeFunctor(self.data, inner.src_tree)
        inner_tgt = TreeFunctor(self.data, inner.tgt_tree)
        outer_tgt = TreeFunctor(self.data, outer.tgt_tree)
        cat = outer_tgt.target

        def fn(oargs, cargs):
            # split the composite arguments per the canonical relabeling
            if col == "o":
                in_o = oargs[slot - 1: slot - 1 + n_in]
                out_o = oargs[: slot - 1] + oargs[slot - 1 + n_in:]
                in_c = cargs[:m_in]
                out_c = cargs[m_in:]
            else:
                in_o = ()
                out_o = oargs
                in_c = cargs[slot - 1: slot - 1 + m_in]
                out_c = cargs[: slot - 1] + cargs[slot - 1 + m_in:]
            in_odict = dict(enumerate(in_o, 1))
            in_cdict = dict(enumerate(in_c, 1))
            inner_comp = inner.component(in_o, in_c)
            plug_src = inner_src.on_objects(in_odict, in_cdict)
            # outer component at (args with the inner source object at the slot)
            if col == "o":
                oo = dict(enumerate(out_o[: slot - 1] + (plug_src,) + out_o[slot - 1:], 1))
                occ = dict(enumerate(out_c, 1))
            else:
                oo = dict(enumerate(out_o, 1))
                occ = dict(enumerate(out_c[: slot - 1] + (plug_src,) + out_c[slot - 1:], 1))
            theta = outer.component(tuple(oo[k] for k in sorted(oo)),
                                    tuple(occ[k] for k in sorted(occ)))
            # whisker the inner component through the outer target functor
            if col == "o":
                mor_o = {k: self.data.n_cat.identity(v) for k, v in oo.items()}
                mor_o[slot] = inner_comp
                mor_c = {k: self.data.m_cat.identity(v) for k, v in occ.items()}
            else:
                mor_o = {k: self.data.n_cat.identity(v) for k, v in oo.items()}
                mor_c = {k: self.data.m_cat.identity(v) for k, v in occ.items()}
                mor_c[slot] = inner_comp
            whisker = outer_tgt.on_morphisms(mor_o, mor_c)
            return cat.comp(whisker, theta)

        return self._table(src_tree, tgt_tree, fn)

    def relabel(self, v: NatTransTable, open_map, closed_map) -> NatTransTable:
        from .trees import relabel_tree

        src_tree = relabel_tree(v.src_tree, open_map, closed_map)
        tgt_tree = relabel_tree(v.tgt_tree, open_map, closed_map)
        n, m = arity(src_tree)

        def fn(oargs, cargs):
            old_o = tuple(oargs[(open_map or {}).get(k, k) - 1] for k in range(1, n + 1))
            old_c = tuple(cargs[(closed_map or {}).get(k, k) - 1] for k in range(1, m + 1))
            return v.component(old_o, old_c)

        return self._table(src_tree, tgt_tree, fn)


# -- the checker --------------------------------------------------------------------


@dataclass
class CoherenceReport:
    passed: bool
    families: dict = field(default_factory=dict)   # name -> list of failing (instance, tuple)
    instances_checked: dict = field(default_factory=dict)

    def failing_families(self):
        return sorted(name for name, fails in self.families.items() if fails)


def check_coherence(data: AlgebraData, strict_units: bool = False) -> CoherenceReport:
    data.validate()
    if strict_units:
        data.check_strict_units()
    algebra = FinCatAlgebra(data)
    report = CoherenceReport(passed=True)
    for name, pairs in family_word_pairs().items():
        failures = []
        checked = 0
        for idx, (wl, wr, start, _end) in enumerate(pairs):
            left = evaluate_word(wl, algebra)
            right = evaluate_word(wr, algebra)
            for key in left.components:
                checked += 1
                if left.components[key] != right.components[key]:
                    failures.append((idx, key))
        report.families[name] = failures
        report.instances_checked[name] = checked
        if failures:
            report.passed = False
    return report


def theta_eval(data: AlgebraData, word: Word) -> NatTransTable:
    """Evaluate a generator word against validated structure data."""
    return evaluate_word(word, FinCatAlgebra(data))


# -- shipped examples ------------------------------------------------------------------


def _group_category(name: str, elements) -> FiniteCategory:
    """Discrete category on the elements of a finite group (identities only)."""
    objects = list(elements)
    morphisms = [("id", o) for o in objects]
    src = {m: m[1] for m in morphisms}
    tgt = dict(src)
    compose = {((("id", o)), ("id", o)): ("id", o) for o in objects}
    identities = {o: ("id", o) for o in objects}
    return FiniteCategory(name, objects, morphisms, src, tgt, compose, identities)


def _discrete_group_algebra(name: str, elements, op) -> AlgebraData:
    cat = _group_category(name, elements)
    prod_obj = {(a, b): op(a, b) for a in elements for b in elements}
    prod_mor = {(("id", a), ("id", b)): ("id", op(a, b)) for a in elements for b in elements}
    tensor = FunctorTable("m", [cat, cat], cat, prod_obj, prod_mor)
    ident = FunctorTable("F", [cat], cat, {(a,): a for a in elements},
                         {(("id", a),): ("id", a) for a in elements})
    triples = list(itertools.product(elements, repeat=3))
    pairs = list(itertools.product(elements, repeat=2))
    a_table = {(x, y, z): ("id", op(op(x, y), z)) for x, y, z in triples}
    # the braiding wants a morphism xy -> yx, which a discrete category only
    # has when the group is abelian
    t_table = {(x, y): ("id", op(x, y)) for x, y in pairs}
    unit = next(e for e in elements if all(op(e, b) == b and op(b, e) == b for b in elements))
    return AlgebraData(cat, cat, tensor, tensor, ident,
                       a_table, a_table, t_table, t_table,
                       {(x, y): ("id", op(x, y)) for x, y in pairs},
                       unit_m=unit, unit_n=unit)


def build_z2_discrete() -> AlgebraData:
    return _discrete_group_algebra("Z2", [0, 1], lambda a, b: (a + b) % 2)


def build_s3_discrete() -> AlgebraData:
    """Nonabelian discrete example; validation must reject the braiding's typing."""
    import itertools as it

    elements = list(it.permutations((1, 2, 3)))

    def op(a, b):  # a after b
        return tuple(a[b[i] - 1] for i in range(3))

    return _discrete_group_algebra("S3", elements, op)


def build_z2_graded() -> AlgebraData:
    """Sign groupoid: objects are parities, morphisms are signs, braiding is Koszul."""
    objects = [0, 1]
    morphisms = [(a, s) for a in objects for s in (1, -1)]
    src = {m: m[0] for m in morphisms}
    tgt = dict(src)
    compose = {}
    for a in objects:
        for s1 in (1, -1):
            for s2 in (1, -1):
                compose[((a, s1), (a, s2))] = (a, s1 * s2)
    identities = {a: (a, 1) for a in objects}
    cat = FiniteCategory("sign", objects, morphisms, src, tgt, compose, identities)

    prod_obj = {(a, b): (a + b) % 2 for a in objects for b in objects}
    prod_mor = {((a, s1), (b, s2)): ((a + b) % 2, s1 * s2)
                for a in objects for b in objects for s1 in (1, -1) for s2 in (1, -1)}
    tensor = FunctorTable("m", [cat, cat], cat, prod_obj, prod_mor)
    ident = FunctorTable("F", [cat], cat, {(a,): a for a in objects},
                         {((a, s),): (a, s) for a in objects for s in (1, -1)})
    triples = list(itertools.product(objects, repeat=3))
    pairs = list(itertools.product(objects, repeat=2))
    a_table = {(x, y, z): ((x + y + z) % 2, 1) for x, y, z in triples}
    t_table = {(x, y): ((x + y) % 2, (-1) ** (x * y)) for x, y in pairs}
    p_table = {(x, y): ((x + y) % 2, 1) for x, y in pairs}
    psi_table = {(x, y): ((x + y) % 2, (-1) ** (x * y)) for x, y in pairs}
    return AlgebraData(cat, cat, tensor, tensor, ident,
                       a_table, a_table, t_table, p_table, psi_table,
                       unit_m=0, unit_n=0)


# -- JSON ------------------------------------------------------------------------------


def category_to_json(cat: FiniteCategory) -> dict:
    return {
        "name": cat.name,
        "objects": [repr(o) for o in cat.objects],
        "morphisms": [{"id": repr(m), "src": repr(cat.src[m]), "tgt": repr(cat.tgt[m])}
                      for m in cat.morphisms],
        "compose": [[repr(g), repr(f), repr(gf)] for (g, f), gf in cat.compose_table.items()],
        "identities": {repr(o): repr(m) for o, m in cat.identities.items()},
    }


def algebra_to_json(data: AlgebraData) -> dict:
    def table_json(table):
        return [[list(map(repr, key)), repr(val)] for key, val in sorted(table.items(), key=repr)]

    def functor_json(ft: FunctorTable):
        return {"objects": [[list(map(repr, k)), repr(v)] for k, v in sorted(ft.obj_map.items(), key=repr)],
                "morphisms": [[list(map(repr, k)), repr(v)] for k, v in sorted(ft.mor_map.items(), key=repr)]}

    out = {
        "M": category_to_json(data.m_cat),
        "N": category_to_json(data.n_cat),
        "m_c": functor_json(data.m_c),
        "m_o": functor_json(data.m_o),
        "F": functor_json(data.f_functor),
        "a_c": table_json(data.a_c),
        "a_o": table_json(data.a_o),
        "t": table_json(data.t),
        "p": table_json(data.p_iso),
        "psi": table_json(data.psi),
    }
    if data.unit_m is not None:
        out["unit_M"] = repr(data.unit_m)
    if data.unit_n is not None:
        out["unit_N"] = repr(data.unit_n)
    return out


def algebra_from_json(payload: dict) -> AlgebraData:
    import ast

    def parse(s):
        return ast.literal_eval(s)

    def category(d):
        objects = [parse(o) for o in d["objects"]]
        morphisms = [parse(m["id"]) for m in d["morphisms"]]
        src = {parse(m["id"]): parse(m["src"]) for m in d["morphisms"]}
        tgt = {parse(m["id"]): parse(m["tgt"]) for m in d["morphisms"]}
        compose = {(parse(g), parse(f)): parse(gf) for g, f, gf in d["compose"]}
        identities = {parse(o): parse(m) for o, m in d["identities"].items()}
        return FiniteCategory(d["name"], objects, morphisms, src, tgt, compose, identities)

    mcat = category(payload["M"])
    ncat = category(payload["N"])

    def functor(name, d, sources, target):
        obj_map = {tuple(parse(x) for x in k): parse(v) for k, v in d["objects"]}
        mor_map = {tuple(parse(x) for x in k): parse(v) for k, v in d["morphisms"]}
        return FunctorTable(name, sources, target, obj_map, mor_map)

    def table(rows):
        return {tuple(parse(x) for x in k): parse(v) for k, v in rows}

    return AlgebraData(mcat, ncat,
                       functor("m_c", payload["m_c"], [mcat, mcat], mcat),
                       functor("m_o", payload["m_o"], [ncat, ncat], ncat),
                       functor("F", payload["F"], [mcat], ncat),
                       table(payload["a_c"]), table(payload["a_o"]),
                       table(payload["t"]), table(payload["p"]), table(payload["psi"]),
                       unit_m=parse(payload["unit_M"]) if "unit_M" in payload else None,
                       unit_n=parse(payload["unit_N"]) if "unit_N" in payload else None)
