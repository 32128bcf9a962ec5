import math
import random

from braidops.trees import (
    UNIT_C,
    UNIT_O,
    ShuffleObject,
    arity,
    enumerate_closed_trees,
    enumerate_shuffle_objects,
    enumerate_trees,
    f,
    graft_closed,
    graft_open,
    leftcomb_closed,
    leftcomb_open,
    mc,
    mo,
    omega,
    parse_tree,
    show_tree,
    starred_flatten,
    u_flatten,
    unit_normalize,
    validate,
    x,
    y,
)


def rand_tree(rng, n, m):
    choices = enumerate_trees(n, m)
    return rng.choice(choices)


def test_graft_substitution():
    outer = mo(y(1), y(2))
    inner = f(x(1))
    out = graft_open(outer, 1, inner)
    assert out == mo(f(x(1)), y(1))


def test_graft_unit_reduction():
    outer = mo(y(1), y(2))
    assert graft_open(outer, 2, UNIT_O) == y(1)
    assert graft_open(graft_open(outer, 2, UNIT_O), 1, UNIT_O) == UNIT_O
    both = graft_open(graft_open(outer, 1, UNIT_O), 1, UNIT_O)
    assert both == UNIT_O


def test_unit_rewriting_confluent():
    rng = random.Random(0)

    def random_strategy_normalize(t, rng):
        def redexes(s, path=()):
            out = []
            tag = s[0]
            if tag == "mc" and (s[1] == UNIT_C or s[2] == UNIT_C):
                out.append(path)
            if tag == "mo" and (s[1] == UNIT_O or s[2] == UNIT_O):
                out.append(path)
            if tag == "f" and s[1] == UNIT_C:
                out.append(path)
            if tag in ("mc", "mo"):
                out += redexes(s[1], path + (1,)) + redexes(s[2], path + (2,))
            elif tag == "f":
                out += redexes(s[1], path + (1,))
            return out

        def rewrite_at(s, path):
            if path:
                i = path[0]
                parts = list(s)
                parts[i] = rewrite_at(s[i], path[1:])
                return tuple(parts)
            tag = s[0]
            if tag == "f":
                return UNIT_O
            unit = UNIT_C if tag == "mc" else UNIT_O
            if s[1] == unit:
                return s[2]
            return s[1]

        while True:
            r = redexes(t)
            if not r:
                return t
            t = rewrite_at(t, rng.choice(r))

    # build unit-littered trees and reduce with two strategies
    for _ in range(40):
        base = rand_tree(rng, rng.randint(0, 2), rng.randint(1, 2))

        def litter(s, depth=0):
            if depth > 3:
                return s
            tag = s[0]
            if tag in ("x",):
                return ("mc", s, UNIT_C) if rng.random() < 0.5 else s
            if tag in ("y",):
                return ("mo", UNIT_O, s) if rng.random() < 0.5 else s
            if tag == "f":
                return ("f", litter(s[1], depth + 1))
            if tag in ("mc", "mo"):
                return (tag, litter(s[1], depth + 1), litter(s[2], depth + 1))
            return s

        littered = litter(base)
        assert unit_normalize(littered) == random_strategy_normalize(littered, rng)
        assert unit_normalize(littered) == unit_normalize(unit_normalize(littered))


def test_omega_examples():
    t = f(mc(x(1), x(2)))
    ob = omega(t)
    assert ob.pattern == ("a", "a") and ob.aerial == (1, 2) and ob.terrestrial == ()
    t2 = mo(f(x(1)), y(1))
    ob2 = omega(t2)
    assert ob2.pattern == ("a", "t")
    assert omega(f(mc(x(1), x(2)))) == omega(mo(f(x(1)), f(x(2))))
    assert f(mc(x(1), x(2))) != mo(f(x(1)), f(x(2)))


def test_omega_graft_compatibility():
    rng = random.Random(1)
    for _ in range(40):
        n, m = rng.randint(0, 2), rng.randint(0, 2)
        if n + m == 0:
            continue
        outer = rand_tree(rng, n, m)
        if m and rng.random() < 0.5:
            i = rng.randint(1, m)
            mi = rng.randint(1, 2)
            inner = rng.choice(enumerate_closed_trees(mi))
            assert omega(graft_closed(outer, i, inner)) == \
                omega(outer).insert_closed(i, omega_closed_seq(inner))
        elif n:
            j = rng.randint(1, n)
            ni, mi = rng.randint(0, 2), rng.randint(0, 2)
            if ni + mi == 0:
                continue
            inner = rand_tree(rng, ni, mi)
            assert omega(graft_open(outer, j, inner)) == omega(outer).insert_open(j, omega(inner))


def omega_closed_seq(t):
    from braidops.trees import closed_labels

    return closed_labels(t)


def test_u_flatten():
    assert u_flatten(f(mc(x(1), x(2)))) == mc(x(1), x(2))
    assert u_flatten(mo(f(x(1)), f(x(2)))) == mc(x(1), x(2))
    t = mo(f(x(2)), mo(f(x(1)), f(x(3))))
    assert u_flatten(t) == mc(x(2), mc(x(1), x(3)))

    # structural induction oracle: erase f nodes, rename mo to mc
    rng = random.Random(2)
    for _ in range(20):
        t = rand_tree(rng, 0, rng.randint(1, 3))

        def erase(s):
            tag = s[0]
            if tag == "f":
                return erase(s[1])
            if tag == "mo":
                return ("mc", erase(s[1]), erase(s[2]))
            if tag == "mc":
                return ("mc", erase(s[1]), erase(s[2]))
            return s

        assert u_flatten(t) == erase(t)


def test_starred_flatten():
    t = mo(f(x(1)), y(1))
    assert starred_flatten(t) == mc(x(2), x(1))
    t2 = mo(y(2), mo(f(mc(x(1), x(2))), y(1)))
    flat = starred_flatten(t2)
    assert arity(flat) == (0, 4)
    assert flat == mc(x(2), mc(mc(x(3), x(4)), x(1)))


def test_enumeration_counts():
    assert enumerate_trees(0, 1) == [f(x(1))]
    assert sorted(enumerate_trees(2, 0)) == sorted([mo(y(1), y(2)), mo(y(2), y(1))])
    e02 = enumerate_trees(0, 2)
    assert len(e02) == 4
    assert set(e02) == {f(mc(x(1), x(2))), f(mc(x(2), x(1))),
                        mo(f(x(1)), f(x(2))), mo(f(x(2)), f(x(1)))}
    for n in range(1, 6):
        catalan = math.comb(2 * (n - 1), n - 1) // n
        assert len(enumerate_trees(n, 0)) == math.factorial(n) * catalan


def test_enumerate_shuffle_objects():
    assert len(enumerate_shuffle_objects(2, 1)) == 6
    for n, m in [(0, 1), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]:
        assert len(enumerate_shuffle_objects(n, m)) == \
            math.comb(n + m, n) * math.factorial(n) * math.factorial(m)


def test_graft_associativity_random():
    rng = random.Random(3)
    for _ in range(30):
        outer = rand_tree(rng, 2, 1)
        a = rand_tree(rng, 1, 1)
        b = rand_tree(rng, 0, 2)
        # graft b into a's open slot, then into outer, vs. stepwise
        left = graft_open(outer, 1, graft_open(a, 1, b))
        right = graft_open(graft_open(outer, 1, a), 1, b)
        assert left == right
        # disjoint open slots commute up to the closed-block swap: the later
        # insertion's closed labels always land first
        from braidops.trees import relabel_tree

        t1 = graft_open(graft_open(outer, 2, a), 1, b)
        t2 = graft_open(graft_open(outer, 1, b), 1, a)
        ma, mb = 1, 2  # closed arities of a and b
        swap = {l: l + mb for l in range(1, ma + 1)}
        swap.update({ma + l: l for l in range(1, mb + 1)})
        total = 1 + ma + mb
        swap.update({l: l for l in range(ma + mb + 1, total + 1)})
        assert t1 == relabel_tree(t2, None, swap)


def test_validate_and_sexpr():
    t = mo(f(mc(x(1), x(2))), mo(f(x(3)), y(1)))
    validate(t)
    assert show_tree(t) == "mo(f(mc(x1,x2)),mo(f(x3),y1))"
    assert parse_tree("mo(f(mc(x1, x2)), mo(f(x3), y1))") == t
    assert parse_tree(show_tree(t)) == t
    assert parse_tree("uo") == UNIT_O
    assert show_tree(leftcomb_closed((2, 1, 3))) == "mc(mc(x2,x1),x3)"
    assert show_tree(leftcomb_open((1, 2))) == "mo(y1,y2)"


def test_shuffle_object_ops():
    ob = ShuffleObject(("t", "a", "a", "t", "a"), (1, 2), (1, 2, 3))
    assert str(ob) == "t1 a1 a2 t2 a3"
    grown = ob.insert_closed(2, (2, 1))
    assert grown.m == 4 and grown.aerial == (1, 3, 2, 4)
    inner = ShuffleObject(("a", "t"), (1,), (1,))
    big = ob.insert_open(2, inner)
    assert big.n == 2 and big.m == 4
    assert big.pattern == ("t", "a", "a", "a", "t", "a")
    assert big.aerial == (2, 3, 1, 4)
    assert ob.delete_aerial(2).aerial == (1, 2)
    assert ob.delete_terrestrial(1).terrestrial == (1,)


def test_graft_equivariance():
    # relabeling the inner tree relabels its block in the composite
    rng = random.Random(4)
    from braidops.trees import relabel_tree

    for _ in range(30):
        outer = rand_tree(rng, 2, 1)
        ni, mi = rng.randint(1, 2), rng.randint(1, 2)
        inner = rand_tree(rng, ni, mi)
        j = rng.randint(1, 2)
        g = dict(zip(range(1, ni + 1), rng.sample(range(1, ni + 1), ni)))
        h = dict(zip(range(1, mi + 1), rng.sample(range(1, mi + 1), mi)))
        lhs = graft_open(outer, j, relabel_tree(inner, g, h))
        base = graft_open(outer, j, inner)
        n_tot = 2 + ni - 1
        m_tot = 1 + mi
        block_g = {l: l for l in range(1, n_tot + 1)}
        for l in range(1, ni + 1):
            block_g[j - 1 + l] = j - 1 + g[l]
        block_h = {l: l for l in range(1, m_tot + 1)}
        for l in range(1, mi + 1):
            block_h[l] = h[l]
        assert lhs == relabel_tree(base, block_g, block_h)
