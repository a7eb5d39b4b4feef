"""Acceptance suite: one test per criterion, exact checks, stated budgets.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line
per criterion with its runtime.
"""

import random
import time
from fractions import Fraction
from math import comb

import suites
from naive_oracle import oracle_quotient_dim
from homenv.algebra import (
    HomAlgebra,
    HomModule,
    check_hom_leibniz,
    check_hom_lie,
    dialgebra_from_associative,
    hleib,
    hlie,
    hom_module,
)
from homenv.envelope import (
    check_quotient_axioms,
    f_has,
    induced_morphism_check,
    u_hleib,
    u_hlie,
)
from homenv.free import (
    Element,
    Monomial,
    Window,
    alpha_free,
    basis_window,
    generator,
    mul_free,
    universal_map,
)
from homenv.linalg import identity
from homenv.trees import (
    LEAF,
    Leaf,
    catalan,
    decompose_di,
    decompose_weighted,
    enumerate_diweighted,
    enumerate_trees,
    enumerate_weighted,
    graft_di,
    graft_weighted,
    parse_tree,
    shift_di,
    shift_weight,
)


def report(number, name, start):
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {number:02d} {name}: PASS ({elapsed:.2f}s)")
    return elapsed


def catalan_recurrence(n):
    table = [1]
    for k in range(n):
        table.append(sum(table[i] * table[k - i] for i in range(k + 1)))
    return table[n]


def test_criterion_01_tree_counts():
    start = time.monotonic()
    for n in range(1, 13):
        assert len(enumerate_trees(n)) == catalan(n - 1) == catalan_recurrence(n - 1)
    assert catalan(11) == 58786
    elapsed = report(1, "tree-counts", start)
    assert elapsed < 5.0


def test_criterion_02_decorated_tree_counts():
    start = time.monotonic()
    for n in range(1, 7):
        for w in range(5):
            base = catalan(n - 1) * comb(w + n - 1, n - 1)
            assert len(enumerate_weighted(n, w)) == base
            assert len(enumerate_diweighted(n, w)) == base * 2 ** (n - 1)
    elapsed = report(2, "decorated-tree-counts", start)
    assert elapsed < 5.0


def test_criterion_03_decomposition_bijectivity():
    start = time.monotonic()
    seen = set()
    for t in enumerate_weighted(4, 2) + enumerate_weighted(3, 2) + enumerate_weighted(2, 2):
        left, right, r = decompose_weighted(t)
        assert shift_weight(graft_weighted(left, right), r) == t
        assert (left, right, r) not in seen
        seen.add((left, right, r))
    seen = set()
    for t in enumerate_diweighted(3, 1) + enumerate_diweighted(2, 1):
        left, right, side, m = decompose_di(t)
        assert shift_di(graft_di(left, right, side), m) == t
        assert (left, right, side, m) not in seen
        seen.add((left, right, side, m))
    report(3, "decomposition-bijectivity", start)


def test_criterion_04_displayed_four_tree():
    start = time.monotonic()
    assembled = shift_weight(
        graft_weighted(
            LEAF,
            shift_weight(
                graft_weighted(shift_weight(graft_weighted(LEAF, LEAF), 5), LEAF), 2
            ),
        ),
        7,
    )
    for text in (
        "(i v ((i v i)[5] v i)[2])[7]",
        "((i v ((i v i)[5] v i)[2])[7])",
    ):
        assert parse_tree(text) == assembled
    assert assembled.weight == 7
    assert assembled.right.weight == 2
    assert assembled.right.left.weight == 5

    from homenv.free import eval_tree_product

    rng = random.Random(20240)
    for _ in range(20):
        d = 2
        mul = [
            [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(d)] for _ in range(d)]
            for _ in range(d)
        ]
        alpha = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(d)] for _ in range(d)]
        a = HomAlgebra(HomModule(d, alpha), mul)
        xs = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(d)) for _ in range(4)]

        def alpha_pow(v, r):
            for _ in range(r):
                v = a.module.apply_alpha(v)
            return v

        nested = alpha_pow(
            a.product(
                xs[0],
                alpha_pow(a.product(alpha_pow(a.product(xs[1], xs[2]), 5), xs[3]), 2),
            ),
            7,
        )
        assert eval_tree_product(a, assembled, xs) == nested
    report(4, "displayed-four-tree", start)


def test_criterion_05_functor_identities():
    start = time.monotonic()
    assoc = suites.hom_associative_suite(count=100, max_dim=3)
    assert len(assoc) == 100
    for a in assoc:
        assert check_hom_lie(hlie(a)) == []
    dis = suites.hom_dialgebra_suite(count=100, max_dim=3)
    assert len(dis) == 100
    for d in dis:
        assert check_hom_leibniz(hleib(d)) == []
    elapsed = report(5, "functor-identities", start)
    assert elapsed < 30.0


def test_criterion_06_commuting_square():
    start = time.monotonic()
    for a in suites.hom_associative_suite(count=100, max_dim=3):
        assert hleib(dialgebra_from_associative(a)).mul == hlie(a).mul
    report(6, "commuting-square", start)


def _universal_property_fraction_case():
    # dim V = 1 into dim A = 2, fraction-valued data, fully fresh per pair
    rng = random.Random(7001)
    c = Fraction(3, 2)
    alpha_a = ((c, Fraction(rng.randint(-2, 2))), (Fraction(0), Fraction(rng.randint(-2, 2))))
    mul = tuple(
        tuple(
            tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(2))
            for _ in range(2)
        )
        for _ in range(2)
    )
    a = HomAlgebra(HomModule(2, alpha_a), mul)
    module = HomModule(1, ((c,),))
    fmat = ((Fraction(2),), (Fraction(0),))  # eigenvector column
    fcols = [(Fraction(2), Fraction(0))]

    cache = {}

    def by_decomposition(m):
        got = cache.get(m)
        if got is not None:
            return got
        if m.arity == 1:
            value = fcols[m.labels[0]]
        else:
            left, right, r = decompose_weighted(m.tree)
            p = left.arity
            value = a.product(
                by_decomposition(Monomial(left, m.labels[:p])),
                by_decomposition(Monomial(right, m.labels[p:])),
            )
            for _ in range(r):
                value = a.module.apply_alpha(value)
        cache[m] = value
        return value

    window = basis_window(module, Window(4, 2))
    assert len(window) == 66
    # unit leg
    assert universal_map(module, a, fmat, Element.monomial(generator(0))) == fcols[0]
    # twist leg on every monomial
    for m in window:
        e = Element.monomial(m)
        lhs = universal_map(module, a, fmat, alpha_free(module, e))
        rhs = a.module.apply_alpha(universal_map(module, a, fmat, e))
        assert lhs == rhs
    # product leg on every pair, fresh evaluation against the decomposition oracle
    for ma in window:
        ea = Element.monomial(ma)
        for mb in window:
            product = mul_free(ea, Element.monomial(mb))
            lhs = universal_map(module, a, fmat, product)
            rhs = a.product(by_decomposition(ma), by_decomposition(mb))
            assert lhs == rhs


def _universal_property_integer_case():
    # dim V = 2 into dim A = 3, integer data, all pairs via an integer path
    rng = random.Random(7002)
    dv, da = 2, 3
    alpha_v = [[rng.randint(-2, 2) for _ in range(dv)] for _ in range(dv)]
    alpha_a = [
        [alpha_v[0][0], alpha_v[0][1], rng.randint(-2, 2)],
        [alpha_v[1][0], alpha_v[1][1], rng.randint(-2, 2)],
        [0, 0, rng.randint(-2, 2)],
    ]
    imul = [[[rng.randint(-2, 2) for _ in range(da)] for _ in range(da)] for _ in range(da)]
    module = HomModule(dv, alpha_v)
    a = HomAlgebra(HomModule(da, alpha_a), imul)
    fmat = ((1, 0), (0, 1), (0, 0))
    fcols = [(1, 0, 0), (0, 1, 0)]

    def int_alpha(v):
        return tuple(sum(alpha_a[i][j] * v[j] for j in range(da)) for i in range(da))

    def int_mul(x, y):
        out = [0] * da
        for i, xi in enumerate(x):
            if xi:
                plane = imul[i]
                for j, yj in enumerate(y):
                    if yj:
                        coeff = xi * yj
                        row = plane[j]
                        for k in range(da):
                            if row[k]:
                                out[k] += coeff * row[k]
        return tuple(out)

    def int_eval(tree, labels, lo, hi):
        # direct recursive evaluation, integers only
        if isinstance(tree, Leaf):
            return fcols[labels[lo]]
        p = tree.left.arity
        value = int_mul(
            int_eval(tree.left, labels, lo, lo + p),
            int_eval(tree.right, labels, lo + p, hi),
        )
        for _ in range(tree.weight):
            value = int_alpha(value)
        return value

    dec_cache = {}

    def int_by_decomposition(m):
        got = dec_cache.get(m)
        if got is not None:
            return got
        if m.arity == 1:
            value = fcols[m.labels[0]]
        else:
            left, right, r = decompose_weighted(m.tree)
            p = left.arity
            value = int_mul(
                int_by_decomposition(Monomial(left, m.labels[:p])),
                int_by_decomposition(Monomial(right, m.labels[p:])),
            )
            for _ in range(r):
                value = int_alpha(value)
        dec_cache[m] = value
        return value

    window = basis_window(module, Window(4, 2))
    assert len(window) == 910

    # three-way agreement on every window monomial: package map, direct
    # integer recursion, decomposition recursion
    direct = {}
    for m in window:
        d1 = int_eval(m.tree, m.labels, 0, m.arity)
        d2 = int_by_decomposition(m)
        d3 = universal_map(module, a, fmat, Element.monomial(m))
        assert d1 == d2 == tuple(int(x) for x in d3)
        direct[m] = d1

    # unit leg
    for i in range(dv):
        value = universal_map(module, a, fmat, Element.monomial(generator(i)))
        assert tuple(int(x) for x in value) == fcols[i]

    # twist leg
    for m in window:
        e = Element.monomial(m)
        lhs = universal_map(module, a, fmat, alpha_free(module, e))
        rhs = a.module.apply_alpha(universal_map(module, a, fmat, e))
        assert lhs == rhs

    # product leg on all pairs: fresh direct evaluation of the grafted
    # monomial against the product of decomposition values
    at = 0
    for ma in window:
        ga = direct[ma]
        for mb in window:
            labels = ma.labels + mb.labels
            tree = graft_weighted(ma.tree, mb.tree)
            lhs = int_eval(tree, labels, 0, len(labels))
            rhs = int_mul(ga, direct[mb])
            assert lhs == rhs
            if at % 9973 == 0:
                # spot-check the package map against the integer path
                value = universal_map(
                    module, a, fmat, mul_free(Element.monomial(ma), Element.monomial(mb))
                )
                assert tuple(int(x) for x in value) == lhs
            at += 1


def test_criterion_07_universal_property():
    start = time.monotonic()
    _universal_property_fraction_case()
    _universal_property_integer_case()
    elapsed = report(7, "universal-property", start)
    assert elapsed < 60.0


def test_criterion_08_envelope_goldens():
    start = time.monotonic()
    zero = [[[0]]]
    one = identity(1)
    # oracle confirmation of the golden values (pads 0 and 1)
    assert oracle_quotient_dim(zero, one, 1, 2, 1, 0, di=False) == 3
    assert oracle_quotient_dim(zero, one, 1, 2, 1, 1, di=False) == 3
    assert oracle_quotient_dim(zero, one, 1, 3, 0, 0, di=False) == 3
    assert oracle_quotient_dim(zero, one, 1, 3, 0, 1, di=False) == 3
    assert oracle_quotient_dim(zero, one, 1, 2, 0, 0, di=True) == 2
    assert oracle_quotient_dim(zero, one, 1, 2, 0, 1, di=True) == 2
    # pipeline values, stable for pad in {0, 1, 2}
    lie = HomAlgebra(hom_module(1), zero)
    for pad in (0, 1, 2):
        assert u_hlie(lie, Window(2, 1, pad)).dim == 3
        assert u_hlie(lie, Window(3, 0, pad)).dim == 3
        assert u_hleib(lie, Window(2, 0, pad)).dim == 2
    elapsed = report(8, "envelope-goldens", start)
    assert elapsed < 60.0


def quotient_suite():
    dim1 = HomAlgebra(hom_module(1), [[[0]]])
    pair_lie = hlie(suites.left_unit_pair())
    square_zero = HomAlgebra(hom_module(2), [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])
    return [
        ("u_hlie dim1 (2,1,1)", u_hlie(dim1, Window(2, 1, 1))),
        ("u_hlie dim1 (3,0,1)", u_hlie(dim1, Window(3, 0, 1))),
        ("u_hlie dim1 (3,1,1)", u_hlie(dim1, Window(3, 1, 1))),
        ("u_hlie dim1 (4,1,0)", u_hlie(dim1, Window(4, 1, 0))),
        ("u_hlie pair (3,1,1)", u_hlie(pair_lie, Window(3, 1, 1))),
        ("f_has dim1 (3,0,1)", f_has(hom_module(1), Window(3, 0, 1))),
        ("f_has dim1 (4,1,0)", f_has(hom_module(1), Window(4, 1, 0))),
        ("f_has dim2 (3,1,1)", f_has(hom_module(2), Window(3, 1, 1))),
        ("u_hleib dim1 (2,0,1)", u_hleib(dim1, Window(2, 0, 1))),
        ("u_hleib dim1 (3,1,1)", u_hleib(dim1, Window(3, 1, 1))),
        ("u_hleib pair (2,0,1)", u_hleib(pair_lie, Window(2, 0, 1))),
        ("u_hleib square-zero (2,0,1)", u_hleib(square_zero, Window(2, 0, 1))),
    ]


def test_criterion_09_quotient_axioms():
    start = time.monotonic()
    checked_somewhere = 0
    for name, q in quotient_suite():
        outcome = check_quotient_axioms(q)
        assert outcome.ok, f"{name}: {outcome.violations[:3]}"
        checked_somewhere += outcome.checked
    assert checked_somewhere > 0
    report(9, "quotient-axioms", start)


def test_criterion_10_adjunction_instance():
    start = time.monotonic()
    a = suites.left_unit_pair()
    lie = hlie(a)
    outcome = induced_morphism_check(lie, a, identity(2), Window(3, 1, 1))
    assert outcome.generator_failures == []
    assert outcome.unit_failures == []
    assert outcome.product_failures == []
    assert outcome.alpha_failures == []
    assert outcome.ok
    assert outcome.generators_checked > 0
    report(10, "adjunction-instance", start)
