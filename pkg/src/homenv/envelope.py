"""Window-truncated ideal closures and enveloping quotients.

The pipeline behind all three quotient constructions (enveloping algebra
of a Hom-Lie algebra, free twisted-associative algebra of a Hom-module,
enveloping dialgebra of a Hom-Leibniz algebra):

1. enumerate the monomial basis of a padded window (arity and weight
   bounds both widened by ``pad``);
2. instantiate the relation generators inside the padded window: the
   twisted-associativity (or five dialgebra-axiom) differences over all
   monomial triples whose two legs stay in the window, plus the
   bracket-versus-commutator relations on generator pairs;
3. close the span of the generators under multiplication by basis
   monomials on both sides and under the twist map, discarding any
   product that leaves the padded window, until the rank stops growing;
4. intersect the closed span with the coordinate subspace of the
   unpadded window (exact row reduction with padded-only columns first);
5. pick the non-pivot window monomials as standard monomials, and
   tabulate the induced products and twist where they stay in the window.

Padding matters: relations supported in the window can arise from
cancellations that pass through monomials outside it, so the closure is
computed in the larger window and cut back.  The quotient is an honest
subquotient of the mathematical object; the tests pin cases whose
dimensions are stable for pad in {0, 1, 2}.

Step 3 discards whole products, never single terms: truncating a product
to its in-window part would fabricate relations that do not hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    AxiomError,
    HomAlgebra,
    HomModule,
    Violation,
    check_hom_leibniz,
    check_hom_lie,
    check_morphism,
    hlie,
)
from .free import (
    Element,
    Monomial,
    Window,
    alpha_free,
    alpha_free_di,
    basis_window,
    generator,
    mul_free,
    mul_free_di,
    universal_map,
)
from .linalg import ZERO, RowSpan
from .trees import LEFT, RIGHT, graft_di, graft_weighted


@dataclass(frozen=True)
class IdealSpan:
    """Closed ideal restricted to a padded window, rows in RREF."""

    window: Window
    monomials: tuple
    rows: tuple  # sparse dicts, sorted by pivot
    pivots: tuple

    @property
    def rank(self):
        return len(self.rows)


# ---------------------------------------------------------------------------
# relation generators

def associativity_generators(module: HomModule, padded: Window) -> list:
    """(ab)t(c) - t(a)(bc) over monomial triples, t the twist map.

    A triple contributes when both legs stay in the padded window,
    judging by the nominal arity and weight of the leg monomials.
    """
    basis = basis_window(module, padded)
    n_max, w_max = padded.max_arity, padded.max_weight
    gens = []
    for a in basis:
        if a.arity + 2 > n_max:
            break
        ea = Element.monomial(a)
        aa = alpha_free(module, ea)
        for b in basis:
            if a.arity + b.arity + 1 > n_max:
                break
            eb = Element.monomial(b)
            ab = mul_free(ea, eb)
            for c in basis:
                if a.arity + b.arity + c.arity > n_max:
                    break
                base = a.total_weight + b.total_weight + c.total_weight
                left_w = base + (1 if c.arity >= 2 else 0)
                right_w = base + (1 if a.arity >= 2 else 0)
                if left_w > w_max or right_w > w_max:
                    continue
                ec = Element.monomial(c)
                gens.append(
                    mul_free(ab, alpha_free(module, ec))
                    - mul_free(aa, mul_free(eb, ec))
                )
    return gens


def bracket_generators(lie: HomAlgebra, padded: Window) -> list:
    """[x_i, x_j] - (x_i x_j - x_j x_i) on generator pairs."""
    if padded.max_arity < 2:
        return []
    d = lie.dim
    gens = []
    for i in range(d):
        xi = Element.monomial(generator(i))
        for j in range(d):
            xj = Element.monomial(generator(j))
            bracket = Element(
                [(generator(k), lie.mul[i][j][k]) for k in range(d)]
            )
            gens.append(bracket - mul_free(xi, xj) + mul_free(xj, xi))
    return gens


def hlie_ideal_generators(lie: HomAlgebra, padded: Window) -> list:
    """Relations presenting the enveloping algebra of a Hom-Lie algebra."""
    bad = check_hom_lie(lie)
    if bad:
        raise AxiomError("input is not a Hom-Lie algebra", bad)
    return associativity_generators(lie.module, padded) + bracket_generators(lie, padded)


def dialgebra_axiom_generators(module: HomModule, padded: Window) -> list:
    """The five twisted dialgebra-axiom differences over monomial triples."""
    basis = basis_window(module, padded, di=True)
    n_max, w_max = padded.max_arity, padded.max_weight
    gens = []
    for a in basis:
        if a.arity + 2 > n_max:
            break
        ea = Element.monomial(a)
        aa = alpha_free_di(module, ea)
        for b in basis:
            if a.arity + b.arity + 1 > n_max:
                break
            eb = Element.monomial(b)
            for c in basis:
                if a.arity + b.arity + c.arity > n_max:
                    break
                base = a.total_weight + b.total_weight + c.total_weight
                left_w = base + (1 if c.arity >= 2 else 0)
                right_w = base + (1 if a.arity >= 2 else 0)
                if left_w > w_max or right_w > w_max:
                    continue
                ec = Element.monomial(c)
                ac = alpha_free_di(module, ec)
                ab_l = mul_free_di(ea, eb, LEFT)
                ab_r = mul_free_di(ea, eb, RIGHT)
                bc_l = mul_free_di(eb, ec, LEFT)
                bc_r = mul_free_di(eb, ec, RIGHT)
                gens.append(mul_free_di(ab_l, ac, LEFT) - mul_free_di(aa, bc_l, LEFT))
                gens.append(mul_free_di(ab_l, ac, LEFT) - mul_free_di(aa, bc_r, LEFT))
                gens.append(mul_free_di(ab_r, ac, LEFT) - mul_free_di(aa, bc_l, RIGHT))
                gens.append(mul_free_di(aa, bc_r, RIGHT) - mul_free_di(ab_l, ac, RIGHT))
                gens.append(mul_free_di(aa, bc_r, RIGHT) - mul_free_di(ab_r, ac, RIGHT))
    return gens


def leibniz_bracket_generators(leib: HomAlgebra, padded: Window) -> list:
    """[x_i, x_j] - (x_i -| x_j - x_j |- x_i) on generator pairs."""
    if padded.max_arity < 2:
        return []
    d = leib.dim
    gens = []
    for i in range(d):
        xi = Element.monomial(generator(i))
        for j in range(d):
            xj = Element.monomial(generator(j))
            bracket = Element(
                [(generator(k), leib.mul[i][j][k]) for k in range(d)]
            )
            gens.append(
                bracket
                - mul_free_di(xi, xj, LEFT)
                + mul_free_di(xj, xi, RIGHT)
            )
    return gens


def hleib_ideal_generators(leib: HomAlgebra, padded: Window) -> list:
    """Relations presenting the enveloping dialgebra of a Hom-Leibniz algebra."""
    bad = check_hom_leibniz(leib)
    if bad:
        raise AxiomError("input is not a Hom-Leibniz algebra", bad)
    return dialgebra_axiom_generators(leib.module, padded) + leibniz_bracket_generators(
        leib, padded
    )


# ---------------------------------------------------------------------------
# ideal closure

def _coords(element: Element, index: dict) -> dict:
    out = {}
    for m, c in element.items():
        idx = index.get(m)
        if idx is None:
            raise ValueError(f"monomial {m} is outside the padded window")
        out[idx] = c
    return out


def _element_of(vec: dict, monomials) -> Element:
    return Element([(monomials[i], c) for i, c in vec.items()])


def ideal_closure(
    gens,
    module: HomModule,
    padded: Window,
    di: bool = False,
    max_rounds: int | None = None,
) -> IdealSpan:
    """Least in-window span of the generators closed under the ideal operations.

    The span is grown by multiplying every newly found row by every basis
    monomial (both sides, both products in the diweighted case) and by
    the twist map, keeping only results fully supported in the padded
    window.  ``max_rounds`` caps the number of expansion waves; the
    default runs to the fixpoint.  Deterministic throughout.
    """
    monomials = tuple(basis_window(module, padded, di=di))
    index = {m: i for i, m in enumerate(monomials)}
    n_max, w_max = padded.max_arity, padded.max_weight
    span = RowSpan()
    frontier = []
    for gen in gens:
        row = span.insert(_coords(gen, index))
        if row is not None:
            frontier.append(_element_of(row, monomials))

    alpha = alpha_free_di if di else alpha_free

    def expansions(elem):
        supp = [m for m, _ in elem.items()]
        top_arity = max(m.arity for m in supp)
        top_weight = max(m.total_weight for m in supp)
        if all(m.arity == 1 or m.total_weight + 1 <= w_max for m in supp):
            yield alpha(module, elem)
        arity_room = n_max - top_arity
        weight_room = w_max - top_weight
        for partner in monomials:
            if partner.arity > arity_room:
                break  # basis is sorted by arity first
            if partner.total_weight > weight_room:
                continue
            other = Element.monomial(partner)
            if di:
                yield mul_free_di(other, elem, LEFT)
                yield mul_free_di(elem, other, LEFT)
                yield mul_free_di(other, elem, RIGHT)
                yield mul_free_di(elem, other, RIGHT)
            else:
                yield mul_free(other, elem)
                yield mul_free(elem, other)

    rounds = 0
    while frontier and (max_rounds is None or rounds < max_rounds):
        fresh = []
        for elem in frontier:
            for candidate in expansions(elem):
                if candidate.is_zero():
                    continue
                row = span.insert(_coords(candidate, index))
                if row is not None:
                    fresh.append(_element_of(row, monomials))
        frontier = fresh
        rounds += 1

    rows = tuple(span.rows())
    return IdealSpan(padded, monomials, rows, tuple(span.pivots()))


# ---------------------------------------------------------------------------
# quotient presentations

@dataclass(frozen=True)
class QuotientPresentation:
    """Standard-monomial basis of a windowed quotient with partial tables.

    ``standard`` holds window-basis indices of the coset representatives;
    tables are keyed by positions in ``standard`` and give coordinate
    tuples over the standard monomials.  A missing key means the product
    (or twist image) leaves the window and is not asserted.
    """

    kind: str  # "assoc" or "di"
    module: HomModule
    window: Window
    padded_window: Window
    monomials: tuple
    ideal_rows: tuple
    pivots: tuple
    standard: tuple
    alpha_table: dict
    mul_table: dict | None
    lmul_table: dict | None
    rmul_table: dict | None
    padded_dim: int
    closure_rank: int
    index: dict = field(repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "index", {m: i for i, m in enumerate(self.monomials)})

    @property
    def dim(self) -> int:
        return len(self.standard)

    @property
    def ideal_rank(self) -> int:
        return len(self.ideal_rows)

    def standard_monomials(self) -> list:
        return [self.monomials[i] for i in self.standard]

    def reduce(self, element: Element) -> tuple:
        """Coordinates of the coset of ``element`` over the standard monomials."""
        vec = {}
        for m, c in element.items():
            idx = self.index.get(m)
            if idx is None:
                raise ValueError(f"monomial {m} is outside the window")
            vec[idx] = vec.get(idx, ZERO) + c
        for pivot, row in zip(self.pivots, self.ideal_rows):
            coeff = vec.get(pivot)
            if not coeff:
                continue
            for c, x in row.items():
                acc = vec.get(c, ZERO) - coeff * x
                if acc:
                    vec[c] = acc
                else:
                    vec.pop(c, None)
        return tuple(vec.get(idx, ZERO) for idx in self.standard)

    def reduce_monomial(self, monomial: Monomial) -> tuple:
        return self.reduce(Element.monomial(monomial))


def _windowed_rows(module, window, padded, ideal, di):
    """Intersect the padded ideal with the window span, exactly."""
    win_basis = basis_window(module, window, di=di)
    padded_index = {m: i for i, m in enumerate(ideal.monomials)}
    win_pos = {}
    for s, m in enumerate(win_basis):
        win_pos[padded_index[m]] = s
    outside = [i for i in range(len(ideal.monomials)) if i not in win_pos]
    out_rank = {p: r for r, p in enumerate(outside)}
    shift = len(outside)

    def permute(col):
        r = out_rank.get(col)
        return r if r is not None else shift + win_pos[col]

    respan = RowSpan()
    for row in ideal.rows:
        respan.insert({permute(c): x for c, x in row.items()})
    rows = []
    for row in respan.rows():
        if min(row) >= shift:
            rows.append({c - shift: x for c, x in row.items()})
    return win_basis, tuple(rows)


def _build_quotient(module, window, padded, ideal, di) -> QuotientPresentation:
    win_basis, rows = _windowed_rows(module, window, padded, ideal, di)
    pivots = tuple(min(row) for row in rows)
    pivot_set = set(pivots)
    standard = tuple(i for i in range(len(win_basis)) if i not in pivot_set)

    q = QuotientPresentation(
        kind="di" if di else "assoc",
        module=module,
        window=window,
        padded_window=padded,
        monomials=tuple(win_basis),
        ideal_rows=rows,
        pivots=pivots,
        standard=standard,
        alpha_table={},
        mul_table=None if di else {},
        lmul_table={} if di else None,
        rmul_table={} if di else None,
        padded_dim=len(ideal.monomials),
        closure_rank=ideal.rank,
    )
    _fill_tables(q)
    return q


def _fill_tables(q: QuotientPresentation):
    module = q.module
    n_max, w_max = q.window.max_arity, q.window.max_weight
    std_monomials = q.standard_monomials()
    alpha = alpha_free_di if q.kind == "di" else alpha_free
    for s, m in enumerate(std_monomials):
        if m.arity == 1 or m.total_weight + 1 <= w_max:
            q.alpha_table[s] = q.reduce(alpha(module, Element.monomial(m)))
    if q.kind == "assoc":
        joins = ((q.mul_table, graft_weighted),)
    else:
        joins = (
            (q.lmul_table, lambda a, b: graft_di(a, b, LEFT)),
            (q.rmul_table, lambda a, b: graft_di(a, b, RIGHT)),
        )
    for si, mi in enumerate(std_monomials):
        for sj, mj in enumerate(std_monomials):
            if mi.arity + mj.arity > n_max:
                continue
            if mi.total_weight + mj.total_weight > w_max:
                continue
            labels = mi.labels + mj.labels
            for table, join in joins:
                product = Monomial(join(mi.tree, mj.tree), labels)
                table[(si, sj)] = q.reduce_monomial(product)


def u_hlie(lie: HomAlgebra, window: Window) -> QuotientPresentation:
    """Windowed enveloping twisted-associative algebra of a Hom-Lie algebra."""
    gens = hlie_ideal_generators(lie, window.padded())
    ideal = ideal_closure(gens, lie.module, window.padded())
    return _build_quotient(lie.module, window, window.padded(), ideal, di=False)


def f_has(module: HomModule, window: Window) -> QuotientPresentation:
    """Windowed free twisted-associative algebra on a Hom-module."""
    gens = associativity_generators(module, window.padded())
    ideal = ideal_closure(gens, module, window.padded())
    return _build_quotient(module, window, window.padded(), ideal, di=False)


def u_hleib(leib: HomAlgebra, window: Window) -> QuotientPresentation:
    """Windowed enveloping dialgebra of a Hom-Leibniz algebra."""
    gens = hleib_ideal_generators(leib, window.padded())
    ideal = ideal_closure(gens, leib.module, window.padded(), di=True)
    return _build_quotient(leib.module, window, window.padded(), ideal, di=True)


# ---------------------------------------------------------------------------
# quotient axiom checks

@dataclass
class QuotientAxiomReport:
    violations: list
    checked: int
    skipped: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _compose(table, a, b, dim):
    out = [ZERO] * dim
    for s, ca in enumerate(a):
        if not ca:
            continue
        for t, cb in enumerate(b):
            if not cb:
                continue
            entry = table.get((s, t))
            if entry is None:
                return None
            coeff = ca * cb
            for u in range(dim):
                if entry[u]:
                    out[u] += coeff * entry[u]
    return tuple(out)


def check_quotient_axioms(q: QuotientPresentation) -> QuotientAxiomReport:
    """Verify the defining axioms on standard-monomial triples via the tables.

    Triples needing an out-of-window product or twist image are skipped
    and counted.  Working through the reduced tables (rather than in the
    free algebra) makes the check sensitive to under-closed ideals: the
    induced operations are only well-defined modulo a genuinely closed
    ideal.
    """
    dim = q.dim
    violations = []
    checked = skipped = 0

    if q.kind == "assoc":

        def sides(i, j, k):
            ai = q.alpha_table.get(i)
            ak = q.alpha_table.get(k)
            jk = q.mul_table.get((j, k))
            ij = q.mul_table.get((i, j))
            if None in (ai, ak, jk, ij):
                return None, None
            lhs = _compose(q.mul_table, ai, jk, dim)
            rhs = _compose(q.mul_table, ij, ak, dim)
            return lhs, rhs

        side_builders = {"quotient-hom-associativity": sides}
    else:
        lt, rt = q.lmul_table, q.rmul_table

        def build(outer_lhs, inner_lhs, outer_rhs, inner_rhs, lhs_shape, rhs_shape):
            # shape "a.(bc)": twist on the first factor; "(ab).c": twist on the last
            def sides(i, j, k):
                def leg(outer, inner, shape):
                    if shape == "a(bc)":
                        ai = q.alpha_table.get(i)
                        bc = inner.get((j, k))
                        if ai is None or bc is None:
                            return None
                        return _compose(outer, ai, bc, dim)
                    ab = inner.get((i, j))
                    ak = q.alpha_table.get(k)
                    if ab is None or ak is None:
                        return None
                    return _compose(outer, ab, ak, dim)

                return leg(outer_lhs, inner_lhs, lhs_shape), leg(outer_rhs, inner_rhs, rhs_shape)

            return sides

        side_builders = {
            "quotient-dialgebra-1": build(lt, lt, lt, lt, "a(bc)", "(ab)c"),
            "quotient-dialgebra-2": build(lt, lt, lt, rt, "(ab)c", "a(bc)"),
            "quotient-dialgebra-3": build(lt, rt, rt, lt, "(ab)c", "a(bc)"),
            "quotient-dialgebra-4": build(rt, lt, rt, rt, "(ab)c", "a(bc)"),
            "quotient-dialgebra-5": build(rt, rt, rt, rt, "a(bc)", "(ab)c"),
        }

    for axiom, sides in side_builders.items():
        for i in range(dim):
            for j in range(dim):
                for k in range(dim):
                    lhs, rhs = sides(i, j, k)
                    if lhs is None or rhs is None:
                        skipped += 1
                        continue
                    checked += 1
                    diff = tuple(x - y for x, y in zip(lhs, rhs))
                    if any(diff):
                        violations.append(Violation(axiom, (i, j, k), diff))
    return QuotientAxiomReport(violations, checked, skipped)


# ---------------------------------------------------------------------------
# unit map and adjunction instances

def unit_map_j(lie: HomAlgebra, q: QuotientPresentation):
    """Matrix of the map sending x_i to the coset of its generator monomial."""
    cols = [q.reduce_monomial(generator(i)) for i in range(lie.dim)]
    return tuple(tuple(col[s] for col in cols) for s in range(q.dim))


@dataclass
class MorphismReport:
    """Outcome of verifying one adjunction instance inside a window."""

    generator_failures: list
    unit_failures: list
    product_failures: list
    alpha_failures: list
    generators_checked: int
    tables_checked: int

    @property
    def ok(self) -> bool:
        return not (
            self.generator_failures
            or self.unit_failures
            or self.product_failures
            or self.alpha_failures
        )


def induced_morphism_check(
    lie: HomAlgebra, target: HomAlgebra, fmat, window: Window
) -> MorphismReport:
    """Verify the induced morphism out of the windowed enveloping algebra.

    ``fmat`` must be a Hom-Lie morphism from ``lie`` to the commutator
    bracket of ``target`` (checked; rejected otherwise).  Checks that the
    evaluation map kills every windowed ideal generator, that it factors
    through the unit map back to ``fmat``, and that the factored map
    respects the induced product and twist tables.
    """
    bad = check_morphism(fmat, lie, hlie(target))
    if bad:
        raise AxiomError("map is not a Hom-Lie morphism into the commutator bracket", bad)

    evaluate = lambda elem: universal_map(lie.module, target, fmat, elem)
    zero = tuple([ZERO] * target.dim)

    gens = hlie_ideal_generators(lie, window.padded())
    generator_failures = []
    for at, gen in enumerate(gens):
        value = evaluate(gen)
        if value != zero:
            generator_failures.append((at, value))

    q = u_hlie(lie, window)
    j = unit_map_j(lie, q)
    h = [evaluate(Element.monomial(m)) for m in q.standard_monomials()]

    def combine(coords):
        out = [ZERO] * target.dim
        for s, c in enumerate(coords):
            if c:
                for t in range(target.dim):
                    out[t] += c * h[s][t]
        return tuple(out)

    unit_failures = []
    for i in range(lie.dim):
        expected = tuple(fmat[r][i] for r in range(target.dim))
        got = combine(tuple(j[s][i] for s in range(q.dim)))
        if got != expected:
            unit_failures.append((i, expected, got))

    product_failures = []
    alpha_failures = []
    tables_checked = 0
    for (si, sj), coords in q.mul_table.items():
        tables_checked += 1
        direct = target.product(h[si], h[sj])
        if direct != combine(coords):
            product_failures.append(((si, sj), direct, combine(coords)))
    for s, coords in q.alpha_table.items():
        tables_checked += 1
        direct = target.module.apply_alpha(h[s])
        if direct != combine(coords):
            alpha_failures.append((s, direct, combine(coords)))

    return MorphismReport(
        generator_failures,
        unit_failures,
        product_failures,
        alpha_failures,
        len(gens),
        tables_checked,
    )
