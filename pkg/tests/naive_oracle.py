"""Brute-force oracle for windowed enveloping quotients.

Everything here is deliberately naive and independent of the package
pipeline: trees are nested tuples, elements are plain dicts, the ideal
is closed by re-expanding every row until the rank freezes, and the
window intersection is computed as a rank difference instead of a column
permutation.
"""

from fractions import Fraction


def o_arity(t):
    return 1 if t == "L" else o_arity(t[0]) + o_arity(t[1])


def o_weight(t):
    return 0 if t == "L" else o_weight(t[0]) + o_weight(t[1]) + t[2]


def o_monomials(dim, n_max, w_max, di):
    by_arity = {1: [("L", (i,)) for i in range(dim)]}
    for n in range(2, n_max + 1):
        level = []
        for p in range(1, n):
            for t1, l1 in by_arity[p]:
                w1 = o_weight(t1)
                for t2, l2 in by_arity[n - p]:
                    room = w_max - w1 - o_weight(t2)
                    for r in range(room + 1):
                        if di:
                            for side in ("l", "r"):
                                level.append(((t1, t2, r, side), l1 + l2))
                        else:
                            level.append(((t1, t2, r), l1 + l2))
        by_arity[n] = level
    out = []
    for n in range(1, n_max + 1):
        out.extend(by_arity[n])
    return out


def o_add(a, b):
    out = dict(a)
    for m, c in b.items():
        acc = out.get(m, 0) + c
        if acc:
            out[m] = acc
        else:
            out.pop(m, None)
    return out


def o_scale(c, a):
    return {m: c * x for m, x in a.items()} if c else {}


def o_mul(a, b, side=None):
    out = {}
    for (t1, l1), c1 in a.items():
        for (t2, l2), c2 in b.items():
            tree = (t1, t2, 0) if side is None else (t1, t2, 0, side)
            key = (tree, l1 + l2)
            acc = out.get(key, 0) + c1 * c2
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


def o_alpha(alpha, a):
    out = {}
    for (t, labels), c in a.items():
        if t == "L":
            i = labels[0]
            for j in range(len(alpha)):
                if alpha[j][i]:
                    key = ("L", (j,))
                    acc = out.get(key, 0) + c * alpha[j][i]
                    if acc:
                        out[key] = acc
                    else:
                        out.pop(key, None)
        else:
            shifted = (t[0], t[1], t[2] + 1) + t[3:]
            out[(shifted, labels)] = c
    return out


def o_supported(e, allowed):
    return all(m in allowed for m in e)


class OracleGauss:
    """Row echelon by plain forward elimination, no normalization."""

    def __init__(self, order):
        self.order = {m: i for i, m in enumerate(order)}
        self.rows = []  # (pivot index, dict)

    def insert(self, e):
        vec = {self.order[m]: Fraction(c) for m, c in e.items() if c}
        for pivot, row in self.rows:
            if pivot in vec:
                f = vec[pivot] / row[pivot]
                for c, x in row.items():
                    acc = vec.get(c, Fraction(0)) - f * x
                    if acc:
                        vec[c] = acc
                    else:
                        vec.pop(c, None)
        if not vec:
            return False
        self.rows.append((min(vec), vec))
        self.rows.sort(key=lambda pr: pr[0])
        return True

    @property
    def rank(self):
        return len(self.rows)


def oracle_generators(bracket, alpha, dim, monomials, allowed, di):
    gens = []
    singles = [{m: Fraction(1)} for m in monomials]
    for ea in singles:
        for eb in singles:
            for ec in singles:
                if di:
                    aa, ac = o_alpha(alpha, ea), o_alpha(alpha, ec)
                    ab_l, ab_r = o_mul(ea, eb, "l"), o_mul(ea, eb, "r")
                    bc_l, bc_r = o_mul(eb, ec, "l"), o_mul(eb, ec, "r")
                    fams = [
                        o_add(o_mul(ab_l, ac, "l"), o_scale(-1, o_mul(aa, bc_l, "l"))),
                        o_add(o_mul(ab_l, ac, "l"), o_scale(-1, o_mul(aa, bc_r, "l"))),
                        o_add(o_mul(ab_r, ac, "l"), o_scale(-1, o_mul(aa, bc_l, "r"))),
                        o_add(o_mul(aa, bc_r, "r"), o_scale(-1, o_mul(ab_l, ac, "r"))),
                        o_add(o_mul(aa, bc_r, "r"), o_scale(-1, o_mul(ab_r, ac, "r"))),
                    ]
                else:
                    lhs = o_mul(o_mul(ea, eb), o_alpha(alpha, ec))
                    rhs = o_mul(o_alpha(alpha, ea), o_mul(eb, ec))
                    fams = [o_add(lhs, o_scale(-1, rhs))]
                for gen in fams:
                    if gen and o_supported(gen, allowed):
                        gens.append(gen)
    for i in range(dim):
        for j in range(dim):
            xi = {("L", (i,)): Fraction(1)}
            xj = {("L", (j,)): Fraction(1)}
            rel = {
                ("L", (k,)): Fraction(bracket[i][j][k])
                for k in range(dim)
                if bracket[i][j][k]
            }
            if di:
                rel = o_add(rel, o_scale(-1, o_mul(xi, xj, "l")))
                rel = o_add(rel, o_mul(xj, xi, "r"))
            else:
                rel = o_add(rel, o_scale(-1, o_mul(xi, xj)))
                rel = o_add(rel, o_mul(xj, xi))
            if rel and o_supported(rel, allowed):
                gens.append(rel)
    return gens


def oracle_quotient_dim(bracket, alpha, dim, n, w, pad, di):
    padded = o_monomials(dim, n + pad, w + pad, di)
    allowed = set(padded)
    gens = oracle_generators(bracket, alpha, dim, padded, allowed, di)
    gauss = OracleGauss(padded)
    for g in gens:
        gauss.insert(g)
    changed = True
    while changed:
        changed = False
        for _, row in list(gauss.rows):
            vec = {padded[i]: c for i, c in row.items()}
            candidates = [o_alpha(alpha, vec)]
            for m in padded:
                single = {m: Fraction(1)}
                if di:
                    candidates.append(o_mul(single, vec, "l"))
                    candidates.append(o_mul(vec, single, "l"))
                    candidates.append(o_mul(single, vec, "r"))
                    candidates.append(o_mul(vec, single, "r"))
                else:
                    candidates.append(o_mul(single, vec))
                    candidates.append(o_mul(vec, single))
            for cand in candidates:
                if cand and o_supported(cand, allowed) and gauss.insert(cand):
                    changed = True
    rank_ideal = gauss.rank
    window_monomials = [m for m in padded if o_arity(m[0]) <= n and o_weight(m[0]) <= w]
    for m in window_monomials:
        gauss.insert({m: Fraction(1)})
    # dim(ideal + window) - dim(ideal) = quotient dimension of the window
    return gauss.rank - rank_ideal
