"""Finite-dimensional Hom-algebras given by structure constants.

Conventions, used consistently across the package and the JSON files:

* vectors are coordinate columns over a fixed basis e_0, ..., e_{d-1};
* ``alpha`` is a d x d matrix acting on columns, so the image of e_j is
  column j: alpha(e_j) = sum_i alpha[i][j] e_i;
* a product tensor ``c`` stores e_i * e_j = sum_k c[i][j][k] e_k.

A Hom-module is a space with a chosen linear self-map alpha.  On top of
it live one-product algebras (``HomAlgebra``) and two-product dialgebras
(``HomDialgebra``).  The checkers test the defining identities on all
basis tuples, exactly, and report every violation:

* twisted associativity      alpha(x)(yz) = (xy)alpha(z)
* Hom-Lie                    skew bracket with
                             [alpha(x),[y,z]] + [alpha(z),[x,y]] + [alpha(y),[z,x]] = 0
* Hom-Leibniz                [[x,y],alpha(z)] = [[x,z],alpha(y)] + [alpha(x),[y,z]]
* Hom-dialgebra              five twisted associative-type axioms coupling
                             the two products

The derivation maps validate their hypotheses and refuse invalid input:
``hlie`` (commutator bracket of a twisted-associative product), ``hleib``
(bracket x -| y - y |- x of a dialgebra), and the dialgebra constructions
from a twisted-associative algebra or from a bimodule with a self-map
compatible morphism into the acting algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import ZERO, identity, mat_mul, mat_vec, matrix, scalar_json, to_scalar


class AxiomError(ValueError):
    """A construction was fed input violating its hypothesis."""

    def __init__(self, message: str, violations):
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations[:3])
        if len(self.violations) > 3:
            detail += f"; ... ({len(self.violations)} total)"
        super().__init__(f"{message}: {detail}" if detail else message)


@dataclass(frozen=True)
class Violation:
    axiom: str
    indices: tuple
    discrepancy: tuple

    def __str__(self):
        delta = ", ".join(str(x) for x in self.discrepancy)
        return f"{self.axiom} at {self.indices}: ({delta})"


def _tensor3(data, d):
    out = tuple(
        tuple(tuple(to_scalar(x) for x in row) for row in plane) for plane in data
    )
    if len(out) != d or any(
        len(plane) != d or any(len(row) != d for row in plane) for plane in out
    ):
        raise ValueError(f"structure constants must form a {d}x{d}x{d} tensor")
    return out


def _tensor3_general(data, d1, d2, d3):
    out = tuple(
        tuple(tuple(to_scalar(x) for x in row) for row in plane) for plane in data
    )
    if len(out) != d1 or any(
        len(plane) != d2 or any(len(row) != d3 for row in plane) for plane in out
    ):
        raise ValueError(f"action constants must form a {d1}x{d2}x{d3} tensor")
    return out


@dataclass(frozen=True)
class HomModule:
    dim: int
    alpha: tuple

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError(f"dimension must be >= 0, got {self.dim}")
        m = matrix(self.alpha)
        if len(m) != self.dim or any(len(row) != self.dim for row in m):
            raise ValueError(f"alpha must be {self.dim}x{self.dim}")
        object.__setattr__(self, "alpha", m)

    def apply_alpha(self, v):
        return mat_vec(self.alpha, v)

    def alpha_column(self, j):
        return tuple(self.alpha[i][j] for i in range(self.dim))


def hom_module(dim: int, alpha=None) -> HomModule:
    """Hom-module with the given self-map; identity when omitted."""
    return HomModule(dim, identity(dim) if alpha is None else alpha)


def basis_vector(dim: int, i: int):
    return tuple(Fraction(1) if j == i else ZERO for j in range(dim))


def apply_product(tensor, x, y):
    """Bilinear extension of structure constants to vectors.

    The tensor may be rectangular (actions): the output dimension is the
    length of its innermost rows.
    """
    if len(tensor) != len(x):
        raise ValueError(f"dimension mismatch: {len(tensor)} planes vs {len(x)}")
    d = len(tensor[0][0]) if tensor and tensor[0] else 0
    out = [ZERO] * d
    for i, xi in enumerate(x):
        if not xi:
            continue
        plane = tensor[i]
        if len(plane) != len(y):
            raise ValueError(f"dimension mismatch: {len(plane)} rows vs {len(y)}")
        for j, yj in enumerate(y):
            if not yj:
                continue
            coeff = xi * yj
            row = plane[j]
            for k in range(d):
                if row[k]:
                    out[k] += coeff * row[k]
    return tuple(out)


@dataclass(frozen=True)
class HomAlgebra:
    """A Hom-module with one bilinear product (no law assumed)."""

    module: HomModule
    mul: tuple

    def __post_init__(self):
        object.__setattr__(self, "mul", _tensor3(self.mul, self.module.dim))

    @property
    def dim(self):
        return self.module.dim

    @property
    def alpha(self):
        return self.module.alpha

    def product(self, x, y):
        return apply_product(self.mul, x, y)


@dataclass(frozen=True)
class HomDialgebra:
    """A Hom-module with a left product -| and a right product |-."""

    module: HomModule
    lmul: tuple
    rmul: tuple

    def __post_init__(self):
        d = self.module.dim
        object.__setattr__(self, "lmul", _tensor3(self.lmul, d))
        object.__setattr__(self, "rmul", _tensor3(self.rmul, d))

    @property
    def dim(self):
        return self.module.dim

    @property
    def alpha(self):
        return self.module.alpha

    def left(self, x, y):
        return apply_product(self.lmul, x, y)

    def right(self, x, y):
        return apply_product(self.rmul, x, y)


@dataclass(frozen=True)
class BimoduleData:
    """A two-sided action of an algebra A on a Hom-module M, plus a map M -> A.

    ``left_act[a][m][k]`` is the e_k coefficient of e_a . e_m, and
    ``right_act[m][a][k]`` that of e_m . e_a; ``f`` is a dim(A) x dim(M)
    matrix.
    """

    algebra: HomAlgebra
    module: HomModule
    left_act: tuple
    right_act: tuple
    f: tuple

    def __post_init__(self):
        da, dm = self.algebra.dim, self.module.dim
        object.__setattr__(self, "left_act", _tensor3_general(self.left_act, da, dm, dm))
        object.__setattr__(self, "right_act", _tensor3_general(self.right_act, dm, da, dm))
        fm = matrix(self.f)
        if len(fm) != da or any(len(row) != dm for row in fm):
            raise ValueError(f"f must be {da}x{dm}")
        object.__setattr__(self, "f", fm)

    def act_left(self, a, m):
        return apply_product(self.left_act, a, m)

    def act_right(self, m, a):
        return apply_product(self.right_act, m, a)

    def map_to_algebra(self, m):
        return mat_vec(self.f, m)


# ---------------------------------------------------------------------------
# checkers

def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _is_zero(v):
    return all(x == 0 for x in v)


def check_hom_associative(a: HomAlgebra) -> list:
    """Violations of alpha(x)(yz) = (xy)alpha(z) on basis triples."""
    d = a.dim
    acols = [a.module.alpha_column(i) for i in range(d)]
    out = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = a.product(acols[i], a.mul[j][k])
                rhs = a.product(a.mul[i][j], acols[k])
                diff = _sub(lhs, rhs)
                if not _is_zero(diff):
                    out.append(Violation("hom-associativity", (i, j, k), diff))
    return out


def check_hom_lie(a: HomAlgebra) -> list:
    """Violations of skew-symmetry or of the twisted Jacobi identity."""
    d = a.dim
    acols = [a.module.alpha_column(i) for i in range(d)]
    out = []
    for i in range(d):
        for j in range(i, d):
            diff = tuple(a.mul[i][j][k] + a.mul[j][i][k] for k in range(d))
            if not _is_zero(diff):
                out.append(Violation("skew-symmetry", (i, j), diff))
    for i in range(d):
        for j in range(d):
            for k in range(d):
                total = tuple(
                    x + y + z
                    for x, y, z in zip(
                        a.product(acols[i], a.mul[j][k]),
                        a.product(acols[k], a.mul[i][j]),
                        a.product(acols[j], a.mul[k][i]),
                    )
                )
                if not _is_zero(total):
                    out.append(Violation("hom-jacobi", (i, j, k), total))
    return out


def check_hom_leibniz(a: HomAlgebra) -> list:
    """Violations of [[x,y],alpha(z)] = [[x,z],alpha(y)] + [alpha(x),[y,z]]."""
    d = a.dim
    acols = [a.module.alpha_column(i) for i in range(d)]
    out = []
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = a.product(a.mul[i][j], acols[k])
                rhs1 = a.product(a.mul[i][k], acols[j])
                rhs2 = a.product(acols[i], a.mul[j][k])
                diff = tuple(x - y - z for x, y, z in zip(lhs, rhs1, rhs2))
                if not _is_zero(diff):
                    out.append(Violation("hom-leibniz", (i, j, k), diff))
    return out


def check_hom_dialgebra(d: HomDialgebra) -> list:
    """Violations of the five twisted dialgebra axioms, labelled 1..5."""
    n = d.dim
    acols = [d.module.alpha_column(i) for i in range(n)]
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ax = acols[i]
                az = acols[k]
                checks = (
                    ("dialgebra-1", d.left(ax, d.lmul[j][k]), d.left(d.lmul[i][j], az)),
                    ("dialgebra-2", d.left(d.lmul[i][j], az), d.left(ax, d.rmul[j][k])),
                    ("dialgebra-3", d.left(d.rmul[i][j], az), d.right(ax, d.lmul[j][k])),
                    ("dialgebra-4", d.right(d.lmul[i][j], az), d.right(ax, d.rmul[j][k])),
                    ("dialgebra-5", d.right(ax, d.rmul[j][k]), d.right(d.rmul[i][j], az)),
                )
                for axiom, lhs, rhs in checks:
                    diff = _sub(lhs, rhs)
                    if not _is_zero(diff):
                        out.append(Violation(axiom, (i, j, k), diff))
    return out


def check_bimodule(b: BimoduleData) -> list:
    """Violations of the action compatibilities and of f being equivariant."""
    a = b.algebra
    da, dm = a.dim, b.module.dim
    aa = [a.module.alpha_column(i) for i in range(da)]
    am = [b.module.alpha_column(i) for i in range(dm)]
    out = []
    for x in range(da):
        for y in range(da):
            for m in range(dm):
                diff = _sub(
                    b.act_left(aa[x], b.left_act[y][m]),
                    b.act_left(a.mul[x][y], am[m]),
                )
                if not _is_zero(diff):
                    out.append(Violation("bimodule-left", (x, y, m), diff))
                diff = _sub(
                    b.act_right(b.right_act[m][x], aa[y]),
                    b.act_right(am[m], a.mul[x][y]),
                )
                if not _is_zero(diff):
                    out.append(Violation("bimodule-right", (x, y, m), diff))
                diff = _sub(
                    b.act_left(aa[x], b.right_act[m][y]),
                    b.act_right(b.left_act[x][m], aa[y]),
                )
                if not _is_zero(diff):
                    out.append(Violation("bimodule-mixed", (x, y, m), diff))
    fcols = [b.map_to_algebra(basis_vector(dm, m)) for m in range(dm)]
    for x in range(da):
        for m in range(dm):
            diff = _sub(b.map_to_algebra(b.left_act[x][m]), a.product(basis_vector(da, x), fcols[m]))
            if not _is_zero(diff):
                out.append(Violation("bimodule-map-left", (x, m), diff))
            diff = _sub(b.map_to_algebra(b.right_act[m][x]), a.product(fcols[m], basis_vector(da, x)))
            if not _is_zero(diff):
                out.append(Violation("bimodule-map-right", (x, m), diff))
    lhs = mat_mul(b.f, b.module.alpha)
    rhs = mat_mul(a.module.alpha, b.f)
    for m in range(dm):
        diff = tuple(lhs[i][m] - rhs[i][m] for i in range(da))
        if not _is_zero(diff):
            out.append(Violation("bimodule-map-alpha", (m,), diff))
    return out


def check_morphism(f, src, dst) -> list:
    """Violations of f alpha = alpha f and f(x * y) = f(x) * f(y).

    ``src`` and ``dst`` must both be HomAlgebra or both HomDialgebra.
    """
    if type(src) is not type(dst):
        raise TypeError("morphism endpoints must be of the same kind")
    fm = matrix(f)
    if len(fm) != dst.dim or any(len(row) != src.dim for row in fm):
        raise ValueError(f"map must be {dst.dim}x{src.dim}")
    out = []
    lhs = mat_mul(fm, src.module.alpha)
    rhs = mat_mul(dst.module.alpha, fm)
    for j in range(src.dim):
        diff = tuple(lhs[i][j] - rhs[i][j] for i in range(dst.dim))
        if not _is_zero(diff):
            out.append(Violation("morphism-alpha", (j,), diff))
    if isinstance(src, HomAlgebra):
        products = (("morphism-mul", lambda s, i, j: s.mul[i][j],
                     lambda t, x, y: t.product(x, y)),)
    else:
        products = (
            ("morphism-lmul", lambda s, i, j: s.lmul[i][j], lambda t, x, y: t.left(x, y)),
            ("morphism-rmul", lambda s, i, j: s.rmul[i][j], lambda t, x, y: t.right(x, y)),
        )
    fcols = [mat_vec(fm, basis_vector(src.dim, i)) for i in range(src.dim)]
    for axiom, take, prod in products:
        for i in range(src.dim):
            for j in range(src.dim):
                diff = _sub(mat_vec(fm, take(src, i, j)), prod(dst, fcols[i], fcols[j]))
                if not _is_zero(diff):
                    out.append(Violation(axiom, (i, j), diff))
    return out


# ---------------------------------------------------------------------------
# derivations

def hlie(a: HomAlgebra) -> HomAlgebra:
    """Commutator bracket [x,y] = xy - yx of a twisted-associative product."""
    bad = check_hom_associative(a)
    if bad:
        raise AxiomError("input is not Hom-associative", bad)
    d = a.dim
    bracket = tuple(
        tuple(
            tuple(a.mul[i][j][k] - a.mul[j][i][k] for k in range(d)) for j in range(d)
        )
        for i in range(d)
    )
    return HomAlgebra(a.module, bracket)


def hleib(di: HomDialgebra) -> HomAlgebra:
    """Dialgebra commutator [x,y] = x -| y - y |- x."""
    bad = check_hom_dialgebra(di)
    if bad:
        raise AxiomError("input is not a Hom-dialgebra", bad)
    d = di.dim
    bracket = tuple(
        tuple(
            tuple(di.lmul[i][j][k] - di.rmul[j][i][k] for k in range(d))
            for j in range(d)
        )
        for i in range(d)
    )
    return HomAlgebra(di.module, bracket)


def dialgebra_from_associative(a: HomAlgebra) -> HomDialgebra:
    """Both products equal to the given twisted-associative one."""
    bad = check_hom_associative(a)
    if bad:
        raise AxiomError("input is not Hom-associative", bad)
    return HomDialgebra(a.module, a.mul, a.mul)


def dialgebra_from_bimodule(b: BimoduleData) -> HomDialgebra:
    """m1 -| m2 = m1 . f(m2) and m1 |- m2 = f(m1) . m2 on the module."""
    bad = check_hom_associative(b.algebra)
    if bad:
        raise AxiomError("acting algebra is not Hom-associative", bad)
    bad = check_bimodule(b)
    if bad:
        raise AxiomError("invalid bimodule data", bad)
    dm = b.module.dim
    basis_m = [basis_vector(dm, i) for i in range(dm)]
    fcols = [b.map_to_algebra(m) for m in basis_m]
    lmul = tuple(
        tuple(b.act_right(basis_m[i], fcols[j]) for j in range(dm)) for i in range(dm)
    )
    rmul = tuple(
        tuple(b.act_left(fcols[i], basis_m[j]) for j in range(dm)) for i in range(dm)
    )
    return HomDialgebra(b.module, lmul, rmul)


# ---------------------------------------------------------------------------
# JSON serialization

KIND_ALGEBRA = "hom-nonassociative"
KIND_DIALGEBRA = "hom-dialgebra"


def _json_matrix(m):
    return [[scalar_json(x) for x in row] for row in m]


def _json_tensor(t):
    return [[[scalar_json(x) for x in row] for row in plane] for plane in t]


def algebra_to_json(obj) -> dict:
    if isinstance(obj, HomAlgebra):
        return {
            "kind": KIND_ALGEBRA,
            "dim": obj.dim,
            "alpha": _json_matrix(obj.alpha),
            "mul": _json_tensor(obj.mul),
        }
    if isinstance(obj, HomDialgebra):
        return {
            "kind": KIND_DIALGEBRA,
            "dim": obj.dim,
            "alpha": _json_matrix(obj.alpha),
            "lmul": _json_tensor(obj.lmul),
            "rmul": _json_tensor(obj.rmul),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def algebra_from_json(data: dict):
    kind = data.get("kind")
    dim = data["dim"]
    module = HomModule(dim, data["alpha"])
    if kind == KIND_ALGEBRA:
        return HomAlgebra(module, data["mul"])
    if kind == KIND_DIALGEBRA:
        return HomDialgebra(module, data["lmul"], data["rmul"])
    raise ValueError(f"unknown algebra kind: {kind!r}")


def bimodule_from_json(data: dict) -> BimoduleData:
    algebra = algebra_from_json({k: v for k, v in data.items() if k != "module"})
    if not isinstance(algebra, HomAlgebra):
        raise ValueError("bimodule data requires a one-product acting algebra")
    mod = data["module"]
    module = HomModule(mod["dim"], mod["alpha"])
    return BimoduleData(algebra, module, data["leftAct"], data["rightAct"], data["f"])


def bimodule_to_json(b: BimoduleData) -> dict:
    out = algebra_to_json(b.algebra)
    out["module"] = {"dim": b.module.dim, "alpha": _json_matrix(b.module.alpha)}
    out["leftAct"] = _json_tensor(b.left_act)
    out["rightAct"] = _json_tensor(b.right_act)
    out["f"] = _json_matrix(b.f)
    return out
