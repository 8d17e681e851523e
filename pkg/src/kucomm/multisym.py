"""Multisymmetric functions and the z-generator layer.

``z(a,b)`` stands for the family of invariants ``x_1^a y_1^b + ... + x_n^a y_n^b``.
Formal polynomials in these generators are :class:`MSymExpr`; evaluating
one at a rank ``n`` gives an :class:`~kucomm.polyring.MPoly` over
``x1..xn, y1..yn``.

Every linear system here is indexed by orbit representatives: a
Σ_n-invariant polynomial is determined by its coefficients on monomials
whose pairs ``(x_i, y_i)`` exponents are listed in non-increasing order.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterable, Mapping

from . import linalg
from .exactmath import binom, normalize, register_cache
from .polyring import (
    FreePoly,
    MPoly,
    VarSet,
    is_symmetric,
    paired_varset,
    render_terms,
)


class NoSolution(ArithmeticError):
    """The polynomial is not in the span of the requested z-monomials."""


class StableRangeWarning(UserWarning):
    """A result was computed below the rank where it is known to be unique."""


class MSymExpr(FreePoly):
    """Polynomial in the generators z(a,b), (a,b) != (0,0)."""

    __slots__ = ()

    @classmethod
    def check_label(cls, label) -> None:
        a, b = label
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise ValueError(f"invalid generator index z({a},{b})")

    @classmethod
    def label_weight(cls, label) -> int:
        return label[0] + label[1]

    @classmethod
    def label_str(cls, label) -> str:
        return f"z({label[0]},{label[1]})"


def z(a: int, b: int) -> MSymExpr:
    return MSymExpr.gen((a, b))


def generators(weight: int, allow_b0: bool = True) -> list[tuple[int, int]]:
    """Generator labels of the given weight, b descending then a ascending."""
    return [(a, weight - a) for a in range(weight + 1) if allow_b0 or weight - a >= 1]


@lru_cache(maxsize=None)
def z_monomials(weight: int, allow_b0: bool = True) -> tuple[tuple, ...]:
    """All z-monomials of a given weight in canonical (ascending) order.

    The order is: fewer factors first, then lexicographic on the sorted
    list of index pairs.  Weight 0 gives the single empty monomial.
    """
    if weight == 0:
        return ((),)
    gens = [g for w in range(1, weight + 1) for g in generators(w, allow_b0)]
    out = []

    def rec(start, remaining, cur):
        if remaining == 0:
            out.append(tuple(sorted(cur)))
            return
        for i in range(start, len(gens)):
            g = gens[i]
            w = g[0] + g[1]
            if w <= remaining:
                cur.append(g)
                rec(i, remaining - w, cur)
                cur.pop()

    rec(0, weight, [])
    return tuple(sorted(set(out), key=MSymExpr.sort_key))


# evaluation at a finite rank


@lru_cache(maxsize=None)
def expand_z(a: int, b: int, n: int) -> MPoly:
    """The invariant x_1^a y_1^b + ... + x_n^a y_n^b at rank n."""
    if (a, b) == (0, 0):
        raise ValueError("z(0,0) is not a generator")
    if a < 0 or b < 0:
        raise ValueError("generator indices must be non-negative")
    if n < 1:
        raise ValueError("rank must be >= 1")
    vs = paired_varset(n)
    terms = {}
    for i in range(n):
        e = [0] * (2 * n)
        e[i] = a
        e[n + i] = b
        terms[tuple(e)] = 1
    return MPoly(vs, terms)


@lru_cache(maxsize=None)
def evaluate_monomial(mono: tuple, n: int) -> MPoly:
    if not mono:
        return MPoly.constant(paired_varset(n), 1)
    return evaluate_monomial(mono[:-1], n) * expand_z(*mono[-1], n)


def evaluate(e: MSymExpr, n: int) -> MPoly:
    """The concrete polynomial of a z-expression at rank n."""
    out = MPoly.zero(paired_varset(n))
    for mono, c in e.terms.items():
        out = out + evaluate_monomial(mono, n) * c
    return out


def is_orbit_rep(exps: tuple[int, ...], n: int) -> bool:
    pairs = [(exps[i], exps[n + i]) for i in range(n)]
    return all(pairs[i] >= pairs[i + 1] for i in range(n - 1))


def rep_coordinates(p: MPoly, n: int) -> dict[tuple[int, ...], object]:
    return {e: c for e, c in p.terms.items() if is_orbit_rep(e, n)}


@lru_cache(maxsize=None)
def _monomial_coords(mono: tuple, n: int) -> dict:
    return rep_coordinates(evaluate_monomial(mono, n), n)


@lru_cache(maxsize=None)
def _evaluation_system(weight: int, n: int, allow_b0: bool):
    """Rows (orbit reps) x columns (z-monomials) of the evaluation map."""
    monos = z_monomials(weight, allow_b0)
    coords = [_monomial_coords(m, n) for m in monos]
    reps = sorted({r for c in coords for r in c}, reverse=True)
    matrix = [[c.get(r, 0) for c in coords] for r in reps]
    return monos, reps, matrix


def _clear_caches():
    _evaluation_system.cache_clear()
    _merged_coords.cache_clear()


register_cache(_clear_caches)


def _set_partitions(items: tuple):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _rep_of_pairs(pairs, n: int) -> tuple[int, ...]:
    pairs = sorted(pairs, reverse=True) + [(0, 0)] * (n - len(pairs))
    return tuple(p[0] for p in pairs) + tuple(p[1] for p in pairs)


@lru_cache(maxsize=None)
def _merged_coords(mono: tuple, n: int) -> dict:
    """Orbit-rep coordinates of a z-monomial without expanding it.

    A term of the product assigns each factor to a position; factors that
    share a position merge their exponent pairs.  Grouping assignments by
    the induced set partition, the coefficient on a representative is the
    number of ways to match blocks to equal pairs.
    """
    out: dict = {}
    for part in _set_partitions(tuple(mono)):
        if len(part) > n:
            continue
        merged = [(sum(g[0] for g in b), sum(g[1] for g in b)) for b in part]
        ways = 1
        for pair in set(merged):
            ways *= factorial(merged.count(pair))
        rep = _rep_of_pairs(merged, n)
        out[rep] = out.get(rep, 0) + ways
    return out


def _express_stable(target: dict, n: int, allow_b0: bool) -> MSymExpr:
    """Triangular conversion from orbit sums to z-monomials.

    The representative with the most nonzero pairs is hit only by the
    z-monomial made of exactly those pairs, so peeling representatives off
    in that order never needs a linear solve.  In the stable range the
    answer is the unique expression.
    """
    target = {r: Fraction(c) for r, c in target.items() if c}
    out: dict = {}
    while target:
        rep = max(target, key=lambda e: (sum(1 for i in range(n) if e[i] or e[n + i]), e))
        pairs = [(rep[i], rep[n + i]) for i in range(n) if rep[i] or rep[n + i]]
        mono = tuple(sorted(pairs))
        if not allow_b0 and any(b == 0 for _, b in mono):
            raise NoSolution("an expression needs a generator z(a,0)")
        coords = _merged_coords(mono, n)
        c = target[rep] / coords[rep]
        out[mono] = c
        for r, v in coords.items():
            left = target.get(r, 0) - c * v
            if left:
                target[r] = left
            else:
                target.pop(r, None)
    return MSymExpr(out)


def _vector_to_expr(monos, vec) -> MSymExpr:
    return MSymExpr({m: c for m, c in zip(monos, vec) if c})


def express_in_z(p: MPoly, n: int, allow_b0: bool = True) -> MSymExpr:
    """Write a homogeneous Σ_n-invariant polynomial in the z-generators.

    When several expressions exist (rank below the degree) the one
    supported on the canonically least independent z-monomials is returned;
    see :func:`find_relations` for the ambiguity.  Raises :class:`NoSolution`
    if no expression exists (e.g. a b=0 generator is needed but
    ``allow_b0`` is False).
    """
    if p.varset != paired_varset(n):
        raise ValueError(f"expected a polynomial over x1..x{n}, y1..y{n}")
    if not is_symmetric(p):
        raise ValueError("polynomial is not invariant under the symmetric group")
    if not p:
        return MSymExpr.zero()
    d = p.homogeneous_degree()
    if d is None:
        raise ValueError("polynomial is not homogeneous")
    if d == 0:
        return MSymExpr.one(p.coefficient_of((0,) * (2 * n)))
    target = rep_coordinates(p, n)
    if n >= d:
        return _express_stable(target, n, allow_b0)
    monos, reps, matrix = _evaluation_system(d, n, allow_b0)
    if set(target) - set(reps):
        raise NoSolution(f"{p} is outside the span of the chosen generators")
    rhs = [target.get(r, 0) for r in reps]
    try:
        sol = linalg.solve(matrix, rhs)
    except linalg.InconsistentSystem:
        raise NoSolution(f"{p} is outside the span of the chosen generators") from None
    return _vector_to_expr(monos, sol)


def _primitive(vec: list[Fraction], monos) -> list:
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    return [-v for v in ints] if lead < 0 else ints


def find_relations(n: int, degree: int, allow_b0: bool = False) -> list[MSymExpr]:
    """Basis of the relations among z-monomials of a weight at rank n.

    Each relation is scaled to coprime integers with a positive coefficient
    on its canonically least monomial.  By default only generators with
    ``b >= 1`` are used (the ring of the commutativity classifying space).
    """
    if degree < 1:
        return []
    monos, reps, matrix = _evaluation_system(degree, n, allow_b0)
    basis = linalg.nullspace(matrix, len(monos))
    return [_vector_to_expr(monos, _primitive(v, monos)) for v in basis]


def relation_report(n: int, degree: int, allow_b0: bool = False) -> dict:
    rels = find_relations(n, degree, allow_b0)
    return {
        "rank": n,
        "degree": degree,
        "kernel_dimension": len(rels),
        "unique_expressions": not rels,
        "relations": [r.render() for r in rels],
    }


# tensor products of z-expressions


class MSymTensor:
    """Element of Q[z] ⊗ Q[z], keyed by (left monomial, right monomial)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        for (l, r), c in (terms or {}).items():
            key = (tuple(sorted(l)), tuple(sorted(r)))
            v = clean.get(key, 0) + c
            if v:
                clean[key] = normalize(v)
            else:
                clean.pop(key, None)
        self.terms = clean

    @classmethod
    def pure(cls, left: MSymExpr, right: MSymExpr) -> "MSymTensor":
        return cls(
            {
                (l, r): cl * cr
                for l, cl in left.terms.items()
                for r, cr in right.terms.items()
            }
        )

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return MSymTensor(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return MSymTensor({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MSymTensor):
            return self.scale(other)
        out: dict = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                k = (tuple(sorted(l1 + l2)), tuple(sorted(r1 + r2)))
                out[k] = out.get(k, 0) + c1 * c2
        return MSymTensor(out)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, MSymTensor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        key = MSymExpr.sort_key
        return sorted(self.terms.items(), key=lambda t: (key(t[0][0]), key(t[0][1])))

    def render(self) -> str:
        def side(m):
            return MSymExpr.monomial_str(m) or "1"

        return render_terms(
            (f"{side(l)} ⊗ {side(r)}", c) for (l, r), c in self.sorted_terms()
        )

    __str__ = render

    def __repr__(self):
        return f"MSymTensor({self.render()!r})"


def mu_pullback_formula(a: int, b: int, m: int, n: int) -> MSymTensor:
    """Closed form of the tensor-product pullback of z(a,b).

    Sum over i<=a, j<=b of binom(a,i) binom(b,j) z(a-i,b-j) ⊗ z(i,j) with
    z(0,0) ⊗ 1 read as m and 1 ⊗ z(0,0) read as n.
    """
    terms = {}
    for i in range(a + 1):
        for j in range(b + 1):
            c = binom(a, i) * binom(b, j)
            left, right = (a - i, b - j), (i, j)
            lm = () if left == (0, 0) else (left,)
            rm = () if right == (0, 0) else (right,)
            if not lm:
                c *= m
            if not rm:
                c *= n
            terms[(lm, rm)] = terms.get((lm, rm), 0) + c
    return MSymTensor(terms)


def _tensor_varset(m: int, n: int) -> VarSet:
    names = (
        [f"xL{i}" for i in range(1, m + 1)]
        + [f"yL{i}" for i in range(1, m + 1)]
        + [f"xR{j}" for j in range(1, n + 1)]
        + [f"yR{j}" for j in range(1, n + 1)]
    )
    return VarSet.of(*names)


def tensor_pullback_polynomial(a: int, b: int, m: int, n: int) -> MPoly:
    """Pullback of z(a,b) at rank mn along the tensor product of tori.

    The torus coordinate indexed by (i, j) pulls back to the sum of the
    i-th left and j-th right coordinates, so the result is
    sum_{i,j} (xL_i + xR_j)^a (yL_i + yR_j)^b.
    """
    vs = _tensor_varset(m, n)
    gens = dict(zip(vs.names, MPoly.gens(vs)))
    out = MPoly.zero(vs)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            out = out + (gens[f"xL{i}"] + gens[f"xR{j}"]) ** a * (
                gens[f"yL{i}"] + gens[f"yR{j}"]
            ) ** b
    return out


def _express_columns(weight: int, rank: int, columns: Mapping[tuple, Mapping]) -> dict:
    """Express several invariant coordinate vectors at once.

    ``columns`` maps a key to ``{orbit rep: coefficient}``; returns
    ``key -> {z-monomial: coefficient}``.
    """
    monos, reps, matrix = _evaluation_system(weight, rank, True)
    keys = list(columns)
    extra = {r for col in columns.values() for r in col} - set(reps)
    if extra:
        raise NoSolution("coordinates outside the invariant span")
    rhs = [[columns[k].get(r, 0) for r in reps] for k in keys]
    sols = linalg.solve_many(matrix, rhs)
    return {k: {mo: c for mo, c in zip(monos, s) if c} for k, s in zip(keys, sols)}


def _check_range(what: str, rank: int, weight: int) -> None:
    if rank < weight:
        warnings.warn(
            f"{what}: rank {rank} is below weight {weight}; the z-expression "
            "is not unique there and the canonical one is returned",
            StableRangeWarning,
            stacklevel=3,
        )


def mu_pullback_oracle(a: int, b: int, m: int, n: int) -> MSymTensor:
    """Concrete tensor-product pullback of z(a,b), re-expressed in z ⊗ z.

    Works entirely with polynomials at ranks m and n; the closed form is not
    consulted.  Below ``m, n >= a + b`` the answer is flagged with a
    :class:`StableRangeWarning`.
    """
    if (a, b) == (0, 0):
        raise ValueError("z(0,0) is not a generator")
    w = a + b
    _check_range("mu pullback", min(m, n), w)
    poly = tensor_pullback_polynomial(a, b, m, n)
    # split exponents into the two factors, keep orbit reps on both sides
    by_weight: dict[int, dict] = {}
    for e, c in poly.terms.items():
        left, right = e[: 2 * m], e[2 * m :]
        if not (is_orbit_rep(left, m) and is_orbit_rep(right, n)):
            continue
        wl = sum(left)
        by_weight.setdefault(wl, {}).setdefault(right, {})[left] = c
    result = {}
    for wl, cols in sorted(by_weight.items()):
        wr = w - wl
        left_exprs = _express_columns(wl, m, cols)
        # regroup: for each left monomial a vector over right reps
        rows: dict[tuple, dict] = {}
        for rrep, expr in left_exprs.items():
            for lmono, c in expr.items():
                rows.setdefault(lmono, {})[rrep] = c
        right_exprs = _express_columns(wr, n, rows)
        for lmono, expr in right_exprs.items():
            for rmono, c in expr.items():
                result[(lmono, rmono)] = c
    return MSymTensor(result)


def comult_pullback(n: int, k: int) -> MSymExpr:
    """Effect of the inclusion into BU on the power sum z_n at rank k.

    Expands sum_i (x_i + y_i)^n, writes it in the z-generators, and drops
    every monomial containing a generator with b = 0 (those lie in the
    ideal generated by the x-elementary symmetric functions).
    """
    if n < 1:
        raise ValueError("power sum index must be >= 1")
    _check_range("comultiplication pullback", k, n)
    vs = paired_varset(k)
    gens = MPoly.gens(vs)
    poly = MPoly.zero(vs)
    for i in range(k):
        poly = poly + (gens[i] + gens[k + i]) ** n
    expr = express_in_z(poly, k, allow_b0=True)
    return MSymExpr({m: c for m, c in expr.terms.items() if all(g[1] >= 1 for g in m)})


# rank-2 quotient


class Rank2Quot:
    """Polynomial in x1, y1, y2 modulo x1^2.

    This is the rank-2 invariant ring after imposing x2 = -x1 and
    x1*x2 = 0 (the ideal generated by the elementary symmetric functions
    in x).
    """

    __slots__ = ("poly",)
    varset = VarSet.of("x1", "y1", "y2")

    def __init__(self, poly: MPoly):
        if poly.varset != self.varset:
            raise ValueError("Rank2Quot lives over x1, y1, y2")
        self.poly = MPoly(
            self.varset, {e: c for e, c in poly.terms.items() if e[0] < 2}, poly.domain
        )

    @classmethod
    def zero(cls):
        return cls(MPoly.zero(cls.varset))

    @classmethod
    def one(cls, c=1):
        return cls(MPoly.constant(cls.varset, c))

    def __add__(self, other):
        return Rank2Quot(self.poly + other.poly)

    def __sub__(self, other):
        return Rank2Quot(self.poly - other.poly)

    def __neg__(self):
        return Rank2Quot(-self.poly)

    def __mul__(self, other):
        if isinstance(other, Rank2Quot):
            return Rank2Quot(self.poly * other.poly)
        return Rank2Quot(self.poly.scale(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Rank2Quot) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def degree_part(self, d: int) -> "Rank2Quot":
        return Rank2Quot(self.poly.homogeneous_part(d))

    def render(self) -> str:
        return self.poly.render()

    __str__ = render

    def __repr__(self):
        return f"Rank2Quot({self.render()!r})"


def rank2_eval(e: MSymExpr) -> Rank2Quot:
    """Evaluate at rank 2, set x2 = -x1, and reduce x1^2 to zero."""
    vs = Rank2Quot.varset
    x1, y1, y2 = MPoly.gens(vs)
    assignment = {"x1": x1, "x2": -x1, "y1": y1, "y2": y2}
    out = Rank2Quot.zero()
    for mono, c in e.terms.items():
        # reduce after each factor to keep the intermediate small
        val = Rank2Quot.one(c)
        for g in mono:
            val = val * Rank2Quot(expand_z(*g, 2).substitute(assignment))
        out = out + val
    return out


def in_ideal_of_z01_mod_j(target: MSymExpr, n: int) -> bool:
    """Is ``target`` a multiple of z(0,1) in the rank-n cohomology ring?

    The ring is the invariant ring modulo the ideal generated by the
    b = 0 generators.  Decided by exact linear algebra in the target's
    weight: the candidate span is z(0,1) times every monomial of one lower
    weight, plus every monomial containing a b = 0 generator.
    """
    weights = target.weights()
    if len(weights) != 1:
        raise ValueError("target must be homogeneous")
    d = weights.pop()
    spanning = [
        tuple(sorted(m + ((0, 1),))) for m in z_monomials(d - 1, True)
    ] + [m for m in z_monomials(d, True) if any(g[1] == 0 for g in m)]
    spanning = list(dict.fromkeys(spanning))
    coords = [_monomial_coords(m, n) for m in spanning]
    tcoords = rep_coordinates(evaluate(target, n), n)
    reps = sorted({r for c in coords for r in c} | set(tcoords), reverse=True)
    matrix = [[c.get(r, 0) for c in coords] for r in reps]
    try:
        linalg.solve(matrix, [tcoords.get(r, 0) for r in reps])
    except linalg.InconsistentSystem:
        return False
    return True


def evaluate_many(exprs: Iterable[MSymExpr], n: int) -> list[MPoly]:
    return [evaluate(e, n) for e in exprs]
