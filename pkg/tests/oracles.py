"""Brute-force reference computations used by the tests.

Nothing here calls the closed formulas under test; each function recomputes
its answer from definitions (enumeration, direct expansion, Pascal's rule).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from kucomm.polyring import MPoly, VarSet, paired_varset


def pascal(n_max: int) -> list[list[int]]:
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1] + [0]
        rows.append([prev[k] + (prev[k - 1] if k else 0) for k in range(n + 1)])
    return rows


def falling_factorial_coeffs(n: int) -> list[int]:
    """Coefficients of x(x-1)...(x-n+1), lowest degree first."""
    coeffs = [1]
    for j in range(n):
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= j * c
        coeffs = nxt
    return coeffs


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def count_partitions(n: int, k: int) -> int:
    return sum(1 for p in set_partitions(range(n)) if len(p) == k)


def fgl_coefficient(m: int, n: int, k: int) -> dict[int, int]:
    """u-power -> coefficient of s^m t^n in (s + t + ust)^k, by trinomial sums."""
    out: dict = {}
    for l in range(k + 1):
        i, j = m - l, n - l
        if i < 0 or j < 0 or i + j + l != k:
            continue
        c = math.factorial(k) // (math.factorial(i) * math.factorial(j) * math.factorial(l))
        out[l] = out.get(l, 0) + c
    return out


def ku_product_oracle(m: int, n: int) -> dict[tuple[int, int], int]:
    """y_m y_n as {(u-power, index): coefficient} from the defining series."""
    out = {}
    for k in range(m + n + 1):
        for l, c in fgl_coefficient(m, n, k).items():
            out[(l, k)] = c
    return out


def k_series(k: int, top: int) -> dict[tuple[int, int], Fraction]:
    """((1+ux)^k - 1)/u truncated at x^top, as {(x-power, u-power): coeff}.

    Uses the series (1+w)^k = sum_i C(k,i) w^i with C(k,i) computed as a
    product of fractions, valid for negative k.
    """
    out = {}
    for i in range(1, top + 1):
        c = Fraction(1)
        for r in range(i):
            c *= Fraction(k - r, r + 1)
        if c:
            out[(i, i - 1)] = c
    return out


def series_power(series: dict, m: int, top: int) -> dict:
    out = {(0, 0): Fraction(1)}
    for _ in range(m):
        nxt: dict = {}
        for (e1, f1), c1 in out.items():
            for (e2, f2), c2 in series.items():
                if e1 + e2 <= top:
                    nxt[(e1 + e2, f1 + f2)] = nxt.get((e1 + e2, f1 + f2), 0) + c1 * c2
        out = nxt
    return out


def phi_oracle(k: int, n: int) -> dict[tuple[int, int], int]:
    """phi^k(y_n) as {(u-power, index): coeff} by dualizing [k](x)."""
    s = k_series(k, n)
    out = {}
    for m in range(1, n + 1):
        for (e, f), c in series_power(s, m, n).items():
            if e == n and c:
                out[(f, m)] = out.get((f, m), 0) + int(c)
    return {key: c for key, c in out.items() if c}


def orbit_sum_by_permutations(exps: tuple[int, ...], n: int) -> MPoly:
    """Sum over all of S_n acting on pairs, then divide by the stabilizer size."""
    vs = paired_varset(n)
    seen = {}
    for perm in itertools.permutations(range(n)):
        e = [0] * (2 * n)
        for i in range(n):
            e[perm[i]] = exps[i]
            e[n + perm[i]] = exps[n + i]
        seen[tuple(e)] = 1
    return MPoly(vs, seen)


def power_sum(a: int, b: int, n: int) -> MPoly:
    vs = paired_varset(n)
    gens = MPoly.gens(vs)
    out = MPoly.zero(vs)
    for i in range(n):
        out = out + gens[i] ** a * gens[n + i] ** b
    return out


def elementary(k: int, variables: list[MPoly], vs: VarSet) -> MPoly:
    out = MPoly.zero(vs)
    for combo in itertools.combinations(variables, k):
        term = MPoly.constant(vs, 1)
        for v in combo:
            term = term * v
        out = out + term
    return out


def rank2_reduce(p: MPoly) -> dict:
    """Substitute x2 = -x1 into a rank-2 polynomial and drop x1^2 and higher.

    Returns {(x1, y1, y2) exponents: coeff}.
    """
    out: dict = {}
    for (a1, a2, b1, b2), c in p.terms.items():
        a = a1 + a2
        if a >= 2:
            continue
        c = c * (-1) ** a2
        key = (a, b1, b2)
        out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}
