"""The ring ku_*(BU(1)) and its relatives.

Elements are integer combinations of the basis ``u^a`` and ``u^a y_n``
(n >= 1).  Keys are pairs ``(a, n)`` with ``n = 0`` standing for the pure
power ``u^a``; the weight of a key is ``a + n``.  The product comes from
the multiplicative formal group law ``s + t + u s t``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .exactmath import factorial, gbinom
from .polyring import MPoly, VarSet, render_terms


def _clean(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v}


class KuElem:
    """Integer element of ku_*(BU(1)) in the basis {u^a, u^a*y_n}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        out: dict = {}
        for (a, n), c in (terms or {}).items():
            if a < 0 or n < 0:
                raise ValueError(f"invalid basis key {(a, n)}")
            if c != int(c):
                raise ValueError("ku coefficients are integers")
            out[(a, n)] = out.get((a, n), 0) + int(c)
        self.terms = _clean(out)

    @classmethod
    def u(cls, a: int = 1) -> "KuElem":
        return cls({(a, 0): 1})

    @classmethod
    def y(cls, n: int, a: int = 0) -> "KuElem":
        return cls({(a, n): 1})

    @classmethod
    def const(cls, c: int) -> "KuElem":
        return cls({(0, 0): c})

    @classmethod
    def zero(cls) -> "KuElem":
        return cls()

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return KuElem(out)

    __radd__ = __add__

    def __neg__(self):
        return KuElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def scale(self, c: int) -> "KuElem":
        return KuElem({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return ku_mul(self, other)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, k: int):
        out = KuElem.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = KuElem.const(other)
        return isinstance(other, KuElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def weights(self) -> set[int]:
        return {a + n for a, n in self.terms}

    def max_weight(self) -> int:
        return max(self.weights(), default=0)

    def coefficient(self, a: int, n: int) -> int:
        return self.terms.get((a, n), 0)

    def sorted_terms(self):
        # heavier first, then longer y-index first
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][1]))

    def render(self) -> str:
        return render_terms((key_str(k), c) for k, c in self.sorted_terms())

    __str__ = render

    def __repr__(self):
        return f"KuElem({self.render()!r})"

    def to_json(self) -> list:
        return [{"a": a, "n": n, "coeff": c} for (a, n), c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "KuElem":
        return cls({(d["a"], d["n"]): d["coeff"] for d in data})


def key_str(key) -> str:
    a, n = key
    parts = []
    if a == 1:
        parts.append("u")
    elif a > 1:
        parts.append(f"u^{a}")
    if n:
        parts.append(f"y{n}")
    return "*".join(parts)


def _lift(x) -> KuElem:
    if isinstance(x, int):
        return KuElem.const(x)
    return x


@lru_cache(maxsize=None)
def product_coefficients(m: int, n: int) -> tuple[tuple[int, int, int], ...]:
    """y_m*y_n as a tuple of (power of u, index k, coefficient).

    The coefficient of u^(m+n-k) y_k is k!/((k-n)!(k-m)!(m+n-k)!), the
    number of ways to extract s^m t^n from (s + t + ust)^k.
    """
    if m == 0:
        return ((0, n, 1),)
    if n == 0:
        return ((0, m, 1),)
    out = []
    for k in range(max(m, n), m + n + 1):
        c = factorial(k) // (
            factorial(k - n) * factorial(k - m) * factorial(m + n - k)
        )
        out.append((m + n - k, k, c))
    return tuple(out)


def ku_mul(p: KuElem, q: KuElem) -> KuElem:
    out: dict = {}
    for (a1, n1), c1 in p.terms.items():
        for (a2, n2), c2 in q.terms.items():
            for da, k, c in product_coefficients(n1, n2):
                key = (a1 + a2 + da, k)
                out[key] = out.get(key, 0) + c1 * c2 * c
    return KuElem(out)


def ku_series_oracle(m: int, n: int, N: int) -> KuElem:
    """The s^m t^n coefficient of sum_{k<=N} y_k (s + t + ust)^k.

    Computed by brute-force polynomial expansion, independent of the
    closed-form coefficients used by :func:`ku_mul`.
    """
    if m + n > N:
        raise ValueError(f"truncation N={N} too small for s^{m} t^{n}")
    vs = VarSet.of("s", "t", "u")
    s, t, u = MPoly.gens(vs)
    base = s + t + u * s * t
    out: dict = {}
    power = MPoly.constant(vs, 1)
    for k in range(N + 1):
        for (es, et, eu), c in power.terms.items():
            if es == m and et == n:
                out[(eu, k)] = out.get((eu, k), 0) + int(c)
        power = power * base
    return KuElem(out)


def divided_form(n: int) -> KuElem:
    """The falling product y_1 (y_1 - u) ... (y_1 - (n-1)u)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    y1, u = KuElem.y(1), KuElem.u()
    out = KuElem.const(1)
    for j in range(n):
        out = ku_mul(out, y1 - u.scale(j))
    return out


# the ring Z[u, x]/(x^2 - ux)


class FElem:
    """Integer element of Z[u,x]/(x^2 - ux), keyed (a, e) for u^a x^e, e in {0, 1}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        out: dict = {}
        for (a, e), c in (terms or {}).items():
            if e >= 2:
                # x^e = u^(e-1) x
                a, e = a + e - 1, 1
            out[(a, e)] = out.get((a, e), 0) + c
        self.terms = _clean(out)

    @classmethod
    def u(cls, a: int = 1):
        return cls({(a, 0): 1})

    @classmethod
    def x(cls, a: int = 0):
        return cls({(a, 1): 1})

    @classmethod
    def const(cls, c: int):
        return cls({(0, 0): c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return FElem(out)

    def __neg__(self):
        return FElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return FElem({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return f_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def render(self) -> str:
        def name(k):
            a, e = k
            parts = [] if a == 0 else ["u" if a == 1 else f"u^{a}"]
            if e:
                parts.append("x")
            return "*".join(parts)

        items = sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][1]))
        return render_terms((name(k), c) for k, c in items)

    __str__ = render

    def __repr__(self):
        return f"FElem({self.render()!r})"


def f_mul(p: FElem, q: FElem) -> FElem:
    out: dict = {}
    for (a1, e1), c1 in p.terms.items():
        for (a2, e2), c2 in q.terms.items():
            key = (a1 + a2, e1 + e2)
            out[key] = out.get(key, 0) + c1 * c2
    return FElem(out)


def iota(p: KuElem) -> FElem:
    """u -> u, y_1 -> x, y_n -> 0 for n >= 2."""
    out: dict = {}
    for (a, n), c in p.terms.items():
        if n <= 1:
            out[(a, n)] = out.get((a, n), 0) + c
    return FElem(out)


# the operation dual to the k-th power map


@lru_cache(maxsize=None)
def _k_series_powers(k: int, top: int) -> tuple[tuple[tuple[tuple[int, int], int], ...], ...]:
    """Coefficients of [k](x)^m for m <= top, truncated at x^top.

    [k](x) = sum_{i>=1} binom(k, i) u^(i-1) x^i; entry m is a tuple of
    ((power of x, power of u), coefficient).
    """
    series = {(i, i - 1): gbinom(k, i) for i in range(1, top + 1) if gbinom(k, i)}
    powers = [{(0, 0): 1}]
    for _ in range(top):
        prev = powers[-1]
        nxt: dict = {}
        for (e1, f1), c1 in prev.items():
            for (e2, f2), c2 in series.items():
                if e1 + e2 <= top:
                    key = (e1 + e2, f1 + f2)
                    nxt[key] = nxt.get(key, 0) + c1 * c2
        powers.append({kk: v for kk, v in nxt.items() if v})
    return tuple(tuple(sorted(p.items())) for p in powers)


def phi_k(k: int, p: KuElem) -> KuElem:
    """The operation induced by the k-th power map on BU(1).

    y_n -> sum_m (coefficient of x^n in [k](x)^m) y_m; u is fixed.  The
    series is truncated at the weight of the input, which is exact.
    """
    top = max((n for _, n in p.terms), default=0)
    powers = _k_series_powers(k, top)
    out: dict = {}
    for (a, n), c in p.terms.items():
        if n == 0:
            out[(a, 0)] = out.get((a, 0), 0) + c
            continue
        for m in range(1, n + 1):
            for (e, f), cc in powers[m]:
                if e == n:
                    key = (a + f, m)
                    out[key] = out.get(key, 0) + c * cc
    return KuElem(out)


def bcomu_membership(p: KuElem) -> tuple[bool, bool]:
    """Membership in the homotopy of B_comU and of B_comSU.

    The first is the ideal (y_n | n >= 1), i.e. no pure power of u occurs.
    The second is the ideal (u*y_1, y_n | n >= 2): additionally the bare y_1
    coefficient vanishes.
    """
    in_u = all(n >= 1 for _, n in p.terms)
    in_su = in_u and p.coefficient(0, 1) == 0
    return in_u, in_su


def homotopy_rank(n: int) -> int:
    """Rank of the weight-n part of the ideal (y_m | m >= 1)."""
    if n < 0:
        raise ValueError("weight must be non-negative")
    return len([(n - j, j) for j in range(1, n + 1)])


def basis(weight: int) -> list[tuple[int, int]]:
    """Basis keys of a given weight: u^weight then u^(weight-j) y_j."""
    return [(weight - j, j) for j in range(weight + 1)]
