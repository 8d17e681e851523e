"""The rational Hopf ring Q[Z] ⊗ Q[zeta(a,b)].

Basis elements are ``[n] * zeta^I``: a group-ring element ``[n]`` of the
integers star-multiplied with a monomial in the primitive generators
``zeta(a,b)``.  Keys are ``(n, I)`` with ``I`` a sorted tuple of index
pairs.  A bare ``zeta(a,b)`` means ``[0] * zeta(a,b)``.

Two products live here: :func:`star` (components add, monomials multiply)
and :func:`circ`, which is determined by

* ``[m] o [n] = [mn]``,
* ``zeta(a,b) o zeta(c,d) = C(a+c,c) C(b+d,b) zeta(a+c,b+d)``,
* distributivity ``x o (y * z) = sum (x' o y) * (x'' o z)`` over the
  coproduct of ``x``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .exactmath import binom, factorial, normalize, register_cache, stirling1
from .kumod import KuElem
from .multisym import MSymTensor, mu_pullback_formula, z_monomials
from .polyring import render_terms

Key = tuple  # (component, monomial)


def _canon_mono(mono) -> tuple:
    mono = tuple(sorted(tuple(g) for g in mono))
    for a, b in mono:
        if a < 0 or b < 0 or (a, b) == (0, 0):
            raise ValueError(f"invalid generator index zeta({a},{b})")
    return mono


def _collect(pairs: Iterable[tuple[Key, object]]) -> dict:
    out: dict = {}
    for k, c in pairs:
        out[k] = out.get(k, 0) + c
    return {k: normalize(v) for k, v in out.items() if v}


class HopfElem:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, object] | None = None):
        self.terms = _collect(
            ((int(n), _canon_mono(m)), c) for (n, m), c in (terms or {}).items()
        )

    @classmethod
    def _raw(cls, terms: dict) -> "HopfElem":
        obj = cls.__new__(cls)
        obj.terms = {k: normalize(v) for k, v in terms.items() if v}
        return obj

    @classmethod
    def group(cls, n: int) -> "HopfElem":
        return cls({(n, ()): 1})

    @classmethod
    def zeta(cls, a: int, b: int, component: int = 0) -> "HopfElem":
        return cls({(component, ((a, b),)): 1})

    @classmethod
    def zero(cls) -> "HopfElem":
        return cls()

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HopfElem._raw(out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "HopfElem":
        return HopfElem._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HopfElem):
            return star(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, HopfElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def components(self) -> set[int]:
        return {n for n, _ in self.terms}

    def weights(self) -> set[int]:
        return {sum(a + b for a, b in m) for _, m in self.terms}

    def coefficient(self, n: int, mono) -> object:
        return self.terms.get((n, _canon_mono(mono)), 0)

    def sorted_terms(self):
        def key(item):
            (n, m), _ = item
            return (sum(a + b for a, b in m), n, len(m), m)

        return sorted(self.terms.items(), key=key)

    def render(self) -> str:
        return render_terms((key_str(k), c) for k, c in self.sorted_terms())

    __str__ = render

    def __repr__(self):
        return f"HopfElem({self.render()!r})"

    def to_json(self) -> list:
        out = []
        for (n, m), c in self.sorted_terms():
            mults = _multiplicities(m)
            out.append(
                {
                    "component": n,
                    "monomial": [[a, b, k] for (a, b), k in mults],
                    "coeff": str(Fraction(c)),
                }
            )
        return out

    @classmethod
    def from_json(cls, data) -> "HopfElem":
        terms = {}
        for d in data:
            mono = tuple((a, b) for a, b, k in d["monomial"] for _ in range(k))
            terms[(d["component"], mono)] = Fraction(d["coeff"])
        return cls(terms)


def _multiplicities(mono) -> list[tuple[tuple[int, int], int]]:
    out: list = []
    for g in mono:
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + 1)
        else:
            out.append((g, 1))
    return out


def monomial_str(mono) -> str:
    parts = []
    for (a, b), k in _multiplicities(mono):
        s = f"zeta({a},{b})"
        parts.append(s if k == 1 else f"{s}^{k}")
    return "*".join(parts)


def key_str(key) -> str:
    n, mono = key
    if not mono:
        return f"[{n}]"
    if n == 0:
        return monomial_str(mono)
    return f"[{n}]*{monomial_str(mono)}"


# star product and coproduct


def star(p: HopfElem, q: HopfElem) -> HopfElem:
    out: dict = {}
    for (n1, m1), c1 in p.terms.items():
        for (n2, m2), c2 in q.terms.items():
            k = (n1 + n2, tuple(sorted(m1 + m2)))
            out[k] = out.get(k, 0) + c1 * c2
    return HopfElem._raw(out)


def star_power(p: HopfElem, k: int) -> HopfElem:
    out = HopfElem.group(0)
    for _ in range(k):
        out = star(out, p)
    return out


@lru_cache(maxsize=None)
def _split_monomial(mono: tuple) -> tuple[tuple[tuple, tuple, int], ...]:
    """All ways to split a monomial under the coproduct, with multiplicity."""
    mults = _multiplicities(mono)
    out = []
    for choice in product(*(range(k + 1) for _, k in mults)):
        left, right, c = [], [], 1
        for (g, k), j in zip(mults, choice):
            left += [g] * j
            right += [g] * (k - j)
            c *= binom(k, j)
        out.append((tuple(left), tuple(right), c))
    return tuple(out)


class HopfTensor:
    """Element of the tensor square, keyed by (left key, right key)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {k: normalize(v) for k, v in (terms or {}).items() if v}

    def __eq__(self, other):
        return isinstance(other, HopfTensor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def render(self) -> str:
        items = sorted(self.terms.items())
        return render_terms(
            (f"{key_str(l)} ⊗ {key_str(r)}", c) for (l, r), c in items
        )

    __str__ = render

    def __repr__(self):
        return f"HopfTensor({self.render()!r})"


def coproduct(p: HopfElem) -> HopfTensor:
    """zeta's are primitive and [n] is group-like."""
    out: dict = {}
    for (n, m), c in p.terms.items():
        for left, right, k in _split_monomial(m):
            key = ((n, left), (n, right))
            out[key] = out.get(key, 0) + c * k
    return HopfTensor(out)


def counit(p: HopfElem) -> object:
    return sum((c for (n, m), c in p.terms.items() if not m), 0)


# circle product


@lru_cache(maxsize=None)
def _circ_primitive(g: tuple[int, int], m: int, mono: tuple) -> tuple:
    """([m] * zeta^K) o zeta_g, as a tuple of (key, coefficient)."""
    if not mono:
        return (((0, (g,)), m),)
    if len(mono) == 1:
        (a, b), (c, d) = mono[0], g
        return (((0, ((a + c, b + d),)), binom(a + c, c) * binom(b + d, b)),)
    return ()


def _clear():
    _circ_basis.cache_clear()
    _circ_primitive.cache_clear()


register_cache(_clear)


@lru_cache(maxsize=None)
def _circ_basis(m: int, I: tuple, n: int, J: tuple) -> tuple:
    """([m] * zeta^I) o ([n] * zeta^J) as a tuple of (key, coefficient)."""
    if not J:
        return (((m * n, I), n ** len(I)),)
    if not I:
        return (((m * n, J), m ** len(J)),)
    g, rest = J[-1], J[:-1]
    out: dict = {}
    for left, right, c in _split_monomial(I):
        first = _circ_basis(m, left, n, rest)
        second = _circ_primitive(g, m, right)
        for (k1, m1), c1 in first:
            for (k2, m2), c2 in second:
                key = (k1 + k2, tuple(sorted(m1 + m2)))
                out[key] = out.get(key, 0) + c * c1 * c2
    return tuple((k, v) for k, v in out.items() if v)


def circ(p: HopfElem, q: HopfElem) -> HopfElem:
    out: dict = {}
    for (m, I), c1 in p.terms.items():
        for (n, J), c2 in q.terms.items():
            for k, c in _circ_basis(m, I, n, J):
                out[k] = out.get(k, 0) + c1 * c2 * c
    return HopfElem._raw(out)


def circ_power(p: HopfElem, k: int) -> HopfElem:
    out = HopfElem.group(1)
    for _ in range(k):
        out = circ(out, p)
    return out


# pairing with the cohomology side


def pairing(z_mono: Iterable, zeta_mono: Iterable) -> int:
    """<prod z_i^k_i, prod zeta_j^l_j> = prod k_i! if the multisets agree."""
    zm, tm = _canon_mono(z_mono), _canon_mono(zeta_mono)
    if zm != tm:
        return 0
    out = 1
    for _, k in _multiplicities(zm):
        out *= factorial(k)
    return out


def tensor_pairing(t: MSymTensor, left: tuple, right: tuple) -> object:
    return sum(
        (c * pairing(l, left) * pairing(r, right) for (l, r), c in t.terms.items()),
        0,
    )


def push_forward_via_pairing(a: int, b: int, c: int, d: int, m: int, n: int) -> HopfElem:
    """([m] zeta(a,b)) o ([n] zeta(c,d)) computed by duality.

    Each z-monomial of the total weight is pulled back along the tensor map
    with the closed formula; pairing with zeta(a,b) ⊗ zeta(c,d) gives the
    coefficient of the dual basis element zeta^I / prod k_i!.
    """
    w = a + b + c + d
    pulled = {g: mu_pullback_formula(*g, m, n) for g in _gens(w)}
    out = {}
    for mono in z_monomials(w, True):
        t = MSymTensor({((), ()): 1})
        for g in mono:
            t = t * pulled[g]
        val = tensor_pairing(t, ((a, b),), ((c, d),))
        if val:
            out[(m * n, mono)] = Fraction(val, pairing(mono, mono))
    return HopfElem(out)


def _gens(w: int) -> list[tuple[int, int]]:
    return [(a, s - a) for s in range(1, w + 1) for a in range(s + 1)]


# Hurewicz map


def zeta10_circ_power(a: int) -> HopfElem:
    """zeta(1,0)^{o a}, normalized to a! zeta(a,0) (the circ unit for a = 0)."""
    if a == 0:
        return HopfElem.group(1)
    return HopfElem.zeta(a, 0).scale(factorial(a))


def hurewicz_y(n: int) -> HopfElem:
    """Closed form: sum_j s(n, n-j)/C(n,j) zeta(j, n-j)."""
    out = {}
    for j in range(n):
        s = stirling1(n, n - j)
        if s:
            out[(0, ((j, n - j),))] = Fraction(s, binom(n, j))
    return HopfElem(out)


def hurewicz(p: KuElem) -> HopfElem:
    """Image of a positive-weight element of ku_*(BU(1)) in the Hopf ring.

    u^a y_n goes to zeta(1,0)^{o a} o h(y_n) and u^a to a! zeta(a,0).  The
    map is only additive in positive degree, so a constant term is rejected.
    """
    out = HopfElem.zero()
    for (a, n), c in p.terms.items():
        if a == 0 and n == 0:
            raise ValueError("the Hurewicz map is not linear in degree 0")
        if n == 0:
            term = zeta10_circ_power(a)
        else:
            term = circ(zeta10_circ_power(a), hurewicz_y(n))
        out = out + term.scale(c)
    return out


def hurewicz_oracle(n: int) -> HopfElem:
    """circ-expand prod_{j<n} (zeta(0,1) - j zeta(1,0)) / n!."""
    z01, z10 = HopfElem.zeta(0, 1), HopfElem.zeta(1, 0)
    out = HopfElem.group(1)
    for j in range(n):
        out = circ(out, z01 - z10.scale(j))
    return out.scale(Fraction(1, factorial(n)))


def verify_hurewicz_formula(n_max: int) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        closed, oracle = hurewicz_y(n), hurewicz_oracle(n)
        rows.append(
            {
                "n": n,
                "closed_form": closed.render(),
                "oracle": oracle.render(),
                "equal": closed == oracle,
            }
        )
    return rows


def has_b_positive_factor(p: HopfElem) -> bool:
    """Every monomial contains some zeta(a,b) with b >= 1."""
    return all(any(b >= 1 for _, b in m) for _, m in p.terms)
