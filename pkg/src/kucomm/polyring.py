"""Sparse multivariate polynomials with exact coefficients.

A polynomial lives over a :class:`VarSet` (ordered, weighted variable
names) and stores a dict ``exponent tuple -> coefficient`` with no zero
entries.  Coefficients are ints or Fractions; the ``domain`` tag ``"ZZ"``
rejects non-integral values, ``"QQ"`` accepts any rational.

Terms print in graded-lex order (highest weighted degree first, ties broken
lexicographically on the exponent tuple in declared variable order).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .exactmath import format_rat, normalize

ZZ = "ZZ"
QQ = "QQ"


@dataclass(frozen=True)
class VarSet:
    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable required")
        if any(w < 1 for w in self.weights):
            raise ValueError("variable weights must be >= 1")

    @classmethod
    def of(cls, *names: str, weights: Iterable[int] | None = None) -> "VarSet":
        names = tuple(names)
        ws = tuple(weights) if weights is not None else (1,) * len(names)
        return cls(names, ws)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def weight_of(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))


@lru_cache(maxsize=None)
def paired_varset(n: int) -> VarSet:
    """Variables x1..xn, y1..yn of weight one (the diagonal Σ_n setting)."""
    if n < 1:
        raise ValueError("rank must be >= 1")
    names = tuple(f"x{i}" for i in range(1, n + 1)) + tuple(
        f"y{i}" for i in range(1, n + 1)
    )
    return VarSet.of(*names)


def _coerce(value, domain: str):
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        if domain == ZZ:
            raise ValueError(f"non-integral coefficient {value} over ZZ")
        return value
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


class MPoly:
    __slots__ = ("varset", "terms", "domain", "_hash")

    def __init__(self, varset: VarSet, terms: Mapping | None = None, domain: str = QQ):
        self.varset = varset
        self.domain = domain
        self._hash = None
        clean = {}
        n = len(varset)
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise ValueError(
                        f"exponent vector {exps} does not match {n} variables"
                    )
                c = _coerce(c, domain)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self.terms: dict[tuple[int, ...], object] = clean

    @classmethod
    def _raw(cls, varset, terms, domain):
        obj = cls.__new__(cls)
        obj.varset = varset
        obj.terms = terms
        obj.domain = domain
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def zero(cls, varset: VarSet, domain: str = QQ) -> "MPoly":
        return cls._raw(varset, {}, domain)

    @classmethod
    def constant(cls, varset: VarSet, c, domain: str = QQ) -> "MPoly":
        return cls(varset, {(0,) * len(varset): c}, domain)

    @classmethod
    def var(cls, varset: VarSet, name: str, domain: str = QQ) -> "MPoly":
        exps = [0] * len(varset)
        exps[varset.index(name)] = 1
        return cls._raw(varset, {tuple(exps): 1}, domain)

    @classmethod
    def monomial(cls, varset: VarSet, exps, c=1, domain: str = QQ) -> "MPoly":
        return cls(varset, {tuple(exps): c}, domain)

    @classmethod
    def gens(cls, varset: VarSet, domain: str = QQ) -> tuple["MPoly", ...]:
        return tuple(cls.var(varset, nm, domain) for nm in varset.names)

    # arithmetic

    def _check(self, other: "MPoly") -> None:
        if self.varset != other.varset:
            raise ValueError("polynomials live over different variable sets")

    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        return MPoly.constant(self.varset, other, self.domain)

    def _domain_with(self, other: "MPoly") -> str:
        return ZZ if self.domain == other.domain == ZZ else QQ

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = normalize(v)
            else:
                out.pop(e, None)
        return MPoly._raw(self.varset, out, self._domain_with(other))

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.varset, {e: -c for e, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "MPoly":
        c = _coerce(c, QQ)
        if not c:
            return MPoly.zero(self.varset, self.domain)
        domain = self.domain if isinstance(c, int) else QQ
        return MPoly._raw(
            self.varset, {e: normalize(v * c) for e, v in self.terms.items()}, domain
        )

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MPoly._raw(
            self.varset,
            {e: normalize(v) for e, v in out.items()},
            self._domain_with(other),
        )

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return MPoly._raw(
            self.varset,
            {e: normalize(Fraction(v) / c) for e, v in self.terms.items()},
            QQ,
        )

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MPoly.constant(self.varset, 1, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.varset == other.varset and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(self.varset, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varset, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], object]]:
        return iter(self.sorted_terms())

    # queries

    def sorted_terms(self):
        vs = self.varset
        return sorted(
            self.terms.items(),
            key=lambda t: (vs.weight_of(t[0]), t[0]),
            reverse=True,
        )

    def coefficient_of(self, exps) -> object:
        """Exact coefficient of a monomial (0 if absent)."""
        return self.terms.get(tuple(exps), 0)

    def degrees(self) -> set[int]:
        return {self.varset.weight_of(e) for e in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_degree(self) -> int | None:
        """Common weighted degree of the support, or None if not homogeneous.

        The zero polynomial is homogeneous of every degree; returns None.
        """
        ds = self.degrees()
        return next(iter(ds)) if len(ds) == 1 else None

    def homogeneous_part(self, d: int) -> "MPoly":
        vs = self.varset
        return MPoly._raw(
            vs, {e: c for e, c in self.terms.items() if vs.weight_of(e) == d}, self.domain
        )

    def used_variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            used.update(nm for nm, k in zip(self.varset.names, e) if k)
        return used

    # maps

    def substitute(self, assignment: Mapping[str, "MPoly"]) -> "MPoly":
        """Ring-homomorphic image under ``variable -> polynomial``.

        Every variable that occurs in ``self`` must be assigned, and all
        images must share one target variable set.
        """
        missing = self.used_variables() - set(assignment)
        if missing:
            raise KeyError(f"no assignment for variables {sorted(missing)}")
        images = list(assignment.values())
        if not images:
            return self
        target = images[0].varset
        for img in images:
            if img.varset != target:
                raise ValueError("substitution images live over different variable sets")
        powers: dict[tuple[str, int], MPoly] = {}

        def power(name, k):
            key = (name, k)
            if key not in powers:
                powers[key] = assignment[name] ** k
            return powers[key]

        result = MPoly.zero(target)
        for e, c in self.terms.items():
            term = MPoly.constant(target, c)
            for name, k in zip(self.varset.names, e):
                if k:
                    term = term * power(name, k)
            result = result + term
        return result

    def rename(self, varset: VarSet, mapping: Mapping[str, str] | None = None) -> "MPoly":
        """Re-embed into a larger variable set by name (optionally renamed)."""
        mapping = mapping or {}
        idx = [varset.index(mapping.get(nm, nm)) for nm in self.varset.names]
        out = {}
        n = len(varset)
        for e, c in self.terms.items():
            new = [0] * n
            for i, k in zip(idx, e):
                new[i] += k
            out[tuple(new)] = c
        return MPoly._raw(varset, out, self.domain)

    # rendering

    def _monomial_str(self, exps) -> str:
        parts = []
        for name, k in zip(self.varset.names, exps):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def render(self) -> str:
        return render_terms(
            (self._monomial_str(e), c) for e, c in self.sorted_terms()
        )

    __str__ = render

    def __repr__(self):
        return f"MPoly({self.render()!r})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.varset.names),
            "weights": list(self.varset.weights),
            "terms": [
                {
                    "exponents": list(e),
                    "numerator": Fraction(c).numerator,
                    "denominator": Fraction(c).denominator,
                }
                for e, c in self.sorted_terms()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: Mapping) -> "MPoly":
        vs = VarSet(tuple(data["variables"]), tuple(data["weights"]))
        terms = {
            tuple(t["exponents"]): Fraction(t["numerator"], t["denominator"])
            for t in data["terms"]
        }
        return cls(vs, terms)


def render_terms(pairs: Iterable[tuple[str, object]]) -> str:
    """Join ``(monomial string, coefficient)`` pairs as ``2*a - b + 1/2``.

    An empty monomial string denotes the constant term.
    """
    out = []
    for mono, c in pairs:
        c = Fraction(c)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = format_rat(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rat(a)}*{mono}"
        if not out:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out) if out else "0"


def distinct_permutations(items) -> Iterator[tuple]:
    """Each distinct ordering of a multiset exactly once."""
    items = sorted(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    counts: dict = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    keys = list(counts)
    cur: list = []

    def rec():
        if len(cur) == n:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


def symmetric_orbit_sum(monomial, n: int) -> MPoly:
    """Sum of the distinct monomials in the Σ_n-orbit of ``monomial``.

    ``monomial`` is an exponent vector over :func:`paired_varset` ``(n)``;
    Σ_n permutes the pairs ``(x_i, y_i)`` simultaneously.
    """
    vs = paired_varset(n)
    monomial = tuple(monomial)
    if len(monomial) != 2 * n:
        raise IndexError(f"exponent vector must have length {2 * n}")
    pairs = [(monomial[i], monomial[n + i]) for i in range(n)]
    terms = {}
    for perm in distinct_permutations(pairs):
        exps = tuple(p[0] for p in perm) + tuple(p[1] for p in perm)
        terms[exps] = 1
    return MPoly._raw(vs, terms, ZZ)


def pair_monomial(pairs, n: int) -> tuple[int, ...]:
    """Exponent vector over ``paired_varset(n)`` from ``[(a_1,b_1), ...]``.

    Missing trailing pairs are (0, 0); more than ``n`` pairs is an error.
    """
    pairs = list(pairs)
    if len(pairs) > n:
        raise IndexError(f"{len(pairs)} index pairs exceed rank {n}")
    pairs += [(0, 0)] * (n - len(pairs))
    return tuple(p[0] for p in pairs) + tuple(p[1] for p in pairs)


def swap_pairs(p: MPoly, i: int, j: int) -> MPoly:
    """Apply the transposition of pair indices i and j (1-based)."""
    vs = p.varset
    n = len(vs) // 2
    out = {}
    for e, c in p.terms.items():
        e = list(e)
        a, b = i - 1, j - 1
        e[a], e[b] = e[b], e[a]
        e[n + a], e[n + b] = e[n + b], e[n + a]
        out[tuple(e)] = c
    return MPoly._raw(vs, out, p.domain)


def is_symmetric(p: MPoly) -> bool:
    """True when ``p`` over a paired variable set is Σ_n-invariant."""
    n = len(p.varset) // 2
    return all(swap_pairs(p, i, i + 1) == p for i in range(1, n))


def poly_mul(p: MPoly, q: MPoly) -> MPoly:
    return p * q


def substitute(p: MPoly, assignment: Mapping[str, MPoly]) -> MPoly:
    return p.substitute(assignment)


def coefficient_of(p: MPoly, monomial) -> object:
    return p.coefficient_of(monomial)


class FreePoly:
    """Formal commutative polynomial in labelled generators.

    Keys are sorted tuples of generator labels (a multiset), values nonzero
    rationals.  Subclasses say how a label prints and what it weighs.
    """

    __slots__ = ("terms", "_hash")
    fewer_factors_first = True

    def __init__(self, terms: Mapping | None = None):
        clean: dict = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(sorted(mono))
                for g in mono:
                    self.check_label(g)
                c = _coerce(c, QQ)
                if c:
                    v = clean.get(mono, 0) + c
                    if v:
                        clean[mono] = normalize(v)
                    else:
                        del clean[mono]
        self.terms: dict[tuple, object] = clean
        self._hash = None

    # hooks

    @classmethod
    def check_label(cls, label) -> None:
        pass

    @classmethod
    def label_weight(cls, label) -> int:
        return 1

    @classmethod
    def label_str(cls, label) -> str:
        return str(label)

    # construction

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def gen(cls, label, c=1):
        return cls({(label,): c})

    @classmethod
    def one(cls, c=1):
        return cls({(): c})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def monomial_weight(cls, mono) -> int:
        return sum(cls.label_weight(g) for g in mono)

    @classmethod
    def sort_key(cls, mono):
        n = len(mono) if cls.fewer_factors_first else -len(mono)
        return (cls.monomial_weight(mono), n, mono)

    # arithmetic

    def _lift(self, other):
        if isinstance(other, FreePoly):
            if type(other) is not type(self):
                raise TypeError(
                    f"cannot combine {type(self).__name__} with {type(other).__name__}"
                )
            return other
        return type(self).one(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = normalize(v)
            else:
                out.pop(m, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = _coerce(c, QQ)
        if not c:
            return type(self).zero()
        return type(self)._raw({m: normalize(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            return self.scale(other)
        other = self._lift(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return type(self)._raw({m: normalize(v) for m, v in out.items()})

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(Fraction(1) / Fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = type(self).one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return type(self) is type(other) and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == type(self).one(other) if other else not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # queries

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.sort_key(t[0]))

    def coefficient(self, mono) -> object:
        return self.terms.get(tuple(sorted(mono)), 0)

    def weights(self) -> set[int]:
        return {self.monomial_weight(m) for m in self.terms}

    def generators(self) -> set:
        return {g for m in self.terms for g in m}

    def substitute(self, images: Mapping, one):
        """Image under ``label -> element`` of any commutative algebra.

        ``one`` is the unit of the target algebra.
        """
        result = one * 0
        cache: dict = {}
        for mono, c in self.terms.items():
            term = one * c
            for g in mono:
                if g not in cache:
                    cache[g] = images[g]
                term = term * cache[g]
            result = result + term
        return result

    # rendering

    @classmethod
    def monomial_str(cls, mono) -> str:
        parts = []
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            s = cls.label_str(mono[i])
            parts.append(s if j - i == 1 else f"{s}^{j - i}")
            i = j
        return "*".join(parts)

    def render(self) -> str:
        return render_terms((self.monomial_str(m), c) for m, c in self.sorted_terms())

    __str__ = render

    def __repr__(self):
        return f"{type(self).__name__}({self.render()!r})"
