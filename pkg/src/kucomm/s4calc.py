"""Classes in the fourth homotopy group of B_comSU(2) and their images.

A class of pi_4(B_comSU(2)) is recorded by its values on H^4, which is
free on c2 and b = d1 - 2 c2.  Its image in pi_4(B_comU) = Z{u y1, y2} is
pinned down by the two functionals c2 and lambda2 on pi_4(B_comU).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .charcls import derive_u2_row
from .exactmath import factorial
from .kumod import FElem, KuElem, iota


def chern_of_bott_power(k: int) -> int:
    """c_k(u^k) = (-1)^(k-1) (k-1)!, the k-th Chern class on the k-th Bott power."""
    return (-1) ** (k - 1) * factorial(k - 1)


# Orientation conventions.  [S^4] is the image of the fundamental class of
# CP^2, and the sign of c2 on pi_4(BU) is the one below.
C2_OF_U_SQUARED = chern_of_bott_power(2)


@dataclass(frozen=True)
class Pi4SU2Elem:
    """Coordinates (alpha, beta) in the basis dual to (c2, b)."""

    alpha: int
    beta: int

    def __add__(self, other):
        return Pi4SU2Elem(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other):
        return Pi4SU2Elem(self.alpha - other.alpha, self.beta - other.beta)

    def scale(self, c: int):
        return Pi4SU2Elem(self.alpha * c, self.beta * c)


@dataclass(frozen=True)
class Pi4UElem:
    """Coordinates in the basis (u*y1, y2) of pi_4(B_comU)."""

    uy1: int
    y2: int

    def to_ku(self) -> KuElem:
        return KuElem({(1, 1): self.uy1, (0, 2): self.y2})

    @classmethod
    def from_ku(cls, p: KuElem) -> "Pi4UElem":
        if set(p.terms) - {(1, 1), (0, 2)}:
            raise ValueError(f"{p} is not in pi_4 of B_comU")
        return cls(p.coefficient(1, 1), p.coefficient(0, 2))

    def render(self) -> str:
        return self.to_ku().render()


V = Pi4SU2Elem(1, 0)
W = Pi4SU2Elem(-1, 2)
HALF_V_PLUS_W = Pi4SU2Elem(0, 1)


def _su2_degree4_coordinates(name: str) -> tuple[int, int]:
    """Coordinates of a class's SU(2) image in the basis (c2, b)."""
    _, su = derive_u2_row(name)
    if su.torsion:
        raise ValueError("degree-4 classes have no torsion part")
    c2 = su.free.get((1, 0), 0)
    d1 = su.free.get((0, 1), 0)
    # x c2 + y d1 = (x + 2y) c2 + y b
    return c2 + 2 * d1, d1


def eval_functionals(cls: Pi4SU2Elem) -> tuple[int, int]:
    """(<c2, cls>, <lambda2, cls>), with lambda2 read off its SU(2) image."""
    pairs = []
    for name in ("c2", "lambda2"):
        x, y = _su2_degree4_coordinates(name)
        pairs.append(x * cls.alpha + y * cls.beta)
    return pairs[0], pairs[1]


def to_bu(p: KuElem) -> KuElem:
    """The map to pi_*(BU) = Z[u]: through Z[u,x]/(x^2-ux) with x -> u."""
    f: FElem = iota(p)
    return KuElem({(a + e, 0): c for (a, e), c in f.terms.items()})


def c2_on_bcomu(p: KuElem) -> int:
    """c2 on pi_4(B_comU), through pi_4(BU) = Z{u^2}."""
    return to_bu(p).coefficient(2, 0) * C2_OF_U_SQUARED


def lambda2_on_bcomu(p: KuElem) -> int:
    """lambda2 reads the y2 component of the splitting."""
    return p.coefficient(0, 2)


def functional_matrix() -> list[list[int]]:
    basis = [KuElem.y(1, a=1), KuElem.y(2)]
    return [[c2_on_bcomu(e) for e in basis], [lambda2_on_bcomu(e) for e in basis]]


class NonIntegralImage(ArithmeticError):
    pass


def push_to_bcomu(cls: Pi4SU2Elem) -> Pi4UElem:
    """Image in pi_4(B_comU), solved from the two functionals."""
    sol = linalg.solve(functional_matrix(), list(eval_functionals(cls)))
    if any(Fraction(v).denominator != 1 for v in sol):
        raise NonIntegralImage(f"non-integral image {sol}")
    return Pi4UElem(int(sol[0]), int(sol[1]))


def verify_kcoms4() -> dict:
    pv, pw, ph = push_to_bcomu(V), push_to_bcomu(W), push_to_bcomu(HALF_V_PLUS_W)
    det = linalg.det([[pv.uy1, pv.y2], [ph.uy1, ph.y2]])
    two_v = push_to_bcomu(V.scale(2))
    v_plus_w = push_to_bcomu(V + W)
    report = {
        "functionals": {
            "v": list(eval_functionals(V)),
            "w": list(eval_functionals(W)),
        },
        "images": {
            "v": pv.render(),
            "w": pw.render(),
            "(v+w)/2": ph.render(),
            "v+w": v_plus_w.render(),
        },
        "basis_determinant": int(det),
        # the sign of h depends on orientation choices; keep it open
        "h_image": "±(" + two_v.render() + ")",
    }
    report["ok"] = (
        abs(det) == 1
        and pv == Pi4UElem(-1, 0)
        and pw == Pi4UElem(1, 2)
        and ph == Pi4UElem(0, 1)
    )
    return report
