from hypothesis import given, settings, strategies as st

from kucomm import charcls as cc
from kucomm import multisym as ms
from kucomm.charcls import ChernExpr, PowerSumExpr, SU2Elem, U2Elem, u2_mul, u2_to_rank2
from kucomm.exactmath import factorial, stirling2
from kucomm.kumod import KuElem, ku_mul
from kucomm.multisym import Rank2Quot, z
from kucomm.polyring import MPoly, VarSet
from oracles import elementary

C = ChernExpr.gen
c1, c2, d1, d2 = (U2Elem.gen(n) for n in ("c1", "c2", "d1", "d2"))


def test_newton_examples():
    assert cc.powersums_from_cherns(1) == C(1)
    assert cc.powersums_from_cherns(2) == C(1) ** 2 - C(2) * 2
    assert cc.powersums_from_cherns(3) == C(1) ** 3 - C(1) * C(2) * 3 + C(3) * 3


def test_newton_against_symmetric_polynomials():
    vs = VarSet.of("t1", "t2", "t3", "t4", "t5")
    ts = list(MPoly.gens(vs))
    images = {k: elementary(k, ts, vs) for k in range(1, 6)}
    for n in range(1, 6):
        power_sum = sum((t**n for t in ts), MPoly.zero(vs))
        assert cc.powersums_from_cherns(n).substitute(images, MPoly.constant(vs, 1)) == power_sum


def test_newton_round_trip():
    for n in range(1, 11):
        assert cc.cherns_to_powersums(cc.powersums_from_cherns(n)) == PowerSumExpr.gen(n)
        assert cc.powersums_to_chern(cc.chern_from_powersums(n)) == C(n)


def test_splitting_pullback_examples():
    assert cc.splitting_pullback(1, 2) == z(0, 2) + z(1, 1) * 2
    assert cc.splitting_pullback(2, 3) == z(0, 3) * 6 + z(1, 2) * 6
    for k in range(1, 7):
        assert cc.splitting_pullback(k, k) == z(0, k) * factorial(k)


def test_splitting_k1_is_comultiplication():
    for n in range(1, 9):
        for k in range(n, min(n + 1, 8) + 1):
            assert cc.splitting_pullback(1, n) == ms.comult_pullback(n, k)


def test_splitting_coefficients_from_y1_powers():
    for b in range(1, 9):
        p = KuElem.const(1)
        for _ in range(b):
            p = ku_mul(p, KuElem.y(1))
        for k in range(1, b + 1):
            assert cc.ku_splitting_coefficient(b, k) == p.coefficient(b - k, k) == factorial(k) * stirling2(b, k)


def test_lambda_classes():
    for k in (1, 2, 3):
        assert cc.lambda_class(k).image == z(0, k)
        assert cc.lambda_class(k).image * factorial(k) == cc.splitting_pullback(k, k)


def test_u2_products():
    assert u2_mul(c1, d1) == d2 * 2
    assert u2_mul(d1, d1) == U2Elem()
    assert (c1 + d1) * (c1 + d1) == c1 * c1 + d2 * 4


def test_rewrite_confluence_on_overlaps():
    assert (c1 * c1) * d1 == c1 * (c1 * d1)
    assert (c1 * d1) * d1 == c1 * (d1 * d1) == U2Elem()
    assert (d1 * d1) * d2 == d1 * (d1 * d2) == U2Elem()


u2_elems = st.lists(
    st.tuples(st.sampled_from([c1, c2, d1, d2, U2Elem.const(1)]), st.integers(-3, 3)), max_size=3
).map(lambda ts: sum((g.scale(c) for g, c in ts), U2Elem()))


@settings(max_examples=60, deadline=None)
@given(u2_elems, u2_elems, u2_elems)
def test_u2_ring_axioms_and_map_is_multiplicative(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert u2_to_rank2(p * q) == u2_to_rank2(p) * u2_to_rank2(q)


def test_u2_to_rank2_examples():
    x1, y1, y2 = MPoly.gens(Rank2Quot.varset)
    assert u2_to_rank2(d2 * 2 - c1 * d1) == Rank2Quot.zero()
    assert u2_to_rank2(d1) == Rank2Quot((x1 * (y1 - y2)).scale(2))
    assert u2_to_rank2(d1 * d1) == Rank2Quot.zero()


def test_relations_vanish_and_basis_injective():
    for img in cc.u2_relation_images().values():
        assert img == Rank2Quot.zero()
    for w, (r, size) in cc.u2_injectivity(6).items():
        assert r == size, w


def test_su2_projection_examples():
    assert cc.su2_project(c1 ** 3 - c1 * c2 * 3 + d2 * 3) == SU2Elem.d2()
    assert cc.su2_project(c1) == SU2Elem()
    assert cc.su2_project(c1 * c1 - c2 * 2 + d1) == SU2Elem.c2().scale(-2) + SU2Elem.d1()


def test_su2_torsion():
    assert SU2Elem.d2().scale(2) == SU2Elem()
    assert SU2Elem.d2().order() == 2
    for b in range(7):
        assert SU2Elem.c2(b) * SU2Elem.d2()


def test_table_rows_individually():
    rows = {r["class"]: r for r in cc.verify_u2_table()["rows"]}
    assert rows["lambda2"]["u2"] == "c1^2 - 2*c2 + d1"
    assert rows["c3"]["u2"] == "0"
    assert rows["lambda3"]["su2"] == "d2" and rows["lambda3"]["su2_order"] == 2


def test_table_discrepancy_is_confined_to_one_entry():
    report = cc.verify_u2_table()
    assert report["ok"]
    off = [(r["class"], col) for r in report["rows"] for col in ("u2", "su2") if r[col] != r[col + "_expected"]]
    assert off == [("c3SU", "u2")]
    assert cc.U2_TABLE_ERRATA["c3SU"][0] == next(r["u2"] for r in report["rows"] if r["class"] == "c3SU")


def test_literal_convention_breaks_the_chern_row():
    rows = {r["class"]: r for r in cc.verify_u2_table(consistent=False)["rows"]}
    assert rows["c2"]["status"] == "mismatch"
    assert rows["c3SU"]["u2"] == rows["c3SU"]["u2_expected"]


def test_vaccarino():
    rep = cc.vaccarino_check(3)
    assert rep["rank3_kernel_dimensions"] == {1: 0, 2: 0, 3: 0}
    assert rep["z03_in_z01_ideal_rank3"] is False
    assert rep["rank2_control_kernel_dimension"] == 1
    assert cc.vaccarino_check(1)["rank3_kernel_dimensions"] == {1: 0}
