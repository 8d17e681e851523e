"""Characteristic classes on the commutative classifying spaces of U(2) and SU(2).

Derives each row of the comparison table from the multisymmetric
description and reads it back in the integral presentation
Z[c1,c2,d1,d2]/(2d2-c1d1, d1^2, d1d2, d2^2).

Run: python3 demos/u2_table.py
"""

from kucomm import charcls, multisym

print("z_3 in Chern classes:", charcls.powersums_from_cherns(3))
print("splitting pullback of z_3, k=2:", charcls.splitting_pullback(2, 3))
print("relations at rank 2, degree 3:", [r.render() for r in multisym.find_relations(2, 3)])
print("relations at rank 3, degree 3:", multisym.find_relations(3, 3))
print()

report = charcls.verify_u2_table()
for row in report["rows"]:
    note = "" if row["status"] == "ok" else f"   [reference: {row['u2_expected']}]"
    print(f"{row['class']:>8}  U(2): {row['u2']:<26} SU(2): {row['su2']}{note}")

# The sign convention matters: with the pullback formula taken literally,
# the c2 row no longer reads back as c2.
literal = charcls.verify_u2_table(consistent=False)
c2 = next(r for r in literal["rows"] if r["class"] == "c2")
print("\nliteral convention, c2 row:", c2["u2"])
