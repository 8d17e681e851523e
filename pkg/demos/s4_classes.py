"""Two classes in pi_4(B_comSU(2)) pushed into pi_4(B_comU).

Run: python3 demos/s4_classes.py
"""

from kucomm import s4calc

print("functionals (c2, lambda2) on pi_4(B_comU) basis (u*y1, y2):", s4calc.functional_matrix())
for name, cls in [("v", s4calc.V), ("w", s4calc.W), ("(v+w)/2", s4calc.HALF_V_PLUS_W)]:
    print(f"{name:>8} -> {s4calc.push_to_bcomu(cls).render()}")

rep = s4calc.verify_kcoms4()
print("determinant of the images of v and (v+w)/2:", rep["basis_determinant"])
print("image of h = 2v:", rep["h_image"])
