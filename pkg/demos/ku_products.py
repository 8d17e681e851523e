"""Products in ku_*(BU(1)) and what they say about B_comU.

Run: python3 demos/ku_products.py
"""

from kucomm import kumod
from kucomm.exactmath import factorial
from kucomm.kumod import KuElem, iota, ku_mul, phi_k

y1, y2, u = KuElem.y(1), KuElem.y(2), KuElem.u()

print("y1*y1 =", ku_mul(y1, y1))
print("y2*y2 =", ku_mul(y2, y2))

# The falling product of y1 is n! y_n, so rationally y1 generates everything.
for n in range(1, 6):
    print(f"prod_{{j<{n}}} (y1 - j*u) = {kumod.divided_form(n)}  (= {factorial(n)}*y{n})")

# The map to Z[u,x]/(x^2-ux) kills every y_n with n >= 2.
print("iota(y1*y1) =", iota(ku_mul(y1, y1)).render())
print("iota(y3) =", iota(KuElem.y(3)).render())

# The homotopy of B_comU is the ideal generated by the y_n.
for p in (u * u, ku_mul(u, y1), y1, y2):
    in_u, in_su = kumod.bcomu_membership(p)
    print(f"{p!s:>8}: in pi_*(B_comU) {in_u}, in pi_*(B_comSU) {in_su}")

print("phi^2(y2) =", phi_k(2, y2))
print("phi^-1(y2) =", phi_k(-1, y2))
