"""The circle product and the Hurewicz map.

Run: python3 demos/hopf_ring.py
"""

from kucomm import hopf
from kucomm.hopf import HopfElem, circ, circ_power, star
from kucomm.kumod import KuElem, ku_mul

z10, z01 = HopfElem.zeta(1, 0), HopfElem.zeta(0, 1)

# every zeta(a,b) is a circ-monomial in the two degree-one classes
for a, b in [(1, 1), (2, 1), (2, 2)]:
    print(f"zeta(1,0)^o{a} o zeta(0,1)^o{b} =", circ(circ_power(z10, a), circ_power(z01, b)))

m, n = 2, 3
lhs = circ(star(HopfElem.group(m), z10), star(HopfElem.group(n), z01))
print(f"([{m}]*zeta(1,0)) o ([{n}]*zeta(0,1)) =", lhs)

for k in range(1, 5):
    print(f"h(y{k}) =", hopf.hurewicz_y(k))

p, q = KuElem.y(1), KuElem.y(2)
print("h(y1*y2) =", hopf.hurewicz(ku_mul(p, q)))
print("h(y1) o h(y2) =", circ(hopf.hurewicz(p), hopf.hurewicz(q)))
