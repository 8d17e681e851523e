"""Exact computations around the K-theory of commutative classifying spaces.

The main entry points are re-exported here; each lives in its own module:

* :mod:`kucomm.exactmath` - binomials and Stirling numbers
* :mod:`kucomm.polyring` - sparse multivariate polynomials
* :mod:`kucomm.multisym` - multisymmetric functions and z-generators
* :mod:`kucomm.kumod` - the ring ku_*(BU(1)) and its operations
* :mod:`kucomm.hopf` - the rational Hopf ring and the Hurewicz map
* :mod:`kucomm.charcls` - characteristic classes, U(2) and SU(2) rings
* :mod:`kucomm.s4calc` - classes in pi_4 of B_comSU(2)
"""

from .charcls import (
    SU2Elem,
    U2Elem,
    chern_from_powersums,
    lambda_class,
    splitting_pullback,
    su2_project,
    u2_mul,
    u2_to_rank2,
    vaccarino_check,
    verify_u2_table,
)
from .exactmath import binom, stirling1, stirling2
from .hopf import HopfElem, circ, coproduct, hurewicz, pairing, star, verify_hurewicz_formula
from .kumod import (
    FElem,
    KuElem,
    bcomu_membership,
    divided_form,
    f_mul,
    homotopy_rank,
    iota,
    ku_mul,
    ku_series_oracle,
    phi_k,
)
from .multisym import (
    MSymExpr,
    NoSolution,
    Rank2Quot,
    comult_pullback,
    expand_z,
    express_in_z,
    find_relations,
    mu_pullback_oracle,
    rank2_eval,
)
from .polyring import MPoly, VarSet, coefficient_of, poly_mul, substitute, symmetric_orbit_sum
from .s4calc import Pi4SU2Elem, Pi4UElem, eval_functionals, push_to_bcomu, verify_kcoms4

__version__ = "0.1.0"
