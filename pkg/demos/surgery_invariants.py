"""
Casson-Walker-Lescop invariants from surgery presentations
==========================================================

"""

# a presentation is a list of slopes p/q plus a linking matrix; the knot
# data enters only through a1hat, one integer per sublink
from fractions import Fraction
from lescop import ConwayData, SurgeryPresentation, lescop_breakdown, lescop_lambda, walker_from_lescop

# +1 surgery on the unknot gives back S^3, 0 surgery gives S^2 x S^1
unknot = ConwayData({0: 0})
print("lambda(S^3)       =", lescop_lambda(SurgeryPresentation.make([(1, 1)]), unknot))
print("lambda(S^2 x S^1) =", lescop_lambda(SurgeryPresentation.make([(0, 1)]), unknot))

# 0-surgery on a knot shifts by a1hat(K), i.e. a_2(K) for a knot
trefoil = ConwayData({0: 1})
print("lambda(trefoil, 0) =", lescop_lambda(SurgeryPresentation.make([(0, 1)]), trefoil))

# lens spaces: p/q surgery on the unknot; lambda_w is the Casson-Walker normalization
for p, q in [(5, 1), (5, 2), (7, 3)]:
    pres = SurgeryPresentation.make([(p, q)])
    lam = lescop_lambda(pres, unknot)
    print(f"L({p},{q}): lambda = {lam}, lambda_w = {walker_from_lescop(pres, lam)}")

# a two-component presentation: slopes 7/3 and -2/1 with linking number 1;
# the breakdown shows how the three blocks of the formula add up
pres = SurgeryPresentation.make([(7, 3), (-2, 1)], [[0, 1], [1, 0]])
cd = ConwayData({"0": 1, "1": 2, "0,1": -1})
b = lescop_breakdown(pres, cd)
print("det E =", b.det_E, " |H_1| =", pres.h1_order())
print("conway block   ", b.conway_term)
print("theta block    ", b.theta_term)
print("dedekind block ", b.dedekind_term)
print("lambda         ", b.value)
assert b.value == b.conway_term + b.theta_term + b.dedekind_term

# three or more components: theta of the whole link vanishes when one
# component links nothing, otherwise it has to be supplied
from lescop import UnsupportedTheta
from lescop.surgery import ThetaOverrides
chain = SurgeryPresentation.make([(1, 1)] * 3, [[0, 1, 0], [1, 0, 1], [0, 1, 0]])
zeros = ConwayData({k: 0 for k in ["0", "1", "2", "0,1", "0,2", "1,2", "0,1,2"]})
try:
    lescop_lambda(chain, zeros)
except UnsupportedTheta as exc:
    print("as expected:", exc)
print("with theta = 0:", lescop_lambda(chain, zeros, ThetaOverrides({"0,1,2": Fraction(0)})))
