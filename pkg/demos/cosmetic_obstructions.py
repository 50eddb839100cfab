"""
Ruling out purely cosmetic surgeries
====================================

"""

# every check compares lambda of two surgeries; a nonzero difference
# means the manifolds differ, a zero difference proves nothing
from lescop import conway as cw
from lescop import ConwayData, SurgeryPresentation, lescop_lambda, thm21_admissible_p, thm22_admissible_q, thm3_verdict, thm5_verdict
from lescop.cosmetic import thm22_coefficients, thm22_difference_quadratics

# a knot K_0 inside the 0-surgery on the other Whitehead component:
# p0/q0 and p0/q0' surgeries differ by (q0 - q0') a1hat(W), and a1hat(W) = -1
a_w = cw.a1hat(cw.builtin_link("whitehead"))
v = thm3_verdict(a_w, q0=2, q0p=5)
print("whitehead:", v.statement, v.as_dict()["witness"])

# the twisted family scales the witness by m
for m in (1, 2, 3):
    v = thm3_verdict(cw.a1hat(cw.builtin_link("L_m", m)), q0=1, q0p=2)
    print(f"L_{m}:", v.statement, v.as_dict()["witness"])

# Borromean rings with (0, 0) on two components
v = thm5_verdict(cw.a1hat(cw.builtin_link("borromean")), p0=1, q0=3)
print("borromean:", v.statement, v.as_dict()["witness"])

# +p versus -p surgery on K_0 split from a surgery link: the difference is a
# quadratic in p, so at most two p survive
pres = SurgeryPresentation.make([(1, 1), (3, 2), (5, 1)], [[0, 0, 0], [0, 0, 1], [0, 1, 0]])
cd = ConwayData({"0": 1, "1": 0, "2": 0, "0,1": -1, "0,2": 0, "1,2": 1, "0,1,2": 0})
v = thm21_admissible_p(pres, cd)
print("difference polynomial:", v.polys[0], " admissible p:", v.admissible)
for p in range(1, 4):
    d = lescop_lambda(pres.with_slope(0, p), cd) - lescop_lambda(pres.with_slope(0, -p), cd)
    assert d == v.polys[0](p)

# +-1/q surgery: the stated coefficients carry a linear term that the
# surgery formula does not produce; the verdict uses the engine-consistent form
print("stated c2, c1, c0:", ", ".join(str(c) for c in thm22_coefficients(pres, cd)))
print("difference quadratic:", thm22_difference_quadratics(pres, cd).plus)
print("verdict:", thm22_admissible_q(pres, cd).statement)
