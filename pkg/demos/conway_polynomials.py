"""
Conway polynomials by skein recursion
=====================================

"""

# PD codes: X[a,b,c,d] lists edges counterclockwise from the incoming
# under-strand; orientation and crossing signs are worked out by the parser
from lescop import conway as cw

trefoil = cw.parse_pd("X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]")
print("signs:", trefoil.signs)
print("nabla(trefoil) =", cw.format_poly(cw.conway(trefoil)))

# the example links; L_m has nabla = m z^3, so a1hat = -m
for name, params in [("hopf", (1,)), ("whitehead", ()), ("borromean", ()), ("L_m", (2,)), ("L_m", (-3,))]:
    d = cw.builtin_link(name, *params)
    print(f"{name}{params or ''}: {d.n_crossings} crossings, nabla = {cw.format_poly(cw.conway(d))}, a1hat = {cw.a1hat(d)}")

# the skein relation, checked at every crossing of the Whitehead link
d = cw.builtin_link("whitehead")
g = d.gauss()
nab = cw.gauss_conway(g)
for x, s in enumerate(d.signs):
    switched = cw.gauss_conway(cw.switch_crossing(g, x))
    smoothed = cw.gauss_conway(cw.smooth_crossing(g, x))
    plus, minus = (nab, switched) if s > 0 else (switched, nab)
    assert cw.poly_sub(plus, minus) == cw.poly_shift(smoothed)
print("skein relation holds at all", d.n_crossings, "crossings")

# surgery input needs a1hat of every sublink; one call collects them
data = cw.conway_data_from_diagram(cw.builtin_link("borromean"))
print("borromean a1hat by sublink:", {k: data.get(k) for k in sorted(data.a1hat, key=lambda k: (len(k), k))})

# malformed input is reported with the offending crossing
try:
    cw.parse_pd("X[1,2,3,4], X[2,1,4,5]")
except cw.PDError as exc:
    print("rejected:", exc)
