"""
Solving for the boundary series with the kernel method
======================================================

"""
from fractions import Fraction

from knodelwalk import Top, WalkParams, state_series
from knodelwalk.brute import quadrant_states_from_boundary, solve_f0_g0_brute, verify_functional_equations
from knodelwalk.double import double_states

p = WalkParams(Fraction(2, 5))

# four-function system: substitute the small kernel root and solve a 2x2 system
f0, g0 = solve_f0_g0_brute(p, 20)
print("f0 =", f0.truncate(8))
print("g0 =", g0.truncate(8))

# every other state follows by forward reconstruction (one order lost per index)
qs = quadrant_states_from_boundary(f0, g0, p, 4)
print("f4 =", qs.f[4].truncate(8))

# the functional equations hold for the recovered series
for check in verify_functional_equations(qs.f, qs.g, f0, g0, p, 12, udeg=4):
    print(check)

# the double-step chain gives the same even coefficients in one go
F, G, Q = double_states(p, 2, 10)
print("F2 =", F[2])
print("walk even part of Top(4):", state_series(Top(4), 20, p).even_part())
