"""
Rational closed forms after the substitution z = z(v)
=====================================================

"""
from fractions import Fraction

from knodelwalk import WalkParams
from knodelwalk.vsubst import closed_forms, transfer_coeff, transfer_series

p = WalkParams(Fraction(1, 3))
cf = closed_forms(p)

# each boundary series is a rational function of v
print("f0(v) =", cf.f0)
print("fQ(v) =", cf.fQ)

# coefficients come back through the transfer formula
print([str(transfer_coeff(cf.f0, n, p)) for n in range(6)])
print(transfer_series(cf.F_coeff(3), 8, p))

# the exponent matters: N instead of N - 1 breaks the constant term
print("exponent N - 1:", transfer_coeff(cf.f0, 0, p))
print("exponent N:    ", transfer_coeff(cf.f0, 0, p, printed_exponent=True))
