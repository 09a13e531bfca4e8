"""
Mean end index and its square-root growth
=========================================

"""
from fractions import Fraction

import numpy as np

from knodelwalk import WalkParams
from knodelwalk.asympt import expected_end_exact, expected_end_float, expected_end_half_closed, leading_term

half = WalkParams(Fraction(1, 2))

# exact coefficients, from the closed form and again from the z-form at alpha = 1/2
print([str(c) for c in expected_end_exact(6, half)])
print([str(c) for c in expected_end_half_closed(6)])

# ratio to 4 sqrt(ab) sqrt(n/pi) for growing n
ns = 4 ** np.arange(2, 7)
for a in (Fraction(1, 2), Fraction(1, 3)):
    p = WalkParams(a)
    vals = expected_end_float(ns.tolist(), p)
    print(a, [round(vals[int(n)] / leading_term(int(n), p), 4) for n in ns])
