"""
The walk and its exact probabilities
====================================

"""
from fractions import Fraction

from knodelwalk import Bottom, ExtraP, Top, WalkParams, state_series, trajectory

# an up-step probability, kept as an exact rational
p = WalkParams(Fraction(1, 3))

# the first few distributions, starting at the top of column 0
for n, d in enumerate(trajectory(p, 4)):
    print(n, {str(s): str(x) for s, x in d.support.items()})

# generating series of single states, coefficient n = probability after n steps
for s in (Top(0), Top(2), Bottom(0), ExtraP):
    print(s, [str(c) for c in state_series(s, 8, p)])
