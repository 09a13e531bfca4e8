"""
Odd steps from even ones
========================

"""
from fractions import Fraction

from knodelwalk import WalkParams, single_step, trajectory
from knodelwalk.double import double_states
from knodelwalk.oddsteps import odd_from_even, odd_state_series
from knodelwalk.walk import Bottom

p = WalkParams(Fraction(1, 2))

# after two steps, one more step by the last-step relations
d2 = trajectory(p, 2)[2]
d3 = odd_from_even(d2, p)
print({str(s): str(x) for s, x in d3.support.items()})
print("same as single_step:", d3.same_as(single_step(d2, p)))

# whole odd-step series from the double-step solution
F, G, Q = double_states(p, 3, 8)
print(odd_state_series(Bottom(2), F, G, Q, p))
