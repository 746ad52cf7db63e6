"""
Exact total positivity for Jacobi generators
============================================

x_i(t) is the identity matrix with t added above the diagonal in row i.
Products with nonnegative parameters are totally nonnegative, and the
generators satisfy two exact exchange identities, verified here over
the rationals with no floating point anywhere.
"""

from fractions import Fraction

from coxsort.totalpos import (RationalMatrix, chevalley, is_totally_nonnegative,
                              verify_additive_identity, verify_braid_identity)

F = Fraction

# same-row parameters add
print("x_1(2) x_1(1/2) == x_1(5/2):", verify_additive_identity(3, 1, F(2), F(1, 2)))

# the three-term exchange at t1 = t2 = t3 = 1 produces (1/2, 2, 1/2)
lhs = chevalley(3, 1, F(1)) @ chevalley(3, 2, F(1)) @ chevalley(3, 1, F(1))
rhs = chevalley(3, 2, F(1, 2)) @ chevalley(3, 1, F(2)) @ chevalley(3, 2, F(1, 2))
print("x_1(1) x_2(1) x_1(1) == x_2(1/2) x_1(2) x_2(1/2):", lhs == rhs)
print(lhs)

# the exchange fails only on the pole t1 + t3 = 0
try:
    verify_braid_identity(3, 1, F(3), F(1), F(-3))
except ZeroDivisionError:
    print("t1 + t3 = 0 is a genuine pole: parameters blow up, as expected")

# a sampled product of nonnegative generators, checked minor by minor
M = RationalMatrix.identity(4)
for i, t in ((1, F(1)), (2, F(1, 3)), (3, F(2)), (2, F(5, 7)), (1, F(4))):
    M = M @ chevalley(4, i, t)
print("\nproduct of five nonnegative generators:")
print(M)
print("totally nonnegative:", is_totally_nonnegative(M))

# one negative parameter breaks it
print("x_1(-1) totally nonnegative:",
      is_totally_nonnegative(chevalley(3, 1, F(-1))))
