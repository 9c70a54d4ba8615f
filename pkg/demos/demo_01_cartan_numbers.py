"""
Cartan numbers and their matrices
=================================

A tour of the four-dimensional algebra with i^2 = 1, j^2 = k^2 = 0
and jk = 1 + i.
"""

from fractions import Fraction

from cartan_horadam import CartanNumber, character, cn_conj, theta, theta_inv

# The units and the two products that break commutativity
one, i, j, k = (CartanNumber.unit(u) for u in "sijk")
print("jk =", j * k)
print("kj =", k * j)

# A product worked out by distributing over the unit table
print("(1 + j)(1 + k) =", (one + j) * (one + k))

# Every Cartan number is a 2x2 matrix in disguise
x = CartanNumber(0, 1, 2, 5)
m = theta(x)
print("theta(x) =", m.to_json())

# The determinant of that matrix is the character s^2 - i^2 - 2jk
print("det =", m.det(), " character =", character(x))

# x times its conjugate collapses to a scalar
print("x * conj(x) =", x * cn_conj(x))

# Going back from a matrix gives the original coordinates
print("round trip:", theta_inv(m) == x)

# Rational coordinates work just as well
y = CartanNumber(Fraction(1, 3), -2, Fraction(5, 7), 4)
print("character multiplies:", character(x * y) == character(x) * character(y))
