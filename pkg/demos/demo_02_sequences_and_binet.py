"""
Horadam sequences lifted to Cartan numbers
==========================================

Each term packs four consecutive Horadam numbers; the Binet form runs in
Q[t]/(t^2 - d), so square roots never become floats.
"""

from cartan_horadam import binet_term, context, cw_term, preset, roots, term_fast
from cartan_horadam.reconcile import canonical

pell = preset("pell")
print("Pell:", [term_fast(pell, n) for n in range(10)])

# Cartan lifts: CP_n = P_n + P_{n+1} i + P_{n+2} j + P_{n+3} k
for n in range(4):
    print(f"CP_{n} =", cw_term(pell, n))

# The characteristic roots live in Q[t]/(t^2 - 8)
d, alpha, beta = roots(pell)
print("d =", d, " alpha =", alpha, " beta =", beta)
print("alpha + beta =", alpha + beta, " alpha * beta =", alpha * beta)

# Binet coefficients and a term computed from them
ctx = context(pell)
print("X =", ctx.X)
value = binet_term(ctx, 10)
print("Binet at 10:", canonical(value), " recurrence:", cw_term(pell, 10))

# Jacobsthal has d = 9, a perfect square, so the coefficients turn rational
jac = context(preset("jacobsthal"))
print("Jacobsthal X =", canonical(jac.X))
print("Jacobsthal Y =", canonical(jac.Y))

# Large indices stay cheap
print("F(1000) has", len(str(term_fast(preset("fibonacci"), 1000))), "digits")
