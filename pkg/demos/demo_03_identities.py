"""
Deciding sequence identities
============================

Both sides of an identity are C-finite, so their difference satisfies a
known recurrence. It vanishes everywhere once its first few terms vanish.
"""

from cartan_horadam import builtin_identity_suite, cf_add, cf_from_horadam, cf_geometric, cf_is_zero, preset

J, j = preset("jacobsthal"), preset("jacobsthal_lucas")

# 3 J_n + j_n - 2^(n+1) has an order-5 annihilator (2 + 2 + 1)
diff = cf_add([cf_from_horadam(J, 0, 3), cf_from_horadam(j, 0), cf_geometric(2, -2)])
print("order", diff.order, "initial terms", [str(v) for v in diff.init], "zero:", cf_is_zero(diff))

# Shift the J term by one and the identity breaks at n = 0
shifted = cf_add([cf_from_horadam(J, 1, 3), cf_from_horadam(j, 0), cf_geometric(2, -2)])
print("shifted form, first terms:", [str(v) for v in shifted.terms(4)])

# The built-in suite decides each identity per Cartan coordinate
for r in builtin_identity_suite():
    if r.coordinate != "s":
        continue
    w = r.verdict.witness
    where = f" at n={w['n']}: {w['lhs']} vs {w['rhs']}" if w else ""
    print(f"{r.preset:30} {r.identity.name:40} {r.status}{where}")
