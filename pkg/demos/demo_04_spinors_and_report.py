"""
Spinors and the reconciliation report
=====================================

epsilon sends a Cartan number to a pair of complex numbers. The report
then checks printed closed forms against values computed from scratch.
"""

from cartan_horadam import cw_term, isotropic, mate, preset, q_hat, spinor_gf, spinor_term, tilde_conj
from cartan_horadam.genfunc import series_expand
from cartan_horadam.report import build_report

pell = preset("pell")
phi = spinor_term(pell, 0)
print("SCP_0 =", phi.to_json())
print("mate  =", mate(phi).to_json())
print("tilde =", tilde_conj(phi).to_json())
print("mate twice is -phi:", mate(mate(phi)) == -phi)

# The first column of Q-hat is the spinor itself
m = q_hat(cw_term(pell, 0))
print("first column matches:", m.column(0) == phi)

# Spinors parametrize null vectors
a1, a2, a3 = isotropic(phi)
print("a1^2 + a2^2 + a3^2 is zero:", (a1 * a1 + a2 * a2 + a3 * a3).is_zero())

# The generating function reproduces the sequence
print("gf terms agree:", series_expand(spinor_gf(pell), 8) == [spinor_term(pell, n) for n in range(8)])

# Summary of the printed-versus-computed comparison
doc = build_report()
for section, counts in doc["summary"].items():
    print(f"{section:20}", counts)
