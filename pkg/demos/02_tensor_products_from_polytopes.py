"""Tensor multiplicities as lattice-point counts of multiplicity polytopes.

Counts the admissible g-partitions associated to lam + mu - nu and compares
every multiplicity with the independent Brauer-Klimyk oracle.
"""

from extalg import (build_root_datum, count_lr, enumerate_dominant_below,
                    klimyk_tensor, weight_from_fundamental, weight_of, weyl_dim)

c2 = build_root_datum("C", 2)
w1 = weight_from_fundamental(c2, [1, 0])

print("V_w1 (x) V_w1 for sp(4), three ways per component:")
decomposition = klimyk_tensor(c2, w1, w1)
for nu in enumerate_dominant_below(c2, w1 + w1, "dominance"):
    count, _ = count_lr(c2, w1, w1, nu)
    if count or decomposition.get(nu):
        print(f"  V_{c2.fund_string(nu):6s} polytope count {count}, "
              f"oracle {decomposition.get(nu, 0)}, dim {weyl_dim(c2, nu)}")
total = sum(m * weyl_dim(c2, w) for w, m in decomposition.items())
print(f"  dimension check: {total} == {weyl_dim(c2, w1)}**2")

# a multiplicity bigger than one, with its explicit witnesses
c3 = build_root_datum("C", 3)
nu = weight_from_fundamental(c3, [0, 0, 2])
count, witnesses = count_lr(c3, c3.rho, c3.rho, nu, want_witnesses=True)
print(f"\nmultiplicity of V_2w3 in V_rho (x) V_rho for sp(6): {count}")
for p in witnesses:
    print(f"  witness {p.flat} -> associated weight {weight_of(c3, p).pretty()}")
