"""Graded decomposition of exterior algebras at tiny rank.

Decomposes Lambda(g) for so(5) and Lambda(V_theta_s) for the non-simply-laced
ranks, then compares against every closed reference formula: the invariants
product, the adjoint multiplicity polynomial, the 2*rho - delta_I family, the
scaled tensor-square identities and the small-representation bound.
"""

from extalg import (build_root_datum, enumerate_dominant_below, exterior_decomposition,
                    freudenthal, is_small, klimyk_tensor, reference_polynomials)

b2 = build_root_datum("B", 2)
dec = exterior_decomposition(b2, b2.theta)
print("Lambda g for so(5), graded multiplicity polynomials:")
for w, poly in sorted(dec.items(), key=lambda kv: kv[0].coords2):
    tag = " small" if is_small(b2, w) else ""
    print(f"  P(V_{b2.fund_string(w):6s}) = {poly}{tag}")
print("invariants == prod (1 + t^(2e_i+1)):",
      dec[b2.zero] == reference_polynomials(b2, "hks_invariants"))
print("adjoint ==  closed adjoint formula:",
      dec[b2.theta] == reference_polynomials(b2, "bazlov_adjoint"))

totals = {w: p(1) for w, p in dec.items()}
tensor = klimyk_tensor(b2, b2.rho, b2.rho)
print("total multiplicities == 2^rk x (V_rho (x) V_rho):",
      totals == {w: 4 * m for w, m in tensor.items()})
print("equality with 2^rk dim V^0 exactly on small weights:",
      all((totals.get(w, 0) == 4 * freudenthal(b2, w).zero_multiplicity())
          == is_small(b2, w)
          for w in enumerate_dominant_below(b2, 2 * b2.rho, "dominance")))

print("\nlittle adjoint, scaled tensor squares (types B and C):")
for family, rank in [("B", 2), ("B", 3), ("C", 2), ("C", 3)]:
    datum = build_root_datum(family, rank)
    dec_s = exterior_decomposition(datum, datum.theta_short)
    tot = {w: p(1) for w, p in dec_s.items()}
    kl = klimyk_tensor(datum, datum.rho_short, datum.rho_short)
    scale = 2 ** datum.num_short_simple
    below = enumerate_dominant_below(datum, 2 * datum.rho_short, "dominance")
    print(f"  {family}{rank}: identity {tot == {w: scale * m for w, m in kl.items()}}, "
          f"support iff vs <= 2*rho_s: {set(tot) == set(below)}")

g2 = build_root_datum("G2", 2)
dec_g = exterior_decomposition(g2, g2.theta_short)
below = enumerate_dominant_below(g2, 2 * g2.rho_short, "dominance")
print(f"  G2: support iff {set(dec_g) == set(below)} "
      "(the scaled-tensor-square identity itself does not extend to G2)")
