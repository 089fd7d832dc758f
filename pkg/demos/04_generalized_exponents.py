"""Generalized-exponent polynomials three ways: closed form, recurrence, oracle.

The closed formulas cover the small fundamental chains in types B, C, D; the
recurrences derive the same polynomials from the base cases alone; and the
Weyl-group oracle computes them from the graded partition function with no
combinatorial shortcuts.
"""

from extalg import (build_root_datum, closed_E, covered_small_weights, freudenthal,
                    lusztig_E, recur_E, symmetric_series)

for family, rank in [("B", 3), ("C", 4), ("D", 4)]:
    datum = build_root_datum(family, rank)
    table = recur_E(datum)
    print(f"{family}{rank}:")
    for lam in covered_small_weights(datum):
        closed = closed_E(datum, lam)
        oracle = lusztig_E(datum, lam)
        zero_dim = freudenthal(datum, lam).zero_multiplicity()
        agree = closed == table[lam] == oracle
        print(f"  E_{datum.fund_string(lam):7s} = {closed}   "
              f"[three-way agree: {agree}, E(1) = dim zero space = {zero_dim}]")

b2 = build_root_datum("B", 2)
print("\ngraded multiplicities of the adjoint in the symmetric algebra of so(5):")
print("  ", symmetric_series(b2, b2.theta, 9))
print("invariants of S(g) start in the exponent degrees + 1:")
print("  ", symmetric_series(b2, b2.zero, 9))
