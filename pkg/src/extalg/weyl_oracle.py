"""Brute-force representation-theoretic oracles.

Everything here is deliberately independent of the polytope machinery in
``gpartitions``: weight multiplicities come from the Freudenthal recursion,
tensor products from the Brauer-Klimyk rho-shift rule, and the
generalized-exponent oracle from the full signed Weyl-group sum over the
graded partition function.  These are the reference implementations that the
combinatorial constructions are checked against.
"""

import itertools
import os
import pickle
from dataclasses import dataclass

from .genexp import PolyT
from .orders import enumerate_dominant_below
from .rootdata import build_root_datum

__all__ = [
    "ResourceCapError",
    "WeightMultMap",
    "freudenthal",
    "weyl_dim",
    "klimyk_tensor",
    "q_kostant",
    "lusztig_E",
    "dimension_of_decomposition",
]

#: default guard on the number of (weight, multiplicity) cells a single
#: oracle call may produce; generous enough for every desk-scale sweep
DEFAULT_CELL_CAP = 5_000_000


class ResourceCapError(RuntimeError):
    pass


@dataclass(frozen=True)
class WeightMultMap:
    """Finite weight system of one irreducible, weights mapped to multiplicities."""

    family: str
    rank: int
    highest: object
    mult: dict  # Weight -> positive int, full Weyl-orbit expansion

    def zero_multiplicity(self):
        datum = build_root_datum(self.family, self.rank)
        return self.mult.get(datum.zero, 0)

    def dimension(self):
        return sum(self.mult.values())


_dominant_cache = {}


def _cache_path(datum, lam):
    root = os.environ.get("GEXP_CACHE_DIR")
    if not root:
        return None
    tag = "_".join(str(c) for c in lam.coords2)
    return os.path.join(root, f"freud_{datum.family}{datum.rank}_{tag}.pkl")


def _dominant_multiplicities(datum, lam):
    """Freudenthal recursion over the dominant weights below lam."""
    key = (datum.family, datum.rank, lam.coords2)
    if key in _dominant_cache:
        return _dominant_cache[key]
    path = _cache_path(datum, lam)
    if path and os.path.exists(path):
        with open(path, "rb") as fh:
            table = {datum.weight(c): m for c, m in pickle.load(fh).items()}
        _dominant_cache[key] = table
        return table

    doms = enumerate_dominant_below(datum, lam, "dominance")
    order = sorted(doms, key=lambda w: datum.height2(
        tuple(a - b for a, b in zip(lam.coords2, w.coords2))))
    rho2 = datum.rho.coords2
    lam_norm = datum.dot2(tuple(a + b for a, b in zip(lam.coords2, rho2)),
                          tuple(a + b for a, b in zip(lam.coords2, rho2)))
    table = {}
    for mu in order:
        if mu == lam:
            table[mu] = 1
            continue
        acc = 0
        for alpha in datum.positive_roots:
            k = 1
            while True:
                v2 = tuple(a + k * b for a, b in zip(mu.coords2, alpha.coords2))
                rep = datum.weight(datum.chamber_rep2(v2))
                m = table.get(rep, 0)
                if m == 0:
                    break
                acc += m * datum.dot2(v2, alpha.coords2)
                k += 1
        shifted = tuple(a + b for a, b in zip(mu.coords2, rho2))
        denom = lam_norm - datum.dot2(shifted, shifted)
        num = 2 * acc
        if denom <= 0 or num % denom:
            raise ArithmeticError(f"Freudenthal recursion failed at {mu}")
        table[mu] = num // denom
    _dominant_cache[key] = table
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "wb") as fh:
            pickle.dump({w.coords2: m for w, m in table.items()}, fh)
    return table


def freudenthal(datum, lam, cap=DEFAULT_CELL_CAP):
    """Full weight system of V_lam with multiplicities (all Weyl images)."""
    datum.check_weight(lam)
    if not datum.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    table = _dominant_multiplicities(datum, lam)
    full = {}
    cells = 0
    for mu, m in table.items():
        orbit = datum.orbit2(mu.coords2)
        cells += len(orbit)
        if cells > cap:
            raise ResourceCapError(f"weight system of {lam} exceeds cap {cap}")
        for v in orbit:
            full[datum.weight(v)] = m
    return WeightMultMap(datum.family, datum.rank, lam, full)


def weyl_dim(datum, lam):
    """Weyl dimension formula, exact integer arithmetic."""
    datum.check_weight(lam)
    shifted = tuple(a + b for a, b in zip(lam.coords2, datum.rho.coords2))
    num = den = 1
    for alpha in datum.positive_roots:
        num *= datum.dot2(shifted, alpha.coords2)
        den *= datum.dot2(datum.rho.coords2, alpha.coords2)
    if num % den:
        raise ArithmeticError("Weyl dimension did not come out integral")
    return num // den


def klimyk_tensor(datum, lam, mu, cap=DEFAULT_CELL_CAP):
    """Decomposition of V_lam (x) V_mu by the rho-shifted reduction rule."""
    datum.check_weight(lam)
    datum.check_weight(mu)
    system = freudenthal(datum, mu, cap=cap)
    out = {}
    for nu, m in system.mult.items():
        red = datum.reduce_to_dominant(lam + nu)
        if red is None:
            continue
        target, sign = red
        out[target] = out.get(target, 0) + sign * m
    result = {}
    for w, m in out.items():
        if m < 0:
            raise ArithmeticError(f"negative multiplicity {m} at {w} in Klimyk rule")
        if m:
            result[w] = m
    return result


def dimension_of_decomposition(datum, decomposition):
    return sum(m * weyl_dim(datum, w) for w, m in decomposition.items())


_kostant_memo = {}


def q_kostant(datum, beta):
    """Graded Kostant partition function: sum over k of (#ways as k positive roots) t^k."""
    datum.check_weight(beta)
    coeffs = datum.root_coefficients2(beta.coords2)
    if coeffs is None or any(c < 0 for c in coeffs):
        return PolyT.zero()
    roots = datum.positive_roots
    memo_key_base = (datum.family, datum.rank)

    def rec(i, v2):
        if all(c == 0 for c in v2):
            if i == 0:
                return PolyT.one()
        elif i == 0:
            return PolyT.zero()
        cs = datum.root_coefficients2(v2)
        if cs is None or any(c < 0 for c in cs):
            return PolyT.zero()
        key = (memo_key_base, i, v2)
        hit = _kostant_memo.get(key)
        if hit is not None:
            return hit
        alpha = roots[i - 1].coords2
        out = PolyT.zero()
        k = 0
        w2 = v2
        while True:
            sub = rec(i - 1, w2)
            if sub:
                out = out + sub.shift(k)
            cs = datum.root_coefficients2(tuple(a - b for a, b in zip(w2, alpha)))
            if cs is None or any(c < 0 for c in cs):
                break
            w2 = tuple(a - b for a, b in zip(w2, alpha))
            k += 1
        _kostant_memo[key] = out
        return out

    return rec(len(roots), beta.coords2)


def _weyl_elements(datum):
    """Iterate (coordinate action, determinant) over the full Weyl group (A/B/C/D)."""
    n = datum.dim
    f = datum.family
    for perm in itertools.permutations(range(n)):
        base_sign = _perm_sign(perm)
        if f == "A":
            yield perm, (1,) * n, base_sign
            continue
        for signs in itertools.product((1, -1), repeat=n):
            neg = signs.count(-1)
            if f == "D" and neg % 2:
                continue
            yield perm, signs, base_sign * (1 if neg % 2 == 0 else -1)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def lusztig_E(datum, lam, cap=DEFAULT_CELL_CAP):
    """Generalized-exponent oracle: signed Weyl sum of the graded partition function.

    Computes sum over w in W of (-1)^length(w) * q_kostant(w(lam+rho) - rho),
    which for lam in the root lattice is the generalized-exponent polynomial.
    """
    datum.check_weight(lam)
    if not datum.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if not datum.in_root_lattice(lam):
        raise ValueError(f"{lam} is not in the root lattice")
    if datum.family == "G2":
        raise ValueError("the Weyl-sum oracle is wired for the classical families only")
    import math
    order = math.factorial(datum.dim) * (2 ** datum.rank)
    if order > cap:
        raise ResourceCapError(f"|W| = {order} exceeds cap {cap}")
    shifted = tuple(a + b for a, b in zip(lam.coords2, datum.rho.coords2))
    rho2 = datum.rho.coords2
    out = PolyT.zero()
    for perm, signs, det in _weyl_elements(datum):
        img = tuple(signs[i] * shifted[perm[i]] for i in range(datum.dim))
        beta2 = tuple(a - b for a, b in zip(img, rho2))
        part = q_kostant(datum, datum.weight(beta2))
        if part:
            out = out + det * part
    if any(v < 0 for v in out.c.values()):
        raise ArithmeticError(f"negative coefficient in E-polynomial for {lam}")
    return out
