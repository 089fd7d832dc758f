"""Minuscule-recurrence engine over two-variable Laurent polynomials.

Rows are computed from first principles: the Weyl orbit of a dominant weight
``lam`` is traversed together with the images of the stabilizer orbit of the
minuscule coweight ``e_1``, every orbit point is conjugated back into the
dominant chamber with its sign, and the contributions aggregate into a map
{dominant weight -> Laurent polynomial in q and s}, where s**2 = t carries
the half-integer t-powers needed in type B.

The engine supports types B and D, the two families in which e_1 pairs to
{0, +-1} with every positive root.  (In type C the pairing with the long
roots 2 e_i is 2, so e_1 is not a minuscule coweight there.)
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .genexp import PolyT
from .orders import dominance_leq
from .rootdata import build_root_datum

__all__ = [
    "LaurentQS",
    "RecurrenceRow",
    "minuscule_row",
    "omega0_count",
    "a_integers",
    "verify_aggregate",
    "chain_weight",
    "exterior_specialization",
]


class LaurentQS:
    """Sparse integer Laurent polynomial in q and s (with s*s = t)."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for key, v in coeffs.items():
                if v:
                    self.c[(int(key[0]), int(key[1]))] = int(v)

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, qe, se, coeff=1):
        return cls({(qe, se): coeff})

    @classmethod
    def from_t_poly(cls, p, q_exp=0):
        return cls({(q_exp, 2 * e): v for e, v in p.c.items()})

    def is_zero(self):
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, LaurentQS) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            elif k in out:
                del out[k]
        r = LaurentQS()
        r.c = out
        return r

    def __neg__(self):
        r = LaurentQS()
        r.c = {k: -v for k, v in self.c.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            r = LaurentQS()
            if other:
                r.c = {k: v * other for k, v in self.c.items()}
            return r
        out = {}
        for (q1, s1), v1 in self.c.items():
            for (q2, s2), v2 in other.c.items():
                k = (q1 + q2, s1 + s2)
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                elif k in out:
                    del out[k]
        r = LaurentQS()
        r.c = out
        return r

    __rmul__ = __mul__

    def scale_s(self, k):
        """Multiply by s**k."""
        r = LaurentQS()
        r.c = {(qe, se + k): v for (qe, se), v in self.c.items()}
        return r

    def q_at_zero(self):
        """Keep the q-degree-zero part, as a Laurent polynomial in s."""
        r = LaurentQS()
        r.c = {k: v for k, v in self.c.items() if k[0] == 0}
        return r

    def to_t_poly(self):
        """Convert to a PolyT in t; requires q-free content and even s-powers."""
        out = {}
        for (qe, se), v in self.c.items():
            if qe != 0:
                raise ValueError("polynomial still involves q")
            if se % 2:
                raise ValueError("odd s-power cannot be expressed in t")
            out[se // 2] = v
        return PolyT(out)

    def items_sorted(self):
        return sorted(self.c.items())

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for (qe, se), v in self.items_sorted():
            piece = str(v)
            if qe:
                piece += f"*q^{qe}"
            if se:
                piece += f"*s^{se}"
            bits.append(piece)
        return " + ".join(bits)


def exterior_specialization(lq):
    """Specialize (q, t) -> (-q, q**2); returns a PolyT in the single variable q."""
    out = {}
    for (qe, se), v in lq.c.items():
        e = qe + se
        w = out.get(e, 0) + v * (-1 if qe % 2 else 1)
        if w:
            out[e] = w
        elif e in out:
            del out[e]
    return PolyT(out)


@dataclass(frozen=True)
class RecurrenceRow:
    lam: object
    entries: dict  # dominant Weight -> LaurentQS


def chain_weight(datum, k):
    """The k-th small chain weight: (1^k, 0^*) in type B, (1^(2k), 0^*) in type D."""
    n = datum.rank
    ones = k if datum.family == "B" else 2 * k
    if not 0 <= ones <= n:
        raise ValueError(f"chain index {k} out of range for {datum.family}{n}")
    return datum.weight((2,) * ones + (0,) * (n - ones))


def minuscule_row(datum, lam, cap=200_000):
    """One reduced recurrence row for a dominant weight, from first principles.

    Enumerate the distinct images w(lam) together with the transported
    stabilizer orbit of e_1, reduce each image into the dominant chamber with
    its sign, and aggregate the inner Laurent sums.  Supported families: B, D.
    """
    if datum.family not in ("B", "D"):
        raise ValueError(
            f"e_1 is a minuscule coweight for families B and D only, not {datum.family}")
    datum.check_weight(lam)
    if not datum.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    if lam.is_zero():
        raise ValueError("the recurrence row for the zero weight is vacuous")
    if lam.coords2[0] % 2:
        raise ValueError("the q-exponent (lam, e_1) must be an integer")
    q_exp = lam.coords2[0] // 2

    e1 = (2,) + (0,) * (datum.dim - 1)
    # orbit of e_1 under the stabilizer of lam (a standard parabolic)
    stab = datum.stabilizer_simples(lam.coords2)
    orbit = {e1}
    frontier = [e1]
    while frontier:
        nxt = []
        for v in frontier:
            for i in stab:
                w = datum.apply_simple(i, v)
                if w not in orbit:
                    orbit.add(w)
                    nxt.append(w)
        frontier = nxt
    psis = tuple(sorted(orbit))

    # traverse the full orbit of lam, transporting the psi images alongside
    start = (lam.coords2, psis)
    seen = {lam.coords2: psis}
    frontier = [start]
    while frontier:
        nxt = []
        for vec, imgs in frontier:
            for i in range(1, datum.rank + 1):
                w = datum.apply_simple(i, vec)
                if w not in seen:
                    if len(seen) > cap:
                        raise RuntimeError(f"orbit of {lam} exceeds cap {cap}")
                    moved = tuple(datum.apply_simple(i, p) for p in imgs)
                    seen[w] = moved
                    nxt.append((w, moved))
        frontier = sorted(nxt)

    rho2 = datum.rho.coords2
    entries = {}
    for vec, imgs in sorted(seen.items()):
        red = datum.reduce_to_dominant(datum.weight(vec))
        if red is None:
            continue
        target, sign = red
        inner = LaurentQS()
        for psi in imgs:
            s_exp = datum.dot2(rho2, psi) // 2
            inner = inner + LaurentQS({(0, -s_exp): 1, (q_exp, s_exp): -1})
        entry = entries.get(target, LaurentQS()) + sign * inner
        if entry.is_zero():
            entries.pop(target, None)
        else:
            entries[target] = entry

    for key in entries:
        if key != lam and not dominance_leq(datum, key, lam):
            raise AssertionError(f"row entry {key} is not below {lam}")
    return RecurrenceRow(lam, entries)


@lru_cache(maxsize=None)
def _row_cached(family, rank, k):
    datum = build_root_datum(family, rank)
    return minuscule_row(datum, chain_weight(datum, k))


# -- counting the weights conjugated to zero ----------------------------------


def _domino_vectors(positions, pairs):
    """All 0/±1 vectors with `pairs` disjoint consecutive (-1, 1) blocks."""
    out = []

    def rec(start, left, acc):
        if left == 0:
            out.append(tuple(acc + [0] * (positions - len(acc))))
            return
        for pos in range(start, positions - 2 * left + 1):
            prefix = acc + [0] * (pos - len(acc)) + [-1, 1]
            rec(pos + 2, left - 1, prefix)

    rec(0, pairs, [])
    return out


def _shape_vectors(datum, k):
    """Zero-conjugated orbit shapes, straight from the classification lemmas."""
    n = datum.rank
    if datum.family == "B":
        if k % 2 == 0:
            return _domino_vectors(n, k // 2)
        return [v + (-1,) for v in _domino_vectors(n - 1, (k - 1) // 2)]
    # type D, chain weight with 2k ones; for n = 2k only the full domino
    # tiling lies in the orbit (the paired-tail shape has odd sign count)
    shapes = list(_domino_vectors(n, k))
    if n > 2 * k:
        shapes += [v + (-1, -1) for v in _domino_vectors(n - 2, k - 1)]
    return shapes


def _omega0_closed(datum, k):
    n = datum.rank
    if k == 0:
        return 1
    if datum.family == "B":
        if k % 2 == 0:
            return comb(n - k // 2, k // 2)
        return comb(n - (k - 1) // 2 - 1, (k - 1) // 2)
    if 2 * k == n:
        return 1
    num = n * comb(n - k - 1, k - 1)
    if num % k:
        raise ArithmeticError(f"closed count (n/k) binom(n-k-1, k-1) not integral at ({k}, {n})")
    return num // k


def omega0_count(datum, k):
    """|Omega_0|: orbit points of the k-th chain weight conjugated to zero.

    Counted three ways (brute-force orbit scan, classification shapes, closed
    binomial form); all three must agree.
    """
    if datum.family not in ("B", "D"):
        raise ValueError("zero-conjugation counts cover families B and D")
    lam = chain_weight(datum, k)
    brute = 0
    for vec in datum.orbit2(lam.coords2):
        red = datum.reduce_to_dominant(datum.weight(vec))
        if red is not None and red[0].is_zero():
            brute += 1
    shapes = 0
    for v in _shape_vectors(datum, k) if k > 0 else [tuple([0] * datum.rank)]:
        red = datum.reduce_to_dominant(datum.weight(tuple(2 * c for c in v)))
        if red is None or not red[0].is_zero():
            raise AssertionError(f"classified shape {v} is not conjugated to zero")
        shapes += 1
    closed = _omega0_closed(datum, k)
    if not brute == shapes == closed:
        raise AssertionError(
            f"zero-conjugation counts disagree at k={k}: brute {brute}, "
            f"shapes {shapes}, closed {closed}")
    return closed


# -- aggregation coefficients --------------------------------------------------


def _comb0(n, k):
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@lru_cache(maxsize=None)
def _a_int_b(k, n, h):
    """Type-B aggregation integers from the alternating-binomial recursion."""
    if h > k or h <= 0:
        return 0
    if h == k:
        return 1
    acc = 0
    for j in range(h + 1, k + 1):
        acc += ((-1) ** ((j - h + 1) // 2)) * _comb0(n - j + (j - h) // 2, (j - h) // 2) \
            * _a_int_b(k, n, j)
    return -acc


@lru_cache(maxsize=None)
def _a_int_d(k, n, h):
    """Type-D aggregation integers built from the zero-orbit cardinalities."""
    if h > k or h <= 0:
        return 0
    if h == k:
        return 1
    acc = 0
    for i in range(h + 1, k + 1):
        card = _omega0_closed_for(n - 2 * h, i - h)
        acc += ((-1) ** (i - h)) * card * _a_int_d(k, n, i)
    return -acc


def _omega0_closed_for(m, j):
    if j == 0:
        return 1
    if m == 2 * j:
        return 1
    num = m * comb(m - j - 1, j - 1)
    assert num % j == 0
    return num // j


def a_integers(datum, k):
    """The aggregation integer table {h: A^{k,n}_h} for h = 1..k."""
    n = datum.rank
    if datum.family == "B":
        return {h: _a_int_b(k, n, h) for h in range(1, k + 1)}
    if datum.family == "D":
        return {h: _a_int_d(k, n, h) for h in range(1, k + 1)}
    raise ValueError("aggregation integers cover families B and D")


# -- closed coefficient forms (numerators over the cleared denominator) -------


def _p_qt(n):
    """p(n; q, t) = (t - q)(1 + t^(2n-2)) / t^((2n-1)/2), as a Laurent polynomial."""
    return LaurentQS({(0, 2 * n - 1): 1, (1, -(2 * n - 1)): -1,
                      (0, -(2 * n - 3)): 1, (1, 2 * n - 3): -1})


def _r_qt(n):
    """r(n; q, t) = (t - q)(t^(2n-3) + 1) / t^(n-1), as a Laurent polynomial."""
    return LaurentQS({(0, 2 * (n - 1)): 1, (1, -2 * (n - 1)): -1,
                      (0, -2 * (n - 2)): 1, (1, 2 * (n - 2)): -1})


def _clear_b(n, entry):
    """Multiply by t^((2n-1)/2) (t - 1)."""
    return entry.scale_s(2 * n - 1) * LaurentQS({(0, 2): 1, (0, 0): -1})


def _clear_d(n, entry):
    """Multiply by t^(n-1) (t - 1)."""
    return entry.scale_s(2 * (n - 1)) * LaurentQS({(0, 2): 1, (0, 0): -1})


def _diag_cleared_b(n, k):
    # (1 - q t^(2n-k)) (t^k - 1)
    return LaurentQS({(0, 0): 1, (1, 2 * (2 * n - k)): -1}) \
        * LaurentQS({(0, 2 * k): 1, (0, 0): -1})


def _gamma1_cleared_b(n):
    # -(t - q)(t - 1) t^(n-1)
    tq = LaurentQS({(0, 2): 1, (1, 0): -1})
    t1 = LaurentQS({(0, 2): 1, (0, 0): -1})
    return -(tq * t1).scale_s(2 * (n - 1))


def _gamma2_cleared_b(n, m):
    # -(t - q)(t^(2m-1) - 1) t^(n-m)
    tq = LaurentQS({(0, 2): 1, (1, 0): -1})
    body = LaurentQS({(0, 2 * (2 * m - 1)): 1, (0, 0): -1})
    return -(tq * body).scale_s(2 * (n - m))


def _diag_cleared_d(n, k):
    # (t^(2k) - 1)(1 - q t^(2(n-k)-1)); for n = 2k this is the published
    # coefficient without its factor 2, which the q = 0 specialization and the
    # generalized-exponent oracle both force
    return LaurentQS({(0, 4 * k): 1, (0, 0): -1}) \
        * LaurentQS({(0, 0): 1, (1, 2 * (2 * (n - k) - 1)): -1})


def _b_cleared_d(n, i, m):
    tq = LaurentQS({(0, 2): 1, (1, 0): -1})
    if m == 2 * i:
        # (t - q)(t^(2i) - 1) t^(n-1-i)
        body = LaurentQS({(0, 4 * i): 1, (0, 0): -1})
        return (tq * body).scale_s(2 * (n - 1 - i))
    body = LaurentQS({(0, 2 * m): 1, (0, 0): -1}) \
        * LaurentQS({(0, 2 * (m - 2 * i)): 1, (0, 0): 1})
    return (tq * body).scale_s(2 * (n - 1 - m + i))


# -- the verification sweep ----------------------------------------------------


def _aggregate(datum, k):
    n = datum.rank
    table = a_integers(datum, k)
    acc = {}
    for i in range(1, k + 1):
        coeff = table[i]
        if coeff == 0:
            continue
        row = _row_cached(datum.family, n, i)
        for key, val in row.entries.items():
            cur = acc.get(key, LaurentQS()) + coeff * val
            if cur.is_zero():
                acc.pop(key, None)
            else:
                acc[key] = cur
    return acc


def _verify_b(datum, k):
    n = datum.rank
    checks = []

    def check(name, ok, detail=""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    for j in range(1, k + 1):
        try:
            omega0_count(datum, j)
            check(f"omega0_closed_form_k{j}", True)
        except AssertionError as exc:
            check(f"omega0_closed_form_k{j}", False, str(exc))

    row_k = _row_cached("B", n, k)
    diag = _clear_b(n, row_k.entries[chain_weight(datum, k)])
    check("rem_lambdak_diag", diag == _diag_cleared_b(n, k))

    # aggregated identity of the simplified theorem
    agg = _aggregate(datum, k)
    expected = {chain_weight(datum, k): _diag_cleared_b(n, k)}
    if k >= 1:
        expected[chain_weight(datum, k - 1)] = _gamma1_cleared_b(n)
    for i in range(1, k // 2 + 1):
        expected[chain_weight(datum, k - 2 * i)] = _gamma2_cleared_b(n, n - k + i + 1)
    for i in range(2, (k + 1) // 2 + 1):
        expected[chain_weight(datum, k - 2 * i + 1)] = _gamma2_cleared_b(n, i)
    for key, closed in sorted(expected.items(), key=lambda kv: kv[0].coords2):
        got = _clear_b(n, agg.get(key, LaurentQS()))
        idx = sum(1 for c in key.coords2 if c)
        check(f"aggregate_coeff_C{idx}", got == closed)
    residual = set(agg) - set(expected)
    check("aggregate_no_residual_terms", not residual,
          f"unexpected keys {sorted(w.coords2 for w in residual)}" if residual else "")

    # integer-table identities
    okay = all(_a_int_b(k, n, h + 1) == _a_int_b(k - 1, n - 1, h)
               for h in range(1, k + 1))
    check("lem_relA_shift", okay)
    okay = all(_a_int_b(kk, kk, h) == _a_int_b(kk - 1, kk - 1, h) + _a_int_b(kk - 2, kk - 1, h)
               for kk in range(2, k + 1) for h in range(1, kk))
    check("lem_relA_diagonal", okay)
    okay = all(_a_int_b(kk, n, h) == _a_int_b(kk, n - 1, h) + _a_int_b(kk - 2, n - 1, h)
               for kk in range(2, min(k, n - 1) + 1) for h in range(1, kk))
    check("lem_relA_rank_drop", okay)

    # raw-row expansion relations
    def lam_coeff(kk, nn, hh):
        if kk == 0:
            return LaurentQS() if hh == 0 else None
        d = build_root_datum("B", nn)
        row = _row_cached("B", nn, kk)
        return row.entries.get(chain_weight(d, hh), LaurentQS())

    def lam_diag_closed(nn, hh):
        # (1 - q t^(2nn-hh)) (t^hh - 1) / (t^((2nn-1)/2) (t - 1)): expand the
        # geometric quotient directly as sum_{j=1..hh} (1 - q t^(2nn-2j+1)) / t^((2nn-2j+1)/2)
        acc = LaurentQS()
        for j in range(1, hh + 1):
            e = 2 * nn - 2 * j + 1
            acc = acc + LaurentQS({(0, -e): 1, (1, e): -1})
        return acc

    for h in range(1, k):
        s2, rem = divmod(k - h, 2)
        lhs = lam_coeff(k, n, h)
        sign = (-1) ** s2 if rem == 0 else (-1) ** (s2 + 1)
        rhs = sign * _comb0(n - k + s2, s2) * lam_diag_closed(n, h)
        rhs = rhs + lam_coeff(k - h, n - h, 0)
        check(f"lem_expansion_h{h}", lhs == rhs)
    if k <= n - 1:
        if k % 2 == 0:
            s = k // 2
            rhs = ((-1) ** s) * _comb0(n - s - 1, s - 1) * _p_qt(n)
            rhs = rhs - (lam_coeff(k - 2, n - 2, 0) if k - 2 > 0 else LaurentQS())
            rhs = rhs + lam_coeff(k, n - 1, 0)
        else:
            s = (k - 1) // 2
            rhs = ((-1) ** (s + 1)) * _comb0(n - s - 2, s - 1) * _p_qt(n)
            rhs = rhs - (lam_coeff(k - 2, n - 2, 0) if k - 2 > 0 else LaurentQS())
            rhs = rhs + lam_coeff(k, n - 1, 0)
        check("lem_expansion_h0", lam_coeff(k, n, 0) == rhs)

    return checks


def _verify_d(datum, k):
    n = datum.rank
    checks = []

    def check(name, ok, detail=""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    for j in range(1, k + 1):
        try:
            omega0_count(datum, j)
            check(f"cardG0_closed_form_k{j}", True)
        except AssertionError as exc:
            check(f"cardG0_closed_form_k{j}", False, str(exc))

    row_k = _row_cached("D", n, k)
    diag = _clear_d(n, row_k.entries[chain_weight(datum, k)])
    check("lambda_diag", diag == _diag_cleared_d(n, k))

    agg = _aggregate(datum, k)
    expected = {chain_weight(datum, k): _diag_cleared_d(n, k)}
    for i in range(1, k + 1):
        expected[chain_weight(datum, k - i)] = -_b_cleared_d(n, i, n - 2 * (k - i))
    for key, closed in sorted(expected.items(), key=lambda kv: kv[0].coords2):
        got = _clear_d(n, agg.get(key, LaurentQS()))
        idx = sum(1 for c in key.coords2 if c) // 2
        check(f"aggregate_coeff_C{idx}", got == closed)
    residual = set(agg) - set(expected)
    check("aggregate_no_residual_terms", not residual,
          f"unexpected keys {sorted(w.coords2 for w in residual)}" if residual else "")
    return checks


def verify_aggregate(datum, k):
    """Check every covered coefficient identity for the k-th chain weight.

    Returns a report dict with one pass/fail entry per identity; the engine
    rows are computed from first principles and compared against the closed
    forms after clearing the common denominator.
    """
    n = datum.rank
    if datum.family == "B":
        if not 1 <= k <= n:
            raise ValueError(f"k must lie in 1..{n}")
        checks = _verify_b(datum, k)
    elif datum.family == "D":
        if not 1 <= k <= n // 2:
            raise ValueError(f"k must lie in 1..{n // 2}")
        checks = _verify_d(datum, k)
    else:
        raise ValueError("verification covers families B and D")
    return {
        "family": datum.family,
        "rank": n,
        "k": k,
        "checks": checks,
        "all_pass": all(c["pass"] for c in checks),
    }
