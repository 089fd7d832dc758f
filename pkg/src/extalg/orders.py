"""Orderings on dominant weights: dominance, coordinatewise, smallness.

The dominance test is implemented through simple-root coefficients, which for
the epsilon realizations reduces to the familiar partial-sum conditions (plus
an even-total condition in types C and D, and the two spin conditions in type
D).  A comparison between weights in different lattice cosets is always False.
"""

from dataclasses import dataclass

from .rootdata import DatumMismatchError, weight_from_fundamental

__all__ = [
    "OrderReport",
    "dominance_leq",
    "coordinatewise_leq",
    "order_report",
    "enumerate_dominant_below",
    "is_small",
    "two_rho_minus_delta",
]


@dataclass(frozen=True)
class OrderReport:
    """Outcome of comparing mu against lambda in both orders."""

    mu: object
    lam: object
    dominance_leq: bool
    coordinatewise_leq: bool
    partial_sums2: tuple   # doubled partial sums of lambda - mu
    parity_ok: bool        # lattice condition (even total in C/D, integrality)


def dominance_leq(datum, mu, lam):
    """True iff lam - mu is a nonnegative integer sum of positive roots."""
    datum.check_weight(mu)
    datum.check_weight(lam)
    diff2 = tuple(a - b for a, b in zip(lam.coords2, mu.coords2))
    coeffs = datum.root_coefficients2(diff2)
    return coeffs is not None and all(c >= 0 for c in coeffs)


def coordinatewise_leq(mu, lam):
    """The coordinatewise order: lam_i - mu_i >= 0 and |lam_i| >= |mu_i| for all i."""
    if len(mu.coords2) != len(lam.coords2):
        raise DatumMismatchError("coordinate length mismatch")
    return all(l - m >= 0 and abs(l) >= abs(m)
               for m, l in zip(mu.coords2, lam.coords2))


def order_report(datum, mu, lam):
    diff2 = tuple(a - b for a, b in zip(lam.coords2, mu.coords2))
    run, sums = 0, []
    for c in diff2:
        run += c
        sums.append(run)
    return OrderReport(
        mu, lam,
        dominance_leq(datum, mu, lam),
        coordinatewise_leq(mu, lam),
        tuple(sums),
        datum.root_coefficients2(diff2) is not None,
    )


def is_small(datum, lam):
    """Small weights: in the root lattice with 2*alpha not below lam for dominant roots alpha."""
    if not datum.in_root_lattice(lam):
        return False
    for alpha in datum.dominant_roots():
        if dominance_leq(datum, 2 * alpha, lam):
            return False
    return True


def _parity_floor(hi, parity):
    """Largest value <= hi with the given doubled-coordinate parity."""
    return hi if (hi - parity) % 2 == 0 else hi - 1


def _enumerate_classical(datum, bound):
    """All dominant weights <= bound (dominance) for families A, B, C, D."""
    f, n = datum.family, datum.rank
    b2 = bound.coords2
    out = []
    coords = [0] * datum.dim

    if f == "A":
        total = sum(b2)

        def rec_a(k, prev2, used):
            if k == datum.dim:
                if used == total:
                    out.append(datum.weight(coords))
                return
            remaining = datum.dim - k - 1
            hi = _parity_floor(min(prev2, sum(b2[:k + 1]) - used), b2[k] % 2)
            # the tail is bounded above by c, so c*(remaining+1) >= total-used
            need = total - used
            lo = -(-need // (remaining + 1))
            for c in range(hi, lo - 1, -2):
                coords[k] = c
                rec_a(k + 1, c, used + c)
            coords[k] = 0

        rec_a(0, 2 * sum(abs(x) for x in b2) + 2, 0)
        return out

    def rec(k, prev2, slack2):
        # slack2 = doubled partial sum of (bound - mu) over coordinates < k
        if f == "D" and k == n - 2:
            # choose the last two coordinates together; the cone conditions
            # there are (p_{n-1} - x_n)/2 >= 0 and (p_{n-1} + x_n)/2 >= 0,
            # both integral, rather than plain prefix positivity
            hi = _parity_floor(min(prev2, b2[k] + slack2), b2[k] % 2)
            for c in range(hi, -1, -2):
                coords[k] = c
                p2 = slack2 + (b2[k] - c)
                dhi = _parity_floor(c, b2[n - 1] % 2)
                for d in range(dhi, -c - 1, -2):
                    xn2 = b2[n - 1] - d
                    a, b = p2 - xn2, p2 + xn2
                    if a >= 0 and b >= 0 and a % 4 == 0 and b % 4 == 0:
                        coords[n - 1] = d
                        out.append(datum.weight(coords))
                coords[n - 1] = 0
            coords[k] = 0
            return
        if k == n:
            if f == "B" or slack2 % 4 == 0:
                out.append(datum.weight(coords))
            return
        hi = _parity_floor(min(prev2, b2[k] + slack2), b2[k] % 2)
        for c in range(hi, -1, -2):
            coords[k] = c
            rec(k + 1, c, slack2 + (b2[k] - c))
        coords[k] = 0

    rec(0, 2 * sum(abs(x) for x in b2) + 2, 0)
    return out


def _enumerate_g2(datum, bound):
    # the third coordinate of a*w1 + b*w2 is a + 2b, and the second simple-root
    # coefficient of (bound - mu) is exactly its third-coordinate difference
    cap = max(bound.coords2[2] // 2, 0)
    out = []
    for a in range(cap + 1):
        for b in range(cap // 2 + 1):
            mu = weight_from_fundamental(datum, (a, b))
            diff = tuple(x - y for x, y in zip(bound.coords2, mu.coords2))
            coeffs = datum.root_coefficients2(diff)
            if coeffs is not None and all(c >= 0 for c in coeffs):
                out.append(mu)
    return out


def enumerate_dominant_below(datum, bound, filt="dominance"):
    """Exhaustive list of dominant weights below a dominant bound.

    ``filt`` selects the order: "dominance", "dominance_and_coordinatewise",
    or "small" (dominance plus smallness).  The result is duplicate-free and
    sorted lexicographically by doubled coordinates.
    """
    datum.check_weight(bound)
    if not datum.is_dominant(bound):
        raise ValueError(f"bound {bound} is not dominant")
    if filt not in ("dominance", "dominance_and_coordinatewise", "small"):
        raise ValueError(f"unknown filter {filt!r}")
    if datum.family == "G2":
        cands = _enumerate_g2(datum, bound)
    else:
        cands = _enumerate_classical(datum, bound)
    if filt == "dominance_and_coordinatewise":
        cands = [m for m in cands if coordinatewise_leq(m, bound)]
    elif filt == "small":
        cands = [m for m in cands if is_small(datum, m)]
    return sorted(set(cands), key=lambda w: w.coords2)


def _dynkin_edges(datum):
    n = datum.rank
    if datum.family == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    return [(i, i + 1) for i in range(1, n)]


def two_rho_minus_delta(datum, subset):
    """The weight 2*rho - delta_I and the component count of the subdiagram on I."""
    subset = sorted(set(subset))
    for i in subset:
        if not 1 <= i <= datum.rank:
            raise ValueError(f"simple-root index {i} out of range")
    acc = list((2 * datum.rho).coords2)
    for i in subset:
        for k, c in enumerate(datum.simple_roots[i - 1].coords2):
            acc[k] -= c
    in_set = set(subset)
    edges = [(a, b) for a, b in _dynkin_edges(datum) if a in in_set and b in in_set]
    parent = {i: i for i in subset}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps = len({find(i) for i in subset})
    return datum.weight(acc), comps
