"""Explicit root data for the classical families A, B, C, D and for G2.

Every family is realized in an explicit orthonormal coordinate system:

* ``B_n``, ``C_n``, ``D_n`` live in ``n`` coordinates (``D`` needs rank >= 3),
* ``A_n`` lives in ``n+1`` coordinates with gl-style fundamental weights,
* ``G2`` lives in 3 coordinates summing to zero (auxiliary, used by the
  brute-force oracles only).

Weights are stored with *doubled* coordinates so that spin weights and the
Weyl vector of ``B_n`` stay integral; every public API speaks doubled units
internally and halves only on display.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "ConfigurationError",
    "DatumMismatchError",
    "Weight",
    "RootDatum",
    "build_root_datum",
    "weight_from_fundamental",
    "reduce_to_dominant",
]

FAMILIES = ("A", "B", "C", "D", "G2")


class ConfigurationError(ValueError):
    """Unsupported (family, rank) combination."""


class DatumMismatchError(ValueError):
    """Weights from different root data were mixed in one operation."""


@dataclass(frozen=True)
class Weight:
    """A weight in doubled epsilon-coordinates, tagged by (family, rank)."""

    family: str
    rank: int
    coords2: tuple

    def coords(self):
        """Coordinates as exact fractions (halving the stored integers)."""
        return tuple(Fraction(c, 2) for c in self.coords2)

    @property
    def dim(self):
        return len(self.coords2)

    def is_zero(self):
        return all(c == 0 for c in self.coords2)

    def _check(self, other):
        if (self.family, self.rank) != (other.family, other.rank):
            raise DatumMismatchError(f"{self} vs {other}")

    def __add__(self, other):
        self._check(other)
        return Weight(self.family, self.rank,
                      tuple(a + b for a, b in zip(self.coords2, other.coords2)))

    def __sub__(self, other):
        self._check(other)
        return Weight(self.family, self.rank,
                      tuple(a - b for a, b in zip(self.coords2, other.coords2)))

    def __neg__(self):
        return Weight(self.family, self.rank, tuple(-a for a in self.coords2))

    def __rmul__(self, k):
        return Weight(self.family, self.rank, tuple(k * a for a in self.coords2))

    def pretty(self):
        parts = []
        for c in self.coords2:
            parts.append(str(c // 2) if c % 2 == 0 else f"{c}/2")
        return "(" + ",".join(parts) + ")"

    def __repr__(self):
        return f"W[{self.family}{self.rank}]{self.pretty()}"


@dataclass(frozen=True)
class RootDatum:
    """Root-system data of one simple Lie algebra in its epsilon realization."""

    family: str
    rank: int
    dim: int
    positive_roots: tuple          # of Weight
    simple_roots: tuple            # of Weight
    fundamental_weights: tuple     # of Weight
    rho: Weight
    rho_short: Weight              # equals rho when simply laced
    theta: Weight
    theta_short: Weight            # None when simply laced
    exponents: tuple
    coxeter_number: int
    num_short_simple: int

    # -- basic constructors -------------------------------------------------

    def weight(self, coords2):
        coords2 = tuple(int(c) for c in coords2)
        if len(coords2) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords2)}")
        return Weight(self.family, self.rank, coords2)

    def weight_from_coords(self, coords):
        """Build a weight from plain (possibly half-integer) coordinates."""
        doubled = []
        for c in coords:
            d = Fraction(c) * 2
            if d.denominator != 1:
                raise ValueError(f"coordinate {c} is not a half-integer")
            doubled.append(int(d))
        return self.weight(doubled)

    @property
    def zero(self):
        return self.weight((0,) * self.dim)

    def check_weight(self, w):
        if (w.family, w.rank) != (self.family, self.rank):
            raise DatumMismatchError(f"{w} does not belong to {self.family}{self.rank}")

    # -- Weyl group action --------------------------------------------------

    def pairing2(self, i, x2):
        """Twice the pairing <x, alpha_i_vee> evaluated on doubled coords.

        Only signs and zero-tests of this quantity are meaningful to callers
        that do not divide by 2; exact values are even for lattice weights.
        """
        f, n = self.family, self.rank
        if f == "A":
            return x2[i - 1] - x2[i]
        if f in ("B", "C", "D"):
            if i < n:
                return x2[i - 1] - x2[i]
            if f == "B":
                return 2 * x2[n - 1]
            if f == "C":
                return x2[n - 1]
            return x2[n - 2] + x2[n - 1]
        # G2: alpha_1 = e1 - e2 (short), alpha_2 = -2e1 + e2 + e3 (long)
        if i == 1:
            return x2[0] - x2[1]
        return -x2[0]

    def apply_simple(self, i, x2):
        f, n = self.family, self.rank
        y = list(x2)
        if f == "G2":
            if i == 1:
                y[0], y[1] = y[1], y[0]
            else:
                # s_alpha2(x) = x + x1 * alpha2 on sum-zero vectors
                a = y[0]
                y[0] -= 2 * a
                y[1] += a
                y[2] += a
            return tuple(y)
        if f == "A" or i < n:
            y[i - 1], y[i] = y[i], y[i - 1]
        elif f == "B" or f == "C":
            y[n - 1] = -y[n - 1]
        else:  # D
            y[n - 2], y[n - 1] = -y[n - 1], -y[n - 2]
        return tuple(y)

    def is_dominant2(self, x2):
        return all(self.pairing2(i, x2) >= 0 for i in range(1, self.rank + 1))

    def is_dominant(self, w):
        self.check_weight(w)
        return self.is_dominant2(w.coords2)

    def chamber_rep2(self, x2):
        """Dominant Weyl-chamber representative of x2 (no rho shift, no sign)."""
        v = tuple(x2)
        while True:
            for i in range(1, self.rank + 1):
                if self.pairing2(i, v) < 0:
                    v = self.apply_simple(i, v)
                    break
            else:
                return v

    def reduce_to_dominant(self, mu):
        """Chamber reduction with sign after the rho shift.

        Returns ``None`` when ``mu + rho`` is not regular, otherwise the unique
        pair ``(lam, sign)`` with ``sigma(mu + rho) = lam + rho`` for some Weyl
        element ``sigma`` and ``sign = (-1)**length(sigma)``.
        """
        self.check_weight(mu)
        v = tuple(a + b for a, b in zip(mu.coords2, self.rho.coords2))
        sign = 1
        while True:
            for i in range(1, self.rank + 1):
                if self.pairing2(i, v) < 0:
                    v = self.apply_simple(i, v)
                    sign = -sign
                    break
            else:
                break
        if any(self.pairing2(i, v) == 0 for i in range(1, self.rank + 1)):
            return None
        lam = tuple(a - b for a, b in zip(v, self.rho.coords2))
        return self.weight(lam), sign

    def orbit2(self, x2):
        """Full Weyl orbit of a doubled-coordinate vector, sorted for determinism."""
        seen = {tuple(x2)}
        frontier = [tuple(x2)]
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(1, self.rank + 1):
                    w = self.apply_simple(i, v)
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return sorted(seen)

    def stabilizer_simples(self, x2):
        """Simple reflections generating the stabilizer of a dominant vector."""
        return [i for i in range(1, self.rank + 1) if self.pairing2(i, x2) == 0]

    # -- lattice geometry ----------------------------------------------------

    def dot2(self, x2, y2):
        return sum(a * b for a, b in zip(x2, y2))

    def root_coefficients2(self, x2):
        """Coefficients of x in the simple-root basis, or None off the lattice.

        A vector lies in the root lattice exactly when all returned
        coefficients are integers; membership in the positive cone is the
        additional condition that they are all >= 0.
        """
        f, n = self.family, self.rank
        if any(c % 2 for c in x2):
            return None
        x = [c // 2 for c in x2]
        if f == "A":
            if sum(x) != 0:
                return None
            out, run = [], 0
            for k in range(n):
                run += x[k]
                out.append(run)
            return tuple(out)
        if f == "G2":
            return (x[0] + 2 * x[2], x[2])
        prefix = []
        run = 0
        for c in x:
            run += c
            prefix.append(run)
        if f == "B":
            return tuple(prefix)
        if f == "C":
            if prefix[-1] % 2:
                return None
            return tuple(prefix[:-1]) + (prefix[-1] // 2,)
        # D
        a = prefix[-2] - x[-1]
        b = prefix[-2] + x[-1]
        if a % 2 or b % 2:
            return None
        return tuple(prefix[:-2]) + (a // 2, b // 2)

    def in_root_lattice(self, w):
        self.check_weight(w)
        if self.family == "A":
            if any(c % 2 for c in w.coords2):
                return False
            return sum(c // 2 for c in w.coords2) % (self.rank + 1) == 0
        return self.root_coefficients2(w.coords2) is not None

    def fundamental_coefficients(self, w):
        """Expansion of a weight over the fundamental weights (integer tuple)."""
        self.check_weight(w)
        out = []
        for i in range(1, self.rank + 1):
            p2 = self.pairing2(i, w.coords2)
            if p2 % 2:
                raise ValueError(f"{w} is not in the weight lattice")
            out.append(p2 // 2)
        return tuple(out)

    def height2(self, x2):
        """Sum of simple-root coefficients (the height), assuming x2 is in the lattice."""
        coeffs = self.root_coefficients2(x2)
        if coeffs is None:
            raise ValueError("vector is not in the root lattice")
        return sum(coeffs)

    def dominant_roots(self):
        if self.theta_short is None:
            return (self.theta,)
        return (self.theta, self.theta_short)

    def fund_string(self, w):
        """Human-readable fundamental-coefficient string, e.g. '2w1+w3'."""
        coeffs = self.fundamental_coefficients(w)
        parts = []
        for i, c in enumerate(coeffs, start=1):
            if c == 0:
                continue
            parts.append(f"w{i}" if c == 1 else f"{c}*w{i}")
        return "+".join(parts) if parts else "0"


def _e(dim, i, val=2):
    v = [0] * dim
    v[i - 1] = val
    return tuple(v)


@lru_cache(maxsize=None)
def build_root_datum(family, rank):
    """Construct the root datum of a classical family (or G2) at a given rank.

    Supported: A (rank >= 1), B and C (rank >= 1, degenerate below 2), D
    (rank >= 3), G2 (rank exactly 2).  Anything else raises
    :class:`ConfigurationError`.
    """
    n = rank
    if family == "A":
        if n < 1:
            raise ConfigurationError("A needs rank >= 1")
        dim = n + 1
        pos = [pos_ij(i, j, dim)
               for i in range(1, dim + 1) for j in range(i + 1, dim + 1)]
        simple = [pos_ij(i, i + 1, dim) for i in range(1, n + 1)]
        fund = [tuple(2 if k <= i else 0 for k in range(1, dim + 1)) for i in range(1, n + 1)]
        rho2 = tuple(n - 2 * (i - 1) for i in range(1, dim + 1))
        theta2 = pos_ij(1, dim, dim)
        exps = tuple(range(1, n + 1))
        datum = RootDatum(
            family, n, dim,
            tuple(Weight(family, n, p) for p in pos),
            tuple(Weight(family, n, s) for s in simple),
            tuple(Weight(family, n, f) for f in fund),
            Weight(family, n, rho2), Weight(family, n, rho2),
            Weight(family, n, theta2), None, exps, n + 1, n)
        return datum

    if family in ("B", "C"):
        if n < 1:
            raise ConfigurationError(f"{family} needs rank >= 1")
        dim = n
        pos, short = [], []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos.append(pos_ij(i, j, dim))
                pos.append(pos_ij_plus(i, j, dim))
        if family == "B":
            for i in range(1, n + 1):
                p = _e(dim, i, 2)
                pos.append(p)
                short.append(p)
            simple = [pos_ij(i, i + 1, dim) for i in range(1, n)] + [_e(dim, n, 2)]
            fund = [tuple(2 if k <= i else 0 for k in range(1, n + 1)) for i in range(1, n)]
            fund.append(tuple(1 for _ in range(n)))
            rho2 = tuple(2 * (n - i) + 1 for i in range(1, n + 1))
            rho_s2 = tuple(1 for _ in range(n))
            theta2 = pos_ij_plus(1, 2, dim) if n >= 2 else _e(dim, 1, 2)
            theta_s2 = _e(dim, 1, 2)
            nss = 1
        else:
            short = [pos_ij(i, j, dim) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            short += [pos_ij_plus(i, j, dim) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            for i in range(1, n + 1):
                pos.append(_e(dim, i, 4))
            simple = [pos_ij(i, i + 1, dim) for i in range(1, n)] + [_e(dim, n, 4)]
            fund = [tuple(2 if k <= i else 0 for k in range(1, n + 1)) for i in range(1, n + 1)]
            rho2 = tuple(2 * (n - i + 1) for i in range(1, n + 1))
            rho_s2 = tuple(2 * (n - i) for i in range(1, n + 1))
            theta2 = _e(dim, 1, 4)
            theta_s2 = pos_ij_plus(1, 2, dim) if n >= 2 else None
            nss = n - 1
        exps = tuple(2 * i - 1 for i in range(1, n + 1))
        theta_s = Weight(family, n, theta_s2) if theta_s2 is not None else None
        return RootDatum(
            family, n, dim,
            tuple(Weight(family, n, p) for p in pos),
            tuple(Weight(family, n, s) for s in simple),
            tuple(Weight(family, n, f) for f in fund),
            Weight(family, n, rho2), Weight(family, n, rho_s2),
            Weight(family, n, theta2), theta_s, exps, 2 * n, nss)

    if family == "D":
        if n < 3:
            raise ConfigurationError("D needs rank >= 3")
        dim = n
        pos = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                pos.append(pos_ij(i, j, dim))
                pos.append(pos_ij_plus(i, j, dim))
        simple = [pos_ij(i, i + 1, dim) for i in range(1, n)] + [pos_ij_plus(n - 1, n, dim)]
        fund = [tuple(2 if k <= i else 0 for k in range(1, n + 1)) for i in range(1, n - 1)]
        fund.append(tuple([1] * (n - 1) + [-1]))
        fund.append(tuple(1 for _ in range(n)))
        rho2 = tuple(2 * (n - i) for i in range(1, n + 1))
        theta2 = pos_ij_plus(1, 2, dim)
        exps = tuple(sorted([2 * i - 1 for i in range(1, n)] + [n - 1]))
        return RootDatum(
            family, n, dim,
            tuple(Weight(family, n, p) for p in pos),
            tuple(Weight(family, n, s) for s in simple),
            tuple(Weight(family, n, f) for f in fund),
            Weight(family, n, rho2), Weight(family, n, rho2),
            Weight(family, n, theta2), None, exps, 2 * n - 2, n)

    if family == "G2":
        if n != 2:
            raise ConfigurationError("G2 has rank 2")
        dim = 3
        a1 = (2, -2, 0)
        a2 = (-4, 2, 2)
        pos = [a1, a2,
               (-2, 0, 2),    # a1 + a2
               (0, -2, 2),    # 2a1 + a2 (= theta_s = omega_1)
               (2, -4, 2),    # 3a1 + a2
               (-2, -2, 4)]   # 3a1 + 2a2 (= theta = omega_2)
        fund = [(0, -2, 2), (-2, -2, 4)]
        rho2 = (-2, -4, 6)
        return RootDatum(
            family, 2, dim,
            tuple(Weight(family, 2, p) for p in pos),
            tuple(Weight(family, 2, p) for p in (a1, a2)),
            tuple(Weight(family, 2, f) for f in fund),
            Weight(family, 2, rho2), Weight(family, 2, (0, -2, 2)),
            Weight(family, 2, (-2, -2, 4)), Weight(family, 2, (0, -2, 2)),
            (1, 5), 6, 1)

    raise ConfigurationError(f"unknown family {family!r}")


def pos_ij(i, j, dim):
    """Doubled coordinates of e_i - e_j."""
    v = [0] * dim
    v[i - 1] = 2
    v[j - 1] = -2
    return tuple(v)


def pos_ij_plus(i, j, dim):
    """Doubled coordinates of e_i + e_j."""
    v = [0] * dim
    v[i - 1] = 2
    v[j - 1] = 2
    return tuple(v)


def weight_from_fundamental(datum, coeffs):
    """Sum of ``coeffs[i] * omega_{i+1}`` as a Weight (negatives allowed)."""
    coeffs = list(coeffs)
    if len(coeffs) != datum.rank:
        raise ValueError(f"expected {datum.rank} coefficients, got {len(coeffs)}")
    acc = [0] * datum.dim
    for c, omega in zip(coeffs, datum.fundamental_weights):
        for k, x in enumerate(omega.coords2):
            acc[k] += c * x
    return datum.weight(acc)


def reduce_to_dominant(datum, mu):
    """Module-level alias for :meth:`RootDatum.reduce_to_dominant`."""
    return datum.reduce_to_dominant(mu)
