"""Graded decomposition of exterior algebras at tiny rank, plus reference formulas.

The graded character of Lambda(M) for a module M with weight system
``{mu: mult}`` is the product over weight lines of ``(1 + t e^mu)**mult``.
Decomposing it by repeated highest-weight peeling against Freudenthal
characters gives every graded multiplicity polynomial ``P(V_nu, Lambda M, t)``
exactly; the closed reference formulas these are checked against live in
:func:`reference_polynomials`.
"""

from dataclasses import dataclass

from .genexp import PolyT
from .weyl_oracle import ResourceCapError, freudenthal

__all__ = [
    "GradedCharacter",
    "graded_exterior_character",
    "graded_decompose",
    "reference_polynomials",
    "DEFAULT_DIM_CAP",
]

DEFAULT_DIM_CAP = 24


@dataclass(frozen=True)
class GradedCharacter:
    """Weight -> PolyT table; the t^k coefficient counts that weight in degree k."""

    family: str
    rank: int
    total_dim: int
    table: dict


def graded_exterior_character(datum, module_mult, cap=DEFAULT_DIM_CAP):
    """Exact graded character of the exterior algebra over a weight system.

    ``module_mult`` maps Weight -> multiplicity (e.g. ``freudenthal(...).mult``).
    """
    d = sum(module_mult.values())
    if d > cap:
        raise ResourceCapError(f"module dimension {d} exceeds cap {cap}")
    table = {datum.zero.coords2: PolyT.one()}
    lines = sorted(module_mult.items(), key=lambda kv: kv[0].coords2)
    for w, mult in lines:
        for _ in range(mult):
            new = {}
            for supp, poly in table.items():
                # times 1
                acc = new.get(supp)
                new[supp] = poly if acc is None else acc + poly
                # times t * e^w
                shifted = tuple(a + b for a, b in zip(supp, w.coords2))
                bumped = poly.shift(1)
                acc = new.get(shifted)
                new[shifted] = bumped if acc is None else acc + bumped
            table = {k: v for k, v in new.items() if not v.is_zero()}
    return GradedCharacter(datum.family, datum.rank, d,
                           {datum.weight(k): v for k, v in table.items()})


def _dominance_key(datum, coords2):
    return (datum.dot2(coords2, datum.rho.coords2), coords2)


def graded_decompose(datum, gc):
    """Peel a graded character into irreducible multiplicity polynomials.

    Raises ArithmeticError if peeling ever produces a negative coefficient,
    which means the input was not a genuine character.
    """
    work = {w.coords2: p for w, p in gc.table.items() if not p.is_zero()}
    out = {}
    while work:
        dominant = [v for v in work if datum.is_dominant2(v)]
        if not dominant:
            raise ArithmeticError("nonzero character with no dominant support")
        top = max(dominant, key=lambda v: _dominance_key(datum, v))
        poly = work[top]
        if any(c < 0 for c in poly.c.values()):
            raise ArithmeticError(f"negative multiplicity polynomial at {top}")
        system = freudenthal(datum, datum.weight(top))
        for w, m in system.mult.items():
            cur = work.get(w.coords2, PolyT.zero()) - poly * m
            if cur.is_zero():
                work.pop(w.coords2, None)
            else:
                work[w.coords2] = cur
        out[datum.weight(top)] = poly
    return out


def exterior_decomposition(datum, highest, cap=DEFAULT_DIM_CAP):
    """Convenience: decompose Lambda(V_highest) in one call."""
    module = freudenthal(datum, highest)
    gc = graded_exterior_character(datum, module.mult, cap=cap)
    return graded_decompose(datum, gc)


def reference_polynomials(datum, which, subset=None):
    """Closed reference polynomials for the exterior-algebra checks.

    ``which`` is one of:

    * ``"hks_invariants"``: prod_i (1 + t^(2 e_i + 1)), the invariants of
      Lambda g,
    * ``"bazlov_adjoint"``: the closed graded-multiplicity formula for the
      adjoint representation in Lambda g (a Laurent polynomial in one
      variable),
    * ``"reeder_deltaI"``: the graded multiplicity of V_{2 rho - delta_I}
      in Lambda g; pass the simple-root index subset via ``subset``.
    """
    exps = datum.exponents
    n = datum.rank
    if which == "hks_invariants":
        out = PolyT.one()
        for e in exps:
            out = out * PolyT({0: 1, 2 * e + 1: 1})
        return out
    if which == "bazlov_adjoint":
        out = PolyT({0: 1, -1: 1})
        for e in exps[:-1]:
            out = out * PolyT({2 * e + 1: 1, 0: 1})
        tail = PolyT.zero()
        for e in exps:
            tail = tail + PolyT.t(2 * e)
        return out * tail
    if which == "reeder_deltaI":
        if subset is None:
            raise ValueError("reeder_deltaI needs the subset of simple-root indices")
        from .orders import two_rho_minus_delta
        _, c = two_rho_minus_delta(datum, subset)
        k = len(set(subset))
        out = PolyT.t(len(datum.positive_roots) - k)
        out = out * PolyT({0: 1, 1: 1}) ** (n - c)
        out = out * PolyT({0: 1, 2: 1}) ** (k - c)
        out = out * PolyT({0: 1, 3: 1}) ** c
        return out
    raise ValueError(f"unknown reference polynomial {which!r}")
