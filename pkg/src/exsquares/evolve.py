"""Chain-to-chain transform and the drivers that separate repeated entries.

The transform sends a chain solution (x_i, y_i) with

    P = sum(x_i * y_i),   S = sum(x_i ** 2)

to X_i = (n-2)*S*x_i - 2*P*y_i, Y_i = 2*P*x_i + (n-2)*S*y_i, which is
again a chain solution, and maps identical pairs to identical pairs and
distinct pairs to distinct pairs.  Negating any subset of the x_i also
preserves the chain conditions but changes P, so flipping half of each
identical block before transforming splits the block.  Repeating the
round halves every block until all entries differ.

Everything here is generic over the scalar type.  Running the rounds
over polynomials in t (not plain integers) is essential, not cosmetic:
each round starts by normalizing entries to a positive leading
coefficient, and the leading sign of a polynomial is invisible in any
single numeric value.  The published reference values are reproduced by
the polynomial path; see generate_method1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactmath import DomainError, vec_gcd
from .polyfield import Poly, X
from .seeds import (ChainSolution, DegenerateParameterError, SquareSystem,
                    lemma3_general, seed_n5_simple, seed_n6)


class NotAnImageError(DomainError):
    """Inverse transform applied to something that is not an image."""


class DistinctifyError(DomainError):
    """Flip schedule exhausted with entries still coinciding."""

    def __init__(self, multiplicities):
        self.multiplicities = multiplicities
        super().__init__(f"entries still repeat: multiplicities {multiplicities}")


@dataclass(frozen=True)
class TransformCoefficients:
    P: object
    S: object


@dataclass(frozen=True)
class FlipSchedule:
    """Index sets to negate before each transform round."""

    rounds: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "rounds", tuple(frozenset(r) for r in self.rounds))


def coefficients(sol: ChainSolution) -> TransformCoefficients:
    p = s = 0
    for x, y in sol.pairs:
        p = p + x * y
        s = s + x * x
    return TransformCoefficients(P=p, S=s)


def transform(sol: ChainSolution) -> ChainSolution:
    co = coefficients(sol)
    a = (sol.n - 2) * co.S
    b = 2 * co.P
    return ChainSolution.from_pairs(
        (a * x - b * y, b * x + a * y) for x, y in sol.pairs)


def _exact_div(v, d):
    q, r = divmod(v, d)
    if r != 0:
        raise NotAnImageError("division not exact; not a transform image")
    return q


def inverse_transform(sol: ChainSolution,
                      coeffs: TransformCoefficients) -> ChainSolution:
    """Undo transform, given the pre-image's own (P, S)."""
    a = (sol.n - 2) * coeffs.S
    b = 2 * coeffs.P
    d = a * a + b * b
    if d == 0:
        raise NotAnImageError("degenerate coefficients: 4P^2+(n-2)^2S^2 = 0")
    return ChainSolution.from_pairs(
        (_exact_div(a * x + b * y, d), _exact_div(a * y - b * x, d))
        for x, y in sol.pairs)


def flip(sol: ChainSolution, indices) -> ChainSolution:
    idx = frozenset(indices)
    for i in idx:
        if not 0 <= i < sol.n:
            raise DomainError(f"flip index {i} out of range")
    return ChainSolution(sol.n,
                         tuple((-x, y) if i in idx else (x, y)
                               for i, (x, y) in enumerate(sol.pairs)),
                         sol.s)


def _is_poly_chain(sol: ChainSolution) -> bool:
    return isinstance(sol.pairs[0][0], Poly)


def reduce_chain(sol: ChainSolution) -> ChainSolution:
    """Divide all entries by their joint content."""
    if _is_poly_chain(sol):
        g = 0
        for x, y in sol.pairs:
            for c in x.coeffs + y.coeffs:
                if c.denominator != 1:
                    raise DomainError("content reduction needs integer coefficients")
                g = gcd(g, c.numerator)
        if g in (0, 1):
            return sol
        return ChainSolution.from_pairs(
            (Poly(c / g for c in x.coeffs), Poly(c / g for c in y.coeffs))
            for x, y in sol.pairs)
    flat = [v for x, y in sol.pairs for v in (x, y)]
    g = vec_gcd(flat)
    if g == 1:
        return sol
    return ChainSolution.from_pairs((x // g, y // g) for x, y in sol.pairs)


def _canon_x(x):
    """Representative of {x, -x}: nonnegative, or positive-leading."""
    if isinstance(x, Poly):
        return -x if x.lead < 0 else x
    return -x if x < 0 else x


def _normalize(sol: ChainSolution) -> ChainSolution:
    return ChainSolution(sol.n,
                         tuple((_canon_x(x), y) for x, y in sol.pairs),
                         sol.s)


def _multiplicities(sol: ChainSolution):
    counts = {}
    for x, _ in sol.pairs:
        key = _canon_x(x)
        counts[key] = counts.get(key, 0) + 1
    return counts


def _all_distinct(sol: ChainSolution) -> bool:
    counts = _multiplicities(sol)
    if any(k == 0 for k in counts):
        return False
    return all(v == 1 for v in counts.values())


def _flip_half_blocks(sol: ChainSolution) -> ChainSolution:
    """Negate x on the back half of every block of identical pairs."""
    locs = {}
    for i, pr in enumerate(sol.pairs):
        locs.setdefault(pr, []).append(i)
    to_flip = set()
    for members in locs.values():
        k = len(members) // 2
        if k:
            to_flip.update(members[len(members) - k:])
    return flip(sol, to_flip) if to_flip else sol


def _round(sol: ChainSolution) -> ChainSolution:
    sol = _normalize(sol)
    sol = _flip_half_blocks(sol)
    sol = transform(sol)
    return reduce_chain(sol)


def _as_system(sol: ChainSolution, distinct: bool) -> SquareSystem:
    roots = tuple(_canon_x(x) for x in sol.xs)
    certs = tuple(_canon_x(y) for y in sol.ys)
    return SquareSystem(sol.n, roots, certs, sol.s, distinct=distinct)


def distinctify(sol: ChainSolution, schedule: FlipSchedule | None = None,
                max_rounds: int = 16) -> SquareSystem:
    """Make all |x_i| pairwise distinct and nonzero.

    With no schedule, runs the halving rounds until distinct.  With an
    explicit FlipSchedule, applies exactly those rounds and then demands
    distinctness.  Raises DistinctifyError (with the surviving
    multiplicity structure) on failure.
    """
    if schedule is not None:
        for idx in schedule.rounds:
            sol = reduce_chain(transform(flip(sol, idx)))
    else:
        rounds = 0
        while not _all_distinct(sol):
            if rounds >= max_rounds:
                raise DistinctifyError(sorted(_multiplicities(sol).values()))
            sol = _round(sol)
            rounds += 1
    if not _all_distinct(sol):
        raise DistinctifyError(sorted(_multiplicities(sol).values()))
    return _as_system(sol, distinct=True)


_SEEDS = {5: seed_n5_simple, 6: seed_n6}


def method1_seed(n: int, t):
    """Seed used by the method-1 driver for a given n."""
    if n in _SEEDS:
        return _SEEDS[n](t)
    return lemma3_general(n, t)


_family_cache: dict = {}


def method1_family(n: int) -> SquareSystem:
    """Distinct parametric family in t (polynomial entries), cached."""
    if n not in _family_cache:
        _family_cache[n] = distinctify(method1_seed(n, X))
    return _family_cache[n]


def finalize_system(pairs, n: int, label: str) -> SquareSystem:
    """Joint gcd reduction + distinctness gate for integer pairs."""
    pairs = list(pairs)
    g = vec_gcd([v for pr in pairs for v in pr])
    chain = ChainSolution.from_pairs((x // g, y // g) for x, y in pairs)
    roots = [abs(x) for x in chain.xs]
    if len(set(roots)) != n or 0 in roots:
        raise DegenerateParameterError(
            f"{label} collapses the family to repeated or zero roots")
    return _as_system(chain, distinct=True)


def generate_method1(n: int, t: int) -> SquareSystem:
    """Method-1 run at integer t: evolve the seed until distinct, reduce.

    For n = 5 and 6 (the cases with published reference values) the
    rounds run once over polynomials in t and the cached family is
    evaluated.  Other n evolve numerically at t directly; the output is
    validator-checked either way.  Degenerate t raises.
    """
    method1_seed(n, t)  # eager degeneracy check at the numeric point
    if n in _SEEDS:
        family = method1_family(n)
        ints = []
        for p, q in zip(family.roots, family.certificates):
            vx, vy = p(t), q(t)
            if vx.denominator != 1 or vy.denominator != 1:
                raise DomainError("non-integer family value")
            ints.append((int(vx), int(vy)))
        return finalize_system(ints, n, f"t={t}")
    sys = distinctify(method1_seed(n, t))
    return finalize_system(zip(sys.roots, sys.certificates), n, f"t={t}")
