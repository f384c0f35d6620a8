"""Independent validation oracle.

Everything here recomputes the claimed properties from raw values using
only integer squaring and exact integer square roots, so it shares no
machinery with the construction modules it is used to check.

Reports are structured: each violated condition is listed with the
entry index (1-based) and the recomputed values, so a failure pinpoints
the exact digit-level discrepancy instead of a bare boolean.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmath import DomainError, is_perfect_square, isqrt
from .seeds import ChainSolution, SquareSystem


@dataclass(frozen=True)
class Violation:
    index: int | None  # 1-based entry index, None for global conditions
    kind: str
    detail: str

    def __str__(self):
        where = f"entry {self.index}" if self.index is not None else "global"
        return f"[{self.kind}] {where}: {self.detail}"


@dataclass(frozen=True)
class Report:
    ok: bool
    violations: tuple

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(str(v) for v in self.violations)


def _report(violations) -> Report:
    violations = tuple(violations)
    return Report(not violations, violations)


def validate_chain(sol: ChainSolution) -> Report:
    """Check x_i^2 + y_i^2 = s for every i, and sum(x_i^2) = s.

    Works over any exact scalar type (equality-based, no square roots).
    """
    out = []
    total = None
    for i, (x, y) in enumerate(sol.pairs, start=1):
        v = x * x + y * y
        if v != sol.s:
            out.append(Violation(i, "pair-sum",
                                 f"x^2+y^2 = {v}, expected s = {sol.s}"))
        sq = x * x
        total = sq if total is None else total + sq
    if total != sol.s:
        out.append(Violation(None, "square-sum",
                             f"sum of x^2 = {total}, expected s = {sol.s}"))
    return _report(out)


def validate_system(sys: SquareSystem, require_distinct: bool = True) -> Report:
    """Recompute every exclusion sum from the roots alone and test it.

    Checks: declared s, each exclusion sum a perfect square, each
    certificate squaring to its exclusion sum, nonzero roots, and
    (optionally) pairwise-distinct |roots|.
    """
    out = []
    if len(sys.roots) != sys.n or len(sys.certificates) != sys.n:
        out.append(Violation(None, "shape",
                             f"n = {sys.n} but {len(sys.roots)} roots, "
                             f"{len(sys.certificates)} certificates"))
        return _report(out)
    total = sum(r * r for r in sys.roots)
    if total != sys.s:
        out.append(Violation(None, "sum",
                             f"sum of roots^2 = {total}, declared s = {sys.s}"))
    for i, (r, c) in enumerate(zip(sys.roots, sys.certificates), start=1):
        if r == 0:
            out.append(Violation(i, "zero-root", "root is zero"))
        excl = total - r * r
        if not is_perfect_square(excl):
            out.append(Violation(i, "exclusion-not-square",
                                 f"excluding root {r} leaves {excl}"))
        elif c * c != excl:
            out.append(Violation(i, "certificate",
                                 f"certificate {c} squares to {c * c}, "
                                 f"exclusion sum is {excl}"))
    if require_distinct:
        seen = {}
        for i, r in enumerate(sys.roots, start=1):
            key = abs(r)
            if key in seen:
                out.append(Violation(i, "repeat",
                                     f"|root| {key} repeats entry {seen[key]}"))
            else:
                seen[key] = i
    return _report(out)


def system_from_chain(sol: ChainSolution) -> SquareSystem:
    """Forward direction: roots and certificates with canonical signs."""
    rep = validate_chain(sol)
    if not rep.ok:
        raise DomainError(f"not a valid chain: {rep}")
    roots = tuple(abs(x) for x in sol.xs)
    certs = tuple(abs(y) for y in sol.ys)
    distinct = len(set(roots)) == sol.n and 0 not in roots
    return SquareSystem(sol.n, roots, certs, sol.s, distinct=distinct)


def chain_from_system(sys: SquareSystem) -> ChainSolution:
    """Backward direction: recover certificates from the roots alone.

    Fails if some exclusion sum is not a perfect square.
    """
    total = sum(r * r for r in sys.roots)
    pairs = []
    for i, r in enumerate(sys.roots, start=1):
        excl = total - r * r
        if not is_perfect_square(excl):
            raise DomainError(
                f"exclusion sum {excl} at entry {i} is not a perfect square")
        pairs.append((abs(r), isqrt(excl)))
    return ChainSolution(len(pairs), tuple(pairs), total)
