"""Published parametric families as coefficient tables.

The tables live in ``data/families.txt`` rather than in source, so a
transcription slip shows up as a data diff and is caught by
cross_check, which regenerates every family from the construction
machinery and compares values.

File format: blocks separated by blank lines.  Each block is a header
line ``id n degree kind`` followed by one parenthesized coefficient
tuple per line (the (c_0, ..., c_n) notation of polyfield.HomogPoly).
kind is "t" (one integer parameter, entries evaluated at (t, 1)) or
"pq" (a projective integer pair).  A block with n tuples stores roots
only (certificates are recovered at evaluation time from the exclusion
sums); a block with 2n tuples stores roots then certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .exactmath import DomainError, is_perfect_square, isqrt, vec_gcd
from .polyfield import HomogPoly, dehomogenize, homog_eval
from .seeds import DegenerateParameterError, SquareSystem
from .evolve import generate_method1, reduce_chain
from . import derive
from .seeds import ChainSolution


class UnknownFamilyError(DomainError):
    """No catalog record under that id."""


@dataclass(frozen=True)
class FamilyRecord:
    id: str
    n: int
    degree: int
    kind: str  # "t" or "pq"
    entries: tuple  # HomogPoly per root
    certificates: tuple | None  # HomogPoly per certificate, if stored


@dataclass(frozen=True)
class CrossCheckReport:
    id: str
    points: tuple
    mismatches: tuple

    @property
    def ok(self):
        return not self.mismatches

    def __str__(self):
        if self.ok:
            return f"OK ({len(self.points)} points)"
        lines = [f"MISMATCH at {len(self.mismatches)} of "
                 f"{len(self.points)} points"]
        lines += [f"  {pt}: {msg}" for pt, msg in self.mismatches]
        return "\n".join(lines)


def _parse_blocks(text):
    records = {}
    block = []
    for raw in text.splitlines() + [""]:
        line = raw.strip()
        if line.startswith("#"):
            continue
        if line:
            block.append(line)
            continue
        if not block:
            continue
        head, *tuples = block
        block = []
        parts = head.split()
        if len(parts) != 4:
            raise DomainError(f"bad catalog header: {head!r}")
        fid, n, degree, kind = parts[0], int(parts[1]), int(parts[2]), parts[3]
        if kind not in ("t", "pq"):
            raise DomainError(f"bad catalog kind in {head!r}")
        polys = tuple(HomogPoly.parse(tp) for tp in tuples)
        if len(polys) == n:
            entries, certs = polys, None
        elif len(polys) == 2 * n:
            entries, certs = polys[:n], polys[n:]
        else:
            raise DomainError(
                f"family {fid}: {len(polys)} tuples for n = {n}")
        records[fid] = FamilyRecord(fid, n, degree, kind, entries, certs)
    return records


_records_cache = None


def _records():
    global _records_cache
    if _records_cache is None:
        text = (resources.files(__package__) / "data" / "families.txt") \
            .read_text(encoding="utf-8")
        _records_cache = _parse_blocks(text)
    return _records_cache


def list_families():
    """All built-in record ids, sorted."""
    return sorted(_records())


def get_family(fid: str) -> FamilyRecord:
    try:
        return _records()[fid]
    except KeyError:
        raise UnknownFamilyError(f"unknown family id: {fid}") from None


def _point(record, params):
    if record.kind == "t":
        if isinstance(params, (tuple, list)):
            if len(params) != 1:
                raise DomainError(
                    f"family {record.id} takes a single parameter t")
            params = params[0]
        return int(params), 1
    u, v = params
    return int(u), int(v)


def eval_family(fid: str, params) -> SquareSystem:
    """Evaluate a family, reduce by joint gcd, return the system.

    params is an integer t for kind "t" records, a pair for kind "pq".
    Certificates not in the table are recovered from the exclusion
    sums, which must be perfect squares (they are, at every parameter
    point, or the table is corrupt).
    """
    record = get_family(fid)
    u, v = _point(record, params)
    xs = [homog_eval(e, u, v) for e in record.entries]
    if any(x == 0 for x in xs):
        raise DegenerateParameterError(
            f"family {fid} has a zero root at {params}")
    s = sum(x * x for x in xs)
    if record.certificates is not None:
        ys = [homog_eval(e, u, v) for e in record.certificates]
        for x, y in zip(xs, ys):
            if x * x + y * y != s:
                raise DomainError(
                    f"family {fid} table corrupt: certificate mismatch")
    else:
        ys = []
        for x in xs:
            excl = s - x * x
            if not is_perfect_square(excl):
                raise DomainError(
                    f"family {fid} table corrupt: exclusion sum {excl} "
                    f"is not a perfect square")
            ys.append(isqrt(excl))
    g = vec_gcd(xs + ys)
    roots = tuple(abs(x) // g for x in xs)
    certs = tuple(abs(y) // g for y in ys)
    distinct = len(set(roots)) == record.n
    return SquareSystem(record.n, roots, certs, s // (g * g),
                        distinct=distinct)


def _deg10_reference(q1, q2):
    params = (derive.n5_p_values(q1, q2), (q1, q2), derive.n5_r_values(q1, q2))
    pairs = derive.assignment_pairs(derive.ASSIGN_N5, params)
    sol = reduce_chain(ChainSolution.from_pairs(pairs))
    return sorted(abs(x) for x in sol.xs)


_T_POINTS = tuple(range(2, 12))
_PQ_POINTS = ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3),
              (3, 2), (1, 4), (4, 1), (3, 4), (4, 3))

_REFERENCES = {
    "n5-method1-deg17": (_T_POINTS,
                         lambda t: sorted(generate_method1(5, t).roots)),
    "n5-method2-deg10": (_PQ_POINTS, lambda pq: _deg10_reference(*pq)),
    "n5-method2-deg30": (_PQ_POINTS,
                         lambda pq: sorted(derive.pipeline_n5(*pq).roots)),
    "n6-method2-deg38": (_PQ_POINTS,
                         lambda pq: sorted(derive.pipeline_n6(*pq).roots)),
}


def cross_check(fid: str) -> CrossCheckReport:
    """Regenerate the family values from the construction machinery at
    a panel of parameter points and compare with the table evaluation."""
    record = get_family(fid)
    try:
        points, reference = _REFERENCES[fid]
    except KeyError:
        raise DomainError(
            f"no generating pipeline registered for {fid}") from None
    mismatches = []
    for pt in points:
        try:
            got = sorted(eval_family(fid, pt).roots)
            want = reference(pt)
        except DomainError as exc:
            mismatches.append((pt, f"error: {exc}"))
            continue
        if got != want:
            mismatches.append((pt, f"table {got} != regenerated {want}"))
    return CrossCheckReport(record.id, tuple(points), tuple(mismatches))
