"""Two-square composition and the equal-norm representation chains.

A product of sums of two squares is again a sum of two squares, in two
ways.  Iterating the composition over three or four parameter pairs and
flipping the signs of selected second components yields four (``chain4``)
or eight (``chain8``) representations (a_i, b_i) that all share one norm:
the product of the parameter-pair norms.

All functions are generic in their scalar type: ints, Fractions, or the
polynomial scalars from :mod:`exsquares.polyfield` work alike, since only
ring operations are used.
"""

from __future__ import annotations


def compose(u1, u2, v1, v2):
    """Both two-square representations of (u1^2+u2^2)(v1^2+v2^2).

    Returns ((u1*v1 - u2*v2, u1*v2 + u2*v1), (u1*v1 + u2*v2, u1*v2 - u2*v1)).
    """
    return ((u1 * v1 - u2 * v2, u1 * v2 + u2 * v1),
            (u1 * v1 + u2 * v2, u1 * v2 - u2 * v1))


def phi(f1, f2, g1, g2, h1, h2):
    """Three-factor generator pair (phi1, phi2).

    phi1^2 + phi2^2 = (f1^2+f2^2)(g1^2+g2^2)(h1^2+h2^2).
    """
    return ((f1 * g1 + f2 * g2) * h1 + (f1 * g2 - f2 * g1) * h2,
            (-f1 * g2 + f2 * g1) * h1 + (f1 * g1 + f2 * g2) * h2)


def psi(e1, e2, f1, f2, g1, g2, h1, h2):
    """Four-factor generator pair (psi1, psi2).

    psi1^2 + psi2^2 = (e1^2+e2^2)(f1^2+f2^2)(g1^2+g2^2)(h1^2+h2^2).
    """
    return ((-e1 * f1 * g2 + e1 * f2 * g1 - e2 * f1 * g1 - e2 * f2 * g2) * h1
            + (e1 * f1 * g1 + e1 * f2 * g2 - e2 * f1 * g2 + e2 * f2 * g1) * h2,
            (e1 * f1 * g1 + e1 * f2 * g2 - e2 * f1 * g2 + e2 * f2 * g1) * h1
            + (e1 * f1 * g2 - e1 * f2 * g1 + e2 * f1 * g1 + e2 * f2 * g2) * h2)


# Which second components get negated to produce chain member i.  The
# patterns are fixed data: tests depend on reproducing them exactly.
CHAIN4_FLIPS = ((), (0,), (1,), (2,))
CHAIN8_FLIPS = ((), (0,), (1,), (2,), (3,), (0, 1), (0, 2), (0, 3))


def _flip_args(pairs, mask):
    out = []
    for k, (u1, u2) in enumerate(pairs):
        out.append((u1, -u2) if k in mask else (u1, u2))
    return out


def chain4(p, q, r):
    """Four equal-norm pairs built from three parameter pairs.

    Every returned (a, b) satisfies a^2 + b^2 = chain4_norm(p, q, r).
    """
    out = []
    for mask in CHAIN4_FLIPS:
        (f1, f2), (g1, g2), (h1, h2) = _flip_args((p, q, r), mask)
        out.append(phi(f1, f2, g1, g2, h1, h2))
    return out


def chain8(p, q, r, s):
    """Eight equal-norm pairs built from four parameter pairs.

    Every returned (a, b) satisfies a^2 + b^2 = chain8_norm(p, q, r, s).
    """
    out = []
    for mask in CHAIN8_FLIPS:
        (e1, e2), (f1, f2), (g1, g2), (h1, h2) = _flip_args((p, q, r, s), mask)
        out.append(psi(e1, e2, f1, f2, g1, g2, h1, h2))
    return out


def pair_norm(u):
    return u[0] * u[0] + u[1] * u[1]


def chain4_norm(p, q, r):
    """Common value of a^2 + b^2 over chain4(p, q, r)."""
    return pair_norm(p) * pair_norm(q) * pair_norm(r)


def chain8_norm(p, q, r, s):
    """Common value of a^2 + b^2 over chain8(p, q, r, s)."""
    return pair_norm(p) * pair_norm(q) * pair_norm(r) * pair_norm(s)
