"""Golden data and seeded random-instance generators shared across the tests."""

from __future__ import annotations

from codegb import monomials
from codegb.codes import random_matrix
from codegb.poly import Polynomial, Ring, ecart, reduce_step

EXAMPLE_MATRIX = """\
p=3
k=3 n=6
1 0 0 1 0 1
0 1 0 2 1 0
0 0 1 2 2 1
"""

# Canonical prints of the closed-form standard basis for EXAMPLE_MATRIX.
G1 = "X1+X4+X6+2X4^2+2X4X6+2X6^2+X4^2X6+X4X6^2+2X4^2X6^2"
G2 = "X2+2X4+X5+X4X5+2X5^2+2X4X5^2"
G3 = "X3+2X4+2X5+X6+2X4X5+X4X6+X5X6+2X6^2+X4X5X6+2X4X6^2+2X5X6^2+2X4X5X6^2"
CLOSED_FORM_LINES = [G1, G2, G3, "X4^3", "X5^3", "X6^3"]

LEX_BASIS_LINES = [
    "X1+2X4^2X6^2",
    "X2+2X4X5^2",
    "X3+2X4X5X6^2",
    "X4^3+2",
    "X5^3+2",
    "X6^3+2",
]


def random_monomial(rng, n, max_deg, min_deg=0):
    total = rng.randint(min_deg, max_deg)
    mono = [0] * n
    for _ in range(total):
        mono[rng.randrange(n)] += 1
    return tuple(mono)


def random_poly(ring: Ring, rng, max_terms=5, max_deg=5) -> Polynomial:
    raw = [
        (rng.randrange(1, ring.p), random_monomial(rng, ring.n, max_deg))
        for _ in range(rng.randint(0, max_terms))
    ]
    return ring.poly(raw)


def random_nonzero_poly(ring: Ring, rng, max_terms=5, max_deg=5) -> Polynomial:
    while True:
        f = random_poly(ring, rng, max_terms, max_deg)
        if f:
            return f


def random_local_divisor(ring: Ring, rng, max_terms=4, max_deg=5) -> Polynomial:
    """Nonzero polynomial vanishing at the origin.

    A nonzero constant term would make the divisor a unit of the localized
    ring (the ideal degenerates to the whole ring), so random reduction
    instances stick to the ideal-of-the-origin setting the local order is
    for.
    """
    while True:
        raw = [
            (rng.randrange(1, ring.p), random_monomial(rng, ring.n, max_deg, min_deg=1))
            for _ in range(rng.randint(1, max_terms))
        ]
        f = ring.poly(raw)
        if f:
            return f


def random_code(rng, ps=(2, 3, 5), max_k=3, max_n=6):
    p = rng.choice(ps)
    k = rng.randint(1, max_k)
    n = rng.randint(k, max_n)
    return random_matrix(rng, p, k, n)


def random_codeword(rng, G):
    """Encode a random message: x * G over F_p, as an exponent vector."""
    message = [rng.randrange(G.p) for _ in range(G.k)]
    return tuple(
        sum(message[r] * G.rows[r][c] for r in range(G.k)) % G.p for c in range(G.n)
    )


def naive_reduction(f, divisors, budget):
    """Plain reduction loop without Mora's recording rule.

    Uses the same minimal-ecart, earliest-first selection but never adds
    intermediates, so it diverges on the inputs the recording rule exists
    for. Returns (h, steps, exceeded_budget).
    """
    h = f
    steps = 0
    while h:
        matching = [g for g in divisors if monomials.divides(g.leading_monomial, h.leading_monomial)]
        if not matching:
            break
        g = min(matching, key=ecart)
        h = reduce_step(h, g)
        steps += 1
        if steps > budget:
            return h, steps, True
    return h, steps, False
