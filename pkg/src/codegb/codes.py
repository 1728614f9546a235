"""Linear codes over F_p and their binomial ideals.

A [n, k] code is given by a generator matrix in standard form (I_k | M).
Each row i yields the vector m_i with entries (p - g_ij) mod p on the
right block; those vectors shape both the lexicographic Groebner basis of
the code ideal and, after translating the common zero (1, ..., 1) to the
origin, the closed-form standard basis of the translated ideal under the
negative degree lexicographic order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .gfp import is_prime
from .monomials import Order, variable
from .mora import BasisCheck, is_standard_basis
from .poly import Polynomial, Ring


class MatrixFormatError(ValueError):
    """Malformed matrix text or a matrix that is not in standard form."""


@dataclass(frozen=True)
class GeneratorMatrix:
    """k x n generator matrix over F_p in standard form (I_k | M)."""

    p: int
    k: int
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise MatrixFormatError(f"p={self.p} is not prime")
        if not 1 <= self.k <= self.n:
            raise MatrixFormatError(f"need 1 <= k <= n, got k={self.k} n={self.n}")
        if len(self.rows) != self.k:
            raise MatrixFormatError(f"expected {self.k} rows, got {len(self.rows)}")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != self.n:
                raise MatrixFormatError(f"row {r} has {len(row)} entries, expected {self.n}")
            for c, entry in enumerate(row, start=1):
                if not 0 <= entry < self.p:
                    raise MatrixFormatError(
                        f"entry {entry} at row {r} col {c} is outside [0, {self.p})"
                    )
        for r in range(self.k):
            for c in range(self.k):
                expected = 1 if r == c else 0
                if self.rows[r][c] != expected:
                    raise MatrixFormatError(
                        f"not in standard form: row {r + 1} col {c + 1} is "
                        f"{self.rows[r][c]}, expected {expected}"
                    )


@dataclass(frozen=True)
class MiVector:
    """Row vector m_i: entries (p - g_ij) mod p on columns k+1..n, else 0."""

    values: tuple[int, ...]
    support: tuple[int, ...]  # 1-based column indices with nonzero value
    sigma: int


def parse_matrix(text: str) -> GeneratorMatrix:
    """Parse the matrix wire format.

    Line 1 is ``p=<prime>``, line 2 is ``k=<int> n=<int>``, then k lines
    of n space-separated integers in [0, p). ``#`` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if len(lines) < 2:
        raise MatrixFormatError("expected a p= line and a k=/n= line")
    m = re.fullmatch(r"p=(\d+)", lines[0])
    if not m:
        raise MatrixFormatError(f"expected 'p=<prime>' on line 1, got {lines[0]!r}")
    p = int(m.group(1))
    m = re.fullmatch(r"k=(\d+)\s+n=(\d+)", lines[1])
    if not m:
        raise MatrixFormatError(f"expected 'k=<int> n=<int>' on line 2, got {lines[1]!r}")
    k, n = int(m.group(1)), int(m.group(2))
    body = lines[2:]
    if len(body) != k:
        raise MatrixFormatError(f"expected {k} matrix rows, got {len(body)}")
    rows = []
    for r, line in enumerate(body, start=1):
        entries = line.split()
        try:
            row = tuple(int(e) for e in entries)
        except ValueError:
            raise MatrixFormatError(f"row {r} contains a non-integer entry") from None
        rows.append(row)
    return GeneratorMatrix(p, k, n, tuple(rows))


def rref(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Reduced row echelon form over F_p; returns (rows, pivot column indices).

    Pivot columns are 1-based. Zero rows sink to the bottom.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    work = [[e % p for e in row] for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    if any(len(row) != ncols for row in work):
        raise ValueError("ragged matrix")
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = pow(work[r][c], p - 2, p)
        work[r] = [(e * inv) % p for e in work[r]]
        for i in range(nrows):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [(a - factor * b) % p for a, b in zip(work[i], work[r])]
        pivots.append(c + 1)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in work), tuple(pivots)


def standard_form(rows: Sequence[Sequence[int]], p: int) -> GeneratorMatrix:
    """Row-reduce arbitrary generators and require pivots in columns 1..k.

    Column permutations change the code, so when the pivots land elsewhere
    this reports the permutation that would be needed instead of applying
    it silently.
    """
    reduced, pivots = rref(rows, p)
    k = len(pivots)
    if k == 0:
        raise MatrixFormatError("matrix has rank 0")
    if k < len(rows):
        raise MatrixFormatError(f"rows are linearly dependent: rank {k} < {len(rows)}")
    n = len(reduced[0])
    if pivots != tuple(range(1, k + 1)):
        raise MatrixFormatError(
            f"pivot columns are {list(pivots)}, not 1..{k}; moving columns "
            f"{list(pivots)} to the front would standardize the matrix but "
            "permutes the code"
        )
    return GeneratorMatrix(p, k, n, reduced[:k])


def mi_vector(G: GeneratorMatrix, i: int) -> MiVector:
    """The vector m_i for row i (1-based), i.e. p - g_ij on the right block."""
    if not 1 <= i <= G.k:
        raise ValueError(f"row index {i} out of range [1, {G.k}]")
    values = [0] * G.n
    for j in range(G.k, G.n):
        values[j] = (G.p - G.rows[i - 1][j]) % G.p
    support = tuple(j + 1 for j in range(G.n) if values[j])
    return MiVector(tuple(values), support, len(support))


def lex_code_basis(G: GeneratorMatrix) -> list[Polynomial]:
    """The reduced lex Groebner basis of the code ideal.

    k binomials X_i - X^{m_i} followed by the field relations X_i^p - 1
    for the free columns.
    """
    ring = Ring(G.p, G.n, Order.LEX)
    out = []
    for i in range(1, G.k + 1):
        mi = mi_vector(G, i)
        out.append(ring.poly([(1, variable(i, G.n)), (G.p - 1, mi.values)]))
    for i in range(G.k + 1, G.n + 1):
        power = tuple(G.p if j == i - 1 else 0 for j in range(G.n))
        out.append(ring.poly([(1, power), (G.p - 1, (0,) * G.n)]))
    return out


def translated_generators(G: GeneratorMatrix) -> list[Polynomial]:
    """Generators of the code ideal after translating (1, ..., 1) to the origin.

    The substitution X_i -> X_i + 1 applied to the lex basis, fully
    expanded and normalized under the negative degree lexicographic order:
    (X_i + 1) + (p-1) * prod_{j in supp(m_i)} (X_j + 1)^(p - g_ij) for the
    identity columns and (X_i + 1)^p + (p - 1) for the free columns.
    """
    ring = Ring(G.p, G.n, Order.NEGDEGLEX)
    out = []
    for i in range(1, G.k + 1):
        mi = mi_vector(G, i)
        prod_part = ring.one()
        for j in mi.support:
            prod_part = prod_part * (ring.variable(j) + 1) ** mi.values[j - 1]
        out.append(ring.variable(i) + 1 + (G.p - 1) * prod_part)
    for i in range(G.k + 1, G.n + 1):
        out.append((ring.variable(i) + 1) ** G.p + (G.p - 1))
    return out


def closed_form_basis(G: GeneratorMatrix) -> list[Polynomial]:
    """The closed-form standard basis of the translated code ideal.

    For each identity column i with support {j_1 < ... < j_s} and caps
    c_l = p - g_(i, j_l), the element is

        X_i - sum over (t_1, ..., t_s) != 0, 0 <= t_l <= c_l of
              prod_h C(c_h, t_h) * X_(j_h)^(t_h)

    with binomial coefficients reduced mod p; an empty support leaves the
    bare X_i. The free columns contribute the pure powers X_i^p. All
    elements are bound to the negative degree lexicographic order.
    """
    ring = Ring(G.p, G.n, Order.NEGDEGLEX)
    field = ring.field
    out = []
    for i in range(1, G.k + 1):
        mi = mi_vector(G, i)
        caps = [mi.values[j - 1] for j in mi.support]
        terms = [(1, variable(i, G.n))]
        for exponents in product(*(range(c + 1) for c in caps)):
            if not any(exponents):
                continue
            coeff = 1
            for cap, t in zip(caps, exponents):
                coeff = coeff * field.binom(cap, t) % G.p
            mono = [0] * G.n
            for j, t in zip(mi.support, exponents):
                mono[j - 1] = t
            terms.append(((G.p - coeff) % G.p, tuple(mono)))
        out.append(ring.poly(terms))
    for i in range(G.k + 1, G.n + 1):
        power = tuple(G.p if j == i - 1 else 0 for j in range(G.n))
        out.append(ring.term(1, power))
    return out


@dataclass(frozen=True)
class VerificationReport:
    """Three independent checks of the closed-form standard basis."""

    generators_match: bool
    standard_basis_ok: bool
    leading_terms_ok: bool
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.generators_match and self.standard_basis_ok and self.leading_terms_ok


def verify_closed_form(G: GeneratorMatrix, *, drop_index: int | None = None) -> VerificationReport:
    """Verify the closed-form basis against the translated generators.

    Checks that (a) the closed form equals the expanded translated
    generators as normalized sets, (b) it passes the standard-basis
    criterion including two-way generation, and (c) its leading terms are
    exactly X_1..X_k and X_(k+1)^p..X_n^p. drop_index removes one element
    from the closed form first, as a negative control.
    """
    closed = closed_form_basis(G)
    translated = translated_generators(G)
    if drop_index is not None:
        if not 0 <= drop_index < len(closed):
            raise ValueError(f"drop index {drop_index} out of range [0, {len(closed)})")
        closed = closed[:drop_index] + closed[drop_index + 1 :]

    detail = ""
    generators_match = set(closed) == set(translated)
    if not generators_match:
        missing = set(translated) - set(closed)
        extra = set(closed) - set(translated)
        sample = next(iter(missing or extra))
        side = "missing" if missing else "extra"
        detail = f"closed form {side} element {sample!s}"

    check: BasisCheck = is_standard_basis(closed, translated)
    if not check and not detail:
        detail = check.detail

    ring = Ring(G.p, G.n, Order.NEGDEGLEX)
    expected = {variable(i, G.n) for i in range(1, G.k + 1)}
    expected |= {
        tuple(G.p if j == i - 1 else 0 for j in range(G.n)) for i in range(G.k + 1, G.n + 1)
    }
    actual = {f.leading_monomial for f in closed}
    leading_ok = actual == expected
    if not leading_ok and not detail:
        diff = actual.symmetric_difference(expected)
        detail = f"leading-term set differs at {ring.term(1, next(iter(diff)))!s}"

    return VerificationReport(generators_match, bool(check), leading_ok, detail)


def random_matrix(rng, p: int, k: int, n: int) -> GeneratorMatrix:
    """Standard-form matrix with a uniformly random right block."""
    rows = []
    for r in range(k):
        identity = [1 if c == r else 0 for c in range(k)]
        rows.append(tuple(identity + [rng.randrange(p) for _ in range(n - k)]))
    return GeneratorMatrix(p, k, n, tuple(rows))
