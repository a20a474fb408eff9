"""A five-parameter family of codimension-three Artinian Gorenstein ideals.

Parameters (a, b, c, beta, gamma) pick three complete-intersection exponents,
a twist exponent gamma for the middle binomial generator, and a colon shift
beta.  The full ideal adds two mixed monomials to the complete intersection
(x^a, y^b - x^(b-gamma) z^gamma, z^c); the quotient is Gorenstein with socle
degree a + b + c - beta - 3.  ``classify`` evaluates the closed-form
parameter regions with a proved weak Lefschetz verdict, and the SnMatrix
utilities check the positive-determinant identity for the structured sign
matrices that drive those proofs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from . import exactla
from .exactla import RatMatrix
from .polyring import HomogeneousPoly, IdealPresentation


class ParameterError(ValueError):
    """Invalid family parameters."""


class ACOrderError(ParameterError):
    """The first and third exponents must satisfy a >= c >= 2."""


class BetaRangeError(ParameterError):
    """The colon shift must satisfy 1 <= beta <= b - 1."""


class GammaRangeError(ParameterError):
    """The twist must satisfy max(1, b-a+1) <= gamma <= min(b-1, c-1)."""


@dataclass(frozen=True, order=True)
class GorensteinParams:
    a: int
    b: int
    c: int
    beta: int
    gamma: int

    @property
    def socle_degree(self) -> int:
        return self.a + self.b + self.c - self.beta - 3

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.c, self.beta, self.gamma)


def validate(a: int, b: int, c: int, beta: int, gamma: int) -> GorensteinParams:
    """Check the parameter constraints and return a frozen parameter record."""
    for name, value in (("a", a), ("b", b), ("c", c), ("beta", beta), ("gamma", gamma)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    if not a >= c >= 2:
        raise ACOrderError(f"require a >= c >= 2, got a={a}, c={c}")
    if not 1 <= beta <= b - 1:
        raise BetaRangeError(f"require 1 <= beta <= b-1 = {b - 1}, got beta={beta}")
    lo = max(1, b - a + 1)
    hi = min(b - 1, c - 1)
    if not lo <= gamma <= hi:
        raise GammaRangeError(
            f"require {lo} <= gamma <= {hi} for (a, b, c) = ({a}, {b}, {c}), "
            f"got gamma={gamma}"
        )
    return GorensteinParams(a, b, c, beta, gamma)


def build_ci(a: int, b: int, c: int, gamma: int) -> IdealPresentation:
    """The complete intersection (x^a, y^b - x^(b-gamma) z^gamma, z^c)."""
    for name, value in (("a", a), ("b", b), ("c", c), ("gamma", gamma)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ParameterError(f"{name} must be a positive integer, got {value!r}")
    if not a >= c >= 2:
        raise ACOrderError(f"require a >= c >= 2, got a={a}, c={c}")
    lo = max(1, b - a + 1)
    hi = min(b - 1, c - 1)
    if not lo <= gamma <= hi:
        raise GammaRangeError(
            f"require {lo} <= gamma <= {hi} for (a, b, c) = ({a}, {b}, {c}), "
            f"got gamma={gamma}"
        )
    return IdealPresentation(
        3,
        (
            HomogeneousPoly.monomial(3, (a, 0, 0)),
            HomogeneousPoly(3, b, {(0, b, 0): 1, (b - gamma, 0, gamma): -1}),
            HomogeneousPoly.monomial(3, (0, 0, c)),
        ),
    )


def build_ideal(params: GorensteinParams) -> IdealPresentation:
    """The Gorenstein ideal: the complete intersection plus the two mixed
    monomial generators x^(a-b+gamma) y^(b-beta) and y^(b-beta) z^(c-gamma)."""
    p = params
    ci = build_ci(p.a, p.b, p.c, p.gamma)
    return IdealPresentation(
        3,
        ci.generators
        + (
            HomogeneousPoly.monomial(3, (p.a - p.b + p.gamma, p.b - p.beta, 0)),
            HomogeneousPoly.monomial(3, (0, p.b - p.beta, p.c - p.gamma)),
        ),
    )


_FLAG_NAMES = (
    "thm37",
    "thm38",
    "cor313a",
    "cor313b",
    "small2",
    "small3",
    "small4",
    "small5",
)


@dataclass(frozen=True)
class CoverageReport:
    """Which closed-form parameter regions contain the tuple.

    Each flag is an independent arithmetic predicate; ``covered`` is their
    disjunction.  Tuples outside every region have no proved verdict and are
    the interesting ones to sweep.
    """

    thm37: bool
    thm38: bool
    cor313a: bool
    cor313b: bool
    small2: bool
    small3: bool
    small4: bool
    small5: bool

    @property
    def covered(self) -> bool:
        return any(getattr(self, name) for name in _FLAG_NAMES)

    def flags(self) -> dict:
        return {name: getattr(self, name) for name in _FLAG_NAMES}

    def true_flags(self) -> tuple:
        return tuple(name for name in _FLAG_NAMES if getattr(self, name))


def classify(params: GorensteinParams) -> CoverageReport:
    a, b, c, beta, gamma = params.as_tuple()
    thm37 = (
        max(1, b + c - a - 1) <= beta <= b - 1
        and gamma >= (beta - a + b + c - 2) // 2
    )
    thm38 = a <= 2 * b - c and abs(a - b) + c - 1 <= beta <= b - 1
    cor313a = a >= 2 * b + c - 6
    cor313b = a >= b + c - 2 and 1 <= beta <= a - b - c + 5
    return CoverageReport(
        thm37=thm37,
        thm38=thm38,
        cor313a=cor313a,
        cor313b=cor313b,
        small2=2 in (a, b, c),
        small3=3 in (a, b, c),
        small4=4 in (a, b, c),
        small5=5 in (a, b, c),
    )


def enumerate_params(a_max: int, a_min: int = 2) -> Iterator[GorensteinParams]:
    """All valid parameter tuples with a in [a_min, a_max], in lexicographic
    order on (a, b, c, beta, gamma).

    The twist range forces b <= a + c - 2, so b is bounded by 2a - 2.
    """
    for a in range(max(a_min, 2), a_max + 1):
        for b in range(2, 2 * a - 1):
            for c in range(max(2, b - a + 2), a + 1):
                lo = max(1, b - a + 1)
                hi = min(b - 1, c - 1)
                for beta in range(1, b):
                    for gamma in range(lo, hi + 1):
                        yield GorensteinParams(a, b, c, beta, gamma)


def uncovered_params(a_max: int, a_min: int = 2) -> Iterator[GorensteinParams]:
    """The sweep-priority tuples: valid parameters no region covers."""
    for params in enumerate_params(a_max, a_min):
        if not classify(params).covered:
            yield params


@dataclass(frozen=True)
class SnMatrix:
    """Unit upper-triangular rows over a nonnegative bottom row.

    Row i (of n-1) has 1 on the diagonal and nonpositive entries above it,
    stored here as the nonnegative magnitudes ``upper[i]``; the bottom row is
    nonnegative with a positive last entry.  The determinant of such a matrix
    is always positive and obeys a closed-form accumulation identity.
    """

    size: int
    upper: tuple
    last_row: tuple

    def __init__(self, size: int, upper, last_row):
        upper = tuple(tuple(row) for row in upper)
        last_row = tuple(last_row)
        if size < 2:
            raise ValueError("size must be at least 2")
        if len(upper) != size - 1:
            raise ValueError(f"expected {size - 1} upper rows, got {len(upper)}")
        for i, row in enumerate(upper):
            if len(row) != size - 1 - i:
                raise ValueError(
                    f"upper row {i} must have {size - 1 - i} entries"
                )
            if any(v < 0 for v in row):
                raise ValueError("upper magnitudes must be nonnegative")
        if len(last_row) != size:
            raise ValueError(f"last row must have {size} entries")
        if any(v < 0 for v in last_row):
            raise ValueError("last row must be nonnegative")
        if last_row[-1] <= 0:
            raise ValueError("last row must end with a positive entry")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "last_row", last_row)

    def to_matrix(self) -> RatMatrix:
        n = self.size
        entries = {}
        for i in range(n - 1):
            entries[(i, i)] = 1
            for offset, magnitude in enumerate(self.upper[i]):
                if magnitude:
                    entries[(i, i + 1 + offset)] = -magnitude
        for j, value in enumerate(self.last_row):
            if value:
                entries[(n - 1, j)] = value
        return RatMatrix(n, n, entries)


@dataclass(frozen=True)
class SnCheck:
    det: Fraction
    alpha_last: int
    equal: bool
    positive: bool


def sn_alpha(matrix: SnMatrix) -> tuple:
    """The accumulation sequence: alpha_j adds the bottom entry to the
    upper-magnitude-weighted sum of all earlier alphas."""
    n = matrix.size
    alpha = [0] * n
    for j in range(n):
        total = matrix.last_row[j]
        for i in range(j):
            total += alpha[i] * matrix.upper[i][j - i - 1]
        alpha[j] = total
    return tuple(alpha)


def sn_det_identity(matrix: SnMatrix) -> SnCheck:
    """Compare the exact determinant against the accumulation value."""
    det = exactla.determinant(matrix.to_matrix())
    alpha_last = sn_alpha(matrix)[-1]
    return SnCheck(det, alpha_last, det == alpha_last, det > 0)


def random_sn(size: int, max_entry: int, seed) -> SnMatrix:
    """Uniformly random instance; ``seed`` may be an int, a string, or a
    ``random.Random`` to draw from."""
    if size < 2:
        raise ValueError("size must be at least 2")
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    upper = tuple(
        tuple(rng.randint(0, max_entry) for _ in range(size - 1 - i))
        for i in range(size - 1)
    )
    last = [rng.randint(0, max_entry) for _ in range(size - 1)]
    last.append(rng.randint(1, max_entry))
    return SnMatrix(size, upper, tuple(last))
