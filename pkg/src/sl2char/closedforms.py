"""
Closed character and multiplicity formulas for tensor products and hooks.

Every function here evaluates a formula directly; the cvmod and charlat routes
serve as the independent check.
"""
from __future__ import annotations

from dataclasses import dataclass

import sympy

from .charlat import (
    FlagDecomposition,
    GradedCharacter,
    IrreducibleDecomposition,
    character_sum,
    irr_char,
)
from .cvmod import (
    Partition,
    cv_char,
    cv_dimension,
    hook_partition,
    truncated_weyl_partition,
    weyl_char,
)
from .qalg import ZERO, QPoly, binomial, falling_q_product, qbinom

__all__ = [
    "ShapeNotHook",
    "OrderViolation",
    "FiltrationQuotient",
    "BinomialMatrix",
    "HOOK_FAMILIES",
    "classify_hook",
    "hook_char_closed",
    "weyl_tensor_irr_quotients",
    "weyl_tensor_irr_multiplicities",
    "char_2a1b_weyl_form",
    "char_2a1b_demazure_form",
    "tensor_weyl_weyl_pieri_form",
    "tensor_weyl_weyl_truncated_form",
    "weyl_tensor_level2_multiplicities",
    "weyl_tensor_weyl_quotients",
    "quotient_character",
    "matrix_A",
    "matrix_B",
    "is_invertible",
    "dim_sum_check",
    "arm_hook_recursion",
    "leg_hook_recursion",
]


class ShapeNotHook(ValueError):
    pass


class OrderViolation(ValueError):
    """A formula that needs n >= m was called with n < m."""


@dataclass(frozen=True)
class FiltrationQuotient:
    shift: int
    partition: Partition

    def character(self) -> GradedCharacter:
        return cv_char(self.partition).shift(self.shift)

    def to_json(self) -> dict:
        return {"shift": self.shift, "partition": str(self.partition)}


def quotient_character(quotients) -> GradedCharacter:
    return character_sum(fq.character() for fq in quotients)


# --- hooks ------------------------------------------------------------------

#: family name -> the shape V(first, 1^ones) it describes, in terms of (k, r)
HOOK_FAMILIES = {
    "arm": "V(k+r, 1^k), r >= 0",
    "balanced": "V(k, 1^(k+1)), k >= 1",
    "leg": "V(k, 1^(k+r)), k >= 1, r >= 2",
}


def classify_hook(xi: Partition) -> tuple[str, int, int]:
    """
    Match a hook partition (a, 1^b) to (family, k, r).

    >>> classify_hook(Partition((3, 1)))
    ('arm', 1, 2)
    >>> classify_hook(Partition((1, 1, 1, 1)))
    ('leg', 1, 2)
    """
    xi = Partition(xi)
    if not xi:
        return "arm", 0, 0
    a, rest = xi[0], xi[1:]
    if any(p != 1 for p in rest):
        raise ShapeNotHook(f"{tuple(xi)} is not a hook")
    b = len(rest)
    if a >= b:
        return "arm", b, a - b
    if b == a + 1:
        return "balanced", a, 1
    return "leg", a, b - a


def hook_char_closed(family: str, k: int, r: int = 0) -> GradedCharacter:
    """Graded character of a hook CV module as a q-binomial sum of irreducibles."""
    if family == "arm":
        if k < 0 or r < 0:
            raise ShapeNotHook(f"arm family needs k, r >= 0, got ({k}, {r})")
        return character_sum(irr_char(r + 2 * (k - p)) * qbinom(k, p).shift(p) for p in range(k + 1))
    if family == "balanced":
        if k < 1:
            raise ShapeNotHook(f"balanced family needs k >= 1, got {k}")
        return character_sum(irr_char(1 + 2 * p) * qbinom(k + 1, p + 1).shift(k - p) for p in range(k + 1))
    if family == "leg":
        if k < 1 or r < 2:
            raise ShapeNotHook(f"leg family needs k >= 1 and r >= 2, got ({k}, {r})")
        n = k + r
        terms = [irr_char(r + 2 * (k - p)) * qbinom(n, p).shift(p) for p in range(k + 1)]
        for p in range(k + 1, (2 * k + r) // 2 + 1):
            mult = qbinom(n, p) - qbinom(n, p - k - 1).shift(2 * k + r + 1 - 2 * p)
            terms.append(irr_char(r - 2 * (p - k)) * mult.shift(p))
        return character_sum(terms)
    raise ShapeNotHook(f"unknown hook family {family!r}")


def arm_hook_recursion(k: int, r: int) -> GradedCharacter:
    """Right side of the recursion for ch V(k+r, 1^k), k >= 1, r >= 0."""
    if k < 1 or r < 0:
        raise ValueError(f"need k >= 1 and r >= 0, got ({k}, {r})")
    inner = character_sum([irr_char(r)] + [cv_char(Partition((i + r,) + (1,) * (i - 2))) for i in range(2, k + 1)])
    return cv_char(Partition((k + r + 1,) + (1,) * (k - 1))) + inner.shift(k)


def leg_hook_recursion(k: int, r: int) -> GradedCharacter:
    """Right side of the recursion for ch V(k, 1^(k+r)), k >= 1, r >= 0."""
    if k < 1 or r < 0:
        raise ValueError(f"need k >= 1 and r >= 0, got ({k}, {r})")
    inner = character_sum([weyl_char(r)] + [cv_char(Partition((i,) + (1,) * (i + r - 2))) for i in range(2, k + 1)])
    return cv_char(Partition((k + 1,) + (1,) * (k + r - 1))) + inner.shift(k + r)


# --- W_loc(m) (x) V(n) ------------------------------------------------------


def weyl_tensor_irr_quotients(m: int, n: int) -> list[Partition]:
    """Partitions of the successive CV quotients of W_loc(m) (x) V(n)."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got ({m}, {n})")
    if m > n:
        return [hook_partition(m - n + 2 * i, m - n + i) for i in range(n + 1)]
    return [Partition.canonical((n - m,))] + [hook_partition(n - m + 2 * i, i) for i in range(1, m + 1)]


def weyl_tensor_irr_multiplicities(m: int, n: int) -> IrreducibleDecomposition:
    """[W_loc(m) (x) V(n) : V(m+n-2i)]_q."""
    if m < 1 or n < 1:
        raise ValueError(f"need m, n >= 1, got ({m}, {n})")
    parts = {}
    if m <= n:
        for i in range(m + 1):
            parts[m + n - 2 * i] = qbinom(m, i)
    else:
        for i in range(n + 1):
            parts[m + n - 2 * i] = qbinom(m, i)
        for i in range(n + 1, (n + m) // 2 + 1):
            parts[m + n - 2 * i] = qbinom(m, i) - qbinom(m, i - n - 1)
    return IrreducibleDecomposition(parts)


def dim_sum_check(m: int, n: int) -> bool:
    total = sum(cv_dimension(xi) for xi in weyl_tensor_irr_quotients(m, n))
    return total == 2**m * (n + 1)


# --- V(2^a, 1^b) -------------------------------------------------------------


def char_2a1b_weyl_form(a: int, b: int) -> GradedCharacter:
    """Alternating sum of local Weyl characters equal to ch V(2^a, 1^b)."""
    if a < 0 or b < 0:
        raise ValueError(f"need a, b >= 0, got ({a}, {b})")
    terms = []
    for k in range(a + 1):
        coeff = qbinom(a, k).shift(k * (a + b) - k * (k - 1) // 2)
        terms.append(weyl_char(b + 2 * a - 2 * k) * (coeff if k % 2 == 0 else -coeff))
    return character_sum(terms)


def char_2a1b_demazure_form(a: int, b: int) -> FlagDecomposition:
    """Level-2 Demazure multiplicities in V(2^a, 1^b)."""
    if a < 0 or b < 0:
        raise ValueError(f"need a, b >= 0, got ({a}, {b})")
    half_down, half_up = b // 2, (b + 1) // 2
    return FlagDecomposition(
        2, {2 * a + b - 2 * k: qbinom(half_down, k).shift(k * (a + half_up)) for k in range(half_down + 1)}
    )


# --- W_loc(n) (x) W_loc(m) ---------------------------------------------------


def tensor_weyl_weyl_pieri_form(n: int, m: int) -> GradedCharacter:
    if n < 0 or m < 0:
        raise ValueError(f"need n, m >= 0, got ({n}, {m})")
    return character_sum(
        weyl_char(n + m - 2 * i) * (qbinom(n, i) * qbinom(m, i) * falling_q_product(i)) for i in range(min(n, m) + 1)
    )


def _check_order(n: int, m: int) -> None:
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    if n < m:
        raise OrderViolation(f"formula needs n >= m, got n={n}, m={m}")


def tensor_weyl_weyl_truncated_form(n: int, m: int) -> GradedCharacter:
    _check_order(n, m)
    return character_sum(cv_char(Partition((2,) * (m - k) + (1,) * (n - m))) * qbinom(m, k) for k in range(m + 1))


def weyl_tensor_level2_multiplicities(n: int, m: int) -> FlagDecomposition:
    """[W_loc(n) (x) W_loc(m) : D(2, m+n-2s)]_q for n >= m."""
    _check_order(n, m)
    lo, hi = (n - m) // 2, (n - m + 1) // 2
    parts: dict[int, QPoly] = {}
    for s in range(lo + 1):
        total = ZERO
        for k in range(min(s, m) + 1):
            total = total + (qbinom(m, k) * qbinom(lo, s - k)).shift((s - k) * (m - k + hi))
        parts[m + n - 2 * s] = total
    for j in range(1, m + 1):
        total = ZERO
        for k in range(min(m - j, lo) + 1):
            total = total + (qbinom(m, k + j) * qbinom(lo, lo - k)).shift((lo - k) * (m - k - j + hi))
        parts[m + n - 2 * (j + lo)] = total
    return FlagDecomposition(2, parts)


def weyl_tensor_weyl_quotients(n: int, m: int) -> list[FiltrationQuotient]:
    """
    Truncated-Weyl quotients of W_loc(n) (x) W_loc(m), n >= m >= 1.

    Layer r contributes W_loc([m+n-2r], n-r) once for every graded basis
    vector counted by [m r]_q, at that vector's grade.
    """
    _check_order(n, m)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    out = []
    for r in range(m + 1):
        xi = truncated_weyl_partition(m + n - 2 * r, n - r)
        for g, c in enumerate(qbinom(m, r).coeffs):
            out.extend([FiltrationQuotient(g, xi)] * c)
    return out


# --- binomial matrices -------------------------------------------------------


@dataclass(frozen=True)
class BinomialMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def determinant(self) -> int:
        if not self.entries:
            return 1
        return int(sympy.Matrix(self.entries).det(method="bareiss"))


def _pascal_block(r: int, i: int) -> BinomialMatrix:
    # row a, column b holds C(r+b, a); C(x, y) = 0 for y > x gives B's zero wedge
    return BinomialMatrix(tuple(tuple(binomial(r + b, a) for b in range(i)) for a in range(i)))


def matrix_A(r: int, i: int) -> BinomialMatrix:
    if not r >= i >= 1:
        raise ValueError(f"A(r, i) needs r >= i >= 1, got ({r}, {i})")
    return _pascal_block(r, i)


def matrix_B(r: int, i: int) -> BinomialMatrix:
    if not 1 <= r < i:
        raise ValueError(f"B(r, i) needs 1 <= r < i, got ({r}, {i})")
    return _pascal_block(r, i)


def is_invertible(M: BinomialMatrix) -> bool:
    return M.determinant() != 0
