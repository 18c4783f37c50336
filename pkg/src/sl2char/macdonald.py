"""
Two-variable symmetric polynomials over Q(q) and the t = 0 Macdonald theory.

A :class:`SymPoly2` stores one coefficient per monomial-symmetric orbit:
the key (a, b) with a >= b stands for x1^a x2^b + x1^b x2^a when a != b and
for x1^a x2^a when a == b.
"""
from __future__ import annotations

from collections.abc import Mapping

from .charlat import GradedCharacter
from .qalg import ONE, QPoly, QRat, qpochhammer

__all__ = [
    "SymPoly2",
    "InconsistentPieri",
    "NonPolynomialCoefficient",
    "gm",
    "gm_series",
    "macdonald_p",
    "pieri_expand",
    "pieri_arm_leg",
    "pieri_linear_solve",
    "sympoly_to_character",
    "arm",
    "leg",
]


class InconsistentPieri(ArithmeticError):
    pass


class NonPolynomialCoefficient(ValueError):
    pass


class SymPoly2:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], QRat | QPoly | int] = ()):
        clean: dict[tuple[int, int], QRat] = {}
        for (a, b), c in dict(terms).items():
            if a < b:
                a, b = b, a
            if b < 0:
                raise ValueError(f"negative exponent in {(a, b)}")
            c = QRat.coerce(c)
            if not c.is_zero():
                clean[(a, b)] = clean[(a, b)] + c if (a, b) in clean else c
        clean = {k: v for k, v in clean.items() if not v.is_zero()}
        object.__setattr__(self, "terms", dict(sorted(clean.items(), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("SymPoly2 is immutable")

    def __reduce__(self):
        return (SymPoly2, (self.terms,))

    @classmethod
    def from_monomials(cls, mono: Mapping[tuple[int, int], QRat]) -> SymPoly2:
        """Fold a full monomial expansion back to orbit representatives, checking symmetry."""
        out = {}
        for (a, b), c in mono.items():
            if c.is_zero():
                continue
            if mono.get((b, a), QRat(0)) != c:
                raise ValueError(f"expansion is not symmetric at {(a, b)}")
            if a >= b:
                out[(a, b)] = c
        return cls(out)

    def monomials(self) -> dict[tuple[int, int], QRat]:
        out = {}
        for (a, b), c in self.terms.items():
            out[(a, b)] = c
            out[(b, a)] = c
        return out

    def __add__(self, other: SymPoly2) -> SymPoly2:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return SymPoly2(out)

    def __sub__(self, other: SymPoly2) -> SymPoly2:
        return self + other.scale(-1)

    def scale(self, c) -> SymPoly2:
        c = QRat.coerce(c)
        return SymPoly2({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> SymPoly2:
        if not isinstance(other, SymPoly2):
            return self.scale(other)
        acc: dict[tuple[int, int], QRat] = {}
        for (a, b), c in self.monomials().items():
            for (d, e), f in other.monomials().items():
                key = (a + d, b + e)
                acc[key] = acc[key] + c * f if key in acc else c * f
        return SymPoly2.from_monomials(acc)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymPoly2):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.terms.items())
        return "SymPoly2({" + body + "})"

    def to_json(self) -> dict:
        return {"terms": [{"exponents": list(k), "coeff": v.to_json()} for k, v in self.terms.items()]}


def gm(m: int) -> SymPoly2:
    """g_m(x; q, 0) = sum over a + b = m of x1^a x2^b / ((q;q)_a (q;q)_b)."""
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    return SymPoly2({(a, m - a): QRat(1, qpochhammer(a) * qpochhammer(m - a)) for a in range((m + 1) // 2, m + 1)})


def gm_series(m: int) -> SymPoly2:
    """
    g_m as the y^m coefficient of the product over i of 1/(x_i y; q)_inf,
    each factor truncated to sum_{k <= m} (x_i y)^k / (q;q)_k.
    """
    if m < 0:
        raise ValueError(f"need m >= 0, got {m}")
    # factor for x1: y-degree k -> monomial x1^k; same for x2
    f1 = {k: QRat(1, qpochhammer(k)) for k in range(m + 1)}
    f2 = dict(f1)
    mono: dict[tuple[int, int], QRat] = {}
    for i, c in f1.items():
        for j, d in f2.items():
            if i + j == m:
                mono[(i, j)] = c * d
    return SymPoly2.from_monomials(mono)


def macdonald_p(lam: tuple[int, int]) -> SymPoly2:
    """P_lambda(x1, x2; q, 0) for a partition with at most two rows."""
    l1, l2 = (tuple(lam) + (0, 0))[:2]
    if l1 < l2 or l2 < 0:
        raise ValueError(f"not a two-row partition: {lam}")
    m = l1 - l2
    row = gm(m).scale(qpochhammer(m))
    for c in row.terms.values():
        if not c.is_polynomial():
            raise AssertionError(f"(q;q)_{m} g_{m} has a non-polynomial coefficient {c}")
    return SymPoly2({(a + l2, b + l2): c for (a, b), c in row.terms.items()})


def arm(lam: tuple[int, ...], i: int, j: int) -> int:
    """Cells strictly right of (i, j) in row i; cells are 1-indexed."""
    return lam[i - 1] - j


def leg(lam: tuple[int, ...], i: int, j: int) -> int:
    """Cells strictly below (i, j) in column j."""
    return sum(1 for row in lam[i:] if row >= j)


def _in_diagram(lam: tuple[int, ...], i: int, j: int) -> bool:
    return 1 <= i <= len(lam) and 1 <= j <= lam[i - 1]


def _b_t0(lam: tuple[int, ...], i: int, j: int) -> QRat:
    # b_lam(s; q, t) = (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l), evaluated at t = 0
    if not _in_diagram(lam, i, j):
        return QRat(1)
    a, l = arm(lam, i, j), leg(lam, i, j)
    if l > 0:
        return QRat(1)
    return QRat(1, ONE - QPoly.monomial(a + 1))


def _two_row_shapes(n: int, m: int) -> list[tuple[int, int]]:
    # horizontal strips of size m on top of (n), at most two rows
    return [(n + m - k, k) for k in range(min(m, n) + 1)]


def pieri_arm_leg(n: int, m: int) -> dict[tuple[int, int], QRat]:
    """phi_{lam/(n)} from the product of b_lam(s)/b_(n)(s) over columns meeting the skew shape."""
    inner = (n,)
    out = {}
    for lam in _two_row_shapes(n, m):
        skew_cols = {j for i in (1, 2) for j in range(1, lam[i - 1] + 1) if not _in_diagram(inner, i, j)}
        phi = QRat(1)
        for j in skew_cols:
            for i in (1, 2):
                if _in_diagram(lam, i, j):
                    phi = phi * _b_t0(lam, i, j) / _b_t0(inner, i, j)
        out[lam] = phi
    return out


def pieri_linear_solve(n: int, m: int) -> dict[tuple[int, int], QRat]:
    """phi_{lam/(n)} by peeling P_lam off P_(n) g_m from the top monomial down."""
    residual = macdonald_p((n, 0)) * gm(m)
    out = {}
    while not residual.is_zero():
        lead, c = next(iter(residual.terms.items()))
        out[lead] = c
        residual = residual - macdonald_p(lead).scale(c)
    return out


def pieri_expand(n: int, m: int) -> dict[tuple[int, int], QRat]:
    """Pieri coefficients of P_(n) g_m in the P basis; both routes must agree."""
    if not n >= m >= 0:
        raise ValueError(f"need n >= m >= 0, got ({n}, {m})")
    a = pieri_arm_leg(n, m)
    b = pieri_linear_solve(n, m)
    keys = set(a) | set(b)
    for lam in keys:
        if a.get(lam, QRat(0)) != b.get(lam, QRat(0)):
            raise InconsistentPieri(f"routes disagree at {lam}: {a.get(lam)} vs {b.get(lam)}")
    return dict(sorted(((k, v) for k, v in a.items() if not v.is_zero()), reverse=True))


def sympoly_to_character(p: SymPoly2) -> GradedCharacter:
    """Send x1^a x2^b to weight a - b; coefficients must be polynomials in q."""
    out: dict[int, QPoly] = {}
    for (a, b), c in p.monomials().items():
        if not c.is_polynomial():
            raise NonPolynomialCoefficient(f"coefficient {c} of x1^{a} x2^{b}")
        w = a - b
        out[w] = out.get(w, QPoly()) + c.as_qpoly()
    return GradedCharacter(out)
