"""
Graded characters of sl2[t]-modules.

A graded character maps each integer weight w (the coefficient of the
fundamental weight) to a polynomial in q recording the graded dimension of the
w-weight space.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

from .qalg import ONE, ZERO, QPoly

__all__ = [
    "GradedCharacter",
    "IrreducibleDecomposition",
    "FlagDecomposition",
    "NotAModuleCharacter",
    "NoFlag",
    "irr_char",
    "tensor",
    "shift",
    "decompose_irreducible",
    "demazure_flag_decompose",
    "graded_dimension",
    "dimension",
    "character_sum",
]


class NotAModuleCharacter(ValueError):
    """Raised when a character cannot be the character of a finite-dimensional module."""


class NoFlag(ValueError):
    """
    The greedy level-l solver could not write the character as a nonnegative
    combination of level-l Demazure characters.
    """

    def __init__(self, level: int, weight: int, reason: str, multiplicity: QPoly | None = None):
        self.level = level
        self.weight = weight
        self.reason = reason
        self.multiplicity = multiplicity
        super().__init__(f"no level-{level} flag: {reason} at weight {weight}")

    def to_json(self) -> dict:
        out = {"error": "NoFlag", "level": self.level, "weight": self.weight, "reason": self.reason}
        if self.multiplicity is not None:
            out["multiplicity"] = self.multiplicity.to_json()
        return out


class GradedCharacter:
    """Immutable, finitely supported map from integer weight to nonzero QPoly."""

    __slots__ = ("_weights", "_hash")

    def __init__(self, weights: Mapping[int, QPoly | int] | Iterable[tuple[int, QPoly | int]] = ()):
        items = weights.items() if isinstance(weights, Mapping) else weights
        clean: dict[int, QPoly] = {}
        for w, p in items:
            p = QPoly.coerce(p)
            if p:
                clean[int(w)] = p
        self._weights = dict(sorted(clean.items(), reverse=True))
        self._hash = None

    @property
    def weights(self) -> dict[int, QPoly]:
        return dict(self._weights)

    def __getitem__(self, w: int) -> QPoly:
        return self._weights.get(w, ZERO)

    def __iter__(self):
        return iter(self._weights)

    def items(self):
        return self._weights.items()

    def __len__(self) -> int:
        return len(self._weights)

    def is_zero(self) -> bool:
        return not self._weights

    def top_weight(self) -> int | None:
        return next(iter(self._weights), None)

    def is_symmetric(self) -> bool:
        return all(self[-w] == p for w, p in self._weights.items())

    def is_nonnegative(self) -> bool:
        return all(p.is_nonnegative() for p in self._weights.values())

    def __add__(self, other: GradedCharacter) -> GradedCharacter:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        out = dict(self._weights)
        for w, p in other._weights.items():
            out[w] = out.get(w, ZERO) + p
        return GradedCharacter(out)

    def __neg__(self) -> GradedCharacter:
        return GradedCharacter({w: -p for w, p in self._weights.items()})

    def __sub__(self, other: GradedCharacter) -> GradedCharacter:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar) -> GradedCharacter:
        """Scale every weight space by a polynomial (or integer) in q."""
        if isinstance(scalar, GradedCharacter):
            return tensor(self, scalar)
        try:
            scalar = QPoly.coerce(scalar)
        except TypeError:
            return NotImplemented
        return GradedCharacter({w: p * scalar for w, p in self._weights.items()})

    __rmul__ = __mul__

    def shift(self, r: int) -> GradedCharacter:
        return shift(self, r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self._weights == other._weights

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._weights.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {p}" for w, p in self._weights.items())
        return "GradedCharacter({" + body + "})"

    def to_json(self) -> dict:
        return {"weights": {str(w): p.to_json() for w, p in self._weights.items()}}

    @classmethod
    def from_json(cls, data: dict) -> GradedCharacter:
        return cls({int(w): QPoly.from_json(c) for w, c in data["weights"].items()})


TRIVIAL = GradedCharacter({0: ONE})


def irr_char(k: int) -> GradedCharacter:
    """Character of ev_0 V(k): weights k, k-2, ..., -k, all in grade zero."""
    if k < 0:
        raise ValueError(f"irreducible needs k >= 0, got {k}")
    return GradedCharacter({k - 2 * i: ONE for i in range(k + 1)})


def tensor(a: GradedCharacter, b: GradedCharacter) -> GradedCharacter:
    out: dict[int, QPoly] = {}
    for u, p in a.items():
        for v, r in b.items():
            out[u + v] = out.get(u + v, ZERO) + p * r
    return GradedCharacter(out)


def shift(a: GradedCharacter, r: int) -> GradedCharacter:
    """Grade shift: multiply every weight space by q^r."""
    if r < 0:
        raise ValueError(f"negative grade shift {r}")
    return GradedCharacter({w: p.shift(r) for w, p in a.items()})


def character_sum(terms: Iterable[GradedCharacter]) -> GradedCharacter:
    out: dict[int, QPoly] = {}
    for c in terms:
        for w, p in c.items():
            out[w] = out.get(w, ZERO) + p
    return GradedCharacter(out)


def graded_dimension(c: GradedCharacter) -> QPoly:
    total = ZERO
    for p in c._weights.values():
        total = total + p
    return total


def dimension(c: GradedCharacter) -> int:
    return graded_dimension(c)(1)


def _parts_json(parts: Mapping[int, QPoly]) -> dict:
    return {str(k): p.to_json() for k, p in parts.items()}


@dataclass(frozen=True)
class IrreducibleDecomposition:
    """Graded multiplicities [M : V(k)]_q keyed by highest weight k."""

    parts: dict[int, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(k): QPoly.coerce(p) for k, p in self.parts.items()}
        object.__setattr__(self, "parts", dict(sorted(((k, p) for k, p in clean.items() if p), reverse=True)))

    def __getitem__(self, k: int) -> QPoly:
        return self.parts.get(k, ZERO)

    def recompose(self) -> GradedCharacter:
        return character_sum(irr_char(k) * p for k, p in self.parts.items())

    def is_nonnegative(self) -> bool:
        return all(p.is_nonnegative() for p in self.parts.values())

    def to_json(self) -> dict:
        return {"parts": _parts_json(self.parts)}


@dataclass(frozen=True)
class FlagDecomposition:
    """Graded multiplicities of the level-l Demazure modules D(l, s) keyed by s."""

    level: int
    parts: dict[int, QPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        clean = {int(k): QPoly.coerce(p) for k, p in self.parts.items()}
        object.__setattr__(self, "parts", dict(sorted(((k, p) for k, p in clean.items() if p), reverse=True)))

    def __getitem__(self, s: int) -> QPoly:
        return self.parts.get(s, ZERO)

    def recompose(self) -> GradedCharacter:
        from .cvmod import demazure_char

        return character_sum(demazure_char(self.level, s) * p for s, p in self.parts.items())

    def is_nonnegative(self) -> bool:
        return all(p.is_nonnegative() for p in self.parts.values())

    def to_json(self) -> dict:
        return {"level": self.level, "parts": _parts_json(self.parts)}


def decompose_irreducible(c: GradedCharacter) -> IrreducibleDecomposition:
    """
    Extract [c : V(k)]_q = c[k] - c[k+2] for k >= 0.

    Raises NotAModuleCharacter if the character is not weight-symmetric or a
    multiplicity has a negative coefficient.
    """
    if not c.is_symmetric():
        raise NotAModuleCharacter("character is not symmetric under w -> -w")
    parts = {}
    top = c.top_weight()
    # absent weights count as zero, so gaps must be scanned too
    for w in range(0, (top if top is not None else -1) + 1):
        mult = c[w] - c[w + 2]
        if not mult.is_nonnegative():
            raise NotAModuleCharacter(f"multiplicity of V({w}) is {mult}")
        parts[w] = mult
    return IrreducibleDecomposition(parts)


def demazure_flag_decompose(c: GradedCharacter, level: int) -> FlagDecomposition:
    """
    Greedy top-weight elimination against level-``level`` Demazure characters.

    Each D(l, s) has a single vector of weight s in grade zero, so the residual
    polynomial at the current top weight is exactly the multiplicity of D(l, s).
    """
    from .cvmod import demazure_char

    if level < 1:
        raise ValueError(f"level must be positive, got {level}")
    residual = c
    parts: dict[int, QPoly] = {}
    while not residual.is_zero():
        s = residual.top_weight()
        p = residual[s]
        if s < 0:
            raise NoFlag(level, s, "negative-weight residual", p)
        if not p.is_nonnegative():
            raise NoFlag(level, s, "negative multiplicity", p)
        parts[s] = p
        residual = residual - demazure_char(level, s) * p
    return FlagDecomposition(level, parts)
