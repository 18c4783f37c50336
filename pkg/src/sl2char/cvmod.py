"""
Chari-Venkatesh modules V(xi) for sl2[t].

Characters come from two independent routes: the short exact sequence
recursion (:func:`cv_char`) and direct enumeration of the monomial basis
indexed by J(xi) (:func:`basis_char`).
"""
from __future__ import annotations

import json
import threading
from collections.abc import Iterable
from pathlib import Path

from .charlat import TRIVIAL, GradedCharacter, character_sum, irr_char
from .qalg import ONE, QPoly, qbinom

__all__ = [
    "Partition",
    "SingletonPartition",
    "cv_dimension",
    "ses_transforms",
    "cv_char",
    "enumerate_basis",
    "basis_char",
    "weyl_partition",
    "demazure_partition",
    "truncated_weyl_partition",
    "hook_partition",
    "weyl_char",
    "demazure_char",
    "partitions",
]


class SingletonPartition(ValueError):
    """The exact-sequence transforms need at least two parts."""


class Partition(tuple):
    """
    Weakly decreasing tuple of positive integers.

    ``Partition.canonical`` sorts and drops zeros; the plain constructor
    insists on already-canonical input.

    >>> Partition.parse("2,2,1")
    Partition(2, 2, 1)
    >>> Partition.canonical([1, 0, 3])
    Partition(3, 1)
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def canonical(cls, parts: Iterable[int]) -> Partition:
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        return cls(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def size(self) -> int:
        return sum(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"


def partitions(n: int, max_part: int | None = None) -> Iterable[Partition]:
    """All partitions of n with parts at most max_part, in reverse lexicographic order."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield Partition(prefix)
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p, prefix + (p,))

    yield from rec(n, max_part, ())


def cv_dimension(xi: Partition) -> int:
    out = 1
    for n in xi:
        out *= n + 1
    return out


def ses_transforms(xi: Partition) -> tuple[Partition, Partition, int]:
    """
    Return (xi_plus, xi_minus, shift) for the exact sequence
    0 -> tau_shift V(xi_minus) -> V(xi) -> V(xi_plus) -> 0.
    """
    k = len(xi)
    if k <= 1:
        raise SingletonPartition(f"need at least two parts, got {tuple(xi)}")
    head, a, b = xi[:-2], xi[-2], xi[-1]
    plus = Partition.canonical(head + (a + 1, b - 1))
    minus = Partition.canonical(head + (a - b,))
    return plus, minus, (k - 1) * b


_cv_lock = threading.Lock()
_cv_memo: dict[Partition, GradedCharacter] = {}


def cv_char(xi: Partition) -> GradedCharacter:
    """Graded character of V(xi) by the exact-sequence recursion, memoized."""
    xi = Partition(xi)
    hit = _cv_memo.get(xi)
    if hit is not None:
        return hit
    if len(xi) == 0:
        value = TRIVIAL
    elif len(xi) == 1:
        value = irr_char(xi[0])
    else:
        plus, minus, s = ses_transforms(xi)
        value = cv_char(plus) + cv_char(minus).shift(s)
    with _cv_lock:
        return _cv_memo.setdefault(xi, value)


def clear_cache() -> None:
    with _cv_lock:
        _cv_memo.clear()


def save_cache(path: str | Path) -> None:
    """Write the cv_char memo table to a JSON file."""
    with _cv_lock:
        data = {str(xi): ch.to_json() for xi, ch in _cv_memo.items()}
    Path(path).write_text(json.dumps(data, sort_keys=True))


def load_cache(path: str | Path) -> int:
    """Merge a memo table written by :func:`save_cache`; returns the entry count."""
    data = json.loads(Path(path).read_text())
    with _cv_lock:
        for key, ch in data.items():
            _cv_memo.setdefault(Partition.parse(key), GradedCharacter.from_json(ch))
    return len(data)


def enumerate_basis(xi: Partition) -> list[tuple[int, ...]]:
    """
    All exponent tuples (i_1, ..., i_k) indexing the monomials
    y_0^{i_1} ... y_{k-1}^{i_k} v_xi of the basis, zero tuple included.

    A tuple is kept when, for every 2 <= r <= k+1 and 1 <= j <= r-1,
        j*i_{r-1} + (j+1)*i_r + 2*(i_{r+1} + ... + i_k) <= n_{r-j} + ... + n_k
    with i_{k+1} = 0.
    """
    xi = Partition(xi)
    k = len(xi)
    if k == 0:
        return [()]
    n = (0,) + tuple(xi)
    # tail[p] = n_p + ... + n_k
    tail = [0] * (k + 2)
    for p in range(k, 0, -1):
        tail[p] = tail[p + 1] + n[p]
    idx = [0] * (k + 2)
    out: list[tuple[int, ...]] = []

    def ok(s: int, suffix: int) -> bool:
        # constraints with r = s + 1; suffix = i_{s+2} + ... + i_k
        r = s + 1
        for j in range(1, r):
            if j * idx[s] + (j + 1) * idx[r] + 2 * suffix > tail[r - j]:
                return False
        return True

    def rec(s: int, suffix: int):
        # suffix = i_{s+2} + ... + i_k, with i_{s+1} already placed
        if s == 0:
            out.append(tuple(idx[1:k + 1]))
            return
        for v in range(tail[s] + 1):
            idx[s] = v
            if not ok(s, suffix):
                # every constraint is increasing in i_s
                break
            rec(s - 1, suffix + idx[s + 1])
        idx[s] = 0

    rec(k, 0)
    out.sort()
    return out


def basis_char(xi: Partition) -> GradedCharacter:
    """Character read off the monomial basis: weight |xi| - 2*sum(i), grade sum (r-1)*i_r."""
    xi = Partition(xi)
    size = xi.size
    acc: dict[int, list[int]] = {}
    for tup in enumerate_basis(xi):
        w = size - 2 * sum(tup)
        g = sum(r * i for r, i in enumerate(tup))
        row = acc.setdefault(w, [])
        if len(row) <= g:
            row.extend([0] * (g + 1 - len(row)))
        row[g] += 1
    return GradedCharacter({w: QPoly(row) for w, row in acc.items()})


def weyl_partition(m: int) -> Partition:
    if m < 0:
        raise ValueError(f"weight must be nonnegative, got {m}")
    return Partition((1,) * m)


def demazure_partition(level: int, n: int) -> Partition:
    """(l^a, n0) with n = l*a + n0, 0 <= n0 < l."""
    if level < 1 or n < 0:
        raise ValueError(f"need level >= 1 and n >= 0, got ({level}, {n})")
    a, n0 = divmod(n, level)
    return Partition.canonical((level,) * a + (n0,))


def truncated_weyl_partition(m: int, N: int) -> Partition:
    """((k+1)^r, k^(N-r)) with m = N*k + r, 0 <= r < N."""
    if m < 0 or N < 0:
        raise ValueError(f"need m, N >= 0, got ({m}, {N})")
    if N == 0:
        if m:
            raise ValueError("truncation N = 0 only allows m = 0")
        return Partition()
    k, r = divmod(m, N)
    return Partition.canonical((k + 1,) * r + (k,) * (N - r))


def hook_partition(k: int, r: int) -> Partition:
    """hook(k, r) = (k - r + 1, 1^(r-1)), a partition of k into r parts."""
    if not k >= r >= 1:
        raise ValueError(f"hook needs k >= r >= 1, got ({k}, {r})")
    return Partition((k - r + 1,) + (1,) * (r - 1))


def weyl_char(m: int) -> GradedCharacter:
    """Local Weyl module character: sum over l <= m/2 of ([m l] - [m l-1]) ch V(m - 2l)."""
    if m < 0:
        raise ValueError(f"weight must be nonnegative, got {m}")
    return character_sum(irr_char(m - 2 * l) * (qbinom(m, l) - qbinom(m, l - 1)) for l in range(m // 2 + 1))


def demazure_char(level: int, n: int) -> GradedCharacter:
    return cv_char(demazure_partition(level, n))
