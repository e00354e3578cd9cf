"""Simplicial operators.

A monotone map ``[m] -> [n]`` is stored as its image tuple
``(a(0), ..., a(m))``.  Most of the package works directly with these
tuples; :class:`SimplicialOperator` wraps one together with its target
for callers that want an object.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

Op = tuple


def identity(n: int) -> Op:
    return tuple(range(n + 1))


def face(i: int, n: int) -> Op:
    """The coface ``[n-1] -> [n]`` whose image omits ``i``."""
    if not 0 <= i <= n:
        raise ValueError(f"face index {i} out of range for [{n}]")
    return tuple(j if j < i else j + 1 for j in range(n))


def degeneracy(i: int, n: int) -> Op:
    """The codegeneracy ``[n+1] -> [n]`` hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError(f"degeneracy index {i} out of range for [{n}]")
    return tuple(j if j <= i else j - 1 for j in range(n + 2))


def const(v: int, m: int) -> Op:
    return (v,) * (m + 1)


def compose(alpha: Op, beta: Op) -> Op:
    """``alpha . beta`` (apply ``beta`` first)."""
    return tuple(alpha[b] for b in beta)


def is_monotone(op) -> bool:
    return all(a <= b for a, b in zip(op, op[1:]))


def is_mono(op) -> bool:
    return all(a < b for a, b in zip(op, op[1:]))


def is_epi(op) -> bool:
    return op[0] == 0 and all(b - a in (0, 1) for a, b in zip(op, op[1:]))


def is_identity(op) -> bool:
    return all(a == i for i, a in enumerate(op))


@lru_cache(maxsize=None)
def factor(op: Op) -> tuple[Op, Op]:
    """Split ``op`` as ``mono . epi``; returns ``(epi, mono)``."""
    mono = []
    epi = []
    for a in op:
        if not mono or mono[-1] != a:
            mono.append(a)
        epi.append(len(mono) - 1)
    return tuple(epi), tuple(mono)


@lru_cache(maxsize=None)
def epis(n: int, k: int) -> tuple[Op, ...]:
    """All surjections ``[n] -> [k]`` in lexicographic order."""
    if k > n or k < 0:
        return ()
    out = []
    for jumps in combinations(range(1, n + 1), k):
        js = set(jumps)
        img, v = [0], 0
        for i in range(1, n + 1):
            if i in js:
                v += 1
            img.append(v)
        out.append(tuple(img))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def monotone_maps(m: int, n: int) -> tuple[Op, ...]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order."""
    out = []

    def rec(prefix, lo):
        if len(prefix) == m + 1:
            out.append(tuple(prefix))
            return
        for v in range(lo, n + 1):
            rec(prefix + [v], v)

    rec([], 0)
    return tuple(out)


def dual(op: Op, n: int) -> Op:
    """The conjugate ``i -> n - op(m - i)`` of ``op : [m] -> [n]``."""
    m = len(op) - 1
    return tuple(n - op[m - i] for i in range(m + 1))


def collapse_common(ops) -> tuple[Op, tuple]:
    """Largest common epi factor of a family of maps out of the same ``[m]``.

    Returns ``(eta, reduced)`` with ``ops[j] == compose(reduced[j], eta)`` and
    ``reduced`` jointly injective on consecutive vertices.
    """
    ops = list(ops)
    m = len(ops[0]) - 1
    eta = [0]
    for i in range(1, m + 1):
        same = all(o[i] == o[i - 1] for o in ops)
        eta.append(eta[-1] if same else eta[-1] + 1)
    eta = tuple(eta)
    reduced = []
    for o in ops:
        r = [None] * (eta[-1] + 1)
        for i, e in enumerate(eta):
            r[e] = o[i]
        reduced.append(tuple(r))
    return eta, tuple(reduced)


@dataclass(frozen=True)
class SimplicialOperator:
    image: tuple
    target: int

    def __post_init__(self):
        if not self.image:
            raise ValueError("operator needs a nonempty domain")
        if not is_monotone(self.image):
            raise ValueError(f"{self.image} is not monotone")
        if self.image[-1] > self.target or self.image[0] < 0:
            raise ValueError(f"{self.image} does not land in [{self.target}]")

    @property
    def source(self) -> int:
        return len(self.image) - 1

    @classmethod
    def identity(cls, n):
        return cls(identity(n), n)

    @classmethod
    def face(cls, i, n):
        return cls(face(i, n), n)

    @classmethod
    def degeneracy(cls, i, n):
        return cls(degeneracy(i, n), n)

    def __call__(self, i):
        return self.image[i]

    def compose(self, other: "SimplicialOperator") -> "SimplicialOperator":
        """``self . other``; ``other`` is applied first."""
        if other.target != self.source:
            raise ValueError("operators are not composable")
        return SimplicialOperator(compose(self.image, other.image), self.target)

    def factor(self):
        e, m = factor(self.image)
        return SimplicialOperator(e, e[-1]), SimplicialOperator(m, self.target)

    def dual(self):
        return SimplicialOperator(dual(self.image, self.target), self.target)

    def is_epi(self):
        return self.image[-1] == self.target and is_epi(self.image)

    def is_mono(self):
        return is_mono(self.image)
