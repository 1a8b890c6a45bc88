"""Ideals, prime ideals, congruences, quotients and the product decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .core import WajsbergTable, distance_matrix


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True, order=True)
class IdealSet:
    """A subset of the carrier stored as a bitmask (bit x set iff x is a member)."""

    n: int
    mask: int

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "IdealSet":
        mask = 0
        for x in members:
            if not 0 <= x < n:
                raise ValueError(f"element {x} outside carrier of size {n}")
            mask |= 1 << x
        return cls(n, mask)

    @classmethod
    def from_labels(cls, W: WajsbergTable, labels: Iterable[str]) -> "IdealSet":
        return cls.of(W.n, W.indices(labels))

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if self.mask >> x & 1)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __and__(self, other: "IdealSet") -> "IdealSet":
        return IdealSet(self.n, self.mask & other.mask)

    def labels(self, W: WajsbergTable) -> tuple[str, ...]:
        return tuple(W.labels[x] for x in self.members)

    def format(self, W: WajsbergTable) -> str:
        return "{" + ",".join(self.labels(W)) + "}"


def _as_ideal(W: WajsbergTable, S) -> IdealSet:
    if isinstance(S, IdealSet):
        return S
    if isinstance(S, int):
        return IdealSet(W.n, S)
    return IdealSet.of(W.n, S)


class _Masks:
    """Per-table bitmask helpers shared by the ideal routines."""

    def __init__(self, W: WajsbergTable):
        self.W = W
        n = W.n
        leq = W.leq
        self.down = [sum(1 << y for y in range(n) if leq[y, x]) for x in range(n)]
        self.plus = W.op[W.complements, :].tolist()
        self.zero_bit = 1 << W.zero

    def is_ideal(self, mask: int) -> bool:
        if not mask & self.zero_bit:
            return False
        members = [x for x in range(self.W.n) if mask >> x & 1]
        for x in members:
            if self.down[x] & ~mask:
                return False
        plus = self.plus
        for x in members:
            row = plus[x]
            for y in members:
                if not mask >> row[y] & 1:
                    return False
        return True


def is_ideal(W: WajsbergTable, S) -> bool:
    """theta in S, S downward closed, and x' o y in S for all x, y in S."""
    return _Masks(W).is_ideal(_as_ideal(W, S).mask)


def enumerate_ideals(W: WajsbergTable, proper: bool = False) -> list[IdealSet]:
    """All ideals in ascending bitmask order.

    Every subset containing theta is tested, in vectorised chunks: first
    downward closure, then closure under x' o y.  With ``proper`` the trivial
    ideal ``{theta}`` and the whole carrier are left out.
    """
    n = W.n
    rest = np.array([x for x in range(n) if x != W.zero], dtype=np.int64)
    leq = W.leq
    plus = W.op[W.complements, :]
    full = (1 << n) - 1
    zero_bit = 1 << W.zero
    chunk = 1 << 14
    found: list[int] = []
    total = 1 << len(rest)
    for start in range(0, total, chunk):
        sub = np.arange(start, min(start + chunk, total), dtype=np.int64)
        member = np.zeros((len(sub), n), dtype=bool)
        member[:, W.zero] = True
        member[:, rest] = (sub[:, None] >> np.arange(len(rest))) & 1 == 1
        # downward closed: every y below a member is a member
        below = (member.astype(np.int64) @ leq.T.astype(np.int64)) > 0
        ok = ~np.any(below & ~member, axis=1)
        for x in range(n):
            if not ok.any():
                break
            for y in range(n):
                need = ok & member[:, x] & member[:, y]
                ok &= ~need | member[:, plus[x, y]]
        masks = (member[ok].astype(np.int64) << np.arange(n)).sum(axis=1)
        found.extend(int(m) for m in masks)
    found.sort()
    if proper:
        found = [m for m in found if m not in (zero_bit, full)]
    return [IdealSet(n, m) for m in found]


def is_prime_ideal(W: WajsbergTable, I, literal: bool = False) -> bool:
    """For all x, y: (x o y)' in I or (y o x)' in I.

    ``literal=True`` restricts x and y to members of I instead of the whole
    carrier.  That reading holds for every ideal and is kept only for audits.
    """
    I = _as_ideal(W, I)
    inside = np.array([x in I for x in range(W.n)])
    cop = W.complements[W.op]
    ok = inside[cop] | inside[cop.T]
    if literal:
        m = np.array(I.members)
        return bool(np.all(ok[np.ix_(m, m)]))
    return bool(np.all(ok))


def prime_ideals(W: WajsbergTable) -> list[IdealSet]:
    return [I for I in enumerate_ideals(W) if is_prime_ideal(W, I)]


def congruence(W: WajsbergTable, I) -> list[tuple[int, ...]]:
    """Blocks of x ~ y iff (x o y) o (y o x)' lies in I, ordered by least member."""
    I = _as_ideal(W, I)
    inside = np.array([x in I for x in range(W.n)])
    rel = inside[distance_matrix(W)]
    n = W.n
    if not (np.all(np.diag(rel)) and np.array_equal(rel, rel.T)):
        raise InvariantError("congruence relation is not reflexive and symmetric")
    blocks: list[tuple[int, ...]] = []
    seen = set()
    for x in range(n):
        if x in seen:
            continue
        block = tuple(int(y) for y in np.flatnonzero(rel[x]))
        for y in block:
            if not np.array_equal(rel[y], rel[x]):
                raise InvariantError("congruence relation is not transitive")
        seen.update(block)
        blocks.append(block)
    cls = np.empty(n, dtype=np.int64)
    for k, block in enumerate(blocks):
        cls[list(block)] = k
    # compatibility with o (the complement is x o theta, so it follows)
    image = cls[W.op]
    for block in blocks:
        rows = image[list(block)]
        if np.any(rows != rows[0]) or np.any(image[:, list(block)] != image[:, [block[0]]]):
            raise InvariantError("relation is not compatible with the operation")
    if set(blocks[cls[W.zero]]) != set(I.members):
        raise InvariantError("class of theta differs from the ideal")
    return blocks


@dataclass(frozen=True)
class QuotientAlgebra:
    classes: tuple[tuple[int, ...], ...]
    table: WajsbergTable
    projection: tuple[int, ...]

    def block_labels(self, W: WajsbergTable) -> list[tuple[str, ...]]:
        return [tuple(W.labels[x] for x in block) for block in self.classes]


def quotient(W: WajsbergTable, I) -> QuotientAlgebra:
    """W/I with [x] o [y] = [x o y].

    A block is named after the bottom or the unit when it holds one of them,
    otherwise after its first member.
    """
    I = _as_ideal(W, I)
    if not is_ideal(W, I):
        raise ValueError(f"{I.format(W)} is not an ideal")
    blocks = congruence(W, I)
    proj = np.empty(W.n, dtype=np.int64)
    for k, block in enumerate(blocks):
        proj[list(block)] = k
    reps = [block[0] for block in blocks]
    op = proj[W.op[np.ix_(reps, reps)]]
    names = []
    for block in blocks:
        if W.zero in block:
            names.append(W.labels[W.zero])
        elif W.unit in block:
            names.append(W.labels[W.unit])
        else:
            names.append(W.labels[block[0]])
    table = WajsbergTable(op, int(proj[W.unit]), names)
    return QuotientAlgebra(classes=tuple(blocks), table=table, projection=tuple(int(p) for p in proj))


@dataclass(frozen=True)
class Decomposition:
    """W is isomorphic to the product of W/P for P in ``ideals``."""

    sizes: tuple[int, ...]
    ideals: tuple[IdealSet, ...]
    quotients: tuple[QuotientAlgebra, ...]
    embedding: tuple[int, ...]

    @property
    def signature(self) -> tuple[int, ...]:
        return tuple(sorted(self.sizes))


def decompose(W: WajsbergTable) -> Decomposition:
    """Smallest family of prime ideals with trivial intersection whose
    quotients multiply out to the order of W.

    Families are tried by increasing size, each size in bitmask order.  The
    returned ``embedding`` sends x to the product index of its tuple of
    classes; it is checked to be an isomorphism onto the folded product of
    the quotients.
    """
    from .constructors import product_of

    n = W.n
    full = (1 << n) - 1
    # the whole carrier passes the primality test vacuously; only the trivial algebra needs it
    primes = [P for P in prime_ideals(W) if P.mask != full or n == 1]
    quotients = {P.mask: quotient(W, P) for P in primes}
    zero_bit = 1 << W.zero
    for k in range(1, len(primes) + 1):
        for family in combinations(primes, k):
            qs = [quotients[P.mask] for P in family]
            if int(np.prod([q.table.n for q in qs])) != n:
                continue
            meet = family[0].mask
            for P in family[1:]:
                meet &= P.mask
            if meet != zero_bit:
                continue
            for q in qs:
                if not q.table.is_chain():
                    raise InvariantError("quotient by a prime ideal is not a chain")
            target = product_of(*(q.table for q in qs))
            embedding = np.zeros(n, dtype=np.int64)
            for q in qs:
                embedding = embedding * q.table.n + np.array(q.projection)
            if len(set(embedding.tolist())) != n or not np.array_equal(
                embedding[W.op], target.op[np.ix_(embedding, embedding)]
            ):
                raise InvariantError("product of quotients is not isomorphic to the algebra")
            return Decomposition(
                sizes=tuple(q.table.n for q in qs),
                ideals=tuple(family),
                quotients=tuple(qs),
                embedding=tuple(int(e) for e in embedding),
            )
    raise InvariantError("no prime-ideal family decomposes the algebra")


def format_ideals(W: WajsbergTable, ideals: Sequence[IdealSet]) -> list[str]:
    return [I.format(W) for I in ideals]
