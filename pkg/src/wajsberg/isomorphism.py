"""Algebra and order isomorphisms, automorphism groups and the chain signature."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .constructors import Bijection
from .core import WajsbergTable, to_mv
from .ideals import decompose


@dataclass(frozen=True, order=True)
class ChainSignature:
    """Sorted sizes of the chain factors; a complete isomorphism invariant."""

    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(int(f) for f in self.factors)))

    @property
    def order(self) -> int:
        return int(np.prod(self.factors))

    def is_chain(self) -> bool:
        return len(self.factors) == 1

    def __str__(self) -> str:
        return "{" + ",".join(str(f) for f in self.factors) + "}"


def signature(W: WajsbergTable) -> ChainSignature:
    return ChainSignature(decompose(W).sizes)


def _element_invariants(W: WajsbergTable) -> list[tuple]:
    leq = W.leq
    comp = W.complements
    op = W.op
    idem = op[comp, :][np.arange(W.n), np.arange(W.n)]  # x plus x
    return [
        (
            int(leq[:, x].sum()),
            int(leq[x].sum()),
            bool(comp[x] == x),
            bool(idem[x] == x),
        )
        for x in range(W.n)
    ]


def _algebra_isos(A: WajsbergTable, B: WajsbergTable) -> Iterator[tuple[int, ...]]:
    """All isomorphisms A -> B in lexicographic order.

    Depth-first over the lowest unassigned element with candidates tried in
    ascending order; every choice propagates the images forced by
    f(a o c) = f(a) o f(c), so the first hit is the lexicographically least.
    """
    n = A.n
    if B.n != n:
        return
    inv_a, inv_b = _element_invariants(A), _element_invariants(B)
    if sorted(inv_a) != sorted(inv_b):
        return
    cands = [[b for b in range(n) if inv_b[b] == inv_a[a]] for a in range(n)]
    allowed = [set(c) for c in cands]
    opa, opb = A.op.tolist(), B.op.tolist()
    f = [-1] * n
    used = [False] * n
    assigned: list[int] = []

    def assign(a: int, b: int) -> int | None:
        # returns number of new assignments, or None on conflict (already undone)
        start = len(assigned)
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            if f[a] >= 0:
                if f[a] != b:
                    undo(start)
                    return None
                continue
            if used[b] or b not in allowed[a]:
                undo(start)
                return None
            f[a] = b
            used[b] = True
            assigned.append(a)
            ra, rb = opa[a], opb[b]
            for c in assigned:
                fc = f[c]
                queue.append((ra[c], rb[fc]))
                queue.append((opa[c][a], opb[fc][b]))
        return len(assigned) - start

    def undo(start: int) -> None:
        while len(assigned) > start:
            a = assigned.pop()
            used[f[a]] = False
            f[a] = -1

    if assign(A.zero, B.zero) is None:
        return
    if assign(A.unit, B.unit) is None:
        return

    def search() -> Iterator[tuple[int, ...]]:
        a = next((x for x in range(n) if f[x] < 0), None)
        if a is None:
            yield tuple(f)
            return
        for b in cands[a]:
            if used[b]:
                continue
            start = len(assigned)
            if assign(a, b) is None:
                continue
            yield from search()
            undo(start)

    yield from search()


def find_isomorphism(A: WajsbergTable, B: WajsbergTable) -> Bijection | None:
    """Lexicographically least isomorphism A -> B, or None."""
    for f in _algebra_isos(A, B):
        return Bijection(f)
    return None


def automorphisms(W: WajsbergTable) -> list[Bijection]:
    return [Bijection(f) for f in _algebra_isos(W, W)]


def automorphisms_brute_force(W: WajsbergTable) -> list[Bijection]:
    """Scan every permutation fixing bottom and unit; independent of the search above."""
    n = W.n
    middle = [x for x in range(n) if x not in (W.zero, W.unit)]
    if not middle:
        return [Bijection.identity(n)]
    perms = np.array(list(permutations(middle)), dtype=np.int64)
    images = np.tile(np.arange(n), (len(perms), 1))
    images[:, middle] = perms
    # f(x o y) == f(x) o f(y) for all x, y, checked for every candidate at once
    lhs = images[:, W.op]
    rhs = W.op[images[:, :, None], images[:, None, :]]
    ok = np.all(lhs == rhs, axis=(1, 2))
    return [Bijection(tuple(row)) for row in images[ok]]


def isomorphic(A: WajsbergTable, B: WajsbergTable) -> bool:
    """Signature comparison, confirmed by an explicit search."""
    fast = signature(A) == signature(B)
    slow = find_isomorphism(A, B) is not None
    if fast != slow:
        raise RuntimeError("signature and isomorphism search disagree")
    return fast


def _poset_isos(A: WajsbergTable, B: WajsbergTable) -> Iterator[tuple[int, ...]]:
    n = A.n
    if B.n != n:
        return
    la, lb = A.leq, B.leq
    key_a = [(int(la[:, x].sum()), int(la[x].sum())) for x in range(n)]
    key_b = [(int(lb[:, x].sum()), int(lb[x].sum())) for x in range(n)]
    if sorted(key_a) != sorted(key_b):
        return
    cands = [[b for b in range(n) if key_b[b] == key_a[a]] for a in range(n)]
    la, lb = la.tolist(), lb.tolist()
    f = [-1] * n
    used = [False] * n
    f[A.zero], f[A.unit] = B.zero, B.unit
    used[B.zero] = used[B.unit] = True
    if A.zero != A.unit and B.zero == B.unit:
        return

    def fits(a: int, b: int) -> bool:
        for c in range(n):
            fc = f[c]
            if fc < 0:
                continue
            if la[a][c] != lb[b][fc] or la[c][a] != lb[fc][b]:
                return False
        return True

    def search() -> Iterator[tuple[int, ...]]:
        a = next((x for x in range(n) if f[x] < 0), None)
        if a is None:
            yield tuple(f)
            return
        for b in cands[a]:
            if used[b] or not fits(a, b):
                continue
            f[a] = b
            used[b] = True
            yield from search()
            f[a] = -1
            used[b] = False

    yield from search()


def poset_isomorphic(A: WajsbergTable, B: WajsbergTable) -> Bijection | None:
    """Lexicographically least order isomorphism fixing bottom and top, or None."""
    for f in _poset_isos(A, B):
        return Bijection(f)
    return None


def order_automorphisms(W: WajsbergTable) -> list[Bijection]:
    return [Bijection(f) for f in _poset_isos(W, W)]


def is_homomorphism(A: WajsbergTable, B: WajsbergTable, f: Sequence[int] | Bijection, via: str = "implication") -> bool:
    """Check f(0) = 0, f(x o y) = f(x) o f(y) and f(x') = f(x)'.

    ``via="mv"`` checks the same conditions on the MV side instead:
    f(0) = 0, f(x + y) = f(x) + f(y), f(x') = f(x)'.
    """
    img = np.array(f.images if isinstance(f, Bijection) else list(f), dtype=np.int64)
    if img.shape != (A.n,) or np.any((img < 0) | (img >= B.n)):
        raise ValueError("map must send every element of A into B")
    if img[A.zero] != B.zero:
        return False
    if via == "mv":
        ma, mb = to_mv(A), to_mv(B)
        ops_ok = np.array_equal(img[ma.plus], mb.plus[np.ix_(img, img)])
        neg_ok = np.array_equal(img[ma.neg], mb.neg[img])
        return bool(ops_ok and neg_ok)
    if via != "implication":
        raise ValueError(f"unknown check {via!r}")
    ops_ok = np.array_equal(img[A.op], B.op[np.ix_(img, img)])
    neg_ok = np.array_equal(img[A.complements], B.complements[img])
    return bool(ops_ok and neg_ok)


def is_order_isomorphism(A: WajsbergTable, B: WajsbergTable, f: Bijection) -> bool:
    img = np.array(f.images)
    return bool(np.array_equal(A.leq, B.leq[np.ix_(img, img)]))
