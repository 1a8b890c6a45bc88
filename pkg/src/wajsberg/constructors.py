"""Chains, direct products and transport of structure along bijections."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Sequence

import numpy as np

from .core import MalformedTableError, WajsbergTable, default_labels


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Bijection:
    """A permutation of ``range(n)``; ``images[x]`` is the image of ``x``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise MalformedTableError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Bijection":
        return cls(tuple(range(n)))

    @classmethod
    def from_labels(cls, W: WajsbergTable, mapping: Mapping[str, str]) -> "Bijection":
        """Build from a partial label map; unmentioned elements are fixed."""
        images = list(range(W.n))
        for src, dst in mapping.items():
            images[W.index(src)] = W.index(dst)
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __len__(self) -> int:
        return len(self.images)

    def compose(self, other: "Bijection") -> "Bijection":
        """``self`` after ``other``: x -> self(other(x))."""
        return Bijection(tuple(self.images[v] for v in other.images))

    def inverse(self) -> "Bijection":
        inv = [0] * self.n
        for x, y in enumerate(self.images):
            inv[y] = x
        return Bijection(tuple(inv))

    def fixes(self, *points: int) -> bool:
        return all(self.images[p] == p for p in points)

    def as_labels(self, src: Sequence[str], dst: Sequence[str] | None = None) -> dict[str, str]:
        dst = src if dst is None else dst
        return {src[x]: dst[y] for x, y in enumerate(self.images)}


def chain(n: int, labels: Sequence[str] | None = None) -> WajsbergTable:
    """The totally ordered algebra x_0 < ... < x_{n-1}.

    ``x_i o x_j`` is the top when ``i <= j`` and ``x_{(n-1)-i+j}`` otherwise.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise MalformedTableError(f"chain size must be a positive integer, got {n!r}")
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    op = np.where(i <= j, n - 1, (n - 1) - i + j)
    return WajsbergTable._trusted(op, n - 1, labels)


def product(A: WajsbergTable, B: WajsbergTable, labels: Sequence[str] | None = None) -> WajsbergTable:
    """Coordinatewise product; pair (i, j) is encoded as ``i * len(B) + j``."""
    na, nb = A.n, B.n
    op = A.op[:, None, :, None] * nb + B.op[None, :, None, :]
    return WajsbergTable._trusted(op.reshape(na * nb, na * nb), A.unit * nb + B.unit, labels)


def product_of(*factors: WajsbergTable, labels: Sequence[str] | None = None) -> WajsbergTable:
    """Left fold of :func:`product`."""
    if not factors:
        raise ValueError("need at least one factor")
    out = reduce(product, factors)
    return out if labels is None else out.relabel(labels)


def chain_product(sizes: Sequence[int]) -> WajsbergTable:
    return product_of(*(chain(s) for s in sizes))


def transport(W: WajsbergTable, f: Bijection | Sequence[int], labels: Sequence[str] | None = None) -> WajsbergTable:
    """The table making ``f`` an isomorphism: ``f(a) o' f(b) = f(a o b)``."""
    if not isinstance(f, Bijection):
        f = Bijection(tuple(f))
    if f.n != W.n:
        raise PreconditionError(f"bijection on {f.n} points applied to algebra of order {W.n}")
    if not f.fixes(W.zero, W.unit):
        raise PreconditionError("transport bijection must fix the bottom and the unit")
    img = np.array(f.images)
    op = np.empty_like(W.op)
    op[np.ix_(img, img)] = img[W.op]
    return WajsbergTable._trusted(op, W.unit, labels if labels is not None else W.labels)


def transport_many(W: WajsbergTable, images: np.ndarray) -> np.ndarray:
    """Vectorised transport: ``images`` is (m, n), returns (m, n, n) tables."""
    images = np.asarray(images, dtype=np.int64)
    m = images.shape[0]
    inv = np.argsort(images, axis=1)
    pre = W.op[inv[:, :, None], inv[:, None, :]]
    return images[np.arange(m)[:, None, None], pre]


def trivial() -> WajsbergTable:
    return chain(1)


__all__ = [
    "Bijection",
    "PreconditionError",
    "chain",
    "chain_product",
    "default_labels",
    "product",
    "product_of",
    "transport",
    "transport_many",
    "trivial",
]
