"""Counting finite Wajsberg algebras by order.

Isomorphism types come from unordered factorisations of the order into chain
sizes.  The labeled census transports every non-chain type along all
bijections fixing the bottom and the unit, and counts the distinct tables
that result next to the closed-form bijection count.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .constructors import chain, chain_product, transport_many
from .core import WajsbergTable
from .isomorphism import ChainSignature, automorphisms, automorphisms_brute_force, find_isomorphism

DEFAULT_CENSUS_CAP = 9
HARD_CENSUS_CAP = 10
LARGE_CENSUS_CAP = 12
CAP_ENV_VAR = "WAJSBERG_CENSUS_CAP"


class CensusCapError(ValueError):
    pass


def multiplicative_partitions(n: int) -> list[tuple[int, ...]]:
    """Unordered factorisations of n into at least two factors, each in (1, n).

    >>> multiplicative_partitions(12)
    [(2, 2, 3), (2, 6), (3, 4)]
    """
    if n < 2:
        raise ValueError("n must be at least 2")

    def split(m: int, smallest: int) -> list[tuple[int, ...]]:
        out = [(m,)]
        d = smallest
        while d * d <= m:
            if m % d == 0:
                out += [(d, *rest) for rest in split(m // d, d)]
            d += 1
        return out

    return sorted(p for p in split(n, 2) if len(p) >= 2)


def pi(n: int) -> int:
    return len(multiplicative_partitions(n))


def iso_classes(n: int) -> list[tuple[ChainSignature, WajsbergTable]]:
    """One representative per isomorphism type: the chain, then one product of
    chains per factorisation (factors ascending, left-folded)."""
    if n < 1:
        raise ValueError("n must be positive")
    reps = [(ChainSignature((n,)), chain(n))]
    if n >= 2:
        reps += [(ChainSignature(p), chain_product(p)) for p in multiplicative_partitions(n)]
    for i in range(len(reps)):
        for j in range(i):
            if find_isomorphism(reps[i][1], reps[j][1]) is not None:
                raise RuntimeError(f"representatives {reps[i][0]} and {reps[j][0]} are isomorphic")
    return reps


@dataclass
class ClassCensus:
    signature: ChainSignature
    aut_order: int
    transports: int
    distinct: int
    tables: list[WajsbergTable] = field(default_factory=list, repr=False)


@dataclass
class CensusReport:
    n: int
    pi_n: int
    iso_classes: int
    signatures: list[ChainSignature]
    formula_total: int
    bijection_count: int
    distinct_labeled_total: int
    per_class_aut_order: dict[str, int]
    per_class_distinct: dict[str, int]
    discrepancy: bool
    narrative: str
    classes: list[ClassCensus] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pi_n": self.pi_n,
            "iso_classes": self.iso_classes,
            "signatures": [list(s.factors) for s in self.signatures],
            "formula_total": self.formula_total,
            "bijection_count": self.bijection_count,
            "distinct_labeled_total": self.distinct_labeled_total,
            "per_class_aut_order": dict(self.per_class_aut_order),
            "per_class_distinct": dict(self.per_class_distinct),
            "discrepancy": self.discrepancy,
            "narrative": self.narrative,
        }

    def to_text(self) -> str:
        lines = [
            f"order: {self.n}",
            f"pi_n: {self.pi_n}",
            f"isomorphism classes: {self.iso_classes} " + " ".join(str(s) for s in self.signatures),
            f"bijection count pi_n*(n-2)!: {self.bijection_count}",
            f"formula total pi_n*(n-2)!+1: {self.formula_total}",
            f"distinct labeled tables: {self.distinct_labeled_total}",
        ]
        for key in self.per_class_aut_order:
            lines.append(
                f"  class {key}: |Aut| = {self.per_class_aut_order[key]}, distinct tables = {self.per_class_distinct[key]}"
            )
        lines.append(f"discrepancy: {'yes' if self.discrepancy else 'no'}")
        lines.append(f"note: {self.narrative}")
        return "\n".join(lines)


def census_cap(default: int = DEFAULT_CENSUS_CAP) -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise CensusCapError(f"{CAP_ENV_VAR}={raw!r} is not an integer") from None


def _distinct_transports(W: WajsbergTable, batch: int = 20000) -> tuple[int, list[np.ndarray]]:
    n = W.n
    middle = [x for x in range(n) if x not in (W.zero, W.unit)]
    seen: dict[bytes, np.ndarray] = {}
    count = 0
    perms = permutations(middle)
    while True:
        chunk = [p for _, p in zip(range(batch), perms)]
        if not chunk:
            break
        images = np.tile(np.arange(n), (len(chunk), 1))
        images[:, middle] = np.array(chunk, dtype=np.int64)
        for t in transport_many(W, images):
            seen.setdefault(t.tobytes(), t)
        count += len(chunk)
    return count, list(seen.values())


def labeled_census(n: int, cap: int | None = None, allow_large: bool = False, keep_tables: bool = False) -> CensusReport:
    """Count the Wajsberg tables on a fixed carrier {0..n-1} with fixed bottom 0 and unit n-1.

    ``cap`` defaults to the ``WAJSBERG_CENSUS_CAP`` environment variable or 9
    and cannot lift the limit past 10.  ``allow_large`` ignores the cap and
    admits orders up to 12.
    """
    if n < 2:
        raise ValueError("census needs n >= 2")
    cap = census_cap() if cap is None else cap
    limit = LARGE_CENSUS_CAP if allow_large else min(cap, HARD_CENSUS_CAP)
    if n > limit:
        raise CensusCapError(
            f"order {n} is above the census limit {limit}: each non-chain class would be transported "
            f"along {math.factorial(n - 2)} bijections; "
            f"raise the cap with {CAP_ENV_VAR} (up to {HARD_CENSUS_CAP}) or pass allow_large (up to {LARGE_CENSUS_CAP})"
        )
    reps = iso_classes(n)
    pi_n = len(reps) - 1
    fact = math.factorial(n - 2)
    classes = []
    for sig, W in reps[1:]:
        auts = len(automorphisms(W))
        if len(automorphisms_brute_force(W)) != auts:
            raise RuntimeError(f"automorphism search and brute force disagree for class {sig}")
        count, tables = _distinct_transports(W)
        if len(tables) * auts != fact:
            raise RuntimeError(f"orbit-stabilizer identity fails for class {sig}")
        kept = [WajsbergTable._trusted(t, W.unit) for t in tables] if keep_tables else []
        classes.append(ClassCensus(sig, auts, count, len(tables), kept))
    distinct = 1 + sum(c.distinct for c in classes)
    formula = pi_n * fact + 1
    discrepancy = distinct != formula
    nontrivial = [f"{c.signature} (|Aut| = {c.aut_order})" for c in classes if c.aut_order > 1]
    if not classes:
        narrative = f"order {n} admits only the chain"
    elif discrepancy:
        narrative = (
            f"{formula - distinct} of the {pi_n * fact} relabelings repeat a table already counted: "
            f"classes with nontrivial automorphisms {', '.join(nontrivial)} give (n-2)!/|Aut| distinct tables each"
        )
    else:
        narrative = "every relabeling of every non-chain class gives a distinct table"
    return CensusReport(
        n=n,
        pi_n=pi_n,
        iso_classes=len(reps),
        signatures=[s for s, _ in reps],
        formula_total=formula,
        bijection_count=pi_n * fact,
        distinct_labeled_total=distinct,
        per_class_aut_order={str(c.signature): c.aut_order for c in classes},
        per_class_distinct={str(c.signature): c.distinct for c in classes},
        discrepancy=discrepancy,
        narrative=narrative,
        classes=classes,
    )
