"""Finite Wajsberg algebras stored as operation tables.

A table ``op`` of shape ``(n, n)`` holds element indices, ``op[x, y]`` being
``x o y``.  Everything else (bottom, complement, natural order, the MV-algebra
operations) is derived from ``op`` and the index of the unit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

_PAPER_MIDDLE = {
    1: "",
    2: "",
    3: "A",
    4: "AB",
    5: "ABC",
    6: "ABCD",
    7: "XYZTU",
    8: "XYZTUV",
    9: "XYZTUSV",
}


class MalformedTableError(ValueError):
    """Raised when a raw table is not even a well-formed n x n index matrix."""


class AxiomViolation(ValueError):
    """Raised by strict constructors when a table fails the axioms."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(report.summary())


def default_labels(n: int) -> tuple[str, ...]:
    """Display names O, A, B, ..., E for small carriers, ``e0..`` beyond 9."""
    if n == 1:
        return ("E",)
    if n in _PAPER_MIDDLE:
        return ("O", *_PAPER_MIDDLE[n], "E")
    return tuple(f"e{i}" for i in range(n))


def _as_index_matrix(op, n_hint: int | None = None) -> np.ndarray:
    arr = np.array(op, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise MalformedTableError(f"operation table must be a non-empty square matrix, got shape {arr.shape}")
    n = arr.shape[0]
    if n_hint is not None and n_hint != n:
        raise MalformedTableError(f"declared size {n_hint} does not match table size {n}")
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = bad[0]
        raise MalformedTableError(f"entry op[{i}][{j}] = {arr[i, j]} is outside [0, {n})")
    return arr


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str = ""

    def describe(self, labels: Sequence[str] | None = None, with_axiom: bool = True) -> str:
        if labels is None:
            names = ", ".join(str(w) for w in self.witness)
        else:
            names = ", ".join(labels[w] for w in self.witness)
        text = f"{self.axiom}: ({names})" if with_axiom else f"({names})"
        return f"{text} {self.detail}" if self.detail else text


@dataclass
class ValidationReport:
    """Outcome of :func:`validate`.

    ``table`` is set only when no violation was found.  ``violations`` lists
    every failing instance, grouped by axiom name in check order.
    """

    n: int
    unit: int
    labels: tuple[str, ...]
    violations: list[Violation] = field(default_factory=list)
    table: "WajsbergTable | None" = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def by_axiom(self) -> dict[str, list[Violation]]:
        out: dict[str, list[Violation]] = {}
        for v in self.violations:
            out.setdefault(v.axiom, []).append(v)
        return out

    def witnesses(self, axiom: str) -> list[tuple[int, ...]]:
        return [v.witness for v in self.violations if v.axiom == axiom]

    def summary(self, limit: int = 3) -> str:
        if self.ok:
            return f"valid Wajsberg algebra of order {self.n}"
        lines = [f"{len(self.violations)} violation(s) in table of order {self.n}"]
        for axiom, vs in self.by_axiom().items():
            shown = "; ".join(v.describe(self.labels, with_axiom=False) for v in vs[:limit])
            more = f" (+{len(vs) - limit} more)" if len(vs) > limit else ""
            lines.append(f"  {axiom} x{len(vs)}: {shown}{more}")
        return "\n".join(lines)


def _find_bottoms(op: np.ndarray, unit: int) -> list[int]:
    return [int(x) for x in np.flatnonzero(np.all(op == unit, axis=1))]


def check_axioms(op, unit: int, labels: Sequence[str] | None = None) -> ValidationReport:
    """Exhaustively check the four Wajsberg axioms plus derived consistency.

    Axiom names in the report are ``"i"`` (1 o x = x), ``"ii"``
    ((x o y) o ((y o z) o (x o z)) = 1), ``"iii"`` ((x o y) o y = (y o x) o x)
    and ``"iv"`` ((x' o y') o (y o x) = 1).  Further names: ``"bottom"`` when
    no unique element sits below everything, ``"order"`` for a failure of
    antisymmetry, ``"involution"`` for a complement that is not involutive.
    """
    op = _as_index_matrix(op)
    n = op.shape[0]
    if not 0 <= unit < n:
        raise MalformedTableError(f"unit index {unit} is outside [0, {n})")
    labels = tuple(labels) if labels is not None else default_labels(n)
    if len(labels) != n:
        raise MalformedTableError(f"{len(labels)} labels for a carrier of size {n}")
    if len(set(labels)) != n:
        raise MalformedTableError("labels must be unique")
    report = ValidationReport(n=n, unit=unit, labels=labels)
    found = report.violations

    idx = np.arange(n)
    for x in np.flatnonzero(op[unit] != idx):
        found.append(Violation("i", (int(x),)))

    x3, y3, z3 = np.meshgrid(idx, idx, idx, indexing="ij")
    ii = op[op[x3, y3], op[op[y3, z3], op[x3, z3]]] == unit
    for x, y, z in np.argwhere(~ii):
        found.append(Violation("ii", (int(x), int(y), int(z))))

    x2, y2 = np.meshgrid(idx, idx, indexing="ij")
    iii = op[op[x2, y2], y2] == op[op[y2, x2], x2]
    for x, y in np.argwhere(~iii):
        found.append(Violation("iii", (int(x), int(y))))

    bottoms = _find_bottoms(op, unit)
    if len(bottoms) != 1:
        found.append(Violation("bottom", tuple(bottoms), "expected exactly one element below every other"))
        return report
    comp = op[:, bottoms[0]]
    iv = op[op[comp[x2], comp[y2]], op[y2, x2]] == unit
    for x, y in np.argwhere(~iv):
        found.append(Violation("iv", (int(x), int(y))))

    leq = op == unit
    for x, y in np.argwhere(leq & leq.T & (x2 < y2)):
        found.append(Violation("order", (int(x), int(y)), "x <= y and y <= x with x != y"))
    for x in np.flatnonzero(comp[comp] != idx):
        found.append(Violation("involution", (int(x),)))

    if report.ok:
        report.table = WajsbergTable._trusted(op, unit, labels)
    return report


def validate(op, unit: int, labels: Sequence[str] | None = None) -> ValidationReport:
    """Check a raw table.  ``report.table`` holds the algebra iff it is valid.

    Out-of-range entries raise :class:`MalformedTableError`; axiom failures are
    reported, never raised.
    """
    return check_axioms(op, unit, labels)


class WajsbergTable:
    """An immutable, validated finite Wajsberg algebra.

    Equality and hashing look only at the operation table and the unit; labels
    are presentation.
    """

    def __init__(self, op, unit: int, labels: Sequence[str] | None = None):
        report = check_axioms(op, unit, labels)
        if not report.ok:
            raise AxiomViolation(report)
        table = report.table
        self.op, self.unit, self.labels = table.op, table.unit, table.labels

    @classmethod
    def _trusted(cls, op: np.ndarray, unit: int, labels: Sequence[str] | None = None) -> "WajsbergTable":
        # skips validation; constructors whose output is valid by construction use this
        self = object.__new__(cls)
        arr = np.array(op, dtype=np.int64)
        arr.flags.writeable = False
        self.op = arr
        self.unit = int(unit)
        self.labels = tuple(labels) if labels is not None else default_labels(arr.shape[0])
        return self

    @classmethod
    def from_labels(cls, rows: Sequence[Sequence[str]], labels: Sequence[str], unit: str = "E") -> "WajsbergTable":
        index = {name: i for i, name in enumerate(labels)}
        try:
            op = [[index[c] for c in row] for row in rows]
            u = index[unit]
        except KeyError as exc:
            raise MalformedTableError(f"unknown label {exc.args[0]!r}") from None
        return cls(op, u, labels)

    @property
    def n(self) -> int:
        return self.op.shape[0]

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, WajsbergTable):
            return NotImplemented
        return self.unit == other.unit and np.array_equal(self.op, other.op)

    def __hash__(self) -> int:
        return hash((self.unit, self.op.tobytes()))

    def __repr__(self) -> str:
        return f"WajsbergTable(n={self.n}, unit={self.labels[self.unit]!r})"

    def relabel(self, labels: Sequence[str]) -> "WajsbergTable":
        if len(labels) != self.n or len(set(labels)) != self.n:
            raise MalformedTableError("need one unique label per element")
        return WajsbergTable._trusted(self.op, self.unit, labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def indices(self, labels: Iterable[str]) -> list[int]:
        return [self.index(s) for s in labels]

    def __call__(self, x: int, y: int) -> int:
        return int(self.op[x, y])

    @cached_property
    def zero(self) -> int:
        return _find_bottoms(self.op, self.unit)[0]

    @cached_property
    def complements(self) -> np.ndarray:
        c = self.op[:, self.zero].copy()
        c.flags.writeable = False
        return c

    def complement(self, x: int) -> int:
        return int(self.complements[x])

    @cached_property
    def leq(self) -> np.ndarray:
        m = self.op == self.unit
        m.flags.writeable = False
        return m

    def is_chain(self) -> bool:
        return bool(np.all(self.leq | self.leq.T))

    def render(self, name: str = "o") -> str:
        from .formats import render_text

        return render_text(self, name=name)


@dataclass(frozen=True)
class OrderRelation:
    """The natural order x <= y iff x o y = 1."""

    n: int
    leq: np.ndarray
    bottom: int
    top: int

    def __call__(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    def is_total(self) -> bool:
        return bool(np.all(self.leq | self.leq.T))

    def strict_pairs(self) -> list[tuple[int, int]]:
        """Comparable pairs x < y, excluding those involving bottom or top."""
        ends = {self.bottom, self.top}
        return [
            (int(x), int(y))
            for x, y in np.argwhere(self.leq)
            if x != y and x not in ends and y not in ends
        ]

    def covers(self) -> list[tuple[int, int]]:
        """Edges of the Hasse diagram."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        out = []
        for x, y in np.argwhere(lt):
            if not np.any(lt[x] & lt[:, y]):
                out.append((int(x), int(y)))
        return out


def natural_order(W: WajsbergTable) -> OrderRelation:
    return OrderRelation(n=W.n, leq=W.leq, bottom=W.zero, top=W.unit)


def zero(W: WajsbergTable) -> int:
    return W.zero


def complement(W: WajsbergTable, x: int) -> int:
    return W.complement(x)


@dataclass(frozen=True, eq=False)
class MvView:
    """MV-algebra operations on the same carrier: plus, times, minus, neg."""

    plus: np.ndarray
    times: np.ndarray
    minus: np.ndarray
    neg: np.ndarray
    zero: int

    @classmethod
    def from_plus(cls, plus, neg, zero: int) -> "MvView":
        plus = _as_index_matrix(plus)
        neg = np.asarray(neg, dtype=np.int64)
        if neg.shape != (plus.shape[0],) or np.any((neg < 0) | (neg >= plus.shape[0])):
            raise MalformedTableError("negation must be a length-n vector of indices")
        times = neg[plus[neg[:, None], neg[None, :]]]
        minus = times[:, neg]
        return cls(plus=plus, times=times, minus=minus, neg=neg, zero=int(zero))

    @property
    def n(self) -> int:
        return self.plus.shape[0]

    def violations(self) -> list[Violation]:
        """MV axioms: involution, absorbing top, the symmetric law, and the
        commutative monoid laws for plus with identity zero."""
        p, neg, z = self.plus, self.neg, self.zero
        n = self.n
        idx = np.arange(n)
        top = neg[z]
        out = []
        out += [Violation("mv-involution", (int(x),)) for x in np.flatnonzero(neg[neg] != idx)]
        out += [Violation("mv-absorb", (int(x),)) for x in np.flatnonzero(p[:, top] != top)]
        x, y = np.meshgrid(idx, idx, indexing="ij")
        sym = p[neg[p[neg[x], y]], y] == p[neg[p[neg[y], x]], x]
        out += [Violation("mv-symmetric", (int(a), int(b))) for a, b in np.argwhere(~sym)]
        out += [Violation("mv-commutative", (int(a), int(b))) for a, b in np.argwhere(p != p.T)]
        x3, y3, z3 = np.meshgrid(idx, idx, idx, indexing="ij")
        assoc = p[p[x3, y3], z3] == p[x3, p[y3, z3]]
        out += [Violation("mv-associative", tuple(int(v) for v in w)) for w in np.argwhere(~assoc)]
        out += [Violation("mv-identity", (int(a),)) for a in np.flatnonzero(p[:, z] != idx)]
        return out

    def distance(self, x: int, y: int) -> int:
        """(x minus y) plus (y minus x)."""
        return int(self.plus[self.minus[x, y], self.minus[y, x]])


def to_mv(W: WajsbergTable) -> MvView:
    comp = W.complements
    plus = W.op[comp, :]
    times = comp[W.op[:, comp]]
    minus = times[:, comp]
    return MvView(plus=plus, times=times, minus=minus, neg=comp.copy(), zero=W.zero)


def from_mv(M: MvView, labels: Sequence[str] | None = None) -> WajsbergTable:
    """Rebuild the implication x o y = x' plus y.  Raises AxiomViolation if the
    MV axioms fail."""
    bad = M.violations()
    if bad:
        labels = tuple(labels) if labels is not None else default_labels(M.n)
        raise AxiomViolation(ValidationReport(n=M.n, unit=int(M.neg[M.zero]), labels=labels, violations=bad))
    op = M.plus[M.neg, :]
    return WajsbergTable(op, int(M.neg[M.zero]), labels)


def distance(W: WajsbergTable, x: int, y: int) -> int:
    """d(x, y) = (x o y) o (y o x)', the MV distance written with o."""
    op = W.op
    return int(op[op[x, y], W.complements[op[y, x]]])


def distance_matrix(W: WajsbergTable) -> np.ndarray:
    op = W.op
    return op[op, W.complements[op.T]]
