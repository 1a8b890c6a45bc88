"""Rebuild the printed tables of orders 4 to 9 and diff them against fixtures.

Each fixture under ``fixtures/paper`` is a verbatim transcription, typos
included.  Rebuilding uses only chains, products and transports, so a
mismatch points at the printed table (or at a transcription error).
"""

from __future__ import annotations

from dataclasses import dataclass, field
import json
from importlib import resources
from pathlib import Path
from typing import Callable

from .constructors import Bijection, chain, product, product_of, transport
from .core import WajsbergTable
from .formats import TableDocument, TableParseError, read_document
from .isomorphism import find_isomorphism, is_homomorphism, is_order_isomorphism

FIXTURE_PACKAGE = "wajsberg.fixtures.paper"
MANIFEST = "expected_mismatches.json"

# printed maps, A B C D -> images, in the order of the order-6 listing
ORDER6_MAPS: dict[str, tuple[str, str]] = {
    "11": ("ABCD", "algebra"),
    "12": ("ACBD", "algebra"),
    "13": ("BDCA", "order"),
    "14": ("BDAC", "algebra"),
    "15": ("BADC", "algebra"),
    "16": ("CDBA", "order"),
    "17": ("CADB", "algebra"),
    "18": ("CBDA", "order"),
    "19": ("CBAD", "order"),
    "1,10": ("CDAB", "algebra"),
    "1,11": ("CABD", "order"),
    "1,12": ("BCDA", "order"),
    "1,13": ("BCAD", "order"),
    "1,14": ("BACD", "order"),
    "1,15": ("ACDB", "order"),
    "1,16": ("ADCB", "order"),
    "1,17": ("ADBC", "order"),
    "1,18": ("ABDC", "order"),
    "1,19": ("DBCA", "algebra"),
    "1,20": ("DCBA", "order"),
    "1,21": ("DACB", "order"),
    "1,22": ("DCAB", "order"),
    "1,23": ("DABC", "algebra"),
    "1,24": ("DBAC", "order"),
}

ORDER8_MAPS = {
    "12": dict(X="T", Y="X", Z="U", T="Y", U="V", V="Z"),
    "13": dict(X="Y", Y="U", Z="X", T="V", U="Z", V="T"),
    "22": dict(X="U", Y="T", Z="V", T="X", U="Z", V="Y"),
    "23": dict(X="Z", Y="X", Z="V", T="U", U="T", V="Y"),
}


def order6_map(key: str) -> dict[str, str]:
    images, _ = ORDER6_MAPS[key]
    return dict(zip("ABCD", images))


def nabla_11_4() -> WajsbergTable:
    return product(chain(2), chain(2))


def nabla_11_6() -> WajsbergTable:
    return product(chain(2), chain(3))


def nabla_11_8() -> WajsbergTable:
    return product(chain(4), chain(2))


def nabla_21_8() -> WajsbergTable:
    return product_of(chain(2), chain(2), chain(2))


def nabla_11_9() -> WajsbergTable:
    return product(chain(3), chain(3))


def nabla_1j_6(key: str) -> WajsbergTable:
    base = nabla_11_6()
    return transport(base, Bijection.from_labels(base, order6_map(key)))


def _transport8(base: WajsbergTable, key: str) -> WajsbergTable:
    return transport(base, Bijection.from_labels(base, ORDER8_MAPS[key]))


RECONSTRUCTIONS: dict[str, tuple[str, Callable[[], WajsbergTable]]] = {
    "nabla_0_4": ("chain of order 4", lambda: chain(4)),
    "nabla_11_4": ("chain(2) x chain(2)", nabla_11_4),
    "nabla_prime_4": (
        "chain(2) x chain(2) transported along A<->B",
        lambda: transport(nabla_11_4(), Bijection.from_labels(nabla_11_4(), {"A": "B", "B": "A"})),
    ),
    "nabla_0_6": ("chain of order 6", lambda: chain(6)),
    "nabla_11_6": ("chain(2) x chain(3)", nabla_11_6),
    "nabla_14_6": ("order-6 product transported along f14", lambda: nabla_1j_6("14")),
    "nabla_15_6": ("order-6 product transported along f15", lambda: nabla_1j_6("15")),
    "nabla_16_6": ("order-6 product transported along f16", lambda: nabla_1j_6("16")),
    "nabla_17_6": ("order-6 product transported along f17", lambda: nabla_1j_6("17")),
    "nabla_0_8": ("chain of order 8", lambda: chain(8)),
    "nabla_11_8": ("chain(4) x chain(2)", nabla_11_8),
    "nabla_13_8": ("chain(4) x chain(2) transported along f13", lambda: _transport8(nabla_11_8(), "13")),
    "nabla_21_8": ("chain(2) x chain(2) x chain(2)", nabla_21_8),
    "nabla_22_8": ("2x2x2 product transported along f22", lambda: _transport8(nabla_21_8(), "22")),
    "nabla_23_8": ("2x2x2 product transported along f23", lambda: _transport8(nabla_21_8(), "23")),
    "nabla_0_9": ("chain of order 9", lambda: chain(9)),
    "nabla_11_9": ("chain(3) x chain(3)", nabla_11_9),
}


def reconstruct(name: str) -> WajsbergTable:
    return RECONSTRUCTIONS[name][1]()


@dataclass
class Mismatch:
    row: str
    col: str
    printed: str
    computed: str

    def __str__(self) -> str:
        return f"{self.row} o {self.col}: printed {self.printed}, computed {self.computed}"


@dataclass
class FixtureComparison:
    name: str
    source: str
    missing: bool = False
    error: str | None = None
    mismatches: list[Mismatch] = field(default_factory=list)
    printed_valid: bool | None = None
    printed_findings: str = ""

    @property
    def matches(self) -> bool:
        return not self.missing and self.error is None and not self.mismatches


@dataclass
class RegressionReport:
    comparisons: dict[str, FixtureComparison]

    def __getitem__(self, name: str) -> FixtureComparison:
        return self.comparisons[name]

    @property
    def missing(self) -> list[str]:
        return [k for k, c in self.comparisons.items() if c.missing]

    def unexpected(self, manifest: dict | None = None) -> dict[str, list[Mismatch]]:
        """Mismatches not listed in the expected-mismatch manifest, plus
        listed cells that no longer mismatch (reported with printed == computed == "")."""
        manifest = expected_mismatches() if manifest is None else manifest
        out = {}
        for name, c in self.comparisons.items():
            if c.missing or c.error:
                continue
            listed = {tuple(cell) for cell in manifest.get(name, {}).get("cells", [])}
            found = {(m.row, m.col, m.printed, m.computed) for m in c.mismatches}
            extra = [Mismatch(*cell) for cell in sorted(found - listed)]
            extra += [Mismatch(r, col, "", "") for r, col, _, _ in sorted(listed - found)]
            if extra:
                out[name] = extra
        return out

    def to_text(self) -> str:
        lines = []
        for name, c in self.comparisons.items():
            if c.missing:
                lines.append(f"{name}: MISSING fixture")
                continue
            if c.error:
                lines.append(f"{name}: unreadable fixture ({c.error})")
                continue
            status = "match" if not c.mismatches else f"{len(c.mismatches)} mismatching cell(s)"
            valid = "valid" if c.printed_valid else "printed table fails the axioms"
            lines.append(f"{name}: {status}; {valid} [{c.source}]")
            for m in c.mismatches:
                lines.append(f"    {m}")
        return "\n".join(lines)


def fixture_dir() -> Path:
    return Path(str(resources.files(FIXTURE_PACKAGE)))


def expected_mismatches(directory: Path | str | None = None) -> dict:
    directory = fixture_dir() if directory is None else Path(directory)
    path = directory / MANIFEST
    if not path.exists():
        return {}
    return json.loads(path.read_text(encoding="utf-8"))


def load_fixture(name: str, directory: Path | None = None) -> TableDocument:
    directory = fixture_dir() if directory is None else Path(directory)
    return read_document(directory / f"{name}.txt", "text")


def compare(doc: TableDocument, W: WajsbergTable) -> list[Mismatch]:
    """Cell-by-cell diff, matched by label."""
    if sorted(doc.labels) != sorted(W.labels):
        raise ValueError(f"label sets differ: {doc.labels} vs {list(W.labels)}")
    out = []
    for i, row in enumerate(doc.labels):
        for j, col in enumerate(doc.labels):
            computed = W.labels[W(W.index(row), W.index(col))]
            printed = doc.op[i][j]
            if printed != computed:
                out.append(Mismatch(row, col, printed, computed))
    return out


def paper_regression(directory: Path | str | None = None, names=None) -> RegressionReport:
    directory = fixture_dir() if directory is None else Path(directory)
    report = {}
    for name in names or RECONSTRUCTIONS:
        source, build = RECONSTRUCTIONS[name]
        entry = FixtureComparison(name=name, source=source)
        report[name] = entry
        path = directory / f"{name}.txt"
        if not path.exists():
            entry.missing = True
            continue
        try:
            doc = read_document(path, "text")
            entry.mismatches = compare(doc, build())
        except (TableParseError, ValueError) as exc:
            entry.error = str(exc)
            continue
        check = doc.validate()
        entry.printed_valid = check.ok
        entry.printed_findings = check.summary()
    return RegressionReport(report)


@dataclass
class MapAudit:
    key: str
    images: str
    printed_kind: str
    transported_isomorphic: bool
    map_is_isomorphism: bool
    order_automorphism: bool
    printed_table_homomorphism: bool | None


def audit_order6_maps(directory: Path | str | None = None) -> list[MapAudit]:
    """For every printed map f1j: is the transported table isomorphic to the
    product, is f1j an isomorphism onto it, does f1j preserve the order of the
    product itself, and (where a table is printed) is f1j a morphism onto the
    printed table."""
    base = nabla_11_6()
    printed = {}
    for key in ("14", "15", "16", "17"):
        try:
            doc = load_fixture(f"nabla_{key}_6", directory)
        except TableParseError:
            continue
        check = doc.validate()
        printed[key] = check.table
    out = []
    for key, (images, kind) in ORDER6_MAPS.items():
        f = Bijection.from_labels(base, order6_map(key))
        moved = transport(base, f)
        table = printed.get(key)
        out.append(
            MapAudit(
                key=key,
                images=images,
                printed_kind=kind,
                transported_isomorphic=find_isomorphism(base, moved) is not None,
                map_is_isomorphism=is_homomorphism(base, moved, f),
                order_automorphism=is_order_isomorphism(base, base, f),
                printed_table_homomorphism=None if table is None else is_homomorphism(base, table, f),
            )
        )
    return out
