"""Independent reference implementations in plain Python.

Nothing here imports the package under test except to read a table's raw
entries, so an agreement between these and the library is a real check.
"""

from __future__ import annotations

from itertools import permutations


def chain_entry(n: int, i: int, j: int) -> int:
    return n - 1 if i <= j else (n - 1) - i + j


def chain_rows(n: int) -> list[list[int]]:
    return [[chain_entry(n, i, j) for j in range(n)] for i in range(n)]


def product_rows(a: list[list[int]], ua: int, b: list[list[int]], ub: int) -> tuple[list[list[int]], int]:
    na, nb = len(a), len(b)
    rows = [[0] * (na * nb) for _ in range(na * nb)]
    for x1 in range(na):
        for x2 in range(nb):
            for y1 in range(na):
                for y2 in range(nb):
                    rows[x1 * nb + x2][y1 * nb + y2] = a[x1][y1] * nb + b[x2][y2]
    return rows, ua * nb + ub


def axioms_hold(rows: list[list[int]], unit: int) -> bool:
    """The four axioms over every triple, with the complement read off the table."""
    n = len(rows)
    bottoms = [x for x in range(n) if all(v == unit for v in rows[x])]
    if len(bottoms) != 1:
        return False
    z = bottoms[0]
    comp = [rows[x][z] for x in range(n)]
    for x in range(n):
        if rows[unit][x] != x:
            return False
        for y in range(n):
            xy, yx = rows[x][y], rows[y][x]
            if rows[xy][y] != rows[yx][x]:
                return False
            if rows[rows[comp[x]][comp[y]]][yx] != unit:
                return False
            for w in range(n):
                if rows[xy][rows[rows[y][w]][rows[x][w]]] != unit:
                    return False
    return True


def ordered_factorizations(n: int) -> list[tuple[int, ...]]:
    """Every ordered tuple of factors >= 2 with product n (including (n,))."""
    if n == 1:
        return [()]
    out = []
    for d in range(2, n + 1):
        if n % d == 0:
            out += [(d, *rest) for rest in ordered_factorizations(n // d)]
    return out


def unordered_partitions(n: int) -> set[tuple[int, ...]]:
    return {tuple(sorted(t)) for t in ordered_factorizations(n) if len(t) >= 2}


def isomorphisms(a: list[list[int]], ua: int, b: list[list[int]], ub: int) -> list[tuple[int, ...]]:
    """Every bijection f with f(x o y) = f(x) o f(y), found by a full permutation scan."""
    n = len(a)
    if len(b) != n:
        return []
    out = []
    for p in permutations(range(n)):
        if p[ua] != ub:
            continue
        if all(p[a[x][y]] == b[p[x]][p[y]] for x in range(n) for y in range(n)):
            out.append(p)
    return out


def ideals(rows: list[list[int]], unit: int) -> list[frozenset[int]]:
    """Subsets containing the bottom, down-closed and closed under x' o y."""
    n = len(rows)
    z = next(x for x in range(n) if all(v == unit for v in rows[x]))
    comp = [rows[x][z] for x in range(n)]
    out = []
    for mask in range(1 << n):
        S = {x for x in range(n) if mask >> x & 1}
        if z not in S:
            continue
        if any(rows[y][x] == unit and y not in S for x in S for y in range(n)):
            continue
        if any(rows[comp[x]][y] not in S for x in S for y in S):
            continue
        out.append(frozenset(S))
    return out
