"""Small finite groups as Cayley tables.

Every group of order at most 12 is available by name.  Elements are indexed
``0..n-1`` with the identity at index 0; ``generators`` lists indices that
generate the group, which the group algebra uses as algebra generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import BadParameters, NotAGroup


@dataclass(frozen=True)
class Group:
    name: str
    table: tuple  # table[i][j] = index of g_i * g_j
    labels: tuple
    generators: tuple

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return next(i for i in range(self.order) if all(self.table[i][j] == j for j in range(self.order)))

    def inverse(self, i: int) -> int:
        e = self.identity
        return next(j for j in range(self.order) if self.table[i][j] == e)

    def words(self):
        """A word in the generators for each element (breadth-first, shortest)."""
        out = {self.identity: ()}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for k, s in enumerate(self.generators):
                    h = self.table[g][s]
                    if h not in out:
                        out[h] = out[g] + (k,)
                        nxt.append(h)
            frontier = nxt
        return [out[i] for i in range(self.order)]


def check_group(table) -> int:
    """Validate a Cayley table; return the index of the identity."""
    n = len(table)
    rng = range(n)
    if n == 0 or any(len(r) != n for r in table):
        raise NotAGroup("Cayley table must be a nonempty square array")
    if any(not (0 <= x < n) for r in table for x in r):
        raise NotAGroup("Cayley table entries out of range")
    ids = [e for e in rng if all(table[e][j] == j and table[j][e] == j for j in rng)]
    if not ids:
        raise NotAGroup("no identity element")
    e = ids[0]
    for i in rng:
        if not any(table[i][j] == e for j in rng):
            raise NotAGroup(f"element {i} has no inverse")
    for i, j, k in product(rng, rng, rng):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAGroup(f"not associative at {(i, j, k)}")
    return e


def from_elements(name, elems, mul, gens, fmt=str) -> Group:
    """Close ``gens`` under ``mul`` and tabulate; ``elems[0]`` must be the identity."""
    elems = list(elems)
    index = {x: i for i, x in enumerate(elems)}
    frontier = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    table = tuple(tuple(index[mul(a, b)] for b in elems) for a in elems)
    return Group(name, table, tuple(fmt(x) for x in elems), tuple(index[g] for g in gens))


def cyclic(n: int) -> Group:
    return from_elements(f"C{n}", [0], lambda a, b: (a + b) % n, [1 % n] if n > 1 else [0],
                         lambda a: f"a^{a}")


def abelian(*ns) -> Group:
    gens = []
    for i, n in enumerate(ns):
        gens.append(tuple(1 if j == i else 0 for j in range(len(ns))))
    name = "x".join(f"C{n}" for n in ns)
    return from_elements(name, [tuple(0 for _ in ns)],
                         lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns)), gens)


def dihedral(n: int) -> Group:
    """Order ``2n``: ``a^n = x^2 = 1``, ``x a x^-1 = a^-1``."""
    def mul(u, v):
        (k1, e1), (k2, e2) = u, v
        return ((k1 + (-k2 if e1 else k2)) % n, (e1 + e2) % 2)
    return from_elements(f"D{n}", [(0, 0)], mul, [(1, 0), (0, 1)])


def dicyclic(n: int, name=None) -> Group:
    """Order ``4n``: ``a^(2n) = 1``, ``x^2 = a^n``, ``x a x^-1 = a^-1``."""
    m = 2 * n

    def mul(u, v):
        (k1, e1), (k2, e2) = u, v
        k = k1 + (-k2 if e1 else k2)
        if e1 and e2:
            return ((k + n) % m, 0)
        return (k % m, (e1 + e2) % 2)
    return from_elements(name or f"Dic{n}", [(0, 0)], mul, [(1, 0), (0, 1)])


def alternating4() -> Group:
    def mul(p, q):  # apply p then q
        return tuple(q[p[i]] for i in range(4))
    return from_elements("A4", [(0, 1, 2, 3)], mul, [(1, 2, 0, 3), (1, 0, 3, 2)])


def symmetric(n: int) -> Group:
    def mul(p, q):
        return tuple(q[p[i]] for i in range(n))
    ident = tuple(range(n))
    gens = [tuple(list(range(1, n)) + [0]), tuple([1, 0] + list(range(2, n)))] if n > 1 else [ident]
    g = from_elements(f"S{n}", [ident], mul, gens)
    assert g.order == len(list(permutations(range(n))))
    return g


_NAMED = {
    **{f"C{n}": (lambda n=n: cyclic(n)) for n in range(1, 13)},
    "C2xC2": lambda: abelian(2, 2),
    "C2xC4": lambda: abelian(2, 4),
    "C2xC2xC2": lambda: abelian(2, 2, 2),
    "C3xC3": lambda: abelian(3, 3),
    "C2xC6": lambda: abelian(2, 6),
    "S3": lambda: symmetric(3),
    "D4": lambda: dihedral(4),
    "D5": lambda: dihedral(5),
    "D6": lambda: dihedral(6),
    "Q8": lambda: dicyclic(2, "Q8"),
    "Dic3": lambda: dicyclic(3),
    "A4": alternating4,
}
_ALIASES = {"V4": "C2xC2", "K4": "C2xC2", "C2^2": "C2xC2", "C2^3": "C2xC2xC2", "D3": "S3",
            "D2": "C2xC2"}


def group_names() -> list[str]:
    return list(_NAMED)


def named_group(name: str) -> Group:
    key = _ALIASES.get(name, name)
    if key not in _NAMED:
        raise BadParameters(f"unknown group {name!r}")
    g = _NAMED[key]()
    return Group(key, g.table, g.labels, g.generators)
