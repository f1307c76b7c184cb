"""Generic finite-group machinery over indexed element lists.

A FiniteGroup is a multiplication table on indices 0..n-1 with index 0 the
identity.  Everything here is brute force by design: the groups of interest
have order at most a configurable cap (default 1024), where O(n^2) orbit
computations are instant and correctness is auditable.
"""
from __future__ import annotations

from math import lcm
from typing import Callable, Iterable, List, Sequence, Tuple

DEFAULT_ORDER_CAP = 1024

# Quaternion group: indices 0..7 = 1, -1, i, -i, j, -j, k, -k.
# Encoded as (axis, sign) with axis 0..3 = 1, i, j, k.
Q8_NAMES = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
Q8_IDENTITY = 0
Q8_MINUS_ONE = 1

_AXIS_MUL = {
    # (axis_a, axis_b) -> (axis, sign) for the unit quaternions 1,i,j,k
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
    (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
    (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
}


def _q8_mul(a: int, b: int) -> int:
    axis, sign = _AXIS_MUL[(a >> 1, b >> 1)]
    if a & 1:
        sign = -sign
    if b & 1:
        sign = -sign
    return (axis << 1) | (0 if sign > 0 else 1)


Q8_TABLE: Tuple[Tuple[int, ...], ...] = tuple(
    tuple(_q8_mul(a, b) for b in range(8)) for a in range(8)
)


class FiniteGroup:
    """Finite group given by an explicit multiplication table on indices."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        n = len(table)
        self.order = n
        self.table = tuple(tuple(row) for row in table)
        self.name = name
        if any(len(row) != n for row in self.table):
            raise ValueError("multiplication table is not square")
        if any(self.table[0][g] != g or self.table[g][0] != g for g in range(n)):
            raise ValueError("index 0 is not the identity")
        self.inverse = self._compute_inverses()
        self._classes: Tuple[Tuple[int, ...], ...] | None = None
        self._class_index: List[int] | None = None

    @classmethod
    def from_mul(cls, n: int, mul: Callable[[int, int], int], name: str = "") -> "FiniteGroup":
        return cls([[mul(a, b) for b in range(n)] for a in range(n)], name=name)

    def _compute_inverses(self) -> Tuple[int, ...]:
        inv = [-1] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.table[g][h] == 0:
                    if self.table[h][g] != 0:
                        raise ValueError(f"one-sided inverse at element {g}")
                    inv[g] = h
                    break
            else:
                raise ValueError(f"element {g} has no inverse")
        return tuple(inv)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, x: int) -> int:
        """x^-1 g x."""
        return self.table[self.table[self.inverse[x]][g]][x]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse[g], -k
        r = 0
        for _ in range(k):
            r = self.table[r][g]
        return r

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.element_order(g) for g in range(self.order)))

    def conjugacy_classes(self) -> Tuple[Tuple[int, ...], ...]:
        """Partition into conjugacy classes, ordered by least member.

        Class 0 is always {identity}.  Each class is sorted ascending.
        """
        if self._classes is None:
            seen = [False] * self.order
            classes = []
            for g in range(self.order):
                if seen[g]:
                    continue
                orbit = sorted({self.conj(g, x) for x in range(self.order)})
                for h in orbit:
                    seen[h] = True
                classes.append(tuple(orbit))
            self._classes = tuple(classes)
            index = [-1] * self.order
            for ci, cl in enumerate(self._classes):
                for g in cl:
                    index[g] = ci
            self._class_index = index
        return self._classes

    def class_of(self, g: int) -> int:
        self.conjugacy_classes()
        return self._class_index[g]

    def centralizer(self, g: int) -> Tuple[int, ...]:
        return tuple(x for x in range(self.order)
                     if self.table[x][g] == self.table[g][x])

    def center(self) -> Tuple[int, ...]:
        return tuple(g for g in range(self.order)
                     if all(self.table[x][g] == self.table[g][x]
                            for x in range(self.order)))

    def check_axioms(self) -> None:
        """Exhaustive closure/associativity/identity/inverse check."""
        n = self.order
        for row in self.table:
            for v in row:
                if not 0 <= v < n:
                    raise AssertionError("not closed")
        t = self.table
        for a in range(n):
            ta = t[a]
            for b in range(n):
                tab = ta[b]
                tb = t[b]
                for c in range(n):
                    if t[tab][c] != ta[tb[c]]:
                        raise AssertionError(f"associativity fails at {(a, b, c)}")


def q8_group() -> FiniteGroup:
    return FiniteGroup(Q8_TABLE, name="q8")


def elementary_abelian_16() -> FiniteGroup:
    """Z2^4 with XOR multiplication on indices 0..15."""
    return FiniteGroup.from_mul(16, lambda a, b: a ^ b, name="h16")


def is_subgroup(G: FiniteGroup, S: Iterable[int]) -> bool:
    s = set(S)
    if 0 not in s:
        return False
    return all(G.mul(a, b) in s for a in s for b in s)


def subgroup_generated(G: FiniteGroup, gens: Iterable[int]) -> Tuple[int, ...]:
    """Least subgroup containing gens, by closure iteration."""
    members = {0}
    frontier = [0]
    gens = list(gens)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                for b in (G.mul(a, g), G.mul(a, G.inv(g))):
                    if b not in members:
                        members.add(b)
                        new.append(b)
        frontier = new
    return tuple(sorted(members))


def centralizer_of_set(G: FiniteGroup, S: Iterable[int]) -> Tuple[int, ...]:
    s = list(S)
    return tuple(x for x in range(G.order)
                 if all(G.mul(x, g) == G.mul(g, x) for g in s))


def commutator(G: FiniteGroup, a: int, b: int) -> int:
    """[a, b] = a^-1 b^-1 a b."""
    return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b))


def commutator_span(G: FiniteGroup, Hsub: Iterable[int], x: int) -> Tuple[int, ...]:
    """Subgroup generated by all [h, x], h in Hsub."""
    return subgroup_generated(G, [commutator(G, h, x) for h in Hsub])


def squares_in(G: FiniteGroup, S: Iterable[int]) -> Tuple[int, ...]:
    s = set(S)
    return tuple(g for g in range(G.order) if G.mul(g, g) in s)


def quotient_group(G: FiniteGroup, N: Iterable[int]) -> Tuple[FiniteGroup, List[int]]:
    """Quotient by a normal subgroup.

    Returns (G/N, projection) where projection[g] is the index of gN.
    Cosets are indexed by their least member, identity coset first.
    """
    n_set = sorted(set(N))
    if not is_subgroup(G, n_set):
        raise ValueError("N is not a subgroup")
    for g in range(G.order):
        if any(G.conj(h, g) not in set(n_set) for h in n_set):
            raise ValueError("N is not normal")
    proj = [-1] * G.order
    cosets: List[Tuple[int, ...]] = []
    for g in range(G.order):
        if proj[g] >= 0:
            continue
        coset = sorted(G.mul(g, h) for h in n_set)
        idx = len(cosets)
        cosets.append(tuple(coset))
        for x in coset:
            proj[x] = idx
    reps = [c[0] for c in cosets]
    table = [[proj[G.mul(a, b)] for b in reps] for a in reps]
    return FiniteGroup(table, name=f"{G.name}/N"), proj


def subgroup_as_group(G: FiniteGroup, S: Iterable[int]) -> Tuple[FiniteGroup, List[int]]:
    """Reindex a subgroup as a standalone FiniteGroup.

    Returns (H, embed) with embed[i] the G-index of H's element i;
    embed is sorted except that the identity comes first (it is element 0
    of G, hence first anyway).
    """
    members = sorted(set(S))
    if not is_subgroup(G, members):
        raise ValueError("not a subgroup")
    pos = {g: i for i, g in enumerate(members)}
    table = [[pos[G.mul(a, b)] for b in members] for a in members]
    return FiniteGroup(table), members
