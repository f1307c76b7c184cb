"""Class functions, induced characters, FS indicators, and character tables.

Two independent routes to every headline quantity: direct constructive
characters (induction from H, lifts from G/H) and a Burnside-Dixon table
computed from class-multiplication coefficients modulo a suitable prime,
lifted exactly into Z[zeta_n].  All arithmetic is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .cyclotomic import Cyclotomic, _power_reductions
from .groups import FiniteGroup, is_subgroup


@dataclass(frozen=True)
class ClassFunction:
    """A function constant on conjugacy classes, one Cyclotomic per class."""
    group: FiniteGroup
    values: Tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.conjugacy_classes()):
            raise ValueError("one value per conjugacy class required")

    def value_at(self, g: int) -> Cyclotomic:
        return self.values[self.group.class_of(g)]

    def degree(self) -> Fraction:
        r = self.values[0].as_rational()
        if r is None:
            raise ValueError("value at identity is irrational")
        return r

    def root_order(self) -> int:
        return self.values[0].n

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.group is other.group
                and self.values == other.values)

    def __hash__(self):
        return hash((id(self.group), self.values))


def trivial_character(G: FiniteGroup, n: Optional[int] = None) -> ClassFunction:
    n = n or G.exponent()
    one = Cyclotomic.from_rational(n, 1)
    return ClassFunction(G, tuple(one for _ in G.conjugacy_classes()))


def regular_character(G: FiniteGroup, n: Optional[int] = None) -> ClassFunction:
    n = n or G.exponent()
    vals = [Cyclotomic.from_rational(n, G.order if cl == (0,) else 0)
            for cl in G.conjugacy_classes()]
    return ClassFunction(G, tuple(vals))


def induce(G: FiniteGroup, sub: Sequence[int], values: Dict[int, Cyclotomic],
           n: Optional[int] = None) -> ClassFunction:
    """Induced class function: g -> |S|^-1 sum_t value(t^-1 g t), zero off S."""
    sub_set = set(sub)
    if not is_subgroup(G, sub_set):
        raise ValueError("induction subgroup is not a subgroup")
    if set(values) != sub_set:
        raise ValueError("values must cover exactly the subgroup")
    n = n or G.exponent()
    vals = []
    for cl in G.conjugacy_classes():
        g = cl[0]
        acc = Cyclotomic.zero(n)
        for t in range(G.order):
            x = G.conj(g, t)
            if x in sub_set:
                acc = acc + values[x].to_order(n)
        vals.append(acc * Fraction(1, len(sub_set)))
    return ClassFunction(G, tuple(vals))


def inner_product(a: ClassFunction, b: ClassFunction) -> Cyclotomic:
    """<a, b> = |G|^-1 sum_g a(g) conj(b(g)), computed classwise."""
    if a.group is not b.group:
        raise ValueError("class functions live on different groups")
    n = lcm(a.root_order(), b.root_order())
    acc = Cyclotomic.zero(n)
    for cl, av, bv in zip(a.group.conjugacy_classes(), a.values, b.values):
        acc = acc + len(cl) * (av.to_order(n) * bv.to_order(n).conjugate())
    return acc * Fraction(1, a.group.order)


def pointwise_product(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    if a.group is not b.group:
        raise ValueError("class functions live on different groups")
    n = lcm(a.root_order(), b.root_order())
    return ClassFunction(a.group, tuple(
        av.to_order(n) * bv.to_order(n) for av, bv in zip(a.values, b.values)))


def dual_character(a: ClassFunction) -> ClassFunction:
    return ClassFunction(a.group, tuple(v.conjugate() for v in a.values))


def fs_indicator(a: ClassFunction) -> Fraction:
    """Second Frobenius-Schur indicator |G|^-1 sum_g a(g^2)."""
    G = a.group
    n = a.root_order()
    acc = Cyclotomic.zero(n)
    for cl in G.conjugacy_classes():
        g2 = G.mul(cl[0], cl[0])
        acc = acc + len(cl) * a.value_at(g2)
    r = (acc * Fraction(1, G.order)).as_rational()
    if r is None:
        raise ValueError("indicator sum is irrational; input is not a character")
    return r


def lift_from_quotient(c: ClassFunction, G: FiniteGroup,
                       proj: Sequence[int]) -> ClassFunction:
    """Pull a class function on G/N back to G along the projection."""
    Q = c.group
    if len(proj) != G.order or max(proj) != Q.order - 1:
        raise ValueError("projection does not match the quotient")
    return ClassFunction(G, tuple(
        c.value_at(proj[cl[0]]) for cl in G.conjugacy_classes()))


def restrict(a: ClassFunction, H: FiniteGroup, embed: Sequence[int]) -> ClassFunction:
    """Restrict along an embedding H -> G given by G-indices."""
    return ClassFunction(H, tuple(
        a.value_at(embed[cl[0]]) for cl in H.conjugacy_classes()))


# ---------------------------------------------------------------------------
# Burnside-Dixon character table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    irreducibles: Tuple[ClassFunction, ...]
    class_sizes: Tuple[int, ...]
    class_rep_orders: Tuple[int, ...]
    root_order: int
    prime: int

    def degrees(self) -> Tuple[int, ...]:
        return tuple(int(chi.degree()) for chi in self.irreducibles)

    def indicators(self) -> Tuple[int, ...]:
        out = []
        for chi in self.irreducibles:
            nu = fs_indicator(chi)
            if nu.denominator != 1 or nu.numerator not in (-1, 0, 1):
                raise AssertionError(f"indicator {nu} outside {{-1,0,1}}")
            out.append(nu.numerator)
        return tuple(out)

    def row_of(self, c: ClassFunction) -> Optional[int]:
        """Index of an irreducible equal to c as a class function, if any."""
        target = tuple(v.to_order(self.root_order) for v in c.values)
        for i, chi in enumerate(self.irreducibles):
            if chi.values == target:
                return i
        return None


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, isqrt(m) + 1))


def dixon_prime(order: int, exponent: int) -> int:
    """Least prime p = 1 mod exponent with p > 2 * ceil(sqrt(order))."""
    c = isqrt(order)
    if c * c < order:
        c += 1
    p = 2 * c + 1
    while not (_is_prime(p) and (p - 1) % exponent == 0):
        p += 1
    return p


def _inv_mod(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def _primitive_root(p: int) -> int:
    factors = [f for f in range(2, p) if (p - 1) % f == 0 and _is_prime(f)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise AssertionError(f"no primitive root mod {p}")


def _rref_mod(rows: List[List[int]], p: int) -> Tuple[List[List[int]], List[int]]:
    rows = [r[:] for r in rows]
    pivots: List[int] = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = _inv_mod(rows[rank][col] % p, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                f = rows[i][col] % p
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return [r for r in rows[:rank]], pivots


def _nullspace_mod(mat: List[List[int]], p: int) -> List[List[int]]:
    n = len(mat)
    red, pivots = _rref_mod(mat, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % p
        basis.append(v)
    return basis


def _class_matrices(G: FiniteGroup) -> List[List[List[int]]]:
    """a[i][j][k] = #{x in C_i : x^-1 g_k in C_j} = structure constants."""
    classes = G.conjugacy_classes()
    reps = [cl[0] for cl in classes]
    r = len(classes)
    mats = []
    for i in range(r):
        m = [[0] * r for _ in range(r)]
        for x in classes[i]:
            xin = G.inv(x)
            for k, gk in enumerate(reps):
                j = G.class_of(G.mul(xin, gk))
                m[j][k] += 1
        mats.append(m)
    return mats


def dixon_table(G: FiniteGroup, size_cap: int = 1024) -> CharacterTable:
    """Exact character table via the Burnside-Dixon method.

    Common eigenvectors of the class matrices over F_p give the central
    characters mod p; degrees come from the orthogonality relation and
    values are lifted to Z[zeta_n] by discrete Fourier inversion of the
    eigenvalue multiplicities.
    """
    if G.order > size_cap:
        raise ValueError(f"|G| = {G.order} exceeds size cap {size_cap}")
    classes = G.conjugacy_classes()
    reps = [cl[0] for cl in classes]
    sizes = [len(cl) for cl in classes]
    r = len(classes)
    n = G.exponent()
    p = dixon_prime(G.order, n)
    mats = _class_matrices(G)

    # Split the common eigenspaces of all class matrices over F_p.
    spaces: List[Tuple[List[List[int]], List[int]]] = [_rref_mod(
        [[1 if i == j else 0 for j in range(r)] for i in range(r)], p)]
    for mi in range(1, r):
        A = mats[mi]
        new_spaces: List[Tuple[List[List[int]], List[int]]] = []
        for basis, pivots in spaces:
            d = len(basis)
            if d == 1:
                new_spaces.append((basis, pivots))
                continue
            # Matrix of A on the subspace, in rref coordinates.
            T = []
            for b in basis:
                w = [sum(A[j][k] * b[k] for k in range(r)) % p for j in range(r)]
                T.append([w[pc] for pc in pivots])
            M = [[T[m][l] for m in range(d)] for l in range(d)]  # transpose
            split_total = 0
            for lam in range(p):
                shifted = [[(M[i][j] - (lam if i == j else 0)) % p
                            for j in range(d)] for i in range(d)]
                null = _nullspace_mod(shifted, p)
                if not null:
                    continue
                vecs = [[sum(c[m] * basis[m][k] for m in range(d)) % p
                         for k in range(r)] for c in null]
                new_spaces.append(_rref_mod(vecs, p))
                split_total += len(null)
            if split_total != d:
                raise AssertionError("class matrix not diagonalizable mod p")
        spaces = new_spaces
    if any(len(b) != 1 for b, _ in spaces):
        raise AssertionError("eigenspace splitting did not terminate")

    # Power map on classes, for both degrees and the Fourier lift.
    power_class = [[G.class_of(G.power(g, t)) for t in range(n)] for g in reps]
    inv_class = [G.class_of(G.inv(g)) for g in reps]

    g0 = _primitive_root(p)
    omega = pow(g0, (p - 1) // n, p)
    n_inv = _inv_mod(n % p, p)

    chars: List[ClassFunction] = []
    for basis, _ in spaces:
        v = basis[0]
        v = [(x * _inv_mod(v[0], p)) % p for x in v]
        s = sum(v[j] * v[inv_class[j]] * _inv_mod(sizes[j], p) for j in range(r)) % p
        d_sq = (G.order * _inv_mod(s, p)) % p
        deg = next(t for t in range(1, p) if t * t % p == d_sq and 2 * t < p)
        chi_mod = [(deg * v[j] * _inv_mod(sizes[j], p)) % p for j in range(r)]
        values = []
        for j in range(r):
            powers = {}
            for k in range(n):
                m_k = 0
                for t in range(n):
                    m_k += chi_mod[power_class[j][t]] * pow(omega, (-t * k) % (p - 1), p)
                m_k = (m_k * n_inv) % p
                if m_k:
                    powers[k] = m_k
            values.append(Cyclotomic.from_powers(n, powers))
        assert values[0] == deg
        chars.append(ClassFunction(G, tuple(values)))

    chars.sort(key=lambda c: (c.degree(), tuple(v.render() for v in c.values)))
    return CharacterTable(
        group=G,
        irreducibles=tuple(chars),
        class_sizes=tuple(sizes),
        class_rep_orders=tuple(G.element_order(g) for g in reps),
        root_order=n,
        prime=p,
    )


# ---------------------------------------------------------------------------
# Fusion rules
# ---------------------------------------------------------------------------

def fusion_tensor(table: CharacterTable) -> List[List[List[int]]]:
    """N[p][q][r] = <chi_p chi_q, chi_r>; nonnegative rational integers."""
    n = table.root_order
    r_count = len(table.irreducibles)
    sizes = table.class_sizes
    order = table.group.order
    red = _power_reductions(n)
    deg = len(red[0])

    def raw(chi: ClassFunction) -> List[Tuple[int, ...]]:
        out = []
        for v in chi.values:
            if v.den != 1:
                raise AssertionError("character value is not an algebraic integer")
            out.append(v.num)
        return out

    def vmul(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = [0] * deg
        for k, c in enumerate(conv):
            if c:
                row = red[k]
                for j in range(deg):
                    out[j] += c * row[j]
        return tuple(out)

    rows = [raw(chi) for chi in table.irreducibles]
    conj_rows = [[Cyclotomic(n, list(v), 1).conjugate().num for v in row]
                 for row in rows]
    N = [[[0] * r_count for _ in range(r_count)] for _ in range(r_count)]
    nclasses = len(sizes)
    for pi in range(r_count):
        for qi in range(pi, r_count):
            prod = [vmul(rows[pi][j], rows[qi][j]) for j in range(nclasses)]
            for ri in range(r_count):
                acc = [0] * deg
                cr = conj_rows[ri]
                for j in range(nclasses):
                    term = vmul(prod[j], cr[j])
                    sz = sizes[j]
                    for m in range(deg):
                        acc[m] += sz * term[m]
                if any(acc[1:]) or acc[0] % order:
                    raise AssertionError(
                        f"fusion multiplicity at ({pi},{qi},{ri}) is not an integer")
                val = acc[0] // order
                if val < 0:
                    raise AssertionError(
                        f"negative fusion multiplicity at ({pi},{qi},{ri})")
                N[pi][qi][ri] = val
                N[qi][pi][ri] = val
    return N
