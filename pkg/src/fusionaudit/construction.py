"""The order-128 counterexample group and its distinguished data.

Builds G = H x| Q with H = Z2^4 and Q the quaternion group acting
faithfully through an embedding Q8 -> GL4(2) found by exhaustive search.
Also computes H0 = [H, z], the commutator-intersection identity, and the
linear character lambda of H driving the induced-character construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import gf2
from .groups import (
    FiniteGroup,
    Q8_MINUS_ONE,
    Q8_TABLE,
    centralizer_of_set,
    commutator_span,
)

Permutation = Tuple[int, ...]


def q8_regular_embedding() -> Dict[int, Permutation]:
    """Left-multiplication action of Q8 on its own 8 elements."""
    return {q: tuple(Q8_TABLE[q][x] for x in range(8)) for q in range(8)}


def permutation_is_even(perm: Permutation) -> bool:
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        transpositions += length - 1
    return transpositions % 2 == 0


@dataclass(frozen=True)
class Q8Embedding:
    """A faithful homomorphism Q8 -> GL4(2), indexed by Q8 element."""
    rho: Tuple[gf2.GF2Matrix, ...]

    def check(self) -> None:
        assert self.rho[0] == gf2.IDENTITY
        assert self.rho[Q8_MINUS_ONE] != gf2.IDENTITY
        for a in range(8):
            for b in range(8):
                if gf2.mat_mul(self.rho[a], self.rho[b]) != self.rho[Q8_TABLE[a][b]]:
                    raise AssertionError(f"not a homomorphism at pair ({a}, {b})")
        if len(set(self.rho)) != 8:
            raise AssertionError("embedding is not faithful")


def find_q8_in_gl42() -> Q8Embedding:
    """Exhaustive, canonical search for Q8 inside GL4(2).

    Returns the embedding generated by the lexicographically least pair
    (A, B) of invertible matrices with A^4 = I, A^2 != I, B^2 = A^2 and
    A*B = B*A^-1 (equivalently B^-1 A B = A^-1).  The quaternion
    presentation forces <A, B> to be a faithful copy of Q8.
    """
    candidates = gf2.invertible_matrices()
    by_square: Dict[gf2.GF2Matrix, List[gf2.GF2Matrix]] = {}
    for m in candidates:
        by_square.setdefault(gf2.mat_mul(m, m), []).append(m)
    for a in candidates:
        a2 = gf2.mat_mul(a, a)
        if a2 == gf2.IDENTITY or gf2.mat_mul(a2, a2) != gf2.IDENTITY:
            continue
        a_inv = gf2.mat_inverse(a)
        for b in by_square.get(a2, ()):
            if gf2.mat_mul(a, b) == gf2.mat_mul(b, a_inv):
                return _embedding_from_generators(a, b)
    raise AssertionError("no Q8 inside GL4(2); search is broken")


def _embedding_from_generators(a: gf2.GF2Matrix, b: gf2.GF2Matrix) -> Q8Embedding:
    # Q8 index order: 1, -1, i, -i, j, -j, k, -k with i -> a, j -> b.
    a2 = gf2.mat_mul(a, a)
    rho = (
        gf2.IDENTITY,
        a2,
        a,
        gf2.mat_mul(a2, a),
        b,
        gf2.mat_mul(a2, b),
        gf2.mat_mul(a, b),
        gf2.mat_mul(a2, gf2.mat_mul(a, b)),
    )
    emb = Q8Embedding(rho)
    emb.check()
    return emb


@dataclass(frozen=True)
class ConstructedGroup:
    """The 128-element group H x| Q with its distinguished subgroups.

    Element index = 8 * (vector bits as 0..15) + (Q8 index 0..7); the
    identity (0, 1) is index 0.
    """
    group: FiniteGroup
    embedding: Q8Embedding
    h_subgroup: Tuple[int, ...]       # all (h, 1)
    q_subgroup: Tuple[int, ...]       # all (0, q)
    z_lift: int                       # (0, -1)

    def index(self, hbits: int, qidx: int) -> int:
        return 8 * hbits + qidx

    def hbits(self, g: int) -> int:
        return g >> 3

    def qidx(self, g: int) -> int:
        return g & 7


def build_g(embedding: Q8Embedding) -> ConstructedGroup:
    """Semidirect product with (h1,q1)(h2,q2) = (h1 + rho(q1)h2, q1q2)."""
    embedding.check()
    rho = embedding.rho

    def mul(x: int, y: int) -> int:
        h1, q1 = x >> 3, x & 7
        h2, q2 = y >> 3, y & 7
        return ((h1 ^ gf2.mat_vec(rho[q1], h2)) << 3) | Q8_TABLE[q1][q2]

    G = FiniteGroup.from_mul(128, mul, name="g128")
    H = tuple(8 * h for h in range(16))
    Q = tuple(range(8))
    cg = ConstructedGroup(G, embedding, H, Q, z_lift=Q8_MINUS_ONE)

    if centralizer_of_set(G, H) != H:
        raise AssertionError("C_G(H) != H; the action is not faithful")
    _check_quotient_is_q8(cg)
    return cg


def _check_quotient_is_q8(cg: ConstructedGroup) -> None:
    # Cosets of H are indexed by the Q8 component; their multiplication
    # must reproduce the Q8 Cayley table.
    G = cg.group
    for q1 in range(8):
        for q2 in range(8):
            if G.mul(q1, q2) & 7 != Q8_TABLE[q1][q2]:
                raise AssertionError("G/H does not multiply like Q8")


def compute_h0(cg: ConstructedGroup) -> Tuple[int, ...]:
    """H0 = [H, z]; always of order 2 for a faithful Q8 action."""
    h0 = commutator_span(cg.group, cg.h_subgroup, cg.z_lift)
    if len(h0) != 2:
        raise AssertionError(f"|[H, z]| = {len(h0)}, expected 2")
    return h0


def intersect_commutators(cg: ConstructedGroup) -> Tuple[int, ...]:
    """Intersection of [H, x] over the 7 nontrivial cosets xH."""
    common = set(range(cg.group.order))
    for x in cg.q_subgroup:
        if x == 0:
            continue
        common &= set(commutator_span(cg.group, cg.h_subgroup, x))
    return tuple(sorted(common))


@dataclass(frozen=True)
class LambdaChoice:
    """A linear character lambda_v of H with h -> (-1)^(v.h).

    kernel holds the G-indices of ker(lambda), a hyperplane of H not
    containing H0.
    """
    covector: int
    kernel: Tuple[int, ...]
    h0_element: int                   # G-index of the nonidentity element of H0

    def value_sign(self, g: int) -> int:
        """+1/-1 on H (g must be an H index, i.e. q-part trivial)."""
        if g & 7:
            raise ValueError(f"element {g} is not in H")
        return -1 if gf2.dot(self.covector, g >> 3) else 1


def valid_covectors(cg: ConstructedGroup) -> List[int]:
    """All covectors v with ker(lambda_v) not containing H0; exactly 8."""
    h0 = compute_h0(cg)
    h0_bits = h0[1] >> 3
    return [v for v in gf2.enumerate_functionals() if gf2.dot(v, h0_bits) == 1]


def choose_lambda(cg: ConstructedGroup, covector: int | None = None) -> LambdaChoice:
    """Deterministic lambda: least valid covector unless one is supplied.

    Verifies the defining condition directly: [H, x] is not inside
    ker(lambda) for any nontrivial coset xH.
    """
    valid = valid_covectors(cg)
    if covector is None:
        covector = valid[0]
    elif covector not in valid:
        raise ValueError(f"covector {covector} does not cut H0")
    h0 = compute_h0(cg)
    kernel = tuple(8 * h for h in range(16) if gf2.dot(covector, h) == 0)
    kernel_set = set(kernel)
    for x in cg.q_subgroup:
        if x == 0:
            continue
        span = commutator_span(cg.group, cg.h_subgroup, x)
        if set(span) <= kernel_set:
            raise AssertionError(f"[H, x] lies in ker lambda for coset of {x}")
    return LambdaChoice(covector=covector, kernel=kernel, h0_element=h0[1])


def build_default() -> ConstructedGroup:
    """The canonical construction used by the audit pipeline."""
    return build_g(find_q8_in_gl42())
