"""Exact linear algebra over GF(2) in dimension 4.

Vectors are packed as 4-bit integers 0..15 with coordinate 0 in the most
significant bit, so numeric order on packed values equals lexicographic
order on bit tuples.  Matrices are 4-tuples of packed row integers; the
16-bit row concatenation (row0 most significant) is the canonical matrix
ordering.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Tuple

GF2Vector = int                      # 0..15
GF2Matrix = Tuple[int, int, int, int]
Functional = int                     # covector, 0..15

DIM = 4
IDENTITY: GF2Matrix = (0b1000, 0b0100, 0b0010, 0b0001)

GL4_ORDER = 20160


def vec_bits(v: GF2Vector) -> Tuple[int, int, int, int]:
    """Unpack to the bit tuple (b0, b1, b2, b3)."""
    return ((v >> 3) & 1, (v >> 2) & 1, (v >> 1) & 1, v & 1)


def vec_from_bits(bits) -> GF2Vector:
    b = tuple(bits)
    if len(b) != DIM or any(x not in (0, 1) for x in b):
        raise ValueError(f"need 4 bits in {{0,1}}, got {bits!r}")
    return (b[0] << 3) | (b[1] << 2) | (b[2] << 1) | b[3]


def dot(u: GF2Vector, v: GF2Vector) -> int:
    """Standard bilinear form, value in {0, 1}."""
    return bin(u & v).count("1") & 1


def mat_vec(a: GF2Matrix, v: GF2Vector) -> GF2Vector:
    r = 0
    for row in a:
        r = (r << 1) | (bin(row & v).count("1") & 1)
    return r


def mat_mul(a: GF2Matrix, b: GF2Matrix) -> GF2Matrix:
    rows = []
    for arow in a:
        acc = 0
        for j in range(DIM):
            if (arow >> (DIM - 1 - j)) & 1:
                acc ^= b[j]
        rows.append(acc)
    return tuple(rows)


def mat_pow(a: GF2Matrix, k: int) -> GF2Matrix:
    r = IDENTITY
    for _ in range(k):
        r = mat_mul(r, a)
    return r


def is_invertible(a: GF2Matrix) -> bool:
    # Gaussian elimination on packed rows.
    rows = list(a)
    rank = 0
    for col in range(DIM):
        bit = 1 << (DIM - 1 - col)
        pivot = next((i for i in range(rank, DIM) if rows[i] & bit), None)
        if pivot is None:
            return False
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(DIM):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return True


def mat_inverse(a: GF2Matrix) -> GF2Matrix:
    """Inverse via Gauss-Jordan on the augmented system."""
    rows = [(a[i] << DIM) | IDENTITY[i] for i in range(DIM)]
    rank = 0
    for col in range(DIM):
        bit = 1 << (2 * DIM - 1 - col)
        pivot = next((i for i in range(rank, DIM) if rows[i] & bit), None)
        if pivot is None:
            raise ValueError(f"matrix {a} is singular")
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(DIM):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return tuple(r & 0b1111 for r in rows)


def mat_order(a: GF2Matrix) -> int:
    if not is_invertible(a):
        raise ValueError(f"matrix {a} is not invertible")
    k = 1
    b = a
    while b != IDENTITY:
        b = mat_mul(b, a)
        k += 1
        if k > GL4_ORDER:
            raise AssertionError("order exceeds |GL4(2)|; broken matrix")
    return k


def enumerate_functionals() -> list:
    """All 15 nonzero covectors, in lexicographic (= numeric) order."""
    return list(range(1, 16))


def kernel_of(f: Functional) -> list:
    """Vectors annihilated by the covector; a hyperplane when f != 0."""
    return [v for v in range(16) if dot(f, v) == 0]


def fixed_space(a: GF2Matrix) -> list:
    """All v with a.v = v; a subspace of F2^4."""
    return [v for v in range(16) if mat_vec(a, v) == v]


def mat_key(a: GF2Matrix) -> int:
    """16-bit row concatenation; the canonical ordering key."""
    return (a[0] << 12) | (a[1] << 8) | (a[2] << 4) | a[3]


def mat_from_key(key: int) -> GF2Matrix:
    return ((key >> 12) & 15, (key >> 8) & 15, (key >> 4) & 15, key & 15)


def iter_matrices() -> Iterator[GF2Matrix]:
    """All 65536 matrices in canonical order."""
    for key in range(1 << 16):
        yield mat_from_key(key)


@lru_cache(maxsize=1)
def invertible_matrices() -> tuple:
    """All of GL4(2), canonically ordered.  Cached; |GL4(2)| = 20160."""
    mats = tuple(m for m in iter_matrices() if is_invertible(m))
    assert len(mats) == GL4_ORDER
    return mats
