"""The fusion ring at a root of unity and its surface invariants.

At order m the truncation level ell is the least k >= 2 with [k] = 0.
The simple classes are V_0 .. V_(ell-2).  Multiplicities are derived from
the negligibility criterion itself: decompose V_a ox V_b by the Jordan
type of E, read a block of size c+1 < ell as a copy of V_c and a block of
size ell as one free rank of the negligible part.  No closed fusion
formula is assumed anywhere; the dimension bookkeeping

    sum_c N[a][b][c] (c+1)  +  (negligible rank) * ell  =  (a+1)(b+1)

and the ring axioms are checked by the test suite instead.

Frobenius data: eta reads off the coefficient of the unit class, so
theta(a, b) = N[a][b][0]; the handle element is H = sum g^{ab} x_a x_b for
the inverse Gram matrix g, and the genus-g surface invariant is eta(H^g).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import QinvError
from .ring import CyclotomicRing, find_truncation_level
from .uqsl2 import jordan_type_E, make_rep, tensor_pair


@dataclass(frozen=True)
class FusionRing:
    ell: int
    table: tuple[tuple[tuple[int, ...], ...], ...]  # N[a][b][c]

    @property
    def rank(self) -> int:
        return self.ell - 1


@dataclass(frozen=True)
class FrobeniusData:
    ring: FusionRing
    eta: tuple[int, ...]
    gram: tuple[tuple[int, ...], ...]
    handle: tuple[Fraction, ...]


def fusion_decompose(a: int, b: int, m: int) -> tuple[tuple[int, ...], int]:
    """Multiplicities (N_ab^c for c = 0..ell-2) and the negligible rank."""
    ell = find_truncation_level(m)
    if not (0 <= a <= ell - 2 and 0 <= b <= ell - 2):
        raise QinvError(f"color out of truncated range 0..{ell - 2}")
    ring = CyclotomicRing(m)
    prod = tensor_pair(make_rep(a, ring), make_rep(b, ring))
    blocks = jordan_type_E(prod, ell)
    mult = [0] * (ell - 1)
    negligible = 0
    for size, count in blocks.items():
        if size == ell:
            negligible = count
        elif size <= ell - 1:
            mult[size - 1] = count
        else:
            raise QinvError(f"unexpected Jordan block of size {size} at level {ell}")
    if sum((c + 1) * n for c, n in enumerate(mult)) + negligible * ell != (a + 1) * (b + 1):
        raise QinvError("dimension bookkeeping failed")
    return tuple(mult), negligible


@lru_cache(maxsize=None)
def fusion_ring(m: int) -> FusionRing:
    """The full multiplication table of the semisimplified classes."""
    ell = find_truncation_level(m)
    if ell < 3:
        raise QinvError(f"truncation level {ell} leaves no room for a fusion ring")
    rank = ell - 1
    table = []
    for a in range(rank):
        row = []
        for b in range(rank):
            if b < a:
                row.append(table[b][a])  # symmetric; reuse
            else:
                row.append(fusion_decompose(a, b, m)[0])
        table.append(row)
    return FusionRing(ell, tuple(tuple(r) for r in table))


def check_ring_axioms(R: FusionRing):
    """None if unit, commutativity and associativity hold; else a witness."""
    rank = R.rank
    N = R.table
    for b in range(rank):
        for c in range(rank):
            if N[0][b][c] != (1 if b == c else 0):
                return ("unit", (0, b, c))
    for a in range(rank):
        for b in range(rank):
            if N[a][b] != N[b][a]:
                return ("commutativity", (a, b))
    for a in range(rank):
        for b in range(rank):
            for c in range(rank):
                for d in range(rank):
                    lhs = sum(N[a][b][e] * N[e][c][d] for e in range(rank))
                    rhs = sum(N[b][c][e] * N[a][e][d] for e in range(rank))
                    if lhs != rhs:
                        return ("associativity", (a, b, c, d))
    return None


def multiply(R: FusionRing, x, y):
    """Product of two class vectors via the structure constants."""
    rank = R.rank
    out = [x[0] * 0] * rank
    for a in range(rank):
        if not x[a]:
            continue
        for b in range(rank):
            if not y[b]:
                continue
            coef = x[a] * y[b]
            for c in range(rank):
                n = R.table[a][b][c]
                if n:
                    out[c] = out[c] + coef * n
    return tuple(out)


def frobenius_data(R: FusionRing) -> FrobeniusData:
    """eta = coefficient of the unit class; theta(a,b) = eta(x_a x_b)."""
    rank = R.rank
    eta = tuple(1 if a == 0 else 0 for a in range(rank))
    gram = tuple(tuple(R.table[a][b][0] for b in range(rank)) for a in range(rank))
    ginv = _invert_integer_matrix(gram)
    if ginv is None:
        raise QinvError("theta degenerate")
    handle = [Fraction(0)] * rank
    for a in range(rank):
        for b in range(rank):
            if ginv[a][b]:
                for c in range(rank):
                    n = R.table[a][b][c]
                    if n:
                        handle[c] += ginv[a][b] * n
    return FrobeniusData(R, eta, gram, tuple(handle))


def surface_invariant(genus: int, F: FrobeniusData) -> Fraction:
    """eta(H^genus): the closed-surface invariant of the handle element."""
    if genus < 0:
        raise QinvError("genus must be nonnegative")
    rank = F.ring.rank
    acc = tuple(Fraction(1 if c == 0 else 0) for c in range(rank))  # unit class
    for _ in range(genus):
        acc = multiply(F.ring, acc, F.handle)
    return sum(e * x for e, x in zip(F.eta, acc))


def check_semisimple(R: FusionRing) -> bool:
    """Nondegeneracy of theta and of the regular trace form."""
    rank = R.rank
    gram = [[Fraction(R.table[a][b][0]) for b in range(rank)] for a in range(rank)]
    if _det(gram) == 0:
        return False
    # trace form T(a,b) = trace of left multiplication by x_a x_b
    T = [[Fraction(0)] * rank for _ in range(rank)]
    for a in range(rank):
        for b in range(rank):
            t = 0
            for e in range(rank):
                n = R.table[a][b][e]
                if n:
                    t += n * sum(R.table[e][c][c] for c in range(rank))
            T[a][b] = Fraction(t)
    return _det(T) != 0


def _det(mat) -> Fraction:
    mat = [row[:] for row in mat]
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col]:
                f = mat[r][col] * inv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return det


def _invert_integer_matrix(mat):
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
