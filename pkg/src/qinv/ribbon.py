"""Braiding, twist and duality morphisms on colored strands.

A strand is a pair (color n, orientation); an upward strand carries the
irreducible of highest weight n, a downward strand its dual.  Tensor
products are realized on concrete Kronecker-product spaces, so the
associativity constraint is the identity and bracketing checks reduce to
equality of iterated constructions.

The braiding on X ox Y is

    flip o q^(wt . wt / 2) o ( sum_k  q^(k(k-1)/2) (q - q^-1)^k  F^k ox E^(k) )

where the Cartan factor multiplies a vector of weights (w1, w2) by
v^(w1 w2), E^(k) = E^k/[k]! is the divided power, and the sum truncates as
soon as F^k or E^k vanishes.  The inverse braiding uses the inverse series
sum_k (-1)^k q^(-k(k-1)/2) (q - q^-1)^k F^k ox E^(k), applied after the
inverse Cartan factor.  Both are computed once over the generic Laurent
ring and specialized on demand.  This operator order and the slot order
F ox E are forced by the intertwining property for the coproduct above
(the mirrored choice also intertwines but sends a positive kink to the
inverse twist).

The twist scalar on color n is v^(n(n+2)).

Duality morphisms (ev / coev is the left pair, the pivotal pair trades the
sides using K):

    ev      : X* ox X  -> 1,   f ox x |-> f(x)
    coev    : 1  -> X ox X*,   1 |-> sum_j  m_j ox f_j
    ev_piv  : X ox X*  -> 1,   x ox f |-> f(K^-1 x)
    coev_piv: 1  -> X* ox X,   1 |-> sum_j  f_j ox K m_j

The K / K^-1 placement is forced: it is the unique choice for which both
pivotal morphisms intertwine the E, F, K actions (the mirrored choice
satisfies the zig-zags too but is not a morphism of modules, and it would
send a positive kink to the inverse twist).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import QinvError
from .ring import GENERIC, Laurent, ScalarRing, quantum_integer
from .smatrix import SMat
from .uqsl2 import Rep, divided_E_power, dual_rep, make_rep, tensor_pair

UP = 1
DOWN = -1


@dataclass(frozen=True)
class Signature:
    """An ordered list of (color, orientation) strands."""

    strands: tuple[tuple[int, int], ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(n + 1 for n, _ in self.strands)

    @property
    def dim(self) -> int:
        d = 1
        for n, _ in self.strands:
            d *= n + 1
        return d

    def __len__(self):
        return len(self.strands)

    def concat(self, other: Signature) -> Signature:
        return Signature(self.strands + other.strands)


EMPTY = Signature(())


def sig(*strands: tuple[int, int]) -> Signature:
    return Signature(tuple(strands))


def up_signature(colors) -> Signature:
    return Signature(tuple((c, UP) for c in colors))


@dataclass(frozen=True)
class Morphism:
    """A sparse matrix between tensor products of colored strands."""

    dom: Signature
    cod: Signature
    mat: SMat
    ring: ScalarRing

    def __post_init__(self):
        assert self.mat.rows == self.cod.dim and self.mat.cols == self.dom.dim


def identity_morphism(s: Signature, ring: ScalarRing = GENERIC) -> Morphism:
    return Morphism(s, s, SMat.identity(s.dim, ring.one), ring)


def compose(g: Morphism, f: Morphism) -> Morphism:
    if f.cod != g.dom:
        raise QinvError(f"signature mismatch: {f.cod} then {g.dom}")
    if f.ring != g.ring:
        raise QinvError("composition across scalar rings")
    return Morphism(f.dom, g.cod, g.mat @ f.mat, f.ring)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    if f.ring != g.ring:
        raise QinvError("tensor across scalar rings")
    return Morphism(f.dom.concat(g.dom), f.cod.concat(g.cod), f.mat.kron(g.mat), f.ring)


# ---------------------------------------------------------------------------
# Braiding


def _flip_matrix(da: int, db: int, one) -> SMat:
    return SMat(da * db, da * db, {(j * da + i, i * db + j): one for i in range(da) for j in range(db)})


def _cartan_diag(a: Rep, b: Rep, sign: int) -> SMat:
    entries = {}
    for i, wa in enumerate(a.weights):
        for j, wb in enumerate(b.weights):
            k = i * b.dim + j
            entries[k, k] = Laurent.v_power(sign * wa * wb)
    return SMat(a.dim * b.dim, a.dim * b.dim, entries)


def _theta_series(a: Rep, b: Rep, inverse: bool) -> SMat:
    """sum_k c_k F^k|_a ox E^(k)|_b over the generic ring."""
    one = GENERIC.one
    total = SMat.identity(a.dim * b.dim, one)
    qdiff = Laurent.q_power(1) - Laurent.q_power(-1)
    Fk = a.F
    k = 1
    while not Fk.is_zero():
        Ek = divided_E_power(b, k)
        if Ek.is_zero():
            break
        e = -k * (k - 1) // 2 if inverse else k * (k - 1) // 2
        coeff = Laurent.q_power(e) * qdiff**k
        if inverse and k % 2:
            coeff = -coeff
        total = total + Fk.kron(Ek).scale(coeff)
        k += 1
        Fk = Fk @ a.F
    return total


def braiding_matrix(a: Rep, b: Rep, sign: int = 1) -> SMat:
    """The braiding A ox B -> B ox A as a raw matrix over the generic ring.

    sign=-1 gives the exact inverse of the braiding B ox A -> A ox B.
    """
    if a.ring != GENERIC or b.ring != GENERIC:
        raise QinvError("braidings are built generically, convert afterwards")
    flip = _flip_matrix(a.dim, b.dim, GENERIC.one)
    if sign > 0:
        return flip @ _cartan_diag(a, b, +1) @ _theta_series(a, b, inverse=False)
    # (S+_{B,A})^-1 = Thetabar o C^-1 o flip, with the middle factors on B ox A.
    return _theta_series(b, a, inverse=True) @ _cartan_diag(b, a, -1) @ flip


@lru_cache(maxsize=None)
def _braiding_generic(m: int, n: int, sign: int) -> SMat:
    return braiding_matrix(make_rep(m), make_rep(n), sign)


def braiding(m: int, n: int, sign: int = 1, ring: ScalarRing = GENERIC) -> Morphism:
    """Braiding V_m ox V_n -> V_n ox V_m on upward strands."""
    mat = _braiding_generic(m, n, 1 if sign >= 0 else -1)
    if ring != GENERIC:
        mat = mat.map_entries(ring.convert)
    return Morphism(sig((m, UP), (n, UP)), sig((n, UP), (m, UP)), mat, ring)


def twist(n: int) -> Laurent:
    """Twist scalar on color n."""
    return Laurent.v_power(n * (n + 2))


def twist_inverse(n: int) -> Laurent:
    return Laurent.v_power(-n * (n + 2))


def quantum_dim(n: int, ring: ScalarRing = GENERIC):
    """Loop value of an unknotted circle of color n; equals [n+1]."""
    return ring.convert(quantum_integer(n + 1))


# ---------------------------------------------------------------------------
# Duality morphisms

DUALITY_KINDS = ("ev", "coev", "ev_pivotal", "coev_pivotal")


def duality(n: int, kind: str, ring: ScalarRing = GENERIC) -> Morphism:
    d = n + 1
    if kind == "ev":
        mat = SMat(1, d * d, {(0, j * d + j): ring.one for j in range(d)})
        return Morphism(sig((n, DOWN), (n, UP)), EMPTY, mat, ring)
    if kind == "coev":
        mat = SMat(d * d, 1, {(j * d + j, 0): ring.one for j in range(d)})
        return Morphism(EMPTY, sig((n, UP), (n, DOWN)), mat, ring)
    if kind == "ev_pivotal":
        mat = SMat(1, d * d, {(0, j * d + j): ring.convert(Laurent.q_power(-(n - 2 * j))) for j in range(d)})
        return Morphism(sig((n, UP), (n, DOWN)), EMPTY, mat, ring)
    if kind == "coev_pivotal":
        mat = SMat(d * d, 1, {(j * d + j, 0): ring.convert(Laurent.q_power(n - 2 * j)) for j in range(d)})
        return Morphism(EMPTY, sig((n, DOWN), (n, UP)), mat, ring)
    raise QinvError(f"unknown duality kind {kind!r}")


def strand_rep(n: int, orientation: int) -> Rep:
    """The generic module carried by a strand."""
    rep = make_rep(n)
    return rep if orientation == UP else dual_rep(rep)


# ---------------------------------------------------------------------------
# Braid-group representations


_BRAID_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


def parse_braid_word(text: str) -> tuple[tuple[int, int], ...]:
    """Parse whitespace-separated tokens like "s1 s2^-1" into (index, sign) pairs."""
    word = []
    for tok in text.split():
        m = _BRAID_TOKEN.match(tok)
        if not m:
            raise QinvError(f"bad braid generator {tok!r}")
        idx = int(m.group(1))
        if idx < 1:
            raise QinvError(f"generator index must be >= 1: {tok!r}")
        word.append((idx, -1 if m.group(2) else 1))
    return tuple(word)


def braid_rep(word, colors, ring: ScalarRing = GENERIC) -> Morphism:
    """Composite braiding for a braid word, tracking the color permutation.

    Events act left to right: braid_rep(w1 + w2) == braid_rep(w2 applied to
    the colors w1 leaves) o braid_rep(w1).
    """
    colors = list(colors)
    k = len(colors)
    dom = up_signature(colors)
    mat = SMat.identity(dom.dim, ring.one)
    for idx, s in word:
        if not 1 <= idx <= k - 1:
            raise QinvError(f"generator index {idx} out of range for {k} strands")
        p = idx - 1
        cm, cn = colors[p], colors[p + 1]
        b = braiding(cm, cn, s, ring).mat
        left = right = None
        dl = 1
        for c in colors[:p]:
            dl *= c + 1
        dr = 1
        for c in colors[p + 2 :]:
            dr *= c + 1
        step = SMat.identity(dl, ring.one).kron(b).kron(SMat.identity(dr, ring.one))
        mat = step @ mat
        colors[p], colors[p + 1] = cn, cm
    return Morphism(dom, up_signature(colors), mat, ring)
