"""Finite-dimensional modules over the quantized enveloping algebra of sl2.

The generators E, F, K satisfy

    K E = q^2 E K,   K F = q^-2 F K,   E F - F E = (K - K^-1) / (q - q^-1),

and tensor products act through the coproduct

    E -> E ox 1 + K ox E,   F -> F ox K^-1 + 1 ox F,   K -> K ox K.

The irreducible of highest weight n is realized on the basis m_0..m_n with

    K m_j = q^(n-2j) m_j,   F m_j = [j+1] m_{j+1},   E m_j = [n-j+1] m_{j-1}.

Any convention passing ``check_relations`` is equally valid; this one is
fixed for reproducibility.  Every representation carries the integer weight
of each basis vector, which the braiding’s Cartan factor needs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DimensionCapError, QinvError
from .ring import (
    GENERIC,
    CycloField,
    CyclotomicRing,
    Laurent,
    ScalarRing,
    quantum_factorial,
    quantum_integer,
)
from .smatrix import SMat

DEFAULT_DIM_CAP = 4096


def dim_cap() -> int:
    return int(os.environ.get("QINV_DIM_CAP", DEFAULT_DIM_CAP))


@dataclass(frozen=True)
class Rep:
    """Action matrices of E, F, K, K^-1 plus the weight of each basis vector."""

    ring: ScalarRing
    weights: tuple[int, ...]
    E: SMat
    F: SMat
    K: SMat
    Kinv: SMat
    factors: tuple["Rep", ...] = field(default=(), compare=False)

    @property
    def dim(self) -> int:
        return len(self.weights)


@lru_cache(maxsize=None)
def _make_rep_generic(n: int) -> Rep:
    weights = tuple(n - 2 * j for j in range(n + 1))
    E = SMat(n + 1, n + 1, {(j - 1, j): quantum_integer(n - j + 1) for j in range(1, n + 1)})
    F = SMat(n + 1, n + 1, {(j + 1, j): quantum_integer(j + 1) for j in range(n)})
    K = SMat(n + 1, n + 1, {(j, j): Laurent.q_power(w) for j, w in enumerate(weights)})
    Kinv = SMat(n + 1, n + 1, {(j, j): Laurent.q_power(-w) for j, w in enumerate(weights)})
    return Rep(GENERIC, weights, E, F, K, Kinv)


def make_rep(n: int, ring: ScalarRing = GENERIC) -> Rep:
    """The (n+1)-dimensional irreducible, over the requested scalar ring."""
    if n < 0:
        raise QinvError("color must be a nonnegative integer")
    rep = _make_rep_generic(n)
    return _convert_rep(rep, ring)


def _convert_rep(rep: Rep, ring: ScalarRing) -> Rep:
    if ring == GENERIC:
        return rep
    cv = ring.convert
    return Rep(
        ring,
        rep.weights,
        rep.E.map_entries(cv),
        rep.F.map_entries(cv),
        rep.K.map_entries(cv),
        rep.Kinv.map_entries(cv),
        rep.factors,
    )


def tensor_pair(a: Rep, b: Rep) -> Rep:
    if a.ring != b.ring:
        raise QinvError("tensor factors live in different scalar rings")
    dim = a.dim * b.dim
    cap = dim_cap()
    if dim > cap:
        raise DimensionCapError(f"tensor dimension {dim} exceeds cap {cap}")
    one = a.ring.one
    ia = SMat.identity(a.dim, one)
    ib = SMat.identity(b.dim, one)
    return Rep(
        a.ring,
        tuple(wa + wb for wa in a.weights for wb in b.weights),
        a.E.kron(ib) + a.K.kron(b.E),
        a.F.kron(b.Kinv) + ia.kron(b.F),
        a.K.kron(b.K),
        a.Kinv.kron(b.Kinv),
        (a, b),
    )


def tensor_action(factors: list[Rep]) -> Rep:
    """Iterated coproduct action, nested to the left."""
    if not factors:
        raise QinvError("empty tensor product")
    acc = factors[0]
    for f in factors[1:]:
        acc = tensor_pair(acc, f)
    return acc


def dual_rep(r: Rep) -> Rep:
    """Dual action x.f = f(S(x) .) with S(E) = -K^-1 E, S(F) = -F K, S(K) = K^-1."""
    return Rep(
        r.ring,
        tuple(-w for w in r.weights),
        (r.Kinv @ r.E).scale(-(r.ring.one)).transpose(),
        (r.F @ r.K).scale(-(r.ring.one)).transpose(),
        r.Kinv.transpose(),
        r.K.transpose(),
    )


def check_relations(r: Rep):
    """None if the defining relations hold exactly, else (name, (i, j))."""
    one = r.ring.one
    ident = SMat.identity(r.dim, one)
    d = (r.K @ r.Kinv) - ident
    if not d.is_zero():
        return ("K Kinv = 1", min(d.entries))
    q2 = r.ring.convert(Laurent.q_power(2))
    d = (r.K @ r.E) - (r.E @ r.K).scale(q2)
    if not d.is_zero():
        return ("K E = q^2 E K", min(d.entries))
    qm2 = r.ring.convert(Laurent.q_power(-2))
    d = (r.K @ r.F) - (r.F @ r.K).scale(qm2)
    if not d.is_zero():
        return ("K F = q^-2 F K", min(d.entries))
    # On a K-eigenbasis (K - K^-1)/(q - q^-1) is the diagonal of quantum
    # integers of the weights, which avoids dividing.
    comm_target = SMat(
        r.dim, r.dim, {(j, j): r.ring.convert(quantum_integer(w)) for j, w in enumerate(r.weights)}
    )
    d = (r.E @ r.F) - (r.F @ r.E) - comm_target
    if not d.is_zero():
        return ("[E, F] = (K - K^-1)/(q - q^-1)", min(d.entries))
    return None


def divided_E_power(r: Rep, k: int) -> SMat:
    """E^k / [k]!, entrywise exact over the generic ring."""
    if r.ring != GENERIC:
        raise QinvError("divided powers are computed generically")
    Ek = r.E.pow_int(k, r.ring.one)
    fact = quantum_factorial(k)
    return Ek.map_entries(lambda x: x.exact_div(fact))


# ---------------------------------------------------------------------------
# Jordan type of E at a root of unity


def _weight_blocks(r: Rep) -> dict[int, list[int]]:
    blocks: dict[int, list[int]] = {}
    for i, w in enumerate(r.weights):
        blocks.setdefault(w, []).append(i)
    return blocks


def jordan_type_E(r: Rep, ell: int) -> dict[int, int]:
    """Multiset of E-Jordan block sizes, as {size: multiplicity}.

    E raises the weight by 2, so ranks of its powers decompose over weight
    blocks; each small block is eliminated exactly over Q(zeta_m).
    """
    if not isinstance(r.ring, CyclotomicRing):
        raise QinvError("Jordan analysis requires a cyclotomic scalar ring")
    fld = CycloField(r.ring.m)
    blocks = _weight_blocks(r)
    zero = r.ring.zero

    # E restricted to each weight block, as dense rows over the field.
    step: dict[int, list[list]] = {}
    for w, cols in blocks.items():
        rows = blocks.get(w + 2, [])
        rpos = {i: a for a, i in enumerate(rows)}
        cpos = {j: a for a, j in enumerate(cols)}
        dense = [[zero] * len(cols) for _ in rows]
        for (i, j), v in r.E.entries.items():
            if j in cpos and i in rpos:
                dense[rpos[i]][cpos[j]] = v
        step[w] = dense

    def rank_of_power(s: int) -> int:
        if s == 0:
            return r.dim
        total = 0
        for w, cols in blocks.items():
            rows_now = [[fld.from_cyclo(x) for x in row] for row in step[w]] if step[w] else []
            acc = rows_now
            src_w = w
            ok = bool(cols)
            for _ in range(1, s):
                src_w += 2
                nxt = step.get(src_w, [])
                if not nxt or not acc:
                    acc = []
                    break
                nxt_f = [[fld.from_cyclo(x) for x in row] for row in nxt]
                acc = _field_matmul(fld, nxt_f, acc)
            if acc:
                total += _field_rank(fld, acc)
        return total

    ranks = [rank_of_power(s) for s in range(ell + 2)]
    if ranks[ell] != 0:
        raise QinvError(f"E not nilpotent at level {ell}")
    mults = {}
    for s in range(1, ell + 1):
        m = ranks[s - 1] - 2 * ranks[s] + ranks[s + 1]
        if m < 0:
            raise QinvError("inconsistent rank sequence")
        if m:
            mults[s] = m
    if sum(s * m for s, m in mults.items()) != r.dim:
        raise QinvError("Jordan blocks do not fill the space")
    return mults


def _field_matmul(fld: CycloField, a, b):
    if not a or not b:
        return []
    nr, inner, nc = len(a), len(b), len(b[0])
    z = fld.zero()
    out = [[z] * nc for _ in range(nr)]
    for i in range(nr):
        for k in range(inner):
            x = a[i][k]
            if not fld.is_zero(x):
                for j in range(nc):
                    y = b[k][j]
                    if not fld.is_zero(y):
                        out[i][j] = fld.add(out[i][j], fld.mul(x, y))
    return out


def _field_rank(fld: CycloField, mat) -> int:
    mat = [row[:] for row in mat]
    nr = len(mat)
    nc = len(mat[0]) if nr else 0
    rank = 0
    for col in range(nc):
        piv = next((r for r in range(rank, nr) if not fld.is_zero(mat[r][col])), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = fld.inv(mat[rank][col])
        mat[rank] = [fld.mul(inv, x) for x in mat[rank]]
        for r2 in range(nr):
            if r2 != rank and not fld.is_zero(mat[r2][col]):
                f = mat[r2][col]
                mat[r2] = [fld.sub(x, fld.mul(f, y)) for x, y in zip(mat[r2], mat[rank])]
        rank += 1
    return rank
