"""Axiom checker for finite-dimensional bialgebras given by structure constants.

A bialgebra on basis x_0 .. x_(dim-1) is described by

    mult[a][b][e]    coefficient of x_e in x_a x_b
    unit[a]          coefficient of x_a in 1
    comult[a][b][e]  coefficient of x_b ox x_e in Delta(x_a)
    counit[a]        eps(x_a)
    antipode[a][b]   coefficient of x_a in S(x_b)   (optional)

The seven bialgebra axioms and the antipode condition are each a
commuting diagram; every check realizes both sides of its diagram as
sparse matrices and compares them exactly, returning the first differing
multi-index (lexicographically in the flattened row/column order) as a
witness.  Scalars are Laurent values so the same checks apply verbatim to
q-deformed tables; plain integer tables embed as constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import GroupTableError, QinvError
from .ring import Laurent
from .smatrix import SMat

AXIOMS = ("H1.1", "H1.2", "H2.1", "H2.2", "H3.1", "H3.2", "H3.3")

_ONE = Laurent.from_int(1)


def _scalar(x) -> Laurent:
    if isinstance(x, Laurent):
        return x
    if isinstance(x, int):
        return Laurent.from_int(x)
    if isinstance(x, dict):
        return Laurent.from_json(x)
    raise QinvError(f"bad scalar entry {x!r}")


@dataclass(frozen=True)
class FiniteBialgebra:
    dim: int
    mult: tuple  # dim x dim x dim
    unit: tuple  # dim
    comult: tuple  # dim x dim x dim
    counit: tuple  # dim
    antipode: tuple | None = None  # dim x dim

    @staticmethod
    def build(dim, mult, unit, comult, counit, antipode=None) -> FiniteBialgebra:
        def cube(data):
            if len(data) != dim or any(len(r) != dim or any(len(c) != dim for c in r) for r in data):
                raise QinvError("structure-constant array has wrong dimensions")
            return tuple(tuple(tuple(_scalar(x) for x in c) for c in r) for r in data)

        def vec(data):
            if len(data) != dim:
                raise QinvError("vector has wrong dimension")
            return tuple(_scalar(x) for x in data)

        anti = None
        if antipode is not None:
            if len(antipode) != dim or any(len(r) != dim for r in antipode):
                raise QinvError("antipode matrix has wrong dimensions")
            anti = tuple(tuple(_scalar(x) for x in r) for r in antipode)
        return FiniteBialgebra(dim, cube(mult), vec(unit), cube(comult), vec(counit), anti)

    # --- structural maps as sparse matrices -------------------------------

    def m_mat(self) -> SMat:
        """Multiplication A ox A -> A; column (a, b), row e."""
        d = self.dim
        ent = {}
        for a in range(d):
            for b in range(d):
                for e in range(d):
                    v = self.mult[a][b][e]
                    if v:
                        ent[e, a * d + b] = v
        return SMat(d, d * d, ent)

    def unit_mat(self) -> SMat:
        return SMat(self.dim, 1, {(a, 0): v for a, v in enumerate(self.unit) if v})

    def comult_mat(self) -> SMat:
        """Comultiplication A -> A ox A; column a, row (b, e)."""
        d = self.dim
        ent = {}
        for a in range(d):
            for b in range(d):
                for e in range(d):
                    v = self.comult[a][b][e]
                    if v:
                        ent[b * d + e, a] = v
        return SMat(d * d, d, ent)

    def counit_mat(self) -> SMat:
        return SMat(1, self.dim, {(0, a): v for a, v in enumerate(self.counit) if v})

    def antipode_mat(self) -> SMat:
        if self.antipode is None:
            raise QinvError("missing antipode field")
        d = self.dim
        return SMat(d, d, {(a, b): self.antipode[a][b] for a in range(d) for b in range(d) if self.antipode[a][b]})

    def to_json(self) -> dict:
        def js(x):
            return x.to_json()

        out = {
            "dim": self.dim,
            "mult": [[[js(x) for x in c] for c in r] for r in self.mult],
            "unit": [js(x) for x in self.unit],
            "comult": [[[js(x) for x in c] for c in r] for r in self.comult],
            "counit": [js(x) for x in self.counit],
        }
        if self.antipode is not None:
            out["antipode"] = [[js(x) for x in r] for r in self.antipode]
        return out

    @staticmethod
    def from_json(obj: dict) -> FiniteBialgebra:
        return FiniteBialgebra.build(
            int(obj["dim"]),
            obj["mult"],
            obj["unit"],
            obj["comult"],
            obj["counit"],
            obj.get("antipode"),
        )


def _ident(n: int) -> SMat:
    return SMat.identity(n, _ONE)


def _swap23(d: int) -> SMat:
    """The middle-factor swap on A ox A ox A ox A."""
    ent = {}
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for e in range(d):
                    src = ((a * d + b) * d + c) * d + e
                    dst = ((a * d + c) * d + b) * d + e
                    ent[dst, src] = _ONE
    return SMat(d**4, d**4, ent)


def check_axiom(B: FiniteBialgebra, which: str):
    """None on success, else the lexicographically first differing index."""
    d = B.dim
    m, u, dl, eps = B.m_mat(), B.unit_mat(), B.comult_mat(), B.counit_mat()
    i1 = _ident(d)
    if which == "H1.1":
        lhs = m @ m.kron(i1)
        rhs = m @ i1.kron(m)
    elif which == "H1.2":
        lhs = m @ u.kron(i1)
        rhs = m @ i1.kron(u)
        diff = lhs.first_difference(i1)
        if diff is None:
            diff = rhs.first_difference(i1)
        return diff
    elif which == "H2.1":
        lhs = dl.kron(i1) @ dl
        rhs = i1.kron(dl) @ dl
    elif which == "H2.2":
        lhs = eps.kron(i1) @ dl
        rhs = i1.kron(eps) @ dl
        diff = lhs.first_difference(i1)
        if diff is None:
            diff = rhs.first_difference(i1)
        return diff
    elif which == "H3.1":
        lhs = dl @ m
        rhs = m.kron(m) @ _swap23(d) @ dl.kron(dl)
    elif which == "H3.2":
        lhs = eps @ m
        rhs = eps.kron(eps)
        diff = lhs.first_difference(rhs)
        if diff is None:
            one = SMat(1, 1, {(0, 0): _ONE})
            diff = (eps @ u).first_difference(one)
        return diff
    elif which == "H3.3":
        lhs = dl @ u
        rhs = u.kron(u)
    else:
        raise QinvError(f"unknown axiom {which!r}")
    return lhs.first_difference(rhs)


def check_antipode(B: FiniteBialgebra):
    """None if m(S ox id)Delta = unit.counit = m(id ox S)Delta exactly."""
    s = B.antipode_mat()
    m, u, dl, eps = B.m_mat(), B.unit_mat(), B.comult_mat(), B.counit_mat()
    i1 = _ident(B.dim)
    target = u @ eps
    left = m @ s.kron(i1) @ dl
    diff = left.first_difference(target)
    if diff is not None:
        return diff
    right = m @ i1.kron(s) @ dl
    return right.first_difference(target)


def check_all(B: FiniteBialgebra) -> dict:
    """Every axiom plus the antipode (when present); name -> witness or None."""
    out = {ax: check_axiom(B, ax) for ax in AXIOMS}
    if B.antipode is not None:
        out["antipode"] = check_antipode(B)
    return out


def dual_hopf(B: FiniteBialgebra) -> FiniteBialgebra:
    """Transpose all structure maps; the dual of a Hopf algebra is one."""
    failures = {k: w for k, w in check_all(B).items() if w is not None}
    if failures:
        raise QinvError(f"dual of a non-Hopf algebra (failed: {sorted(failures)})")
    d = B.dim
    mult = tuple(tuple(tuple(B.comult[e][a][b] for e in range(d)) for b in range(d)) for a in range(d))
    comult = tuple(tuple(tuple(B.mult[b][e][a] for e in range(d)) for b in range(d)) for a in range(d))
    anti = None
    if B.antipode is not None:
        anti = tuple(tuple(B.antipode[b][a] for b in range(d)) for a in range(d))
    return FiniteBialgebra(d, mult, B.counit, comult, B.unit, anti)


# ---------------------------------------------------------------------------
# Group function algebras


def _validate_group(table) -> int:
    n = len(table)
    if any(len(row) != n for row in table):
        raise GroupTableError("table is not square")
    for row in table:
        for x in row:
            if not 0 <= x < n:
                raise GroupTableError(f"entry {x} out of range")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise GroupTableError(f"not a group: associativity fails at {(i, j, k)}")
    ident = next(
        (e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))),
        None,
    )
    if ident is None:
        raise GroupTableError("not a group: no identity element")
    for g in range(n):
        if not any(table[g][h] == ident for h in range(n)):
            raise GroupTableError(f"not a group: no inverse for {g}")
    return ident


def group_function_algebra(table) -> FiniteBialgebra:
    """Functions on a finite group: pointwise product, Delta f(x,y) = f(xy)."""
    n = len(table)
    ident = _validate_group(table)
    zero, one = 0, 1
    mult = [[[one if a == b == e else zero for e in range(n)] for b in range(n)] for a in range(n)]
    unit = [one] * n
    comult = [[[one if table[b][e] == a else zero for e in range(n)] for b in range(n)] for a in range(n)]
    counit = [one if a == ident else zero for a in range(n)]
    inv = [next(h for h in range(n) if table[g][h] == ident) for g in range(n)]
    antipode = [[one if inv[b] == a else zero for b in range(n)] for a in range(n)]
    return FiniteBialgebra.build(n, mult, unit, comult, counit, antipode)


def cyclic_group_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(n: int):
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    return [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
