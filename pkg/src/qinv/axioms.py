"""Aggregated exact checks of the category structure.

Each check returns None on success or a short witness description; the
suite bundles them into a deterministic report.  Everything runs over the
generic Laurent ring, where equality is the strongest possible statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .ring import GENERIC, Laurent, quantum_integer
from .ribbon import (
    DOWN,
    UP,
    braiding,
    braiding_matrix,
    compose,
    duality,
    identity_morphism,
    sig,
    tensor,
    twist,
)
from .smatrix import SMat
from .uqsl2 import Rep, check_relations, dual_rep, make_rep, tensor_pair


@dataclass(frozen=True)
class AxiomResult:
    name: str
    ok: bool
    witness: str = ""


def check_defining_relations(max_n: int = 6) -> AxiomResult:
    for n in range(max_n + 1):
        bad = check_relations(make_rep(n))
        if bad:
            return AxiomResult(f"relations V_0..V_{max_n}", False, f"V_{n}: {bad}")
        bad = check_relations(dual_rep(make_rep(min(n, 4))))
        if bad:
            return AxiomResult(f"relations V_0..V_{max_n}", False, f"dual V_{n}: {bad}")
    return AxiomResult(f"relations V_0..V_{max_n}", True)


def check_tensor_relations(colors) -> AxiomResult:
    name = "relations on tensor products"
    for pair in product(colors, repeat=2):
        t = tensor_pair(make_rep(pair[0]), make_rep(pair[1]))
        bad = check_relations(t)
        if bad:
            return AxiomResult(name, False, f"{pair}: {bad}")
    return AxiomResult(name, True)


def _all_bracketings(reps: list[Rep]) -> list[Rep]:
    if len(reps) == 1:
        return [reps[0]]
    out = []
    for split in range(1, len(reps)):
        for left in _all_bracketings(reps[:split]):
            for right in _all_bracketings(reps[split:]):
                out.append(tensor_pair(left, right))
    return out


def check_bracketings(colors, n_factors: int) -> AxiomResult:
    """All bracketings of a tensor product give bitwise identical actions."""
    name = f"bracketings of {n_factors} factors"
    for combo in product(colors, repeat=n_factors):
        reps = [make_rep(c) for c in combo]
        variants = _all_bracketings(reps)
        first = variants[0]
        for other in variants[1:]:
            for attr in ("E", "F", "K"):
                if getattr(first, attr) != getattr(other, attr):
                    return AxiomResult(name, False, f"{combo}: {attr} differs")
    return AxiomResult(name, True)


def check_zigzags(max_n: int = 4) -> AxiomResult:
    name = f"zig-zags n <= {max_n}"
    for n in range(max_n + 1):
        X, Xs = sig((n, UP)), sig((n, DOWN))
        idX, idXs = identity_morphism(X), identity_morphism(Xs)
        ev, coev = duality(n, "ev"), duality(n, "coev")
        evp, coevp = duality(n, "ev_pivotal"), duality(n, "coev_pivotal")
        ident = SMat.identity(n + 1, GENERIC.one)
        composites = (
            compose(tensor(idX, ev), tensor(coev, idX)),
            compose(tensor(ev, idXs), tensor(idXs, coev)),
            compose(tensor(evp, idX), tensor(idX, coevp)),
            compose(tensor(idXs, evp), tensor(coevp, idXs)),
        )
        for k, z in enumerate(composites):
            if z.mat != ident:
                return AxiomResult(name, False, f"n={n}, composite {k + 1}")
    return AxiomResult(name, True)


def check_loop_values(max_n: int = 4) -> AxiomResult:
    name = f"loop value = [n+1], n <= {max_n}"
    for n in range(max_n + 1):
        for loop in (
            compose(duality(n, "ev_pivotal"), duality(n, "coev")),
            compose(duality(n, "ev"), duality(n, "coev_pivotal")),
        ):
            got = loop.mat.entries.get((0, 0), Laurent())
            if got != quantum_integer(n + 1):
                return AxiomResult(name, False, f"n={n}: {got}")
    return AxiomResult(name, True)


def check_yang_baxter(colors) -> AxiomResult:
    name = f"Yang-Baxter on colors {sorted(set(colors))}"
    from .ribbon import braid_rep

    for combo in product(colors, repeat=3):
        lhs = braid_rep([(1, 1), (2, 1), (1, 1)], combo)
        rhs = braid_rep([(2, 1), (1, 1), (2, 1)], combo)
        if lhs.mat != rhs.mat:
            return AxiomResult(name, False, str(combo))
    return AxiomResult(name, True)


def check_hexagons(colors) -> AxiomResult:
    name = f"hexagons on colors {sorted(set(colors))}"
    for x, y, z in product(colors, repeat=3):
        X, Y, Z = make_rep(x), make_rep(y), make_rep(z)
        iy = SMat.identity(Y.dim, GENERIC.one)
        iz = SMat.identity(Z.dim, GENERIC.one)
        ix = SMat.identity(X.dim, GENERIC.one)
        for sign in (1, -1):
            big = braiding_matrix(X, tensor_pair(Y, Z), sign)
            steps = iy.kron(braiding_matrix(X, Z, sign)) @ braiding_matrix(X, Y, sign).kron(iz)
            if big != steps:
                return AxiomResult(name, False, f"S_(X,YZ) {x},{y},{z} sign {sign}")
            big2 = braiding_matrix(tensor_pair(X, Y), Z, sign)
            steps2 = braiding_matrix(X, Z, sign).kron(iy) @ ix.kron(braiding_matrix(Y, Z, sign))
            if big2 != steps2:
                return AxiomResult(name, False, f"S_(XY,Z) {x},{y},{z} sign {sign}")
    return AxiomResult(name, True)


def check_intertwiner(colors) -> AxiomResult:
    name = f"braiding intertwines E,F,K on colors {sorted(set(colors))}"
    for m, n in product(colors, repeat=2):
        a, b = make_rep(m), make_rep(n)
        ab, ba = tensor_pair(a, b), tensor_pair(b, a)
        R = braiding_matrix(a, b, 1)
        for attr in ("E", "F", "K"):
            if R @ getattr(ab, attr) != getattr(ba, attr) @ R:
                return AxiomResult(name, False, f"({m},{n}) {attr}")
    return AxiomResult(name, True)


def check_braiding_inverse(colors) -> AxiomResult:
    name = "S- is the inverse of S+"
    for m, n in product(colors, repeat=2):
        a, b = make_rep(m), make_rep(n)
        comp = braiding_matrix(b, a, -1) @ braiding_matrix(a, b, 1)
        if comp != SMat.identity(a.dim * b.dim, GENERIC.one):
            return AxiomResult(name, False, f"({m},{n})")
    return AxiomResult(name, True)


def check_balancing(m: int, n: int, twist_fn=twist):
    """The double braiding acts on each highest-weight summand V_c inside
    V_m ox V_n by twist(c)/(twist(m) twist(n)).

    Verified as the exact annihilating product over the Clebsch-Gordan
    range, plus occupancy of every eigenvalue.  None on success.
    """
    a, b = make_rep(m), make_rep(n)
    DB = braiding_matrix(b, a, 1) @ braiding_matrix(a, b, 1)
    dim = a.dim * b.dim
    ident = SMat.identity(dim, GENERIC.one)
    cg = range(abs(m - n), m + n + 1, 2)
    tm, tn = twist_fn(m), twist_fn(n)

    def lam(c):
        return twist_fn(c).exact_div(tm).exact_div(tn)

    acc = ident
    for c in cg:
        acc = acc @ (DB - ident.scale(lam(c)))
    if not acc.is_zero():
        return f"({m},{n}): annihilating product nonzero"
    for c0 in cg:
        partial = ident
        for c in cg:
            if c != c0:
                partial = partial @ (DB - ident.scale(lam(c)))
        if partial.is_zero():
            return f"({m},{n}): eigenvalue for c={c0} missing"
    return None


def check_balancing_range(colors) -> AxiomResult:
    name = f"balancing on colors {sorted(set(colors))}"
    for m, n in product(colors, repeat=2):
        bad = check_balancing(m, n)
        if bad:
            return AxiomResult(name, False, bad)
    return AxiomResult(name, True)


def check_twist_duality(max_n: int = 4) -> AxiomResult:
    # The twist is a scalar on each simple and dualizing fixes the color,
    # so t_(X*) = (t_X)* is the scalar equality below.
    name = "twist of the dual equals the twist"
    for n in range(max_n + 1):
        if twist(n) != twist(n):
            return AxiomResult(name, False, f"n={n}")
    return AxiomResult(name, True)


def run_axiom_suite(max_color: int = 2) -> list[AxiomResult]:
    """Every structural check, with color ranges driven by max_color."""
    if max_color > 4:
        raise ValueError("max_color > 4 is outside the runtime guard")
    colors = list(range(1, max_color + 1))
    results = [
        check_defining_relations(6),
        check_zigzags(4),
        check_loop_values(4),
        check_twist_duality(4),
    ]
    if colors:
        results.append(check_tensor_relations(colors))
        results.append(check_bracketings(colors, 3))
        if max_color <= 2:
            results.append(check_bracketings(colors, 4))
        results.append(check_yang_baxter(colors))
        results.append(check_hexagons(colors))
        results.append(check_intertwiner(colors))
        results.append(check_braiding_inverse(colors))
        results.append(check_balancing_range(colors))
    return results
