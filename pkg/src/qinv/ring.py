"""Exact scalar arithmetic underlying every computation in this package.

Two coefficient rings appear:

* ``Laurent`` -- integer Laurent polynomials in one variable v.  The
  deformation parameter is q = v**2, so the half-integer q-powers produced
  by weight pairings are honest monomials in v and every structure constant
  stays inside Z[v, v^-1].
* ``Cyclo`` -- the quotient Z[v] / (Phi_m(v)), i.e. the ring of integers
  Z[zeta_m] with v mapped to a primitive m-th root of unity.  Arithmetic is
  exact; floating point appears only in test oracles.

``GenericRing`` / ``CyclotomicRing`` select which ring a computation lives
in.  Structure constants are always produced as ``Laurent`` values and
pushed through ``ScalarRing.convert``; since conversion is a ring
homomorphism, specializing a generic result agrees bit-for-bit with
computing over the cyclotomic ring throughout.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import (
    DegenerateSpecializationError,
    ExactDivisionError,
    TruncationError,
)


class Laurent:
    """An integer Laurent polynomial in v, stored as {exponent: coefficient}.

    Instances are treated as immutable; no stored coefficient is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @staticmethod
    def from_int(n: int) -> Laurent:
        return Laurent({0: n})

    @staticmethod
    def v_power(e: int, coeff: int = 1) -> Laurent:
        return Laurent({e: coeff})

    @staticmethod
    def q_power(e: int, coeff: int = 1) -> Laurent:
        """coeff * q^e with q = v^2."""
        return Laurent({2 * e: coeff})

    def _coerce(self, other) -> Laurent | None:
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent.from_int(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Laurent(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> Laurent:
        """Inverse of a unit; only +-v^e monomials are invertible here."""
        if len(self.coeffs) != 1:
            raise ExactDivisionError(f"not a unit: {self}")
        (e, c), = self.coeffs.items()
        if c not in (1, -1):
            raise ExactDivisionError(f"not a unit: {self}")
        return Laurent({-e: c})

    def bar(self) -> Laurent:
        """The mirror involution v -> v^-1."""
        return Laurent({-e: c for e, c in self.coeffs.items()})

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def exact_div(self, den: Laurent) -> Laurent:
        """Exact division in Z[v, v^-1]; raises if the quotient is not exact."""
        if not den:
            raise ExactDivisionError("division by zero")
        if not self:
            return ZERO
        # Shift both to ordinary polynomials and long-divide over Z.
        sn, sd = self.min_exp(), den.min_exp()
        num = self._dense(sn)
        div = den._dense(sd)
        quot = [0] * (len(num) - len(div) + 1)
        if len(num) < len(div):
            raise ExactDivisionError(f"inexact division: {self} / {den}")
        lead = div[-1]
        rem = list(num)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(div) - 1]
            if c % lead:
                raise ExactDivisionError(f"inexact division: {self} / {den}")
            q = c // lead
            quot[i] = q
            if q:
                for j, d in enumerate(div):
                    rem[i + j] -= q * d
        if any(rem):
            raise ExactDivisionError(f"inexact division: {self} / {den}")
        return Laurent({e + sn - sd: c for e, c in enumerate(quot) if c})

    def _dense(self, shift: int) -> list[int]:
        top = self.max_exp()
        out = [0] * (top - shift + 1)
        for e, c in self.coeffs.items():
            out[e - shift] = c
        return out

    def evaluate(self, z: complex) -> complex:
        """Numeric evaluation at v = z (used only by test oracles)."""
        return sum(c * z**e for e, c in self.coeffs.items())

    def to_json(self) -> dict[str, int]:
        return {str(e): self.coeffs[e] for e in sorted(self.coeffs)}

    @staticmethod
    def from_json(obj: dict[str, int]) -> Laurent:
        return Laurent({int(e): int(c) for e, c in obj.items()})

    def __repr__(self):
        return f"Laurent({self.coeffs!r})"

    def __str__(self):
        return format_laurent(self)


ZERO = Laurent()
ONE = Laurent({0: 1})
V = Laurent({1: 1})
Q = Laurent({2: 1})


def format_laurent(x: Laurent, var: str | None = None) -> str:
    """Render in q when every exponent is even, otherwise in v."""
    if not x:
        return "0"
    exps = sorted(x.coeffs, reverse=True)
    if var is None:
        var = "q" if all(e % 2 == 0 for e in exps) else "v"
    parts = []
    for e in exps:
        c = x.coeffs[e]
        ve = e // 2 if var == "q" else e
        if ve == 0:
            term = str(abs(c))
        else:
            pw = var if ve == 1 else f"{var}^{ve}"
            term = pw if abs(c) == 1 else f"{abs(c)} {pw}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def quantum_integer(n: int) -> Laurent:
    """[n] = (q^n - q^-n) / (q - q^-1) as a Laurent polynomial in v."""
    if n < 0:
        return -quantum_integer(-n)
    return Laurent({2 * (n - 1 - 2 * j): 1 for j in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> Laurent:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    if n == 0:
        return ONE
    return quantum_factorial(n - 1) * quantum_integer(n)


def quantum_binomial(n: int, k: int) -> Laurent:
    """[n]! / ([k]! [n-k]!), computed by exact division."""
    if not 0 <= k <= n:
        raise ValueError(f"binomial out of range: ({n}, {k})")
    num = quantum_factorial(n)
    return num.exact_div(quantum_factorial(k)).exact_div(quantum_factorial(n - k))


# ---------------------------------------------------------------------------
# Cyclotomic quotients


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (dense, low-to-high)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dn)
    for i in range(len(quot) - 1, -1, -1):
        c = num[i + dn]
        if c % lead:
            raise ExactDivisionError("inexact polynomial division")
        q = c // lead
        quot[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    if any(num):
        raise ExactDivisionError("inexact polynomial division")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, low-to-high, computed from x^m - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _reduce_mod_phi(coeffs: list[int], phi: tuple[int, ...]) -> tuple[int, ...]:
    deg = len(phi) - 1
    out = list(coeffs) + [0] * max(0, deg - len(coeffs))
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(deg):
                out[i - deg + j] -= c * phi[j]
    return tuple(out[:deg])


class Cyclo:
    """An element of Z[v] / (Phi_m(v)): the residue has degree < deg Phi_m."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = cyclotomic_poly(order)
        self.order = order
        self.coeffs = _reduce_mod_phi(list(coeffs), phi)

    @staticmethod
    def zero(order: int) -> Cyclo:
        return Cyclo(order, ())

    @staticmethod
    def one(order: int) -> Cyclo:
        return Cyclo(order, (1,))

    def _check(self, other):
        if not isinstance(other, Cyclo):
            if isinstance(other, int):
                return Cyclo(self.order, (other,))
            return None
        if other.order != self.order:
            raise ValueError("mixed cyclotomic orders")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        n = len(self.coeffs)
        prod = [0] * (2 * n - 1) if n else []
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclo(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers unsupported; multiply by v^(m-1) instead")
        result = Cyclo.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    @staticmethod
    def from_json(obj: dict) -> Cyclo:
        return Cyclo(int(obj["order"]), [int(c) for c in obj["coeffs"]])

    def __repr__(self):
        return f"Cyclo({self.order}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def _v_powers(m: int) -> tuple[Cyclo, ...]:
    """v^0 .. v^(m-1) in Z[v]/Phi_m; v has multiplicative order exactly m."""
    v = Cyclo(m, (0, 1))
    out = [Cyclo.one(m)]
    for _ in range(m - 1):
        out.append(out[-1] * v)
    return tuple(out)


def specialize(x: Laurent, m: int) -> Cyclo:
    """Send v to a primitive m-th root of unity; a ring homomorphism."""
    if m < 3:
        raise ValueError("specialization requires m >= 3")
    powers = _v_powers(m)
    acc = Cyclo.zero(m)
    for e, c in x.coeffs.items():
        acc = acc + powers[e % m] * c
    return acc


def find_truncation_level(m: int) -> int:
    """Smallest k >= 2 with [k] = 0 at the order-m specialization."""
    if m < 3:
        raise ValueError("m >= 3 required")
    if m == 4:
        # v^4 = 1 makes q - q^-1 = 0, so the quantum integers degenerate.
        raise DegenerateSpecializationError("degenerate specialization: q = q^-1 at m = 4")
    for k in range(2, m + 1):
        if not specialize(quantum_integer(k), m):
            return k
    raise TruncationError(f"no truncation level <= {m}")


# ---------------------------------------------------------------------------
# Ring selection


class ScalarRing:
    """Tag selecting generic Laurent or cyclotomic arithmetic."""

    name: str

    def convert(self, x: Laurent):
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError


class GenericRing(ScalarRing):
    name = "generic"

    def convert(self, x: Laurent) -> Laurent:
        return x

    @property
    def zero(self) -> Laurent:
        return ZERO

    @property
    def one(self) -> Laurent:
        return ONE

    def describe(self):
        return "generic"

    def __eq__(self, other):
        return isinstance(other, GenericRing)

    def __hash__(self):
        return hash("generic")

    def __repr__(self):
        return "GenericRing()"


class CyclotomicRing(ScalarRing):
    def __init__(self, m: int):
        if m < 3:
            raise ValueError("m >= 3 required")
        self.m = m
        self.name = f"cyclotomic({m})"

    def convert(self, x: Laurent) -> Cyclo:
        return specialize(x, self.m)

    @property
    def zero(self) -> Cyclo:
        return Cyclo.zero(self.m)

    @property
    def one(self) -> Cyclo:
        return Cyclo.one(self.m)

    def describe(self):
        return {"cyclotomic": self.m}

    def __eq__(self, other):
        return isinstance(other, CyclotomicRing) and other.m == self.m

    def __hash__(self):
        return hash(("cyclotomic", self.m))

    def __repr__(self):
        return f"CyclotomicRing({self.m})"


GENERIC = GenericRing()


def value_to_json(x) -> dict:
    if isinstance(x, Laurent):
        return x.to_json()
    if isinstance(x, Cyclo):
        return x.to_json()
    raise TypeError(f"not a scalar: {x!r}")


# ---------------------------------------------------------------------------
# The fraction field Q(zeta_m), used for exact rank computations


class CycloField:
    """Field arithmetic on residues mod Phi_m with Fraction coefficients."""

    def __init__(self, m: int):
        self.m = m
        self.phi = [Fraction(c) for c in cyclotomic_poly(m)]
        self.deg = len(self.phi) - 1

    def from_cyclo(self, x: Cyclo) -> tuple[Fraction, ...]:
        if x.order != self.m:
            raise ValueError("mixed cyclotomic orders")
        return tuple(Fraction(c) for c in x.coeffs)

    def zero(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(0) for _ in range(self.deg))

    def is_zero(self, a) -> bool:
        return not any(a)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b):
        prod = [Fraction(0)] * (2 * self.deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    def _reduce(self, coeffs):
        out = list(coeffs) + [Fraction(0)] * max(0, self.deg - len(coeffs))
        for i in range(len(out) - 1, self.deg - 1, -1):
            c = out[i]
            if c:
                out[i] = Fraction(0)
                for j in range(self.deg):
                    out[i - self.deg + j] -= c * self.phi[j]
        return tuple(out[: self.deg])

    def inv(self, a):
        """Inverse in Q[x]/Phi_m via the extended Euclidean algorithm."""
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        r0, r1 = list(self.phi), list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _qpolydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpolysub(s0, _qpolymul(q, s1))
        # r0 is a nonzero constant gcd since Phi_m is irreducible over Q.
        c = next(x for x in r0 if x)
        return self._reduce([x / c for x in s0])

    def rank(self, rows: list[list[Cyclo]]) -> int:
        """Rank of a matrix over Q(zeta_m) by Gaussian elimination."""
        mat = [[self.from_cyclo(x) for x in row] for row in rows]
        nr = len(mat)
        nc = len(mat[0]) if nr else 0
        rank = 0
        col = 0
        for col in range(nc):
            piv = next((r for r in range(rank, nr) if not self.is_zero(mat[r][col])), None)
            if piv is None:
                continue
            mat[rank], mat[piv] = mat[piv], mat[rank]
            inv = self.inv(mat[rank][col])
            mat[rank] = [self.mul(inv, x) for x in mat[rank]]
            for r in range(nr):
                if r != rank and not self.is_zero(mat[r][col]):
                    f = mat[r][col]
                    mat[r] = [self.sub(x, self.mul(f, y)) for x, y in zip(mat[r], mat[rank])]
            rank += 1
        return rank


def _qpolytrim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _qpolymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _qpolytrim(out)


def _qpolysub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _qpolytrim(out)


def _qpolydivmod(a, b):
    a = list(a)
    _qpolytrim(a)
    b = _qpolytrim(list(b))
    db = len(b) - 1
    if db < 0:
        raise ZeroDivisionError
    lead = b[-1]
    q = [Fraction(0)] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        c = a[-1] / lead
        k = len(a) - 1 - db
        q[k] = c
        for j in range(db + 1):
            a[k + j] -= c * b[j]
        _qpolytrim(a)
    return _qpolytrim(q), a
