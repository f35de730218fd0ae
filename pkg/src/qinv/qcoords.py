"""Normal forms in the quantum coordinate algebra of SL(2).

The algebra is generated by a, b, c, d with q = v**2 and relations

    ab = q^-1 ba     ac = q^-1 ca     bc = cb
    cd = q^-1 dc     bd = q^-1 db     ad - da = (q^-1 - q) bc
    ad - q^-1 bc = 1

oriented as rewrite rules

    ba -> q ab    ca -> q ac    cb -> bc    dc -> q cd    db -> q bd
    ad -> 1 + q^-1 bc           da -> 1 + q bc

The normal basis is {a^i b^j c^k} u {b^j c^k d^l}: letters sorted with a
and d never co-occurring.  The two-letter rules alone sort any word but
leave sorted mixed words such as "abd" untouched, so normalization also
applies the derived reduction

    a b^j c^k d  ->  q^-(j+k) b^j c^k  +  q^-(j+k+1) b^(j+1) c^(k+1)

obtained by pushing a through b's and c's (factor q^-1 each) and then
rewriting ad.  Termination: the pair (number of a..d pairs, number of
adjacent inversions) drops lexicographically at every step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import QinvError
from .ring import Laurent, format_laurent

ALPHABET = "abcd"

_ONE = Laurent.from_int(1)
_Q = Laurent.q_power(1)
_QINV = Laurent.q_power(-1)


def _poly(terms: dict[str, Laurent]) -> dict[str, Laurent]:
    return {w: c for w, c in terms.items() if c}


@dataclass(frozen=True)
class NCPoly:
    """A formal sum of words in a, b, c, d with Laurent coefficients."""

    terms: tuple[tuple[str, Laurent], ...]

    @staticmethod
    def from_dict(d: dict[str, Laurent]) -> NCPoly:
        return NCPoly(tuple(sorted(_poly(d).items())))

    @staticmethod
    def word(w: str, coeff: Laurent = _ONE) -> NCPoly:
        return NCPoly.from_dict({w: coeff})

    @staticmethod
    def zero() -> NCPoly:
        return NCPoly(())

    @staticmethod
    def one() -> NCPoly:
        return NCPoly.word("")

    def as_dict(self) -> dict[str, Laurent]:
        return dict(self.terms)

    def __add__(self, other: NCPoly) -> NCPoly:
        out = self.as_dict()
        for w, c in other.terms:
            s = out.get(w, Laurent()) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly(tuple(sorted(out.items())))

    def __neg__(self) -> NCPoly:
        return NCPoly(tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def __mul__(self, other: NCPoly) -> NCPoly:
        out: dict[str, Laurent] = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                w = w1 + w2
                s = out.get(w, Laurent()) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NCPoly(tuple(sorted(out.items())))

    def scale(self, s: Laurent) -> NCPoly:
        if not s:
            return NCPoly(())
        return NCPoly(tuple((w, c * s) for w, c in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        return render(self)


# The two-letter rules; values are the replacement polynomials.
RULES: dict[str, NCPoly] = {
    "ba": NCPoly.word("ab", _Q),
    "ca": NCPoly.word("ac", _Q),
    "cb": NCPoly.word("bc"),
    "dc": NCPoly.word("cd", _Q),
    "db": NCPoly.word("bd", _Q),
    "ad": NCPoly.one() + NCPoly.word("bc", _QINV),
    "da": NCPoly.one() + NCPoly.word("bc", _Q),
}

# The seven defining relations, as (lhs, rhs) pairs of polynomials.
RELATIONS: tuple[tuple[str, NCPoly, NCPoly], ...] = (
    ("ab = q^-1 ba", NCPoly.word("ab"), NCPoly.word("ba", _QINV)),
    ("ac = q^-1 ca", NCPoly.word("ac"), NCPoly.word("ca", _QINV)),
    ("bc = cb", NCPoly.word("bc"), NCPoly.word("cb")),
    ("cd = q^-1 dc", NCPoly.word("cd"), NCPoly.word("dc", _QINV)),
    ("bd = q^-1 db", NCPoly.word("bd"), NCPoly.word("db", _QINV)),
    (
        "ad - da = (q^-1 - q) bc",
        NCPoly.word("ad") - NCPoly.word("da"),
        NCPoly.word("bc", _QINV - _Q),
    ),
    ("ad - q^-1 bc = 1", NCPoly.word("ad") - NCPoly.word("bc", _QINV), NCPoly.one()),
)


@dataclass
class RewriteStats:
    steps: int = 0


def _first_rule_position(word: str):
    for i in range(len(word) - 1):
        if word[i : i + 2] in RULES:
            return i
    return None


def _apply_rule_at(word: str, i: int) -> NCPoly:
    pre, post = word[:i], word[i + 2 :]
    out = NCPoly.zero()
    for w, c in RULES[word[i : i + 2]].terms:
        out = out + NCPoly.word(pre + w + post, c)
    return out


def _eliminate_ad(word: str) -> NCPoly:
    """One derived reduction on a sorted word containing both a and d."""
    i = word.count("a")
    j = word.count("b")
    k = word.count("c")
    l = word.count("d")
    assert word == "a" * i + "b" * j + "c" * k + "d" * l and i > 0 and l > 0
    head = "a" * (i - 1)
    tail = "d" * (l - 1)
    first = NCPoly.word(head + "b" * j + "c" * k + tail, Laurent.q_power(-(j + k)))
    second = NCPoly.word(head + "b" * (j + 1) + "c" * (k + 1) + tail, Laurent.q_power(-(j + k + 1)))
    return first + second


def normal_form(p: NCPoly, stats: RewriteStats | None = None, step_budget: int | None = None) -> NCPoly:
    """Rewrite to the normal basis; independent of rule order (see checks)."""
    agenda = p.as_dict()
    done: dict[str, Laurent] = {}
    steps = 0
    while agenda:
        word, coeff = agenda.popitem()
        i = _first_rule_position(word)
        if i is None and not ("a" in word and "d" in word):
            s = done.get(word, Laurent()) + coeff
            if s:
                done[word] = s
            else:
                done.pop(word, None)
            continue
        expansion = _apply_rule_at(word, i) if i is not None else _eliminate_ad(word)
        steps += 1
        if step_budget is not None and steps > step_budget:
            raise QinvError(f"rewriting exceeded the step budget {step_budget}")
        for w, c in expansion.terms:
            s = agenda.get(w, Laurent()) + coeff * c
            if s:
                agenda[w] = s
            else:
                agenda.pop(w, None)
    if stats is not None:
        stats.steps = steps
    return NCPoly.from_dict(done)


def is_normal_word(word: str) -> bool:
    sorted_ok = all(word[i] <= word[i + 1] for i in range(len(word) - 1))
    return sorted_ok and not ("a" in word and "d" in word)


def check_overlaps():
    """Local confluence on all length-3 overlaps of the two-letter rules.

    None on success; otherwise the offending overlap word.
    """
    for w1 in RULES:
        for w2 in RULES:
            if w1[1] != w2[0]:
                continue
            word = w1 + w2[1]
            via_prefix = normal_form(_apply_rule_at(word, 0))
            via_suffix = normal_form(_apply_rule_at(word, 1))
            if via_prefix != via_suffix:
                return word
    return None


# ---------------------------------------------------------------------------
# Coproduct, counit and antipode on generators

_DELTA = {
    "a": (("a", "a"), ("b", "c")),
    "b": (("a", "b"), ("b", "d")),
    "c": (("c", "a"), ("d", "c")),
    "d": (("c", "b"), ("d", "d")),
}

_EPS = {"a": _ONE, "b": Laurent(), "c": Laurent(), "d": _ONE}

_ANTIPODE = {
    "a": NCPoly.word("d"),
    "b": NCPoly.word("b", -_Q),
    "c": NCPoly.word("c", -_QINV),
    "d": NCPoly.word("a"),
}


@dataclass(frozen=True)
class NCPolyTensor:
    """A formal sum of word pairs, both components kept in normal form."""

    terms: tuple[tuple[tuple[str, str], Laurent], ...]

    @staticmethod
    def from_dict(d) -> NCPolyTensor:
        return NCPolyTensor(tuple(sorted((k, v) for k, v in d.items() if v)))

    def is_zero(self) -> bool:
        return not self.terms


def coproduct(p: NCPoly) -> NCPolyTensor:
    """Delta applied letterwise and multiplicatively, normalized componentwise."""
    acc: dict[tuple[str, str], Laurent] = {}
    for word, coeff in p.terms:
        partial = {("", ""): coeff}
        for letter in word:
            nxt: dict[tuple[str, str], Laurent] = {}
            for (w1, w2), c in partial.items():
                for l1, l2 in _DELTA[letter]:
                    key = (w1 + l1, w2 + l2)
                    s = nxt.get(key, Laurent()) + c
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
            partial = nxt
        for k, c in partial.items():
            s = acc.get(k, Laurent()) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
    return _normalize_tensor(acc)


def _normalize_tensor(acc: dict[tuple[str, str], Laurent]) -> NCPolyTensor:
    out: dict[tuple[str, str], Laurent] = {}
    for (w1, w2), c in acc.items():
        n1 = normal_form(NCPoly.word(w1))
        n2 = normal_form(NCPoly.word(w2))
        for u1, c1 in n1.terms:
            for u2, c2 in n2.terms:
                key = (u1, u2)
                s = out.get(key, Laurent()) + c * c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return NCPolyTensor.from_dict(out)


def _coproduct_residue(lhs: NCPoly, rhs: NCPoly) -> NCPolyTensor:
    acc: dict[tuple[str, str], Laurent] = {}
    for sign, poly in ((1, lhs), (-1, rhs)):
        t = coproduct(poly)
        for key, c in t.terms:
            s = acc.get(key, Laurent()) + (c if sign > 0 else -c)
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return _normalize_tensor(acc)


def check_bialgebra():
    """Delta must kill every defining relation in the tensor square.

    None on success, else (relation name, residue).
    """
    for name, lhs, rhs in RELATIONS:
        residue = _coproduct_residue(lhs, rhs)
        if not residue.is_zero():
            return (name, residue)
    return None


def counit(p: NCPoly) -> Laurent:
    total = Laurent()
    for word, coeff in p.terms:
        val = coeff
        for letter in word:
            val = val * _EPS[letter]
            if not val:
                break
        total = total + val
    return total


def antipode(p: NCPoly) -> NCPoly:
    """The algebra antiautomorphism S(a)=d, S(d)=a, S(b)=-q b, S(c)=-q^-1 c."""
    out = NCPoly.zero()
    for word, coeff in p.terms:
        acc = NCPoly.word("", coeff)
        for letter in reversed(word):
            acc = acc * _ANTIPODE[letter]
        out = out + acc
    return out


def counit_antipode_check():
    """Counit kills the relations; both antipode composites equal unit.counit.

    None on success, else a description of the first failure.
    """
    for name, lhs, rhs in RELATIONS:
        if counit(lhs) != counit(rhs):
            return f"counit fails on {name}"
    for g in ALPHABET:
        target = NCPoly.word("", _EPS[g])
        left = NCPoly.zero()
        right = NCPoly.zero()
        for (w1, w2), c in coproduct(NCPoly.word(g)).terms:
            left = left + (antipode(NCPoly.word(w1)) * NCPoly.word(w2)).scale(c)
            right = right + (NCPoly.word(w1) * antipode(NCPoly.word(w2))).scale(c)
        if normal_form(left) != target:
            return f"m(S ox id)Delta fails on {g}"
        if normal_form(right) != target:
            return f"m(id ox S)Delta fails on {g}"
    return None


# ---------------------------------------------------------------------------
# Parsing and printing

import re

_TOKEN_COEFF = re.compile(r"^([qv])\^(-?\d+)$")
_TOKEN_INT = re.compile(r"^-?\d+$")
_TOKEN_WORD = re.compile(r"^[abcd]+$")


def parse_nc(text: str) -> NCPoly:
    """Parse a whitespace-separated expression over a b c d, q^k, v^k, +, -."""
    tokens = text.split()
    offsets = []
    pos = 0
    for tok in tokens:
        pos = text.index(tok, pos)
        offsets.append(pos)
        pos += len(tok)

    acc: dict[str, Laurent] = {}
    coeff = _ONE
    word = ""
    seen_any = False
    pending_sign = 1

    def flush():
        nonlocal coeff, word, seen_any, pending_sign
        if not seen_any:
            return
        c = coeff if pending_sign > 0 else -coeff
        s = acc.get(word, Laurent()) + c
        if s:
            acc[word] = s
        else:
            acc.pop(word, None)
        coeff, word, seen_any, pending_sign = _ONE, "", False, 1

    for i, tok in enumerate(tokens):
        if tok in ("+", "-"):
            if not seen_any:
                raise QinvError(f"syntax error at position {offsets[i]}: dangling {tok!r}")
            flush()
            pending_sign = 1 if tok == "+" else -1
            continue
        m = _TOKEN_COEFF.match(tok)
        if m:
            base = 2 if m.group(1) == "q" else 1
            coeff = coeff * Laurent.v_power(base * int(m.group(2)))
            seen_any = True
            continue
        if tok in ("q", "v"):
            coeff = coeff * Laurent.v_power(2 if tok == "q" else 1)
            seen_any = True
            continue
        if _TOKEN_INT.match(tok):
            coeff = coeff * int(tok)
            seen_any = True
            continue
        if _TOKEN_WORD.match(tok):
            word += tok
            seen_any = True
            continue
        raise QinvError(f"syntax error at position {offsets[i]}: bad token {tok!r}")
    if not seen_any and tokens:
        raise QinvError("syntax error: trailing operator")
    flush()
    if not tokens:
        raise QinvError("syntax error at position 0: empty expression")
    return NCPoly.from_dict(acc)


def render(p: NCPoly) -> str:
    """Inverse of the parser, coefficients in q when possible."""
    if p.is_zero():
        return "0"
    parts = []
    for word, coeff in sorted(p.terms, key=lambda t: (len(t[0]), t[0])):
        mono = len(coeff.coeffs) == 1
        if mono:
            (e, c), = coeff.coeffs.items()
            sign = "-" if c < 0 else "+"
            pieces = []
            if abs(c) != 1 or (e == 0 and not word):
                pieces.append(str(abs(c)))
            if e:
                var, ve = ("q", e // 2) if e % 2 == 0 else ("v", e)
                pieces.append(var if ve == 1 else f"{var}^{ve}")
            pieces.extend(word)
            if not pieces:
                pieces.append("1")
        else:
            sign = "+"
            pieces = [f"({format_laurent(coeff)})"]
            pieces.extend(word)
        term = " ".join(pieces)
        if not parts:
            parts.append(term if sign == "+" else f"- {term}")
        else:
            parts.append(f"{sign} {term}")
    return " ".join(parts)


def poly_to_json(p: NCPoly) -> list:
    return [{"word": w, "coeff": c.to_json()} for w, c in p.terms]
