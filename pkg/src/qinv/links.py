"""Sliced (Morse) diagrams of colored framed links and their evaluation.

A diagram is an ordered list of events read bottom to top.  Each event
transforms the current slice signature:

    cup  P C   insert (up, down) of color C at position P      (coev)
    cup* P C   insert (down, up) of color C at position P      (coev_pivotal)
    cap  P     consume (up, down) at positions P, P+1          (ev_pivotal)
    cap* P     consume (down, up) at positions P, P+1          (ev)
    x+   P     positive crossing of the upward strands P, P+1
    x-   P     negative crossing of the upward strands P, P+1

Crossings are only permitted between upward strands; braid closures (with
all crossings in the upward zone and nested non-crossing return arcs)
present every framed link under this restriction.

The evaluation sweeps a state vector from the empty bottom slice to the
empty top slice and returns the resulting scalar, which is an invariant of
the framed colored link.  Circles are recovered while validating: a cup
births a circle, a cap merges the two circles it connects; this is what
colored sums and per-component writhes are computed from.

File format (.sld): one event per line as above, "#" comments, and an
optional header "components K" plus "color J N" lines asserting that the
J-th circle (in order of first cup appearance) has color N.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import DiagramError, DimensionCapError
from .ring import GENERIC, CyclotomicRing, Laurent, ScalarRing, find_truncation_level, quantum_integer
from .ribbon import DOWN, UP, Signature, braiding, twist_inverse
from .uqsl2 import dim_cap

EVENT_KINDS = ("cup", "cup*", "cap", "cap*", "x+", "x-")


@dataclass(frozen=True)
class Event:
    kind: str
    pos: int
    color: int | None = None  # cups only

    def __str__(self):
        if self.kind in ("cup", "cup*"):
            return f"{self.kind} {self.pos} {self.color}"
        return f"{self.kind} {self.pos}"


@dataclass(frozen=True)
class SlicedDiagram:
    events: tuple[Event, ...]
    declared_components: int | None = None
    declared_colors: tuple[tuple[int, int], ...] = ()  # (component, color) assertions

    def to_text(self) -> str:
        lines = []
        if self.declared_components is not None:
            lines.append(f"components {self.declared_components}")
        for j, c in self.declared_colors:
            lines.append(f"color {j} {c}")
        lines.extend(str(e) for e in self.events)
        return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> SlicedDiagram:
    """Parse the .sld line format; raises DiagramError with the line number."""
    events: list[Event] = []
    declared_components = None
    declared_colors: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]

        def ints(n):
            if len(parts) != n + 1:
                raise DiagramError(f"line {lineno}: {head!r} expects {n} argument(s)")
            try:
                return [int(p) for p in parts[1:]]
            except ValueError:
                raise DiagramError(f"line {lineno}: bad integer in {raw.strip()!r}") from None

        if head == "components":
            (declared_components,) = ints(1)
        elif head == "color":
            j, c = ints(2)
            declared_colors.append((j, c))
        elif head in ("cup", "cup*"):
            p, c = ints(2)
            if c < 0:
                raise DiagramError(f"line {lineno}: negative color")
            events.append(Event(head, p, c))
        elif head in ("cap", "cap*", "x+", "x-"):
            (p,) = ints(1)
            events.append(Event(head, p))
        else:
            raise DiagramError(f"line {lineno}: unknown event {head!r}")
    return SlicedDiagram(tuple(events), declared_components, tuple(declared_colors))


@dataclass
class Trace:
    """Validation result: slice signatures plus recovered circle structure."""

    signatures: list[Signature]
    n_components: int
    color_of_component: list[int]
    writhe_of_component: list[int]
    # For each event, the circle id(s) it involves; cups record the circle
    # they birth so evaluation can recolor by component.
    cup_component: dict[int, int]  # event index -> component index


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def make(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def validate(d: SlicedDiagram) -> Trace:
    """Check applicability of every event; return signatures and circles."""
    live: list[tuple[int, int, int]] = []  # (color, orientation, circle id)
    uf = _UnionFind()
    circle_color: dict[int, int] = {}
    crossings: list[tuple[int, int, int]] = []  # (circle, circle, sign)
    cup_component: dict[int, int] = {}
    signatures = [Signature(())]
    cap = dim_cap()

    for k, ev in enumerate(d.events):
        p = ev.pos
        if ev.kind in ("cup", "cup*"):
            if not 0 <= p <= len(live):
                raise DiagramError(f"event {k}: position {p} out of range")
            cid = uf.make()
            circle_color[cid] = ev.color
            cup_component[k] = cid
            if ev.kind == "cup":
                pair = [(ev.color, UP, cid), (ev.color, DOWN, cid)]
            else:
                pair = [(ev.color, DOWN, cid), (ev.color, UP, cid)]
            live[p:p] = pair
        elif ev.kind in ("cap", "cap*"):
            if not 0 <= p <= len(live) - 2:
                raise DiagramError(f"event {k}: position {p} out of range")
            (c1, o1, id1), (c2, o2, id2) = live[p], live[p + 1]
            want = (UP, DOWN) if ev.kind == "cap" else (DOWN, UP)
            if (o1, o2) != want:
                raise DiagramError(f"orientation mismatch at event {k}")
            if c1 != c2:
                raise DiagramError(f"color mismatch at event {k}")
            uf.union(id1, id2)
            del live[p : p + 2]
        else:  # crossings
            if not 0 <= p <= len(live) - 2:
                raise DiagramError(f"event {k}: position {p} out of range")
            (c1, o1, id1), (c2, o2, id2) = live[p], live[p + 1]
            if o1 != UP or o2 != UP:
                raise DiagramError(f"orientation mismatch at event {k}: crossings need upward strands")
            crossings.append((id1, id2, 1 if ev.kind == "x+" else -1))
            live[p], live[p + 1] = live[p + 1], live[p]
        dim = 1
        for c, _, _ in live:
            dim *= c + 1
        if dim > cap:
            raise DimensionCapError(f"slice dimension {dim} exceeds cap {cap} at event {k}")
        signatures.append(Signature(tuple((c, o) for c, o, _ in live)))

    if live:
        raise DiagramError("nonempty final signature")

    # Canonical component numbering: order of first cup appearance of the root.
    roots: list[int] = []
    root_index: dict[int, int] = {}
    for k in sorted(cup_component):
        r = uf.find(cup_component[k])
        if r not in root_index:
            root_index[r] = len(roots)
            roots.append(r)
    n_comp = len(roots)

    color_of = [None] * n_comp
    for cid, col in circle_color.items():
        idx = root_index[uf.find(cid)]
        if color_of[idx] is None:
            color_of[idx] = col
        elif color_of[idx] != col:
            raise DiagramError(f"component {idx} colored inconsistently ({color_of[idx]} vs {col})")

    writhe = [0] * n_comp
    for id1, id2, s in crossings:
        r1, r2 = uf.find(id1), uf.find(id2)
        if r1 == r2:
            writhe[root_index[r1]] += s

    if d.declared_components is not None and d.declared_components != n_comp:
        raise DiagramError(f"declared {d.declared_components} components, traced {n_comp}")
    for j, c in d.declared_colors:
        if not 0 <= j < n_comp:
            raise DiagramError(f"color declaration for missing component {j}")
        if color_of[j] != c:
            raise DiagramError(f"component {j} declared color {c}, traced {color_of[j]}")

    comp_of_cup = {k: root_index[uf.find(cid)] for k, cid in cup_component.items()}
    return Trace(signatures, n_comp, color_of, writhe, comp_of_cup)


# ---------------------------------------------------------------------------
# Evaluation


@lru_cache(maxsize=None)
def _crossing_columns(m: int, n: int, sign: int, ring: ScalarRing):
    """Columns of the braiding on V_m ox V_n, for two-site application."""
    return braiding(m, n, sign, ring).mat.columns()


def evaluate(d: SlicedDiagram, ring: ScalarRing = GENERIC, coloring=None):
    """Sweep the diagram bottom to top; returns the scalar invariant.

    ``coloring`` optionally reassigns one color per traced component,
    overriding the colors written on the cups.
    """
    trace = validate(d)
    if coloring is not None:
        if len(coloring) != trace.n_components:
            raise DiagramError(
                f"coloring has {len(coloring)} entries for {trace.n_components} components"
            )

    def cup_color(k: int, ev: Event) -> int:
        if coloring is None:
            return ev.color
        return coloring[trace.cup_component[k]]

    colors: list[int] = []   # per live strand
    orients: list[int] = []
    vec: dict[int, object] = {0: ring.one}

    for k, ev in enumerate(d.events):
        p = ev.pos
        if ev.kind in ("cup", "cup*"):
            n = cup_color(k, ev)
            dim = n + 1
            right = 1
            for c in colors[p:]:
                right *= c + 1
            if ev.kind == "cup":
                weights = {j: ring.one for j in range(dim)}
            else:
                weights = {j: ring.convert(Laurent.q_power(n - 2 * j)) for j in range(dim)}
            new_vec: dict[int, object] = {}
            for idx, val in vec.items():
                left, rest = divmod(idx, right)
                base = left * dim * dim * right
                for j, w in weights.items():
                    nv = val * w
                    if nv:
                        new_vec[base + (j * dim + j) * right + rest] = (
                            new_vec.get(base + (j * dim + j) * right + rest, ring.zero) + nv
                        )
            vec = {i: x for i, x in new_vec.items() if x}
            pair = [(n, UP), (n, DOWN)] if ev.kind == "cup" else [(n, DOWN), (n, UP)]
            colors[p:p] = [n, n]
            orients[p:p] = [pair[0][1], pair[1][1]]
        elif ev.kind in ("cap", "cap*"):
            n = colors[p]
            dim = n + 1
            right = 1
            for c in colors[p + 2 :]:
                right *= c + 1
            if ev.kind == "cap":
                weights = {j: ring.convert(Laurent.q_power(-(n - 2 * j))) for j in range(dim)}
            else:
                weights = {j: ring.one for j in range(dim)}
            new_vec = {}
            for idx, val in vec.items():
                left, rest = divmod(idx, dim * dim * right)
                pairpart, rest2 = divmod(rest, right)
                j1, j2 = divmod(pairpart, dim)
                if j1 != j2:
                    continue
                nv = val * weights[j1]
                if not nv:
                    continue
                key = left * right + rest2
                s = new_vec.get(key, ring.zero) + nv
                if s:
                    new_vec[key] = s
                else:
                    new_vec.pop(key, None)
            vec = new_vec
            del colors[p : p + 2]
            del orients[p : p + 2]
        else:
            m, n = colors[p], colors[p + 1]
            dm, dn = m + 1, n + 1
            sign = 1 if ev.kind == "x+" else -1
            cols = _crossing_columns(m, n, sign, ring)
            right = 1
            for c in colors[p + 2 :]:
                right *= c + 1
            new_vec = {}
            for idx, val in vec.items():
                left, rest = divmod(idx, dm * dn * right)
                pairpart, rest2 = divmod(rest, right)
                for row, coeff in cols.get(pairpart, ()):
                    nv = val * coeff
                    if not nv:
                        continue
                    key = (left * dn * dm + row) * right + rest2
                    s = new_vec.get(key, ring.zero) + nv
                    if s:
                        new_vec[key] = s
                    else:
                        new_vec.pop(key, None)
            vec = new_vec
            colors[p], colors[p + 1] = colors[p + 1], colors[p]

    return vec.get(0, ring.zero)


# ---------------------------------------------------------------------------
# Braid closures and framing


def braid_closure(word, colors) -> SlicedDiagram:
    """Close a braid word on len(colors) strands into a sliced diagram.

    Nested cup*'s set up k (down, up) pairs so the braid acts on the
    upward block; matching cap*'s close up.  The evaluation equals the
    quantum trace of the braid representation.
    """
    colors = list(colors)
    k = len(colors)
    if k == 0:
        raise DiagramError("braid closure needs at least one strand")
    for idx, _ in word:
        if not 1 <= idx <= k - 1:
            raise DiagramError(f"generator s{idx} needs {idx + 1} strands, have {k}")
    events = [Event("cup*", j, colors[k - 1 - j]) for j in range(k)]
    events.extend(Event("x+" if s > 0 else "x-", k - 1 + idx) for idx, s in word)
    events.extend(Event("cap*", j) for j in range(k - 1, -1, -1))
    return SlicedDiagram(tuple(events))


def framing_normalize(value, writhes, colors, ring: ScalarRing = GENERIC):
    """Multiply by the inverse twist per unit of self-framing."""
    for w, c in zip(writhes, colors):
        if w:
            value = value * ring.convert(twist_inverse(c) ** w)
    return value


def colored_sum(d: SlicedDiagram, m: int, weighting: str = "plain"):
    """Sum the invariant over all colorings by the simples at order m.

    ``weighting`` is "plain" for the bare sum or "qdim" to weight each
    coloring by the product of quantum dimensions of its colors.
    """
    if weighting not in ("plain", "qdim"):
        raise DiagramError(f"unknown weighting {weighting!r}")
    ring = CyclotomicRing(m)
    ell = find_truncation_level(m)
    trace = validate(d)
    total = ring.zero
    for coloring in product(range(ell - 1), repeat=trace.n_components):
        val = evaluate(d, ring, coloring)
        if weighting == "qdim":
            for c in coloring:
                val = val * ring.convert(quantum_integer(c + 1))
        total = total + val
    return total
