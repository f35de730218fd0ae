"""Independent Kauffman-bracket oracle for braid closures.

Pure state-sum combinatorics, sharing nothing with the package's sweep
evaluation: every crossing is resolved into the parallel or the cup-cap
smoothing, loops of the resulting closed 1-manifold are counted with
union-find, and the unreduced bracket is

    sum over states  A^(a - b) * delta^(#loops),   delta = -A^2 - A^-2.

A positive braid generator resolves as A * parallel + A^-1 * cupcap, the
negative one with the coefficients exchanged.

Relation to the package (verified by the tests that import this): for the
trace closure of a braid on k strands with all strands colored by the
two-dimensional simple,

    sweep evaluation  =  (-1)^k * bracket at A = v.
"""

from __future__ import annotations

from qinv.ring import Laurent


def kauffman_bracket_closure(word, strands: int) -> Laurent:
    A = Laurent.v_power(1)
    Ainv = Laurent.v_power(-1)
    delta = -(Laurent.v_power(2) + Laurent.v_power(-2))
    total = Laurent()
    c = len(word)
    for state in range(1 << c):
        parent: dict = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def node(tag):
            if tag not in parent:
                parent[tag] = tag
            return tag

        wires = [node(("bot", i)) for i in range(strands)]
        coeff = Laurent.from_int(1)
        loops = 0
        for t, (idx, sgn) in enumerate(word):
            i = idx - 1
            use_cupcap = bool((state >> t) & 1)
            if sgn > 0:
                coeff = coeff * (Ainv if use_cupcap else A)
            else:
                coeff = coeff * (A if use_cupcap else Ainv)
            if use_cupcap:
                a, b = find(wires[i]), find(wires[i + 1])
                if a == b:
                    loops += 1
                else:
                    parent[a] = b
                wires[i] = node(("seg", t, 0))
                wires[i + 1] = node(("seg", t, 1))
                parent[find(wires[i])] = find(wires[i + 1])
            # the parallel smoothing leaves the wiring untouched
        for i in range(strands):
            a, b = find(wires[i]), find(node(("bot", i)))
            if a == b:
                loops += 1
            else:
                parent[a] = b
        total = total + coeff * delta**loops
    return total
