"""Exact quantum-group link invariants and friends.

Subpackages:

* ``ring``    -- integer Laurent polynomials in v and cyclotomic quotients
* ``uqsl2``   -- finite-dimensional modules of quantized sl2
* ``ribbon``  -- braiding, twist, duality morphisms, braid representations
* ``links``   -- sliced diagrams of framed links and their evaluation
* ``fusion``  -- the fusion ring at a root of unity and surface invariants
* ``hopf``    -- axiom checker for finite-dimensional bialgebras
* ``qcoords`` -- normal forms in the quantum coordinate algebra of SL(2)
* ``axioms``  -- the aggregated category-axiom suite
* ``cli``     -- the ``qinv`` command-line front end
"""

from .ring import (  # noqa: F401
    GENERIC,
    Cyclo,
    CyclotomicRing,
    GenericRing,
    Laurent,
    find_truncation_level,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
    specialize,
)
