"""Exact computer algebra for the Podles quantum sphere.

Subpackages cover the ground field Q(t) (scalars), the Hopf algebra
O_q(SL2) (oqsl2), the sphere algebra and its representations (podles),
U_q(sl2) representation matrices and spectra (uqsl2rep), the dual-coalgebra
functional engine (dualfunc), covariant first-order differential calculi
(fodc) and a batch CLI (cli).
"""

__version__ = "0.1.0"
