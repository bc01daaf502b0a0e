"""Word algebra, relation families, and numerical checks for multiple zeta values.

The package splits into a small exact core and a float layer on top:

- :mod:`mzvlab.words` — words in the noncommutative letters x, y, polynomials
  over them with rational coefficients, and the index encoding
  yx^{k1-1}...yx^{kr-1} <-> (k1,...,kr).
- :mod:`mzvlab.products` — concatenation, harmonic, and diamond products.
- :mod:`mzvlab.maps` — tau, phi, S1 and its inverse, S, the derivations, and
  the (x+y)-power basis decomposition.
- :mod:`mzvlab.relations` — the four relation families, exact echelon spans,
  and membership certificates.
- :mod:`mzvlab.numerics` — exact finite sums plus float evaluation with
  cutoff/error reports; heavy loops live in :mod:`mzvlab.kernels` with
  numba and numpy implementations selected via MZVLAB_BACKEND.
- :mod:`mzvlab.cli` — command-line front end (``mzvlab`` entry point).
"""

from .words import (
    EMPTY,
    Index,
    Word,
    WordPoly,
    admissible_words,
    index_to_word,
    subspace_test,
    word_to_index,
    words_of_weight,
    yh_words,
)
from .products import concat, diamond, harmonic
from .maps import (
    derivation,
    phi,
    s1,
    s1_inv,
    s_map,
    tau,
    z_basis_decompose,
    z_power,
)
from .relations import (
    SPAN_IDS,
    MembershipCertificate,
    RowBasis,
    check_graded_equality,
    derivation_residual,
    duality_residual,
    graded_span,
    kawashima_generator,
    member,
    reduce_to_basis,
)
from .numerics import (
    DEFAULT_CUTOFF,
    DEFAULT_TOL,
    FamilySymbol,
    NumericReport,
    c1_coeff,
    c2_coeff,
    c2_identity_check,
    f_component,
    h_n,
    kawashima_a1,
    kawashima_f,
    l_partial,
    star_sum,
    z_eval_poly,
    zeta_eval,
    zeta_partial_exact,
)

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "Index",
    "Word",
    "WordPoly",
    "admissible_words",
    "index_to_word",
    "subspace_test",
    "word_to_index",
    "words_of_weight",
    "yh_words",
    "concat",
    "diamond",
    "harmonic",
    "derivation",
    "phi",
    "s1",
    "s1_inv",
    "s_map",
    "tau",
    "z_basis_decompose",
    "z_power",
    "SPAN_IDS",
    "MembershipCertificate",
    "RowBasis",
    "check_graded_equality",
    "derivation_residual",
    "duality_residual",
    "graded_span",
    "kawashima_generator",
    "member",
    "reduce_to_basis",
    "DEFAULT_CUTOFF",
    "DEFAULT_TOL",
    "FamilySymbol",
    "NumericReport",
    "c1_coeff",
    "c2_coeff",
    "c2_identity_check",
    "f_component",
    "h_n",
    "kawashima_a1",
    "kawashima_f",
    "l_partial",
    "star_sum",
    "z_eval_poly",
    "zeta_eval",
    "zeta_partial_exact",
    "__version__",
]
