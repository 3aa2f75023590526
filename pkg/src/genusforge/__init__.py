"""genusforge: exact computer algebra for formal group laws and Hirzebruch genera."""

from genusforge.fgl import (
    CATALOG,
    FormalGroupLaw,
    canonical_strict_iso,
    catalog,
    check_axioms,
    gaussian_bracket,
    logarithm,
    mobius_sweep,
    n_series,
    negation_series,
    verify_iso,
)
from genusforge.genus import (
    GenusSeries,
    ManifoldDescriptor,
    gamma_series,
    genus_cpn,
    genus_of,
    genus_series,
    mishchenko_check,
    universal_gamma,
    witten_series,
)
from genusforge.ring import (
    RingElement,
    bernoulli,
    euler_gamma,
    zeta_fraction,
    zeta_numeric,
    zeta_tilde_even,
)
from genusforge.series import (
    Series1,
    Series2,
    bivariate_from_exp,
    exp_series,
    log_series,
    sqrt_series,
)
from genusforge.symfun import (
    ChernPolynomial,
    SymPoly,
    convert,
    expand_in_roots,
    multiplicative_sequence,
    pontryagin_from_chern,
    zeta_specialize,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "ChernPolynomial",
    "FormalGroupLaw",
    "GenusSeries",
    "ManifoldDescriptor",
    "RingElement",
    "Series1",
    "Series2",
    "SymPoly",
    "__version__",
    "bernoulli",
    "bivariate_from_exp",
    "canonical_strict_iso",
    "catalog",
    "check_axioms",
    "convert",
    "euler_gamma",
    "exp_series",
    "expand_in_roots",
    "gamma_series",
    "gaussian_bracket",
    "genus_cpn",
    "genus_of",
    "genus_series",
    "log_series",
    "logarithm",
    "mishchenko_check",
    "mobius_sweep",
    "multiplicative_sequence",
    "n_series",
    "negation_series",
    "pontryagin_from_chern",
    "sqrt_series",
    "universal_gamma",
    "verify_iso",
    "witten_series",
    "zeta_fraction",
    "zeta_numeric",
    "zeta_specialize",
    "zeta_tilde_even",
]
