from numrad.generators.ensembles import (
    gen_accretive_dissipative,
    gen_cone,
    gen_double_commuting,
    gen_generic,
    gen_sectorial,
    random_hermitian_pd,
    random_hermitian_with_spectrum,
    sample,
)
from numrad.generators.protocol import EnsembleKind, EnsembleSpec
from numrad.generators.rng import random_unitary, stream

__all__ = [
    "EnsembleKind",
    "EnsembleSpec",
    "gen_accretive_dissipative",
    "gen_cone",
    "gen_double_commuting",
    "gen_generic",
    "gen_sectorial",
    "random_hermitian_pd",
    "random_hermitian_with_spectrum",
    "random_unitary",
    "sample",
    "stream",
]
