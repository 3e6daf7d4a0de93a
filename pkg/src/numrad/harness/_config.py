from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class NumradSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="NUMRAD_", extra="ignore")

    # == Certificates ==
    tol: float = Field(1e-10, gt=0.0)  # target half-width of certified radii
    grid_angles: int = Field(720, ge=8)  # initial angle grid of the radius search
    margin_rtol: float = Field(1e-10, ge=0.0)  # accretivity margin relative to ||A||

    # == Quadrature ==
    quadrature_initial_nodes: int = Field(64, ge=4)
    quadrature_max_nodes: int = Field(2**14, ge=4)  # root reduction kicks in past this
    quadrature_rtol: float = Field(1e-10, gt=0.0)

    # == Predicates ==
    commute_rtol: float = Field(1e-8, gt=0.0)
    gamma_cutoff: float = Field(1e-6, ge=0.0)  # below this a sector counts as gamma = 0

    # == Sweeps ==
    seed: int = Field(0, ge=0, lt=2**64)
    trials: int = Field(1000, ge=0)
    max_workers: int = Field(8, ge=1)
    n_range: tuple[int, int] = (2, 8)
    gamma_range: tuple[float, float] = (0.05, 1.5)
