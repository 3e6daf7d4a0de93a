import numpy as np

from numrad.utils import ComplexMatrix

Seed = int | np.random.Generator


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """The counter-based stream of sample `index` under `seed`; independent of scheduling and thread count."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def as_generator(seed: Seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else stream(seed)


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> ComplexMatrix:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_unitary(n: int, seed: Seed = 0) -> ComplexMatrix:
    """Haar-distributed unitary: QR of a complex Gaussian matrix with the phases of diag(R) folded into Q."""
    rng = as_generator(seed)
    q, r = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    magnitude = np.abs(d)
    phases = np.where(magnitude > 0.0, d / np.where(magnitude > 0.0, magnitude, 1.0), 1.0)
    return q * phases[None, :]
