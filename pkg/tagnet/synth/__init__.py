"""Synthetic graphs API"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Optional

import numpy as np

from ..errors import GeneratorSpecError
from ..graph import TagGraph

RNG_ALGORITHM = "PCG64"
MAX_SEED = 2**64


@dataclass(frozen=True)
class GeneratorSpec:
    """A random graph model, its parameters and the seed.

    ``er`` uses ``p``, ``ws`` uses ``k_ring`` and ``beta``, ``ba`` uses ``m``.
    """

    model: str
    n: int
    seed: int = 0
    p: Optional[float] = None
    k_ring: Optional[int] = None
    beta: Optional[float] = None
    m: Optional[int] = None

    def validate(self):
        if self.n < 1:
            raise GeneratorSpecError(f"n must be positive, got {self.n}.")
        if not 0 <= self.seed < MAX_SEED:
            raise GeneratorSpecError(f"seed must fit in 64 unsigned bits, got {self.seed}.")

        if self.model == "er":
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise GeneratorSpecError(f"ER needs 0 <= p <= 1, got p={self.p}.")
        elif self.model == "ws":
            if self.k_ring is None or self.k_ring < 0 or self.k_ring % 2:
                raise GeneratorSpecError(
                    f"WS needs an even, non-negative k_ring, got {self.k_ring}."
                )
            if self.k_ring >= self.n:
                raise GeneratorSpecError(
                    f"WS needs k_ring < n, got k_ring={self.k_ring}, n={self.n}."
                )
            if self.beta is None or not 0.0 <= self.beta <= 1.0:
                raise GeneratorSpecError(f"WS needs 0 <= beta <= 1, got beta={self.beta}.")
        elif self.model == "ba":
            if self.m is None or not 1 <= self.m < self.n:
                raise GeneratorSpecError(
                    f"BA needs 1 <= m < n, got m={self.m}, n={self.n}."
                )
        else:
            raise GeneratorSpecError(
                f"Model {self.model} is not supported. Specify one among: er, ws, ba."
            )

    def parameters(self) -> Dict[str, object]:
        if self.model == "er":
            return {"p": self.p}
        if self.model == "ws":
            return {"k_ring": self.k_ring, "beta": self.beta}
        return {"m": self.m}

    def metadata(self) -> Dict[str, object]:
        """Snapshot header tokens identifying how the graph was generated."""
        return {
            "model": self.model,
            "n": self.n,
            **self.parameters(),
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
        }


class BaseGenerator(ABC):
    @property
    @abstractmethod
    def NAME(self):
        pass

    def __init__(self, spec: GeneratorSpec):
        if spec.model != self.NAME:
            raise GeneratorSpecError(
                f"{type(self).__name__} generates {self.NAME} graphs, got a {spec.model} spec."
            )
        spec.validate()
        self.spec = spec

    def rng(self) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(self.spec.seed))

    @abstractmethod
    def _generate(self, rng: np.random.Generator) -> TagGraph:
        pass

    def generate(self) -> TagGraph:
        """Build the graph; the same spec always yields the same graph."""
        return self._generate(self.rng())

    def __call__(self) -> TagGraph:
        return self.generate()
