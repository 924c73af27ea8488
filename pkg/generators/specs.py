"""Generator parameters, validated on construction."""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

# Seeded generators use Python's random.Random (Mersenne Twister MT19937).
RNG_ALGORITHM = "python-random-mt19937"


class SplitMode(str, Enum):
    NESTED = "nested"
    REJECTION = "rejection"


class GenSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int = Field(0, ge=0, lt=2**64)


class PtolemaicGenSpec(GenSpec):
    """Grow from K1 by pendant, true-twin and simplicial false-twin operations."""

    n: int = Field(ge=1)
    pendant: float = Field(1.0, ge=0)
    true_twin: float = Field(1.0, ge=0)
    false_twin: float = Field(1.0, ge=0)

    @model_validator(mode="after")
    def _can_grow(self):
        # A false twin needs a vertex with a neighbour, which K1 does not have.
        if self.n > 1 and self.pendant == 0 and self.true_twin == 0:
            raise ValueError("pendant or true_twin weight must be positive")
        return self

    def metadata(self) -> str:
        return (
            f"generator=ptolemaic rng={RNG_ALGORITHM} seed={self.seed} n={self.n} "
            f"weights={self.pendant:g},{self.true_twin:g},{self.false_twin:g}"
        )


class SplitGenSpec(GenSpec):
    """Connected split graph: a clique plus independent vertices attached to it."""

    clique_size: int = Field(ge=1)
    independent_size: int = Field(0, ge=0)
    density: float = Field(0.5, gt=0, le=1)
    mode: SplitMode = SplitMode.NESTED

    def metadata(self) -> str:
        return (
            f"generator=split-{self.mode.value} rng={RNG_ALGORITHM} seed={self.seed} "
            f"clique={self.clique_size} independent={self.independent_size} density={self.density:g}"
        )
