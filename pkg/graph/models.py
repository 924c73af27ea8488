"""Result records for the square-root pipelines."""

from enum import Enum

from pydantic import BaseModel, ConfigDict

from core.graph import Graph, VertexSet, bits
from recognizers.forbidden import ForbiddenPattern


class Outcome(str, Enum):
    ROOT = "root"
    NO_ROOT = "no-root"


class RejectionStage(str, Enum):
    NOT_CONNECTED = "not-connected"
    NOT_CHORDAL = "not-chordal"
    ASSIGNMENT_INFEASIBLE = "assignment-infeasible"
    TOO_MANY_CLIQUES = "too-many-cliques"
    INTERSECTION_TOO_SMALL = "intersection-too-small"
    NOT_HEREDITARY_CLIQUE_HELLY = "not-hereditary-clique-helly"
    FINAL_VERIFICATION_FAILED = "final-verification-failed"


class CenterPlan(BaseModel):
    """Candidate centre sets X_C per maximal clique, grouped by identical X, plus the chosen centres."""

    model_config = ConfigDict(frozen=True)

    candidates: tuple[VertexSet, ...]
    groups: tuple[tuple[int, ...], ...]
    assignment: dict[int, int] | None = None

    def candidate_members(self, clique: int) -> tuple[int, ...]:
        return tuple(bits(self.candidates[clique]))

    def is_laminar(self) -> bool:
        """Candidate sets are pairwise identical or disjoint."""
        xs = self.candidates
        return all(a == b or a & b == 0 for i, a in enumerate(xs) for b in xs[i + 1:])


class SplitRootCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    clique: tuple[int, ...]
    representatives: tuple[int, ...]
    root: Graph


class RootResult(BaseModel):
    """Either a constructed root with its certificates or the stage that rejected the input."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    outcome: Outcome
    root: Graph | None = None
    edges: int | None = None
    square_matches: bool = False
    ptolemaic: bool = False
    split: bool = False
    three_sun_free: bool = False
    root_classes: tuple[str, ...] = ()
    stage: RejectionStage | None = None
    witness: ForbiddenPattern | None = None
    certificate: SplitRootCertificate | None = None
    trail: tuple[str, ...] = ()

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.ROOT
