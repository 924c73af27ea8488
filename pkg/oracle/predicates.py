"""Target classes for the brute-force root search."""

from collections.abc import Callable
from dataclasses import dataclass

from core.graph import Graph
from recognizers.classes import is_ptolemaic, is_split
from recognizers.forbidden import find_3sun


@dataclass(frozen=True)
class ClassPredicate:
    name: str
    evaluate: Callable[[Graph], bool]

    def __call__(self, G: Graph) -> bool:
        return self.evaluate(G)


def _is_3sun_free_split(G: Graph) -> bool:
    return is_split(G)[0] and find_3sun(G) is None


CLASS_PREDICATES: dict[str, ClassPredicate] = {
    "ptolemaic": ClassPredicate("ptolemaic", is_ptolemaic),
    "split-3sun-free": ClassPredicate("split-3sun-free", _is_3sun_free_split),
    "any": ClassPredicate("any", lambda G: True),
}


def get_predicate(name: str) -> ClassPredicate:
    try:
        return CLASS_PREDICATES[name]
    except KeyError:
        raise ValueError(f"unknown class {name!r}; expected one of {sorted(CLASS_PREDICATES)}") from None
