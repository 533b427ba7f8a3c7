"""Contribution functions: how much one argument moves another's strength.

Four quantifications are implemented, all mapping (contributor x, topic a)
to a real number given a graph and a semantics:

    removal             sigma_G(a) - sigma_{G without x}(a)
    intrinsic removal   sigma_{G with x's incoming edges removed}(a)
                        - sigma_{G without x}(a)
    shapley             coalition-game attribution: the weighted average,
                        over all subsets X of the other arguments, of the
                        marginal effect of additionally removing x after X
                        has been removed, with weight
                        |X|! (n - |X| - 1)! / n! for n = |Args \\ {a}|
    gradient            d sigma(a) / d tau(x), the exact partial derivative

The removal family never defines an argument's contribution to itself; those
cells are the explicit :data:`UNDEFINED` marker, which is distinct from 0.
The gradient is total and gives the self-contribution a meaning.

Exact Shapley enumeration memoizes subgraph evaluations by kept-set bitmask,
so the two terms of each marginal share one cache and the whole table costs
at most 2^(n-1) distinct evaluations.  Enumeration beyond ``exact_cap``
arguments (default 20) raises :class:`TooLarge`; use the seeded permutation
sampler instead for big graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .errors import TooLarge, UnknownArgument
from .graph import QBAG
from .rng import SplitMix64
from .semantics import GradualSemantics, _Compiled

DEFAULT_EXACT_CAP = 20


class Undefined:
    """Marker for contribution cells that have no value (never a number)."""

    _instance: "Undefined | None" = None

    def __new__(cls) -> "Undefined":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "undef"

    def __bool__(self) -> bool:
        return False


UNDEFINED = Undefined()

ContributionValue = Union[float, Undefined]


@dataclass(frozen=True)
class Removal:
    pass


@dataclass(frozen=True)
class IntrinsicRemoval:
    pass


@dataclass(frozen=True)
class ShapleyExact:
    pass


@dataclass(frozen=True)
class ShapleySampled:
    permutations: int
    seed: int

    def __post_init__(self):
        if self.permutations < 1:
            raise ValueError("permutation count must be at least 1")


@dataclass(frozen=True)
class Gradient:
    pass


ContributionMethod = Union[Removal, IntrinsicRemoval, ShapleyExact, ShapleySampled, Gradient]

_METHOD_NAMES = {
    Removal: "removal",
    IntrinsicRemoval: "intrinsic-removal",
    ShapleyExact: "shapley",
    ShapleySampled: "shapley-sampled",
    Gradient: "gradient",
}


def method_name(method: ContributionMethod) -> str:
    return _METHOD_NAMES[type(method)]


def method_by_name(name: str, *, permutations: int = 100_000, seed: int = 0) -> ContributionMethod:
    """Resolve a CLI method name; extra arguments apply to the sampler only."""
    key = name.strip().lower()
    if key == "removal":
        return Removal()
    if key in ("intrinsic-removal", "intrinsic_removal"):
        return IntrinsicRemoval()
    if key in ("shapley", "shapley-exact", "shapley_exact"):
        return ShapleyExact()
    if key in ("shapley-sampled", "shapley_sampled"):
        return ShapleySampled(permutations, seed)
    if key == "gradient":
        return Gradient()
    raise ValueError(f"unknown contribution method {name!r}")


class EvaluationCache:
    """Memoized evaluations for one (graph, semantics) pair.

    Holds final-strength vectors keyed by kept-set bitmask, by severed
    argument (incoming edges removed), and by single-argument initial
    strength perturbation, plus gradient vectors per topic.  Everything is
    confined to the cache instance; the evaluator itself stays stateless.
    """

    def __init__(self, graph: QBAG, semantics: GradualSemantics):
        self.graph = graph
        self.semantics = semantics
        self._comp = _Compiled(graph, semantics)
        self.full_mask = (1 << len(graph)) - 1
        self._by_mask: dict[int, tuple[float, ...]] = {}
        self._by_isolated: dict[int, tuple[float, ...]] = {}
        self._by_perturbation: dict[tuple[int, float], tuple[float, ...]] = {}
        self._gradients: dict[int, tuple[float, ...]] = {}

    def strengths(self, mask: int | None = None) -> tuple[float, ...]:
        key = self.full_mask if mask is None else mask
        hit = self._by_mask.get(key)
        if hit is None:
            hit = tuple(self._comp.strengths(key))
            self._by_mask[key] = hit
        return hit

    def strengths_isolated(self, index: int) -> tuple[float, ...]:
        hit = self._by_isolated.get(index)
        if hit is None:
            hit = tuple(self._comp.strengths(self.full_mask, isolate=index))
            self._by_isolated[index] = hit
        return hit

    def strengths_perturbed(self, index: int, value: float) -> tuple[float, ...]:
        key = (index, value)
        hit = self._by_perturbation.get(key)
        if hit is None:
            tau = list(self._comp.tau)
            tau[index] = value
            hit = tuple(self._comp.strengths(self.full_mask, tau=tau))
            self._by_perturbation[key] = hit
        return hit

    def gradient(self, topic: int) -> tuple[float, ...]:
        hit = self._gradients.get(topic)
        if hit is None:
            hit = tuple(self._comp.gradient(topic))
            self._gradients[topic] = hit
        return hit

    def removal_delta(self, contributor: int, topic: int) -> float:
        """sigma_G(topic) - sigma_{G without contributor}(topic)."""
        return (
            self.strengths()[topic]
            - self.strengths(self.full_mask & ~(1 << contributor))[topic]
        )


def _indices(graph: QBAG, topic: str, contributor: str) -> tuple[int, int]:
    return graph.index_of(topic), graph.index_of(contributor)


def contrib_removal(
    graph: QBAG,
    semantics: GradualSemantics,
    topic: str,
    contributor: str,
    *,
    cache: EvaluationCache | None = None,
) -> ContributionValue:
    """Effect of deleting the contributor outright (undefined on itself)."""
    t, x = _indices(graph, topic, contributor)
    if t == x:
        return UNDEFINED
    cache = cache or EvaluationCache(graph, semantics)
    return cache.removal_delta(x, t)


def contrib_intrinsic_removal(
    graph: QBAG,
    semantics: GradualSemantics,
    topic: str,
    contributor: str,
    *,
    cache: EvaluationCache | None = None,
) -> ContributionValue:
    """Like removal, but measured from the graph in which the contributor's
    own incoming edges were already severed, so only its intrinsic strength
    counts (undefined on itself)."""
    t, x = _indices(graph, topic, contributor)
    if t == x:
        return UNDEFINED
    cache = cache or EvaluationCache(graph, semantics)
    return (
        cache.strengths_isolated(x)[t]
        - cache.strengths(cache.full_mask & ~(1 << x))[t]
    )


def _shapley_weights(num_players: int) -> list[float]:
    """Weight per coalition size: 1 / (n * C(n-1, k)), built with a running
    binomial so no factorial is ever materialised."""
    weights = []
    binom = 1.0
    for k in range(num_players):
        weights.append(1.0 / (num_players * binom))
        binom = binom * (num_players - 1 - k) / (k + 1)
    return weights


def contrib_shapley_exact(
    graph: QBAG,
    semantics: GradualSemantics,
    topic: str,
    contributor: str,
    *,
    exact_cap: int = DEFAULT_EXACT_CAP,
    cache: EvaluationCache | None = None,
) -> ContributionValue:
    """Exact coalition-game attribution (undefined on itself).

    Sums, over every subset X of the arguments other than topic and
    contributor, the weighted marginal effect of removing the contributor
    from the graph already restricted by removing X.  Subsets are visited in
    increasing bitmask rank so the summation order is reproducible.
    """
    if len(graph) > exact_cap:
        raise TooLarge(
            f"exact enumeration is capped at {exact_cap} arguments, graph has {len(graph)}"
        )
    t, x = _indices(graph, topic, contributor)
    if t == x:
        return UNDEFINED
    cache = cache or EvaluationCache(graph, semantics)
    others = [i for i in range(len(graph)) if i != t and i != x]
    weights = _shapley_weights(len(graph) - 1)
    full = cache.full_mask
    x_bit = 1 << x
    total = 0.0
    for subset in range(1 << len(others)):
        removed = 0
        for j, i in enumerate(others):
            if (subset >> j) & 1:
                removed |= 1 << i
        kept = full & ~removed
        marginal = cache.strengths(kept)[t] - cache.strengths(kept & ~x_bit)[t]
        total += weights[subset.bit_count()] * marginal
    return total


def contrib_shapley_sampled(
    graph: QBAG,
    semantics: GradualSemantics,
    topic: str,
    contributor: str,
    permutations: int,
    seed: int,
    *,
    cache: EvaluationCache | None = None,
) -> ContributionValue:
    """Unbiased permutation-sampling estimate of the exact Shapley value.

    Each sample draws a uniform ordering of the arguments other than the
    topic and takes the marginal effect of removing the contributor after
    the prefix preceding it has been removed.  Deterministic given the seed.
    """
    if permutations < 1:
        raise ValueError("permutation count must be at least 1")
    t, x = _indices(graph, topic, contributor)
    if t == x:
        return UNDEFINED
    cache = cache or EvaluationCache(graph, semantics)
    rng = SplitMix64(seed)
    players = [i for i in range(len(graph)) if i != t]
    full = cache.full_mask
    x_bit = 1 << x
    total = 0.0
    for _ in range(permutations):
        rng.shuffle(players)
        removed = 0
        for i in players:
            if i == x:
                break
            removed |= 1 << i
        kept = full & ~removed
        total += cache.strengths(kept)[t] - cache.strengths(kept & ~x_bit)[t]
    return total / permutations


def contrib_gradient(
    graph: QBAG,
    semantics: GradualSemantics,
    topic: str,
    contributor: str,
    *,
    cache: EvaluationCache | None = None,
) -> ContributionValue:
    """Partial derivative of the topic's strength w.r.t. the contributor's
    initial strength; total, including the self-contribution."""
    t, x = _indices(graph, topic, contributor)
    cache = cache or EvaluationCache(graph, semantics)
    return cache.gradient(t)[x]


def contribution(
    graph: QBAG,
    semantics: GradualSemantics,
    method: ContributionMethod | Callable[..., ContributionValue],
    topic: str,
    contributor: str,
    *,
    exact_cap: int = DEFAULT_EXACT_CAP,
    cache: EvaluationCache | None = None,
) -> ContributionValue:
    """Dispatch on the method.  A callable ``(graph, semantics, topic,
    contributor) -> value`` is accepted in place of a method, which lets
    tests probe the principle checkers with synthetic contribution
    functions."""
    if isinstance(method, Removal):
        return contrib_removal(graph, semantics, topic, contributor, cache=cache)
    if isinstance(method, IntrinsicRemoval):
        return contrib_intrinsic_removal(graph, semantics, topic, contributor, cache=cache)
    if isinstance(method, ShapleyExact):
        return contrib_shapley_exact(
            graph, semantics, topic, contributor, exact_cap=exact_cap, cache=cache
        )
    if isinstance(method, ShapleySampled):
        return contrib_shapley_sampled(
            graph, semantics, topic, contributor, method.permutations, method.seed, cache=cache
        )
    if isinstance(method, Gradient):
        return contrib_gradient(graph, semantics, topic, contributor, cache=cache)
    if callable(method):
        return method(graph, semantics, topic, contributor)
    raise TypeError(f"unknown contribution method {method!r}")


@dataclass(frozen=True)
class ContributionTable:
    """Contributor-by-topic matrix of contribution values.

    Rows are contributors and columns are topics, both in argument-list
    order.  Cells on the diagonal are :data:`UNDEFINED` for the removal
    family and real numbers for the gradient.
    """

    arguments: tuple[str, ...]
    method: str
    semantics: str
    cells: tuple[tuple[ContributionValue, ...], ...]

    def value(self, contributor: str, topic: str) -> ContributionValue:
        try:
            r = self.arguments.index(contributor)
            c = self.arguments.index(topic)
        except ValueError:
            raise UnknownArgument(f"unknown argument in ({contributor!r}, {topic!r})") from None
        return self.cells[r][c]


def contribution_table(
    graph: QBAG,
    semantics: GradualSemantics,
    method: ContributionMethod,
    *,
    exact_cap: int = DEFAULT_EXACT_CAP,
    cache: EvaluationCache | None = None,
) -> ContributionTable:
    """Full contribution matrix under one method; deterministic in argument
    list order, sharing a single evaluation cache across all cells."""
    cache = cache or EvaluationCache(graph, semantics)
    names = graph.arguments
    rows = []
    for contributor in names:
        row = [
            contribution(
                graph, semantics, method, topic, contributor, exact_cap=exact_cap, cache=cache
            )
            for topic in names
        ]
        rows.append(tuple(row))
    return ContributionTable(names, method_name(method), semantics.label(), tuple(rows))
