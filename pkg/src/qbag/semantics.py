"""Modular gradual semantics: final strengths and exact partial derivatives.

A semantics is an (aggregation, influence) pair.  The aggregation folds the
final strengths of an argument's attackers and supporters into one signal;
the influence maps (initial strength, signal) to the final strength.  On an
acyclic graph a single pass in topological order fixes every value, and the
same pass structure yields exact partial derivatives of any argument's final
strength with respect to every initial strength by reverse accumulation.

Aggregations (attacker strengths ``A``, supporter strengths ``S``):

    sum       sum(S) - sum(A)
    product   prod(1 - a for a in A) - prod(1 - s for s in S)
    top       max({0} | S) - max({0} | A)

Influences (initial strength ``w``, aggregate ``s``):

    linear(k)      w - (w/k) * max(0, -s) + ((1-w)/k) * max(0, s),  |s| <= k
    euler-based    1 - (1 - w^2) / (1 + w * exp(s))
    p-max(p, k)    w - w * h(-s/k) + (1 - w) * h(s/k),  h(x) = max(0,x)^p / (1 + max(0,x)^p)

Non-smooth points get a fixed one-sided convention so the derivative map is
total: at aggregate 0, linear and p-max use the positive branch (slope
``(1-w)/k`` for linear and for p = 1; slope 0 for p >= 2, where the function
is continuously differentiable anyway); for the top aggregation the
derivative of a side flows through its unique argmax parent, while an exact
tie between parents contributes no derivative at all.  The tie rule keeps
gradients of symmetric attackers/supporters at exactly zero; the unique
argmax carries the derivative even at strength 0, because strengths are
nonnegative and the 0 floor therefore never overtakes it in a feasible
direction.  ``kink_margin`` reports how far a graph's operating point is
from any of these non-smooth configurations so callers can tell when the
convention is active.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence, Union

from .errors import DomainError, UnknownArgument
from .graph import QBAG

_DOMAIN_SLACK = 1e-12


class Aggregation(Enum):
    SUM = "sum"
    PRODUCT = "product"
    TOP = "top"


@dataclass(frozen=True)
class Linear:
    """Piecewise-linear influence over aggregates in [-k, k]."""

    k: float = 1.0

    def __post_init__(self):
        if not self.k > 0:
            raise ValueError("linear influence needs k > 0")


@dataclass(frozen=True)
class EulerBased:
    """Smooth exponential influence with range [w^2, 1]."""


@dataclass(frozen=True)
class PMax:
    """Saturating polynomial influence; p = 2, k = 1 is the quadratic energy rule."""

    p: int
    k: float = 1.0

    def __post_init__(self):
        if not (isinstance(self.p, int) and self.p >= 1):
            raise ValueError("p-max influence needs integer p >= 1")
        if not self.k > 0:
            raise ValueError("p-max influence needs k > 0")


Influence = Union[Linear, EulerBased, PMax]


@dataclass(frozen=True)
class GradualSemantics:
    aggregation: Aggregation
    influence: Influence
    name: str | None = None

    def label(self) -> str:
        if self.name:
            return self.name
        return f"{self.aggregation.value}+{type(self.influence).__name__.lower()}"


QE = GradualSemantics(Aggregation.SUM, PMax(2, 1.0), "QE")
DFQUAD = GradualSemantics(Aggregation.PRODUCT, Linear(1.0), "DFQuAD")
SD_DFQUAD = GradualSemantics(Aggregation.PRODUCT, PMax(1, 1.0), "SD-DFQuAD")
EB = GradualSemantics(Aggregation.SUM, EulerBased(), "EB")
EBT = GradualSemantics(Aggregation.TOP, EulerBased(), "EBT")

PRESETS: dict[str, GradualSemantics] = {
    "qe": QE,
    "dfquad": DFQUAD,
    "sd-dfquad": SD_DFQUAD,
    "eb": EB,
    "ebt": EBT,
}


def semantics_by_name(name: str) -> GradualSemantics:
    """Look up one of the five presets, case-insensitively."""
    try:
        return PRESETS[name.strip().lower()]
    except KeyError:
        raise ValueError(
            f"unknown semantics {name!r}; expected one of {', '.join(sorted(PRESETS))}"
        ) from None


@dataclass(frozen=True)
class StrengthAssignment:
    """Final strengths plus the topological order they were computed in."""

    sigma: Mapping[str, float]
    order: tuple[str, ...]

    def __getitem__(self, name: str) -> float:
        try:
            return self.sigma[name]
        except KeyError:
            raise UnknownArgument(f"unknown argument {name!r}") from None


@dataclass(frozen=True)
class GradientVector:
    """Partial derivatives of one argument's final strength w.r.t. every
    initial strength, evaluated at the graph's initial strengths."""

    topic: str
    partials: Mapping[str, float]

    def __getitem__(self, name: str) -> float:
        try:
            return self.partials[name]
        except KeyError:
            raise UnknownArgument(f"unknown argument {name!r}") from None


# ----------------------------------------------------------- scalar functions


def aggregate(kind: Aggregation, att_strengths: Sequence[float], supp_strengths: Sequence[float]) -> float:
    """Fold attacker and supporter strengths into one adjustment signal."""
    if kind is Aggregation.SUM:
        total = 0.0
        for v in supp_strengths:
            total += v
        for v in att_strengths:
            total -= v
        return total
    if kind is Aggregation.PRODUCT:
        pa = 1.0
        for v in att_strengths:
            pa *= 1.0 - v
        ps = 1.0
        for v in supp_strengths:
            ps *= 1.0 - v
        return pa - ps
    ms = 0.0
    for v in supp_strengths:
        if v > ms:
            ms = v
    ma = 0.0
    for v in att_strengths:
        if v > ma:
            ma = v
    return ms - ma


def influence(kind: Influence, initial: float, signal: float) -> float:
    """Map (initial strength, aggregate) to a final strength in [0, 1]."""
    value, _, _ = _influence_functions(kind)
    return value(initial, signal)


def _influence_functions(
    kind: Influence,
) -> tuple[Callable[[float, float], float], Callable[[float, float], float], Callable[[float, float], float]]:
    """(value, d/d-aggregate, d/d-initial) closures for one influence."""
    if isinstance(kind, Linear):
        k = kind.k

        def value(w: float, s: float) -> float:
            if abs(s) > k + _DOMAIN_SLACK:
                raise DomainError(f"linear influence domain is [-{k}, {k}], got aggregate {s!r}")
            r = w + (1.0 - w) * s / k if s >= 0.0 else w + w * s / k
            return 0.0 if r < 0.0 else 1.0 if r > 1.0 else r

        def d_signal(w: float, s: float) -> float:
            return (1.0 - w) / k if s >= 0.0 else w / k

        def d_initial(w: float, s: float) -> float:
            return 1.0 - s / k if s >= 0.0 else 1.0 + s / k

        return value, d_signal, d_initial

    if isinstance(kind, EulerBased):

        def value(w: float, s: float) -> float:
            den = 1.0 + w * math.exp(s)
            r = 1.0 - (1.0 - w * w) / den
            return 0.0 if r < 0.0 else 1.0 if r > 1.0 else r

        def d_signal(w: float, s: float) -> float:
            e = math.exp(s)
            den = 1.0 + w * e
            return (1.0 - w * w) * w * e / (den * den)

        def d_initial(w: float, s: float) -> float:
            e = math.exp(s)
            den = 1.0 + w * e
            return (2.0 * w * den + (1.0 - w * w) * e) / (den * den)

        return value, d_signal, d_initial

    if isinstance(kind, PMax):
        p, k = kind.p, kind.k

        def h(x: float) -> float:
            xp = x**p
            return xp / (1.0 + xp)

        def h_prime(x: float) -> float:
            # one-sided derivative at 0+: 1 for p == 1, 0 for p >= 2
            if x == 0.0:
                return 1.0 if p == 1 else 0.0
            xp = x**p
            return p * x ** (p - 1) / ((1.0 + xp) * (1.0 + xp))

        def value(w: float, s: float) -> float:
            x = s / k
            if x > 0.0:
                r = w + (1.0 - w) * h(x)
            elif x < 0.0:
                r = w - w * h(-x)
            else:
                r = w
            return 0.0 if r < 0.0 else 1.0 if r > 1.0 else r

        def d_signal(w: float, s: float) -> float:
            if s >= 0.0:
                return (1.0 - w) * h_prime(s / k) / k
            return w * h_prime(-s / k) / k

        def d_initial(w: float, s: float) -> float:
            if s >= 0.0:
                return 1.0 - h(s / k)
            return 1.0 - h(-s / k)

        return value, d_signal, d_initial

    raise TypeError(f"unknown influence {kind!r}")


# ------------------------------------------------------------- the evaluator


class _Compiled:
    """Index-based evaluator bound to one (graph, semantics) pair.

    ``strengths`` accepts a kept-set bitmask, an initial-strength override
    vector, and an optional argument whose incoming edges are ignored, which
    together cover every restriction/modification the contribution and
    principle machinery needs without rebuilding graphs.
    """

    __slots__ = ("graph", "semantics", "n", "order", "attackers", "supporters", "tau", "agg", "value", "d_signal", "d_initial")

    def __init__(self, graph: QBAG, semantics: GradualSemantics):
        self.graph = graph
        self.semantics = semantics
        self.n = len(graph)
        self.order = graph._topo
        self.attackers = graph._attackers
        self.supporters = graph._supporters
        self.tau = graph._tau
        self.agg = semantics.aggregation
        self.value, self.d_signal, self.d_initial = _influence_functions(semantics.influence)

    def strengths(
        self,
        mask: int = -1,
        tau: Sequence[float] | None = None,
        isolate: int = -1,
        with_signals: bool = False,
    ):
        """Final strengths of the kept subgraph (entries of dropped arguments
        are meaningless zeros).  ``isolate`` treats one argument as parentless.
        With ``with_signals`` also returns each node's aggregate (or None for
        parentless nodes)."""
        taus = self.tau if tau is None else tau
        out = [0.0] * self.n
        signals: list[float | None] = [None] * self.n if with_signals else []
        agg = self.agg
        value = self.value
        attackers = self.attackers
        supporters = self.supporters
        for i in self.order:
            if not (mask >> i) & 1:
                continue
            atts = attackers[i]
            sups = supporters[i]
            if i == isolate:
                atts = sups = ()
            has_parent = False
            if agg is Aggregation.SUM:
                s = 0.0
                for p in sups:
                    if (mask >> p) & 1:
                        s += out[p]
                        has_parent = True
                for p in atts:
                    if (mask >> p) & 1:
                        s -= out[p]
                        has_parent = True
            elif agg is Aggregation.PRODUCT:
                pa = 1.0
                ps = 1.0
                for p in atts:
                    if (mask >> p) & 1:
                        pa *= 1.0 - out[p]
                        has_parent = True
                for p in sups:
                    if (mask >> p) & 1:
                        ps *= 1.0 - out[p]
                        has_parent = True
                s = pa - ps
            else:
                ms = 0.0
                ma = 0.0
                for p in sups:
                    if (mask >> p) & 1:
                        has_parent = True
                        if out[p] > ms:
                            ms = out[p]
                for p in atts:
                    if (mask >> p) & 1:
                        has_parent = True
                        if out[p] > ma:
                            ma = out[p]
                s = ms - ma
            if has_parent:
                out[i] = value(taus[i], s)
                if with_signals:
                    signals[i] = s
            else:
                out[i] = taus[i]
        if with_signals:
            return out, signals
        return out

    def gradient(self, topic: int) -> list[float]:
        """Reverse accumulation of d sigma(topic) / d tau(x) for every x."""
        out, signals = self.strengths(with_signals=True)
        adjoint = [0.0] * self.n
        adjoint[topic] = 1.0
        partials = [0.0] * self.n
        topo = self.graph._topo
        agg = self.agg
        for pos in range(self.graph._topo_pos[topic], -1, -1):
            i = topo[pos]
            a_i = adjoint[i]
            if a_i == 0.0:
                continue
            signal = signals[i]
            if signal is None:
                partials[i] = a_i
                continue
            partials[i] = a_i * self.d_initial(self.tau[i], signal)
            scale = a_i * self.d_signal(self.tau[i], signal)
            if scale == 0.0:
                continue
            atts = self.attackers[i]
            sups = self.supporters[i]
            if agg is Aggregation.SUM:
                for p in sups:
                    adjoint[p] += scale
                for p in atts:
                    adjoint[p] -= scale
            elif agg is Aggregation.PRODUCT:
                for p in atts:
                    rest = 1.0
                    for q in atts:
                        if q != p:
                            rest *= 1.0 - out[q]
                    adjoint[p] -= scale * rest
                for p in sups:
                    rest = 1.0
                    for q in sups:
                        if q != p:
                            rest *= 1.0 - out[q]
                    adjoint[p] += scale * rest
            else:
                for parents, sign in ((sups, 1.0), (atts, -1.0)):
                    if not parents:
                        continue
                    best = max(out[p] for p in parents)
                    winners = [p for p in parents if out[p] == best]
                    if len(winners) == 1:
                        # A unique argmax parent carries the derivative even at
                        # strength 0: strengths are nonnegative, so the 0 floor
                        # never overtakes it in a feasible direction.
                        adjoint[winners[0]] += sign * scale
                    # exact tie between parents: no derivative
        return partials


def evaluate(graph: QBAG, semantics: GradualSemantics) -> StrengthAssignment:
    """Final strengths by one forward pass in topological order.  Arguments
    without attackers or supporters keep their initial strength."""
    values = _Compiled(graph, semantics).strengths()
    order = tuple(graph.arguments[i] for i in graph._topo)
    return StrengthAssignment({name: values[i] for i, name in enumerate(graph.arguments)}, order)


def gradient_of_topic(graph: QBAG, semantics: GradualSemantics, topic: str) -> GradientVector:
    """Exact partials of the topic's final strength, including the partial
    with respect to the topic's own initial strength.  Arguments with no
    directed path to the topic get an exact zero."""
    t = graph.index_of(topic)
    partials = _Compiled(graph, semantics).gradient(t)
    return GradientVector(topic, {name: partials[i] for i, name in enumerate(graph.arguments)})


def kink_margin(graph: QBAG, semantics: GradualSemantics) -> float:
    """Distance from the graph's operating point to the nearest non-smooth
    configuration of the semantics; ``inf`` when the semantics is smooth at
    every node.  Checked configurations: aggregate 0 under a linear or 1-max
    influence, and near-ties (including with the 0 floor) between a side's
    candidates under the top aggregation."""
    comp = _Compiled(graph, semantics)
    out, signals = comp.strengths(with_signals=True)
    margin = math.inf
    infl = semantics.influence
    kinked_influence = isinstance(infl, Linear) or (isinstance(infl, PMax) and infl.p == 1)
    for i in range(comp.n):
        signal = signals[i]
        if signal is None:
            continue
        if kinked_influence:
            margin = min(margin, abs(signal))
        if comp.agg is Aggregation.TOP:
            for parents in (comp.supporters[i], comp.attackers[i]):
                if not parents:
                    continue
                values = sorted((out[p] for p in parents), reverse=True)
                runner_up = values[1] if len(values) > 1 else 0.0
                gap = values[0] - runner_up if values[0] > 0.0 else 0.0
                margin = min(margin, gap)
    return margin
