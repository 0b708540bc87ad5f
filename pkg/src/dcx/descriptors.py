"""Declarative environment-space arithmetic over domain descriptors.

A descriptor lists countable components of a domain (board positions,
ownership states, physical parameter ranges) tagged by whether they define
a world state or a game instance. All products are taken in log10 space or
exact integers, so astronomically large counts never materialize as floats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DegenerateInput, FormatError, InvalidParameter
from .measures import (
    ANALYTIC,
    MeasureResult,
    Power,
    gtc_power,
    log10_int,
    normalized_entropy,
)

HIERARCHY_LEVELS = (
    "object",
    "agent",
    "action",
    "relation",
    "interaction",
    "rule",
    "goal",
    "event",
)

ROLES = ("state", "instance")

BUNDLED_DESCRIPTORS = ("cartpole2d", "cartpole2d-g", "cartpole3d", "monopoly", "pogo")


def _cardinality_log10(cardinality: int | Power) -> float:
    if isinstance(cardinality, Power):
        return cardinality.log10()
    return log10_int(cardinality)


@dataclass(frozen=True)
class Component:
    """One countable factor of a domain.

    role "state" components multiply into the state space; role "instance"
    components multiply into the space of game instances. Components marked
    estimate carry guessed cardinalities and stay out of computed sums.
    """

    name: str
    cardinality: int | Power
    role: str
    hierarchy_level: str | None = None
    estimate: bool = False
    note: str | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise InvalidParameter("component name must be non-empty")
        if self.role not in ROLES:
            raise InvalidParameter(f"component role must be one of {ROLES}")
        if self.hierarchy_level is not None and self.hierarchy_level not in HIERARCHY_LEVELS:
            raise InvalidParameter(
                f"hierarchy_level must be one of {HIERARCHY_LEVELS}"
            )
        if isinstance(self.cardinality, Power):
            return
        if isinstance(self.cardinality, bool) or not isinstance(self.cardinality, int):
            raise InvalidParameter("cardinality must be an integer or a Power")
        if self.cardinality < 1:
            raise InvalidParameter("cardinality must be at least 1")

    def log10(self) -> float:
        return _cardinality_log10(self.cardinality)


@dataclass(frozen=True)
class DomainDescriptor:
    """A named domain plus its countable components and tree parameters."""

    name: str
    branching_factor: int
    avg_game_length: int
    max_game_length: int
    components: tuple[Component, ...]
    initial_state_count: int | Power | None = None
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        for field_name in ("branching_factor", "avg_game_length", "max_game_length"):
            value = getattr(self, field_name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParameter(f"{field_name} must be a positive integer")
        if self.avg_game_length > self.max_game_length:
            raise InvalidParameter("avg_game_length cannot exceed max_game_length")

    def state_components(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.role == "state")

    def instance_components(self) -> tuple[Component, ...]:
        return tuple(c for c in self.components if c.role == "instance")


def _parse_cardinality(raw, where: str) -> int | Power:
    if isinstance(raw, bool):
        raise FormatError(f"{where}: cardinality must be an integer or base/exp pair")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, dict):
        if set(raw) != {"base", "exp"}:
            raise FormatError(f"{where}: power form needs exactly base and exp")
        base, exp = raw["base"], raw["exp"]
        if not isinstance(base, int) or not isinstance(exp, int):
            raise FormatError(f"{where}: base and exp must be integers")
        return Power(base=base, exp=exp)
    raise FormatError(f"{where}: cardinality must be an integer or base/exp pair")


_COMPONENT_KEYS = {"name", "cardinality", "role", "hierarchy_level", "estimate", "note"}
_COMPONENT_REQUIRED = {"name", "cardinality", "role"}
_DESCRIPTOR_KEYS = {
    "name",
    "branching_factor",
    "avg_game_length",
    "max_game_length",
    "components",
    "initial_state_count",
    "notes",
}
_DESCRIPTOR_REQUIRED = {
    "name",
    "branching_factor",
    "avg_game_length",
    "max_game_length",
    "components",
}


def _parse_component(raw, index: int) -> Component:
    where = f"components[{index}]"
    if not isinstance(raw, dict):
        raise FormatError(f"{where}: expected an object")
    unknown = set(raw) - _COMPONENT_KEYS
    if unknown:
        raise FormatError(f"{where}: unknown keys {sorted(unknown)}")
    missing = _COMPONENT_REQUIRED - set(raw)
    if missing:
        raise FormatError(f"{where}: missing keys {sorted(missing)}")
    estimate = raw.get("estimate", False)
    if not isinstance(estimate, bool):
        raise FormatError(f"{where}: estimate must be true or false")
    return Component(
        name=raw["name"],
        cardinality=_parse_cardinality(raw["cardinality"], where),
        role=raw["role"],
        hierarchy_level=raw.get("hierarchy_level"),
        estimate=estimate,
        note=raw.get("note"),
    )


def descriptor_from_mapping(obj: dict) -> DomainDescriptor:
    """Build a descriptor from parsed JSON, rejecting unknown keys."""
    if not isinstance(obj, dict):
        raise FormatError("descriptor root must be an object")
    unknown = set(obj) - _DESCRIPTOR_KEYS
    if unknown:
        raise FormatError(f"descriptor has unknown keys {sorted(unknown)}")
    missing = _DESCRIPTOR_REQUIRED - set(obj)
    if missing:
        raise FormatError(f"descriptor is missing keys {sorted(missing)}")
    raw_components = obj["components"]
    if not isinstance(raw_components, list):
        raise FormatError("components must be a list")
    components = tuple(
        _parse_component(raw, i) for i, raw in enumerate(raw_components)
    )
    initial = obj.get("initial_state_count")
    if initial is not None:
        initial = _parse_cardinality(initial, "initial_state_count")
    notes = obj.get("notes", [])
    if not isinstance(notes, list) or not all(isinstance(n, str) for n in notes):
        raise FormatError("notes must be a list of strings")
    return DomainDescriptor(
        name=obj["name"],
        branching_factor=obj["branching_factor"],
        avg_game_length=obj["avg_game_length"],
        max_game_length=obj["max_game_length"],
        components=components,
        initial_state_count=initial,
        notes=tuple(notes),
    )


def load_descriptor(path: str | Path) -> DomainDescriptor:
    """Parse a descriptor JSON file with strict schema checking."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"descriptor is not valid JSON: {exc}") from exc
    return descriptor_from_mapping(obj)


def bundled_descriptor(name: str) -> DomainDescriptor:
    """Load one of the descriptors shipped with the package."""
    if name not in BUNDLED_DESCRIPTORS:
        raise InvalidParameter(
            f"unknown bundled descriptor {name!r}; choose from {BUNDLED_DESCRIPTORS}"
        )
    ref = resources.files("dcx").joinpath(f"data/{name}.json")
    with resources.as_file(ref) as path:
        return load_descriptor(path)


def state_space_complexity(descriptor: DomainDescriptor) -> float:
    """Sum of log10 cardinalities over firm state-role components."""
    firm = [c for c in descriptor.state_components() if not c.estimate]
    if not descriptor.state_components():
        raise DegenerateInput("descriptor has no state components")
    return sum(c.log10() for c in firm)


def estimated_slack_log10(descriptor: DomainDescriptor) -> float:
    """Extra log10 contributed by estimate-marked components, reported apart."""
    return sum(c.log10() for c in descriptor.components if c.estimate)


def environment_space_bound(descriptor: DomainDescriptor) -> float:
    """State-space arithmetic reported as a lower bound on environment states.

    Estimate-marked components are excluded here too; their contribution is
    available through estimated_slack_log10 so reports can label it.
    """
    return state_space_complexity(descriptor)


def game_space_complexity(
    descriptor: DomainDescriptor, include_initial_states: bool = True
) -> float:
    """Sum of log10 cardinalities over instance-role components.

    With include_initial_states the initial-state factor is added: the
    descriptor's explicit initial_state_count when present, otherwise the
    state-space complexity.
    """
    instance = [c for c in descriptor.instance_components() if not c.estimate]
    if not descriptor.instance_components():
        raise DegenerateInput("descriptor has no instance components")
    total = sum(c.log10() for c in instance)
    if include_initial_states:
        if descriptor.initial_state_count is not None:
            total += _cardinality_log10(descriptor.initial_state_count)
        else:
            total += state_space_complexity(descriptor)
    return total


def tree_complexity(descriptor: DomainDescriptor, mode: str = "uniform_sum") -> float:
    """Game-tree complexity, exact geometric sum or plain power form.

    uniform_sum: log10 of the exact integer sum of b^i for i = 1..max
    (games may end at any tick). power: avg_game_length * log10(b).
    """
    b = descriptor.branching_factor
    if b < 2:
        raise InvalidParameter("tree complexity needs branching_factor >= 2")
    if mode == "uniform_sum":
        total = (b ** (descriptor.max_game_length + 1) - b) // (b - 1)
        return log10_int(total)
    if mode == "power":
        return gtc_power(b, descriptor.avg_game_length)
    raise InvalidParameter(f"unknown tree complexity mode {mode!r}")


@dataclass(frozen=True)
class BreakdownElement:
    """One element of a world state: how many entities, and the units of
    information needed to pin each one down."""

    name: str
    count: int
    units: int

    def __post_init__(self) -> None:
        for field_name in ("count", "units"):
            value = getattr(self, field_name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidParameter(f"{field_name} must be a positive integer")

    @property
    def weight(self) -> int:
        return self.count * self.units


@dataclass(frozen=True)
class InformationBreakdown:
    elements: tuple[BreakdownElement, ...]

    def weights(self) -> tuple[int, ...]:
        return tuple(e.weight for e in self.elements)


def breakdown_from_mapping(obj: dict) -> InformationBreakdown:
    if not isinstance(obj, dict) or set(obj) != {"elements"}:
        raise FormatError("breakdown must be an object with a single elements key")
    elements = []
    for i, raw in enumerate(obj["elements"]):
        if not isinstance(raw, dict) or set(raw) != {"name", "count", "units"}:
            raise FormatError(f"elements[{i}] needs exactly name, count and units")
        elements.append(BreakdownElement(raw["name"], raw["count"], raw["units"]))
    return InformationBreakdown(elements=tuple(elements))


def load_breakdown(path: str | Path) -> InformationBreakdown:
    text = Path(path).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"breakdown is not valid JSON: {exc}") from exc
    return breakdown_from_mapping(obj)


def bundled_breakdown(name: str) -> InformationBreakdown:
    ref = resources.files("dcx").joinpath(f"data/{name}_breakdown.json")
    if not ref.is_file():
        raise InvalidParameter(f"no bundled breakdown named {name!r}")
    with resources.as_file(ref) as path:
        return load_breakdown(path)


def information_entropy(breakdown: InformationBreakdown) -> MeasureResult:
    """Normalized entropy of the per-element information weights.

    Weight of an element is entity_count * units_per_entity; events are the
    elements themselves.
    """
    n = len(breakdown.elements)
    if n < 2:
        raise DegenerateInput("information entropy needs at least two elements")
    weights = breakdown.weights()
    total = sum(weights)
    value = normalized_entropy([w / total for w in weights], event_count=n)
    return MeasureResult(
        measure_name="information_entropy",
        value=value,
        convention=(
            "weights = entity_count * units_per_entity, normalized; "
            f"event_count = {n} elements"
        ),
        provenance=ANALYTIC,
    )


def strategy_entropy(win_probabilities) -> MeasureResult:
    """Normalized entropy of a win-probability vector over the players."""
    probs = list(win_probabilities)
    value = normalized_entropy(probs, event_count=len(probs))
    return MeasureResult(
        measure_name="strategy_entropy",
        value=value,
        convention=f"win probabilities; event_count = {len(probs)} players",
        provenance=ANALYTIC,
    )


def path_sparsity_bound(
    required_moves: tuple[int, int], extra_actions: int, branching: int
) -> tuple[int, float, float]:
    """Closed-form sparsity of a task needing a fixed multiset of moves.

    With a moves of one kind and b of another, any interleaving works, so
    C(a+b, a) paths succeed. The path runs a + b + 1 + extra_actions steps
    (the final step completes the task) over branching choices each. Returns
    (successful_paths, total_paths_log10, sparsity_log10).
    """
    a, b = required_moves
    for label, value in (("required move counts", a), ("required move counts", b)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise InvalidParameter(f"{label} must be non-negative integers")
    if a + b < 1:
        raise InvalidParameter("at least one required move is needed")
    if isinstance(extra_actions, bool) or not isinstance(extra_actions, int) or extra_actions < 0:
        raise InvalidParameter("extra_actions must be a non-negative integer")
    if not isinstance(branching, int) or branching < 2:
        raise InvalidParameter("branching must be an integer >= 2")
    successful = math.comb(a + b, a)
    length = a + b + 1 + extra_actions
    total_log10 = length * math.log10(branching)
    return successful, total_log10, log10_int(successful) - total_log10
