"""Core simulator state: grid occupancy, object instances, agent pose,
actions, and step outcomes."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field, replace
from enum import Enum, IntEnum

import numpy as np

from ..catalog import ClassCatalog
from ..errors import UnknownTargetError

Cell = tuple[int, int]

FREE = -1
WALL = -2


class Heading(IntEnum):
    N = 0
    E = 1
    S = 2
    W = 3

    @property
    def delta(self) -> Cell:
        return _DELTAS[self]

    @property
    def angle(self) -> float:
        """World-frame angle in radians; x grows east, y grows south."""
        return _ANGLES[self]

    def left(self) -> "Heading":
        return Heading((self - 1) % 4)

    def right(self) -> "Heading":
        return Heading((self + 1) % 4)


_DELTAS = {
    Heading.N: (0, -1),
    Heading.E: (1, 0),
    Heading.S: (0, 1),
    Heading.W: (-1, 0),
}
_ANGLES = {
    Heading.N: -np.pi / 2,
    Heading.E: 0.0,
    Heading.S: np.pi / 2,
    Heading.W: np.pi,
}


@dataclass(frozen=True)
class AgentPose:
    cell: Cell
    heading: Heading


@dataclass(frozen=True)
class StateFlags:
    sliced: bool = False
    clean: bool = False
    heated: bool = False
    cooled: bool = False
    toggled_on: bool = False

    def on_names(self) -> list[str]:
        return [k for k, v in self.__dict__.items() if v]


@dataclass
class ObjectInstance:
    id: int
    class_id: int
    footprint: frozenset[Cell]
    pickupable: bool
    is_receptacle: bool
    state_flags: StateFlags = field(default_factory=StateFlags)
    held_by_agent: bool = False

    def copy(self) -> "ObjectInstance":
        return replace(self)


class ActionKind(Enum):
    MOVE_AHEAD = "MoveAhead"
    ROTATE_LEFT = "RotateLeft"
    ROTATE_RIGHT = "RotateRight"
    PICKUP = "Pickup"
    PUT = "Put"
    OPEN = "Open"
    CLOSE = "Close"
    TOGGLE_ON = "ToggleOn"
    TOGGLE_OFF = "ToggleOff"
    SLICE = "Slice"
    STOP = "Stop"


_INTERACTIONS = {
    ActionKind.PICKUP,
    ActionKind.PUT,
    ActionKind.OPEN,
    ActionKind.CLOSE,
    ActionKind.TOGGLE_ON,
    ActionKind.TOGGLE_OFF,
    ActionKind.SLICE,
}


@dataclass(frozen=True)
class Action:
    kind: ActionKind
    target: int | None = None

    def __post_init__(self):
        if self.kind in _INTERACTIONS:
            if self.target is None:
                raise UnknownTargetError(f"{self.kind.value} needs a target id")
        elif self.target is not None:
            raise UnknownTargetError(f"{self.kind.value} takes no target id")

    @property
    def is_interaction(self) -> bool:
        return self.kind in _INTERACTIONS

    def label(self) -> str:
        if self.target is None:
            return self.kind.value
        return f"{self.kind.value}({self.target})"

    @classmethod
    def parse(cls, text: str) -> "Action":
        text = text.strip()
        if text.endswith(")"):
            name, _, rest = text.partition("(")
            return cls(ActionKind(name), int(rest[:-1]))
        return cls(ActionKind(text))


class Outcome(Enum):
    SUCCESS = "Success"
    COLLISION = "Collision"
    INTERACTION_FAILURE = "InteractionFailure"


@dataclass(frozen=True)
class StepOutcome:
    result: Outcome
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.result is Outcome.SUCCESS

    def label(self) -> str:
        return self.result.value if not self.detail else (
            f"{self.result.value}[{self.detail}]"
        )

    @classmethod
    def parse(cls, text: str) -> "StepOutcome":
        if text.endswith("]"):
            head, _, rest = text.partition("[")
            return cls(Outcome(head), rest[:-1])
        return cls(Outcome(text))


@dataclass(frozen=True)
class Ray:
    bearing: float
    depth: float
    depth_variance: float
    hit: bool


@dataclass(frozen=True)
class Proposal:
    object_id: int  # hidden from learners; evaluation/opaque handle only
    feature: np.ndarray
    visible_cells: frozenset[Cell]
    confidence: float


@dataclass(frozen=True)
class Observation:
    rays: tuple[Ray, ...]
    proposals: tuple[Proposal, ...]
    step_index: int

    def digest(self) -> str:
        h = hashlib.sha256()
        for r in self.rays:
            h.update(np.float64([r.bearing, r.depth, r.depth_variance]).tobytes())
            h.update(b"1" if r.hit else b"0")
        for p in self.proposals:
            h.update(str(p.object_id).encode())
            h.update(np.asarray(p.feature, dtype=np.float64).tobytes())
            h.update(str(sorted(p.visible_cells)).encode())
            h.update(np.float64([p.confidence]).tobytes())
        h.update(str(self.step_index).encode())
        return h.hexdigest()[:16]


class GridWorld:
    """Ground-truth scene: walls, typed object instances, agent pose.

    `occupancy[y, x]` is WALL, FREE, or the id of the object whose footprint
    covers the cell. Mutated only through `sim.step`, which works on copies.
    """

    def __init__(
        self,
        width: int,
        height: int,
        occupancy: np.ndarray,
        objects: dict[int, ObjectInstance],
        agent: AgentPose,
        rng_seed: int,
        catalog: ClassCatalog,
        step_count: int = 0,
    ):
        self.width = width
        self.height = height
        self.occupancy = occupancy
        self.objects = objects
        self.agent = agent
        self.rng_seed = rng_seed
        self.catalog = catalog
        self.step_count = step_count

    def copy(self) -> "GridWorld":
        return GridWorld(
            self.width,
            self.height,
            self.occupancy.copy(),
            {oid: o.copy() for oid, o in self.objects.items()},
            self.agent,
            self.rng_seed,
            self.catalog,
            self.step_count,
        )

    def in_bounds(self, cell: Cell) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def is_free(self, cell: Cell) -> bool:
        return self.in_bounds(cell) and self.occupancy[cell[1], cell[0]] == FREE

    def wall_mask(self) -> np.ndarray:
        return self.occupancy == WALL

    def blocked_mask(self) -> np.ndarray:
        return self.occupancy != FREE

    @property
    def held_object(self) -> ObjectInstance | None:
        for o in self.objects.values():
            if o.held_by_agent:
                return o
        return None

    def class_entry(self, obj: ObjectInstance):
        return self.catalog.get(obj.class_id)

    def instances_of(self, class_id: int) -> list[ObjectInstance]:
        return [o for o in self.objects.values() if o.class_id == class_id]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GridWorld):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.occupancy, other.occupancy)
            and self.objects == other.objects
            and self.agent == other.agent
            and self.rng_seed == other.rng_seed
            and self.step_count == other.step_count
            and self.catalog == other.catalog
        )


def chebyshev(a: Cell, b: Cell) -> int:
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def footprint_distance(cell: Cell, footprint: frozenset[Cell]) -> float:
    """Chebyshev distance from a cell to the nearest footprint cell.

    Held objects have empty footprints and are unreachable by range checks.
    """
    if not footprint:
        return float("inf")
    return min(chebyshev(cell, c) for c in footprint)


def validate_world(world: GridWorld) -> None:
    """Assert every GridWorld invariant; raises AssertionError on violation."""
    occ = np.full((world.height, world.width), FREE, dtype=np.int32)
    occ[world.wall_mask()] = WALL
    for o in world.objects.values():
        if o.held_by_agent:
            assert not o.footprint, f"held object {o.id} has a footprint"
            continue
        assert o.footprint, f"placed object {o.id} has no footprint"
        for x, y in o.footprint:
            assert world.in_bounds((x, y)), f"object {o.id} out of bounds"
            assert occ[y, x] == FREE, f"object {o.id} overlaps at {(x, y)}"
            occ[y, x] = o.id
    assert np.array_equal(occ, world.occupancy), "occupancy out of sync"
    ax, ay = world.agent.cell
    assert world.in_bounds((ax, ay)), "agent out of bounds"
    assert world.occupancy[ay, ax] == FREE, "agent cell not free"
