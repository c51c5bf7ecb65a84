"""Object class catalog shared by the simulator, the grammar, and the
concept learner.

Each class carries simulator attributes (footprint, pickupable, receptacle,
cutter, toggleable, appliance effect) and a semantic group used when
generating structured word embeddings and grouped visual prototypes.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import ConfigurationError

CATALOG_VERSION = "catalog v1"

_FLAG_NAMES = (
    "pickupable",
    "receptacle",
    "cutter",
    "toggleable",
    "openable",
)


@dataclass(frozen=True)
class ClassEntry:
    name: str
    class_id: int
    group: str
    pickupable: bool = False
    receptacle: bool = False
    cutter: bool = False
    toggleable: bool = False
    openable: bool = False
    footprint: tuple[int, int] = (1, 1)
    # When toggled on, sets `affects` on pickupables resting on/in instances
    # of `basin` (the appliance's own class unless stated otherwise).
    affects: str | None = None
    basin: str | None = None


class ClassCatalog:
    def __init__(self, entries: list[ClassEntry]):
        if not entries:
            raise ConfigurationError("catalog must be non-empty")
        names = [e.name for e in entries]
        if len(set(names)) != len(names):
            raise ConfigurationError("duplicate class names in catalog")
        for i, e in enumerate(entries):
            if e.class_id != i:
                raise ConfigurationError("catalog ids must be dense and ordered")
        self.entries = entries
        self._by_name = {e.name: e for e in entries}
        self._by_word = {e.name.lower(): e for e in entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassCatalog) and self.entries == other.entries

    def get(self, class_id: int) -> ClassEntry:
        return self.entries[class_id]

    def by_name(self, name: str) -> ClassEntry:
        return self._by_name[name]

    def by_word(self, word: str) -> ClassEntry | None:
        """Case-insensitive lookup used by the instruction grammar."""
        return self._by_word.get(word.lower())

    def id_of(self, name: str) -> int:
        return self._by_name[name].class_id

    @property
    def pickupable_names(self) -> list[str]:
        return [e.name for e in self.entries if e.pickupable]

    @property
    def static_receptacle_names(self) -> list[str]:
        return [e.name for e in self.entries if e.receptacle and not e.pickupable]

    @property
    def movable_receptacle_names(self) -> list[str]:
        return [e.name for e in self.entries if e.receptacle and e.pickupable]

    @property
    def groups(self) -> dict[str, list[int]]:
        out: dict[str, list[int]] = {}
        for e in self.entries:
            out.setdefault(e.group, []).append(e.class_id)
        return out

    def to_text(self) -> str:
        lines = [CATALOG_VERSION]
        for e in self.entries:
            flags = ",".join(f for f in _FLAG_NAMES if getattr(e, f)) or "-"
            lines.append(
                f"{e.name} {e.group} {flags} "
                f"{e.footprint[0]}x{e.footprint[1]} "
                f"{e.affects or '-'} {e.basin or '-'}"
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ClassCatalog":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0].strip() != CATALOG_VERSION:
            raise ConfigurationError("bad or missing catalog header")
        entries = []
        for i, line in enumerate(lines[1:]):
            parts = line.split()
            if len(parts) != 6:
                raise ConfigurationError(f"malformed catalog line: {line!r}")
            name, group, flags, fp, affects, basin = parts
            flag_set = set(flags.split(",")) if flags != "-" else set()
            unknown = flag_set - set(_FLAG_NAMES)
            if unknown:
                raise ConfigurationError(f"unknown flags {unknown} on {name}")
            w, _, h = fp.partition("x")
            entries.append(
                ClassEntry(
                    name=name,
                    class_id=i,
                    group=group,
                    footprint=(int(w), int(h)),
                    affects=None if affects == "-" else affects,
                    basin=None if basin == "-" else basin,
                    **{f: f in flag_set for f in _FLAG_NAMES},
                )
            )
        return cls(entries)


def default_catalog() -> ClassCatalog:
    text = resources.files("conceptnav.data").joinpath("catalog_v1.txt").read_text()
    return ClassCatalog.from_text(text)
