"""Indexed indeterminate families x, y, z, w (index >= 1) and a, b (any index).

The total order on indeterminates is fixed: by family x < y < z < w < a < b,
then by index ascending.  Monomials store raw (family_rank, index) pairs; this
module owns validation, parsing and printing.
"""

import re

FAMILIES = ("x", "y", "z", "w", "a", "b")
FAMILY_RANK = {letter: rank for rank, letter in enumerate(FAMILIES)}
X, Y, Z, W, A, B = range(6)

# Indices of the doubly infinite families a, b are confined to a runtime
# window so truncation bugs in the infinite-model code fail loudly.
_index_window = (-64, 64)

_NAME_RE = re.compile(r"^([xyzwab])(-?\d+)$")


def set_index_window(lo: int, hi: int) -> None:
    global _index_window
    if lo > hi:
        raise ValueError("empty index window")
    _index_window = (lo, hi)


def get_index_window() -> tuple[int, int]:
    return _index_window


class IndexWindowError(ValueError):
    pass


def check_index(family: int, index: int) -> None:
    if family in (A, B):
        lo, hi = _index_window
        if not lo <= index <= hi:
            raise IndexWindowError(
                f"index {index} of family '{FAMILIES[family]}' outside window [{lo}, {hi}]"
            )
    else:
        if index < 1:
            raise ValueError(
                f"family '{FAMILIES[family]}' requires index >= 1, got {index}"
            )


class Indeterminate:
    """A single symbol such as x1, y2, a-3 or b0."""

    __slots__ = ("family", "index")

    def __init__(self, family, index: int):
        if isinstance(family, str):
            family = FAMILY_RANK[family]
        check_index(family, index)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("Indeterminate is immutable")

    @property
    def name(self) -> str:
        return f"{FAMILIES[self.family]}{self.index}"

    @property
    def key(self) -> tuple[int, int]:
        return (self.family, self.index)

    @classmethod
    def parse(cls, text: str) -> "Indeterminate":
        m = _NAME_RE.match(text.strip())
        if not m:
            raise ValueError(f"not an indeterminate name: {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __eq__(self, other):
        return (
            isinstance(other, Indeterminate)
            and self.family == other.family
            and self.index == other.index
        )

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash((self.family, self.index))

    def __repr__(self):
        return f"Indeterminate({self.name!r})"


def key_name(key: tuple[int, int]) -> str:
    return f"{FAMILIES[key[0]]}{key[1]}"
