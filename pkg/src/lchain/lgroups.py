"""L-groups of the integers and typed values living in them.

Both families are 4-periodic::

    n mod 4      0    1    2    3
    L_n(Z)       Z    0   Z/2   0
    L^n(Z)       Z   Z/2   0    0
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

QUADRATIC_TABLE = ("Z", "0", "Z/2", "0")
SYMMETRIC_TABLE = ("Z", "Z/2", "0", "0")


class UnsupportedInvariant(ValueError):
    """The requested invariant is outside what is computed here."""


@dataclass(frozen=True)
class Z2:
    """An element of Z/2. Deliberately not an ``int``, so it cannot leak into a Z slot."""

    bit: int = 0

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise ValueError(f"Z/2 element must be 0 or 1, got {self.bit!r}")

    def __add__(self, other: Z2) -> Z2:
        if not isinstance(other, Z2):
            return NotImplemented
        return Z2(self.bit ^ other.bit)

    __sub__ = __add__

    def __neg__(self) -> Z2:
        return self

    def __bool__(self) -> bool:
        return bool(self.bit)

    def __int__(self) -> int:
        return self.bit

    def __str__(self) -> str:
        return f"{self.bit} mod 2"


Value = Union[int, Z2]


def lgroup(n: int, flavor: str = "quadratic") -> str:
    """Name of ``L_n(Z)`` (quadratic) or ``L^n(Z)`` (symmetric).

    >>> lgroup(6), lgroup(5, "symmetric")
    ('Z/2', 'Z/2')
    """
    if flavor == "quadratic":
        return QUADRATIC_TABLE[n % 4]
    if flavor == "symmetric":
        return SYMMETRIC_TABLE[n % 4]
    raise ValueError(f"unknown flavor {flavor!r}")


def lgroups_table(max_n: int) -> list[tuple[int, str, str]]:
    """Rows ``(n, L_n(Z), L^n(Z))`` for ``n = 0..max_n``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    return [(n, lgroup(n, "quadratic"), lgroup(n, "symmetric")) for n in range(max_n + 1)]


def check_value(kind: str, value) -> Value:
    """Return ``value`` if it belongs to the group named ``kind``, else raise."""
    if kind == "Z":
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"Z slot needs an int, got {value!r}")
        return value
    if kind == "Z/2":
        if not isinstance(value, Z2):
            raise TypeError(f"Z/2 slot needs a Z2 value, got {value!r}")
        return value
    if kind == "0":
        if isinstance(value, bool) or value != 0 or not isinstance(value, int):
            raise TypeError(f"trivial group holds only 0, got {value!r}")
        return 0
    raise ValueError(f"unknown group {kind!r}")


def coerce_value(kind: str, value: int) -> Value:
    """Read a decimal integer into the group ``kind``; Z/2 slots take 0 or 1."""
    if kind == "Z/2":
        return Z2(int(value))
    return check_value(kind, int(value))


def zero_of(kind: str) -> Value:
    return Z2(0) if kind == "Z/2" else 0


@dataclass(frozen=True)
class LClass:
    """An element of ``L_n(Z)`` or ``L^n(Z)``."""

    flavor: str
    degree: int
    value: Value = 0

    def __post_init__(self):
        object.__setattr__(self, "value", check_value(self.group, self.value))

    @property
    def group(self) -> str:
        return lgroup(self.degree, self.flavor)

    @property
    def residue(self) -> int:
        return self.degree % 4

    @classmethod
    def zero(cls, flavor: str, degree: int) -> LClass:
        return cls(flavor, degree, zero_of(lgroup(degree, flavor)))

    @classmethod
    def parse(cls, flavor: str, degree: int, value: int) -> LClass:
        return cls(flavor, degree, coerce_value(lgroup(degree, flavor), value))

    def _same(self, other: LClass) -> None:
        if (self.flavor, self.degree) != (other.flavor, other.degree):
            raise ValueError(f"cannot combine classes in different groups: {self} and {other}")

    def __add__(self, other: LClass) -> LClass:
        self._same(other)
        return LClass(self.flavor, self.degree, self.value + other.value)

    def __neg__(self) -> LClass:
        return LClass(self.flavor, self.degree, -self.value)

    def __sub__(self, other: LClass) -> LClass:
        return self + (-other)

    def __bool__(self) -> bool:
        return bool(self.value)

    def __int__(self) -> int:
        return int(self.value)

    def __str__(self) -> str:
        name = f"L_{self.degree}(Z)" if self.flavor == "quadratic" else f"L^{self.degree}(Z)"
        return f"{int(self.value)} in {name} = {self.group}"

    def to_json_obj(self) -> dict:
        return {"flavor": self.flavor, "degree": self.degree, "group": self.group, "value": int(self.value)}
