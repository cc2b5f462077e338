"""Normal invariants and structures of ``M = S^p x S^q``.

A normal invariant is a triple ``(x, y, z)`` in ``L_p(Z) + L_q(Z) + L_{p+q}(Z)``
and a structure is a pair ``(x, y)`` in ``L_p(Z) + L_q(Z)``. There are two
additions on triples:

    (x, y, z) + (x', y', z')  = (x + x', y + y', z + z')
    (x, y, z) (+) (x', y', z') = (x + x', y + y', x y' + x' y + z + z')

and the cross term ``x y' + x' y`` is nonzero only when ``p = q = 0 mod 4``.
L_{4k}(Z) is identified with Z so that these formulas hold as written.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lgroups import LClass, Value, Z2, check_value, coerce_value, lgroup, zero_of

SphereLClass = LClass


def lproduct(a: LClass, b: LClass) -> LClass:
    """Product ``L_p(Z) x L_q(Z) -> L_{p+q}(Z)`` with plain integer multiplication.

    >>> lproduct(LClass("quadratic", 4, 2), LClass("quadratic", 4, 3)).value
    6
    """
    n = a.degree + b.degree
    if a.degree % 4 == 0 and b.degree % 4 == 0:
        return LClass("quadratic", n, a.value * b.value)
    return LClass.zero("quadratic", n)


def _check_pq(p: int, q: int) -> None:
    if p < 2 or q < 2:
        raise ValueError(f"need p, q >= 2 for a simply connected product, got p={p}, q={q}")


@dataclass(frozen=True)
class TElem:
    """Normal invariant ``(x, y, z)`` of ``S^p x S^q``."""

    p: int
    q: int
    x: Value
    y: Value
    z: Value

    def __post_init__(self):
        _check_pq(self.p, self.q)
        object.__setattr__(self, "x", check_value(lgroup(self.p), self.x))
        object.__setattr__(self, "y", check_value(lgroup(self.q), self.y))
        object.__setattr__(self, "z", check_value(lgroup(self.p + self.q), self.z))

    @classmethod
    def of(cls, p: int, q: int, x: int, y: int, z: int) -> TElem:
        """Build from plain integers; Z/2 slots take 0 or 1."""
        return cls(p, q, coerce_value(lgroup(p), x), coerce_value(lgroup(q), y), coerce_value(lgroup(p + q), z))

    @classmethod
    def zero(cls, p: int, q: int) -> TElem:
        return cls(p, q, zero_of(lgroup(p)), zero_of(lgroup(q)), zero_of(lgroup(p + q)))

    def classes(self) -> tuple[LClass, LClass, LClass]:
        return (
            LClass("quadratic", self.p, self.x),
            LClass("quadratic", self.q, self.y),
            LClass("quadratic", self.p + self.q, self.z),
        )

    def as_ints(self) -> tuple[int, int, int]:
        return int(self.x), int(self.y), int(self.z)

    def __str__(self) -> str:
        return "({}, {}, {})".format(*self.as_ints())


@dataclass(frozen=True)
class SElem:
    """Structure ``(x, y)`` on ``S^p x S^q``."""

    p: int
    q: int
    x: Value
    y: Value

    def __post_init__(self):
        _check_pq(self.p, self.q)
        object.__setattr__(self, "x", check_value(lgroup(self.p), self.x))
        object.__setattr__(self, "y", check_value(lgroup(self.q), self.y))

    @classmethod
    def of(cls, p: int, q: int, x: int, y: int) -> SElem:
        return cls(p, q, coerce_value(lgroup(p), x), coerce_value(lgroup(q), y))

    @classmethod
    def zero(cls, p: int, q: int) -> SElem:
        return cls(p, q, zero_of(lgroup(p)), zero_of(lgroup(q)))

    def as_ints(self) -> tuple[int, int]:
        return int(self.x), int(self.y)

    def __neg__(self) -> SElem:
        return SElem(self.p, self.q, -self.x, -self.y)

    def __str__(self) -> str:
        return "({}, {})".format(*self.as_ints())


def _match(a, b) -> None:
    if (a.p, a.q) != (b.p, b.q):
        raise ValueError(f"mismatched sphere products S^{a.p} x S^{a.q} and S^{b.p} x S^{b.q}")


def _cross(t: TElem, u: TElem) -> Value:
    """``x y' + x' y`` in ``L_{p+q}(Z)``."""
    tx, ty, _ = t.classes()
    ux, uy, _ = u.classes()
    return (lproduct(tx, uy) + lproduct(ux, ty)).value


def add(t: TElem, u: TElem) -> TElem:
    _match(t, u)
    return TElem(t.p, t.q, t.x + u.x, t.y + u.y, t.z + u.z)


def neg(t: TElem) -> TElem:
    return TElem(t.p, t.q, -t.x, -t.y, -t.z)


def pairing(t: TElem, u: TElem) -> TElem:
    """``(x, y, z)(x', y', z') = (0, 0, x y' + x' y)``."""
    _match(t, u)
    zero = TElem.zero(t.p, t.q)
    return TElem(t.p, t.q, zero.x, zero.y, _cross(t, u))


def whitney(t: TElem, u: TElem) -> TElem:
    """``(x + x', y + y', x y' + x' y + z + z')``."""
    _match(t, u)
    return TElem(t.p, t.q, t.x + u.x, t.y + u.y, _cross(t, u) + t.z + u.z)


def whitney_inverse(t: TElem) -> TElem:
    """The ``(+)``-inverse ``(-x, -y, 2xy - z)``; the ``2xy`` term vanishes unless ``p = q = 0 mod 4``."""
    minus = TElem(t.p, t.q, -t.x, -t.y, zero_of(lgroup(t.p + t.q)))
    return TElem(t.p, t.q, minus.x, minus.y, -_cross(t, minus) - t.z)


def assembly(t: TElem) -> LClass:
    """The surgery obstruction ``(x, y, z) -> z``."""
    return LClass("quadratic", t.p + t.q, t.z)


def eta(s: SElem) -> TElem:
    """Normal invariant of a structure: ``(x, y) -> (x, y, 0)``."""
    return TElem(s.p, s.q, s.x, s.y, zero_of(lgroup(s.p + s.q)))


def compose_structures(s_f: SElem, s_g_pushed: SElem) -> SElem:
    """``s(fg) = s(f) + f_* s(g)`` with ``f_* s(g)`` given."""
    _match(s_f, s_g_pushed)
    return SElem(s_f.p, s_f.q, s_f.x + s_g_pushed.x, s_f.y + s_g_pushed.y)


def inverse_pullback_invariant(s_f: SElem, s_g_pushed: SElem) -> TElem:
    """``(x_g, y_g, -x_f y_g - x_g y_f)``, the normal invariant of ``(f^{-1})^* eta(g)``."""
    _match(s_f, s_g_pushed)
    return TElem(s_f.p, s_f.q, s_g_pushed.x, s_g_pushed.y, -_cross(eta(s_f), eta(s_g_pushed)))


@dataclass(frozen=True)
class ReconcileReport:
    lhs: TElem
    rhs: TElem

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def reconcile_check(s_f: SElem, s_g_pushed: SElem) -> ReconcileReport:
    """Compare ``eta(f) + eta(f_* g)`` with ``eta(f) (+) (f^{-1})^* eta(g)``."""
    lhs = add(eta(s_f), eta(s_g_pushed))
    rhs = whitney(eta(s_f), inverse_pullback_invariant(s_f, s_g_pushed))
    return ReconcileReport(lhs, rhs)


@dataclass(frozen=True)
class NonadditivityDemo:
    """Obstructions for ``eta(f, b) = (x, y, 0)`` and ``eta(f', b') = (-x, -y, 2xy)``."""

    x: int
    y: int
    lhs: int  # theta of the Whitney sum
    rhs: int  # sum of the two thetas
    terms: tuple[int, int, int]  # theta(f, b), theta(f', b'), cross term of the Whitney sum

    @property
    def decomposition_total(self) -> int:
        return sum(self.terms)


def nonadditivity_demo(x: int, y: int, p: int = 4, q: int = 4) -> NonadditivityDemo:
    """The obstruction of a Whitney sum is not the sum of obstructions.

    >>> d = nonadditivity_demo(1, 1)
    >>> (d.lhs, d.rhs), d.terms
    ((0, 2), (0, 2, -2))
    """
    if p % 4 or q % 4:
        raise ValueError("the demonstration needs p = q = 0 mod 4")
    s = SElem(p, q, x, y)
    t = eta(s)
    t_inv = inverse_pullback_invariant(s, -s)
    total = whitney(t, t_inv)
    lhs = int(assembly(total).value)
    rhs = int(assembly(t).value) + int(assembly(t_inv).value)
    terms = (int(assembly(t).value), int(assembly(t_inv).value), int(_cross(t, t_inv)))
    return NonadditivityDemo(x, y, lhs, rhs, terms)
