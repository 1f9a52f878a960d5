"""Canonical group names: the grammar used by the CLI and serializations.

D4 is accepted as an alias of Z2xZ2 (they are the same group); it parses
to the dihedral table so its coefficient ordering stays dihedral.  Z16 is
buildable through the library API but has no characterized value set, so
it carries no canonical CLI name.
"""
from __future__ import annotations

from .errors import UnsupportedGroup
from .groups import (
    GroupSpec,
    abelian_product,
    alternating4,
    cyclic,
    dicyclic,
    dihedral,
)

_NAMED: tuple[tuple[str, GroupSpec], ...] = tuple(
    [(f"Z{n}", cyclic(n)) for n in range(1, 15)]
    + [
        ("Z2xZ2", abelian_product(2, 2)),
        ("Z4xZ2", abelian_product(4, 2)),
        ("Z2^3", abelian_product(2, 2, 2)),
        ("Z3xZ3", abelian_product(3, 3)),
        ("Z6xZ2", abelian_product(6, 2)),
    ]
    + [(f"D{k}", dihedral(k)) for k in (4, 6, 8, 10, 12, 14, 16, 18)]
    + [("Q8", dicyclic(8)), ("Q12", dicyclic(12)), ("A4", alternating4())]
)

_BY_NAME = {name: spec for name, spec in _NAMED}
_BY_SPEC: dict[GroupSpec, str] = {}
for name, spec in _NAMED:
    _BY_SPEC.setdefault(spec, name)


def supported_names() -> tuple[str, ...]:
    return tuple(name for name, _ in _NAMED)


def parse_name(name: str) -> GroupSpec:
    spec = _BY_NAME.get(name)
    if spec is None:
        raise UnsupportedGroup(
            f"unknown group {name!r}; supported: {', '.join(supported_names())}"
        )
    return spec


def render_name(spec: GroupSpec) -> str:
    name = _BY_SPEC.get(spec)
    if name is None:
        raise UnsupportedGroup(f"no canonical name for {spec}")
    return name
