"""Catalog of the four-dimensional real Lie algebras (Mubarakzyanov list).

Every family is addressed by an ASCII alias (``A3_5+A1``, ``A4_9`` ...);
parameters are named ``alpha`` and ``beta``. Unimodular slices used by the
realizability tables are exposed as named sub-specs (``A4_2[-2]`` ...).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..errors import ParameterOutOfRange, UnknownFamily
from .structure import BracketTable, StructureTensor, check_jacobi

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """The 24 families, in catalog order."""
    A1x4 = "4A1"
    A2_2A1 = "A2+2A1"
    A2x2 = "2A2"
    A3_1 = "A3_1+A1"
    A3_2 = "A3_2+A1"
    A3_3 = "A3_3+A1"
    A3_4 = "A3_4+A1"
    A3_5 = "A3_5+A1"
    A3_6 = "A3_6+A1"
    A3_7 = "A3_7+A1"
    A3_8 = "A3_8+A1"
    A3_9 = "A3_9+A1"
    A4_1 = "A4_1"
    A4_2 = "A4_2"
    A4_3 = "A4_3"
    A4_4 = "A4_4"
    A4_5 = "A4_5"
    A4_6 = "A4_6"
    A4_7 = "A4_7"
    A4_8 = "A4_8"
    A4_9 = "A4_9"
    A4_10 = "A4_10"
    A4_11 = "A4_11"
    A4_12 = "A4_12"


class LieAlgebraSpec(BaseModel):
    """A catalog family with concrete parameter values."""

    model_config = ConfigDict(frozen=True)

    family: Family
    params: Dict[str, float] = Field(default_factory=dict)
    slice: Optional[str] = None  # Named unimodular slice, if addressed through one

    @property
    def label(self) -> str:
        name = self.slice or self.family.value
        if not self.params:
            return name
        values = ", ".join(f"{k}={v:g}" for k, v in sorted(self.params.items()))
        return f"{name}({values})"


@dataclass(frozen=True)
class Constraint:
    """Printed parameter range with a machine check (strict inequalities are exact)."""
    text: str
    holds: Callable[[Mapping[str, float]], bool]


@dataclass(frozen=True)
class FamilyEntry:
    family: Family
    params: Tuple[str, ...]
    constraints: Tuple[Constraint, ...]
    brackets: Callable[[Mapping[str, float]], BracketTable]


@dataclass(frozen=True)
class CatalogRow:
    """Machine-readable row returned by list_catalog."""
    family: str
    params: Tuple[str, ...]
    constraints: Tuple[str, ...]


def _entry(family, params, constraints, brackets) -> FamilyEntry:
    return FamilyEntry(family, tuple(params), tuple(constraints), brackets)


_CATALOG: Dict[Family, FamilyEntry] = {
    e.family: e
    for e in [
        _entry(Family.A1x4, [], [], lambda p: {}),
        _entry(Family.A2_2A1, [], [], lambda p: {(1, 2): {2: 1.0}}),
        _entry(Family.A2x2, [], [], lambda p: {(1, 2): {2: 1.0}, (3, 4): {4: 1.0}}),
        _entry(Family.A3_1, [], [], lambda p: {(2, 3): {1: 1.0}}),
        _entry(Family.A3_2, [], [], lambda p: {(1, 3): {1: 1.0}, (2, 3): {1: 1.0, 2: 1.0}}),
        _entry(Family.A3_3, [], [], lambda p: {(1, 3): {1: 1.0}, (2, 3): {2: 1.0}}),
        _entry(Family.A3_4, [], [], lambda p: {(1, 3): {1: 1.0}, (2, 3): {2: -1.0}}),
        _entry(
            Family.A3_5, ["alpha"],
            [Constraint("0 < alpha < 1", lambda p: 0.0 < p["alpha"] < 1.0)],
            lambda p: {(1, 3): {1: 1.0}, (2, 3): {2: p["alpha"]}},
        ),
        _entry(Family.A3_6, [], [], lambda p: {(1, 3): {2: -1.0}, (2, 3): {1: 1.0}}),
        _entry(
            Family.A3_7, ["alpha"],
            [Constraint("alpha > 0", lambda p: p["alpha"] > 0.0)],
            lambda p: {
                (1, 3): {1: p["alpha"], 2: -1.0},
                (2, 3): {1: 1.0, 2: p["alpha"]},
            },
        ),
        # [e3, e1] = e2 is stored as [e1, e3] = -e2
        _entry(
            Family.A3_8, [], [],
            lambda p: {(1, 2): {3: -1.0}, (1, 3): {2: -1.0}, (2, 3): {1: 1.0}},
        ),
        _entry(
            Family.A3_9, [], [],
            lambda p: {(1, 2): {3: 1.0}, (1, 3): {2: -1.0}, (2, 3): {1: 1.0}},
        ),
        _entry(Family.A4_1, [], [], lambda p: {(2, 4): {1: 1.0}, (3, 4): {2: 1.0}}),
        _entry(
            Family.A4_2, ["alpha"],
            [Constraint("alpha != 0", lambda p: p["alpha"] != 0.0)],
            lambda p: {
                (1, 4): {1: p["alpha"]},
                (2, 4): {2: 1.0},
                (3, 4): {2: 1.0, 3: 1.0},
            },
        ),
        _entry(Family.A4_3, [], [], lambda p: {(1, 4): {1: 1.0}, (3, 4): {2: 1.0}}),
        _entry(
            Family.A4_4, [], [],
            lambda p: {(1, 4): {1: 1.0}, (2, 4): {1: 1.0, 2: 1.0}, (3, 4): {2: 1.0, 3: 1.0}},
        ),
        _entry(
            Family.A4_5, ["alpha", "beta"],
            [
                Constraint("alpha*beta != 0", lambda p: p["alpha"] * p["beta"] != 0.0),
                Constraint(
                    "-1 <= alpha <= beta <= 1",
                    lambda p: -1.0 <= p["alpha"] <= p["beta"] <= 1.0,
                ),
            ],
            lambda p: {(1, 4): {1: 1.0}, (2, 4): {2: p["alpha"]}, (3, 4): {3: p["beta"]}},
        ),
        _entry(
            Family.A4_6, ["alpha", "beta"],
            [
                Constraint("alpha != 0", lambda p: p["alpha"] != 0.0),
                Constraint("beta >= 0", lambda p: p["beta"] >= 0.0),
            ],
            lambda p: {
                (1, 4): {1: p["alpha"]},
                (2, 4): {2: p["beta"], 3: -1.0},
                (3, 4): {2: 1.0, 3: p["beta"]},
            },
        ),
        _entry(
            Family.A4_7, [], [],
            lambda p: {
                (2, 3): {1: 1.0},
                (1, 4): {1: 2.0},
                (2, 4): {2: 1.0},
                (3, 4): {2: 1.0, 3: 1.0},
            },
        ),
        _entry(
            Family.A4_8, [], [],
            lambda p: {(2, 3): {1: 1.0}, (2, 4): {2: 1.0}, (3, 4): {3: -1.0}},
        ),
        _entry(
            Family.A4_9, ["beta"],
            [Constraint("-1 < beta <= 1", lambda p: -1.0 < p["beta"] <= 1.0)],
            lambda p: {
                (2, 3): {1: 1.0},
                (1, 4): {1: 1.0 + p["beta"]},
                (2, 4): {2: 1.0},
                (3, 4): {3: p["beta"]},
            },
        ),
        _entry(
            Family.A4_10, [], [],
            lambda p: {(2, 3): {1: 1.0}, (2, 4): {3: -1.0}, (3, 4): {2: 1.0}},
        ),
        _entry(
            Family.A4_11, ["alpha"],
            [Constraint("alpha > 0", lambda p: p["alpha"] > 0.0)],
            lambda p: {
                (2, 3): {1: 1.0},
                (1, 4): {1: 2.0 * p["alpha"]},
                (2, 4): {2: p["alpha"], 3: -1.0},
                (3, 4): {2: 1.0, 3: p["alpha"]},
            },
        ),
        _entry(
            Family.A4_12, [], [],
            lambda p: {
                (1, 3): {1: 1.0},
                (2, 3): {2: 1.0},
                (1, 4): {2: -1.0},
                (2, 4): {1: 1.0},
            },
        ),
    ]
}


@dataclass(frozen=True)
class SliceEntry:
    """Named unimodular slice of a parametric family."""
    name: str
    family: Family
    free: Tuple[str, ...]
    constraint: Constraint
    expand: Callable[[Mapping[str, float]], Dict[str, float]]


SLICES: Dict[str, SliceEntry] = {
    s.name: s
    for s in [
        SliceEntry(
            "A4_2[-2]", Family.A4_2, (),
            Constraint("alpha = -2", lambda p: True),
            lambda p: {"alpha": -2.0},
        ),
        SliceEntry(
            "A4_5[a,-1-a]", Family.A4_5, ("alpha",),
            Constraint("-1 < alpha < -1/2", lambda p: -1.0 < p["alpha"] < -0.5),
            lambda p: {"alpha": p["alpha"], "beta": -1.0 - p["alpha"]},
        ),
        SliceEntry(
            "A4_5[-1/2,-1/2]", Family.A4_5, (),
            Constraint("alpha = beta = -1/2", lambda p: True),
            lambda p: {"alpha": -0.5, "beta": -0.5},
        ),
        SliceEntry(
            "A4_6[-2b,b]", Family.A4_6, ("beta",),
            Constraint("beta > 0", lambda p: p["beta"] > 0.0),
            lambda p: {"alpha": -2.0 * p["beta"], "beta": p["beta"]},
        ),
    ]
}


def family_entry(family: Family) -> FamilyEntry:
    return _CATALOG[family]


def _validate(family: Family, params: Mapping[str, float]) -> None:
    entry = _CATALOG[family]
    missing = [name for name in entry.params if name not in params]
    extra = [name for name in params if name not in entry.params]
    if missing or extra:
        raise ParameterOutOfRange(
            family.value, f"parameters must be exactly {list(entry.params)}", dict(params)
        )
    for constraint in entry.constraints:
        if not constraint.holds(params):
            raise ParameterOutOfRange(family.value, constraint.text, dict(params))


def make_spec(name: str, alpha: Optional[float] = None, beta: Optional[float] = None) -> LieAlgebraSpec:
    """
    Resolve an ASCII alias (family or named slice) into a validated spec.

    Args:
        name: Family alias such as ``A3_5+A1`` or slice name such as ``A4_6[-2b,b]``
        alpha: Value for the alpha parameter, if the family has one
        beta: Value for the beta parameter, if the family has one

    Returns:
        LieAlgebraSpec

    Raises:
        UnknownFamily: If the name is neither a family nor a slice
        ParameterOutOfRange: If parameters are missing or out of range
    """
    given = {k: v for k, v in (("alpha", alpha), ("beta", beta)) if v is not None}

    if name in SLICES:
        entry = SLICES[name]
        free = {k: given[k] for k in entry.free if k in given}
        if set(free) != set(entry.free) or set(given) - set(entry.free):
            raise ParameterOutOfRange(name, f"free parameters must be exactly {list(entry.free)}", given)
        if not entry.constraint.holds(free):
            raise ParameterOutOfRange(name, entry.constraint.text, free)
        params = entry.expand(free)
        _validate(entry.family, params)
        return LieAlgebraSpec(family=entry.family, params=params, slice=name)

    try:
        family = Family(name)
    except ValueError as e:
        raise UnknownFamily(f"Unknown algebra '{name}'") from e

    _validate(family, given)
    return LieAlgebraSpec(family=family, params=given)


def build_algebra(spec: LieAlgebraSpec) -> StructureTensor:
    """
    Structure tensor of a catalog family at the spec's parameters.

    Raises:
        UnknownFamily: If the family is not cataloged
        ParameterOutOfRange: Names the violated constraint
    """
    if spec.family not in _CATALOG:
        raise UnknownFamily(f"Unknown family '{spec.family}'")
    _validate(spec.family, spec.params)

    entry = _CATALOG[spec.family]
    tensor = StructureTensor.from_brackets(4, entry.brackets(spec.params))
    if not check_jacobi(tensor):
        # Only reachable through a catalog typo
        raise AssertionError(f"{spec.label} violates the Jacobi identity")
    logger.debug("Built %s", spec.label)
    return tensor


def list_catalog() -> List[CatalogRow]:
    """All 24 families with parameter names and printed constraints."""
    return [
        CatalogRow(e.family.value, e.params, tuple(c.text for c in e.constraints))
        for e in _CATALOG.values()
    ]


def list_slices() -> List[CatalogRow]:
    """Named unimodular slices."""
    return [
        CatalogRow(s.name, s.free, (s.constraint.text,))
        for s in SLICES.values()
    ]


# Families whose last basis vector spans an abelian direct factor
DIRECT_A1 = frozenset(
    {Family.A1x4, Family.A2_2A1}
    | {f for f in Family if f.value.startswith("A3_")}
)


def has_abelian_factor(spec: LieAlgebraSpec) -> bool:
    return spec.family in DIRECT_A1
