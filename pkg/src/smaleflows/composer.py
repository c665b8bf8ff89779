"""Building new Smale flow descriptors from old ones.

These operate on descriptors only: knot types, hypothesis flags and saddle
determinant data.  No flow or 3-manifold is ever constructed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .franks import SaddleData, build_lorenz_linking_matrix, linking_attractor_repeller
from .knots import KnotType, TREFOIL, UNKNOT, alexander_of, connected_sum
from .laurent import ONE, LaurentPoly, is_symmetric
from .symbolic import LORENZ_STRUCTURE

__all__ = [
    "FlowDescriptor",
    "HypothesisError",
    "compose_sum",
    "compose_split",
    "realize_any_knot",
    "alexander_of_flow",
]


class HypothesisError(ValueError):
    """A composition input violates a numbered hypothesis (1), (2) or (3)."""

    def __init__(self, clause: int, message: str):
        super().__init__(f"hypothesis ({clause}) violated: {message}")
        self.clause = clause


@dataclass(frozen=True)
class FlowDescriptor:
    """A nonsingular Smale flow on the 3-sphere, as recorded data.

    ``repeller_disk_condition`` records that the repeller bounds a disk whose
    interior meets the chain-recurrent set in a single point.
    ``mutual_meridians`` records that attractor and repeller sit in solid tori
    whose cores are meridians of each other.
    """

    attractor: KnotType
    repeller: KnotType
    repeller_is_meridian_of_attractor: bool
    repeller_disk_condition: bool
    saddles: tuple[SaddleData, ...] = ()
    lk_ar_abs: int | None = None
    attractor_count: int = 1
    repeller_count: int = 1
    mutual_meridians: bool = False

    def __post_init__(self):
        object.__setattr__(self, "saddles", tuple(self.saddles))
        expected = linking_attractor_repeller(self.saddles)
        if self.lk_ar_abs is None:
            object.__setattr__(self, "lk_ar_abs", expected)
        elif self.lk_ar_abs != expected:
            raise ValueError(f"lk_ar_abs = {self.lk_ar_abs} but the saddle product gives {expected}")
        if self.is_simple:
            d = self.saddles[0].delta_a
            if d is not None and not is_symmetric(d):
                raise ValueError(f"simple flow with non-symmetric det(I - L_a) = {d}")

    @property
    def is_simple(self) -> bool:
        return self.attractor_count == 1 and self.repeller_count == 1 and len(self.saddles) == 1


def _check_sum_hypotheses(f: FlowDescriptor, name: str, need_disk: bool) -> None:
    if f.attractor_count != 1:
        raise HypothesisError(1, f"{name} has {f.attractor_count} attracting orbits, need exactly one")
    if f.repeller_count != 1:
        raise HypothesisError(2, f"{name} has {f.repeller_count} repelling orbits, need exactly one")
    if not f.repeller.is_unknot:
        raise HypothesisError(2, f"{name} repeller {f.repeller} is knotted")
    if not f.repeller_is_meridian_of_attractor:
        raise HypothesisError(2, f"{name} repeller is not a meridian of the attractor")
    if need_disk and not f.repeller_disk_condition:
        raise HypothesisError(3, f"{name} repeller does not bound a disk meeting the chain-recurrent set once")


def _saddle_key(s: SaddleData):
    return (s.label, s.det_structure, str(s.delta_a), str(s.delta_r), repr(s.linking_a), repr(s.linking_r))


def compose_sum(f1: FlowDescriptor, f2: FlowDescriptor) -> FlowDescriptor:
    """Attractor ``k1 # k2`` with an unknotted meridian repeller."""
    _check_sum_hypotheses(f1, "first flow", need_disk=True)
    _check_sum_hypotheses(f2, "second flow", need_disk=True)
    saddles = tuple(sorted(f1.saddles + f2.saddles, key=_saddle_key))
    return FlowDescriptor(
        attractor=connected_sum(f1.attractor, f2.attractor),
        repeller=UNKNOT,
        repeller_is_meridian_of_attractor=True,
        repeller_disk_condition=True,
        saddles=saddles,
    )


def compose_split(f1: FlowDescriptor, f2: FlowDescriptor) -> FlowDescriptor:
    """Attractor ``k1`` and repeller ``k2`` with linking number one."""
    _check_sum_hypotheses(f1, "first flow", need_disk=False)
    _check_sum_hypotheses(f2, "second flow", need_disk=False)
    # k2 becomes the repeller, so its saddles' attractor data now describes the repeller
    saddles = tuple(sorted(f1.saddles + tuple(s.swapped() for s in f2.saddles), key=_saddle_key))
    lk = linking_attractor_repeller(saddles)
    if lk != 1:
        raise ValueError(f"saddle product gives |lk| = {lk}, but a split flow has |lk| = 1")
    return FlowDescriptor(
        attractor=f1.attractor,
        repeller=f2.attractor,
        repeller_is_meridian_of_attractor=f2.attractor.is_unknot,
        repeller_disk_condition=False,
        saddles=saddles,
        mutual_meridians=True,
    )


def realize_any_knot(k: KnotType) -> FlowDescriptor:
    """Simple flow with attractor ``k`` and an unlinked meridian repeller.

    A linking-matrix witness is stored only where the Lorenz pattern produces
    ``k`` (the unknot and the trefoil); otherwise the saddle is opaque and
    records ``det(I - L_a)`` as the Alexander polynomial of ``k``.
    """
    label = f"realize({k})"
    if k in (UNKNOT, TREFOIL, TREFOIL.mirror()):
        q = 0 if k.is_unknot else 1
        saddle = SaddleData.from_matrices(
            LORENZ_STRUCTURE, build_lorenz_linking_matrix(q), build_lorenz_linking_matrix(0), label=label
        )
    else:
        try:
            delta_a = alexander_of(k)
        except ValueError:
            delta_a = None
        # repeller links no saddle orbit: det(I - L_r) = det(I - S) = -1
        saddle = SaddleData.opaque(-1, delta_a, LaurentPoly.constant(-1), label=label)
    return FlowDescriptor(
        attractor=k,
        repeller=UNKNOT,
        repeller_is_meridian_of_attractor=True,
        repeller_disk_condition=True,
        saddles=(saddle,),
    )


def alexander_of_flow(f: FlowDescriptor) -> LaurentPoly:
    """Product of ``det(I - L_a)`` over the saddles, normalized."""
    if f.attractor_count != 1 or f.repeller_count != 1:
        raise ValueError("Alexander bookkeeping needs exactly one attractor and one repeller")
    result = ONE
    for s in f.saddles:
        if s.delta_a is None:
            raise ValueError(f"saddle {s.label or '?'} has no attractor determinant on record")
        result = result * s.delta_a
    return result.normalize()

