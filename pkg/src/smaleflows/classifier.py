"""Which Lorenz-Smale flow configurations in the 3-sphere are realizable.

The attractor-repeller link is a Hopf link or a trefoil with a meridian.
With a trefoil the template is standardly embedded.  With a Hopf link the
template is either standard, has one band carrying ``n`` full twists, or has
one band knotted as a ``(p, q)`` torus knot with exactly ``p + q - 1`` twists.
In every case the other band is unknotted, untwisted and unlinked.
Classification is up to isotopy, mirror image and flow reversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .franks import SaddleData, linking_attractor_repeller
from .knots import KnotType, UNKNOT
from .laurent import LaurentPoly
from .template import LorenzEmbedding

__all__ = [
    "LinkKind",
    "ConfigProposal",
    "Variant",
    "LorenzSmaleConfig",
    "Rejection",
    "Invariants",
    "validate",
    "invariants_of",
    "fixed_point_variant",
    "required_twist",
]


class LinkKind(Enum):
    HOPF = "Hopf"
    TREFOIL_MERIDIAN = "TrefoilMeridian"
    OTHER = "Other"


@dataclass(frozen=True)
class ConfigProposal:
    """A candidate embedding of the Lorenz template plus an attractor-repeller link.

    ``x_core``/``y_core`` are the knot types of the band cores, the twists are
    full-twist counts, and ``ar_label`` names an ``Other`` link type.
    """

    x_core: KnotType = UNKNOT
    y_core: KnotType = UNKNOT
    x_twist: int = 0
    y_twist: int = 0
    bands_linked: bool = False
    ar_link: LinkKind = LinkKind.HOPF
    ar_label: str = ""
    concentric: bool = False


class Variant(Enum):
    HOPF_STANDARD = "Hopf-Standard"
    HOPF_TWISTED = "Hopf-Twisted"
    HOPF_TORUS_CABLE = "Hopf-TorusCable"
    TREFOIL_MERIDIAN = "TrefoilMeridian"
    FIXED_POINT_STANDARD = "FixedPoint-Standard"


@dataclass(frozen=True)
class LorenzSmaleConfig:
    variant: Variant
    band: str | None = None
    twists: int = 0
    p: int = 0
    q: int = 0
    mirror: bool = False
    concentric: bool = False

    @property
    def embedding(self) -> LorenzEmbedding:
        if self.variant is Variant.HOPF_TWISTED:
            return LorenzEmbedding.twisted(self.twists)
        if self.variant is Variant.HOPF_TORUS_CABLE:
            return LorenzEmbedding.torus_cable(self.p, self.q)
        return LorenzEmbedding.standard(self.concentric)

    def __str__(self) -> str:
        v = self.variant.value
        if self.variant is Variant.HOPF_STANDARD:
            return f"{v}(concentric={'true' if self.concentric else 'false'})"
        if self.variant is Variant.HOPF_TWISTED:
            return f"{v}(band={self.band}, n={self.twists})"
        if self.variant is Variant.HOPF_TORUS_CABLE:
            p = -self.p if self.mirror else self.p
            return f"{v}(band={self.band}, p={p}, q={self.q}, twist={self.twists})"
        return v


@dataclass(frozen=True)
class Rejection:
    reason: str

    def __str__(self) -> str:
        return self.reason


# fixed-reason verdicts are shared; validate runs over large proposal grids
_LINKED = Rejection("bands must be unlinked")
_OTHER_LINK = Rejection("a ∪ r link is not Hopf or trefoil-and-meridian")
_TREFOIL_NONSTANDARD = Rejection("trefoil-and-meridian requires a standardly embedded template")
_BOTH_KNOTTED = Rejection("other band must be unknotted")
_BOTH_TWISTED = Rejection("other band must be untwisted")
_NOT_TORUS = Rejection("knotted band must be a torus knot")
_TREFOIL_MERIDIAN = LorenzSmaleConfig(Variant.TREFOIL_MERIDIAN)


def required_twist(core: KnotType) -> int:
    """Full twists forced on a band whose core is a nontrivial torus knot."""
    f = core.torus_factor()
    if f is None:
        raise ValueError(f"{core} is not a torus knot")
    twist = f.p + f.q - 1
    return -twist if f.mirror else twist


def _is_standard_band(core: KnotType, twist: int) -> bool:
    return core.is_unknot and twist == 0


def validate(p: ConfigProposal) -> LorenzSmaleConfig | Rejection:
    if p.bands_linked:
        return _LINKED
    if p.ar_link is LinkKind.OTHER:
        return _OTHER_LINK

    x_std = _is_standard_band(p.x_core, p.x_twist)
    y_std = _is_standard_band(p.y_core, p.y_twist)

    if p.ar_link is LinkKind.TREFOIL_MERIDIAN:
        if x_std and y_std:
            return _TREFOIL_MERIDIAN
        return _TREFOIL_NONSTANDARD

    if x_std and y_std:
        return LorenzSmaleConfig(Variant.HOPF_STANDARD, concentric=p.concentric)
    if not p.x_core.is_unknot and not p.y_core.is_unknot:
        return _BOTH_KNOTTED
    if not x_std and not y_std:
        return _BOTH_TWISTED

    band, core, twist = ("y", p.y_core, p.y_twist) if x_std else ("x", p.x_core, p.x_twist)
    if core.is_unknot:
        return LorenzSmaleConfig(Variant.HOPF_TWISTED, band=band, twists=twist)
    f = core.torus_factor()
    if f is None:
        return _NOT_TORUS
    need = required_twist(core)
    if twist != need:
        return Rejection(f"torus-knot band ({f.p},{f.q}) needs twist {need}, got {twist}")
    return LorenzSmaleConfig(Variant.HOPF_TORUS_CABLE, band=band, twists=twist, p=f.p, q=f.q, mirror=f.mirror)


def fixed_point_variant(p: ConfigProposal) -> LorenzSmaleConfig | Rejection:
    """Attracting and repelling fixed points: only the standard template survives."""
    if p.bands_linked:
        return _LINKED
    if not (_is_standard_band(p.x_core, p.x_twist) and _is_standard_band(p.y_core, p.y_twist)):
        return Rejection("with fixed-point attractor and repeller only the standard template is realizable")
    return LorenzSmaleConfig(Variant.FIXED_POINT_STANDARD)


@dataclass(frozen=True)
class Invariants:
    ar_link: LinkKind
    lk_abs: int
    delta_a: LaurentPoly
    delta_r: LaurentPoly


def invariants_of(c: LorenzSmaleConfig) -> Invariants:
    if c.variant is Variant.FIXED_POINT_STANDARD:
        raise ValueError("fixed points carry no knot invariants")
    trefoil = c.variant is Variant.TREFOIL_MERIDIAN
    # the trefoil attractor is linked once by each connecting loop; the meridian repeller by none
    saddle = SaddleData.lorenz(q_attractor=1 if trefoil else 0, q_repeller=0)
    return Invariants(
        ar_link=LinkKind.TREFOIL_MERIDIAN if trefoil else LinkKind.HOPF,
        lk_abs=linking_attractor_repeller([saddle]),
        delta_a=saddle.delta_a.normalize(),
        delta_r=saddle.delta_r.normalize(),
    )
