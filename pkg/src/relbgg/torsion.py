"""Algebraic torsion conditions for descent to local leaf spaces.

Torsion is recorded by its bidegree support: each component consumes two
tangent directions (bidegrees outside q, i.e. with a negative index) and
outputs one.  An output bidegree inside q marks a curvature component that
dies under the projection to the tangent bundle; such components are kept
for bookkeeping but ignored by every predicate below.

The relative directions are exactly the bidegrees (0, i'') with i'' < 0.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .grading import Bidegree, Bigrading, ParabolicPair
from .roots import build_root_system


def _valid_bidegree(bd: Bidegree) -> bool:
    return bd.i_prime * bd.i_dprime >= 0


def _in_q(bd: Bidegree) -> bool:
    return bd.i_prime >= 0 and bd.i_dprime >= 0


def in_relative_range(bd: Bidegree) -> bool:
    """Whether a bidegree is a relative tangent direction."""
    return bd.i_prime == 0 and bd.i_dprime < 0


@dataclass(frozen=True)
class TorsionComponent:
    """One torsion (or curvature) component; the two inputs are unordered."""

    in1: Bidegree
    in2: Bidegree
    out: Bidegree
    tag: str = ""

    def __post_init__(self) -> None:
        in1, in2 = sorted((Bidegree(*self.in1), Bidegree(*self.in2)))
        object.__setattr__(self, "in1", in1)
        object.__setattr__(self, "in2", in2)
        object.__setattr__(self, "out", Bidegree(*self.out))
        for bd in (self.in1, self.in2, self.out):
            if not _valid_bidegree(bd):
                raise ValueError(f"mixed-sign bidegree {tuple(bd)}")
        for bd in (self.in1, self.in2):
            if _in_q(bd):
                raise ValueError(
                    f"input bidegree {tuple(bd)} lies inside q and is not a tangent direction"
                )

    @property
    def is_torsion(self) -> bool:
        """False for curvature components whose output dies in the tangent projection."""
        return not _in_q(self.out)


@dataclass(frozen=True)
class TorsionSupport:
    components: frozenset[TorsionComponent]
    geometry_tag: str = ""
    # Asserted (never derived) by geometry catalogs: full curvature vanishes
    # on pairs of relative directions.  None means unknown.
    kappa_vanishes_on_relative_pair: bool | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", frozenset(self.components))

    def torsion_components(self) -> tuple[TorsionComponent, ...]:
        return tuple(
            sorted((c for c in self.components if c.is_torsion), key=lambda c: (c.in1, c.in2, c.out, c.tag))
        )

    def with_component(self, comp: TorsionComponent) -> TorsionSupport:
        return TorsionSupport(
            components=self.components | {comp},
            geometry_tag=self.geometry_tag,
            kappa_vanishes_on_relative_pair=None,
        )


@dataclass(frozen=True)
class TorsionVerdict:
    ok: bool
    violators: tuple[TorsionComponent, ...]


def involutivity_check(ts: TorsionSupport) -> TorsionVerdict:
    """Relative directions close under bracket iff no component maps two of
    them outside the relative range."""
    bad = [
        c
        for c in ts.torsion_components()
        if in_relative_range(c.in1) and in_relative_range(c.in2) and c.out.i_prime < 0
    ]
    return TorsionVerdict(ok=not bad, violators=tuple(bad))


def theorem_322_check(
    ts: TorsionSupport, bg: Bigrading, i_prime: int, strict: bool = False
) -> TorsionVerdict:
    """Does torsion keep (relative direction, first index >= i') inside the bundle?

    Non-strict needs output first index >= i'; strict needs >= i' + 1 (the
    condition under which parallel sections are exactly pullbacks).
    """
    if strict and i_prime >= 0:
        raise ValueError("strict mode needs i_prime < 0")
    if not strict and i_prime > 0:
        raise ValueError("i_prime must be <= 0")
    bound = i_prime + 1 if strict else i_prime
    bad = []
    for c in ts.torsion_components():
        for one, other in ((c.in1, c.in2), (c.in2, c.in1)):
            if in_relative_range(one) and other.i_prime >= i_prime:
                if c.out.i_prime < bound:
                    bad.append(c)
                break
    return TorsionVerdict(ok=not bad, violators=tuple(bad))


@dataclass(frozen=True)
class Corollary33Verdict:
    part1: bool  # graded leaf-space tangent pieces exist at every level
    part2: bool  # and parallel sections are exactly pullbacks
    involutivity: TorsionVerdict
    per_level: dict[int, tuple[bool, bool]]  # i' -> (non-strict ok, strict ok or None-as-True)


def corollary_33_check(ts: TorsionSupport, bg: Bigrading) -> Corollary33Verdict:
    """Conjunction of the level conditions: part1 over i' <= 0 non-strict,
    part2 additionally strict over i' < 0 plus involutivity."""
    first = bg.first_index_values()
    lowest = min(first) if first else 0
    inv = involutivity_check(ts)
    per_level = {}
    part1 = True
    part2 = inv.ok
    for ip in range(lowest, 1):
        ok1 = theorem_322_check(ts, bg, ip, strict=False).ok
        ok2 = theorem_322_check(ts, bg, ip, strict=True).ok if ip < 0 else True
        per_level[ip] = (ok1, ok2)
        part1 = part1 and ok1
        if ip < 0:
            part2 = part2 and ok2
    return Corollary33Verdict(
        part1=part1, part2=part2, involutivity=inv, per_level=per_level
    )


@dataclass(frozen=True)
class Geometry:
    """A named pair plus the torsion support of its harmonic curvature."""

    name: str
    pair: ParabolicPair
    support: TorsionSupport


def legendrean_catalog(n: int, assume_involutive_f: bool = False) -> Geometry:
    """Contact structure with two transverse rank-n integrable-candidate
    distributions E, F; blocks 1, n, 1 on sl(n+2).

    The two first-order torsions obstruct involutivity of E and of F; the
    second-order curvature component lands inside q.  Passing
    ``assume_involutive_f`` drops the F-obstruction, which is the hypothesis
    under which the relative directions integrate.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rs = build_root_system("A", n + 1)
    pair = ParabolicPair(rs=rs, sigma_q=frozenset({1, n + 1}), sigma_p=frozenset({1}))
    comps = {
        TorsionComponent(
            in1=Bidegree(-1, 0), in2=Bidegree(-1, 0), out=Bidegree(0, -1), tag="Λ²E*⊗F"
        ),
        TorsionComponent(
            in1=Bidegree(-1, 0), in2=Bidegree(0, -1), out=Bidegree(0, 0), tag="E*⊗F*⊗L(E,E)"
        ),
    }
    if not assume_involutive_f:
        comps.add(
            TorsionComponent(
                in1=Bidegree(0, -1), in2=Bidegree(0, -1), out=Bidegree(-1, 0), tag="Λ²F*⊗E"
            )
        )
    support = TorsionSupport(
        components=frozenset(comps),
        geometry_tag=f"legendrean({n})" + (" involutive-F" if assume_involutive_f else ""),
        kappa_vanishes_on_relative_pair=True if assume_involutive_f else None,
    )
    return Geometry(name=f"legendrean({n})", pair=pair, support=support)


def path_geometry_catalog(n: int) -> Geometry:
    """Rank-(n+1) distribution split into a line bundle E and a rank-n
    bundle V; blocks 1, 1, n on sl(n+2).

    The only torsion-type component consumes one E and one transversal
    direction, so it never touches a pair of relative directions; the other
    harmonic component is curvature and lands inside q.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    rs = build_root_system("A", n + 1)
    pair = ParabolicPair(rs=rs, sigma_q=frozenset({1, 2}), sigma_p=frozenset({1}))
    comps = frozenset(
        {
            TorsionComponent(
                in1=Bidegree(-1, 0),
                in2=Bidegree(-1, -1),
                out=Bidegree(0, -1),
                tag="E*⊗(TM/H)*⊗V",
            ),
            TorsionComponent(
                in1=Bidegree(0, -1),
                in2=Bidegree(-1, -1),
                out=Bidegree(0, 0),
                tag="V*⊗(TM/H)*⊗L(V,V)",
            ),
        }
    )
    support = TorsionSupport(
        components=comps,
        geometry_tag=f"path-geometry({n})",
        kappa_vanishes_on_relative_pair=True,
    )
    return Geometry(name=f"path-geometry({n})", pair=pair, support=support)


_CATALOG_RE = re.compile(r"^([a-z-]+)\((\d+)\)$")


def catalog(name: str, assume_involutive_f: bool = False) -> Geometry:
    """Look up ``legendrean(n)`` or ``path-geometry(n)``."""
    m = _CATALOG_RE.match(name.strip())
    if not m:
        raise ValueError(f"malformed catalog name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "legendrean":
        return legendrean_catalog(n, assume_involutive_f=assume_involutive_f)
    if kind == "path-geometry":
        return path_geometry_catalog(n)
    raise ValueError(f"unknown catalog {kind!r}")


def support_from_json(data: dict) -> TorsionSupport:
    """Deserialize a support from the CLI's JSON schema."""
    comps = set()
    for c in data.get("components", []):
        comps.add(
            TorsionComponent(
                in1=Bidegree(*c["in1"]),
                in2=Bidegree(*c["in2"]),
                out=Bidegree(*c["out"]),
                tag=c.get("tag", ""),
            )
        )
    return TorsionSupport(
        components=frozenset(comps),
        geometry_tag=data.get("geometry_tag", ""),
        kappa_vanishes_on_relative_pair=data.get("kappa_vanishes_on_relative_pair"),
    )


def support_to_json(ts: TorsionSupport) -> dict:
    return {
        "components": [
            {
                "in1": list(c.in1),
                "in2": list(c.in2),
                "out": list(c.out),
                "tag": c.tag,
            }
            for c in sorted(ts.components, key=lambda c: (c.in1, c.in2, c.out, c.tag))
        ],
        "geometry_tag": ts.geometry_tag,
        "kappa_vanishes_on_relative_pair": ts.kappa_vanishes_on_relative_pair,
    }
