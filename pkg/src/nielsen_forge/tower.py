"""Finite tower truncations: push Nielsen data through chains of covers.

A chain of level maps (each a surjection with p-group kernel) lifts the
base branch classes level by level via Schur-Zassenhaus class matching;
components and cusps upstairs are connected to their images downstairs,
with the width-growth and g-p' persistence checks evaluated on every edge.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .braid import BraidOrbit, CuspOrbit, braid_orbits, cusp_orbits, reduced_canonical, reduced_classes
from .cusps import ComponentDossier, component_dossier
from .errors import ConfigError, MultiplePrimeClasses, NotPGroupKernel
from .groups import FiniteGroup, GroupHom
from .lifting import CentralExtension
from .nielsen import ClassMultiset, canonical_context, nielsen_inner_classes


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class LevelMap:
    """Surjection with p-group kernel, one tower step."""

    psi: GroupHom
    p: int

    def __post_init__(self):
        if not self.psi.is_surjective:
            raise ConfigError("level maps must be surjective")
        if not _is_p_power(len(self.psi.kernel_ids), self.p):
            raise NotPGroupKernel(
                f"kernel order {len(self.psi.kernel_ids)} is not a power of {self.p}"
            )

    @property
    def upstairs(self) -> FiniteGroup:
        return self.psi.source

    @property
    def downstairs(self) -> FiniteGroup:
        return self.psi.target


def same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    """Identity or identical element tables (IDs then interchangeable)."""
    return a is b or a.elements == b.elements


def transfer_classes(C: ClassMultiset, group: FiniteGroup) -> ClassMultiset:
    """Re-anchor a class multiset onto a structurally identical group."""
    if C.group is group:
        return C
    if not same_group(C.group, group):
        raise ConfigError("cannot transfer classes between different groups")
    return ClassMultiset(
        [(group.class_of(cls.member_ids[0]), m) for cls, m in C.entries]
    )


def match_classes(level: LevelMap, C: ClassMultiset) -> ClassMultiset:
    """Lift each p' class to the unique p' class above it.

    The p' elements of the preimage of a p' class form a single class of
    the covering group (Schur-Zassenhaus); if that ever failed the input
    would falsify the premise, so it is verified and reported.
    """
    up, down, p = level.upstairs, level.downstairs, level.p
    C = transfer_classes(C, down)
    orders = up.element_orders
    lifted = []
    for cls, mult in C.entries:
        if cls.element_order % p == 0:
            raise ConfigError(f"class {cls.label()} is not a p' class for p={p}")
        member_ids = cls.member_set
        prime_preimage = {
            x
            for x in range(up.order)
            if level.psi.full_map[x] in member_ids and orders[x] % p != 0
        }
        if not prime_preimage:
            raise MultiplePrimeClasses(
                f"no p' elements above class {cls.label()}"
            )
        up_cls = up.class_of(min(prime_preimage))
        if set(up_cls.member_ids) != prime_preimage:
            raise MultiplePrimeClasses(
                f"p' preimage of class {cls.label()} splits into several classes"
            )
        lifted.append((up_cls, mult))
    return ClassMultiset(lifted)


def project_reduced(
    level: LevelMap, canonical: tuple[int, ...]
) -> tuple[int, ...]:
    """Image of an upstairs reduced class downstairs, re-canonicalized."""
    down = level.downstairs
    ids = tuple(level.psi.full_map[x] for x in canonical)
    return reduced_canonical(down, canonical_context(down), ids)


def level_fiber(
    level: LevelMap, upstairs_orbits: Sequence[BraidOrbit], downstairs_orbit: BraidOrbit
) -> list[BraidOrbit]:
    """Upstairs braid orbits lying over the given downstairs orbit."""
    members = set(downstairs_orbit.members)
    out = []
    for orb in upstairs_orbits:
        if project_reduced(level, orb.members[0]) in members:
            out.append(orb)
    return out


@dataclass(frozen=True)
class WidthGrowthCheck:
    """Width-growth bookkeeping on one cusp edge."""

    level: int
    up_cusp: tuple[int, int]
    down_cusp: tuple[int, int]
    down_mp: int
    up_mp: int
    applicable: bool
    ok: bool


@dataclass(frozen=True)
class CuspPersistenceCheck:
    """g-p' persistence: the downstairs cusp must be covered."""

    level: int
    down_cusp: tuple[int, int]
    covered: bool


@dataclass
class TowerLevel:
    group: FiniteGroup
    classes: ClassMultiset
    orbits: list[BraidOrbit]
    dossiers: list[ComponentDossier]
    cusps: list[list[CuspOrbit]]


@dataclass
class TowerGraph:
    """Level-to-level component and cusp graphs of a finite tower."""

    p: int
    levels: list[TowerLevel]
    component_edges: list[tuple[int, int, int]] = field(default_factory=list)
    cusp_edges: list[tuple[int, tuple[int, int], tuple[int, int]]] = field(
        default_factory=list
    )
    obstructed: list[tuple[int, int]] = field(default_factory=list)
    width_growth_checks: list[WidthGrowthCheck] = field(default_factory=list)
    persistence_checks: list[CuspPersistenceCheck] = field(default_factory=list)

    def level_count(self) -> int:
        return len(self.levels)

    def to_json(self) -> dict:
        levels = []
        for k, lv in enumerate(self.levels):
            comps = []
            for i, d in enumerate(lv.dossiers):
                comps.append(
                    {
                        "index": i,
                        "degree": d.degree,
                        "genus": d.genus,
                        "widths": d.widths,
                        "lifting_invariant": str(d.lift) if d.lift else None,
                        "cusps": [
                            {
                                "label": c.label,
                                "width": c.width,
                                "kind": c.ctype.kind,
                                "mp": c.ctype.mp,
                                "hm": c.ctype.is_hm,
                                "shift_of_hm": c.ctype.is_shift_of_hm,
                            }
                            for c in d.cusps
                        ],
                    }
                )
            levels.append(
                {
                    "level": k,
                    "group": lv.group.name,
                    "order": lv.group.order,
                    "classes": lv.classes.label(),
                    "components": comps,
                }
            )
        return {
            "schema": "v1",
            "p": self.p,
            "levels": levels,
            "component_edges": [
                {"level": k, "up": u, "down": d} for k, u, d in self.component_edges
            ],
            "cusp_edges": [
                {"level": k, "up": list(u), "down": list(d)}
                for k, u, d in self.cusp_edges
            ],
            "obstructed": [
                {"level": k, "component": i} for k, i in self.obstructed
            ],
            "width_growth": [
                {
                    "level": c.level,
                    "up": list(c.up_cusp),
                    "down": list(c.down_cusp),
                    "down_mp": c.down_mp,
                    "up_mp": c.up_mp,
                    "applicable": c.applicable,
                    "ok": c.ok,
                }
                for c in self.width_growth_checks
            ],
            "cusp_persistence": [
                {"level": c.level, "down": list(c.down_cusp), "covered": c.covered}
                for c in self.persistence_checks
            ],
        }

    def to_dot(self) -> str:
        lines = ["digraph tower {", "  rankdir=BT;"]
        for k, lv in enumerate(self.levels):
            lines.append(f"  subgraph cluster_level{k} {{")
            lines.append(f'    label="level {k}: {lv.group.name}";')
            for i, d in enumerate(lv.dossiers):
                shape = "doubleoctagon" if (k, i) in self.obstructed else "box"
                lines.append(
                    f'    comp_{k}_{i} [shape={shape},label="{d.degree}/{d.genus}"];'
                )
                for j, c in enumerate(d.cusps):
                    lines.append(
                        f'    cusp_{k}_{i}_{j} [shape=ellipse,label="{c.width}/{c.ctype.kind}"];'
                    )
                    lines.append(f"    cusp_{k}_{i}_{j} -> comp_{k}_{i} [style=dotted];")
            lines.append("  }")
        for k, up, down in self.component_edges:
            lines.append(f"  comp_{k + 1}_{up} -> comp_{k}_{down};")
        for k, (uo, uc), (do, dc) in self.cusp_edges:
            lines.append(f"  cusp_{k + 1}_{uo}_{uc} -> cusp_{k}_{do}_{dc};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _level_data(
    group: FiniteGroup,
    C: ClassMultiset,
    p: int,
    extension: CentralExtension | None,
    jobs: int = 1,
) -> TowerLevel:
    inner = nielsen_inner_classes(group, C)
    orbits = braid_orbits(reduced_classes(inner))

    def build(i_orb):
        i, orb = i_orb
        return component_dossier(orb, i + 1, p, extension)

    if jobs > 1 and len(orbits) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            dossiers = list(pool.map(build, enumerate(orbits)))
    else:
        dossiers = [build(x) for x in enumerate(orbits)]
    cusps = [cusp_orbits(o) for o in orbits]
    return TowerLevel(group, C, orbits, dossiers, cusps)


def build_graph(
    chain: Sequence[LevelMap],
    base_classes: ClassMultiset,
    p: int,
    extensions: Sequence[CentralExtension | None] | None = None,
    jobs: int = 1,
) -> TowerGraph:
    """Assemble the level-to-level graph over a composable chain of covers.

    chain[k] must map the level k+1 group onto the level k group; the
    classes are matched upward from the base.  FP1 (p-cusp width growth)
    and FP2 (g-p' cusp persistence) are evaluated on every computed edge.
    """
    if base_classes.r != 4:
        raise ConfigError("tower graphs need r = 4 branch classes")
    groups = [base_classes.group]
    for k, lm in enumerate(chain):
        if lm.p != p:
            raise ConfigError("level map prime disagrees with the tower prime")
        if not same_group(lm.downstairs, groups[-1]):
            raise ConfigError(f"chain link {k} does not sit on the previous level")
        groups[-1] = lm.downstairs
        groups.append(lm.upstairs)
    base_classes = transfer_classes(base_classes, groups[0])
    exts: list[CentralExtension | None] = (
        list(extensions) if extensions else [None] * len(groups)
    )
    if len(exts) != len(groups):
        raise ConfigError("need one (possibly null) extension per level")

    classes = [base_classes]
    for k, lm in enumerate(chain):
        classes.append(
            transfer_classes(match_classes(lm, classes[-1]), groups[k + 1])
        )
    levels = [
        _level_data(g, c, p, e, jobs) for g, c, e in zip(groups, classes, exts)
    ]
    graph = TowerGraph(p, levels)

    orders = [g.element_orders for g in groups]
    for k, lm in enumerate(chain):
        down, up = levels[k], levels[k + 1]
        down_member_to_orbit = {}
        down_member_to_cusp = {}
        for i, orb in enumerate(down.orbits):
            for t in orb.members:
                down_member_to_orbit[t] = i
            for j, cusp in enumerate(down.cusps[i]):
                for t in cusp.member_canonicals:
                    down_member_to_cusp[t] = (i, j)
        covered_components = set()
        covered_cusps = set()
        for ui, uorb in enumerate(up.orbits):
            proj = project_reduced(lm, uorb.members[0])
            di = down_member_to_orbit[proj]
            graph.component_edges.append((k, ui, di))
            covered_components.add(di)
            for uj, ucusp in enumerate(up.cusps[ui]):
                cproj = project_reduced(lm, ucusp.member_canonicals[0])
                dcusp = down_member_to_cusp[cproj]
                graph.cusp_edges.append((k, (ui, uj), dcusp))
                covered_cusps.add(dcusp)
                down_rep = cproj
                up_rep = ucusp.member_canonicals[0]
                down_mp = orders[k][
                    groups[k].mul(down_rep[1], down_rep[2])
                ]
                up_mp = orders[k + 1][
                    groups[k + 1].mul(up_rep[1], up_rep[2])
                ]
                applicable = down_mp % p == 0
                ok = True
                if applicable:
                    u = 0
                    m = down_mp
                    while m % p == 0:
                        m //= p
                        u += 1
                    ok = up_mp % (p ** (u + 1)) == 0
                graph.width_growth_checks.append(
                    WidthGrowthCheck(k, (ui, uj), dcusp, down_mp, up_mp, applicable, ok)
                )
        for i, orb in enumerate(down.orbits):
            if i not in covered_components:
                graph.obstructed.append((k, i))
        for i, dossier in enumerate(down.dossiers):
            for j, summary in enumerate(dossier.cusps):
                if summary.ctype.kind == "g-p'":
                    graph.persistence_checks.append(
                        CuspPersistenceCheck(k, (i, j), (i, j) in covered_cusps)
                    )
    return graph


def export_json(graph: TowerGraph) -> str:
    return json.dumps(graph.to_json(), indent=1, sort_keys=True) + "\n"
