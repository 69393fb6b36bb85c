"""
Check Service

Exhaustive invariant suites over every size up to n. Each suite returns a
CheckReport; a report passes iff it recorded no failure.

Suites:
1. bijections - round trips of every codec and bijection
2. lattice    - order isomorphism, covers, meet/join, chains
3. cells      - cells, Gamma, regions and the related predicates
4. volumes    - cell volumes against the synchronized volumes
5. shelling   - EL-labeling and Moebius values
"""

import itertools
import logging
from typing import Callable, Dict, List, Optional, Tuple

from app.core.config import get_settings
from app.domain import cells as cell_ops
from app.domain import cubic
from app.domain.diagrams import chapoton_count, is_new, tamari_violation
from app.domain.interval_posets import (
    chi,
    chi_inv,
    cover_kind,
    interval_covers,
    interval_leq,
    is_new_interval_poset,
    rho,
    rho_from_forests,
    rho_inv,
)
from app.domain.shelling import (
    all_saturated_chains,
    increasing_chain,
    mobius_values,
    verify_el_shellability,
    weakly_decreasing_chain,
)
from app.domain.trees import (
    canopy,
    from_dual_tamari_diagram,
    from_tamari_diagram,
    to_dual_tamari_diagram,
    to_tamari_diagram,
)
from app.schemas.schemas import CheckReport, CheckSuiteEnum
from app.services.enumeration_service import EnumerationService

logger = logging.getLogger(__name__)

ORACLE_SIZE = 4


class _Recorder:
    """Counts checks and keeps the failing ones"""

    def __init__(self):
        self.checks = 0
        self.failures: List[str] = []
        self.details: Dict[str, object] = {}

    def expect(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(message)


class CheckService:
    """Runs the invariant suites over the cached enumerations"""

    def __init__(self, enumeration: Optional[EnumerationService] = None):
        self._enumeration = enumeration
        self._suites: Dict[CheckSuiteEnum, Callable[[int, _Recorder], None]] = {
            CheckSuiteEnum.BIJECTIONS: self._bijections,
            CheckSuiteEnum.LATTICE: self._lattice,
            CheckSuiteEnum.CELLS: self._cells,
            CheckSuiteEnum.VOLUMES: self._volumes,
            CheckSuiteEnum.SHELLING: self._shelling,
        }

    @property
    def enumeration(self) -> EnumerationService:
        if self._enumeration is None:
            self._enumeration = EnumerationService()
        return self._enumeration

    def run(self, suite: CheckSuiteEnum, n: int, cap_override: bool = False) -> CheckReport:
        """
        Run one suite (or all of them) for every size 1..n.

        Inside "all" the shelling suite stops at the shelling cap unless
        cap_override is set; the size it reached is kept in details.
        """
        recorder = _Recorder()
        selected = list(self._suites) if suite == CheckSuiteEnum.ALL else [suite]
        for name in selected:
            size = n
            if suite == CheckSuiteEnum.ALL and name == CheckSuiteEnum.SHELLING and not cap_override:
                size = min(n, get_settings().shelling_cap)
                if size < n:
                    logger.warning(f"Shelling checks stop at n={size}, the shelling cap")
                recorder.details["shelling_n"] = size
            logger.info(f"Running {name.value} checks up to n={size}")
            self._suites[name](size, recorder)
        report = CheckReport(
            suite=suite,
            n=n,
            passed=not recorder.failures,
            checks=recorder.checks,
            failures=recorder.failures,
            details=recorder.details,
        )
        logger.info(f"{suite.value}: {report.checks} checks, {len(report.failures)} failures")
        return report

    # ============================================
    # Suites
    # ============================================

    def _bijections(self, n: int, r: _Recorder) -> None:
        for size in range(1, n + 1):
            for t in self.enumeration.trees(size):
                u, v = to_tamari_diagram(t), to_dual_tamari_diagram(t)
                r.expect(from_tamari_diagram(u) == t, f"tree codec fails on {t}")
                r.expect(from_dual_tamari_diagram(v) == t, f"dual tree codec fails on {t}")
                r.expect(
                    tamari_violation(tuple(reversed(v.word))) is None,
                    f"reversed dual diagram of {t} is not a Tamari diagram",
                )

            diagrams = self.enumeration.diagrams(size)
            r.expect(
                len(diagrams) == chapoton_count(size),
                f"n={size}: {len(diagrams)} diagrams, formula gives {chapoton_count(size)}",
            )
            for d in diagrams:
                p = chi(d)
                r.expect(chi_inv(p) == d, f"chi round trip fails on {d.to_text()}")
                c = cubic.phi_inv(d)
                r.expect(cubic.phi(c) == d, f"phi round trip fails on {c}")
                iv = rho(p)
                r.expect(rho_inv(iv) == p, f"rho round trip fails on {d.to_text()}")
                r.expect(cubic.psi(iv) == c, f"psi disagrees with phi_inv on {c}")
                r.expect(cubic.psi_inv(c) == iv, f"psi_inv round trip fails on {c}")
                r.expect(
                    (to_tamari_diagram(iv.lower), to_dual_tamari_diagram(iv.upper)) == (d.u, d.v),
                    f"composite coherence fails on {d.to_text()}",
                )
                if size <= ORACLE_SIZE:
                    r.expect(rho_from_forests(p) == iv, f"forest reading disagrees on {d.to_text()}")
                if size >= 3:
                    r.expect(is_new(d) == is_new_interval_poset(p), f"newness disagrees on {d.to_text()}")

    def _lattice(self, n: int, r: _Recorder) -> None:
        for size in range(1, n + 1):
            elements = self.enumeration.coordinates(size)
            edges = self.enumeration.cover_edges(size)
            targets = {b for _, b in edges}
            starts = {a for a, _ in edges}
            sources = [k for k in range(len(elements)) if k not in targets]
            sinks = [k for k in range(len(elements)) if k not in starts]
            r.expect(len(sources) == 1 and len(sinks) == 1, f"n={size}: realization needs one source and one sink")

            for c in elements:
                for i in range(1, size):
                    raised = cubic.min_increase(c, i)
                    if raised is not None and c[i] < 0:
                        r.expect(raised[i] <= 0, f"sign law fails at {c}, index {i}")

            if size > ORACLE_SIZE:
                continue
            self._check_order_and_covers(elements, r)
            self._check_cover_kinds(elements, r)
            self._check_meet_join(elements, r)

    def _check_order_and_covers(self, elements, r: _Recorder) -> None:
        intervals = {c: cubic.psi_inv(c) for c in elements}
        for c, c2 in itertools.product(elements, repeat=2):
            ordered = cubic.cc_leq(c, c2)
            r.expect(
                ordered == interval_leq(intervals[c], intervals[c2], use_rotation_oracle=True),
                f"order mismatch between {c} and {c2}",
            )
            if ordered:
                chain = cubic.chain_between(c, c2)
                r.expect(
                    all(b in cubic.covers(a) for a, b in zip(chain, chain[1:])),
                    f"canonical chain {c} -> {c2} is not saturated",
                )
        for c in elements:
            above = [x for x in elements if x != c and cubic.cc_leq(c, x)]
            brute = {
                x for x in above
                if not any(y != x and cubic.cc_leq(y, x) for y in above)
            }
            r.expect(brute == set(cubic.covers(c)), f"covers of {c} disagree with brute force")
            r.expect(
                all(sum(a != b for a, b in zip(c.components, x.components)) == 1 for x in brute),
                f"a cover of {c} changes more than one component",
            )

    def _check_cover_kinds(self, elements, r: _Recorder) -> None:
        intervals = {c: cubic.psi_inv(c) for c in elements}
        posets = {c: rho_inv(iv) for c, iv in intervals.items()}
        for c in elements:
            above = interval_covers(intervals[c])
            for c2 in elements:
                kind = cover_kind(posets[c], posets[c2])
                r.expect(
                    (kind is not None) == (intervals[c2] in above),
                    f"cover kind {kind} of {c} -> {c2} disagrees with the rotation covers",
                )

    def _check_meet_join(self, elements, r: _Recorder) -> None:
        joins: Dict[Tuple, object] = {}
        meets: Dict[Tuple, object] = {}
        for c, c2 in itertools.product(elements, repeat=2):
            joins[(c, c2)] = cubic.join(c, c2)
            meets[(c, c2)] = cubic.meet(c, c2)
            r.expect(joins[(c, c2)] == cubic.join_by_bounds(c, c2), f"join of {c} and {c2} disagrees with bounds")
            r.expect(meets[(c, c2)] == cubic.meet_by_bounds(c, c2), f"meet of {c} and {c2} disagrees with bounds")
        for c, c2 in itertools.product(elements, repeat=2):
            r.expect(joins[(c, c2)] == joins[(c2, c)], f"join not commutative at {c}, {c2}")
            r.expect(meets[(c, c2)] == meets[(c2, c)], f"meet not commutative at {c}, {c2}")
            r.expect(joins[(c, meets[(c, c2)])] == c, f"absorption fails at {c}, {c2}")
            r.expect(meets[(c, joins[(c, c2)])] == c, f"absorption fails at {c}, {c2}")
        for c in elements:
            r.expect(joins[(c, c)] == c and meets[(c, c)] == c, f"idempotence fails at {c}")
        for a, b, c in itertools.product(elements, repeat=3):
            r.expect(
                joins[(joins[(a, b)], c)] == joins[(a, joins[(b, c)])],
                f"join not associative at {a}, {b}, {c}",
            )
            r.expect(
                meets[(meets[(a, b)], c)] == meets[(a, meets[(b, c)])],
                f"meet not associative at {a}, {b}, {c}",
            )

    def _cells(self, n: int, r: _Recorder) -> None:
        for size in range(1, n + 1):
            elements = self.enumeration.coordinates(size)
            synchronized = [c for c in elements if cubic.is_synchronized_cc(c)]
            cells = self.enumeration.cells(size)
            r.expect(
                len(cells) == len(synchronized),
                f"n={size}: {len(cells)} cells but {len(synchronized)} synchronized coordinates",
            )
            images = set()
            for cell in cells:
                for lo, hi in zip(cell.c_min.components, cell.c_max.components):
                    r.expect(hi <= 0 if lo < 0 else hi > 0, f"sign coupling fails on {cell}")
                vertices = cell_ops.cell_vertices(cell)
                r.expect(
                    len(set(vertices)) == 2 ** (size - 1),
                    f"{cell} has {len(set(vertices))} vertices",
                )
                r.expect(cell_ops.interior_is_empty(cell), f"{cell} has an interior coordinate")
                image = cell_ops.gamma(cell)
                images.add(image)
                r.expect(cubic.is_synchronized_cc(image), f"gamma of {cell} is not synchronized")
                r.expect(cell_ops.gamma_inv(image) == cell, f"gamma_inv fails on {image}")
                r.expect(cell_ops.gamma_bar(cell) in vertices, f"gamma_bar of {cell} is not a vertex")
            r.expect(images == set(synchronized), f"n={size}: gamma is not onto the synchronized coordinates")

            if size > ORACLE_SIZE:
                continue
            for c in elements:
                iv = cubic.psi_inv(c)
                r.expect(
                    cubic.is_synchronized_cc(c) == (canopy(iv.lower) == canopy(iv.upper)),
                    f"synchronization and canopies disagree at {c}",
                )
                internal = cell_ops.is_internal(c)
                if cubic.is_synchronized_cc(c):
                    r.expect(not internal, f"synchronized {c} is internal")
                if size >= 3:
                    new = is_new(cubic.phi(c))
                    if cubic.is_synchronized_cc(c):
                        r.expect(not new, f"synchronized {c} is new")
                    if internal:
                        r.expect(new, f"internal {c} is not new")

        if n >= 3:
            witness = False
            for cell in self.enumeration.cells(3):
                current = cell.c_min
                for i in (1, 2):
                    current = cubic.min_increase(current, i)
                witness = witness or current != cell.c_max
            r.expect(witness, "raising left to right always reaches the maximal-cellular at n=3")

    def _volumes(self, n: int, r: _Recorder) -> None:
        totals = {}
        for size in range(1, n + 1):
            cells = self.enumeration.cells(size)
            total = 0
            for cell in cells:
                volume = cell_ops.cell_volume(cell)
                total += volume
                r.expect(
                    cell_ops.sync_volume(cell_ops.gamma(cell)) == volume,
                    f"volume of {cell} differs from the synchronized volume",
                )
            totals[str(size)] = total
            synchronized = self.enumeration.synchronized(size)
            r.expect(
                sum(cell_ops.sync_volume(c) for c in synchronized) == total,
                f"n={size}: synchronized volumes do not add up to {total}",
            )
            if size <= ORACLE_SIZE:
                for c in synchronized:
                    r.expect(cell_ops.hypercube_decomposes(c), f"hypercube of {c} is not tiled by cells")
        r.details["total_volume"] = totals

    def _shelling(self, n: int, r: _Recorder) -> None:
        settings = get_settings()
        for size in range(1, n + 1):
            result = verify_el_shellability(size, full=size <= settings.shelling_cap)
            r.checks += result.pairs
            r.failures.extend(result.failures)
            if size <= settings.mobius_cap:
                values = mobius_values(size)
                r.expect(set(values) <= {-1, 0, 1}, f"n={size}: Moebius values {sorted(values)}")
        if n >= 3:
            a, b = cubic.CubicCoordinate.of(0, 0), cubic.CubicCoordinate.of(2, 1)
            lengths = {chain.length for chain in all_saturated_chains(a, b)}
            r.expect(len(lengths) > 1, "all saturated chains from (0,0) to (2,1) have one length")
            r.expect(
                weakly_decreasing_chain(a, b).length != increasing_chain(a, b).length,
                "weakly decreasing and increasing chains have equal length at (0,0) -> (2,1)",
            )


check_service = CheckService()
