"""Sign types of Shi regions: admissibility, separation sets, descent-roots.

A sign type assigns -/0/+ to every positive root; the admissible ones are
exactly the componentwise sign patterns of alcove coefficient vectors and
index the regions of the Shi arrangement.  Admissibility is local: a sign
type is admissible iff its restriction to every irreducible rank-2
subsystem is, and the rank-2 tables are generated from certified scans of
the three rank-2 affine groups rather than transcribed from pictures.
"""

from __future__ import annotations

from itertools import product

from .elements import AffineWeylGroup
from .lowness import (DEFAULT_BUDGET, BudgetExceededError, SmallRoots,
                      certified_scan)
from .rootdata import Rank2Subsystem, RootSystem, root_system

_SIGN_CHAR = {-1: "-", 0: "0", 1: "+"}
_CHAR_SIGN = {"-": -1, "0": 0, "+": 1}


def sign_string(trits: tuple[int, ...]) -> str:
    """Canonical text form over {-,0,+} in the deterministic root order."""
    return "".join(_SIGN_CHAR[t] for t in trits)


def parse_sign_string(text: str) -> tuple[int, ...]:
    try:
        return tuple(_CHAR_SIGN[c] for c in text)
    except KeyError as exc:
        raise ValueError(f"invalid sign character in {text!r}") from exc


_RANK2_TABLE_CACHE: dict[str, frozenset[tuple[int, ...]]] = {}


def rank2_admissible_table(kind: str) -> frozenset[tuple[int, ...]]:
    """All admissible sign types of a standalone rank-2 system.

    Generated by a certified scan of the corresponding affine group: the
    scan stops only after (h+1)^2 distinct sign patterns each hold a
    shortest element, so the table is complete by the region count.
    """
    if kind not in _RANK2_TABLE_CACHE:
        if kind not in ("A2", "B2", "G2"):
            raise ValueError(f"not an irreducible rank-2 kind: {kind!r}")
        system = root_system(kind[0], 2)
        group = AffineWeylGroup(system)
        scan = certified_scan(group, system.region_count)
        table = frozenset(scan.minima)
        assert len(table) == system.region_count
        _RANK2_TABLE_CACHE[kind] = table
    return _RANK2_TABLE_CACHE[kind]


def restrict_to_subsystem(sub: Rank2Subsystem, trits: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(trits[p] for p in sub.positions)


def violating_subsystem(system: RootSystem,
                        trits: tuple[int, ...]) -> Rank2Subsystem | None:
    """The first rank-2 subsystem whose restriction is inadmissible, if any."""
    for sub in system.rank2_subsystems():
        if restrict_to_subsystem(sub, trits) not in rank2_admissible_table(sub.kind):
            return sub
    return None


def is_admissible(system: RootSystem, trits: tuple[int, ...]) -> bool:
    if len(trits) != system.nroots:
        raise ValueError("sign type length does not match the positive root count")
    return violating_subsystem(system, trits) is None


def _require_admissible(system: RootSystem, trits: tuple[int, ...]) -> None:
    if not is_admissible(system, trits):
        raise ValueError(f"sign type {sign_string(trits)} is not admissible "
                         f"for {system.cartan_type.name}")


def admissible_sign_types(system: RootSystem,
                          budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """Brute-force enumeration over all 3^N candidates, rank-2 filtered."""
    candidates = 3 ** system.nroots
    if candidates > budget:
        raise BudgetExceededError(
            budget, f"{candidates} sign-type candidates exceed the budget")
    return [trits for trits in product((-1, 0, 1), repeat=system.nroots)
            if violating_subsystem(system, trits) is None]


def separation_mask(system: RootSystem, small: SmallRoots,
                    trits: tuple[int, ...]) -> int:
    """Small roots separating the region from the fundamental alcove.

    A '-' at a root contributes the root itself, a '+' contributes delta
    minus the root.
    """
    _require_admissible(system, trits)
    mask = 0
    for i, t in enumerate(trits):
        if t < 0:
            mask |= 1 << i
        elif t > 0:
            mask |= 1 << (small.count + i)
    return mask


def descent_mask(system: RootSystem, small: SmallRoots,
                 trits: tuple[int, ...]) -> int:
    """Descent-roots of the region: separating walls whose sign can be
    zeroed without leaving the admissible set."""
    _require_admissible(system, trits)
    mask = 0
    for i, t in enumerate(trits):
        if t == 0:
            continue
        zeroed = trits[:i] + (0,) + trits[i + 1:]
        if is_admissible(system, zeroed):
            mask |= 1 << (i if t < 0 else small.count + i)
    return mask


def rank2_tables_json() -> dict[str, dict[str, object]]:
    """JSON-ready export of the three rank-2 admissibility tables.

    Each entry lists the positive roots of the rank-2 system (simple-root
    coordinates, in table position order) and the admissible sign strings.
    """
    out: dict[str, dict[str, object]] = {}
    for kind in ("A2", "B2", "G2"):
        system = root_system(kind[0], 2)
        table = rank2_admissible_table(kind)
        out[kind] = {
            "roots": [list(root) for root in system.positive_roots],
            "count": len(table),
            "admissible": sorted(sign_string(t) for t in table),
        }
    return out


def condition_star(system: RootSystem, trits: tuple[int, ...],
                   simple_index: int) -> bool:
    """Pairwise sum test for 'delta minus a simple root is a descent-root'.

    For a region with '+' at the simple root s: whenever s + beta is a
    positive root carrying '+', beta must carry 0 or +.
    """
    assert simple_index < system.rank and trits[simple_index] > 0
    simple = system.positive_roots[simple_index]
    for i, beta in enumerate(system.positive_roots):
        total = tuple(a + b for a, b in zip(simple, beta))
        j = system.root_index.get(total)
        if j is not None and trits[j] > 0 and trits[i] < 0:
            return False
    return True
