"""Small roots, small inversion sets, lowness tests, certified enumeration.

The small roots of an irreducible affine Weyl group are the level-zero
positive roots together with delta minus each positive root.  An element
is low when its inversion set is the root-cone generated by its small
inversions; the production test uses the equivalent basis criterion
(every length-decreasing inversion is small), the cone test backs it as
an independent oracle.

Soundness of the cone test's finite window: every nonzero nonnegative
combination of positive affine roots pairs strictly positively with the
fundamental-alcove barycenter, so such a combination is never a negative
root; and every combination of members of N(w) pairs strictly negatively
with the w-alcove representative, so any root among them already lies in
N(w).  Hence cone(X) capped to roots is contained in N(w) whenever
X is a subset of N(w), and the substantive direction — each member of
N(w) is generated — is a finite list of exact LP calls.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elements import AffineRoot, AffineWeylGroup, GroupElement
from .ratlp import in_cone

DEFAULT_BUDGET = 500_000


class BudgetExceededError(RuntimeError):
    """An enumeration hit its element budget or length cap before certifying."""

    def __init__(self, bound: int, message: str):
        super().__init__(f"{message} (bound: {bound})")
        self.bound = bound


class SmallRoots:
    """Indexed table of the small roots: positions 0..N-1 hold the finite
    positive roots, positions N..2N-1 hold delta minus those roots."""

    def __init__(self, group: AffineWeylGroup):
        self.group = group
        system = group.system
        self.count = system.nroots
        level_zero = [AffineRoot(r, 0) for r in system.positive_roots]
        level_one = [AffineRoot(tuple(-c for c in r), 1) for r in system.positive_roots]
        self.roots: tuple[AffineRoot, ...] = tuple(level_zero + level_one)
        self.index: dict[AffineRoot, int] = {r: i for i, r in enumerate(self.roots)}

    def __contains__(self, beta: AffineRoot) -> bool:
        return beta in self.index

    def mask_from_shi(self, shi: tuple[int, ...]) -> int:
        mask = 0
        for i, k in enumerate(shi):
            if k < 0:
                mask |= 1 << i
            elif k > 0:
                mask |= 1 << (self.count + i)
        return mask

    def mask_from_roots(self, roots) -> int:
        mask = 0
        for beta in roots:
            mask |= 1 << self.index[beta]
        return mask

    def set_from_mask(self, mask: int) -> frozenset[AffineRoot]:
        return frozenset(self.roots[i] for i in range(2 * self.count) if mask >> i & 1)

    def sigma_mask(self, w: GroupElement) -> int:
        return self.mask_from_shi(w.shi)

    def sigma(self, w: GroupElement) -> frozenset[AffineRoot]:
        """The small inversion set of w, read off the coefficient signs."""
        return self.set_from_mask(self.mask_from_shi(w.shi))


def affine_root_vector(beta: AffineRoot) -> tuple[int, ...]:
    return beta.finite + (beta.delta,)


def cone_contains_all(generators, targets) -> AffineRoot | None:
    """First target outside the rational cone of the generators, else None."""
    columns = [affine_root_vector(g) for g in generators]
    for beta in targets:
        if not in_cone(columns, affine_root_vector(beta)):
            return beta
    return None


def positive_roots_window(group: AffineWeylGroup, max_delta: int) -> list[AffineRoot]:
    """All positive affine roots with delta coefficient at most ``max_delta``."""
    out = []
    for root in group.system.positive_roots:
        neg = tuple(-c for c in root)
        out.extend(AffineRoot(root, k) for k in range(max_delta + 1))
        out.extend(AffineRoot(neg, k) for k in range(1, max_delta + 1))
    return out


def cone_window_members(group: AffineWeylGroup, generators,
                        max_delta: int) -> frozenset[AffineRoot]:
    """Positive affine roots within the delta window that the cone generates."""
    columns = [affine_root_vector(g) for g in generators]
    return frozenset(beta for beta in positive_roots_window(group, max_delta)
                     if in_cone(columns, affine_root_vector(beta)))


def is_low(group: AffineWeylGroup, small: SmallRoots, w: GroupElement) -> bool:
    """Basis criterion: every length-decreasing inversion is a small root."""
    length = w.length
    for beta in group.inversion_set(w):
        if beta in small:
            continue
        reflection = group.reflection_of_affine_root(beta)
        if group.multiply(reflection, w).length == length - 1:
            return False
    return True


def is_low_by_cone(group: AffineWeylGroup, small: SmallRoots, w: GroupElement) -> bool:
    """Cone criterion: N(w) equals the root cone of the small inversions.

    Verified two-sidedly inside the delta window covering N(w); outside
    the window the containment direction is automatic (see module notes).
    """
    inversions = group.inversion_set(w)
    sigma = small.sigma(w)
    assert sigma <= inversions
    window = max((beta.delta for beta in inversions), default=0) + 1
    return cone_window_members(group, sigma, window) == inversions


@dataclass
class ScanResult:
    """Output of a certified breadth-first alcove scan.

    ``minima`` maps each sign type to its unique shortest element;
    ``min_abs`` records the componentwise minimum of the coefficient
    magnitudes over every visited member of the sign type, and
    ``samples`` the first few visited members.  ``stop_length`` is the
    last fully processed shell.
    """

    group: AffineWeylGroup
    stop_length: int
    minima: dict[tuple[int, ...], GroupElement]
    min_abs: dict[tuple[int, ...], tuple[int, ...]]
    samples: dict[tuple[int, ...], list[GroupElement]]
    sigma_masks: set[int]
    visited: int


def sign_of_shi(shi: tuple[int, ...]) -> tuple[int, ...]:
    return tuple((k > 0) - (k < 0) for k in shi)


def certified_scan(group: AffineWeylGroup, target_count: int,
                   budget: int = DEFAULT_BUDGET, max_length: int | None = None,
                   sample_size: int = 8) -> ScanResult:
    """Breadth-first scan by length shells until every sign type has a
    certified minimal element.

    Stops once ``target_count`` distinct sign types each hold their
    first-visited (hence shortest) element and the current shell exceeds
    all recorded minima.  Shell order makes first visits minimal; the
    uniqueness of each per-sign-type minimum is asserted along the way.
    """
    small = SmallRoots(group)
    visited: dict[tuple[int, ...], GroupElement] = {}
    minima: dict[tuple[int, ...], GroupElement] = {}
    min_length: dict[tuple[int, ...], int] = {}
    min_abs: dict[tuple[int, ...], list[int]] = {}
    samples: dict[tuple[int, ...], list[GroupElement]] = {}
    sigma_masks: set[int] = set()

    def visit(w: GroupElement, length: int) -> None:
        zeta = sign_of_shi(w.shi)
        if zeta not in minima:
            minima[zeta] = w
            min_length[zeta] = length
            min_abs[zeta] = [abs(k) for k in w.shi]
            samples[zeta] = [w]
        else:
            assert min_length[zeta] < length, \
                "each region must hold a unique shortest element"
            current = min_abs[zeta]
            for i, k in enumerate(w.shi):
                if abs(k) < current[i]:
                    current[i] = abs(k)
            if len(samples[zeta]) < sample_size:
                samples[zeta].append(w)
        sigma_masks.add(small.mask_from_shi(w.shi))

    frontier = [group.identity]
    visited[group.identity.shi] = group.identity
    visit(group.identity, 0)
    length = 0
    while True:
        if len(minima) == target_count and length >= max(min_length.values()):
            break
        if not frontier:
            raise BudgetExceededError(
                target_count, "scan frontier emptied before reaching the sign-type target")
        if max_length is not None and length >= max_length:
            raise BudgetExceededError(
                max_length, "scan exceeded the length cap before certification")
        next_frontier = []
        for w in frontier:
            for gen in group.generators:
                candidate = group.multiply(w, gen)
                if candidate.length != length + 1:
                    continue
                key = candidate.shi
                known = visited.get(key)
                if known is not None:
                    assert known.mat == candidate.mat and known.trans == candidate.trans, \
                        "coefficient vectors must determine elements uniquely"
                    continue
                if len(visited) >= budget:
                    raise BudgetExceededError(
                        budget, "scan exceeded the element budget before certification")
                visited[key] = candidate
                visit(candidate, length + 1)
                next_frontier.append(candidate)
        frontier = next_frontier
        length += 1
    assert len(minima) == target_count
    return ScanResult(
        group=group,
        stop_length=length,
        minima=minima,
        min_abs={z: tuple(v) for z, v in min_abs.items()},
        samples=samples,
        sigma_masks=sigma_masks,
        visited=len(visited),
    )


def enumerate_low(group: AffineWeylGroup, budget: int = DEFAULT_BUDGET,
                  certificate_scan: ScanResult | None = None) -> list[GroupElement]:
    """All low elements, by closure under left extension.

    The traversal grows low elements upward through their left descents,
    relying on the suffix-closure of the low set for completeness, and
    terminates when no extension of a known low element is low.  When a
    certified scan is supplied, the traversal's completeness is
    cross-validated: every low element must fall inside the certified
    range, and each must be shortest in its own sign type (no right
    extension stays in the type).  Whether the low set *equals* the set
    of per-type minima is left to the verification suites.
    """
    low: dict[GroupElement, int] = {group.identity: 0}
    frontier = [group.identity]
    small = SmallRoots(group)
    length = 0
    while frontier:
        next_frontier = []
        for w in frontier:
            for g in group.letters:
                candidate = group.multiply(group.generators[g], w)
                if candidate.length != length + 1 or candidate in low:
                    continue
                if len(low) >= budget:
                    raise BudgetExceededError(
                        budget, "low-element enumeration exceeded its budget")
                if is_low(group, small, candidate):
                    low[candidate] = length + 1
                    next_frontier.append(candidate)
        frontier = next_frontier
        length += 1

    result = sorted(low, key=GroupElement.sort_key)
    if certificate_scan is not None:
        assert all(w.length <= certificate_scan.stop_length for w in result), \
            "a low element escaped the certified scan range"
        for w in result:
            zeta = sign_of_shi(w.shi)
            for g in group.right_descents(w):
                shorter = group.multiply(w, group.generators[g])
                assert sign_of_shi(shorter.shi) != zeta, \
                    "a low element must be shortest within its sign type"
    return result
