"""Large rainbow independent sets in the intersection of two matroids.

Input: a family F_1..F_n of pairwise disjoint n-element sets, each
independent in both matroids M and N.  The solver maintains a rainbow set R
(at most one element per F_i, independent in both matroids) and repeatedly
either

  * builds a complete auxiliary level sequence certifying that the
    deficiency delta = n - |R| satisfies |R| >= delta^2, i.e. the final
    size t obeys (n - t)^2 <= t, or
  * finds a colorful alternating path (an alternating sequence
    b_0, r_1, b_1, ..., r_k, b_k of new elements and current picks) whose
    exchange enlarges R by one.

Ties are always broken toward the smallest element id, so a solve is fully
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matroids import Matroid


class FamilyError(ValueError):
    """Family violates the disjointness / size / double-independence contract."""


class InternalInvariantError(RuntimeError):
    """A structural invariant the algorithm guarantees was violated (a bug)."""


@dataclass(frozen=True)
class Family:
    """Pairwise disjoint n-sets F_1..F_n, each independent in both matroids."""

    sets: tuple[frozenset[int], ...]
    matroid_m: Matroid
    matroid_n: Matroid

    @classmethod
    def create(cls, sets, matroid_m: Matroid, matroid_n: Matroid) -> "Family":
        fam = cls(tuple(frozenset(s) for s in sets), matroid_m, matroid_n)
        fam.validate()
        return fam

    @property
    def n(self) -> int:
        return len(self.sets)

    def validate(self) -> None:
        n = self.n
        if self.matroid_m.ground_size != self.matroid_n.ground_size:
            raise FamilyError("matroids must share one ground set")
        total = 0
        union: set[int] = set()
        for idx, s in enumerate(self.sets):
            if len(s) != n:
                raise FamilyError(f"set {idx + 1} has size {len(s)}, expected n={n}")
            total += len(s)
            union |= s
        if len(union) != total:
            raise FamilyError("sets not pairwise disjoint")
        for idx, s in enumerate(self.sets):
            if not self.matroid_m.independent(s):
                raise FamilyError(f"set {idx + 1} not independent in matroid M")
            if not self.matroid_n.independent(s):
                raise FamilyError(f"set {idx + 1} not independent in matroid N")


@dataclass(frozen=True)
class RainbowSet:
    """A partial choice color -> element, independent in both matroids.

    picks is stored as sorted (color, element) pairs with 0-based colors.
    """

    picks: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, picks: dict[int, int]) -> "RainbowSet":
        return cls(tuple(sorted(picks.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.picks)

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(e for _, e in self.picks)

    @property
    def size(self) -> int:
        return len(self.picks)


@dataclass(frozen=True)
class AuxLevel:
    """One auxiliary level: new elements A_i, removed picks R_i, residue R^i."""

    a_set: frozenset[int]    # A_i, drawn from the family set of `color`
    removed: frozenset[int]  # R_i, picks released to make room for A_i in M
    residue: frozenset[int]  # R^i = R minus all earlier removed sets
    color: int               # 0-based color index t + i - 1


@dataclass(frozen=True)
class AuxSequence:
    delta: int
    levels: tuple[AuxLevel, ...]


@dataclass(frozen=True)
class AuxResult:
    aux: AuxSequence
    complete: bool
    break_level: int | None = None    # 1-based level m at which the build stopped
    break_element: int | None = None  # a in A_m with R + a independent in M


@dataclass(frozen=True)
class Cap:
    """Colorful alternating path b_0, r_1, b_1, ..., r_k, b_k.

    b[i] comes from level b_src[i] (1-based), r[i] from the removed set of
    level r_src[i]; both source sequences strictly decrease.
    """

    b: tuple[int, ...]
    b_src: tuple[int, ...]
    r: tuple[int, ...]
    r_src: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.r)

    def exchange_m(self, r_elems: frozenset[int]) -> frozenset[int]:
        """R_M(k) = R - r_1 + b_1 - ... - r_k + b_k."""
        return (r_elems | set(self.b[1:])) - set(self.r)

    def exchange_n(self, r_elems: frozenset[int]) -> frozenset[int]:
        """R_N(k) = R + b_0 - r_1 + ... + b_{k-1} - r_k."""
        return (r_elems | set(self.b[:-1])) - set(self.r)


@dataclass(frozen=True)
class Relabeling:
    """Family/rainbow with colors permuted so picked colors come first."""

    family: Family
    rainbow: RainbowSet
    order: tuple[int, ...]  # order[new_color] = original color


@dataclass(frozen=True)
class SolveReport:
    rainbow: RainbowSet           # original color labels
    n: int
    size: int
    certificate: AuxSequence | None  # complete level sequence; None iff size == n
    certificate_order: tuple[int, ...] | None  # color relabeling for the certificate
    augmentations: int


def greedy_init(family: Family) -> RainbowSet:
    """Scan colors and elements ascending, keeping anything doubly independent."""
    ext_m = family.matroid_m.extender()
    ext_n = family.matroid_n.extender()
    picks: dict[int, int] = {}
    for color, fset in enumerate(family.sets):
        for e in sorted(fset):
            if ext_m.can_add(e) and ext_n.can_add(e):
                ext_m.add(e)
                ext_n.add(e)
                picks[color] = e
                break
    return RainbowSet.from_dict(picks)


def relabel(rainbow: RainbowSet, family: Family) -> Relabeling:
    """Permute colors so the picked colors are exactly 0..t-1."""
    picked = [c for c, _ in rainbow.picks]
    unpicked = [c for c in range(family.n) if c not in set(picked)]
    order = tuple(picked + unpicked)
    new_sets = tuple(family.sets[c] for c in order)
    inverse = {orig: new for new, orig in enumerate(order)}
    new_picks = {inverse[c]: e for c, e in rainbow.picks}
    new_family = Family(new_sets, family.matroid_m, family.matroid_n)
    return Relabeling(new_family, RainbowSet.from_dict(new_picks), order)


def build_aux(rainbow: RainbowSet, family: Family) -> AuxResult:
    """Build the level sequence (A_i, R_i, R^i) over the unused colors.

    The rainbow set must be relabeled (picks on colors 0..t-1).  Level i
    draws A_i from F_{t+i} so that R^i | A_i is independent in N with size n,
    then releases the minimal R_i making room for A_i in M.  Building stops
    early at the first level containing an element not spanned by R in M;
    that element seeds a colorful alternating path.
    """
    mm, nn = family.matroid_m, family.matroid_n
    t, n = rainbow.size, family.n
    delta = n - t
    r_elems = rainbow.elements
    residue = r_elems
    levels: list[AuxLevel] = []

    # non-committing M-extender over R, for span tests against R
    ext_r = mm.extender()
    for e in sorted(r_elems):
        ext_r.add(e)

    for j in range(delta):
        color = t + j
        a_set = nn.augment(residue, family.sets[color])
        if len(residue) + len(a_set) != n:
            raise InternalInvariantError("level union has wrong size")
        unspanned = sorted(e for e in a_set if ext_r.can_add(e))
        if unspanned:
            partial = AuxSequence(delta, tuple(levels))
            return AuxResult(partial, complete=False,
                             break_level=j + 1, break_element=unspanned[0])
        removed = mm.min_removal(residue, a_set)
        if len(a_set) < (j + 1) * delta:
            raise InternalInvariantError(f"|A_{j + 1}| below ({j + 1})*delta")
        if len(removed) < delta:
            raise InternalInvariantError(f"|R_{j + 1}| below delta")
        levels.append(AuxLevel(a_set, removed, residue, color))
        residue = residue - removed
    return AuxResult(AuxSequence(delta, tuple(levels)), complete=True)


def _same_span(matroid: Matroid, old: frozenset[int], new: frozenset[int]) -> bool:
    """Equal-rank independent sets span the same flat iff each dropped
    element of old is spanned by new."""
    if len(new) != len(old) or not matroid.independent(new):
        return False
    return all(matroid.spans(new, e) for e in old - new)


def _check_path_conditions(mm: Matroid, nn: Matroid, r_elems: frozenset[int],
                           cap: Cap) -> None:
    rm = cap.exchange_m(r_elems)
    rn = cap.exchange_n(r_elems)
    if not _same_span(mm, r_elems, rm):
        raise InternalInvariantError("M-side path condition violated")
    if not _same_span(nn, r_elems, rn):
        raise InternalInvariantError("N-side path condition violated")
    if rm | {cap.b[0]} != rn | {cap.b[-1]}:
        raise InternalInvariantError("path exchange identity violated")


def find_cap(rainbow: RainbowSet, family: Family, aux: AuxSequence,
             break_level: int, break_element: int,
             check_claims: bool = False) -> Cap:
    """Grow a colorful alternating path from an unspanned element until the
    exchange set becomes independent in N (it stays independent in M
    throughout).

    With check_claims=True every structural property of the path is
    re-verified with oracle calls after each extension; violations raise
    InternalInvariantError, since none can occur for true matroids.
    """
    mm, nn = family.matroid_m, family.matroid_n
    r_elems = rainbow.elements
    levels = aux.levels
    b = [break_element]
    b_src = [break_level]
    r: list[int] = []
    r_src: list[int] = []

    while True:
        bk = b[-1]
        candidate = (r_elems | set(b)) - set(r)
        if nn.independent(candidate):
            cap = Cap(tuple(b), tuple(b_src), tuple(r), tuple(r_src))
            if not mm.independent(candidate):
                raise InternalInvariantError("augmenting path not independent in M")
            if check_claims and cap.length > 0:
                _check_path_conditions(mm, nn, r_elems, cap)
            return cap

        # bk is now N-spanned by R; pick the earliest level whose removed
        # picks meet its N-circuit.
        c_n = nn.circuit_support(r_elems, bk)
        p = None
        for idx, lev in enumerate(levels):
            inter = c_n & lev.removed
            if inter:
                p = idx + 1
                r_next = min(inter)
                break
        if p is None:
            raise InternalInvariantError("no released pick meets the N-circuit")
        if p >= b_src[-1]:
            raise InternalInvariantError("removal level not below element level")
        if check_claims:
            for bi in b[:-1]:
                if r_next in nn.circuit_support(r_elems, bi):
                    raise InternalInvariantError(
                        "pick already met an earlier N-circuit")
            rn_k = (r_elems | set(b[:-1])) - set(r)
            if r_next not in nn.circuit_support(rn_k, bk):
                raise InternalInvariantError(
                    "pick left the N-circuit after earlier exchanges")

        # earliest level holding an element whose M-circuit in R contains
        # the pick being released
        b_next = None
        b_next_src = None
        for l in range(1, p + 1):
            for e in sorted(levels[l - 1].a_set):
                if r_next in mm.circuit_support(r_elems, e):
                    b_next, b_next_src = e, l
                    break
            if b_next is not None:
                break
        if b_next is None:
            raise InternalInvariantError("no exchange partner for released pick")
        if check_claims:
            rm_k = (r_elems | set(b[1:])) - set(r)
            if r_next not in mm.circuit_support(rm_k, b_next):
                raise InternalInvariantError(
                    "pick left the M-circuit after earlier exchanges")

        r.append(r_next)
        r_src.append(p)
        b.append(b_next)
        b_src.append(b_next_src)
        if len(r) > aux.delta - 1:
            raise InternalInvariantError("path longer than delta - 1")
        if check_claims:
            _check_path_conditions(
                mm, nn, r_elems, Cap(tuple(b), tuple(b_src), tuple(r), tuple(r_src)))


def apply_cap(rainbow: RainbowSet, family: Family, cap: Cap) -> RainbowSet:
    """Exchange along an augmenting path: drop the picks r_1..r_k, add every
    b_i under the color of its source level.  Grows the rainbow set by one."""
    t = rainbow.size
    picks = rainbow.as_dict()
    color_of = {e: c for c, e in picks.items()}
    for relem in cap.r:
        del picks[color_of[relem]]
    for elem, src in zip(cap.b, cap.b_src):
        color = t + src - 1
        if color in picks:
            raise InternalInvariantError("two path elements share a color")
        if elem not in family.sets[color]:
            raise InternalInvariantError("path element outside its color set")
        picks[color] = elem
    new = RainbowSet.from_dict(picks)
    elems = new.elements
    if (new.size != t + 1
            or not family.matroid_m.independent(elems)
            or not family.matroid_n.independent(elems)):
        raise InternalInvariantError("augmentation produced an invalid rainbow set")
    return new


def solve(family: Family, check_claims: bool = False) -> SolveReport:
    """Compute a rainbow set of size t with t = n or (n - t)^2 <= t.

    Greedy start, then augment along colorful alternating paths until the
    auxiliary sequence completes; the complete sequence is returned as the
    certificate for the quadratic deficiency bound.
    """
    family.validate()
    n = family.n
    rainbow = greedy_init(family)
    augmentations = 0
    while True:
        t = rainbow.size
        if t == n:
            return SolveReport(rainbow, n, t, None, None, augmentations)
        rel = relabel(rainbow, family)
        res = build_aux(rel.rainbow, rel.family)
        if res.complete:
            if (n - t) ** 2 > t:
                raise InternalInvariantError("complete sequence without bound")
            return SolveReport(rainbow, n, t, res.aux, rel.order, augmentations)
        cap = find_cap(rel.rainbow, rel.family, res.aux,
                       res.break_level, res.break_element, check_claims)
        new_rel = apply_cap(rel.rainbow, rel.family, cap)
        rainbow = RainbowSet.from_dict(
            {rel.order[c]: e for c, e in new_rel.picks})
        augmentations += 1
        if augmentations > n:
            raise InternalInvariantError("more augmentations than colors")
