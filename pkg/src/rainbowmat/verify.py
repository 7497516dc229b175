"""Independent correctness layer: brute-force optimum, rainbow validity,
the exact integer deficiency bound, and randomized structural checks of the
matroid exchange machinery.

Everything here deliberately avoids the solver's code paths: the brute force
enumerates choice functions directly, circuits are found by subset search,
and span comparisons go through the rank oracle only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .matroids import Matroid
from .solver import Family, RainbowSet


class VerifyError(ValueError):
    """Refused verification request (e.g. brute force over the size cap)."""


def check_bound(t: int, n: int) -> bool:
    """Exact integer form of the guarantee: t = n or (n - t)^2 <= t."""
    if not 0 <= t <= n:
        raise VerifyError(f"need 0 <= t <= n, got t={t}, n={n}")
    return t == n or (n - t) ** 2 <= t


def bound_floor(n: int) -> int:
    """Smallest size accepted by check_bound for order n."""
    for t in range(n + 1):
        if check_bound(t, n):
            return t
    return n


def rainbow_problems(rainbow: RainbowSet, family: Family) -> list[str]:
    """Diagnostics for an invalid rainbow set; empty when valid."""
    problems = []
    seen_colors: set[int] = set()
    for color, elem in rainbow.picks:
        if color in seen_colors:
            problems.append(f"color {color + 1} picked twice")
        seen_colors.add(color)
        if not 0 <= color < family.n:
            problems.append(f"color {color + 1} out of range")
        elif elem not in family.sets[color]:
            problems.append(f"element {elem} not in set {color + 1}")
    elems = [e for _, e in rainbow.picks]
    if len(set(elems)) != len(elems):
        problems.append("an element picked under two colors")
    if not problems:
        if not family.matroid_m.independent(rainbow.elements):
            problems.append("picked elements dependent in matroid M")
        if not family.matroid_n.independent(rainbow.elements):
            problems.append("picked elements dependent in matroid N")
    return problems


def check_rainbow(rainbow: RainbowSet, family: Family) -> bool:
    return not rainbow_problems(rainbow, family)


def brute_force_max(family: Family, limit: int = 5) -> tuple[int, RainbowSet]:
    """Exact maximum rainbow size by depth-first search over colors.

    Deterministic: elements are tried ascending before skipping a color, so
    the witness is the lexicographically least optimal choice function.
    Refuses n > limit (default 5; pass a larger limit explicitly to allow
    slower searches).
    """
    n = family.n
    if n > limit:
        raise VerifyError(f"brute force refused for n={n} > limit={limit}")
    mm, nn = family.matroid_m, family.matroid_n
    sets_sorted = [sorted(s) for s in family.sets]
    best_size = -1
    best_picks: dict[int, int] = {}

    def descend(color: int, picks: dict[int, int], elems: frozenset[int]) -> None:
        nonlocal best_size, best_picks
        if len(picks) + (n - color) <= best_size:
            return
        if color == n:
            if len(picks) > best_size:
                best_size = len(picks)
                best_picks = dict(picks)
            return
        for e in sets_sorted[color]:
            cand = elems | {e}
            if mm.independent(cand) and nn.independent(cand):
                picks[color] = e
                descend(color + 1, picks, cand)
                del picks[color]
        descend(color + 1, picks, elems)

    descend(0, {}, frozenset())
    return best_size, RainbowSet.from_dict(best_picks)


@dataclass(frozen=True)
class VerifyReport:
    n: int
    solver_size: int
    optimum: int | None
    bound_ok: bool
    valid: bool
    conjecture_gap: int | None  # optimum - (n - 1); >= 0 supports the open conjecture

    def render(self) -> str:
        lines = [
            f"n={self.n}",
            f"solver_size={self.solver_size}",
            f"optimum={self.optimum if self.optimum is not None else '-'}",
            f"bound_ok={'true' if self.bound_ok else 'false'}",
            f"valid={'true' if self.valid else 'false'}",
            f"conjecture_gap="
            f"{self.conjecture_gap if self.conjecture_gap is not None else '-'}",
        ]
        return "\n".join(lines)


def make_report(family: Family, rainbow: RainbowSet,
                brute_limit: int = 5) -> VerifyReport:
    n = family.n
    t = rainbow.size
    optimum = None
    gap = None
    if n <= brute_limit:
        optimum, _ = brute_force_max(family, limit=brute_limit)
        gap = optimum - (n - 1)
    return VerifyReport(n, t, optimum, check_bound(t, n),
                        check_rainbow(rainbow, family), gap)


# ---------------------------------------------------------------------------
# Randomized structural checks (exchange facts and the circuit-transfer lemma)


@dataclass
class CheckResult:
    trials: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail: str) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail


@dataclass
class PropertyReport:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    def result(self, name: str) -> CheckResult:
        return self.checks.setdefault(name, CheckResult())

    @property
    def total_failures(self) -> int:
        return sum(c.failures for c in self.checks.values())

    def render(self) -> str:
        lines = []
        for name in sorted(self.checks):
            c = self.checks[name]
            line = f"{name} trials={c.trials} failures={c.failures}"
            if c.first_failure:
                line += f" first_failure={c.first_failure!r}"
            lines.append(line)
        return "\n".join(lines)


def random_small_matroid(rng: random.Random, max_ground: int = 8) -> Matroid:
    kind = rng.choice(("uniform", "partition", "graphic", "linear"))
    g = rng.randint(3, max_ground)
    if kind == "uniform":
        return Matroid.uniform(rng.randint(1, g), g)
    if kind == "partition":
        ids = list(range(g))
        rng.shuffle(ids)
        blocks = []
        caps = []
        pos = 0
        while pos < g:
            size = min(rng.randint(1, 3), g - pos)
            blocks.append(ids[pos:pos + size])
            caps.append(rng.randint(1, 2))
            pos += size
        return Matroid.partition(blocks, caps, g)
    if kind == "graphic":
        vertices = rng.randint(3, 5)
        edges = []
        for _ in range(g):
            u = rng.randrange(vertices)
            v = rng.randrange(vertices - 1)
            if v >= u:
                v += 1
            edges.append((min(u, v), max(u, v)))
        return Matroid.graphic(vertices, edges)
    p = rng.choice((2, 3, 5))
    dim = rng.randint(2, 4)
    columns = [[rng.randrange(p) for _ in range(dim)] for _ in range(g)]
    return Matroid.linear(p, columns)


def _random_independent(matroid: Matroid, rng: random.Random,
                        max_size: int | None = None) -> frozenset[int]:
    pool = list(range(matroid.ground_size))
    rng.shuffle(pool)
    ext = matroid.extender()
    out: set[int] = set()
    cap = max_size if max_size is not None else matroid.ground_size
    for e in pool:
        if len(out) >= cap:
            break
        if ext.can_add(e) and rng.random() < 0.8:
            ext.add(e)
            out.add(e)
    return frozenset(out)


def _spanned_outside(matroid: Matroid, a: frozenset[int]) -> list[int]:
    return [x for x in range(matroid.ground_size)
            if x not in a and matroid.spans(a, x)]


def all_circuits(matroid: Matroid) -> list[frozenset[int]]:
    """Every minimal dependent set, by exhaustive subset search."""
    g = matroid.ground_size
    circuits = []
    for size in range(1, g + 1):
        for combo in combinations(range(g), size):
            s = frozenset(combo)
            if matroid.independent(s):
                continue
            if any(c <= s for c in circuits):
                continue
            circuits.append(s)
    return circuits


def check_fact_support_unique(matroid: Matroid, i: frozenset[int], x: int) -> bool:
    """circuit_support equals the unique minimal spanning subset of i."""
    support = matroid.circuit_support(i, x)
    minimal = []
    for size in range(len(i) + 1):
        for combo in combinations(sorted(i), size):
            s = frozenset(combo)
            if matroid.spans(s, x) and not any(m <= s for m in minimal):
                minimal.append(s)
    return len(minimal) == 1 and minimal[0] == support


def check_fact_exchange(matroid: Matroid, a: frozenset[int], x: int) -> bool:
    """For every y in the support of x: a + x - y is independent and spans
    the same flat as a."""
    for y in matroid.circuit_support(a, x):
        swapped = (a | {x}) - {y}
        if not matroid.independent(swapped):
            return False
        if matroid.rank(swapped) != matroid.rank(a):
            return False
        if not matroid.spans(swapped, y):
            return False
        if any(not matroid.spans(a, e) for e in swapped - a):
            return False
    return True


def check_fact_circuit_elimination(matroid: Matroid,
                                   circuits: list[frozenset[int]],
                                   rng: random.Random) -> bool | None:
    """Circuit elimination on a random admissible (C1, C2, e, f) tuple;
    None when the matroid has no admissible tuple."""
    candidates = []
    for c1 in circuits:
        for c2 in circuits:
            if c1 == c2:
                continue
            for e in c1 & c2:
                for f in c1 - c2:
                    candidates.append((c1, c2, e, f))
    if not candidates:
        return None
    c1, c2, e, f = candidates[rng.randrange(len(candidates))]
    allowed = (c1 | c2) - {e}
    for size in range(1, len(allowed) + 1):
        for combo in combinations(sorted(allowed), size):
            s = frozenset(combo)
            if f in s and not matroid.independent(s):
                if all(matroid.independent(s - {y}) for y in s):
                    return True
    return False


def check_fact_augmentation(matroid: Matroid, i: frozenset[int],
                            j: frozenset[int]) -> bool:
    added = matroid.augment(i, j)
    union = i | added
    return (added <= j - i and matroid.independent(union)
            and len(union) == len(j))


def sample_circuit_transfer(matroid: Matroid, rng: random.Random,
                            k: int) -> tuple | None:
    """Sample (I, X, Y, y_next, x_next) satisfying the circuit-transfer
    hypotheses: X inside independent I, Y spanned outside with |Y| = |X| = k,
    the swapped set (I \\ X) | Y independent with the same span, y_next
    spanned outside I and Y, and x_next in the support of y_next but in no
    support of a Y element and not in X."""
    i = _random_independent(matroid, rng)
    if not i:
        return None
    spanned = _spanned_outside(matroid, i)
    if len(spanned) < k + 1:
        return None
    rng.shuffle(spanned)
    ys = spanned[:k]
    y_next = spanned[k]
    xs: list[int] = []
    for y in ys:
        support = matroid.circuit_support(i, y) - set(xs)
        if not support:
            return None
        xs.append(rng.choice(sorted(support)))
    x_set, y_set = frozenset(xs), frozenset(ys)
    swapped = (i - x_set) | y_set
    if not matroid.independent(swapped):
        return None
    if matroid.rank(swapped) != matroid.rank(i):
        return None
    if any(not matroid.spans(swapped, x) for x in x_set):
        return None
    support_next = matroid.circuit_support(i, y_next) - x_set
    support_next -= {x for x in support_next
                     if any(x in matroid.circuit_support(i, y) for y in ys)}
    if not support_next:
        return None
    x_next = rng.choice(sorted(support_next))
    return i, x_set, y_set, y_next, x_next


def check_circuit_transfer(matroid: Matroid, i: frozenset[int],
                           x_set: frozenset[int], y_set: frozenset[int],
                           y_next: int, x_next: int) -> bool:
    swapped = (i - x_set) | y_set
    return x_next in matroid.circuit_support(swapped, y_next)


def property_suite(seed: int, trials: int) -> PropertyReport:
    """Randomized checks of the support/exchange/elimination/augmentation
    facts plus the circuit-transfer lemma, on matroids with ground <= 8."""
    rng = random.Random(seed)
    report = PropertyReport()
    for name in ("support_unique", "exchange", "circuit_elimination",
                 "augmentation", "circuit_transfer"):
        report.result(name)
    budget = trials * 60
    attempts = 0
    while attempts < budget and any(
            report.checks[n].trials < trials for n in report.checks):
        attempts += 1
        matroid = random_small_matroid(rng)

        if report.checks["support_unique"].trials < trials \
                or report.checks["exchange"].trials < trials:
            i = _random_independent(matroid, rng)
            spanned = _spanned_outside(matroid, i)
            if i and spanned:
                x = rng.choice(spanned)
                if report.checks["support_unique"].trials < trials:
                    ok = check_fact_support_unique(matroid, i, x)
                    report.result("support_unique").record(
                        ok, f"{matroid.variant!r} I={sorted(i)} x={x}")
                if report.checks["exchange"].trials < trials:
                    ok = check_fact_exchange(matroid, i, x)
                    report.result("exchange").record(
                        ok, f"{matroid.variant!r} I={sorted(i)} x={x}")

        if report.checks["circuit_elimination"].trials < trials:
            circuits = all_circuits(matroid)
            got = check_fact_circuit_elimination(matroid, circuits, rng)
            if got is not None:
                report.result("circuit_elimination").record(
                    got, f"{matroid.variant!r}")

        if report.checks["augmentation"].trials < trials:
            i = _random_independent(matroid, rng)
            j = _random_independent(matroid, rng)
            if len(i) > len(j):
                i, j = j, i
            if len(i) < len(j):
                ok = check_fact_augmentation(matroid, i, j)
                report.result("augmentation").record(
                    ok, f"{matroid.variant!r} I={sorted(i)} J={sorted(j)}")

        if report.checks["circuit_transfer"].trials < trials:
            k = rng.randint(0, 2)
            tup = sample_circuit_transfer(matroid, rng, k)
            if tup is not None:
                ok = check_circuit_transfer(matroid, *tup)
                report.result("circuit_transfer").record(
                    ok,
                    f"{matroid.variant!r} I={sorted(tup[0])} X={sorted(tup[1])} "
                    f"Y={sorted(tup[2])} y={tup[3]} x={tup[4]}")
    return report
