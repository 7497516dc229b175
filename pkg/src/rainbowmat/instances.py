"""Problem instances: Latin squares, row matroidal Latin squares, random
families, and the text instance format.

A Latin square of order n becomes a family over the n^2 cell positions:
rows are the colors, one capacity-1 partition matroid constrains columns and
another constrains symbols, so rainbow sets are exactly partial transversals.
A row MLS (every row a basis of one matroid) reduces the same way, with the
row matroid lifted to cell positions and a capacity-1 column matroid on the
other side; rainbow sets are independent partial transversals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .matroids import Graphic, Linear, Matroid, Partition, Uniform
from .solver import Family, FamilyError


MATROID_CLASSES = ("uniform", "partition", "graphic", "linear")


class InstanceError(ValueError):
    """Invalid Latin square, row MLS, or instance description."""


class GenerationError(Exception):
    """Random generation exhausted its restart budget."""


class ParseError(ValueError):
    """Malformed instance text."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


# ---------------------------------------------------------------------------
# Latin squares


@dataclass(frozen=True)
class LatinSquare:
    """n x n array of symbols 0..n-1; every row is a permutation.

    With row_latin=True the column condition is waived (a "row Latin"
    square); otherwise every column must be a permutation as well.
    """

    cells: tuple[tuple[int, ...], ...]
    row_latin: bool = False

    @property
    def n(self) -> int:
        return len(self.cells)

    def validate(self) -> None:
        n = self.n
        full = set(range(n))
        for i, row in enumerate(self.cells):
            if set(row) != full or len(row) != n:
                raise InstanceError(f"row {i} is not a permutation of 0..{n - 1}")
        if not self.row_latin:
            for j in range(n):
                if {row[j] for row in self.cells} != full:
                    raise InstanceError(f"column {j} is not a permutation")


def cyclic_latin(n: int) -> LatinSquare:
    return LatinSquare(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def shuffled_latin(n: int, seed: int) -> LatinSquare:
    """Cyclic square scrambled by random row, column, and symbol permutations."""
    rng = random.Random(seed)
    rows = list(range(n))
    cols = list(range(n))
    syms = list(range(n))
    rng.shuffle(rows)
    rng.shuffle(cols)
    rng.shuffle(syms)
    cells = tuple(tuple(syms[(rows[i] + cols[j]) % n] for j in range(n))
                  for i in range(n))
    return LatinSquare(cells)


def latin_to_family(ls: LatinSquare) -> Family:
    """Family over cell positions; rainbow sets = partial transversals."""
    ls.validate()
    n = ls.n
    g = n * n
    col_blocks = [[i * n + j for i in range(n)] for j in range(n)]
    sym_blocks: list[list[int]] = [[] for _ in range(n)]
    for i, row in enumerate(ls.cells):
        for j, sym in enumerate(row):
            sym_blocks[sym].append(i * n + j)
    matroid_m = Matroid.partition(col_blocks, [1] * n, g)
    matroid_n = Matroid.partition(sym_blocks, [1] * n, g)
    sets = [frozenset(range(i * n, i * n + n)) for i in range(n)]
    return Family.create(sets, matroid_m, matroid_n)


# ---------------------------------------------------------------------------
# Row matroidal Latin squares


@dataclass(frozen=True)
class RowMls:
    """n x n matrix of ground elements of a rank-n matroid; each row a basis."""

    matroid: Matroid
    cells: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.cells)

    def validate(self) -> None:
        n = self.n
        if self.matroid.rank(range(self.matroid.ground_size)) != n:
            raise InstanceError("matroid rank must equal the degree")
        for i, row in enumerate(self.cells):
            if len(row) != n:
                raise InstanceError(f"row {i} has length {len(row)}")
            if len(set(row)) != n or not self.matroid.independent(row):
                raise InstanceError(f"row {i} is not a basis")


def _lift_to_positions(matroid: Matroid, entries: list[int]) -> Matroid:
    """Re-index a matroid so position k behaves like ground element entries[k]."""
    v = matroid.variant
    g = len(entries)
    if isinstance(v, Uniform):
        return Matroid.uniform(v.rank, g)
    if isinstance(v, Partition):
        block_of = matroid._block_of
        blocks: list[list[int]] = [[] for _ in v.blocks]
        for pos, e in enumerate(entries):
            blocks[block_of[e]].append(pos)
        return Matroid.partition(blocks, v.capacities, g)
    if isinstance(v, Graphic):
        return Matroid.graphic(v.vertices, [v.edges[e] for e in entries])
    assert isinstance(v, Linear)
    return Matroid.linear(v.prime, [v.columns[e] for e in entries])


def rowmls_to_family(mls: RowMls) -> Family:
    """Family over cell positions; rainbow sets = independent partial
    transversals (distinct rows and columns, entries independent)."""
    mls.validate()
    n = mls.n
    flat = [e for row in mls.cells for e in row]
    if len(set(flat)) != len(flat):
        raise InstanceError("cells repeat a ground element; rows must not overlap")
    matroid_m = _lift_to_positions(mls.matroid, flat)
    col_blocks = [[i * n + j for i in range(n)] for j in range(n)]
    matroid_n = Matroid.partition(col_blocks, [1] * n, n * n)
    sets = [frozenset(range(i * n, i * n + n)) for i in range(n)]
    return Family.create(sets, matroid_m, matroid_n)


def _random_tree_edges(vertices: int, rng: random.Random) -> list[tuple[int, int]]:
    """Random spanning tree of the complete graph via random attachment."""
    order = list(range(vertices))
    rng.shuffle(order)
    edges = []
    for i in range(1, vertices):
        edges.append((order[rng.randrange(i)], order[i]))
    return edges


def random_row_mls(kind: str, n: int, seed: int) -> RowMls:
    """Random degree-n row MLS over a graphic or linear matroid.

    Each row gets its own fresh ground elements (n per row), so rows never
    overlap: row i of the graphic variant is a random spanning tree of
    K_{n+1} on its own edge copies, row i of the linear variant a random
    basis of GF(7)^n.
    """
    rng = random.Random(seed)
    if kind == "graphic":
        edges: list[tuple[int, int]] = []
        for _ in range(n):
            edges.extend(_random_tree_edges(n + 1, rng))
        matroid = Matroid.graphic(n + 1, edges)
    elif kind == "linear":
        p = 7
        columns: list[tuple[int, ...]] = []
        for _ in range(n):
            basis: list[tuple[int, ...]] = []
            while len(basis) < n:
                vec = tuple(rng.randrange(p) for _ in range(n))
                if Matroid.linear(p, basis + [vec]).independent(range(len(basis) + 1)):
                    basis.append(vec)
            columns.extend(basis)
        matroid = Matroid.linear(p, columns)
    else:
        raise InstanceError(f"unsupported row MLS class {kind!r}")
    cells = tuple(tuple(range(i * n, i * n + n)) for i in range(n))
    return RowMls(matroid, cells)


# ---------------------------------------------------------------------------
# Random families


def random_matroid(kind: str, n: int, ground_size: int, rng: random.Random) -> Matroid:
    """Random matroid of the given class with rank >= n over ground_size ids."""
    if kind == "uniform":
        return Matroid.uniform(n + rng.randrange(2), ground_size)
    if kind == "partition":
        ids = list(range(ground_size))
        rng.shuffle(ids)
        blocks: list[list[int]] = []
        caps: list[int] = []
        pos = 0
        while pos < ground_size:
            size = min(rng.randint(1, 3), ground_size - pos)
            blocks.append(ids[pos:pos + size])
            caps.append(2 if rng.random() < 0.2 else 1)
            pos += size
        return Matroid.partition(blocks, caps, ground_size)
    if kind == "graphic":
        vertices = n + 2
        while True:
            edges = []
            for _ in range(ground_size):
                u = rng.randrange(vertices)
                v = rng.randrange(vertices - 1)
                if v >= u:
                    v += 1
                edges.append((min(u, v), max(u, v)))
            matroid = Matroid.graphic(vertices, edges)
            if matroid.rank(range(ground_size)) >= n:
                return matroid
    if kind == "linear":
        p = 7
        dim = n + 1
        while True:
            columns = []
            for _ in range(ground_size):
                vec = [0] * dim
                while not any(vec):
                    vec = [rng.randrange(p) for _ in range(dim)]
                columns.append(vec)
            matroid = Matroid.linear(p, columns)
            if matroid.rank(range(ground_size)) >= n:
                return matroid
    raise InstanceError(f"unknown matroid class {kind!r}")


def gen_random_family(matroid_m: Matroid, matroid_n: Matroid, n: int,
                      seed: int, restarts: int = 200) -> Family:
    """Randomized greedy family builder, deterministic in the seed.

    Draws n pairwise disjoint n-sets, each independent in both matroids, by
    scanning a reshuffled pool per set.  Raises GenerationError after the
    restart budget.
    """
    if matroid_m.ground_size != matroid_n.ground_size:
        raise InstanceError("matroids must share one ground set")
    g = matroid_m.ground_size
    if g < n * n:
        raise InstanceError(f"ground size {g} below n^2={n * n}")
    if (matroid_m.rank(range(g)) < n) or (matroid_n.rank(range(g)) < n):
        raise InstanceError("matroid ranks must be at least n")
    rng = random.Random(seed)
    pool = list(range(g))
    for _ in range(restarts):
        used: set[int] = set()
        sets: list[frozenset[int]] = []
        ok = True
        for _ in range(n):
            rng.shuffle(pool)
            ext_m = matroid_m.extender()
            ext_n = matroid_n.extender()
            cur: set[int] = set()
            for e in pool:
                if e in used:
                    continue
                if ext_m.can_add(e) and ext_n.can_add(e):
                    ext_m.add(e)
                    ext_n.add(e)
                    cur.add(e)
                    if len(cur) == n:
                        break
            if len(cur) < n:
                ok = False
                break
            used |= cur
            sets.append(frozenset(cur))
        if ok:
            return Family.create(sets, matroid_m, matroid_n)
    raise GenerationError(
        f"no family of {n} disjoint doubly independent {n}-sets found "
        f"within {restarts} restarts")


# ---------------------------------------------------------------------------
# Instance text format


@dataclass
class InstanceMeta:
    seed: int | None = None
    gen: str | None = None


def _serialize_matroid(label: str, matroid: Matroid) -> list[str]:
    v = matroid.variant
    if isinstance(v, Uniform):
        return [f"matroid {label} uniform {v.rank}"]
    if isinstance(v, Partition):
        parts = " ".join(
            ",".join(str(e) for e in block) + f"={cap}"
            for block, cap in zip(v.blocks, v.capacities))
        return [f"matroid {label} partition {parts}"]
    if isinstance(v, Graphic):
        lines = [f"matroid {label} graphic {v.vertices}"]
        lines.extend(f"edge {i} {u} {w}" for i, (u, w) in enumerate(v.edges))
        return lines
    assert isinstance(v, Linear)
    rows = len(v.columns[0]) if v.columns else 0
    lines = [f"matroid {label} linear {v.prime} {rows}"]
    lines.extend(
        f"col {i} " + " ".join(str(x) for x in col)
        for i, col in enumerate(v.columns))
    return lines


def serialize(family: Family, meta: InstanceMeta | None = None) -> str:
    lines = ["rainbow-instance v1"]
    if meta is not None and (meta.seed is not None or meta.gen is not None):
        parts = []
        if meta.seed is not None:
            parts.append(f"seed={meta.seed}")
        if meta.gen is not None:
            parts.append(f"gen={meta.gen}")
        lines.append("# " + " ".join(parts))
    lines.append(f"ground {family.matroid_m.ground_size}")
    lines.extend(_serialize_matroid("M", family.matroid_m))
    lines.extend(_serialize_matroid("N", family.matroid_n))
    lines.append(f"family {family.n}")
    for i, s in enumerate(family.sets):
        lines.append(f"set {i + 1}: " + " ".join(str(e) for e in sorted(s)))
    return "\n".join(lines) + "\n"


class _Reader:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0
        self.meta = InstanceMeta()

    def next_line(self) -> tuple[int, str] | None:
        while self.pos < len(self.lines):
            lineno = self.pos + 1
            raw = self.lines[self.pos]
            self.pos += 1
            stripped = raw.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                for token in stripped[1:].split():
                    if token.startswith("seed="):
                        try:
                            self.meta.seed = int(token[5:])
                        except ValueError:
                            pass
                    elif token.startswith("gen="):
                        self.meta.gen = token[4:]
                continue
            return lineno, stripped
        return None

    def require(self, what: str) -> tuple[int, str]:
        got = self.next_line()
        if got is None:
            raise ParseError(f"unexpected end of file, expected {what}",
                             len(self.lines) + 1)
        return got


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"invalid {what} {token!r}", lineno) from None


def _parse_matroid(reader: _Reader, label: str, ground: int) -> Matroid:
    lineno, line = reader.require(f"matroid {label}")
    fields = line.split()
    if len(fields) < 3 or fields[0] != "matroid" or fields[1] != label:
        raise ParseError(f"expected 'matroid {label} ...', got {line!r}", lineno)
    kind = fields[2]
    try:
        if kind == "uniform":
            if len(fields) != 4:
                raise ParseError("uniform takes one rank argument", lineno)
            return Matroid.uniform(_parse_int(fields[3], "rank", lineno), ground)
        if kind == "partition":
            blocks = []
            caps = []
            for part in fields[3:]:
                if "=" not in part:
                    raise ParseError(f"block {part!r} missing '=<cap>'", lineno)
                ids, cap = part.rsplit("=", 1)
                blocks.append([_parse_int(x, "element", lineno)
                               for x in ids.split(",") if x])
                caps.append(_parse_int(cap, "capacity", lineno))
            return Matroid.partition(blocks, caps, ground)
        if kind == "graphic":
            if len(fields) != 4:
                raise ParseError("graphic takes one vertex-count argument", lineno)
            vertices = _parse_int(fields[3], "vertex count", lineno)
            edges: list[tuple[int, int]] = [None] * ground  # type: ignore
            for _ in range(ground):
                elineno, eline = reader.require("edge line")
                ef = eline.split()
                if len(ef) != 4 or ef[0] != "edge":
                    raise ParseError(f"expected 'edge <id> <u> <v>', got {eline!r}",
                                     elineno)
                eid = _parse_int(ef[1], "edge id", elineno)
                if not 0 <= eid < ground or edges[eid] is not None:
                    raise ParseError(f"bad or repeated edge id {eid}", elineno)
                edges[eid] = (_parse_int(ef[2], "endpoint", elineno),
                              _parse_int(ef[3], "endpoint", elineno))
            return Matroid.graphic(vertices, edges)
        if kind == "linear":
            if len(fields) != 5:
                raise ParseError("linear takes prime and row count", lineno)
            prime = _parse_int(fields[3], "prime", lineno)
            rows = _parse_int(fields[4], "row count", lineno)
            columns: list[tuple[int, ...] | None] = [None] * ground
            for _ in range(ground):
                clineno, cline = reader.require("col line")
                cf = cline.split()
                if len(cf) != 2 + rows or cf[0] != "col":
                    raise ParseError(
                        f"expected 'col <id> <{rows} entries>', got {cline!r}",
                        clineno)
                cid = _parse_int(cf[1], "column id", clineno)
                if not 0 <= cid < ground or columns[cid] is not None:
                    raise ParseError(f"bad or repeated column id {cid}", clineno)
                columns[cid] = tuple(_parse_int(x, "entry", clineno)
                                     for x in cf[2:])
            return Matroid.linear(prime, columns)  # type: ignore[arg-type]
        raise ParseError(f"unknown matroid class {kind!r}", lineno)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from exc


def parse(text: str) -> tuple[Family, InstanceMeta]:
    """Parse instance text; positioned ParseError on malformed input,
    FamilyError on semantic violations."""
    reader = _Reader(text)
    lineno, header = reader.require("header")
    if header != "rainbow-instance v1":
        raise ParseError(f"bad header {header!r}", lineno)
    lineno, gline = reader.require("ground line")
    gf = gline.split()
    if len(gf) != 2 or gf[0] != "ground":
        raise ParseError(f"expected 'ground <size>', got {gline!r}", lineno)
    ground = _parse_int(gf[1], "ground size", lineno)
    matroid_m = _parse_matroid(reader, "M", ground)
    matroid_n = _parse_matroid(reader, "N", ground)
    lineno, fline = reader.require("family line")
    ff = fline.split()
    if len(ff) != 2 or ff[0] != "family":
        raise ParseError(f"expected 'family <n>', got {fline!r}", lineno)
    n = _parse_int(ff[1], "family size", lineno)
    sets = []
    for i in range(n):
        slineno, sline = reader.require(f"set {i + 1}")
        prefix = f"set {i + 1}:"
        if not sline.startswith(prefix):
            raise ParseError(f"expected '{prefix} ...', got {sline!r}", slineno)
        sets.append(frozenset(_parse_int(x, "element", slineno)
                              for x in sline[len(prefix):].split()))
    extra = reader.next_line()
    if extra is not None:
        raise ParseError(f"unexpected trailing line {extra[1]!r}", extra[0])
    return Family.create(sets, matroid_m, matroid_n), reader.meta
