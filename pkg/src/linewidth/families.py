"""Generators for the graph families with known sharp line-graph widths,
and the explicit orderings that attain them.

* path-power n k: vertices 1..n, edges between vertices at distance <= k.
* cycle-power n k: same with circular distance.
* cycle-power-matched n k: the cycle power minus the matching
  {(i, n-k+i) : i = 1..k}, and additionally minus
  {(k+1,k+2), (k+3,k+4), ..., (n-k-1,n-k)} when n is even; this drops the
  minimum degree to 2k-1 while keeping the same sharp ordering.
* grid-cliques n k (k >= 4): the n x n grid where every grid vertex v gets
  k - deg(v) pendant cliques of order k+1, each attached by a single edge;
  all degrees become k except the attachment vertices with k+1.

For the power families, placing vertex i at position i of a path gives a
decomposition of the line graph whose width matches the minimum-degree
bound (exactly for even minimum degree).  For grid-cliques the whole group
of a grid vertex (the vertex plus its pendant cliques) shares its position,
which keeps the width linear in n however large the grid gets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from linewidth.congestion import LinearOrdering
from linewidth.decompositions import PathDecomposition, SUBJECT_LINE
from linewidth.exact import exact_treewidth
from linewidth.graphs import (
    DomainError,
    Graph,
    complete_bipartite_graph,
    complete_graph,
    edge_id_map,
    line_graph,
)

FAMILY_NAMES = (
    "complete",
    "complete-bipartite",
    "path-power",
    "cycle-power",
    "cycle-power-matched",
    "grid-cliques",
)

_PARAM_COUNT = {
    "complete": 1,
    "complete-bipartite": 2,
    "path-power": 2,
    "cycle-power": 2,
    "cycle-power-matched": 2,
    "grid-cliques": 2,
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise DomainError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if len(self.params) != _PARAM_COUNT[self.family]:
            raise DomainError(
                f"{self.family} takes {_PARAM_COUNT[self.family]} parameters"
            )
        if self.family == "complete":
            (n,) = self.params
            if n < 1:
                raise DomainError("complete requires n >= 1")
        elif self.family == "complete-bipartite":
            p, q = self.params
            if not p >= q >= 1:
                raise DomainError("complete-bipartite requires p >= q >= 1")
        elif self.family in ("path-power", "cycle-power", "cycle-power-matched"):
            n, k = self.params
            if k < 1:
                raise DomainError(f"{self.family} requires k >= 1")
            if n <= 2 * k:
                raise DomainError(f"{self.family} requires n > 2k")
        elif self.family == "grid-cliques":
            n, k = self.params
            if n < 3:
                raise DomainError("grid-cliques requires n >= 3")
            if k < 4:
                raise DomainError("grid-cliques requires k >= 4 (the grid max degree)")

    @classmethod
    def parse(cls, tokens) -> "FamilySpec":
        if not tokens:
            raise DomainError("missing family name")
        try:
            params = tuple(int(t) for t in tokens[1:])
        except ValueError:
            raise DomainError("family parameters must be integers") from None
        return cls(tokens[0], params)

    def label(self) -> str:
        return " ".join([self.family, *map(str, self.params)])


def _circular_distance(i: int, j: int, n: int) -> int:
    d = abs(i - j)
    return min(d, n - d)


def generate(spec: FamilySpec) -> Graph:
    if spec.family == "complete":
        return complete_graph(spec.params[0])
    if spec.family == "complete-bipartite":
        return complete_bipartite_graph(*spec.params)
    if spec.family == "path-power":
        n, k = spec.params
        return Graph(n, [(i, j) for i in range(1, n) for j in range(i + 1, min(i + k, n) + 1)])
    if spec.family == "cycle-power":
        n, k = spec.params
        return Graph(
            n,
            [
                (i, j)
                for i in range(1, n)
                for j in range(i + 1, n + 1)
                if _circular_distance(i, j, n) <= k
            ],
        )
    if spec.family == "cycle-power-matched":
        return _cycle_power_matched(*spec.params)
    if spec.family == "grid-cliques":
        return _grid_cliques(*spec.params)
    raise DomainError(f"unknown family {spec.family!r}")


def _cycle_power_matched(n: int, k: int) -> Graph:
    power = generate(FamilySpec("cycle-power", (n, k)))
    removed = {(i, n - k + i) for i in range(1, k + 1)}
    if n % 2 == 0:
        removed |= {(j, j + 1) for j in range(k + 1, n - k, 2)}
    edges = [e for e in power.edges if e not in removed]
    h = Graph(n, edges)
    if h.min_degree() != 2 * k - 1:  # construction guarantee
        raise DomainError("matched cycle power lost the intended minimum degree")
    return h


def _grid_cliques(n: int, k: int) -> Graph:
    def grid_id(r: int, c: int) -> int:
        return (r - 1) * n + c

    edges: list[tuple[int, int]] = []
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            if c < n:
                edges.append((grid_id(r, c), grid_id(r, c + 1)))
            if r < n:
                edges.append((grid_id(r, c), grid_id(r + 1, c)))
    grid_degree = {
        grid_id(r, c): (2 <= r <= n - 1) + (2 <= c <= n - 1) + 2
        for r in range(1, n + 1)
        for c in range(1, n + 1)
    }
    next_id = n * n + 1
    groups: dict[int, list[int]] = {v: [] for v in grid_degree}
    for v in sorted(grid_degree):
        for _ in range(k - grid_degree[v]):
            members = list(range(next_id, next_id + k + 1))
            next_id += k + 1
            edges.append((v, members[0]))  # attachment vertex first
            for i in range(len(members)):
                for j in range(i + 1, len(members)):
                    edges.append((members[i], members[j]))
            groups[v].extend(members)
    g = Graph(next_id - 1, edges)
    for v in g.vertices:
        expected = k + 1 if _is_attachment(v, n, k) else k
        if g.degree(v) != expected:
            raise DomainError("grid-cliques degrees are off; generator bug")
    return g


def _is_attachment(v: int, n: int, k: int) -> bool:
    if v <= n * n:
        return False
    return (v - n * n - 1) % (k + 1) == 0


def grid_clique_positions(n: int, k: int) -> dict[int, int]:
    """Path position of every vertex: grid vertex i sits at i (row-major
    labelling), and each pendant clique shares its grid vertex's position."""
    g = generate(FamilySpec("grid-cliques", (n, k)))
    positions = {v: v for v in range(1, n * n + 1)}
    for v in range(n * n + 1, g.n + 1):
        # find the grid vertex this clique member hangs from
        offset = (v - n * n - 1) // (k + 1)
        positions[v] = _attachment_owner(n, k, offset)
    return positions


def _attachment_owner(n: int, k: int, clique_index: int) -> int:
    count = 0
    for v in range(1, n * n + 1):
        r, c = divmod(v - 1, n)
        deg = (1 <= r <= n - 2) + (1 <= c <= n - 2) + 2
        cliques_here = k - deg
        if clique_index < count + cliques_here:
            return v
        count += cliques_here
    raise DomainError("clique index out of range")


def positional_line_decomposition(g: Graph, positions: dict[int, int]) -> PathDecomposition:
    """Path decomposition of L(g) from a position assignment (not
    necessarily injective): bag i holds the edges whose endpoint positions
    straddle i.  Always valid; the bag at a vertex's position contains all
    of its incident edges."""
    for v in g.non_isolated_vertices():
        if v not in positions:
            raise DomainError(f"vertex {v} has no position")
    ids = edge_id_map(g)
    top = max(positions.values())
    if min(positions.values()) < 1:
        raise DomainError("positions must be >= 1")
    bags: list[set[int]] = [set() for _ in range(top)]
    for u, v in g.edges:
        lo, hi = sorted((positions[u], positions[v]))
        for i in range(lo, hi + 1):
            bags[i - 1].add(ids[(u, v)])
    return PathDecomposition(bags, SUBJECT_LINE)


@dataclass(frozen=True)
class SharpConstruction:
    spec: FamilySpec
    ordering: LinearOrdering | None  # None when positions are shared
    decomposition: PathDecomposition
    width: int
    closed_form: int
    closed_form_is_upper: bool  # grid-cliques only bounds the width


def sharp_embedding(spec: FamilySpec) -> SharpConstruction:
    """The stated sharp ordering of a family, rebuilt into a decomposition
    of the line graph: vertex i at path position i for the power families,
    whole grid groups sharing a position for grid-cliques."""
    g = generate(spec)
    if spec.family in ("path-power", "cycle-power", "cycle-power-matched"):
        n, k = spec.params
        positions = {v: v for v in g.vertices}
        ordering = LinearOrdering(range(1, n + 1))
        if spec.family == "path-power":
            closed, is_upper = (k * k + 3 * k) // 2 - 1, False
        elif spec.family == "cycle-power":
            closed, is_upper = k * k + 2 * k - 1, False
        else:
            closed = k * k + k - 1 if n % 2 else k * k + k - 2
            is_upper = False
    elif spec.family == "grid-cliques":
        n, k = spec.params
        positions = grid_clique_positions(n, k)
        ordering = None
        closed, is_upper = 4 * n + 4 + (k - 2) * (k * (k + 1) // 2 + 1) - 1, True
    else:
        raise DomainError(f"no sharp construction for family {spec.family!r}")
    dec = positional_line_decomposition(g, positions)
    w = max(len(b) for b in dec.bags) - 1
    if is_upper:
        if w > closed:
            raise DomainError("construction exceeded its closed-form bound")
    elif w != closed:
        raise DomainError(
            f"construction width {w} differs from the closed form {closed}"
        )
    return SharpConstruction(spec, ordering, dec, w, closed, is_upper)


@dataclass(frozen=True)
class BipartiteCheck:
    bound: Fraction
    exact: int
    holds: bool


def bipartite_lower_check(p: int, q: int, solver_limit: int = 20) -> BipartiteCheck:
    """pq/2 - 1 <= tw(L(K_{p,q})), checked against the exact solver.
    L(K_{p,q}) has pq vertices (the clique-product grid), so pq must stay
    within the solver limit."""
    spec = FamilySpec("complete-bipartite", (p, q))
    lg, _ = line_graph(generate(spec))
    exact = exact_treewidth(lg, solver_limit).width
    bound = Fraction(p * q, 2) - 1
    return BipartiteCheck(bound, exact, bound <= exact)
