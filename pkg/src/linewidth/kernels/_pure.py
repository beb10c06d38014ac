"""Pure-Python subset-DP kernels over bitmask adjacency.

Each kernel takes ``masks``, a list where ``masks[i]`` is the neighbour
bitmask of vertex i (bit j set iff i~j), and fills a table indexed by
vertex subsets S in 0..2^n-1:

* ``treewidth_table``: tw over elimination orderings.
  t[S] = min over v in S of max(t[S-v], q(S-v, v)) where q(T, v) counts the
  vertices outside T+{v} reachable from v through T.  q is the degree of v
  at the moment it is eliminated after T.  t[full] is the treewidth.

* ``vertex_separation_table``: pathwidth as vertex separation.
  t[S] = max(border(S), min over v in S of t[S-v]) where border(S) counts
  vertices of S with a neighbour outside S.  t[full] is the pathwidth.

* ``cutwidth_table``: same shape with border replaced by cross(S), the
  number of edges leaving S.  t[full] is the cutwidth.

* ``path_congestion_table``: minimum over vertex orderings of the largest
  number of edges vw whose endpoint positions satisfy pos(v) <= i <= pos(w)
  for some position i.  With S the set placed first and u last in S, the
  count at position |S| is cross(S) + |N(u) & S|, hence
  t[S] = min over u in S of max(t[S-u], cross(S) + |N(u) & S|).
  t[full] equals pw(L(G)) + 1 for the graph restricted to placed vertices.

The compiled kernels in ``_core`` mirror these exactly; results must agree
bit for bit.
"""

from __future__ import annotations

MAX_KERNEL_VERTICES = 25

_BIG = 1 << 30


def _check(masks) -> int:
    n = len(masks)
    if n > MAX_KERNEL_VERTICES:
        raise ValueError(f"kernels support at most {MAX_KERNEL_VERTICES} vertices")
    return n


def elimination_reach_count(masks, t: int, v: int) -> int:
    """Degree of v when eliminated right after the set t: the number of
    vertices outside t+{v} joined to v by a path with interior inside t."""
    bit = 1 << v
    comp = bit
    reach = masks[v]
    frontier = masks[v] & t
    while frontier:
        comp |= frontier
        grown = 0
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grown |= masks[low.bit_length() - 1]
        reach |= grown
        frontier = grown & t & ~comp
    return (reach & ~t & ~bit).bit_count()


def border_size(masks, s: int) -> int:
    """Vertices of s with at least one neighbour outside s."""
    count = 0
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        if masks[low.bit_length() - 1] & ~s:
            count += 1
    return count


def cross_size(masks, s: int) -> int:
    """Edges with exactly one endpoint in s."""
    count = 0
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        count += (masks[low.bit_length() - 1] & ~s).bit_count()
    return count


def treewidth_table(masks):
    n = _check(masks)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = _BIG
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            t = s ^ low
            q = elimination_reach_count(masks, t, v)
            prev = table[t]
            cand = prev if prev > q else q
            if cand < best:
                best = cand
        table[s] = best
    return table


def vertex_separation_table(masks):
    n = _check(masks)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = _BIG
        border = 0
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if masks[low.bit_length() - 1] & ~s:
                border += 1
            prev = table[s ^ low]
            if prev < best:
                best = prev
        table[s] = best if best > border else border
    return table


def cutwidth_table(masks):
    n = _check(masks)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        best = _BIG
        cross = 0
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            cross += (masks[low.bit_length() - 1] & ~s).bit_count()
            prev = table[s ^ low]
            if prev < best:
                best = prev
        table[s] = best if best > cross else cross
    return table


def path_congestion_table(masks):
    n = _check(masks)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        cross = cross_size(masks, s)
        best = _BIG
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            at_u = cross + (masks[u] & s).bit_count()
            prev = table[s ^ low]
            cand = prev if prev > at_u else at_u
            if cand < best:
                best = cand
        table[s] = best
    return table
