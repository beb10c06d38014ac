"""Small helpers for trees given as adjacency dicts {node: set(neighbours)}."""

from __future__ import annotations

from linewidth.graphs import DomainError


def adjacency(nodes, edges) -> dict[int, set[int]]:
    adj = {n: set() for n in nodes}
    for a, b in edges:
        if a not in adj or b not in adj:
            raise DomainError(f"tree edge ({a},{b}) references an unknown node")
        if a == b:
            raise DomainError(f"tree edge ({a},{b}) is a loop")
        adj[a].add(b)
        adj[b].add(a)
    return adj


def check_tree(adj) -> None:
    """Raise unless adj is a single connected acyclic component."""
    if not adj:
        return
    n = len(adj)
    edge_count = sum(len(s) for s in adj.values()) // 2
    if edge_count != n - 1:
        raise DomainError("node/edge counts do not form a tree")
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise DomainError("tree is not connected")


def tree_path(adj, a: int, b: int) -> list[int]:
    """Node sequence from a to b inclusive."""
    if a == b:
        return [a]
    parent = {a: None}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            break
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    if b not in parent:
        raise DomainError(f"nodes {a} and {b} are not connected")
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def sorted_edges(adj) -> list[tuple[int, int]]:
    out = []
    for a in sorted(adj):
        for b in adj[a]:
            if a < b:
                out.append((a, b))
    return out


def leaves(adj) -> list[int]:
    return sorted(n for n, s in adj.items() if len(s) <= 1)
