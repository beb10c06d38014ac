import pytest
from hypothesis import given

from conftest import graphs, retag_line
from linewidth.congestion import LeafEmbedding, min_tree_congestion, vertex_congestion
from linewidth.decompositions import (
    PathDecomposition,
    SUBJECT_GRAPH,
    SUBJECT_LINE,
    TreeDecomposition,
    decomposition_from_embedding,
    expand_to_line,
    is_leaf_base_form,
    limit_tree_degree,
    line_to_graph_decomposition,
    normalize_line_decomposition,
    validate,
    width,
)
from linewidth.exact import exact_treewidth
from linewidth.graphs import (
    DomainError,
    Graph,
    complete_graph,
    line_graph,
    path_graph,
    star_graph,
)


def test_validate_single_bag_over_triangle():
    d = TreeDecomposition([1], [], {1: {1, 2, 3}})
    assert validate(d, complete_graph(3)).ok
    assert width(d) == 2


def test_validate_uncovered_edge():
    d = TreeDecomposition([1, 2], [(1, 2)], {1: {1}, 2: {2}})
    rep = validate(d, complete_graph(2))
    assert not rep.ok and rep.condition == "edge-coverage"
    assert "{1,2}" in rep.witness


def test_validate_by_hand_example():
    g = Graph(3, [(1, 2), (1, 3)])
    d = TreeDecomposition([1, 2], [(1, 2)], {1: {1, 2}, 2: {1, 3}})
    assert validate(d, g).ok
    assert width(d) == 1


def test_validate_disconnected_occurrences():
    g = path_graph(3)
    d = TreeDecomposition(
        [1, 2, 3], [(1, 2), (2, 3)], {1: {1, 2}, 2: {2, 3}, 3: {1, 3}}
    )
    rep = validate(d, g)
    assert not rep.ok and rep.condition == "element-connectivity"


def test_validate_range_error_is_distinct():
    d = TreeDecomposition([1], [], {1: {9}})
    with pytest.raises(DomainError, match="out of range"):
        validate(d, complete_graph(2))


def test_width_requires_bags():
    with pytest.raises(DomainError):
        width(PathDecomposition([]))


def test_structure_errors_at_construction():
    with pytest.raises(DomainError):  # cycle
        TreeDecomposition([1, 2, 3], [(1, 2), (2, 3), (1, 3)], {1: set(), 2: set(), 3: set()})
    with pytest.raises(DomainError):  # disconnected
        TreeDecomposition([1, 2, 3], [(1, 2)], {1: set(), 2: set(), 3: set()})


def test_expand_star_decomposition():
    g = star_graph(3)  # centre 4, edges (1,4),(2,4),(3,4)
    d = PathDecomposition([{4, 1}, {4, 2}, {4, 3}], SUBJECT_GRAPH)
    expanded = expand_to_line(d, g)
    assert isinstance(expanded, PathDecomposition)
    assert validate(expanded, g).ok
    assert width(expanded) == 2  # every bag holds all 3 edges of the star
    assert width(expanded) <= (width(d) + 1) * g.max_degree() - 1


def test_expand_single_bag_triangle():
    g = complete_graph(3)
    d = TreeDecomposition([1], [], {1: {1, 2, 3}})
    expanded = expand_to_line(d, g)
    assert width(expanded) == 2


def test_expand_path_decomposition_of_p4():
    # middle bag {2,3} collects all three edges, so direct expansion gives
    # width 2, inside the (1+1)*2 - 1 = 3 bound
    g = path_graph(4)
    d = PathDecomposition([{1, 2}, {2, 3}, {3, 4}], SUBJECT_GRAPH)
    expanded = expand_to_line(d, g)
    assert validate(expanded, g).ok
    assert [sorted(b) for b in expanded.bags] == [[1, 2], [1, 2, 3], [2, 3]]
    assert width(expanded) == 2 <= (width(d) + 1) * g.max_degree() - 1


@given(graphs(min_vertices=2, max_vertices=6, min_edges=1))
def test_expand_width_bound(g):
    d = exact_treewidth(g).decomposition
    expanded = expand_to_line(d, g)
    assert validate(expanded, g).ok
    assert width(expanded) <= (width(d) + 1) * g.max_degree() - 1


def test_normalize_single_bag_triangle():
    g = complete_graph(3)
    d = TreeDecomposition([1], [], {1: {1, 2, 3}}, SUBJECT_LINE)
    form = normalize_line_decomposition(d, g)
    assert width(form.decomposition) == 2
    assert is_leaf_base_form(form.decomposition, form.base, g)
    leaf_count = sum(
        1 for n in form.decomposition.nodes
        if len(form.decomposition.adjacency()[n]) == 1
    )
    assert leaf_count == 3


def test_normalize_two_bag_path_graph():
    g = path_graph(3)  # L(P_3) = K_2 with edge ids 1, 2
    d = TreeDecomposition([1, 2], [(1, 2)], {1: {1}, 2: {1, 2}}, SUBJECT_LINE)
    form = normalize_line_decomposition(d, g)
    assert width(form.decomposition) == 1
    assert is_leaf_base_form(form.decomposition, form.base, g)


def test_normalize_idempotent_width():
    g = complete_graph(4)
    lg, _ = line_graph(g)
    d = retag_line(exact_treewidth(lg).decomposition)
    first = normalize_line_decomposition(d, g)
    second = normalize_line_decomposition(first.decomposition, g)
    assert width(second.decomposition) == width(first.decomposition)


def test_normalize_requires_edges_and_line_subject():
    with pytest.raises(DomainError):
        normalize_line_decomposition(
            TreeDecomposition([1], [], {1: set()}, SUBJECT_LINE), Graph(3)
        )
    g = complete_graph(3)
    with pytest.raises(DomainError):
        normalize_line_decomposition(TreeDecomposition([1], [], {1: {1, 2, 3}}), g)


@given(graphs(min_vertices=2, max_vertices=6, min_edges=1))
def test_normalize_is_width_safe_and_monotone(g):
    lg, _ = line_graph(g)
    d = retag_line(exact_treewidth(lg).decomposition)
    form = normalize_line_decomposition(d, g)
    assert validate(form.decomposition, g).ok
    assert width(form.decomposition) <= width(d)
    assert is_leaf_base_form(form.decomposition, form.base, g)
    # rebuilt bags shrink: surviving original nodes keep a subset bag
    for node in form.decomposition.nodes:
        if node in d.bags:
            assert form.decomposition.bags[node] <= d.bags[node]


def test_line_to_graph_triangle():
    g = complete_graph(3)
    lg, _ = line_graph(g)
    d = retag_line(exact_treewidth(lg).decomposition)
    out = line_to_graph_decomposition(d, g)
    assert validate(out, g).ok
    assert width(out) <= width(d) + 1


def test_line_to_graph_star():
    g = star_graph(3)  # tw 1, L = K_3 with tw 2: validity is the real check
    lg, _ = line_graph(g)
    d = retag_line(exact_treewidth(lg).decomposition)
    out = line_to_graph_decomposition(d, g)
    assert validate(out, g).ok
    assert width(out) <= width(d) + 1


def test_line_to_graph_p3():
    g = path_graph(3)
    d = TreeDecomposition([1, 2], [(1, 2)], {1: {1}, 2: {1, 2}}, SUBJECT_LINE)
    out = line_to_graph_decomposition(d, g)
    assert validate(out, g).ok
    assert width(out) <= width(d) + 1 == 2


@given(graphs(min_vertices=2, max_vertices=6, min_edges=1))
def test_line_to_graph_always_valid(g):
    lg, _ = line_graph(g)
    d = retag_line(exact_treewidth(lg).decomposition)
    out = line_to_graph_decomposition(d, g)
    assert validate(out, g).ok
    assert width(out) <= width(d) + 1


def test_decomposition_from_embedding_star_tree():
    g = complete_graph(3)
    e = LeafEmbedding((1, 2, 3, 4), [(1, 4), (2, 4), (3, 4)], {1: 1, 2: 2, 3: 3})
    dec, base = decomposition_from_embedding(e, g)
    assert validate(dec, g).ok
    assert width(dec) == 2
    assert base.by_vertex == {1: 1, 2: 2, 3: 3}


def test_decomposition_from_embedding_single_edge():
    g = complete_graph(2)
    e = LeafEmbedding((1, 2), [(1, 2)], {1: 1, 2: 2})
    dec, _ = decomposition_from_embedding(e, g)
    assert width(dec) == 0


def test_decomposition_from_embedding_c4_caterpillar():
    # 4-cycle on a caterpillar, opposite vertices 1 and 3 on far leaves:
    # each spine node carries three routed edges, so congestion is 3 and
    # the decomposition read off the embedding has width 2
    g = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    e = LeafEmbedding(
        (1, 2, 3, 4, 5, 6),
        [(1, 5), (2, 5), (5, 6), (6, 3), (6, 4)],
        {1: 1, 2: 2, 3: 3, 4: 4},
    )
    value, _ = vertex_congestion(e, g)
    dec, _ = decomposition_from_embedding(e, g)
    assert validate(dec, g).ok
    assert value == 3
    assert width(dec) == value - 1 == 2


@given(graphs(min_vertices=2, max_vertices=6, min_edges=1))
def test_embedding_width_is_congestion_minus_one(g):
    cert = min_tree_congestion(g)
    dec, _ = decomposition_from_embedding(cert.embedding, g)
    assert validate(dec, g).ok
    assert width(dec) + 1 == vertex_congestion(cert.embedding, g)[0] == cert.value


def test_normalize_single_edge_graph_gives_two_leaves():
    g = complete_graph(2)
    d = TreeDecomposition(
        [1, 2, 3], [(1, 2), (2, 3)], {1: {1}, 2: {1}, 3: {1}}, SUBJECT_LINE
    )
    form = normalize_line_decomposition(d, g)
    assert len(form.decomposition.nodes) == 2
    assert width(form.decomposition) == 0
    assert is_leaf_base_form(form.decomposition, form.base, g)


def test_normalize_accepts_path_decomposition_input():
    g = star_graph(3)
    lg, _ = line_graph(g)
    pd = PathDecomposition([{1, 2, 3}], SUBJECT_LINE)
    assert validate(pd, g).ok
    form = normalize_line_decomposition(pd, g)
    assert is_leaf_base_form(form.decomposition, form.base, g)
    assert width(form.decomposition) == 2


def test_line_to_graph_keeps_isolated_vertices():
    g = Graph(5, [(1, 2), (1, 3), (2, 3)])  # triangle plus two isolated
    lg, _ = line_graph(g)
    d = retag_line(exact_treewidth(lg).decomposition)
    out = line_to_graph_decomposition(d, g)
    assert validate(out, g).ok  # coverage of 4 and 5 forces singleton bags
    singles = [n for n in out.nodes if out.bags[n] in ({4}, {5})]
    assert len(singles) == 2


def test_empty_graph_has_empty_line_graph():
    lg, labels = line_graph(Graph(0))
    assert lg.n == 0 and labels == ()
    lg, labels = line_graph(Graph(3))
    assert lg.n == 0


@given(graphs(min_vertices=2, max_vertices=6, min_edges=1))
def test_limit_tree_degree(g):
    d = exact_treewidth(g).decomposition
    shaped = limit_tree_degree(d)
    assert validate(shaped, g).ok
    assert width(shaped) == width(d)
    adj = shaped.adjacency()
    assert all(len(nb) <= 3 for nb in adj.values())
