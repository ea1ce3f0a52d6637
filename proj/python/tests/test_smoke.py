import itertools

import pytest

import edgepart as ep


def test_graph_basics():
    g = ep.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.num_vertices == 4 and g.num_edges == 3
    assert g.degree_set() == [1, 2]
    assert ep.Graph.from_text(g.to_text()).edges() == g.edges()
    with pytest.raises(ep.ParseError):
        ep.Graph.from_text("3 2\n0 1\n1 1\n")


def test_tree_decisions():
    d = ep.wr2_tree(ep.path(6))
    assert d["yes"]
    assert ep.verify_partition(ep.path(6), d["witness"], "weakly-semiregular")
    with pytest.raises(ep.DomainError):
        ep.wr2_tree(ep.cycle(4))
    s = ep.alg3(ep.star(5))
    assert s["labels"] == [0, 2, 2, 2, 2]
    assert s["partition"].part_sizes() == [1, 4]


def test_decompositions_verify():
    pet = ep.petersen()
    assert ep.verify_partition(pet, ep.wr2_deg4(pet), "weakly-semiregular")
    assert ep.verify_partition(pet, ep.sr_general(pet), "semiregular")
    t = ep.star(6)
    assert ep.verify_partition(t, ep.sr_tree(t), "semiregular")


def test_oracle_against_python_brute_force():
    g = ep.star(5)
    k, witness = ep.oracle_min_parts(g, "semiregular")
    assert k == 3
    assert ep.verify_partition(g, witness, "semiregular")
    # Nothing with two labels is semiregular on every part.
    assert not any(
        ep.verify_partition(g, ep.EdgePartition(2, list(p)), "semiregular")
        for p in itertools.product(range(2), repeat=g.num_edges)
    )
    assert ep.oracle_min_parts(g, "semiregular", max_parts=2) is None
    with pytest.raises(ep.ResourceError):
        ep.oracle_min_parts(ep.complete(7), "weakly-semiregular")


def test_representations():
    two_k2 = ep.Graph(4, [(0, 1), (2, 3)])
    rep = ep.rep_search(two_k2)
    assert rep.modulus == 6
    assert ep.verify_rep(two_k2, rep)
    assert ep.rep_search(two_k2, r_max=5) is None
    rep, primes = ep.rep_construct_tfc(ep.complement(ep.petersen()))
    assert primes == [7, 11, 13, 17]
    assert rep.modulus == 17017


def test_nae():
    assert ep.nae_solve([[0, 1], [1, 2], [0, 2]]) is None
    a = ep.nae_solve([[0, 1, 2], [1, 2, 3]])
    assert a is not None and len(a) == 4
