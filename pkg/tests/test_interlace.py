import random

from qgc.constructions import circulant_graph, circulant_row_from_text
from qgc.graphs import Graph, relabel
from qgc.interlace import interlace_q
from qgc.orbits import classify


def test_k2():
    q = interlace_q(Graph.complete(2))
    assert q.coeffs == (0, 3)
    assert q.degree() == 1


def test_k3():
    q = interlace_q(Graph.complete(3))
    assert q.degree() == 2
    assert q(1) == sum(q.coeffs)


def test_hexacode_degree_two():
    hexg = circulant_graph(circulant_row_from_text("w01110"))
    q = interlace_q(hexg)
    assert q.degree() == 2  # so PAR_IHN = 2^2 = 4


def test_edgeless_base_case():
    q = interlace_q(Graph.empty(3))
    assert q.coeffs == (0, 0, 0, 1)


def test_degree_equals_lambda_n_le_6():
    for n in range(1, 7):
        for r in classify(n):
            assert interlace_q(r.graph()).degree() == r.lam


def test_isomorphism_invariance():
    rng = random.Random(9)
    for r in classify(5):
        g = r.graph()
        q = interlace_q(g)
        for _ in range(5):
            p = list(range(g.n))
            rng.shuffle(p)
            assert interlace_q(relabel(g, p)).coeffs == q.coeffs


def test_str():
    assert str(interlace_q(Graph.complete(2))) == "3z^1"
