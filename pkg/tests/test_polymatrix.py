import pytest
import sympy

from braidrep.braid import BraidWord, permutation
from braidrep.errors import DimensionMismatch, DimensionTooLarge, IndexOutOfRange, NotMonomialMatrix
from braidrep.laurent import ONE, var
from braidrep.polymatrix import (
    PolyMatrix,
    block_embed,
    determinant,
    identity,
    is_identity,
    monomial_decompose,
    multiply,
)
from braidrep.rep import BURAU, SIMPLE, evaluate, generator_image

from conftest import random_poly, random_reduced_word, sympy_equal, to_sympy

a, b, c, d, t = (var(x) for x in "abcdt")
SIMPLE_BLOCK = PolyMatrix([[0, t], [b, 0]])


def M(rows):
    return PolyMatrix(rows)


def random_matrix(rng, n, names="abt"):
    return PolyMatrix([[random_poly(rng, names, max_terms=2) for _ in range(n)] for _ in range(n)])


def test_identity():
    assert identity(3) == M([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert identity(1) == M([[1]])
    assert is_identity(identity(4))


def test_identity_law(rng):
    for _ in range(20):
        m = random_matrix(rng, 3)
        assert multiply(identity(3), m) == m
        assert multiply(m, identity(3)) == m


def test_multiply_examples():
    s2 = generator_image(SIMPLE, 2, 1, 3)
    s2inv = generator_image(SIMPLE, 2, -1, 3)
    s1inv = generator_image(SIMPLE, 1, -1, 3)
    assert multiply(s2, s2inv) == identity(3)
    expected = M([[0, 0, "b^-1*t"], [0, "t*b", 0], ["b*t^-1", 0, 0]])
    assert multiply(multiply(s2, s1inv), s2) == expected
    with pytest.raises(DimensionMismatch):
        multiply(identity(2), identity(3))


def test_block_embed():
    assert block_embed(1, SIMPLE_BLOCK, 3) == M([[0, t, 0], [b, 0, 0], [0, 0, 1]])
    assert block_embed(2, SIMPLE_BLOCK, 3) == M([[1, 0, 0], [0, 0, t], [0, b, 0]])
    with pytest.raises(IndexOutOfRange):
        block_embed(1, SIMPLE_BLOCK, 1)
    with pytest.raises(IndexOutOfRange):
        block_embed(3, SIMPLE_BLOCK, 3)


def test_is_identity():
    assert is_identity(evaluate(SIMPLE, BraidWord(3, (2, -2))))
    assert is_identity(evaluate(SIMPLE, BraidWord(3, (1, -2, 1, -2, 1, -2))))
    assert not is_identity(generator_image(SIMPLE, 1, 1, 3))
    assert not is_identity(M([[1, 0], [0, -1]]))


def test_monomial_decompose():
    alternating = M([[0, 0, "b^-1*t"], [0, "t*b", 0], ["b*t^-1", 0, 0]])
    dec = monomial_decompose(alternating)
    assert dec.permutation == (3, 2, 1)
    assert dec.values == (b ** -1 * t, t * b, b * t ** -1)
    assert dec.reassemble() == alternating

    dec = monomial_decompose(identity(3))
    assert dec.permutation == (1, 2, 3)
    assert all(v == ONE for v in dec.values)

    with pytest.raises(NotMonomialMatrix):
        monomial_decompose(generator_image(BURAU, 1, 1, 2))
    with pytest.raises(NotMonomialMatrix):
        monomial_decompose(M([[1 + t, 0], [0, 1]]))
    with pytest.raises(NotMonomialMatrix):
        monomial_decompose(M([[1, 0], [1, 0]]))


def test_determinant_examples():
    assert determinant(SIMPLE_BLOCK) == -b * t
    # ad - bc expanded by hand: (1-b)*0 - b*1 = -b
    assert determinant(M([[1 - b, b], [1, 0]])) == -b
    # a*0 - b*(b^-1 - a*b^-1) = -1 + a
    assert determinant(M([[a, b], [b ** -1 - a * b ** -1, 0]])) == a - 1
    with pytest.raises(DimensionTooLarge):
        determinant(identity(7))


def test_determinant_matches_sympy(rng):
    for n in (1, 2, 3, 4):
        for _ in range(5):
            m = random_matrix(rng, n)
            oracle = sympy.Matrix([[to_sympy(x) for x in row] for row in m.entries]).det()
            assert sympy_equal(determinant(m), oracle)


def test_multiply_associative(rng):
    for _ in range(30):
        x, y, z = (random_matrix(rng, 3) for _ in range(3))
        assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


def test_determinant_multiplicative(rng):
    for _ in range(30):
        x, y = random_matrix(rng, 3), random_matrix(rng, 3)
        assert determinant(multiply(x, y)) == determinant(x) * determinant(y)


def test_monomial_products_compose_permutations(rng):
    for _ in range(100):
        u = random_reduced_word(rng, 4, 6)
        v = random_reduced_word(rng, 4, 6)
        A, B = evaluate(SIMPLE, u), evaluate(SIMPLE, v)
        pa = monomial_decompose(A).permutation
        pb = monomial_decompose(B).permutation
        pab = monomial_decompose(multiply(A, B)).permutation
        assert pab == tuple(pb[j - 1] for j in pa)
        assert pab == permutation(u).then(permutation(v)).mapping


def test_far_blocks_commute(rng):
    for _ in range(20):
        m, k = random_matrix(rng, 2), random_matrix(rng, 2)
        for n in range(4, 7):
            for i in range(1, n):
                for j in range(i + 2, n):
                    x, y = block_embed(i, m, n), block_embed(j, k, n)
                    assert multiply(x, y) == multiply(y, x)


def test_json_roundtrip(rng):
    m = random_matrix(rng, 3)
    assert PolyMatrix.from_json(m.to_json()) == m
    assert M([[0, t], [b, 0]]).to_strings() == [["0", "t"], ["b", "0"]]


def test_ragged_rows_rejected():
    with pytest.raises(DimensionMismatch):
        PolyMatrix([[1, 0], [0]])
