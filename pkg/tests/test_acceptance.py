"""Exit criteria. Each test logs one PASS/FAIL line (see the terminal summary).

All checks are exact; the only tolerances are the wall-clock budgets.
"""

import itertools
import random

from braidrep.braid import BraidWord, compose, free_reduce, inverse, is_freely_reduced, parse_word, permutation
from braidrep.laurent import var
from braidrep.path_oracle import path_matrix
from braidrep.polymatrix import PolyMatrix, determinant, identity, is_identity, monomial_decompose, multiply
from braidrep.rep import BURAU, SIMPLE, Label, classify_case, cubic_residual, evaluate, make_spec
from braidrep.search import SearchConfig, search_kernel
from braidrep.verify import check_relations, verify_kernel_witness

from conftest import random_poly, random_reduced_word, random_word

a, b, c, d = (var(x) for x in "abcd")


def M(rows):
    return PolyMatrix(rows)


def W(n, *letters):
    return BraidWord(n, letters)


def test_ac1_golden_matrices(criterion):
    with criterion("AC1 golden matrices of the simple representation", 1.0):
        assert evaluate(SIMPLE, W(3, 1)) == M([[0, "t", 0], ["b", 0, 0], [0, 0, 1]])
        assert evaluate(SIMPLE, W(3, 2)) == M([[1, 0, 0], [0, 0, "t"], [0, "b", 0]])
        assert evaluate(SIMPLE, W(3, -1)) == M([[0, "b^-1", 0], ["t^-1", 0, 0], [0, 0, 1]])
        assert evaluate(SIMPLE, W(3, -2)) == M([[1, 0, 0], [0, 0, "b^-1"], [0, "t^-1", 0]])
        assert evaluate(SIMPLE, W(3, 2, -2)) == identity(3)
        assert evaluate(SIMPLE, W(3, 2, -1, 2)) == M([[0, 0, "b^-1*t"], [0, "t*b", 0], ["b*t^-1", 0, 0]])
        braid_block = M([[0, 0, "t^2"], [0, "t*b", 0], ["b^2", 0, 0]])
        assert evaluate(SIMPLE, W(3, 1, 2, 1)) == braid_block
        assert evaluate(SIMPLE, W(3, 2, 1, 2)) == braid_block


def test_ac2_relation_suites(criterion):
    specs = [SIMPLE, BURAU, make_spec("case1"), make_spec("case2"), make_spec("case3")]
    with criterion("AC2 braid relations, 5 families x n=3..6", 10.0):
        for spec in specs:
            for n in range(3, 7):
                report = check_relations(spec, n)
                assert report.passed, (str(spec), n, report)


def test_ac3_residual_reproduction(criterion):
    with criterion("AC3 cubic residual matches the displayed 3x3 matrix", 1.0):
        displayed = M(
            [
                ["a*b*c + a^2 - a", "a*b*d", 0],
                ["a*c*d", "-a^2*d + a*d^2", "-a*b*d"],
                [0, "-a*c*d", "-b*c*d - d^2 + d"],
            ]
        )
        assert cubic_residual(a, b, c, d) == displayed


def _brute_force_admissible(a_, b_, c_, d_) -> bool:
    """Residual zero, nonsingular, not the identity; plain integer arithmetic only."""
    s1 = [[a_, b_, 0], [c_, d_, 0], [0, 0, 1]]
    s2 = [[1, 0, 0], [0, a_, b_], [0, c_, d_]]

    def mm(x, y):
        return [[sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3)] for i in range(3)]

    residual_zero = mm(mm(s1, s2), s1) == mm(mm(s2, s1), s2)
    nonsingular = a_ * d_ - b_ * c_ != 0
    nontrivial = (a_, b_, c_, d_) != (1, 0, 0, 1)
    return residual_zero and nonsingular and nontrivial


def test_ac4_classification_agreement(criterion):
    grid = range(-2, 3)
    with criterion("AC4 classification agrees with brute force on 625 tuples", 5.0):
        tuples = list(itertools.product(grid, repeat=4))
        assert len(tuples) == 625
        accepted = 0
        overlaps = 0
        for a_, b_, c_, d_ in tuples:
            label = classify_case(a_, b_, c_, d_)
            oracle = _brute_force_admissible(a_, b_, c_, d_)
            assert label.admissible == oracle, ((a_, b_, c_, d_), label)
            if oracle:
                accepted += 1
                raw_conditions = [
                    d_ == 0 and b_ * c_ == 1 - a_ and a_ != 1,
                    a_ == 0 and b_ * c_ == 1 - d_ and d_ != 1,
                    a_ == 0 and d_ == 0 and b_ != 0 and c_ != 0,
                ]
                assert any(raw_conditions)
                assert label.label in (Label.CASE1, Label.CASE2, Label.CASE3)
                overlaps += sum(raw_conditions) > 1
            if (a_, b_, c_, d_) == (1, 0, 0, 1):
                assert label.label is Label.TRIVIAL
        assert accepted > 0
        print(f"accepted {accepted} tuples, {overlaps} satisfy more than one case condition")


def test_ac5_oracle_equivalence(criterion):
    rng = random.Random(5)
    with criterion("AC5 path analysis equals matrix product on 1000 words", 30.0):
        for _ in range(1000):
            n = rng.randint(2, 5)
            w = random_reduced_word(rng, n, 16)
            assert is_freely_reduced(w)
            assert path_matrix(w) == evaluate(SIMPLE, w)


def test_ac6_kernel_witnesses(criterion):
    alpha = parse_word("s1^-1 s2^2 s1^-1 s2^-1 s1^2 s2^-1", 3)
    beta = parse_word("s2^-1 s1^2 s2^-1 s1^-1 s2^2 s1^-1", 3)
    witnesses = [
        W(3, 1, -2, 1, -2, 1, -2),
        compose(alpha, inverse(beta)),
        parse_word("s1^2 s3^2 s2 s3^-2 s1^-2 s2^-1", 4),
    ]
    with criterion("AC6 the three kernel witnesses certify", 5.0):
        for w in witnesses:
            assert is_identity(evaluate(SIMPLE, w))
            assert not is_identity(evaluate(BURAU, w))
            assert verify_kernel_witness(SIMPLE, w).certified


def test_ac7_search_reproduces_length6_witness(criterion):
    target = (1, -2, 1, -2, 1, -2)
    symmetric = {target, inverse(W(3, *target)).letters, tuple(3 * (1 if k > 0 else -1) - k for k in target)}
    with criterion("AC7 search finds the length-6 witness and nothing shorter", 60.0):
        r6 = search_kernel(SearchConfig(n=3, max_len=6))
        found = {w.word.letters for w in r6.witnesses}
        assert found & symmetric
        assert all(w.certified for w in r6.witnesses)
        r5 = search_kernel(SearchConfig(n=3, max_len=5))
        assert r5.witnesses == []
        # exhaustive cross-check through the path oracle
        letters = (-2, -1, 1, 2)
        for L in range(1, 6):
            for w in itertools.product(letters, repeat=L):
                word = BraidWord(3, w)
                if is_freely_reduced(word):
                    assert not is_identity(path_matrix(word))


def test_ac8_structural_invariants(criterion):
    rng = random.Random(8)
    case3 = make_spec("case3")
    with criterion("AC8 structural invariants, 500 cases each", 60.0):
        for _ in range(500):
            spec = rng.choice([SIMPLE, BURAU, case3])
            n = rng.randint(2, 5)
            u, v = random_word(rng, n, 8), random_word(rng, n, 8)
            assert evaluate(spec, compose(u, v)) == multiply(evaluate(spec, u), evaluate(spec, v))
        for _ in range(500):
            spec = rng.choice([SIMPLE, case3])
            w = random_word(rng, rng.randint(2, 5), 12)
            assert monomial_decompose(evaluate(spec, w)).permutation == permutation(w).mapping
        for _ in range(500):
            spec = rng.choice([SIMPLE, BURAU, case3])
            w = random_word(rng, rng.randint(2, 5), 12)
            assert evaluate(spec, free_reduce(w)) == evaluate(spec, w)
        for _ in range(500):
            n = rng.randint(1, 3)
            x, y = (
                PolyMatrix([[random_poly(rng, "abt", max_terms=2) for _ in range(n)] for _ in range(n)])
                for _ in range(2)
            )
            assert determinant(multiply(x, y)) == determinant(x) * determinant(y)
