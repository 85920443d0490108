import random
import time
from contextlib import contextmanager

import pytest
import sympy
from hypothesis import strategies as st

from braidrep.braid import BraidWord
from braidrep.laurent import VARS, LaurentPolynomial

SYMBOLS = dict(zip(VARS, sympy.symbols(" ".join(VARS))))

_acceptance_key = pytest.StashKey[list]()


def to_sympy(p: LaurentPolynomial):
    """Independent image of p in sympy, used as an arithmetic oracle."""
    expr = sympy.Integer(0)
    for exps, coeff in p.items():
        term = sympy.Integer(coeff)
        for name, e in zip(VARS, exps):
            term *= SYMBOLS[name] ** e
        expr += term
    return expr


def sympy_equal(p: LaurentPolynomial, expr) -> bool:
    return sympy.expand(to_sympy(p) - expr) == 0


exponent_vectors = st.tuples(*[st.integers(-4, 4)] * len(VARS))
polynomials = st.dictionaries(exponent_vectors, st.integers(-20, 20), max_size=6).map(LaurentPolynomial)
units = st.builds(
    lambda exps, sign: LaurentPolynomial({exps: sign}),
    exponent_vectors,
    st.sampled_from([1, -1]),
)


def random_poly(rng: random.Random, names=VARS, max_terms=4, max_exp=2, max_coeff=5) -> LaurentPolynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(-max_exp, max_exp) if v in names else 0 for v in VARS)
        terms[exps] = rng.randint(-max_coeff, max_coeff)
    return LaurentPolynomial(terms)


def random_reduced_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    letters = []
    for _ in range(rng.randint(0, max_len)):
        choices = [k for k in range(-(n - 1), n) if k and (not letters or k != -letters[-1])]
        letters.append(rng.choice(choices))
    return BraidWord(n, tuple(letters))


def random_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    letters = [rng.choice([k for k in range(-(n - 1), n) if k]) for _ in range(rng.randint(0, max_len))]
    return BraidWord(n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def criterion(request):
    """Context manager that times a criterion and logs a pass/fail line for the summary."""
    log = request.config.stash.setdefault(_acceptance_key, [])

    @contextmanager
    def run(label: str, budget: float):
        start = time.perf_counter()
        ok = False
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < budget, f"{label}: took {elapsed:.2f}s, budget {budget}s"
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            line = f"{'PASS' if ok else 'FAIL'}  {label}  ({elapsed:.2f}s / {budget:g}s)"
            log.append(line)
            print(line)

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
