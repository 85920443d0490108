"""Exhaustive search for short kernel elements.

Freely reduced words are enumerated depth first with their image matrices
evaluated modulo a large prime at a random point (the fingerprint). Right
multiplication by a generator only touches two columns, so each extension of
a cached prefix costs O(n) residue operations. A word whose fingerprint is the
identity is only a candidate; it is confirmed by exact symbolic evaluation and
certified nontrivial through its Burau image.

Substitution is a ring homomorphism, so a word with symbolic image I always
has identity fingerprint: pruning can produce false positives but never
false negatives.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from sympy import isprime

from .braid import BraidWord, format_word
from .errors import InvalidConfig
from .laurent import substitute
from .polymatrix import PolyMatrix, is_identity
from .rep import SIMPLE, RepSpec, evaluate
from .verify import KernelWitness, verify_kernel_witness

DEFAULT_MODULUS = 2**61 - 1
MAX_WORDS = 20_000_000


def alphabet(n: int) -> tuple[int, ...]:
    """Letters in enumeration order: -(n-1) < ... < -1 < 1 < ... < n-1."""
    return tuple(k for k in range(-(n - 1), n) if k)


def count_reduced_words(n: int, max_len: int) -> int:
    """Number of freely reduced words of length 1..max_len in 2(n-1) letters."""
    m = 2 * (n - 1)
    return sum(m * (m - 1) ** (L - 1) for L in range(1, max_len + 1))


def random_assignment(spec: RepSpec, seed: int, modulus: int) -> dict[str, int]:
    rng = random.Random(seed)
    return {name: rng.randrange(2, modulus - 1) for name in spec.variables()}


@dataclass(frozen=True)
class SearchConfig:
    n: int
    max_len: int
    spec: RepSpec = SIMPLE
    seed: int = 0
    modulus: int = DEFAULT_MODULUS
    limit: int = 100
    jobs: int = 1

    def validate(self) -> None:
        if self.n < 2:
            raise InvalidConfig("B_n has no generators for n < 2")
        if self.max_len < 1:
            raise InvalidConfig("max_len must be at least 1")
        if self.limit < 0:
            raise InvalidConfig("limit must be non-negative")
        if self.jobs < 1:
            raise InvalidConfig("jobs must be at least 1")
        if self.modulus <= 2**31 or not isprime(self.modulus):
            raise InvalidConfig(f"modulus must be a prime above 2^31, got {self.modulus}")
        if not self.spec.evaluable:
            raise InvalidConfig("raw specs cannot be searched")
        if not self.spec.invertible:
            raise InvalidConfig(f"spec {self.spec} has no inverse images over the Laurent ring")
        total = count_reduced_words(self.n, self.max_len)
        if total > MAX_WORDS:
            raise InvalidConfig(f"{total} words to enumerate exceeds the cap of {MAX_WORDS}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "max_len": self.max_len,
            "spec": self.spec.to_dict(),
            "seed": self.seed,
            "modulus": self.modulus,
            "limit": self.limit,
            "jobs": self.jobs,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchConfig":
        spec = RepSpec.from_dict(data["spec"]) if "spec" in data else SIMPLE
        kwargs = {k: data[k] for k in ("seed", "modulus", "limit", "jobs") if k in data}
        return cls(n=data["n"], max_len=data["max_len"], spec=spec, **kwargs)


@dataclass
class SearchResult:
    witnesses: list[KernelWitness] = field(default_factory=list)
    words_enumerated: int = 0
    fingerprint_hits: int = 0
    confirmed: int = 0

    def to_dict(self) -> dict:
        return {
            "witnesses": [w.to_dict() for w in self.witnesses],
            "words_enumerated": self.words_enumerated,
            "fingerprint_hits": self.fingerprint_hits,
            "confirmed": self.confirmed,
        }


def _residue_blocks(spec: RepSpec, assignment: dict[str, int], modulus: int):
    blocks = {1: spec.block.substitute(assignment, modulus)}
    if spec.inverse_block is not None:
        blocks[-1] = spec.inverse_block.substitute(assignment, modulus)
    return blocks


def _identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _extend(rows: list[list[int]], letter: int, blocks, modulus: int) -> list[list[int]]:
    (p, q), (r, s) = blocks[1 if letter > 0 else -1]
    k = abs(letter) - 1
    out = []
    for row in rows:
        x, y = row[k], row[k + 1]
        new = row[:]
        new[k] = (x * p + y * r) % modulus
        new[k + 1] = (x * q + y * s) % modulus
        out.append(new)
    return out


def _is_identity_rows(rows: list[list[int]]) -> bool:
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x != (1 if i == j else 0):
                return False
    return True


def fingerprint(spec: RepSpec, w: BraidWord, assignment: dict[str, int], modulus: int) -> list[list[int]]:
    """Image of ``w`` with every variable replaced by its residue mod ``modulus``."""
    blocks = _residue_blocks(spec, assignment, modulus)
    rows = _identity_rows(w.n)
    for k in w.letters:
        if k < 0 and -1 not in blocks:
            # let evaluate raise the proper NonUnitDeterminant
            evaluate(spec, BraidWord(w.n, (k,)))
        rows = _extend(rows, k, blocks, modulus)
    return rows


def _search_subtree(args) -> tuple[int, list[tuple[int, ...]]]:
    """Enumerate all reduced words starting with ``first``; return (count, hits)."""
    n, max_len, first, blocks, modulus = args
    letters = alphabet(n)
    count = 0
    hits = []
    stack = [((first,), _extend(_identity_rows(n), first, blocks, modulus))]
    while stack:
        word, rows = stack.pop()
        count += 1
        if _is_identity_rows(rows):
            hits.append(word)
        if len(word) == max_len:
            continue
        last = word[-1]
        for k in reversed(letters):
            if k != -last:
                stack.append((word + (k,), _extend(rows, k, blocks, modulus)))
    return count, hits


def search_kernel(config: SearchConfig) -> SearchResult:
    """Find certified kernel witnesses of length <= max_len, shortest first."""
    config.validate()
    assignment = random_assignment(config.spec, config.seed, config.modulus)
    blocks = _residue_blocks(config.spec, assignment, config.modulus)
    tasks = [(config.n, config.max_len, k, blocks, config.modulus) for k in alphabet(config.n)]
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            parts = list(pool.map(_search_subtree, tasks))
    else:
        parts = [_search_subtree(t) for t in tasks]

    result = SearchResult()
    hits = []
    for count, part_hits in parts:
        result.words_enumerated += count
        hits.extend(part_hits)
    hits.sort(key=lambda w: (len(w), w))
    result.fingerprint_hits = len(hits)

    for letters in hits:
        w = BraidWord(config.n, letters)
        if not is_identity(evaluate(config.spec, w)):
            continue
        result.confirmed += 1
        if len(result.witnesses) < config.limit:
            witness = verify_kernel_witness(config.spec, w)
            if witness.certified:
                result.witnesses.append(witness)
    return result


def format_result(result: SearchResult) -> str:
    lines = [
        f"words enumerated: {result.words_enumerated}",
        f"fingerprint hits: {result.fingerprint_hits}",
        f"confirmed:        {result.confirmed}",
        f"certified:        {len(result.witnesses)}",
    ]
    lines.extend(format_word(w.word) for w in result.witnesses)
    return "\n".join(lines)
