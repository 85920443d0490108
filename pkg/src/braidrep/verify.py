"""Relation checks and kernel-witness certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .braid import BraidWord, format_word
from .errors import NotEvaluable
from .polymatrix import is_identity
from .rep import BURAU, RepSpec, evaluate

MIN_RELATION_DIM = 3
MAX_RELATION_DIM = 6


@dataclass(frozen=True)
class RelationReport:
    n: int
    spec: RepSpec
    cubic_failures: tuple[int, ...] = ()
    commuting_failures: tuple[tuple[int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return not self.cubic_failures and not self.commuting_failures

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "spec": self.spec.to_dict(),
            "cubic_failures": list(self.cubic_failures),
            "commuting_failures": [list(p) for p in self.commuting_failures],
            "passed": self.passed,
        }


def check_relations(spec: RepSpec, n: int, *, force: bool = False) -> RelationReport:
    """Check every cubic and commuting relation of B_n symbolically.

    Only positive letters are evaluated, so specs without inverse images
    (symbolic case1/case2) can still be checked. ``force`` admits raw specs.
    """
    if not MIN_RELATION_DIM <= n <= MAX_RELATION_DIM:
        raise ValueError(f"relation checks run for {MIN_RELATION_DIM} <= n <= {MAX_RELATION_DIM}, got {n}")
    if not spec.evaluable and not force:
        raise NotEvaluable("raw parameters must be classified before evaluation")

    def image(*letters):
        return evaluate(spec, BraidWord(n, letters), force=force)

    cubic = [i for i in range(1, n - 1) if image(i, i + 1, i) != image(i + 1, i, i + 1)]
    commuting = [
        (i, j)
        for i in range(1, n)
        for j in range(i + 2, n)
        if image(i, j) != image(j, i)
    ]
    return RelationReport(n, spec, tuple(cubic), tuple(commuting))


@dataclass(frozen=True)
class KernelWitness:
    word: BraidWord
    spec: RepSpec
    image_is_identity: bool
    burau_image_nontrivial: bool
    certified: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "certified", self.image_is_identity and self.burau_image_nontrivial)

    def to_dict(self) -> dict:
        return {
            "word": format_word(self.word),
            "n": self.word.n,
            "spec": self.spec.to_dict(),
            "image_is_identity": self.image_is_identity,
            "burau_image_nontrivial": self.burau_image_nontrivial,
            "certified": self.certified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verify_kernel_witness(spec: RepSpec, w: BraidWord) -> KernelWitness:
    """Certify that ``w`` is a nontrivial braid in the kernel of ``spec``.

    The Burau image is only a one-sided certificate: a non-identity image
    proves the braid is nontrivial, an identity image proves nothing.
    """
    in_kernel = is_identity(evaluate(spec, w))
    burau_nontrivial = not is_identity(evaluate(BURAU, w))
    return KernelWitness(w, spec, in_kernel, burau_nontrivial)
