"""Representations of B_n built from a single 2x2 crossing block.

Every representation here sends sigma_i to ``I_{i-1} (+) M (+) I_{n-i-1}`` for
a fixed 2x2 block M. The admissible blocks are

* ``simple``: ``[[0, t], [b, 0]]``
* ``case1``: ``[[a, b], [(1-a)/b, 0]]`` with a != 1
* ``case2``: ``[[0, b], [(1-d)/b, d]]`` with d != 1
* ``case3``: ``[[0, b], [c, 0]]`` with b, c != 0
* ``burau``: ``[[1-b, b], [1, 0]]`` (unreduced Burau, case1 with a = 1-b)

plus ``raw`` blocks ``[[a, b], [c, d]]`` that are carried around unclassified
and refused by ``evaluate`` unless explicitly forced.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .braid import BraidWord
from .errors import InvalidParams, NonUnitDeterminant, NotEvaluable
from .laurent import (
    ONE,
    ZERO,
    LaurentPolynomial,
    add,
    as_poly,
    format_poly,
    monomial_inverse,
    mul,
    var,
)
from .polymatrix import PolyMatrix, block_embed, identity, multiply, subtract


class Kind(str, enum.Enum):
    SIMPLE = "simple"
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"
    BURAU = "burau"
    RAW = "raw"


PARAM_NAMES = {
    Kind.SIMPLE: (),
    Kind.BURAU: (),
    Kind.CASE1: ("a", "b"),
    Kind.CASE2: ("b", "d"),
    Kind.CASE3: ("b", "c"),
    Kind.RAW: ("a", "b", "c", "d"),
}


class Label(str, enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    TRIVIAL = "Trivial"
    INADMISSIBLE = "Inadmissible"


@dataclass(frozen=True)
class CaseLabel:
    label: Label
    reason: str

    @property
    def admissible(self) -> bool:
        return self.label in (Label.CASE1, Label.CASE2, Label.CASE3)

    def to_dict(self) -> dict:
        return {"label": self.label.value, "reason": self.reason}


def divide_by_monomial(p: LaurentPolynomial, m: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient p/m for a monomial m; raises InvalidParams if inexact."""
    if not m.is_monomial():
        raise InvalidParams(f"cannot divide by non-monomial {format_poly(m)}")
    ((mexp, mc),) = m.items()
    out = {}
    for exps, coeff in p.items():
        q, r = divmod(coeff, mc)
        if r:
            raise InvalidParams(f"{format_poly(p)} is not divisible by {format_poly(m)} over Z")
        out[tuple(x - y for x, y in zip(exps, mexp))] = q
    return LaurentPolynomial(out)


@dataclass(frozen=True, eq=False)
class RepSpec:
    """Which representation to use. Build these with ``make_spec``.

    Two specs compare equal when they have the same crossing block and the
    same evaluability, so a case3 spec with ``b=t, c=b`` equals ``simple``.
    """

    kind: Kind
    params: tuple[tuple[str, LaurentPolynomial], ...] = ()
    block: PolyMatrix = field(default=None, compare=False, repr=False)

    @property
    def param_map(self) -> dict[str, LaurentPolynomial]:
        return dict(self.params)

    @property
    def evaluable(self) -> bool:
        return self.kind is not Kind.RAW

    def __eq__(self, other):
        if not isinstance(other, RepSpec):
            return NotImplemented
        return self.block == other.block and self.evaluable == other.evaluable

    def __hash__(self):
        return hash((self.block, self.evaluable))

    @cached_property
    def block_determinant(self) -> LaurentPolynomial:
        (p, q), (r, s) = self.block.entries
        return add(mul(p, s), -mul(q, r))

    @cached_property
    def inverse_block(self) -> PolyMatrix | None:
        det = self.block_determinant
        if not det.is_unit():
            return None
        inv = monomial_inverse(det)
        (p, q), (r, s) = self.block.entries
        return PolyMatrix._from_rows([[mul(inv, s), mul(inv, -q)], [mul(inv, -r), mul(inv, p)]])

    @property
    def invertible(self) -> bool:
        return self.inverse_block is not None

    def variables(self) -> tuple[str, ...]:
        names = set()
        for row in self.block.entries:
            for x in row:
                names.update(x.variables())
        if self.inverse_block is not None:
            for row in self.inverse_block.entries:
                for x in row:
                    names.update(x.variables())
        return tuple(sorted(names))

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "params": {k: format_poly(v) for k, v in self.params}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "RepSpec":
        return make_spec(data["kind"], data.get("params") or {})

    @classmethod
    def from_json(cls, text: str) -> "RepSpec":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if not self.params:
            return self.kind.value
        inner = ", ".join(f"{k}={format_poly(v)}" for k, v in self.params)
        return f"{self.kind.value}({inner})"


def _block(rows) -> PolyMatrix:
    return PolyMatrix([[as_poly(x) for x in row] for row in rows])


def make_spec(kind: Kind | str, params: Mapping[str, object] | None = None) -> RepSpec:
    """Validate parameters for ``kind`` and build the spec.

    Missing parameters default to the symbolic variable of the same name, so
    ``make_spec("case1")`` is the fully symbolic Case 1 family.
    """
    try:
        kind = Kind(kind)
    except ValueError:
        raise InvalidParams(f"unknown representation kind {kind!r}") from None
    params = dict(params or {})
    allowed = PARAM_NAMES[kind]
    extra = sorted(set(params) - set(allowed))
    if extra:
        raise InvalidParams(f"{kind.value} takes parameters {allowed or 'none'}, got {extra}")
    try:
        values = {name: as_poly(params[name]) if name in params else var(name) for name in allowed}
    except (TypeError, ValueError) as exc:
        raise InvalidParams(str(exc)) from exc

    t, b = var("t"), var("b")
    if kind is Kind.SIMPLE:
        block = _block([[0, t], [b, 0]])
    elif kind is Kind.BURAU:
        block = _block([[1 - b, b], [1, 0]])
    elif kind is Kind.CASE1:
        a, b = values["a"], values["b"]
        if a == ONE:
            raise InvalidParams("case1 requires a != 1")
        if b.is_zero():
            raise InvalidParams("case1 requires b != 0")
        block = _block([[a, b], [divide_by_monomial(1 - a, b), 0]])
    elif kind is Kind.CASE2:
        b, d = values["b"], values["d"]
        if d == ONE:
            raise InvalidParams("case2 requires d != 1")
        if b.is_zero():
            raise InvalidParams("case2 requires b != 0")
        block = _block([[0, b], [divide_by_monomial(1 - d, b), d]])
    elif kind is Kind.CASE3:
        b, c = values["b"], values["c"]
        if b.is_zero() or c.is_zero():
            raise InvalidParams("case3 requires b != 0 and c != 0")
        block = _block([[0, b], [c, 0]])
    else:
        block = _block([[values["a"], values["b"]], [values["c"], values["d"]]])

    if kind is not Kind.RAW:
        (p, q), (r, s) = block.entries
        label = classify_case(p, q, r, s)
        if not label.admissible:
            raise InvalidParams(f"{kind.value} parameters rejected: {label.reason}")
    return RepSpec(kind, tuple(sorted(values.items())), block)


def generator_image(spec: RepSpec, i: int, sign: int, n: int, *, force: bool = False) -> PolyMatrix:
    """Image of sigma_i (sign=+1) or sigma_i^-1 (sign=-1) in dimension n."""
    if not spec.evaluable and not force:
        raise NotEvaluable("raw parameters must be classified before evaluation")
    if sign == 1:
        return block_embed(i, spec.block, n)
    if sign != -1:
        raise ValueError("sign must be +1 or -1")
    inv = spec.inverse_block
    if inv is None:
        raise NonUnitDeterminant(
            f"block determinant {format_poly(spec.block_determinant)} is not a unit; "
            f"sigma^-1 has no image over the Laurent ring"
        )
    return block_embed(i, inv, n)


def _right_multiply(rows: list[list[LaurentPolynomial]], i: int, blk: PolyMatrix):
    # rows <- rows * block_embed(i, blk); only columns i-1, i change
    (p, q), (r, s) = blk.entries
    k = i - 1
    for row in rows:
        x, y = row[k], row[k + 1]
        if not x and not y:
            continue
        row[k] = add(mul(x, p), mul(y, r))
        row[k + 1] = add(mul(x, q), mul(y, s))


def evaluate(spec: RepSpec, w: BraidWord, *, force: bool = False) -> PolyMatrix:
    """Product of generator images in word order; the empty word maps to I_n."""
    if not spec.evaluable and not force:
        raise NotEvaluable("raw parameters must be classified before evaluation")
    n = w.n
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    for k in w.letters:
        if k > 0:
            blk = spec.block
        else:
            blk = spec.inverse_block
            if blk is None:
                # raises NonUnitDeterminant with the explanation
                generator_image(spec, -k, -1, n, force=force)
        _right_multiply(rows, abs(k), blk)
    return PolyMatrix._from_rows(rows)


def cubic_residual(a, b, c, d) -> PolyMatrix:
    """``M1 M2 M1 - M2 M1 M2`` in B_3 for the raw block [[a, b], [c, d]]."""
    blk = _block([[a, b], [c, d]])
    m1 = block_embed(1, blk, 3)
    m2 = block_embed(2, blk, 3)
    return subtract(multiply(multiply(m1, m2), m1), multiply(multiply(m2, m1), m2))


def classify_case(a, b, c, d) -> CaseLabel:
    """Decide which admissible family, if any, the block [[a, b], [c, d]] belongs to.

    When a = d = 0 and bc = 1 the Case 1, 2 and 3 conditions all hold at once;
    such blocks are labelled Case3, and Case1 is preferred over Case2.
    """
    a, b, c, d = (as_poly(x) for x in (a, b, c, d))
    bc = mul(b, c)
    if a == ONE and d == ONE and b.is_zero() and c.is_zero():
        return CaseLabel(Label.TRIVIAL, "block is the identity, every generator maps to I")
    if a.is_zero() and d.is_zero():
        if not b.is_zero() and not c.is_zero():
            return CaseLabel(Label.CASE3, "a = d = 0 with b, c nonzero")
        return CaseLabel(Label.INADMISSIBLE, "a = d = 0 and bc = 0: block is singular")
    if d.is_zero():
        if bc != 1 - a:
            return CaseLabel(Label.INADMISSIBLE, "d = 0 but bc != 1 - a: cubic relation fails")
        if a == ONE:
            return CaseLabel(Label.INADMISSIBLE, "d = 0, a = 1 forces bc = 0: block is singular")
        return CaseLabel(Label.CASE1, "d = 0, bc = 1 - a, a != 1")
    if a.is_zero():
        if bc != 1 - d:
            return CaseLabel(Label.INADMISSIBLE, "a = 0 but bc != 1 - d: cubic relation fails")
        if d == ONE:
            return CaseLabel(Label.INADMISSIBLE, "a = 0, d = 1 forces bc = 0: block is singular")
        return CaseLabel(Label.CASE2, "a = 0, bc = 1 - d, d != 1")
    return CaseLabel(Label.INADMISSIBLE, "a and d both nonzero: the cubic relation forces the identity block")


def spec_from_block(a, b, c, d) -> RepSpec:
    """Classify a raw block and return the matching evaluable spec."""
    a, b, c, d = (as_poly(x) for x in (a, b, c, d))
    label = classify_case(a, b, c, d)
    if label.label is Label.CASE3:
        return make_spec(Kind.CASE3, {"b": b, "c": c})
    if label.label is Label.CASE1:
        spec = make_spec(Kind.CASE1, {"a": a, "b": b}) if b.is_monomial() else None
    elif label.label is Label.CASE2:
        spec = make_spec(Kind.CASE2, {"d": d, "b": b}) if b.is_monomial() else None
    else:
        raise InvalidParams(f"({format_poly(a)}, {format_poly(b)}, {format_poly(c)}, {format_poly(d)}): {label.reason}")
    if spec is None:
        # c is given explicitly, so keep the block verbatim under its case kind
        kind = Kind.CASE1 if label.label is Label.CASE1 else Kind.CASE2
        names = PARAM_NAMES[kind]
        vals = {"a": a, "b": b, "d": d}
        spec = RepSpec(kind, tuple((k, vals[k]) for k in names), _block([[a, b], [c, d]]))
    return spec


SIMPLE = make_spec(Kind.SIMPLE)
BURAU = make_spec(Kind.BURAU)
