"""Exact multivariate Laurent polynomials over the integers.

Every polynomial lives in Z[a^±1, b^±1, c^±1, d^±1, t^±1]. Monomials are
exponent vectors over the fixed alphabet ``VARS``; a polynomial is a sparse
map from exponent vector to nonzero integer coefficient. Values are immutable
and hashable, and equality is structural on the canonical term map.

>>> p = parse_poly("b^-1*t") * var("b")
>>> format_poly(p)
't'
>>> format_poly(parse_poly("1 - a"))
'-a + 1'
"""

from __future__ import annotations

from typing import Iterable, Mapping, Union

from .errors import MissingVariable, NotAUnit, PolynomialSyntaxError, ZeroAssignment

VARS = ("a", "b", "c", "d", "t")
_INDEX = {v: i for i, v in enumerate(VARS)}
_ZERO_EXP = (0,) * len(VARS)

Exponents = tuple  # tuple[int, ...] of length len(VARS)
PolyLike = Union["LaurentPolynomial", int]


class LaurentPolynomial:
    """An element of the Laurent ring, stored as ``{exponents: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, int] | None = None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[tuple(exps)] = int(coeff)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPolynomial":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, value: int) -> "LaurentPolynomial":
        return cls({_ZERO_EXP: value})

    @classmethod
    def monomial(cls, coeff: int = 1, **exponents: int) -> "LaurentPolynomial":
        """``monomial(-1, b=-1, t=1)`` is ``-b^-1*t``."""
        exps = [0] * len(VARS)
        for name, e in exponents.items():
            if name not in _INDEX:
                raise ValueError(f"unknown variable {name!r}; expected one of {VARS}")
            exps[_INDEX[name]] = e
        return cls({tuple(exps): coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {_ZERO_EXP: 1}

    def is_unit(self) -> bool:
        """True iff this is ``±monomial``, the units of the Laurent ring over Z."""
        if len(self._terms) != 1:
            return False
        (coeff,) = self._terms.values()
        return coeff in (1, -1)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> tuple[str, ...]:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return tuple(VARS[i] for i in sorted(used))

    def constant_value(self) -> int | None:
        """The integer value if this polynomial is a constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and _ZERO_EXP in self._terms:
            return self._terms[_ZERO_EXP]
        return None

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.const(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: PolyLike):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: PolyLike):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: PolyLike):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other: PolyLike):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return monomial_inverse(self) ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = mul(result, base)
            base = mul(base, base)
            k >>= 1
        return result

    def __repr__(self):
        return f"LaurentPolynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x):
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, int):
        return LaurentPolynomial.const(x)
    return NotImplemented


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial.const(1)


def var(name: str) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(1, **{name: 1})


def as_poly(x: PolyLike | str) -> LaurentPolynomial:
    """Coerce an int, string or polynomial to a LaurentPolynomial."""
    if isinstance(x, LaurentPolynomial):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a polynomial")
    if isinstance(x, int):
        return LaurentPolynomial.const(x)
    if isinstance(x, str):
        return parse_poly(x)
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out = dict(p._terms)
    for exps, coeff in q._terms.items():
        s = out.get(exps, 0) + coeff
        if s:
            out[exps] = s
        else:
            out.pop(exps, None)
    return LaurentPolynomial._raw(out)


def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    out: dict = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            exps = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(exps, 0) + c1 * c2
            if s:
                out[exps] = s
            else:
                del out[exps]
    return LaurentPolynomial._raw(out)


def neg(p: LaurentPolynomial) -> LaurentPolynomial:
    return -p


def monomial_inverse(p: LaurentPolynomial) -> LaurentPolynomial:
    """Inverse of a unit ``±monomial``; anything else raises NotAUnit."""
    if not p.is_unit():
        raise NotAUnit(f"{format_poly(p)} is not a unit of the Laurent ring")
    ((exps, coeff),) = p._terms.items()
    return LaurentPolynomial._raw({tuple(-e for e in exps): coeff})


def substitute(p: LaurentPolynomial, assignment: Mapping[str, int], modulus: int) -> int:
    """Evaluate ``p`` modulo ``modulus`` with each variable replaced by a residue.

    Negative exponents go through the modular inverse, so a zero residue is
    only acceptable for variables that never appear with a negative power.
    """
    total = 0
    for exps, coeff in p._terms.items():
        value = coeff % modulus
        for i, e in enumerate(exps):
            if not e:
                continue
            name = VARS[i]
            try:
                r = assignment[name] % modulus
            except KeyError:
                raise MissingVariable(f"no value assigned to {name!r}") from None
            if e < 0 and r == 0:
                raise ZeroAssignment(f"{name} = 0 (mod {modulus}) appears with exponent {e}")
            value = value * pow(r, e, modulus) % modulus
        total += value
    return total % modulus


def _exp_str(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_poly(p: LaurentPolynomial) -> str:
    """Canonical text: terms by descending exponent vector in (a, b, c, d, t) order."""
    if not p._terms:
        return "0"
    pieces = []
    for exps in sorted(p._terms, reverse=True):
        coeff = p._terms[exps]
        factors = [_exp_str(VARS[i], e) for i, e in enumerate(exps) if e]
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def error(self, message: str):
        return PolynomialSyntaxError(message, self.text, self.pos)

    def integer(self, signed: bool = False) -> int:
        self.skip_ws()
        start = self.pos
        sign = 1
        if signed and self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            self.skip_ws()
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            self.pos = start
            raise self.error("expected an integer")
        return sign * int(self.text[digits_at:self.pos])


def parse_poly(text: str) -> LaurentPolynomial:
    """Parse the textual polynomial grammar (see ``format_poly`` for output)."""
    sc = _Scanner(text)
    terms: dict = {}
    sign = 1
    if sc.peek() in ("+", "-"):
        sign = -1 if sc.take() == "-" else 1
    while True:
        coeff, exps = _parse_term(sc)
        key = tuple(exps)
        s = terms.get(key, 0) + sign * coeff
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
        ch = sc.peek()
        if ch == "":
            break
        if ch not in ("+", "-"):
            raise sc.error(f"unexpected {ch!r}")
        sign = -1 if sc.take() == "-" else 1
    return LaurentPolynomial._raw(terms)


def _parse_term(sc: _Scanner):
    coeff = 1
    exps = [0] * len(VARS)
    seen_any = False
    if sc.peek().isdigit():
        coeff = sc.integer()
        seen_any = True
    while True:
        ch = sc.peek()
        if ch == "*":
            if not seen_any:
                raise sc.error("'*' without a left operand")
            sc.take()
            ch = sc.peek()
            if ch not in _INDEX:
                raise sc.error("expected a variable after '*'")
        if ch not in _INDEX:
            break
        sc.take()
        e = 1
        if sc.peek() == "^":
            sc.take()
            e = sc.integer(signed=True)
        exps[_INDEX[ch]] += e
        seen_any = True
    if not seen_any:
        raise sc.error("expected a term")
    return coeff, exps


def from_terms(pairs: Iterable[tuple[int, Mapping[str, int]]]) -> LaurentPolynomial:
    """Build a polynomial from ``(coeff, {var: exponent})`` pairs."""
    result = ZERO
    for coeff, exps in pairs:
        result = result + LaurentPolynomial.monomial(coeff, **exps)
    return result
