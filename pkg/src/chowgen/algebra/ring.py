"""Exact sparse integer polynomials over a fixed weighted alphabet.

Monomials are stored as packed integers: one 24-bit field per variable,
most significant first in the canonical precedence T > c2 > c3 > c1 > Q > H
> l0 > l1 > l2, topped by a field holding the weighted degree. Multiplying
monomials is then integer addition and comparing packed keys is exactly the
graded lexicographic order used for canonical output and lead-term division.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from typing import Union

import sympy

from chowgen.logging_config import (
    ForeignVariableError,
    InvalidArgumentError,
    NonzeroRemainderError,
    NotDivisibleError,
    NotMonicError,
    get_logger,
)

logger = get_logger("algebra.ring")


@dataclass(frozen=True)
class VarAlphabet:
    """Ordered variable names with their positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights must have the same length")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive integers")

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidArgumentError(
                f"Unknown variable: {name}",
                suggestion=f"Use one of {', '.join(self.names)}",
            ) from None

    def weight(self, name: str) -> int:
        return self.weights[self.index(name)]


ALPHABET = VarAlphabet(
    names=("T", "c1", "c2", "c3", "l0", "l1", "l2", "Q", "H"),
    weights=(1, 1, 2, 3, 1, 1, 1, 1, 1),
)

# Exponent vector in ALPHABET order.
Monomial = tuple[int, ...]

L_VARS = ("l0", "l1", "l2")
CHERN_VARS = ("c1", "c2", "c3")
INERT_VARS = ("T", "Q", "H")

_FIELD_BITS = 24
_MASK = (1 << _FIELD_BITS) - 1
_PRECEDENCE = ("T", "c2", "c3", "c1", "Q", "H", "l0", "l1", "l2")
_SHIFT = {name: _FIELD_BITS * (len(_PRECEDENCE) - 1 - i) for i, name in enumerate(_PRECEDENCE)}
_DEGREE_SHIFT = _FIELD_BITS * len(_PRECEDENCE)
_UNIT = {
    name: (1 << _SHIFT[name]) + (weight << _DEGREE_SHIFT)
    for name, weight in zip(ALPHABET.names, ALPHABET.weights)
}
_RENDER_ORDER = ("c1", "c2", "c3", "l0", "l1", "l2", "Q", "H", "T")
_LATEX_NAMES = {
    "T": "T",
    "c1": "c_1",
    "c2": "c_2",
    "c3": "c_3",
    "l0": "l_0",
    "l1": "l_1",
    "l2": "l_2",
    "Q": "Q",
    "H": "H",
}


def _exp(key: int, name: str) -> int:
    return (key >> _SHIFT[name]) & _MASK


def _key_degree(key: int) -> int:
    return key >> _DEGREE_SHIFT


def _pack(exponents: Monomial) -> int:
    if len(exponents) != len(ALPHABET):
        raise InvalidArgumentError(
            f"Monomial needs {len(ALPHABET)} exponents, got {len(exponents)}"
        )
    key = 0
    for name, e in zip(ALPHABET.names, exponents):
        if e < 0 or e > _MASK:
            raise InvalidArgumentError(f"Exponent of {name} out of range: {e}")
        key += e * _UNIT[name]
    return key


def _pack_mapping(exponents: Mapping[str, int]) -> int:
    key = 0
    for name, e in exponents.items():
        if name not in ALPHABET:
            raise InvalidArgumentError(f"Unknown variable: {name}")
        if e < 0 or e > _MASK:
            raise InvalidArgumentError(f"Exponent of {name} out of range: {e}")
        key += e * _UNIT[name]
    return key


def _unpack(key: int) -> Monomial:
    return tuple(_exp(key, name) for name in ALPHABET.names)


def _divides(small: int, big: int) -> bool:
    return all(_exp(small, name) <= _exp(big, name) for name in _PRECEDENCE)


def _strip(key: int, name: str) -> tuple[int, int]:
    """Split a key into (exponent of name, key with that variable removed)."""
    e = _exp(key, name)
    return e, key - e * _UNIT[name]


PolyLike = Union["IntPoly", int]


class IntPoly:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients.

    Construct with a mapping from monomials to coefficients. A monomial is an
    exponent tuple in ALPHABET order or a ``{name: exponent}`` mapping.
    Zero coefficients are dropped, so equality is term-map equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Union[Monomial, Mapping[str, int]], int] | None = None):
        packed: dict[int, int] = {}
        for mono, coeff in (terms or {}).items():
            key = _pack_mapping(mono) if isinstance(mono, Mapping) else _pack(tuple(mono))
            packed[key] = packed.get(key, 0) + int(coeff)
        self._terms = {k: c for k, c in packed.items() if c}
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, packed: dict[int, int]) -> IntPoly:
        # packed is owned by the new instance and holds no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = packed
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms: Mapping[Union[Monomial, Mapping[str, int]], int]) -> IntPoly:
        return cls(terms)

    @classmethod
    def zero(cls) -> IntPoly:
        return cls._wrap({})

    @classmethod
    def one(cls) -> IntPoly:
        return cls.constant(1)

    @classmethod
    def constant(cls, n: int) -> IntPoly:
        return cls._wrap({0: int(n)} if n else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> IntPoly:
        ALPHABET.index(name)
        if power < 0:
            raise InvalidArgumentError(f"Negative exponent {power} for {name}")
        if power > _MASK:
            raise InvalidArgumentError(f"Exponent of {name} out of range: {power}")
        return cls._wrap({power * _UNIT[name]: 1})

    @classmethod
    def coerce(cls, value: PolyLike) -> IntPoly:
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        raise TypeError(f"Cannot use {type(value).__name__} as an IntPoly")

    @property
    def terms(self) -> dict[Monomial, int]:
        """Terms in canonical (descending graded lexicographic) order."""
        return {_unpack(k): self._terms[k] for k in sorted(self._terms, reverse=True)}

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Union[Monomial, Mapping[str, int]] | None = None) -> int:
        """Coefficient of a monomial; the constant term when none is given."""
        if monomial is None:
            return self._terms.get(0, 0)
        key = _pack_mapping(monomial) if isinstance(monomial, Mapping) else _pack(tuple(monomial))
        return self._terms.get(key, 0)

    def lead(self) -> tuple[Monomial, int]:
        """Leading monomial and coefficient in the canonical order."""
        if not self._terms:
            raise InvalidArgumentError("The zero polynomial has no leading term")
        key = max(self._terms)
        return _unpack(key), self._terms[key]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"IntPoly({to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __neg__(self) -> IntPoly:
        return neg(self)

    def __add__(self, other: PolyLike) -> IntPoly:
        return add(self, IntPoly.coerce(other))

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> IntPoly:
        return sub(self, IntPoly.coerce(other))

    def __rsub__(self, other: PolyLike) -> IntPoly:
        return sub(IntPoly.coerce(other), self)

    def __mul__(self, other: PolyLike) -> IntPoly:
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, IntPoly.coerce(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        return power(self, n)


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    out = dict(a._terms)
    for k, c in b._terms.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            del out[k]
    return IntPoly._wrap(out)


def neg(a: IntPoly) -> IntPoly:
    return IntPoly._wrap({k: -c for k, c in a._terms.items()})


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = dict(a._terms)
    for k, c in b._terms.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            del out[k]
    return IntPoly._wrap(out)


def scale(a: IntPoly, n: int) -> IntPoly:
    if not n:
        return IntPoly.zero()
    return IntPoly._wrap({k: c * n for k, c in a._terms.items()})


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a._terms or not b._terms:
        return IntPoly.zero()
    # every exponent is at most the weighted degree, so this bounds each packed field
    if _key_degree(max(a._terms)) + _key_degree(max(b._terms)) > _MASK:
        raise InvalidArgumentError(f"Product degree exceeds the exponent range 0..{_MASK}")
    if len(a._terms) < len(b._terms):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    for kb, cb in b._terms.items():
        for ka, ca in a._terms.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return IntPoly._wrap({k: c for k, c in out.items() if c})


def power(a: IntPoly, n: int) -> IntPoly:
    """a**n by repeated squaring; power(a, 0) is 1 (including for a = 0)."""
    if n < 0:
        raise InvalidArgumentError(f"Negative power {n} is not a polynomial")
    result = IntPoly.one()
    base = a
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def product(factors: Iterable[IntPoly]) -> IntPoly:
    result = IntPoly.one()
    for f in factors:
        result = mul(result, f)
    return result


def degree(a: IntPoly) -> int | None:
    """Maximal weighted degree, or None for the zero polynomial."""
    if not a._terms:
        return None
    return _key_degree(max(a._terms))


def is_homogeneous(a: IntPoly) -> bool:
    return len({_key_degree(k) for k in a._terms}) <= 1


def homogeneous_part(a: IntPoly, d: int) -> IntPoly:
    return IntPoly._wrap({k: c for k, c in a._terms.items() if _key_degree(k) == d})


def homogeneous_components(a: IntPoly) -> dict[int, IntPoly]:
    parts: dict[int, dict[int, int]] = {}
    for k, c in a._terms.items():
        parts.setdefault(_key_degree(k), {})[k] = c
    return {d: IntPoly._wrap(parts[d]) for d in sorted(parts)}


def variables(a: IntPoly) -> set[str]:
    return {name for name in ALPHABET.names if any(_exp(k, name) for k in a._terms)}


def degree_in(a: IntPoly, v: str) -> int:
    """Exponent of v in a as a univariate polynomial; 0 for constants in v and for 0."""
    ALPHABET.index(v)
    return max((_exp(k, v) for k in a._terms), default=0)


def exponent_rows(a: IntPoly, names: Iterable[str]) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (exponents of names, coefficient) for every term, unordered."""
    names = list(names)
    for n in names:
        ALPHABET.index(n)
    shifts = [_SHIFT[n] for n in names]
    for k, c in a._terms.items():
        yield tuple((k >> s) & _MASK for s in shifts), c


def _split(a: IntPoly, v: str) -> dict[int, dict[int, int]]:
    groups: dict[int, dict[int, int]] = {}
    for k, c in a._terms.items():
        e, rest = _strip(k, v)
        groups.setdefault(e, {})[rest] = c
    return groups


def coefficients_in(a: IntPoly, v: str) -> list[IntPoly]:
    """Coefficients of a viewed as univariate in v, indexed by power of v."""
    ALPHABET.index(v)
    groups = _split(a, v)
    top = max(groups, default=0)
    return [IntPoly._wrap(groups.get(e, {})) for e in range(top + 1)]


def substitute(a: IntPoly, v: str, s: PolyLike) -> IntPoly:
    """Replace every occurrence of v in a by s (Horner in v)."""
    s = IntPoly.coerce(s)
    coeffs = coefficients_in(a, v)
    result = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        result = add(mul(result, s), c)
    return result


def substitute_many(a: IntPoly, mapping: Mapping[str, PolyLike]) -> IntPoly:
    """Simultaneous substitution of several variables."""
    if not mapping:
        return a
    names = list(mapping)
    images = {name: IntPoly.coerce(mapping[name]) for name in names}
    cache: dict[tuple[str, int], IntPoly] = {}

    def image_power(name: str, e: int) -> IntPoly:
        if (name, e) not in cache:
            cache[(name, e)] = power(images[name], e)
        return cache[(name, e)]

    # group terms by their exponents in the substituted variables
    groups: dict[tuple[int, ...], dict[int, int]] = {}
    for k, c in a._terms.items():
        exps = []
        rest = k
        for name in names:
            e, rest = _strip(rest, name)
            exps.append(e)
        groups.setdefault(tuple(exps), {})[rest] = c
    result = IntPoly.zero()
    for exps, rest in groups.items():
        term = IntPoly._wrap(rest)
        for name, e in zip(names, exps):
            if e:
                term = mul(term, image_power(name, e))
        result = add(result, term)
    return result


def permute(a: IntPoly, mapping: Mapping[str, str]) -> IntPoly:
    """Rename variables by a permutation of equal-weight variables."""
    for src, dst in mapping.items():
        if ALPHABET.weight(src) != ALPHABET.weight(dst):
            raise InvalidArgumentError(f"Cannot swap {src} and {dst}: weights differ")
    if sorted(mapping) != sorted(mapping.values()):
        raise InvalidArgumentError("Variable renaming must be a permutation")
    moved = [(src, dst) for src, dst in mapping.items() if src != dst]
    out: dict[int, int] = {}
    for k, c in a._terms.items():
        nk = k
        for src, _ in moved:
            nk -= _exp(k, src) * _UNIT[src]
        for src, dst in moved:
            nk += _exp(k, src) * _UNIT[dst]
        out[nk] = c
    return IntPoly._wrap(out)


def exact_div(a: IntPoly, b: PolyLike) -> IntPoly:
    """Quotient q with q*b == a, found by lead-term division.

    Raises:
        NotDivisibleError: if b is zero or no integer polynomial quotient exists.
    """
    b = IntPoly.coerce(b)
    if not b._terms:
        raise NotDivisibleError("Division by the zero polynomial")
    lead_key = max(b._terms)
    lead_coeff = b._terms[lead_key]
    remainder = dict(a._terms)
    quotient: dict[int, int] = {}
    while remainder:
        rk = max(remainder)
        rc = remainder[rk]
        if not _divides(lead_key, rk) or rc % lead_coeff:
            raise NotDivisibleError(
                f"{to_text(b)} does not divide {to_text(a)}",
                technical_details=f"stuck at remainder term {rc}*{_unpack(rk)}",
            )
        qk = rk - lead_key
        qc = rc // lead_coeff
        quotient[qk] = qc
        for bk, bc in b._terms.items():
            k = bk + qk
            v = remainder.get(k, 0) - qc * bc
            if v:
                remainder[k] = v
            else:
                remainder.pop(k, None)
    return IntPoly._wrap(quotient)


def div_linear_binomial(a: IntPoly, i: int, j: int) -> IntPoly:
    """Divide a by (l_i - l_j) with synthetic division in l_i.

    Raises:
        NonzeroRemainderError: if a does not vanish at l_i = l_j.
    """
    if i == j or i not in (0, 1, 2) or j not in (0, 1, 2):
        raise InvalidArgumentError(f"Need two distinct indices in 0..2, got ({i}, {j})")
    li, lj = L_VARS[i], L_VARS[j]
    unit_i, unit_j = _UNIT[li], _UNIT[lj]
    groups = _split(a, li)
    top = max(groups, default=0)

    quotient: dict[int, int] = {}
    carry: dict[int, int] = {}
    for k in range(top, 0, -1):
        # b_{k-1} = a_k + l_j * b_k
        nxt = dict(groups.get(k, {}))
        for key, c in carry.items():
            shifted = key + unit_j
            v = nxt.get(shifted, 0) + c
            if v:
                nxt[shifted] = v
            else:
                nxt.pop(shifted, None)
        carry = nxt
        offset = (k - 1) * unit_i
        for key, c in carry.items():
            quotient[key + offset] = c

    remainder = dict(groups.get(0, {}))
    for key, c in carry.items():
        shifted = key + unit_j
        v = remainder.get(shifted, 0) + c
        if v:
            remainder[shifted] = v
        else:
            remainder.pop(shifted, None)
    if remainder:
        rem = IntPoly._wrap(remainder)
        raise NonzeroRemainderError(
            f"Polynomial is not divisible by {li} - {lj}",
            technical_details=f"remainder at {li} = {lj}: {to_text(rem)}",
            suggestion="The localization sum has a pole; check the numerators",
        )
    return IntPoly._wrap(quotient)


def reduce_mod_univariate(a: IntPoly, v: str, m: IntPoly) -> IntPoly:
    """Remainder of a modulo m, both viewed as univariate in v.

    Raises:
        NotMonicError: if the leading v-coefficient of m is not 1.
    """
    m_coeffs = coefficients_in(m, v)
    d = len(m_coeffs) - 1
    if m_coeffs[-1] != 1:
        raise NotMonicError(
            f"Modulus is not monic in {v}",
            technical_details=f"leading coefficient: {to_text(m_coeffs[-1])}",
        )
    coeffs = coefficients_in(a, v)
    v_poly = IntPoly.var(v)
    for e in range(len(coeffs) - 1, d - 1, -1):
        lc = coeffs[e]
        if not lc:
            continue
        # subtract lc * v^(e-d) * m
        for t, mc in enumerate(m_coeffs):
            coeffs[e - d + t] = sub(coeffs[e - d + t], mul(lc, mc))
    result = IntPoly.zero()
    for e in range(min(d, len(coeffs)) - 1, -1, -1):
        result = add(mul(result, v_poly), coeffs[e])
    return result


def normal_form_mod_2c3(a: IntPoly) -> IntPoly:
    """Canonical representative of a in Z[T, c2, c3]/(2c3).

    Raises:
        ForeignVariableError: if a mentions anything besides T, c2, c3.
    """
    foreign = variables(a) - {"T", "c2", "c3"}
    if foreign:
        raise ForeignVariableError(
            f"Normal form mod 2c3 needs a polynomial in T, c2, c3; found {', '.join(sorted(foreign))}",
            suggestion="Rewrite in Chern classes with c1 = 0 first",
        )
    out = {}
    for k, c in a._terms.items():
        if _exp(k, "c3"):
            c %= 2
        if c:
            out[k] = c
    return IntPoly._wrap(out)


def _render(a: IntPoly, symbol: Mapping[str, str], fmt_power) -> str:
    if not a._terms:
        return "0"
    pieces = []
    for idx, key in enumerate(sorted(a._terms, reverse=True)):
        c = a._terms[key]
        factors = []
        for name in _RENDER_ORDER:
            e = _exp(key, name)
            if e == 1:
                factors.append(symbol[name])
            elif e:
                factors.append(fmt_power(symbol[name], e))
        mono = "".join(factors)
        mag = abs(c)
        body = mono if mag == 1 and mono else f"{mag}{mono}"
        if idx == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(pieces)


def to_text(a: IntPoly) -> str:
    """Canonical ASCII rendering, e.g. ``6T^2 - 2c2``."""
    return _render(a, {n: n for n in ALPHABET.names}, lambda s, e: f"{s}^{e}")


def to_latex(a: IntPoly) -> str:
    """LaTeX rendering in the same order, e.g. ``6T^2 - 2c_2``."""
    return _render(a, _LATEX_NAMES, lambda s, e: f"{s}^{e}" if e < 10 else f"{s}^{{{e}}}")


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<int>\d+)
      | (?P<var>[cl]_?\{?\d\}?|T|Q|H)
      | (?P<cdot>\\cdot)
      | (?P<op>[-+*^(){}])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidArgumentError(
                f"Cannot parse polynomial at position {pos}: {text[pos:pos + 12]!r}"
            )
        pos = m.end()
        if m.group("int") is not None:
            tokens.append(("int", m.group("int")))
        elif m.group("var") is not None:
            name = re.sub(r"[_{}]", "", m.group("var"))
            if name not in ALPHABET:
                raise InvalidArgumentError(f"Unknown variable in polynomial: {m.group('var')}")
            tokens.append(("var", name))
        elif m.group("cdot") is not None:
            tokens.append(("op", "*"))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


class _Parser:
    """Recursive-descent parser: expr := term (('+'|'-') term)*."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise InvalidArgumentError(f"Unexpected end of polynomial: {self.text!r}")
        self.pos += 1
        return tok

    def expect(self, op: str) -> None:
        tok = self.take()
        if tok != ("op", op):
            raise InvalidArgumentError(f"Expected {op!r} in {self.text!r}, got {tok[1]!r}")

    def parse(self) -> IntPoly:
        if not self.tokens:
            raise InvalidArgumentError("Empty polynomial")
        result = self.expr()
        if self.peek() is not None:
            raise InvalidArgumentError(f"Trailing input in {self.text!r}: {self.peek()[1]!r}")
        return result

    def expr(self) -> IntPoly:
        sign = 1
        if self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        result = scale(self.term(), sign)
        while self.peek() in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
            result = add(result, scale(self.term(), sign))
        return result

    def _starts_factor(self) -> bool:
        tok = self.peek()
        return tok is not None and (tok[0] in ("int", "var") or tok == ("op", "("))

    def term(self) -> IntPoly:
        result = self.factor()
        while True:
            if self.peek() == ("op", "*"):
                self.take()
                result = mul(result, self.factor())
            elif self._starts_factor():
                result = mul(result, self.factor())
            else:
                return result

    def factor(self) -> IntPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "{"):
                self.take()
                kind, value = self.take()
                self.expect("}")
            else:
                kind, value = self.take()
            if kind != "int":
                raise InvalidArgumentError(f"Exponent must be a non-negative integer in {self.text!r}")
            base = power(base, int(value))
        return base

    def atom(self) -> IntPoly:
        kind, value = self.take()
        if kind == "int":
            return IntPoly.constant(int(value))
        if kind == "var":
            return IntPoly.var(value)
        if value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if value == "{":
            inner = self.expr()
            self.expect("}")
            return inner
        raise InvalidArgumentError(f"Unexpected {value!r} in {self.text!r}")


def parse(text: str) -> IntPoly:
    """Parse canonical text or the LaTeX spelling used in printed tables.

    Accepts ``c2`` or ``c_2``, ``T^4`` or ``T^{4}``, implicit or explicit
    (``*``, ``\\cdot``) multiplication and powers of parenthesised groups.
    """
    return _Parser(text).parse()


_SYMPY_SYMBOLS = sympy.symbols(" ".join(ALPHABET.names))


def to_sympy(a: IntPoly) -> sympy.Expr:
    terms = []
    for mono, c in a.terms.items():
        factors = [sympy.Integer(c)]
        factors.extend(sym**e for sym, e in zip(_SYMPY_SYMBOLS, mono) if e)
        terms.append(sympy.Mul(*factors))
    return sympy.Add(*terms)


def from_sympy(expr: sympy.Expr) -> IntPoly:
    expr = sympy.expand(sympy.sympify(expr))
    extra = expr.free_symbols - set(_SYMPY_SYMBOLS)
    if extra:
        raise InvalidArgumentError(
            f"Expression uses symbols outside the alphabet: {sorted(map(str, extra))}"
        )
    poly = sympy.Poly(expr, *_SYMPY_SYMBOLS)
    terms = {}
    for mono, coeff in poly.terms():
        if not coeff.is_integer:
            raise InvalidArgumentError(f"Non-integer coefficient {coeff} in {expr}")
        terms[tuple(int(e) for e in mono)] = int(coeff)
    return IntPoly(terms)


T = IntPoly.var("T")
C1 = IntPoly.var("c1")
C2 = IntPoly.var("c2")
C3 = IntPoly.var("c3")
L0, L1, L2 = (IntPoly.var(name) for name in L_VARS)
Q = IntPoly.var("Q")
H = IntPoly.var("H")
