"""Symmetric polynomials in l0, l1, l2 and their Chern-class form.

Chern classes follow the factorization
(x - l0)(x - l1)(x - l2) = x^3 + c1 x^2 + c2 x + c3, so c1 = -e1, c2 = e2,
c3 = -e3 in terms of the elementary symmetric polynomials e_k.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from chowgen.algebra.ring import (
    CHERN_VARS,
    INERT_VARS,
    L_VARS,
    IntPoly,
    add,
    exponent_rows,
    mul,
    permute,
    power,
    product,
    substitute_many,
    variables,
)
from chowgen.logging_config import ForeignVariableError, NotSymmetricError, get_logger

logger = get_logger("algebra.symm")


@dataclass(frozen=True)
class ChernConvention:
    """Signs s_k with c_k = s_k * e_k."""

    signs: tuple[int, int, int] = (-1, 1, -1)

    def sign(self, k: int) -> int:
        return self.signs[k - 1]

    def as_dict(self) -> dict[str, tuple[str, int]]:
        return {f"e{k}": (f"c{k}", self.sign(k)) for k in (1, 2, 3)}


CHERN_CONVENTION = ChernConvention()

# the two transpositions generate S3
_GENERATORS = ({"l0": "l1", "l1": "l0"}, {"l1": "l2", "l2": "l1"})


def elementary(k: int) -> IntPoly:
    """e_k(l0, l1, l2); e_0 = 1 and e_k = 0 for k > 3."""
    if k == 0:
        return IntPoly.one()
    if k < 0 or k > 3:
        return IntPoly.zero()
    ls = [IntPoly.var(name) for name in L_VARS]
    result = IntPoly.zero()
    for subset in combinations(ls, k):
        result = add(result, product(subset))
    return result


def complete_homogeneous(n: int) -> IntPoly:
    """h_n(l0, l1, l2), the sum of all monomials of degree n."""
    if n < 0:
        return IntPoly.zero()
    return IntPoly(
        {(0, 0, 0, 0, a, b, n - a - b, 0, 0): 1 for a in range(n + 1) for b in range(n - a + 1)}
    )


def chern_in_l(name: str) -> IntPoly:
    """The Chern class c1, c2 or c3 written in l0, l1, l2."""
    if name not in CHERN_VARS:
        raise ForeignVariableError(f"Not a Chern class: {name}")
    k = int(name[1])
    return elementary(k) * CHERN_CONVENTION.sign(k)


def from_chern(a: IntPoly) -> IntPoly:
    """Rewrite c1, c2, c3 in terms of l0, l1, l2."""
    return substitute_many(a, {name: chern_in_l(name) for name in CHERN_VARS})


def is_symmetric(a: IntPoly) -> bool:
    """True iff a is invariant under every permutation of l0, l1, l2."""
    return all(permute(a, swap) == a for swap in _GENERATORS)


def _check_input(a: IntPoly) -> None:
    chern = variables(a) & set(CHERN_VARS)
    if chern:
        raise ForeignVariableError(
            f"Symmetric reduction expects l0, l1, l2 with inert T, Q, H; found {', '.join(sorted(chern))}"
        )
    if not is_symmetric(a):
        raise NotSymmetricError(
            "Polynomial is not symmetric in l0, l1, l2",
            suggestion="Only S3-invariant polynomials have a Chern-class form",
        )


def to_chern(a: IntPoly, set_c1_zero: bool = False) -> IntPoly:
    """Write a symmetric polynomial in Chern classes, T, Q and H.

    With ``set_c1_zero`` the reduction runs on the plane l0 + l1 + l2 = 0,
    where the symmetric polynomials are exactly Z[e2, e3]; otherwise the
    Gauss elimination runs on the dominant monomials l0^a l1^b l2^c with
    a >= b >= c. In both cases the elimination residue must vanish, which
    certifies that substituting the l-expansions back reproduces the input.

    Raises:
        NotSymmetricError: if a is not invariant under permutations of the l's.
        ForeignVariableError: if a already mentions c1, c2 or c3.
    """
    _check_input(a)
    if set_c1_zero:
        return _reduce_on_trace_zero_plane(a)
    return _reduce_dominant(a)


@lru_cache(maxsize=None)
def _dominant_expansion(x: int, y: int) -> dict[tuple[int, int, int], int]:
    """Dominant coefficients of e1^x e2^y."""
    expanded = mul(power(elementary(1), x), power(elementary(2), y))
    return {
        mono: c for mono, c in exponent_rows(expanded, L_VARS) if mono[0] >= mono[1] >= mono[2]
    }


def _reduce_dominant(a: IntPoly) -> IntPoly:
    groups: dict[tuple[int, ...], dict[tuple[int, int, int], int]] = defaultdict(dict)
    for exps, c in exponent_rows(a, INERT_VARS + L_VARS):
        inert, ls = exps[:3], exps[3:]
        if ls[0] >= ls[1] >= ls[2]:
            groups[inert][ls] = c

    sign1, sign3 = CHERN_CONVENTION.sign(1), CHERN_CONVENTION.sign(3)
    terms: dict[tuple[int, ...], int] = {}
    for (t, q, h), dominant in groups.items():
        while dominant:
            lead = max(dominant)
            coeff = dominant[lead]
            x, y, z = lead[0] - lead[1], lead[1] - lead[2], lead[2]
            # e1^x e2^y e3^z = (s1 c1)^x c2^y (s3 c3)^z
            mono = (t, x, y, z, 0, 0, 0, q, h)
            terms[mono] = coeff * sign1**x * sign3**z
            for (p0, p1, p2), ec in _dominant_expansion(x, y).items():
                key = (p0 + z, p1 + z, p2 + z)
                v = dominant.get(key, 0) - coeff * ec
                if v:
                    dominant[key] = v
                else:
                    dominant.pop(key, None)
    return IntPoly(terms)


def _umul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


# On the line (l0, l1, l2) = (x, 1, -1 - x): e2 = -(x^2 + x + 1), e3 = -(x^2 + x).
_E2_LINE = [-1, -1, -1]
_E3_LINE = [0, -1, -1]


@lru_cache(maxsize=None)
def _line_basis(b: int, c: int) -> tuple[int, ...]:
    """e2^b e3^c restricted to the line, as coefficients in x."""
    if b == 0 and c == 0:
        return (1,)
    if c:
        return tuple(_umul(list(_line_basis(b, c - 1)), _E3_LINE))
    return tuple(_umul(list(_line_basis(b - 1, 0)), _E2_LINE))


def _reduce_on_trace_zero_plane(a: IntPoly) -> IntPoly:
    # group by inert exponents and l-degree; within a group index by (l0, l2) exponents
    groups: dict[tuple[int, ...], dict[int, dict[int, int]]] = defaultdict(lambda: defaultdict(dict))
    for exps, c in exponent_rows(a, INERT_VARS + L_VARS):
        t, q, h, a0, a1, a2 = exps
        groups[(t, q, h, a0 + a1 + a2)][a2][a0] = c

    sign3 = CHERN_CONVENTION.sign(3)
    terms: dict[tuple[int, ...], int] = {}
    for (t, q, h, n), by_l2 in groups.items():
        # Horner in l2 = -1 - x with l0 = x, l1 = 1
        acc: list[int] = [0]
        for e2 in range(max(by_l2), -1, -1):
            acc = _umul(acc, [-1, -1]) if any(acc) else [0]
            row = by_l2.get(e2, {})
            if row:
                width = max(len(acc), max(row) + 1)
                acc = acc + [0] * (width - len(acc))
                for e0, c in row.items():
                    acc[e0] += c
        # eliminate from the top: e2^b e3^c has leading term (-1)^s x^(2s), s = b + c
        for s in range(n // 2, -1, -1):
            c3 = n - 2 * s
            b2 = 3 * s - n
            if c3 < 0 or b2 < 0:
                continue
            lead = acc[2 * s] if 2 * s < len(acc) else 0
            if not lead:
                continue
            g = lead * (-1) ** s
            for i, v in enumerate(_line_basis(b2, c3)):
                acc[i] -= g * v
            # e2 = c2 and e3 = s3 * c3
            terms[(t, 0, b2, c3, 0, 0, 0, q, h)] = g * sign3**c3
        if any(acc):
            raise NotSymmetricError(
                "Symmetric reduction left a nonzero residue",
                technical_details=f"group T^{t} Q^{q} H^{h}, degree {n}: residue {acc}",
            )
    return IntPoly(terms)
