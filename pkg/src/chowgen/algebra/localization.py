"""Three-point localization sums and the relation polynomials they produce.

Every sum here has the shape sum_i N_i / prod_{j != i} (+-(l_i - l_j)). It is
evaluated by putting the three summands over the Vandermonde denominator
(l1 - l0)(l2 - l0)(l2 - l1) and dividing the numerator by each factor in
turn; a nonzero remainder means the sum has a pole.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from chowgen.algebra.ring import (
    C1,
    C2,
    C3,
    H,
    L0,
    L1,
    L2,
    IntPoly,
    Q,
    T,
    add,
    degree,
    div_linear_binomial,
    exact_div,
    mul,
    power,
    product,
    reduce_mod_univariate,
    scale,
    sub,
    substitute,
)
from chowgen.algebra.symm import from_chern, is_symmetric, to_chern
from chowgen.logging_config import (
    InvalidArgumentError,
    NonzeroRemainderError,
    get_logger,
)

logger = get_logger("algebra.localization")

_LS = (L0, L1, L2)
# (i, j) pairs dividing out l_i - l_j, in the order the Vandermonde factors are cleared
DIVISION_ORDER = ((1, 0), (2, 0), (2, 1))


class Convention(Enum):
    """Sign pattern of the localization denominators.

    Z1 uses (l_j - l_i) for j != i, Z2 uses (l_i - l_j).
    """

    Z1 = -1
    Z2 = 1

    @property
    def denominator_sign(self) -> int:
        return self.value

    def summand_sign(self, points: int = 3) -> int:
        """Global sign of each summand relative to prod_{j != i} (l_i - l_j)."""
        return self.value ** (points - 1)


class WeightSign(Enum):
    """Restriction of H to the fixed points used in the Z1 numerators.

    TABLE uses l_i^k and reproduces the printed table exactly; FIXED_POINT
    uses the literal (-l_i)^k. They differ by (-1)^k.
    """

    TABLE = 1
    FIXED_POINT = -1


@dataclass(frozen=True)
class LocalizationSum:
    numerators: tuple[IntPoly, IntPoly, IntPoly]
    convention: Convention = Convention.Z2

    def __post_init__(self):
        if len(self.numerators) != 3:
            raise InvalidArgumentError(
                f"A localization sum needs three numerators, got {len(self.numerators)}"
            )


def vandermonde_numerator(s: LocalizationSum) -> IntPoly:
    """Numerator of the sum over (l1 - l0)(l2 - l0)(l2 - l1); antisymmetric in the l's."""
    n0, n1, n2 = s.numerators
    combined = add(
        sub(mul(n0, L2 - L1), mul(n1, L2 - L0)),
        mul(n2, L1 - L0),
    )
    return scale(combined, s.convention.summand_sign())


def eval_loc_sum(s: LocalizationSum) -> IntPoly:
    """Exact value of the sum as a polynomial in the l's and the inert variables.

    Raises:
        NonzeroRemainderError: if any Vandermonde factor fails to divide.
    """
    result = vandermonde_numerator(s)
    for i, j in DIVISION_ORDER:
        result = div_linear_binomial(result, i, j)
    return result


def _weight(i: int, k: int, weight_sign: WeightSign) -> IntPoly:
    return power(scale(_LS[i], weight_sign.value), k)


def _check_k(k: int) -> None:
    if k not in (0, 1, 2):
        raise InvalidArgumentError(f"k must be 0, 1 or 2, got {k}")


def _check_r(r: int) -> None:
    if r < 0:
        raise InvalidArgumentError(f"r must be non-negative, got {r}")


def alpha1_numerators(
    r: int, k: int, weight_sign: WeightSign = WeightSign.TABLE
) -> tuple[IntPoly, IntPoly, IntPoly]:
    """w_i^k (Q + 2 l_i)(T + l_i)^(r+1) for the three fixed points."""
    _check_r(r)
    _check_k(k)
    return tuple(
        product([_weight(i, k, weight_sign), Q + scale(l, 2), power(T + l, r + 1)])
        for i, l in enumerate(_LS)
    )


def alpha2_numerators(r: int, k: int) -> tuple[IntPoly, IntPoly, IntPoly]:
    """l_i^k (T + l_j)^(r+1) (T + l_k)^(r+1) with {i, j, k} = {0, 1, 2}."""
    _check_r(r)
    _check_k(k)
    powers = [power(T + l, r + 1) for l in _LS]
    return tuple(
        product([power(_LS[i], k)] + [powers[j] for j in range(3) if j != i]) for i in range(3)
    )


@lru_cache(maxsize=512)
def alpha1(
    r: int, k: int, keep_Q: bool = False, weight_sign: WeightSign = WeightSign.TABLE
) -> IntPoly:
    """Pushforward of H^k from the first envelope component, in T, c2, c3 (and Q)."""
    s = LocalizationSum(alpha1_numerators(r, k, weight_sign), Convention.Z1)
    value = to_chern(eval_loc_sum(s), set_c1_zero=True)
    if not keep_Q:
        value = substitute(value, "Q", 0)
    logger.debug(f"alpha1(r={r}, k={k}) has {len(value)} terms")
    return value


@lru_cache(maxsize=512)
def alpha2(r: int, k: int) -> IntPoly:
    """Pushforward of H^k from the second envelope component, in T, c2, c3."""
    s = LocalizationSum(alpha2_numerators(r, k), Convention.Z2)
    value = to_chern(eval_loc_sum(s), set_c1_zero=True)
    logger.debug(f"alpha2(r={r}, k={k}) has {len(value)} terms")
    return value


@dataclass(frozen=True)
class AlphaRelation:
    component: int
    k: int
    r: int
    value: IntPoly

    @property
    def degree(self) -> int:
        return self.r + self.k if self.component == 1 else 2 * self.r + self.k


def alpha(component: int, r: int, k: int) -> IntPoly:
    if component == 1:
        return alpha1(r, k)
    if component == 2:
        return alpha2(r, k)
    raise InvalidArgumentError(f"component must be 1 or 2, got {component}")


def alpha_relation(component: int, r: int, k: int) -> AlphaRelation:
    return AlphaRelation(component=component, k=k, r=r, value=alpha(component, r, k))


@dataclass
class PolynomialityReport:
    """Outcome of clearing the Vandermonde denominator for one relation."""

    component: int
    r: int
    k: int
    divisions: list[tuple[tuple[int, int], bool]] = field(default_factory=list)
    symmetric: bool = False
    degree: int | None = None

    @property
    def ok(self) -> bool:
        return len(self.divisions) == 3 and all(ok for _, ok in self.divisions) and self.symmetric


def polynomiality_report(component: int, r: int, k: int) -> PolynomialityReport:
    """Run the three binomial divisions and the symmetry check for one relation."""
    if component == 1:
        s = LocalizationSum(alpha1_numerators(r, k), Convention.Z1)
    elif component == 2:
        s = LocalizationSum(alpha2_numerators(r, k), Convention.Z2)
    else:
        raise InvalidArgumentError(f"component must be 1 or 2, got {component}")

    report = PolynomialityReport(component=component, r=r, k=k)
    current = vandermonde_numerator(s)
    for i, j in DIVISION_ORDER:
        try:
            current = div_linear_binomial(current, i, j)
        except NonzeroRemainderError as e:
            logger.warning(f"Pole along l{i} = l{j} for component {component}, r={r}, k={k}: {e}")
            report.divisions.append(((i, j), False))
            return report
        report.divisions.append(((i, j), True))
    report.symmetric = is_symmetric(current)
    report.degree = degree(current)
    return report


def chern_product_P(d: int, at_Q: IntPoly | int) -> IntPoly:
    """prod over i + j + k = d of (at_Q + i l0 + j l1 + k l2)."""
    if d < 1:
        raise InvalidArgumentError(f"d must be at least 1, got {d}")
    base = IntPoly.coerce(at_Q)
    factors = [
        base + scale(L0, i) + scale(L1, j) + scale(L2, d - i - j)
        for i in range(d + 1)
        for j in range(d - i + 1)
    ]
    return product(factors)


def complement_class() -> IntPoly:
    """[J0][J1][J2] reduced modulo the projective bundle relation, in Chern classes."""
    j_product = product([H - L1 - L2, H - L0 - L2, H - L0 - L1])
    modulus = from_chern(power(H, 3) + mul(C1, power(H, 2)) + mul(C2, H) + C3)
    reduced = reduce_mod_univariate(j_product, "H", modulus)
    return to_chern(reduced)


def product_form_r2_denominator() -> IntPoly:
    """prod_i (1 - (T + l_j)(T + l_k)) in T, c2, c3 at c1 = 0."""
    factors = [IntPoly.one() - mul(T + a, T + b) for a, b in ((L1, L2), (L0, L2), (L0, L1))]
    return to_chern(product(factors), set_c1_zero=True)


def eighth_e3_quotient() -> IntPoly:
    """chern_product_P(2, 0) divided by 8 l0 l1 l2 at generic c1.

    Raises:
        NotDivisibleError: if the factor 8 e3 is missing.
    """
    return exact_div(chern_product_P(2, 0), scale(product(_LS), 8))

