"""Graded power-series expansion of rational generating functions in T, c2, c3."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from chowgen.algebra.localization import alpha, product_form_r2_denominator
from chowgen.algebra.ring import (
    C2,
    C3,
    IntPoly,
    T,
    add,
    exponent_rows,
    homogeneous_components,
    mul,
    normal_form_mod_2c3,
    power,
    scale,
    sub,
    to_text,
)
from chowgen.logging_config import InvalidArgumentError, NonUnitConstantError, get_logger

logger = get_logger("algebra.series")


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPoly
    denominator: IntPoly
    name: str = ""

    def __str__(self) -> str:
        label = f"{self.name} = " if self.name else ""
        return f"{label}({to_text(self.numerator)}) / ({to_text(self.denominator)})"


@dataclass(frozen=True)
class GradedSeries:
    """Homogeneous components 0..truncation of an expansion."""

    components: tuple[IntPoly, ...]

    @property
    def truncation(self) -> int:
        return len(self.components) - 1

    def component(self, d: int) -> IntPoly:
        if d < 0:
            return IntPoly.zero()
        if d > self.truncation:
            raise InvalidArgumentError(
                f"Degree {d} is beyond the truncation {self.truncation}",
                suggestion="Expand to a larger degree first",
            )
        return self.components[d]

    def total(self) -> IntPoly:
        result = IntPoly.zero()
        for part in self.components:
            result = add(result, part)
        return result

    def __len__(self) -> int:
        return len(self.components)


_inverse_cache: dict[IntPoly, list[IntPoly]] = {}
_inverse_lock = threading.Lock()


def _inverse_components(denominator: IntPoly, n: int) -> list[IntPoly]:
    """Components 0..n of 1/denominator, extending the memoised expansion as needed."""
    u = denominator.coefficient()
    if u not in (1, -1):
        raise NonUnitConstantError(
            f"Denominator constant term must be 1 or -1, got {u}",
            technical_details=f"denominator: {to_text(denominator)}",
        )
    # denominator = u (1 + P)
    p_parts = {d: part for d, part in homogeneous_components(scale(denominator, u)).items() if d}
    with _inverse_lock:
        series = _inverse_cache.setdefault(denominator, [IntPoly.one()])
        while len(series) <= n:
            m = len(series)
            acc = IntPoly.zero()
            for d, part in p_parts.items():
                if d <= m:
                    acc = sub(acc, mul(part, series[m - d]))
            series.append(acc)
        inverse = series[: n + 1]
    return [scale(s, u) for s in inverse]


def expand(g: RationalGF, N: int) -> GradedSeries:
    """Components 0..N of numerator / denominator as a graded power series.

    Raises:
        NonUnitConstantError: if the denominator's constant term is not a unit.
    """
    if N < 0:
        raise InvalidArgumentError(f"Expansion degree must be non-negative, got {N}")
    inverse = _inverse_components(g.denominator, N)
    numerator_parts = homogeneous_components(g.numerator)
    components = []
    for d in range(N + 1):
        acc = IntPoly.zero()
        for j, part in numerator_parts.items():
            if j <= d:
                acc = add(acc, mul(part, inverse[d - j]))
        components.append(acc)
    return GradedSeries(tuple(components))


def _one_minus(p: IntPoly) -> IntPoly:
    return sub(IntPoly.one(), p)


R1 = RationalGF(IntPoly.constant(2), add(power(_one_minus(T), 2), C2), "R1")

_R2_BASE = sub(
    mul(
        _one_minus(power(T, 2)),
        add(power(sub(_one_minus(power(T, 2)), C2), 2), C2),
    ),
    power(C2, 2),
)
R2_STATED_MINUS = RationalGF(IntPoly.one(), add(_R2_BASE, mul(sub(T, C3), C3)), "R2 (T - c3)c3")
R2_STATED_PLUS = RationalGF(IntPoly.one(), add(_R2_BASE, mul(add(T, C3), C3)), "R2 (T + c3)c3")

AMBIENT = add(add(power(T, 3), mul(C2, T)), C3)
A10_DENOMINATOR = add(add(power(_one_minus(T), 3), mul(_one_minus(T), C2)), C3)

# numerators over the R2 denominator: 1, T^3 + c2T + c3 - T, T^4 + c2T^2 + c3T - 2T^2 - c2 + 1
_A2_NUMERATORS = (
    IntPoly.one(),
    sub(AMBIENT, T),
    add(
        sub(add(add(power(T, 4), mul(C2, power(T, 2))), mul(C3, T)), scale(power(T, 2), 2)),
        _one_minus(C2),
    ),
)


@dataclass(frozen=True)
class R2Resolution:
    """Which R2 denominator agrees with the product-form oracle."""

    adopted: RationalGF
    oracle_denominator: IntPoly
    candidates: tuple[RationalGF, ...]
    exact_candidate: str | None
    congruent_mod_2c3: tuple[bool, ...]


@lru_cache(maxsize=None)
def resolve_r2() -> R2Resolution:
    """Adopt the stated R2 form equal to the oracle, or the oracle itself if none is."""
    oracle = product_form_r2_denominator()
    candidates = (R2_STATED_MINUS, R2_STATED_PLUS)
    congruent = tuple(
        not normal_form_mod_2c3(sub(c.denominator, oracle)) for c in candidates
    )
    exact = next((c for c in candidates if c.denominator == oracle), None)
    if exact is not None:
        adopted = exact
        logger.info(f"R2 denominator matches the product form: {exact.name}")
    else:
        adopted = RationalGF(IntPoly.one(), oracle, "R2")
        logger.info(
            "No stated R2 denominator equals the product form; adopting "
            f"{to_text(oracle)} (stated forms congruent mod 2c3: {congruent})"
        )
    return R2Resolution(
        adopted=adopted,
        oracle_denominator=oracle,
        candidates=candidates,
        exact_candidate=exact.name if exact is not None else None,
        congruent_mod_2c3=congruent,
    )


def r2() -> RationalGF:
    return resolve_r2().adopted


def generating_function(j: int) -> RationalGF:
    if j == 1:
        return R1
    if j == 2:
        return r2()
    raise InvalidArgumentError(f"Generating function index must be 1 or 2, got {j}")


def rho(j: int, n: int) -> IntPoly:
    """Degree-n homogeneous term of R_j; zero for negative n."""
    g = generating_function(j)
    if n < 0:
        return IntPoly.zero()
    return expand(g, n).component(n)


def resummed_A(component: int, k: int) -> RationalGF:
    """Closed rational form of the sum over r of the alpha relations."""
    if k not in (0, 1, 2):
        raise InvalidArgumentError(f"k must be 0, 1 or 2, got {k}")
    name = f"A({component},{k})"
    if component == 1:
        base = scale(_one_minus(T), 2)
        factor = (IntPoly.one(), _one_minus(T), -C2)[k]
        return RationalGF(mul(factor, base), A10_DENOMINATOR, name)
    if component == 2:
        return RationalGF(_A2_NUMERATORS[k], r2().denominator, name)
    raise InvalidArgumentError(f"component must be 1 or 2, got {component}")


def relation_degree(component: int, r: int, k: int) -> int:
    return r + k if component == 1 else 2 * r + k


@dataclass(frozen=True)
class CrosscheckResult:
    """Truthy iff every alpha matched its series component modulo 2c3."""

    component: int
    k: int
    passed: bool
    exact: bool
    failure: tuple[int, int] | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.passed


def crosscheck_resummation(component: int, k: int, R_max: int) -> CrosscheckResult:
    """Compare alpha(component, r, k) for 0 <= r <= R_max with the resummed series."""
    if R_max < 0:
        raise InvalidArgumentError(f"R_max must be non-negative, got {R_max}")
    g = resummed_A(component, k)
    series = expand(g, relation_degree(component, R_max, k))
    exact = True
    for r in range(R_max + 1):
        d = relation_degree(component, r, k)
        lhs = alpha(component, r, k)
        rhs = series.component(d)
        if lhs == rhs:
            continue
        exact = False
        if normal_form_mod_2c3(sub(lhs, rhs)):
            logger.warning(f"{g.name}: alpha at r={r} differs from degree {d} component")
            return CrosscheckResult(component, k, False, False, failure=(r, d), checked=r + 1)
    return CrosscheckResult(component, k, True, exact, checked=R_max + 1)


def c3_coefficients_even(g: RationalGF, N: int) -> bool:
    """True iff every term containing c3 in components 0..N has an even coefficient."""
    for part in expand(g, N).components:
        for (c3,), coeff in exponent_rows(part, ("c3",)):
            if c3 and coeff % 2:
                return False
    return True
