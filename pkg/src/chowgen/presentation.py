"""Both forms of the presentation ideal, and the checks tying them together.

The closed form is built from the localization relations, the
generating-function form from the series coefficients. They are shown to
generate the same ideal of Z[T, c2, c3]/(2c3) by explicit rewriting
identities in both directions, so no ideal-membership search is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from chowgen.algebra.localization import (
    alpha,
    chern_product_P,
    complement_class,
    eighth_e3_quotient,
)
from chowgen.algebra.ring import (
    C2,
    C3,
    IntPoly,
    T,
    add,
    degree,
    exact_div,
    mul,
    normal_form_mod_2c3,
    parse,
    power,
    scale,
    sub,
    substitute,
    to_text,
)
from chowgen.algebra.series import AMBIENT, rho
from chowgen.algebra.symm import to_chern
from chowgen.golden import TABLE_ONE, GoldenBlock
from chowgen.logging_config import (
    InvalidArgumentError,
    InvalidRError,
    MismatchReport,
    NotDivisibleError,
    get_logger,
)

logger = get_logger("presentation")

TWO_C3 = scale(C3, 2)
AMBIENT_LABEL = "(T^3 + c2T + c3)"


class Form(Enum):
    CLOSED = "closed"
    GF = "gf"


@dataclass(frozen=True)
class Generator:
    name: str
    poly: IntPoly

    @property
    def degree(self) -> int | None:
        return degree(self.poly)


@dataclass(frozen=True)
class PresentationIdeal:
    """Ordered generators of the relation ideal for one r."""

    r: int
    form: Form
    generators: tuple[Generator, ...]

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def __getitem__(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise InvalidRError(r)


def _nf(a: IntPoly) -> IntPoly:
    return normal_form_mod_2c3(a)


def _congruent(a: IntPoly, b: IntPoly) -> bool:
    return not _nf(sub(a, b))


def alpha_name(component: int, k: int, r: int) -> str:
    return f"alpha_{component},{k}^{r}"


def rho_name(j: int, n: int) -> str:
    return f"rho_{j},{n}"


def ambient_rho_name(r: int) -> str:
    return f"{rho_name(2, 2 * r - 2)}{AMBIENT_LABEL}"


def _ambient_generators(r: int) -> list[Generator]:
    return [
        Generator("2c3", TWO_C3),
        Generator(f"ambient^{r + 1}", _nf(power(AMBIENT, r + 1))),
    ]


def closed_form_ideal(r: int) -> PresentationIdeal:
    """2c3, the ambient power and the six alpha relations, each reduced mod 2c3.

    Raises:
        InvalidRError: if r < 1.
    """
    _check_r(r)
    generators = _ambient_generators(r)
    for component in (1, 2):
        for k in (0, 1, 2):
            generators.append(
                Generator(alpha_name(component, k, r), _nf(alpha(component, r, k)))
            )
    logger.debug(f"Closed form for r={r}: {len(generators)} generators")
    return PresentationIdeal(r, Form.CLOSED, tuple(generators))


def gf_form_ideal(r: int) -> PresentationIdeal:
    """2c3, the ambient power and the five series coefficients, each reduced mod 2c3.

    Raises:
        InvalidRError: if r < 1.
    """
    _check_r(r)
    generators = _ambient_generators(r)
    generators += [
        Generator(rho_name(1, r), _nf(rho(1, r))),
        Generator(rho_name(1, r + 1), _nf(rho(1, r + 1))),
        Generator(ambient_rho_name(r), _nf(mul(AMBIENT, rho(2, 2 * r - 2)))),
        Generator(rho_name(2, 2 * r), _nf(rho(2, 2 * r))),
        Generator(rho_name(2, 2 * r + 2), _nf(rho(2, 2 * r + 2))),
    ]
    logger.debug(f"Generating-function form for r={r}: {len(generators)} generators")
    return PresentationIdeal(r, Form.GF, tuple(generators))


def presentation(r: int, form: Form | str) -> PresentationIdeal:
    form = Form(form)
    return closed_form_ideal(r) if form is Form.CLOSED else gf_form_ideal(r)


@dataclass(frozen=True)
class ClaimCertificate:
    """Outcome of each rewriting identity behind one ideal-equality claim."""

    r: int
    claim: str
    identities: tuple[tuple[str, bool], ...]

    @property
    def failed(self) -> list[str]:
        return [name for name, ok in self.identities if not ok]

    def __bool__(self) -> bool:
        return all(ok for _, ok in self.identities)


def certify_claim_Z1(r: int) -> ClaimCertificate:
    """Rewrite each first-component alpha in the rho_1's and back."""
    _check_r(r)
    a0, a1, a2 = (alpha(1, r, k) for k in (0, 1, 2))
    p_r, p_next = rho(1, r), rho(1, r + 1)
    identities = (
        ("alpha_1,0 = rho_1,r", _congruent(a0, p_r)),
        ("alpha_1,1 = rho_1,r+1 - T rho_1,r", _congruent(a1, sub(p_next, mul(T, p_r)))),
        ("alpha_1,2 = -c2 rho_1,r", _congruent(a2, mul(-C2, p_r))),
        ("rho_1,r = alpha_1,0", _congruent(p_r, a0)),
        ("rho_1,r+1 = alpha_1,1 + T alpha_1,0", _congruent(p_next, add(a1, mul(T, a0)))),
    )
    return ClaimCertificate(r, "Z1", identities)


def certify_claim_Z2(r: int) -> ClaimCertificate:
    """Rewrite each second-component alpha in the rho_2's and back."""
    _check_r(r)
    a0, a1, a2 = (alpha(2, r, k) for k in (0, 1, 2))
    p_prev, p_r, p_next = rho(2, 2 * r - 2), rho(2, 2 * r), rho(2, 2 * r + 2)
    amb_prev = mul(AMBIENT, p_prev)
    t2_c2 = add(power(T, 2), C2)
    identities = (
        ("alpha_2,0 = rho_2,2r", _congruent(a0, p_r)),
        ("alpha_2,1 = amb rho_2,2r-2 - T rho_2,2r", _congruent(a1, sub(amb_prev, mul(T, p_r)))),
        (
            "alpha_2,2 = T alpha_2,1 - (T^2 + c2) rho_2,2r + rho_2,2r+2",
            _congruent(a2, add(sub(mul(T, a1), mul(t2_c2, p_r)), p_next)),
        ),
        ("rho_2,2r = alpha_2,0", _congruent(p_r, a0)),
        ("amb rho_2,2r-2 = alpha_2,1 + T alpha_2,0", _congruent(amb_prev, add(a1, mul(T, a0)))),
        (
            "rho_2,2r+2 = alpha_2,2 - T alpha_2,1 + (T^2 + c2) alpha_2,0",
            _congruent(p_next, add(sub(a2, mul(T, a1)), mul(t2_c2, a0))),
        ),
    )
    return ClaimCertificate(r, "Z2", identities)


def verify_claim_Z1(r: int) -> bool:
    certificate = certify_claim_Z1(r)
    if not certificate:
        logger.warning(f"Claim Z1 fails at r={r}: {certificate.failed}")
    return bool(certificate)


def verify_claim_Z2(r: int) -> bool:
    certificate = certify_claim_Z2(r)
    if not certificate:
        logger.warning(f"Claim Z2 fails at r={r}: {certificate.failed}")
    return bool(certificate)


def ambient_redundancy_witness() -> IntPoly:
    """q with chern_product_P(2, 0) = 2c3 * q at c1 = 0.

    Raises:
        NotDivisibleError: if the relation is not a multiple of 2c3.
    """
    return exact_div(to_chern(chern_product_P(2, 0), set_c1_zero=True), TWO_C3)


def verify_ambient_redundancy() -> bool:
    """The d = 2 relation at Q = 0 already lies in (2c3), at c1 = 0 and before."""
    try:
        witness = ambient_redundancy_witness()
        eighth_e3_quotient()
    except NotDivisibleError as e:
        logger.warning(f"Ambient relation is not redundant: {e}")
        return False
    logger.debug(f"P_2(0) = 2c3 * ({to_text(witness)})")
    return True


def verify_complement_class() -> bool:
    """The complement class lies in (c1, 2c3): it is -2c3 once c1 = 0."""
    return substitute(complement_class(), "c1", 0) == scale(C3, -2)


@dataclass(frozen=True)
class TableCell:
    """A computed table entry beside the printed one."""

    label: str
    latex_label: str
    computed: IntPoly
    golden: str
    exact: Optional[IntPoly] = None

    @property
    def matches(self) -> bool:
        return _nf(parse(self.golden)) == _nf(self.computed)

    @property
    def text(self) -> str:
        return to_text(self.computed)


@dataclass(frozen=True)
class TableRow:
    left: TableCell
    right: TableCell


@dataclass(frozen=True)
class TableBlock:
    r: int
    ambient: tuple[TableCell, TableCell]
    z1: tuple[TableRow, ...]
    z2: tuple[TableRow, ...]

    @property
    def rows(self) -> tuple[TableRow, ...]:
        return self.z1 + self.z2

    @property
    def cells(self) -> list[TableCell]:
        out = list(self.ambient)
        for row in self.rows:
            out += [row.left, row.right]
        return out

    @property
    def mismatches(self) -> list[TableCell]:
        return [cell for cell in self.cells if not cell.matches]


def _golden_block(r: int) -> GoldenBlock:
    if r not in TABLE_ONE:
        raise InvalidArgumentError(
            f"The printed table covers r = 1, 2, 3, got {r}",
            suggestion="Use `chowgen present` for other ranks",
        )
    return TABLE_ONE[r]


def build_table_block(r: int) -> TableBlock:
    """Computed and printed entries for one block, without raising on mismatch."""
    golden = _golden_block(r)
    closed = closed_form_ideal(r)
    gf = gf_form_ideal(r)

    ambient = (
        TableCell("2c3", "2c_3", closed["2c3"].poly, golden.ambient[0]),
        TableCell(
            f"ambient^{r + 1}",
            f"(T^3+c_2T+c_3)^{{{r + 1}}}",
            closed[f"ambient^{r + 1}"].poly,
            golden.ambient[1],
        ),
    )
    right_names = {
        (1, 0): rho_name(1, r),
        (1, 1): rho_name(1, r + 1),
        (2, 0): rho_name(2, 2 * r),
        (2, 1): ambient_rho_name(r),
        (2, 2): rho_name(2, 2 * r + 2),
    }
    rows: dict[int, list[TableRow]] = {1: [], 2: []}
    golden_rows = {1: golden.z1, 2: golden.z2}
    for component in (1, 2):
        for k, g in enumerate(golden_rows[component]):
            left_name = alpha_name(component, k, r)
            right_name = right_names[(component, k)]
            rows[component].append(
                TableRow(
                    left=TableCell(
                        left_name,
                        g.left_label,
                        closed[left_name].poly,
                        g.left,
                        exact=alpha(component, r, k),
                    ),
                    right=TableCell(right_name, g.right_label, gf[right_name].poly, g.right),
                )
            )
    return TableBlock(r, ambient, tuple(rows[1]), tuple(rows[2]))


def reproduce_table(r: int) -> TableBlock:
    """One block of the printed generator table, checked cell by cell.

    Raises:
        MismatchReport: listing every computed cell that differs from print.
    """
    block = build_table_block(r)
    mismatches = block.mismatches
    if mismatches:
        raise MismatchReport(
            [(f"r={r} {cell.label}", cell.text, cell.golden) for cell in mismatches]
        )
    return block


@dataclass(frozen=True)
class RawDiscrepancy:
    label: str
    exact: str
    printed: str


def raw_discrepancies(r: int) -> list[RawDiscrepancy]:
    """Alpha cells whose exact integer value differs from print before reduction mod 2c3."""
    golden = _golden_block(r)
    out = []
    for component, golden_rows in ((1, golden.z1), (2, golden.z2)):
        for k, g in enumerate(golden_rows):
            exact = alpha(component, r, k)
            if exact != parse(g.left):
                out.append(RawDiscrepancy(alpha_name(component, k, r), to_text(exact), g.left))
    if out:
        logger.info(f"r={r}: {len(out)} alpha cells agree with print only mod 2c3")
    return out
