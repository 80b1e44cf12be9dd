"""Text, LaTeX and JSON renderings of presentations, tables and series.

Every rendering is a pure function of canonical term order, so repeated
runs give byte-identical output. JSON uses ASCII variable names and
decimal-string coefficients.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence, TextIO

from chowgen.algebra.ring import ALPHABET, IntPoly, to_latex, to_text
from chowgen.algebra.series import GradedSeries
from chowgen.logging_config import ForeignVariableError, InvalidArgumentError
from chowgen.presentation import (
    Form,
    Generator,
    PresentationIdeal,
    TableBlock,
    TableCell,
)

JSON_VARS = ("T", "c2", "c3")
_JSON_INDEX = {name: ALPHABET.index(name) for name in JSON_VARS}


class OutputFormat(Enum):
    TEXT = "text"
    LATEX = "latex"
    JSON = "json"


@dataclass(frozen=True)
class OutputDocument:
    format: OutputFormat
    payload: str

    def emit(self, stream: TextIO) -> None:
        stream.write(self.payload)


def dump_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


_ALPHA = re.compile(r"^alpha_(\d),(\d)\^(\d+)$")
_RHO = re.compile(r"^rho_(\d),(\d+)(\(T\^3 \+ c2T \+ c3\))?$")
_AMBIENT = re.compile(r"^ambient\^(\d+)$")


def latex_label(name: str) -> str:
    """LaTeX spelling of a generator name, e.g. ``alpha_1,0^3`` -> ``\\alpha_{1,0}^{3}``."""
    if name == "2c3":
        return "2c_3"
    if m := _AMBIENT.match(name):
        return f"(T^3+c_2T+c_3)^{{{m.group(1)}}}"
    if m := _ALPHA.match(name):
        return rf"\alpha_{{{m.group(1)},{m.group(2)}}}^{{{m.group(3)}}}"
    if m := _RHO.match(name):
        suffix = "(T^3+c_2T+c_3)" if m.group(3) else ""
        return rf"\rho_{{{m.group(1)},{m.group(2)}}}{suffix}"
    raise InvalidArgumentError(f"Unknown generator name: {name!r}")


def poly_terms(a: IntPoly) -> list[dict[str, Any]]:
    """Terms of a polynomial in T, c2, c3 as JSON objects, in canonical order."""
    rows = []
    for mono, coeff in a.terms.items():
        foreign = [n for n, e in zip(ALPHABET.names, mono) if e and n not in JSON_VARS]
        if foreign:
            raise ForeignVariableError(f"JSON terms carry only T, c2, c3; found {foreign}")
        rows.append(
            {
                "coeff": str(coeff),
                "exps": {name: mono[i] for name, i in _JSON_INDEX.items()},
            }
        )
    return rows


def poly_from_terms(rows: Sequence[dict[str, Any]]) -> IntPoly:
    terms: dict[tuple[int, ...], int] = {}
    for row in rows:
        mono = [0] * len(ALPHABET)
        for name, e in row["exps"].items():
            if name not in _JSON_INDEX:
                raise ForeignVariableError(f"Unexpected variable {name!r} in JSON terms")
            mono[_JSON_INDEX[name]] = int(e)
        terms[tuple(mono)] = terms.get(tuple(mono), 0) + int(row["coeff"])
    return IntPoly(terms)


# presentations


def presentation_to_dict(ideal: PresentationIdeal) -> dict[str, Any]:
    return {
        "r": ideal.r,
        "form": ideal.form.value,
        "generators": [
            {"name": g.name, "degree": g.degree, "terms": poly_terms(g.poly)}
            for g in ideal.generators
        ],
    }


def presentation_from_dict(data: dict[str, Any]) -> PresentationIdeal:
    try:
        generators = tuple(
            Generator(g["name"], poly_from_terms(g["terms"])) for g in data["generators"]
        )
        return PresentationIdeal(int(data["r"]), Form(data["form"]), generators)
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidArgumentError(
            f"Malformed presentation JSON: {e}",
            suggestion="Expected the output of `chowgen present --format json`",
        ) from e


def presentation_to_text(ideal: PresentationIdeal) -> str:
    lines = [f"# r={ideal.r} form={ideal.form.value}"]
    lines += [f"{g.name} = {to_text(g.poly)}" for g in ideal.generators]
    return "\n".join(lines) + "\n"


def presentation_to_latex(ideal: PresentationIdeal) -> str:
    ambient, rest = ideal.generators[:2], ideal.generators[2:]
    title = "closed form" if ideal.form is Form.CLOSED else "generating function form"
    lines = [
        r"\begin{tabular}{|l|}",
        r"\hline",
        rf"\multicolumn{{1}}{{|c|}}{{$r={ideal.r}$, {title}}}\\",
        r"\hline",
        rf"Ambient relations: ${', '.join(latex_label(g.name) for g in ambient)}$\\",
        r"\hline",
    ]
    lines += [f"${latex_label(g.name)} = {to_latex(g.poly)}$\\\\" for g in rest]
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines) + "\n"


def render_presentations(ideals: Sequence[PresentationIdeal], fmt: OutputFormat) -> OutputDocument:
    if fmt is OutputFormat.JSON:
        payloads = [presentation_to_dict(i) for i in ideals]
        return OutputDocument(fmt, dump_json(payloads[0] if len(payloads) == 1 else payloads))
    render = presentation_to_text if fmt is OutputFormat.TEXT else presentation_to_latex
    return OutputDocument(fmt, "\n".join(render(i) for i in ideals))


def parse_presentation_json(text: str) -> PresentationIdeal | list[PresentationIdeal]:
    """Inverse of the JSON rendering; a list payload gives a list of ideals."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidArgumentError(f"Not valid JSON: {e}") from e
    if isinstance(data, list):
        return [presentation_from_dict(d) for d in data]
    return presentation_from_dict(data)


# tables


def _cell_line(cell: TableCell) -> str:
    return f"{cell.label} = {cell.text}"


def table_to_text(blocks: Sequence[TableBlock]) -> str:
    lines = []
    for block in blocks:
        lines.append(f"## r={block.r}")
        lines.append("[ambient]")
        lines += [_cell_line(c) for c in block.ambient]
        for title, rows in (("[Z1]", block.z1), ("[Z2]", block.z2)):
            lines.append(title)
            for row in rows:
                lines += [_cell_line(row.left), _cell_line(row.right)]
        lines.append("")
    return "\n".join(lines)


def _latex_cell(cell: TableCell) -> str:
    return f"${cell.latex_label} = {to_latex(cell.computed)}$"


def table_to_latex(blocks: Sequence[TableBlock]) -> str:
    out = []
    for block in blocks:
        ambient = ", ".join(c.latex_label for c in block.ambient)
        lines = [
            rf"$\mathcal M_0(\mathbb P^{block.r},2)$",
            "",
            r"\begin{tabular}{|l|l|}",
            r"\hline",
            rf"\multicolumn{{2}}{{|c|}}{{Ambient relations: ${ambient}$}}\\",
        ]
        for name, rows in (("Z_1", block.z1), ("Z_2", block.z2)):
            lines += [r"\hline", rf"\multicolumn{{2}}{{|c|}}{{Classes from ${name}$}}\\", r"\hline"]
            lines += [f"{_latex_cell(row.left)} & {_latex_cell(row.right)}\\\\" for row in rows]
        lines += [r"\hline", r"\end{tabular}", ""]
        out.append("\n".join(lines))
    return "\n".join(out)


def _cell_dict(cell: TableCell) -> dict[str, Any]:
    out = {
        "name": cell.label,
        "value": cell.text,
        "printed": cell.golden,
        "matches": cell.matches,
    }
    # alpha cells also carry the value before reduction mod 2c3
    if cell.exact is not None:
        out["exact"] = to_text(cell.exact)
    return out


def table_to_dict(blocks: Sequence[TableBlock]) -> dict[str, Any]:
    return {
        f"r={block.r}": {
            "ambient": [_cell_dict(c) for c in block.ambient],
            "Z1": [[_cell_dict(row.left), _cell_dict(row.right)] for row in block.z1],
            "Z2": [[_cell_dict(row.left), _cell_dict(row.right)] for row in block.z2],
        }
        for block in blocks
    }


def render_table(blocks: Sequence[TableBlock], fmt: OutputFormat) -> OutputDocument:
    if fmt is OutputFormat.JSON:
        return OutputDocument(fmt, dump_json(table_to_dict(blocks)))
    if fmt is OutputFormat.LATEX:
        return OutputDocument(fmt, table_to_latex(blocks))
    return OutputDocument(fmt, table_to_text(blocks))


# series


def series_to_dict(which: str, series: GradedSeries) -> dict[str, Any]:
    return {
        "which": which,
        "components": [
            {"degree": d, "terms": poly_terms(part)} for d, part in enumerate(series.components)
        ],
    }


def render_series(which: str, series: GradedSeries, fmt: OutputFormat) -> OutputDocument:
    j = which[-1]
    if fmt is OutputFormat.JSON:
        return OutputDocument(fmt, dump_json(series_to_dict(which, series)))
    if fmt is OutputFormat.LATEX:
        lines = [
            rf"$\rho_{{{j},{d}}} = {to_latex(part)}$\\" for d, part in enumerate(series.components)
        ]
    else:
        lines = [f"deg{d}: {to_text(part)}" for d, part in enumerate(series.components)]
    return OutputDocument(fmt, "\n".join(lines) + "\n")
