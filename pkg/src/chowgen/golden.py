"""Published generator table for r = 1, 2, 3.

Entries are kept exactly as typeset (LaTeX spelling, spacing and the odd
``1c_3`` included) and parsed on demand, so a comparison failure always
points at the printed text rather than a transcription of it.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class GoldenRow:
    """One table row: a pushforward class and the matching series coefficient."""

    left_label: str
    left: str
    right_label: str
    right: str


@dataclass(frozen=True)
class GoldenBlock:
    r: int
    ambient: tuple[str, str]
    z1: tuple[GoldenRow, ...]
    z2: tuple[GoldenRow, ...]

    @property
    def rows(self) -> tuple[GoldenRow, ...]:
        return self.z1 + self.z2


TABLE_ONE: dict[int, GoldenBlock] = {
    1: GoldenBlock(
        r=1,
        ambient=("2c_3", "(T^3+c_2T+c_3)^2"),
        z1=(
            GoldenRow(r"\alpha_{1,0}^1", "4T", r"\rho_{1,1}", "4T"),
            GoldenRow(r"\alpha_{1,1}^1", "2T^2 - 2c_2", r"\rho_{1,2}", "6T^2 - 2c_2"),
        ),
        z2=(
            GoldenRow(r"\alpha_{2,0}^1", "3T^2+c_2", r"\rho_{2,2}", "3T^2+c_2"),
            GoldenRow(
                r"\alpha_{2,1}^1",
                "-2T^3+c_3",
                r"\rho_{2,0}(T^3+c_2T+c_3)",
                "T^3+c_2T+c_3",
            ),
            GoldenRow(
                r"\alpha_{2,2}^1",
                "T^4-c_2T^2",
                r"\rho_{2,4}",
                "6T^4 + 3c_2T^2 + c_3T + c_2^2",
            ),
        ),
    ),
    2: GoldenBlock(
        r=2,
        ambient=("2c_3", "(T^3+c_2T+c_3)^3"),
        z1=(
            GoldenRow(r"\alpha_{1,0}^2", "6T^2 - 2c_2", r"\rho_{1,2}", "6T^2 - 2c_2"),
            GoldenRow(r"\alpha_{1,1}^2", "2T^3 - 6c_2T", r"\rho_{1,3}", "8T^3 - 8c_2T"),
        ),
        z2=(
            GoldenRow(
                r"\alpha_{2,0}^2",
                "6T^4 + 3c_2T^2+c_3T+c_2^2",
                r"\rho_{2,4}",
                "6T^4 + 3c_2T^2+c_3T+c_2^2",
            ),
            GoldenRow(
                r"\alpha_{2,1}^2",
                "-3T^5 +c_2T^3 + c_2c_3",
                r"\rho_{2,2}(T^3+c_2T+c_3)",
                "3T^5 +4c_2T^3+c_3T^2+c_2^2T+c_2c_3",
            ),
            GoldenRow(
                r"\alpha_{2,2}^2",
                "T^6 -3c_2T^4 + c_3T^3 + c_3^2",
                r"\rho_{2,6}",
                "10T^6+5c_2T^4+4c_2^2T^2+c_3^2+c_2^3",
            ),
        ),
    ),
    3: GoldenBlock(
        r=3,
        ambient=("2c_3", "(T^3+c_2T+c_3)^4"),
        z1=(
            GoldenRow(r"\alpha_{1,0}^3", "8T^3 - 8c_2T", r"\rho_{1,3}", "8T^3 - 8c_2T"),
            GoldenRow(
                r"\alpha_{1,1}^3",
                "2T^4 - 12c_2T^2 + 2c_2^2",
                r"\rho_{1,4}",
                "10T^4 - 20c_2T^2 + 2c_2^2",
            ),
        ),
        z2=(
            GoldenRow(
                r"\alpha_{2,0}^3",
                "10T^6 + 5c_2T^4  + 4c_2^2T^2  + c_2^3 + c_3^2",
                r"\rho_{2,6}",
                "10T^6 + 5c_2T^4  + 4c_2^2T^2  + c_2^3 + c_3^2",
            ),
            GoldenRow(
                r"\alpha_{2,1}^3",
                "-4T^7 + 4c_2T^5 + 1c_3T^4 + c_2^2c_3",
                r"\rho_{2,4}(T^3+c_2T+c_3)",
                "6T^7 + 9c_2T^5 + c_3T^4 + 4c_2^2T^3  + c_2^3T + c_3^2T + c_2^2c_3",
            ),
            GoldenRow(
                r"\alpha_{2,2}^3",
                "T^8 - 6c_2T^6  + c_2^2T^4  + c_2c_3^2",
                r"\rho_{2,8}",
                "15T^8 + 5c_2T^6 +c_3T^5 + 10c_2^2T^4  + 5c_2^3T^2 + c_3^2T^2 +c_2^2c_3T + c_2^4",
            ),
        ),
    ),
}

TABLE_RANKS = tuple(sorted(TABLE_ONE))
