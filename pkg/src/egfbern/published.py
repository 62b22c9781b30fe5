"""Values as printed in the published tables, transcribed verbatim.

Strings are kept exactly as typeset (``-15/12`` is not reduced) so that a
transcription can be compared against the source by eye.
"""

from dataclasses import dataclass

from .qseries import parse_rational


@dataclass(frozen=True)
class PublishedTable:
    key: str
    kind: str  # "bernoulli" or "comp"
    series: str
    N: int
    start: int
    raw: tuple

    @property
    def values(self) -> tuple:
        return tuple(parse_rational(s) for s in self.raw)

    @property
    def indices(self) -> range:
        return range(self.start, self.start + len(self.raw))


def _row(text: str) -> tuple:
    return tuple(text.split())


TABLES = {t.key: t for t in (
    PublishedTable("bernoulli-exp-1", "bernoulli", "exp", 1, 0, _row(
        "1 -1/2 1/6 0 -1/30 0 1/42 0 -1/30 0 5/66 0 -691/2730 0 7/6")),
    PublishedTable("bernoulli-exp-2", "bernoulli", "exp", 2, 0, _row(
        "1 -1/3 1/18 1/90 -1/270 -5/1134 -1/5670 7/2430 13/7290 -307/133650")),
    PublishedTable("bernoulli-sin-1", "bernoulli", "sin", 1, 0, _row(
        "1 0 1/3 0 7/15 0 31/21 0 127/15 0 2555/33 0 1414477/1365 0")),
    PublishedTable("bernoulli-sin-3", "bernoulli", "sin", 3, 0, _row(
        "-1 0 -1/10 0 -11/350 0 -17/1050 0 -563/57750 0 -381/250250 0")),
    PublishedTable("bernoulli-cos-2", "bernoulli", "cos", 2, 0, _row(
        "-1 0 -1/6 0 -1/10 0 -5/42 0 -7/30 0 -15/22 0 -7601/2730 0")),
    PublishedTable("bernoulli-zeta1-1", "bernoulli", "zeta:1", 1, 0, _row(
        "1 -1/4 1/72 1/96 61/21600 -1/640 -12491/5080320 -479/580608")),
    PublishedTable("bernoulli-zeta2-1", "bernoulli", "zeta:2", 1, 0, _row(
        "1 -1/8 11/432 1/144 -217/324000 -157/64800 -21503/16669800")),
    PublishedTable("bernoulli-zrising3-3", "bernoulli", "zrising:3", 3, 0, _row(
        "60 -15/12 9/56 3/64 401/31360 127/50176 -9089/33116160 -192233/264929280")),
    PublishedTable("bernoulli-sfac2-1", "bernoulli", "sfac2", 1, 0, _row(
        "-1 -1/4 5/72 1/48 139/21600 -1/540 859/2540160 71/483840 -9769/36288000")),
    PublishedTable("comp-exp-2", "comp", "exp", 2, 1, _row(
        "1 -2/3 5/6 -68/45 193/54 -655/53 19349/540 -57736/405 520343/810")),
)}


# Printed polynomial lists, coefficients in ascending powers of x.
SFAC2_POLYS = {
    0: ("1",),
    1: ("-1/4", "1"),
    2: ("5/72", "-1/2", "1/2"),
    3: ("-1/48", "5/24", "-3/8", "1/6"),
    4: ("139/21600", "-1/12", "5/24", "-1/6", "1/24"),
    5: ("-1/540", "139/4320", "-5/48", "25/216", "-5/96", "1/120"),
}

COMP_EXP1_POLYS = {
    0: ("1",),
    1: ("0", "1"),
    2: ("0", "-1", "1/2"),
    3: ("0", "-2", "-1", "1/6"),
    4: ("0", "-6", "5/2", "-1/2", "1/24"),
    5: ("0", "24", "-8", "3/2", "-1/6", "1/120"),
    6: ("0", "-120", "32", "-31/6", "-7/12", "-1/24", "1/720"),
    7: ("0", "720", "-156", "21", "-13/6", "1/6", "-1/120", "1/5040"),
}
