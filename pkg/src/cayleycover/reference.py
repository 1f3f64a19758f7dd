"""Published best-known values for small diameters (reference constants).

These tables record the outcomes of the exhaustive searches for three
generators, plus the rotationally-discretized construction sizes (the
`afg` column) for which no buildable procedure is available; they serve
as oracles for the test suite and as comparison columns in reports.
Entries marked provisional=True exceeded the verified search range and
are best-known, not proven.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class UndirectedRow:
    k: int
    ball: int  # |l1 ball of radius k|
    toroidal: int
    twisted: Optional[int]
    best_cyclic: int
    gens: Optional[tuple[int, int, int]]
    eff_discrete: str  # printed 6-decimal values
    eff_real: str


# best undirected cyclic Cayley graphs on three generators
UNDIRECTED_3GEN = (
    UndirectedRow(0, 1, 1, None, 1, None, "1.000000", ".222222"),
    UndirectedRow(1, 7, 3, 4, 7, (1, 2, 3), "1.000000", ".336000"),
    UndirectedRow(2, 25, 9, 16, 21, (1, 2, 8), ".840000", ".367347"),
    UndirectedRow(3, 63, 27, 48, 55, (1, 5, 21), ".873016", ".452675"),
    UndirectedRow(4, 129, 45, 108, 117, (1, 16, 22), ".906977", ".527423"),
    UndirectedRow(5, 231, 75, 192, 203, (1, 7, 57), ".878788", ".554392"),
    UndirectedRow(6, 377, 125, 320, 333, (1, 9, 73), ".883289", ".592000"),
    UndirectedRow(7, 575, 175, 500, 515, (1, 46, 56), ".895652", ".628944"),
    UndirectedRow(8, 833, 245, 720, 737, (1, 11, 133), ".884754", ".644700"),
    UndirectedRow(9, 1159, 343, 1008, 1027, (1, 13, 157), ".886109", ".665371"),
    UndirectedRow(10, 1561, 441, 1372, 1393, (1, 92, 106), ".892377", ".686940"),
    UndirectedRow(11, 2047, 567, 1792, 1815, (1, 15, 241), ".886663", ".696960"),
    UndirectedRow(12, 2625, 729, 2304, 2329, (1, 17, 273), ".887238", ".709953"),
    UndirectedRow(13, 3303, 891, 2916, 2943, (1, 154, 172), ".891008", ".724015"),
    UndirectedRow(14, 4089, 1089, 3600, 3629, (1, 19, 381), ".887503", ".730892"),
)


@dataclass(frozen=True)
class DirectedRow:
    k: int
    ball: int  # |simplex of radius k|
    ffz: Optional[int]
    toroidal: int
    improved: Optional[int]
    afg: Optional[int]
    best_cyclic: int
    gens: Optional[tuple[int, int, int]]
    eff_discrete: str
    eff_real: str
    provisional: bool = False


# best directed cyclic Cayley graphs on three generators
DIRECTED_3GEN = (
    DirectedRow(0, 1, None, 1, None, 1, 1, None, "1.000000", ".222222"),
    DirectedRow(1, 4, None, 2, 4, 4, 4, (1, 2, 3), "1.000000", ".375000"),
    DirectedRow(2, 10, None, 4, 4, 7, 9, (1, 3, 4), ".900000", ".432000"),
    DirectedRow(3, 20, None, 8, 16, 16, 16, (1, 4, 5), ".800000", ".444444"),
    DirectedRow(4, 35, None, 12, 16, 19, 27, (1, 4, 17), ".771428", ".472303"),
    DirectedRow(5, 56, None, 18, 32, 31, 40, (1, 6, 15), ".714286", ".468750"),
    DirectedRow(6, 84, None, 27, 32, 50, 57, (1, 13, 33), ".678571", ".469136"),
    DirectedRow(7, 120, 120, 36, 48, 56, 84, (2, 9, 35), ".700000", ".504000"),
    DirectedRow(8, 165, 159, 48, 72, 86, 111, (1, 31, 69), ".672727", ".500376"),
    DirectedRow(9, 220, 207, 64, 128, 128, 138, (1, 11, 78), ".627273", ".479167"),
    DirectedRow(10, 286, 263, 80, 128, 134, 176, (1, 17, 56), ".615385", ".480655"),
    DirectedRow(11, 364, 329, 100, 144, 182, 217, (1, 13, 119), ".596154", ".474490"),
    DirectedRow(12, 455, 405, 125, 192, 243, 273, (1, 14, 153), ".600000", ".485333"),
    DirectedRow(13, 560, 491, 150, 256, 252, 340, (1, 90, 191), ".607143", ".498047"),
    DirectedRow(14, 680, 589, 180, 288, 333, 395, (1, 35, 271), ".580882", ".482394"),
    DirectedRow(15, 816, 699, 216, 432, 432, 462, (1, 29, 97), ".566176", ".475309"),
    DirectedRow(16, 969, 823, 252, 432, 441, 560, (1, 215, 326), ".577915", ".489867"),
    DirectedRow(17, 1140, 960, 294, 500, 549, 648, (1, 76, 237), ".568421", ".486000"),
    DirectedRow(18, 1330, 1111, 343, 576, 676, 748, (1, 41, 147), ".562406", ".484613"),
    DirectedRow(19, 1540, 1277, 392, 600, 688, 861, (1, 27, 463), ".559091", ".485162"),
    DirectedRow(20, 1771, 1460, 448, 768, 844, 979, (1, 22, 351), ".552795", ".482781"),
    DirectedRow(21, 2024, 1658, 512, 1024, 1024, 1140, (1, 45, 196), ".563241", ".494792"),
    DirectedRow(22, 2300, 1875, 576, 1024, 1036, 1305, (1, 246, 1030), ".567391", ".501120"),
    DirectedRow(23, 2600, 2109, 648, 1024, 1228, 1440, (1, 126, 415), ".553846", ".491579"),
    DirectedRow(24, 2925, 2361, 729, 1280, 1445, 1616, (1, 56, 257), ".552479", ".492608"),
    DirectedRow(25, 3276, 2634, 810, 1372, 1460, 1788, (1, 154, 1452), ".545788", ".488703"),
    DirectedRow(26, 3654, 2926, 900, 1600, 1715, 1963, (1, 90, 780), ".537219", ".482923"),
    DirectedRow(27, 4060, 3240, 1000, 2000, 2000, 2224, (1, 425, 704), ".547783", ".494222"),
    DirectedRow(28, 4495, 3574, 1100, 2000, 2015, 2442, (1, 964, 1372), ".543270", ".491826"),
    DirectedRow(29, 4960, 3932, 1210, 2048, 2315, 2693, (1, 39, 942), ".542944", ".493103"),
    DirectedRow(30, 5456, 4312, 1331, 2400, 2646, 2920, (1, 540, 831), ".535191", ".487520"),
    DirectedRow(31, 5984, 4716, 1452, 2400, 2664, 3220, (7, 30, 2277), ".538102", ".491553"),
    DirectedRow(32, 6545, 5145, 1584, 2880, 3042, 3591, (1, 1519, 2031), ".548663", ".502531", True),
    DirectedRow(33, 7140, 5598, 1728, 3456, 3456, 3850, (2, 475, 1177), ".539216", ".495113", True),
    DirectedRow(34, 7770, 6078, 1872, 3456, 3474, 4191, (1, 748, 2652), ".539382", ".496437", True),
    DirectedRow(35, 8436, 6584, 2028, 3456, 3906, 4468, (1, 353, 2789), ".529635", ".488555", True),
)


@dataclass(frozen=True)
class DirectedAbelianRow:
    k: int
    n: int
    factors: tuple[int, ...]  # invariant factors, ascending
    gens: tuple[tuple[int, ...], ...]  # coordinates matching `factors`
    eff_discrete: str
    eff_real: str
    provisional: bool = False


# diameters where a non-cyclic Abelian group beats every cyclic one
# (generator coordinates converted to ascending invariant-factor order)
DIRECTED_3GEN_ABELIAN = (
    DirectedAbelianRow(12, 279, (3, 93), ((0, 1), (1, 9), (2, 10)), ".613187", ".496000"),
    DirectedAbelianRow(
        17, 672, (2, 2, 168), ((1, 0, 2), (0, 0, 9), (0, 1, 35)), ".589474", ".504000"
    ),
    DirectedAbelianRow(18, 752, (4, 188), ((0, 1), (2, 13), (1, 14)), ".565414", ".487204"),
    DirectedAbelianRow(
        19, 888, (2, 2, 222), ((0, 0, 1), (1, 0, 142), (0, 1, 180)), ".576623", ".500376"
    ),
    DirectedAbelianRow(26, 1980, (6, 330), ((0, 1), (2, 123), (3, 234)), ".541872", ".487105"),
    DirectedAbelianRow(
        27, 2268, (3, 3, 252), ((0, 0, 2), (1, 0, 9), (0, 1, 35)), ".558621", ".504000"
    ),
    DirectedAbelianRow(28, 2448, (3, 816), ((0, 1), (0, 427), (1, 564)), ".544605", ".493035"),
    DirectedAbelianRow(
        29, 2720, (2, 2, 680), ((0, 0, 1), (1, 0, 191), (0, 1, 90)), ".548387", ".498047"
    ),
    DirectedAbelianRow(
        30, 2997, (3, 3, 333), ((0, 0, 1), (1, 0, 31), (0, 1, 180)), ".549304", ".500376"
    ),
    DirectedAbelianRow(35, 4500, (15, 300), ((0, 1), (1, 3), (7, 214)), ".533428", ".492054", True),
)


def undirected_row(k: int) -> UndirectedRow:
    return UNDIRECTED_3GEN[k]


def directed_row(k: int) -> DirectedRow:
    return DIRECTED_3GEN[k]
