"""Published Euler characteristics used as data and as test fixtures.

TABLE4: even weight, lambda -> (H3, M3 non-hyperelliptic, M3).
TABLE5: odd weight, lambda -> M3.
TABLE6: high weight, lambda -> (H3, M3 non-hyperelliptic, M2 x A1, A111, A3).
TABLE7: even weight, lambda -> A3.
"""

from __future__ import annotations

TABLE4: dict[tuple[int, int, int], tuple[int, int, int]] = {
    (0, 0, 0): (1, 2, 3),
    (2, 0, 0): (-1, 1, 0),
    (1, 1, 0): (0, -1, -1),
    (4, 0, 0): (-1, 1, 0),
    (3, 1, 0): (0, 0, 0),
    (2, 2, 0): (-1, 1, 0),
    (2, 1, 1): (0, 1, 1),
    (6, 0, 0): (-5, 4, -1),
    (5, 1, 0): (-2, 1, -1),
    (4, 2, 0): (-5, 3, -2),
    (4, 1, 1): (0, -1, -1),
    (3, 3, 0): (0, 2, 2),
    (3, 2, 1): (0, 0, 0),
    (2, 2, 2): (-3, 4, 1),
    (8, 0, 0): (-7, 9, 2),
    (7, 1, 0): (-8, 7, -1),
    (6, 2, 0): (-13, 14, 1),
    (6, 1, 1): (-2, 0, -2),
    (5, 3, 0): (-10, 8, -2),
    (5, 2, 1): (-10, 6, -4),
    (4, 4, 0): (-5, 7, 2),
    (4, 3, 1): (-4, 4, 0),
    (4, 2, 2): (-7, 8, 1),
    (3, 3, 2): (-2, 0, -2),
    (10, 0, 0): (-17, 13, -4),
    (9, 1, 0): (-22, 20, -2),
    (8, 2, 0): (-43, 37, -6),
    (8, 1, 1): (-8, 7, -1),
    (7, 3, 0): (-34, 26, -8),
    (7, 2, 1): (-32, 28, -4),
    (6, 4, 0): (-37, 31, -6),
    (6, 3, 1): (-26, 17, -9),
    (6, 2, 2): (-27, 25, -2),
    (5, 5, 0): (-6, 8, 2),
    (5, 4, 1): (-22, 22, 0),
    (5, 3, 2): (-12, 9, -3),
    (4, 4, 2): (-15, 13, -2),
    (4, 3, 3): (0, -2, -2),
}

TABLE5: dict[tuple[int, int, int], int] = {
    (1, 0, 0): 0, (3, 0, 0): 0, (2, 1, 0): 0, (1, 1, 1): 0,
    (5, 0, 0): 0, (4, 1, 0): 2, (3, 2, 0): -2, (3, 1, 1): 2,
    (2, 2, 1): 0, (7, 0, 0): -2, (6, 1, 0): 4, (5, 2, 0): 4,
    (5, 1, 1): 10, (4, 3, 0): 2, (4, 2, 1): 2, (3, 3, 1): 4,
    (3, 2, 2): 0, (9, 0, 0): 4, (8, 1, 0): 8, (7, 2, 0): 10,
    (7, 1, 1): 18, (6, 3, 0): 20, (6, 2, 1): 12, (5, 4, 0): 6,
    (5, 3, 1): 20, (5, 2, 2): 2, (4, 4, 1): 2, (4, 3, 2): 4,
    (3, 3, 3): 8, (11, 0, 0): 4, (10, 1, 0): 30, (9, 2, 0): 36,
}

TABLE6: dict[tuple[int, int, int], tuple[int, int, int, int, int]] = {
    (40, 0, 0): (-3825, 3257, 731, -161, 2),
    (32, 5, 3): (-188587, 156651, 44843, -12615, 292),
    (24, 12, 4): (-502970, 419733, 116703, -32415, 1051),
    (21, 15, 4): (-351374, 292508, 82372, -22910, 596),
    (14, 13, 13): (-2262, 1795, 649, -191, -9),
}

TABLE7: dict[tuple[int, int, int], int] = {
    (0, 0, 0): 5, (2, 0, 0): -2, (1, 1, 0): -1, (4, 0, 0): -2, (3, 1, 0): 0,
    (2, 2, 0): 0, (2, 1, 1): 1, (6, 0, 0): -3, (5, 1, 0): -1, (4, 2, 0): 0,
    (4, 1, 1): 1, (3, 3, 0): 0, (3, 2, 1): 0, (2, 2, 2): 1, (8, 0, 0): 0,
    (7, 1, 0): -1, (6, 2, 0): 1, (6, 1, 1): 0, (5, 3, 0): 0, (5, 2, 1): 0,
    (4, 4, 0): 0, (4, 3, 1): 0, (4, 2, 2): 1, (3, 3, 2): 0, (10, 0, 0): -4,
    (9, 1, 0): 0, (8, 2, 0): 0, (8, 1, 1): 1, (7, 3, 0): -2, (7, 2, 1): 0,
    (6, 4, 0): 0, (6, 3, 1): -1, (6, 2, 2): 0, (5, 5, 0): 0, (5, 4, 1): 0,
    (5, 3, 2): -1, (4, 4, 2): 0, (4, 3, 3): 0,
    (12, 0, 0): -1, (11, 1, 0): -3, (10, 2, 0): 0, (10, 1, 1): -1, (9, 3, 0): 0,
    (9, 2, 1): 0, (8, 4, 0): 0, (8, 3, 1): -2, (8, 2, 2): 3, (7, 5, 0): -2,
    (7, 4, 1): 0, (7, 3, 2): 1, (6, 6, 0): 5, (6, 5, 1): -1, (6, 4, 2): 0,
    (6, 3, 3): 1, (5, 5, 2): -1, (5, 4, 3): 0, (4, 4, 4): 0,
    (14, 0, 0): -2, (13, 1, 0): -3, (12, 2, 0): -1, (12, 1, 1): 0, (11, 3, 0): -2,
    (11, 2, 1): 0, (10, 4, 0): 4, (10, 3, 1): -2, (10, 2, 2): 1, (9, 5, 0): 0,
    (9, 4, 1): 0, (9, 3, 2): 0, (8, 6, 0): 0, (8, 5, 1): -2, (8, 4, 2): 0,
    (8, 3, 3): 0, (7, 7, 0): -1, (7, 6, 1): 0, (7, 5, 2): 1, (7, 4, 3): 0,
    (6, 6, 2): 4, (6, 5, 3): 1, (6, 4, 4): 0, (5, 5, 4): 0,
    (16, 0, 0): -2, (15, 1, 0): -4, (14, 2, 0): 4, (14, 1, 1): -1, (13, 3, 0): -4,
    (13, 2, 1): 0, (12, 4, 0): 4, (12, 3, 1): -3, (12, 2, 2): 4, (11, 5, 0): -2,
    (11, 4, 1): 0, (11, 3, 2): -1, (10, 6, 0): 4, (10, 5, 1): -2, (10, 4, 2): 4,
    (10, 3, 3): 0, (9, 7, 0): 0, (9, 6, 1): 0, (9, 5, 2): 0, (9, 4, 3): 0,
    (8, 8, 0): 8, (8, 7, 1): 1, (8, 6, 2): 3, (8, 5, 3): 0, (8, 4, 4): 8,
    (7, 7, 2): 0, (7, 6, 3): 0, (7, 5, 4): 0, (6, 6, 4): 3, (6, 5, 5): 0,
    (18, 0, 0): -5, (17, 1, 0): -7, (16, 2, 0): -4, (16, 1, 1): -1, (15, 3, 0): 0,
    (15, 2, 1): 0, (14, 4, 0): -4, (14, 3, 1): -4, (14, 2, 2): 7, (13, 5, 0): 0,
    (13, 4, 1): 0, (13, 3, 2): 1, (12, 6, 0): 3, (12, 5, 1): -3, (12, 4, 2): 4,
    (12, 3, 3): -1, (11, 7, 0): -3, (11, 6, 1): 0, (11, 5, 2): 7, (11, 4, 3): 0,
    (10, 8, 0): 0, (10, 7, 1): -1, (10, 6, 2): 5, (10, 5, 3): 0, (10, 4, 4): 4,
    (9, 9, 0): 4, (9, 8, 1): 0, (9, 7, 2): 0, (9, 6, 3): 8, (9, 5, 4): 0,
    (8, 8, 2): 3, (8, 7, 3): -3, (8, 6, 4): 0, (8, 5, 5): 0, (7, 7, 4): -1,
    (7, 6, 5): 0, (6, 6, 6): 3,
}
