"""The cone of monotone, nef, nearly uniform classes ``(d, a, b)``."""

from models.divisor import Triple

NEF_GENERATORS = (
    Triple(1, 0, 0),
    Triple(3, 1, 0),
    Triple(3, 1, 1),
    Triple(8, 3, 0),
    Triple(8, 3, 1),
    Triple(11, 4, 3),
    Triple(17, 6, 6),
)


def nearly_uniform_nef_generators():
    return list(NEF_GENERATORS)


def cone_contains(triple):
    d, a, b = triple
    return (
        a >= b
        and b >= 0
        and 3 * d - 8 * a >= 0
        and 5 * d - 13 * a - b >= 0
        and 6 * d - 15 * a - 2 * b >= 0
    )


def _cheapest_degrees(a, b):
    """For every (x, y) with x <= a and y <= b, the least degree of a combination
    of the generators other than L with multiplicities (x, y), plus the last
    generator used to reach it."""
    steps = [(k, g) for k, g in enumerate(NEF_GENERATORS) if g.a or g.b]
    cost = [[None] * (b + 1) for _ in range(a + 1)]
    last = [[None] * (b + 1) for _ in range(a + 1)]
    cost[0][0] = 0
    for x in range(a + 1):
        for y in range(min(x, b) + 1):
            for k, g in steps:
                if g.a > x or g.b > y or cost[x - g.a][y - g.b] is None:
                    continue
                candidate = cost[x - g.a][y - g.b] + g.d
                if cost[x][y] is None or candidate < cost[x][y]:
                    cost[x][y], last[x][y] = candidate, k
    return cost, last


def cone_decompose(triple):
    d, a, b = triple
    if min(d, a, b) < 0:
        return None
    cost, last = _cheapest_degrees(a, b)
    if cost[a][b] is None or cost[a][b] > d:
        return None
    coeffs = [0] * len(NEF_GENERATORS)
    # the rest of the degree is made up with copies of L
    coeffs[NEF_GENERATORS.index(Triple(1, 0, 0))] = d - cost[a][b]
    x, y = a, b
    while (x, y) != (0, 0):
        k = last[x][y]
        coeffs[k] += 1
        x, y = x - NEF_GENERATORS[k].a, y - NEF_GENERATORS[k].b
    return coeffs
