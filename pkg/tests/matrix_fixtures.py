"""Expected matrices for the block-reduction trace at low degrees.

Shared between the unit tests and the acceptance suite so the display
fixtures are written down exactly once.
"""

from signmoduli import MultivariatePolynomial, RationalMatrix


def _vars(d):
    return [MultivariatePolynomial.variable(j, d) for j in range(d)]


def expected_start(d):
    a = _vars(d)
    if d == 2:
        return RationalMatrix([
            [1, a[1], a[0], 0],
            [0, 1, a[1], a[0]],
            [1, a[1] * -1, a[0], 0],
            [0, 1, a[1] * -1, a[0]],
        ])
    if d == 3:
        return RationalMatrix([
            [1, a[2], a[1], a[0], 0, 0],
            [0, 1, a[2], a[1], a[0], 0],
            [0, 0, 1, a[2], a[1], a[0]],
            [1, a[2] * -1, a[1], a[0] * -1, 0, 0],
            [0, 1, a[2] * -1, a[1], a[0] * -1, 0],
            [0, 0, 1, a[2] * -1, a[1], a[0] * -1],
        ])
    raise ValueError(d)


def expected_combined(d):
    a = _vars(d)
    if d == 2:
        # every entry of the doubled rows carries the factor 2,
        # including the a_0 column
        return RationalMatrix([
            [2, 0, a[0] * 2, 0],
            [0, 2, 0, a[0] * 2],
            [0, a[1] * -1, 0, 0],
            [0, 0, a[1] * -1, 0],
        ])
    if d == 3:
        return RationalMatrix([
            [2, 0, a[1] * 2, 0, 0, 0],
            [0, 2, 0, a[1] * 2, 0, 0],
            [0, 0, 2, 0, a[1] * 2, 0],
            [0, a[2] * -1, 0, a[0] * -1, 0, 0],
            [0, 0, a[2] * -1, 0, a[0] * -1, 0],
            [0, 0, 0, a[2] * -1, 0, a[0] * -1],
        ])
    raise ValueError(d)


def expected_permuted(d):
    a = _vars(d)
    if d == 2:
        return RationalMatrix([
            [2, a[0] * 2, 0, 0],
            [0, a[1] * -1, 0, 0],
            [0, 0, 2, a[0] * 2],
            [0, 0, a[1] * -1, 0],
        ])
    if d == 3:
        return RationalMatrix([
            [2, a[1] * 2, 0, 0, 0, 0],
            [0, 2, a[1] * 2, 0, 0, 0],
            [0, a[2] * -1, a[0] * -1, 0, 0, 0],
            [0, 0, 0, 2, a[1] * 2, 0],
            [0, 0, 0, a[2] * -1, a[0] * -1, 0],
            [0, 0, 0, 0, a[2] * -1, a[0] * -1],
        ])
    raise ValueError(d)


def expected_degree_four_blocks():
    a = _vars(4)
    top_left = RationalMatrix([
        [2, a[2] * 2, a[0] * 2, 0],
        [0, 2, a[2] * 2, a[0] * 2],
        [0, a[3] * -1, a[1] * -1, 0],
        [0, 0, a[3] * -1, a[1] * -1],
    ])
    bottom_right = RationalMatrix([
        [2, a[2] * 2, a[0] * 2, 0],
        [0, 2, a[2] * 2, a[0] * 2],
        [a[3] * -1, a[1] * -1, 0, 0],
        [0, a[3] * -1, a[1] * -1, 0],
    ])
    return top_left, bottom_right
