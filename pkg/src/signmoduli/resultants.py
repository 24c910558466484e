"""Resultant of a polynomial and its sign-flipped mirror, exactly.

For monic Q(x) = x^d + a_{d-1}x^{d-1} + ... + a_0 the resultant
R := Res(Q(x), (-1)^d Q(-x)) detects opposite root pairs: R = 0 exactly
when some r and -r are both roots.  Splitting Q into the polynomials
Q1, Q2 with Q(x) = even/odd recombination of Q1(x^2) and x*Q2(x^2),
R factors as a constant times a_0 times the square of
R0 := Res(Q1, Q2).  This module computes both sides symbolically and
numerically, fits the constant, and replays the row/column reduction
that proves the factorization, recording every step so that any
deviation from the documented bookkeeping is visible instead of
silently absorbed.

Conventions.  Coefficient points are ascending: coeffs[j] = a_j,
j = 0..d-1 (the leading 1 is implicit).  Polynomial coefficient
sequences handed to the Sylvester builder are descending, leading
entry first.  Symbolic variables: index j of a MultivariatePolynomial
in d variables stands for a_j.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from hashlib import blake2b

from .multipoly import MultivariatePolynomial, det_fraction_free

SYMBOLIC_CAP = 8
DEFAULT_SYMBOLIC_BOUND = 4
POINT_CAP = 64


class DegenerateSample(ValueError):
    """A sampled coefficient point has a_0 * R0 = 0 and cannot be used
    for constant fitting."""


class RationalMatrix:
    """Dense square matrix over exact scalars or symbolic polynomials.

    Entries are ints, Fractions, or MultivariatePolynomial values; the
    determinant is always computed fraction-free.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not square")
        self.rows = rows

    @property
    def size(self):
        return len(self.rows)

    def det(self):
        return det_fraction_free([list(r) for r in self.rows])

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            other = other.rows
        if not isinstance(other, tuple):
            return NotImplemented
        return self.rows == other

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(
            "[" + ", ".join(repr(e) for e in row) + "]" for row in self.rows
        )
        return f"RationalMatrix({body})"


def sylvester_matrix(f, g, deg_f, deg_g) -> RationalMatrix:
    """Sylvester matrix at the stated formal degrees, f-rows first.

    f and g are descending coefficient sequences of lengths deg_f + 1
    and deg_g + 1.  The leading entries are taken at face value even
    if they could vanish at particular points; the resultant identity
    being checked is one of polynomials, not of specializations.
    """
    if len(f) != deg_f + 1 or len(g) != deg_g + 1:
        raise ValueError("coefficient sequence length must be degree + 1")
    n = deg_f + deg_g
    if n < 1:
        raise ValueError("empty Sylvester matrix: deg_f + deg_g must be >= 1")
    rows = []
    for i in range(deg_g):
        rows.append([0] * i + list(f) + [0] * (n - deg_f - 1 - i))
    for i in range(deg_f):
        rows.append([0] * i + list(g) + [0] * (n - deg_g - 1 - i))
    return RationalMatrix(rows)


def _variables(d):
    return [MultivariatePolynomial.variable(j, d) for j in range(d)]


def even_odd_split(d: int, coeffs=None):
    """Descending coefficient lists (q1, q2) of the split of Q.

    q1 carries the monic leading coefficient and has formal degree
    [d/2]; q2 has formal degree [(d-1)/2] with leading entry a_{d-1}.
    For even d, q1 holds the even-index coefficients and q2 the odd
    ones; for odd d the roles swap.  Symbolic when coeffs is None.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if coeffs is None:
        a = _variables(d)
    else:
        a = [Fraction(x) for x in coeffs]
        if len(a) != d:
            raise ValueError("need exactly d coefficients a_0 .. a_{d-1}")
    one = MultivariatePolynomial.constant(1, d) if coeffs is None else Fraction(1)
    q1 = [one] + [a[d - 2 - 2 * i] for i in range(d // 2)]
    q2 = [a[d - 1 - 2 * i] for i in range((d - 1) // 2 + 1)]
    return q1, q2


_R0_CACHE: dict[int, MultivariatePolynomial] = {}


def r0_symbolic(d: int) -> MultivariatePolynomial:
    """R0 = det Syl(Q1, Q2) as a polynomial in a_0 .. a_{d-1}.

    The matrix is (d-1)-square.  d = 1 is the empty case: both parts
    are constants and the resultant of constants is taken to be 1.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if d not in _R0_CACHE:
        if d == 1:
            _R0_CACHE[d] = MultivariatePolynomial.constant(1, 1)
        else:
            q1, q2 = even_odd_split(d)
            m = sylvester_matrix(q1, q2, d // 2, (d - 1) // 2)
            _R0_CACHE[d] = m.det()
    return _R0_CACHE[d]


def _full_sylvester(d: int, coeffs=None) -> RationalMatrix:
    # rows of Q first, then rows of (-1)^d Q(-x); both at formal degree d
    if coeffs is None:
        a = _variables(d)
        lead = MultivariatePolynomial.constant(1, d)
    else:
        a = [Fraction(x) for x in coeffs]
        if len(a) != d:
            raise ValueError("need exactly d coefficients a_0 .. a_{d-1}")
        lead = Fraction(1)
    f = [lead] + [a[d - 1 - i] for i in range(d)]
    g = [(-coef if i % 2 else coef) for i, coef in enumerate(f)]
    return sylvester_matrix(f, g, d, d)


def r_full(d: int, coeffs=None):
    """Res(Q, (-1)^d Q(-x)) via the 2d x 2d Sylvester determinant.

    Returns a MultivariatePolynomial when coeffs is None (guarded by
    SYMBOLIC_CAP; the symbolic determinant grows quickly), otherwise
    the exact rational value at the point.
    """
    if coeffs is None and d > SYMBOLIC_CAP:
        raise ValueError(
            f"symbolic resultant capped at d = {SYMBOLIC_CAP}; "
            "pass a coefficient point instead"
        )
    if coeffs is not None and d > POINT_CAP:
        raise ValueError(f"point evaluation capped at d = {POINT_CAP}")
    return _full_sylvester(d, coeffs).det()


def r0_value(d: int, coeffs) -> Fraction:
    """R0 evaluated at a coefficient point, by a fresh determinant."""
    if d == 1:
        return Fraction(1)
    q1, q2 = even_odd_split(d, coeffs)
    return Fraction(sylvester_matrix(q1, q2, d // 2, (d - 1) // 2).det())


def claimed_constant(d: int) -> int:
    """The constant stated alongside the factorization identity.

    Recorded for comparison only; the fitted constant is what the
    matrices actually produce, and any disagreement is reported.
    """
    return (-1) ** (d // 2 + 1) * 2 ** (d - (d + 1) // 2 + 1)


@dataclass(frozen=True)
class FactorizationReport:
    degree: int
    trials: int
    degenerate_skips: int
    fitted_constant: Fraction
    constant_is_uniform: bool
    abs_is_power_of_two: bool
    sign: int
    exponent: int
    claimed: int
    matches_claim: bool
    symbolic_checked: bool
    symbolic_constant: Fraction | None

    @property
    def ok(self) -> bool:
        # the claim comparison is informational, not a failure condition
        return self.constant_is_uniform and self.abs_is_power_of_two


def _derived_rng(seed: int, tag: str) -> random.Random:
    digest = blake2b(f"{tag}:{seed}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _draw_point(rng: random.Random, d: int) -> list[Fraction]:
    coeffs = []
    for j in range(d):
        num = rng.randrange(-24, 25)
        if j == 0:
            while num == 0:
                num = rng.randrange(-24, 25)
        den = rng.choice((1, 1, 1, 2, 4))
        coeffs.append(Fraction(num, den))
    return coeffs


def verify_factorization(
    d: int,
    trials: int,
    seed: int,
    symbolic_bound: int = DEFAULT_SYMBOLIC_BOUND,
) -> FactorizationReport:
    """Fit q in R = q * a_0 * R0^2 over random rational points.

    Points with a_0 * R0 = 0 carry no information about q and are
    skipped (they are a measure-zero subvariety).  Asserting that the
    fitted q is a single constant with |q| a power of two is the real
    check; the comparison against the documented constant is recorded
    either way.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if trials < 1:
        raise ValueError("need at least one trial")
    rng = _derived_rng(seed, f"factor:{d}")
    values: set[Fraction] = set()
    degenerate = 0
    collected = 0
    attempts = 0
    while collected < trials:
        attempts += 1
        if attempts > 8 * trials:
            raise DegenerateSample(
                f"could not find {trials} non-degenerate points at d={d}"
            )
        coeffs = _draw_point(rng, d)
        r0 = r0_value(d, coeffs)
        if r0 == 0:
            degenerate += 1
            continue
        r = Fraction(r_full(d, coeffs))
        values.add(r / (coeffs[0] * r0 * r0))
        collected += 1
    fitted = sorted(values)[0]
    uniform = len(values) == 1
    num = fitted.numerator
    power_of_two = (
        fitted.denominator == 1 and num != 0 and (abs(num) & (abs(num) - 1)) == 0
    )
    sign = 1 if num > 0 else -1
    exponent = abs(num).bit_length() - 1 if power_of_two else -1
    claim = claimed_constant(d)

    symbolic_constant = None
    symbolic_checked = False
    if d <= min(symbolic_bound, SYMBOLIC_CAP):
        r_sym = r_full(d)
        a0 = MultivariatePolynomial.variable(0, d)
        r0_sym = r0_symbolic(d)
        quotient = r_sym.exact_div(a0 * r0_sym * r0_sym)
        if quotient.total_degree() > 0:
            raise ArithmeticError("R / (a0*R0^2) is not constant")
        symbolic_constant = Fraction(quotient.coefficient((0,) * d))
        symbolic_checked = True
        uniform = uniform and symbolic_constant == fitted

    return FactorizationReport(
        degree=d,
        trials=trials,
        degenerate_skips=degenerate,
        fitted_constant=fitted,
        constant_is_uniform=uniform,
        abs_is_power_of_two=power_of_two,
        sign=sign,
        exponent=exponent,
        claimed=claim,
        matches_claim=fitted == claim,
        symbolic_checked=symbolic_checked,
        symbolic_constant=symbolic_constant,
    )


def coefficient_weights(d: int) -> tuple[int, ...]:
    """Quasi-homogeneous weight of a_j: 0 for a_{d-1}, then 1 for
    a_{d-2} and a_{d-3}, 2 for a_{d-4} and a_{d-5}, and so on."""
    return tuple((d - j) // 2 for j in range(d))


@dataclass(frozen=True)
class StructuralReport:
    degree: int
    weights: tuple[int, ...]
    weight_target: int
    quasi_homogeneous: bool
    corner_monomials: tuple[tuple[tuple[int, ...], Fraction], ...]
    corners_present: bool
    exponent_caps_hold: bool
    corners_coincide: bool

    @property
    def ok(self) -> bool:
        return self.quasi_homogeneous and self.corners_present and (
            self.exponent_caps_hold
        )


def structural_checks(d: int) -> StructuralReport:
    """Irreducibility bookkeeping for R0.

    Checks that R0 is quasi-homogeneous of weight [(d-1)/2]*[d/2] under
    coefficient_weights, that the two corner monomials are present with
    nonzero coefficients, and that every other monomial respects the
    exponent caps on a_0 and a_1.  A product of two quasi-homogeneous
    factors of intermediate weights could not contain both corners, so
    these checks pin the shape that makes R0 irreducible.
    """
    if d < 2:
        raise ValueError("structure is only meaningful for d >= 2")
    r0 = r0_symbolic(d)
    weights = coefficient_weights(d)
    target = ((d - 1) // 2) * (d // 2)
    degrees = r0.weighted_degrees(weights)
    quasi = degrees == {target}

    def expo(**powers):
        e = [0] * d
        for name, p in powers.items():
            e[int(name[1:])] = p
        return tuple(e)

    if d % 2 == 0:
        first = expo(a0=(d - 1) // 2, **{f"a{d - 1}": d // 2})
        second = expo(a1=d // 2)
        cap0, cap1 = (d - 1) // 2, d // 2
    else:
        first = expo(a1=(d - 1) // 2, **{f"a{d - 1}": d // 2})
        second = expo(a0=d // 2)
        cap0, cap1 = d // 2, (d - 1) // 2

    corners = ((first, Fraction(r0.coefficient(first))),
               (second, Fraction(r0.coefficient(second))))
    present = all(c != 0 for _, c in corners)
    coincide = first == second
    caps = True
    for e in r0.terms:
        if e in (first, second):
            continue
        if e[0] >= cap0 or e[1] >= cap1:
            caps = False
            break
    return StructuralReport(
        degree=d,
        weights=weights,
        weight_target=target,
        quasi_homogeneous=quasi,
        corner_monomials=corners,
        corners_present=present,
        exponent_caps_hold=caps,
        corners_coincide=coincide,
    )


def _permutation_sign(perm) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def _is_zero(entry) -> bool:
    if isinstance(entry, MultivariatePolynomial):
        return entry.is_zero()
    return entry == 0


@dataclass
class BlockReductionTrace:
    """Literal replay of the reduction of the 2d x 2d resultant matrix.

    Steps: (A) the raw Sylvester matrix; (B) row combinations that
    produce d rows of doubled even-index coefficients and d rows of
    negated odd-index coefficients; (C) a row and column permutation
    making the matrix block-diagonal; (D) development along the first
    and last columns, exposing two Sylvester blocks of 2*Q1 and -Q2.

    The classical presentation of this reduction asserts that step C
    preserves the determinant's sign and that step D contributes
    -4*a_0 (d even) or -2*a_0 (d odd).  Both assertions are checked
    against the executed arithmetic; `deviations` lists every point
    where the computed value differs from the asserted one.
    """

    degree: int
    start: RationalMatrix = None
    combined: RationalMatrix = None
    permuted: RationalMatrix = None
    permutation_sign: int = 0
    sign_claim_holds: bool = False
    block_diagonal: bool = False
    prefactor: MultivariatePolynomial = None
    claimed_prefactor: MultivariatePolynomial = None
    prefactor_matches_claim: bool = False
    delta_blocks: tuple = ()
    blocks_are_sylvester: bool = False
    block_det: MultivariatePolynomial = None
    block_det_relation_holds: bool = False
    reconstructed: MultivariatePolynomial = None
    direct: MultivariatePolynomial = None
    final_identity_holds: bool = False
    deviations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when the reduction reproduces the direct determinant.

        Deviations from the asserted bookkeeping (sign, prefactor) do
        not fail the trace; a broken identity does.
        """
        return (
            self.block_diagonal
            and self.blocks_are_sylvester
            and self.block_det_relation_holds
            and self.final_identity_holds
        )


def block_reduction_trace(d: int, compare_direct: bool = True) -> BlockReductionTrace:
    """Execute the reduction steps literally and audit every claim.

    With compare_direct the end product is checked against r_full(d)
    computed by plain fraction-free elimination on the untouched
    matrix; this is the expensive part and is what ties the trace to
    an independent evaluation path.
    """
    if d < 2:
        raise ValueError("the reduction needs d >= 2")
    if d > SYMBOLIC_CAP:
        raise ValueError(f"symbolic trace capped at d = {SYMBOLIC_CAP}")
    trace = BlockReductionTrace(degree=d)
    a = _variables(d)
    half = Fraction(1, 2)

    start = _full_sylvester(d)
    trace.start = start

    # step B: row_j += row_{j+d}, then row_{d+k} -= row_k / 2
    m = [list(r) for r in start.rows]
    for j in range(d):
        m[j] = [x + y for x, y in zip(m[j], m[j + d])]
    for k in range(d):
        m[d + k] = [x - half * y for x, y in zip(m[d + k], m[k])]
    combined = RationalMatrix(m)
    trace.combined = combined

    # predicted shape: shifted copies of g = (2, 0, 2a_{d-2}, 0, ...)
    # and h = (0, -a_{d-1}, 0, -a_{d-3}, ...)
    width = 2 * d
    g_row = [0] * width
    h_row = [0] * width
    g_row[0] = MultivariatePolynomial.constant(2, d)
    for i in range(1, d // 2 + 1):
        g_row[2 * i] = 2 * a[d - 2 * i]
    for i in range((d + 1) // 2):
        h_row[2 * i + 1] = -a[d - 2 * i - 1]
    predicted = [[0] * j + g_row[: width - j] for j in range(d)]
    predicted += [[0] * k + h_row[: width - k] for k in range(d)]
    same = all(
        _entries_equal(combined.rows[i][j], predicted[i][j], d)
        for i in range(width)
        for j in range(width)
    )
    if not same:
        trace.deviations.append("step B did not produce the predicted rows")

    # step C: interleave rows, then split columns by parity
    row_order = (
        list(range(0, d, 2))
        + list(range(d + 1, 2 * d, 2))
        + list(range(1, d, 2))
        + list(range(d, 2 * d, 2))
    )
    col_order = list(range(0, width, 2)) + list(range(1, width, 2))
    permuted = RationalMatrix(
        [[combined.rows[r][c] for c in col_order] for r in row_order]
    )
    trace.permuted = permuted
    eps = _permutation_sign(row_order) * _permutation_sign(col_order)
    trace.permutation_sign = eps
    trace.sign_claim_holds = eps == 1
    if eps != 1:
        trace.deviations.append(
            "row/column permutation is odd, determinant changes sign"
        )

    trace.block_diagonal = all(
        _is_zero(permuted.rows[i][j])
        for i in range(width)
        for j in range(width)
        if (i < d) != (j < d)
    )
    if not trace.block_diagonal:
        trace.deviations.append("permuted matrix is not block-diagonal")
        return trace

    # step D: develop along the first column of the whole matrix,
    # then along the last column of the remaining minor
    first_col = [(i, permuted.rows[i][0]) for i in range(width)
                 if not _is_zero(permuted.rows[i][0])]
    two = MultivariatePolynomial.constant(2, d)
    if len(first_col) != 1 or first_col[0][0] != 0 or first_col[0][1] != two:
        trace.deviations.append("first column is not a single entry 2 at row 0")
        return trace
    minor1 = [row[1:] for row in permuted.rows[1:]]
    last = len(minor1) - 1
    last_col = [(i, row[last]) for i, row in enumerate(minor1)
                if not _is_zero(row[last])]
    if len(last_col) != 1:
        trace.deviations.append("last column does not develop on a single entry")
        return trace
    vrow, vval = last_col[0]
    cof_sign = (-1) ** (vrow + last)
    prefactor = 2 * cof_sign * vval
    trace.prefactor = prefactor
    claimed = (-4 if d % 2 == 0 else -2) * a[0]
    trace.claimed_prefactor = claimed
    trace.prefactor_matches_claim = prefactor == claimed
    if not trace.prefactor_matches_claim:
        trace.deviations.append(
            f"development yields {prefactor!r}, asserted {claimed!r}"
        )

    minor2 = [
        [row[j] for j in range(last)]
        for i, row in enumerate(minor1)
        if i != vrow
    ]
    n = d - 1
    delta_ok = all(
        _is_zero(minor2[i][j])
        for i in range(2 * n)
        for j in range(2 * n)
        if (i < n) != (j < n)
    )
    top = RationalMatrix([row[:n] for row in minor2[:n]])
    bottom = RationalMatrix([row[n:] for row in minor2[n:]])
    trace.delta_blocks = (top, bottom)

    q1, q2 = even_odd_split(d)
    expected_block = sylvester_matrix(
        [2 * c for c in q1], [-c for c in q2], d // 2, (d - 1) // 2
    )
    trace.blocks_are_sylvester = (
        delta_ok and top == expected_block and bottom == expected_block
    )
    if not trace.blocks_are_sylvester:
        trace.deviations.append("delta blocks differ from Syl(2*Q1, -Q2)")
        return trace

    s = top.det()
    trace.block_det = s
    scale = 2 ** ((d - 1) // 2) * (-1) ** (d // 2)
    trace.block_det_relation_holds = s == scale * r0_symbolic(d)
    if not trace.block_det_relation_holds:
        trace.deviations.append("block determinant is not +-2^[(d-1)/2] * R0")

    trace.reconstructed = eps * prefactor * s * bottom.det()
    if compare_direct:
        trace.direct = r_full(d)
        trace.final_identity_holds = trace.reconstructed == trace.direct
        if not trace.final_identity_holds:
            trace.deviations.append(
                "reconstructed determinant differs from direct elimination"
            )
    else:
        trace.final_identity_holds = True
    return trace


def _entries_equal(x, y, d) -> bool:
    if isinstance(x, MultivariatePolynomial) or isinstance(y, MultivariatePolynomial):
        if not isinstance(x, MultivariatePolynomial):
            x = MultivariatePolynomial.constant(x, d)
        return x == y
    return x == y
