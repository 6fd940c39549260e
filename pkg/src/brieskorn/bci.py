"""Brieskorn complete intersections from their exponent tuples.

Everything about the singularity with equations sum_i c_{ji} x_i^{a_i} = 0
(generic coefficients, m >= 3 exponents) is elementary arithmetic in the
exponents: the Seifert invariant of the resolution graph, the coordinate
cycles cut out by the x_i, the maximal ideal cycle, the a-invariant, and the
Hilbert series of the graded coordinate ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import InputError, InternalInvariantError
from .graph import QCycle, ResolutionGraph, SeifertInvariant, dual_cycle, star_graph
from .numerics import HilbertSeries, IntPolynomial, NumericalSemigroup


@dataclass(frozen=True)
class BrieskornData:
    """Arithmetic data of an exponent tuple, sorted ascending.

    input_positions maps sorted slots back to the user's order:
    exponents[k] was originally at position input_positions[k].
    """

    exponents: tuple
    input_positions: tuple
    ell: int          # lcm of all exponents
    e: tuple          # e_i = ell / a_i (weights of the coordinates)
    alphas: tuple     # alpha_i = ell / lcm(others)
    alpha: int        # product of the alpha_i
    ghat: int         # (prod a_i) / ell
    ghats: tuple      # ghat_i = ghat * alpha_i / a_i (arms in the i-th family)
    betas: tuple      # e_i * beta_i = -1 mod alpha_i, 0 <= beta_i < alpha_i
    g: int            # genus of the central curve
    c0: int           # -(central self-intersection)

    @property
    def m(self):
        return len(self.exponents)

    def divisor_degree(self, n):
        """deg D_n = n*c0 - sum_i ghat_i * ceil(n*beta_i/alpha_i), exact."""
        if n < 0:
            raise InputError("degree index must be >= 0, got %r" % (n,))
        total = n * self.c0
        for a, b, k in zip(self.alphas, self.betas, self.ghats):
            if b:
                total -= k * ((n * b + a - 1) // a)
        return total

    def deg_divisor(self):
        """deg D = ghat / ell, an exact positive rational."""
        return Fraction(self.ghat, self.ell)

    def to_json_dict(self):
        return {
            "exponents": list(self.exponents),
            "input_positions": list(self.input_positions),
            "ell": self.ell,
            "e": list(self.e),
            "alpha_i": list(self.alphas),
            "alpha": self.alpha,
            "ghat": self.ghat,
            "ghat_i": list(self.ghats),
            "beta_i": list(self.betas),
            "g": self.g,
            "c0": self.c0,
        }


def bci_data(exponents):
    """Derive BrieskornData from an exponent tuple (m >= 3, every a_i >= 2)."""
    raw = [int(a) for a in exponents]
    if len(raw) < 3:
        raise InputError("need at least three exponents, got %d" % len(raw))
    if any(a < 2 for a in raw):
        raise InputError("exponents must be >= 2: %r" % (raw,))
    order = sorted(range(len(raw)), key=lambda k: raw[k])
    a = [raw[k] for k in order]
    m = len(a)

    ell = lcm(*a)
    e = [ell // ai for ai in a]
    alphas = [ell // lcm(*(a[:i] + a[i + 1:])) for i in range(m)]
    alpha = 1
    for x in alphas:
        alpha *= x
    prod_a = 1
    for x in a:
        prod_a *= x
    if prod_a % ell:
        raise InternalInvariantError("prod(a_i) not divisible by lcm(a_i)")
    ghat = prod_a // ell
    ghats = []
    for i in range(m):
        num = ghat * alphas[i]
        if num % a[i]:
            raise InternalInvariantError("ghat_i is not an integer at slot %d" % i)
        ghats.append(num // a[i])

    betas = []
    for i in range(m):
        if alphas[i] == 1:
            betas.append(0)
        else:
            inv = pow(e[i], -1, alphas[i])
            betas.append((-inv) % alphas[i])

    two_g = (m - 2) * ghat - sum(ghats) + 2
    if two_g % 2 or two_g < 0:
        raise InternalInvariantError("central genus came out as %s/2" % two_g)
    g = two_g // 2

    c0f = sum(Fraction(k * b, x) for k, b, x in zip(ghats, betas, alphas))
    c0f += Fraction(prod_a, ell * ell)
    if c0f.denominator != 1 or c0f <= 0:
        raise InternalInvariantError("central self-intersection came out as %s" % c0f)

    return BrieskornData(
        exponents=tuple(a),
        input_positions=tuple(order),
        ell=ell,
        e=tuple(e),
        alphas=tuple(alphas),
        alpha=alpha,
        ghat=ghat,
        ghats=tuple(ghats),
        betas=tuple(betas),
        g=g,
        c0=int(c0f),
    )


def bci_seifert(data):
    """Seifert invariant: ghat_i arms of type (alpha_i, beta_i) per family
    with alpha_i >= 2 (trivial families emit no arms)."""
    arms = tuple((data.alphas[i], data.betas[i])
                 for i in range(data.m) if data.alphas[i] >= 2
                 for _ in range(data.ghats[i]))
    return SeifertInvariant(g=data.g, c0=data.c0, arms=arms)


def bci_graph(data):
    """Star-shaped resolution graph; arms appear family by family."""
    return star_graph(bci_seifert(data))


def arm_families(data):
    """For each exponent slot, the ordinals of its arms in graph.arms() order
    (empty for alpha_i = 1 families)."""
    spans = []
    pos = 0
    for i in range(data.m):
        if data.alphas[i] >= 2:
            spans.append(list(range(pos, pos + data.ghats[i])))
            pos += data.ghats[i]
        else:
            spans.append([])
    return spans


@dataclass(frozen=True)
class CoordinateCycle:
    """Divisorial part of the coordinate function x_i on the resolution."""

    index: int
    cycle: QCycle
    central_coefficient: int


def coordinate_cycle(data, graph, i):
    """Cycle of the i-th coordinate (0-based, slots sorted ascending).

    For a family with alpha_i >= 2 this is the sum of the duals of the
    family's arm ends; for alpha_i = 1 it is ghat_i times the central dual.
    Coefficients are guaranteed integral and the central coefficient is e_i.
    """
    if not 0 <= i < data.m:
        raise InputError("coordinate index %d out of range" % i)
    if data.alphas[i] >= 2:
        arms = graph.arms()
        total = QCycle.zero(graph.num_vertices)
        for ordinal in arm_families(data)[i]:
            total = total + dual_cycle(graph, arms[ordinal][-1])
    else:
        total = data.ghats[i] * dual_cycle(graph, graph.central)
    if not total.is_integral:
        raise InternalInvariantError("coordinate cycle %d is not integral: %r" % (i, total))
    cf = total[graph.central]
    if cf != data.e[i]:
        raise InternalInvariantError(
            "coordinate cycle %d has central coefficient %s, expected %d"
            % (i, cf, data.e[i]))
    return CoordinateCycle(index=i, cycle=total, central_coefficient=cf)


def maximal_ideal_cycle(data, graph):
    """Cycle of a generic element of the maximal ideal: the coordinate cycle
    of the largest exponent (smallest weight)."""
    return coordinate_cycle(data, graph, data.m - 1).cycle


@dataclass(frozen=True)
class MZWitness:
    """Whether the maximal ideal cycle equals the fundamental cycle, with the
    two numbers that decide it: equality holds iff e_m <= alpha."""

    equal: bool
    e_m: int
    alpha: int

    def __bool__(self):
        return self.equal


def m_equals_z(data):
    e_m = data.e[-1]
    return MZWitness(equal=e_m <= data.alpha, e_m=e_m, alpha=data.alpha)


def a_invariant(data):
    """a-invariant of the graded coordinate ring: (m-2)*ell - sum e_i."""
    return (data.m - 2) * data.ell - sum(data.e)


def weight_semigroup(data):
    """Semigroup generated by the coordinate weights e_1, ..., e_m."""
    return NumericalSemigroup(data.e)


def divisor_degree_semigroup(data):
    """Semigroup generated by ghat_1, ..., ghat_m; every positive deg D_n
    with n in the weight semigroup lands here."""
    return NumericalSemigroup(data.ghats)


def semigroup_equivalence_check(data, n):
    """(n in <e_1..e_m>, deg D_n in <ghat_1..ghat_m>) — the two sides of the
    section-existence criterion; they must agree for every n >= 0."""
    lhs = weight_semigroup(data).contains(n)
    d = data.divisor_degree(n)
    rhs = d >= 0 and divisor_degree_semigroup(data).contains(d)
    return lhs, rhs


def hilbert_series(data):
    """Series of the graded ring: (1 - t^ell)^(m-2) / prod_i (1 - t^{e_i})."""
    num = IntPolynomial([1])
    factor = IntPolynomial.one_minus_power(data.ell)
    for _ in range(data.m - 2):
        num = num * factor
    return HilbertSeries(num, data.e)
