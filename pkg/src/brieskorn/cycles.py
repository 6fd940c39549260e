"""Distinguished cycles on a resolution graph.

The fundamental cycle is the smallest nonzero anti-nef cycle, computed by the
classical generalized-Laufer iteration.  On a star-shaped graph, the smallest
cycle with prescribed central coefficient that is anti-nef away from the
center comes from an exact ceiling recursion along each arm.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, InternalInvariantError
from .graph import QCycle

# Laufer iterations on reasonable graphs stay far below this; the cap only
# guards against a non-terminating loop on corrupted input.
_LAUFER_STEP_CAP = 10_000_000


def is_antinef(graph, cycle):
    """True iff cycle . E_i <= 0 for every vertex i."""
    return all(graph.product_with_vertex(cycle, i) <= 0
               for i in range(graph.num_vertices))


def fundamental_cycle(graph):
    """Smallest nonzero anti-nef cycle (all coefficients integral, >= 1).

    Laufer iteration: start from the reduced cycle; while some E_i meets the
    current cycle positively, add that E_i (smallest id first).
    """
    n = graph.num_vertices
    z = [1] * n
    prod = [graph.product_with_vertex(z, i) for i in range(n)]
    for _ in range(_LAUFER_STEP_CAP):
        i = next((k for k in range(n) if prod[k] > 0), None)
        if i is None:
            return QCycle(z)
        z[i] += 1
        prod[i] += graph.selfint[i]
        for j in graph.neighbors(i):
            prod[j] += 1
    raise InternalInvariantError("Laufer iteration did not terminate")


@lru_cache(maxsize=65536)
def _arm_tails(chain):
    """(numerator, denominator) of [[c_j, ..., c_s]] for every truncation."""
    tails = []
    d = None
    for c in reversed(chain):
        d = Fraction(c) if d is None else c - 1 / d
        tails.append((d.numerator, d.denominator))
    tails.reverse()
    return tuple(tails)


def minimal_arm_cycle(chain, m0):
    """Minimal coefficients along one arm given the central coefficient m0.

    chain lists the arm's -self-intersections from the center outward; entry
    j of the result is the smallest coefficient making the cycle anti-nef at
    every arm vertex, namely ceil(previous / d_j) with d_j the value of the
    truncated continued fraction [[c_j, ..., c_s]].
    """
    if m0 < 0:
        raise InputError("central coefficient must be >= 0, got %r" % (m0,))
    if any(c < 2 for c in chain):
        raise InputError("arm chain entries must be >= 2: %r" % (list(chain),))
    coeffs = []
    m = m0
    for p, q in _arm_tails(tuple(chain)):
        m = (m * q + p - 1) // p  # ceil(m / (p/q)) for m >= 0, p/q > 1
        coeffs.append(m)
    return coeffs


def minimal_cycle(graph, n):
    """Smallest cycle with central coefficient n, anti-nef off the center.

    With n the least weight of a nonzero section this is the divisorial part
    of a generic such section; coefficients stay exact for n well past 10^6.
    """
    if graph.central is None:
        raise InputError("minimal_cycle needs a star-shaped graph with a center")
    if n < 0:
        raise InputError("central coefficient must be >= 0, got %r" % (n,))
    coeffs = [0] * graph.num_vertices
    coeffs[graph.central] = n
    for arm in graph.arms():
        chain = [-graph.selfint[v] for v in arm]
        for v, m in zip(arm, minimal_arm_cycle(chain, n)):
            coeffs[v] = m
    cycle = QCycle(coeffs)
    for i in range(graph.num_vertices):
        if i != graph.central and graph.product_with_vertex(cycle, i) > 0:
            raise InternalInvariantError("arm recursion broke anti-nefness at %d" % i)
    return cycle


def deg_on_central(graph, cycle):
    """-(cycle . E_central); for minimal_cycle(graph, n) this is the degree
    of the associated divisor."""
    if graph.central is None:
        raise InputError("graph has no central vertex")
    return -graph.product_with_vertex(cycle, graph.central)


def arithmetic_genus(graph, cycle):
    """p_a(cycle) = 1 + (cycle^2 + cycle.K)/2 for an effective integral cycle."""
    coeffs = cycle.as_integers() if isinstance(cycle, QCycle) else tuple(cycle)
    if any(c < 0 for c in coeffs) or all(c == 0 for c in coeffs):
        raise InputError("arithmetic genus needs a nonzero effective cycle")
    square = graph.pairing(coeffs, coeffs)
    k = graph.canonical_product(coeffs)
    if (square + k) % 2:
        raise InternalInvariantError("cycle^2 + cycle.K is odd")
    return 1 + (square + k) // 2


def _json_exact(v):
    if v is None or isinstance(v, int):
        return v
    return "%d/%d" % (v.numerator, v.denominator)


@dataclass(frozen=True)
class CycleReport:
    """A cycle together with its intersection data."""

    cycle: QCycle
    products: dict
    self_intersection: object
    pa: object

    def to_json_dict(self):
        return {
            "coefficients": self.cycle.coeff_map(),
            "products": {str(i): _json_exact(v) for i, v in self.products.items()},
            "self_intersection": _json_exact(self.self_intersection),
            "pa": self.pa,
        }


def cycle_report(graph, cycle):
    """Products against every E_i, the self-intersection, and p_a when defined."""
    products = {i: graph.product_with_vertex(cycle, i)
                for i in range(graph.num_vertices)}
    square = graph.pairing(cycle, cycle)
    pa = None
    if cycle.is_integral and cycle.is_effective and not cycle.is_zero:
        pa = arithmetic_genus(graph, cycle)
    return CycleReport(cycle=cycle, products=products,
                       self_intersection=square, pa=pa)
