"""Gröbner bases of vanishing ideals of finite point sets.

Two formulations of the same loop are provided.  The ``mmm`` variant keeps
the candidate list as a delta-memoized sorted list with duplicates, skips
initial-ideal multiples through the support-vs-multiplicity test, and merges
new candidates in bulk.  The ``abbott`` variant filters candidates at
insertion time by explicit divisibility scans; it is slower and serves as an
equivalence oracle.
"""

from __future__ import annotations

import bisect
import time
from dataclasses import dataclass

from . import orders
from .deltamerge import delta, merge_with_sources
from .linalg import EchelonAccumulator
from .poly import Polynomial, combine


class PointSetError(ValueError):
    pass


class DuplicatePoints(PointSetError):
    pass


class EmptyPointSet(PointSetError):
    pass


@dataclass(frozen=True)
class PointSet:
    field: object
    n: int
    points: tuple  # m tuples of field elements

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise EmptyPointSet("at least one point is required")
        if any(len(p) != self.n for p in pts):
            raise PointSetError("point arity mismatch")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("points must be pairwise distinct")

    @property
    def m(self):
        return len(self.points)

    def coordinate_column(self, i: int):
        """Evaluation vector of the variable x_i (1-based)."""
        return [p[i - 1] for p in self.points]


@dataclass
class RunStats:
    element_cmps: int = 0
    delta_cmps: int = 0
    field_ops: int = 0
    functional_calls: int = 0
    L_max: int = 0
    n_essential: int | None = None
    wall_time: float = 0.0

    def to_dict(self):
        return {
            "element_cmps": self.element_cmps,
            "delta_cmps": self.delta_cmps,
            "field_ops": self.field_ops,
            "functional_calls": self.functional_calls,
            "L_max": self.L_max,
            "n_essential": self.n_essential,
            "wall_time": self.wall_time,
        }


@dataclass
class GroebnerResult:
    G: list  # Polynomial, ascending leading monomials
    B: list  # monomial tuples, ascending
    stats: RunStats
    spec: object = None
    field: object = None


def evaluate_monomial(field, exps, point):
    v = field.one
    for e, x in zip(exps, point):
        for _ in range(e):
            v = field.mul(v, x)
    return v


def evaluate(f, field, point):
    """Exact evaluation of a Polynomial or bare exponent tuple."""
    if isinstance(f, tuple):
        return evaluate_monomial(field, f, point)
    return f.evaluate(field, point)


def occ_skip(exps, occ: int) -> bool:
    """True iff the run's monomial is an initial-ideal multiple.

    Valid only for the minimal element of the duplicate-preserving candidate
    list: the monomial has |supp| divisors of one degree less, each divisor
    in B contributed one copy.
    """
    return orders.support_size(exps) > occ


def _make_poly(t_exps, coeffs, R, spec, fld):
    """t - sum coeffs[i] * R[i], the reduction of t against found relations."""
    parts = [(fld.one, Polynomial.monomial(t_exps, fld))]
    for idx, c in coeffs.items():
        parts.append((fld.neg(c), R[idx]))
    return combine(parts, spec, fld)


def _bm_mmm(points: PointSet, spec, stats: RunStats):
    fld = points.field
    n, m = points.n, points.m
    acc = EchelonAccumulator(m, fld)
    vars_increasing = tuple(reversed(orders.varord(spec)))

    one = (0,) * n
    L_items = [orders.order_vector(spec, one)]
    L_deltas = []
    # payload per slot: (exps, parent index in B or None, multiplied variable)
    L_pay = [(one, None, None)]
    nvec = len(L_items[0])

    B, B_evals, R, G = [], [], [], []
    stats.L_max = max(stats.L_max, 1)

    while L_items:
        # pop the whole run of equal minimal elements; its length is Occ(t)
        run = 1
        while run < len(L_items) and L_deltas[run - 1] == nvec + 1:
            run += 1
        t_exps, parent, var = L_pay[0]
        t_ov = L_items[0]
        del L_items[:run]
        del L_deltas[: min(run, len(L_deltas))]
        del L_pay[:run]
        if occ_skip(t_exps, run):
            continue

        if parent is None:
            v = [fld.one] * m
        else:
            col = points.coordinate_column(var)
            v = [fld.mul(a, b) for a, b in zip(B_evals[parent], col)]
            stats.field_ops += m
        stats.functional_calls += 1

        residual, coeffs = acc.reduce(v)
        if all(x == fld.zero for x in residual):
            G.append(_make_poly(t_exps, coeffs, R, spec, fld))
            continue
        acc.insert(residual, tag=len(B))
        R.append(_make_poly(t_exps, coeffs, R, spec, fld))
        b_index = len(B)
        B.append(t_exps)
        B_evals.append(v)

        new_items, new_deltas, new_pay = [], [], []
        for i in vars_increasing:
            new_items.append(orders.order_vector_step(spec, t_ov, i))
            new_pay.append((orders.monomial_mul_var(t_exps, i), b_index, i))
        for u, w in zip(new_items, new_items[1:]):
            _s, d, cost = orders.compare_vectors(u, w)
            new_deltas.append(d)
            stats.element_cmps += cost
        L_items, L_deltas, sources, ec, dc = merge_with_sources(
            L_items, L_deltas, new_items, new_deltas, nvec
        )
        stats.element_cmps += ec
        stats.delta_cmps += dc
        old_pay = L_pay
        L_pay = [old_pay[k] if which == 0 else new_pay[k] for which, k in sources]
        stats.L_max = max(stats.L_max, len(L_items))

    stats.field_ops += acc.field_ops
    return G, B


def _bm_abbott(points: PointSet, spec, stats: RunStats):
    fld = points.field
    n, m = points.n, points.m
    acc = EchelonAccumulator(m, fld)
    vars_increasing = tuple(reversed(orders.varord(spec)))

    one = (0,) * n
    # L kept sorted by order vector; no duplicates survive the C5 filter
    L = [(orders.order_vector(spec, one), one, None, None)]
    B, B_evals, R, G = [], [], [], []
    ini_G = []
    stats.L_max = max(stats.L_max, 1)

    while L:
        _ov, t_exps, parent, var = L.pop(0)
        if parent is None:
            v = [fld.one] * m
        else:
            col = points.coordinate_column(var)
            v = [fld.mul(a, b) for a, b in zip(B_evals[parent], col)]
            stats.field_ops += m
        stats.functional_calls += 1

        residual, coeffs = acc.reduce(v)
        if all(x == fld.zero for x in residual):
            g = _make_poly(t_exps, coeffs, R, spec, fld)
            G.append(g)
            ini_G.append(g.leading_monomial)
            continue
        acc.insert(residual, tag=len(B))
        R.append(_make_poly(t_exps, coeffs, R, spec, fld))
        b_index = len(B)
        B.append(t_exps)
        B_evals.append(v)

        for i in vars_increasing:
            cand = orders.monomial_mul_var(t_exps, i)
            if any(orders.monomial_divides(l[1], cand) for l in L):
                continue
            if any(orders.monomial_divides(g_lt, cand) for g_lt in ini_G):
                continue
            entry = (orders.order_vector(spec, cand), cand, b_index, i)
            bisect.insort(L, entry, key=lambda e: e[0])
        stats.L_max = max(stats.L_max, len(L))

    stats.field_ops += acc.field_ops
    return G, B


def bm(points: PointSet, spec, variant="mmm") -> GroebnerResult:
    """Reduced Gröbner basis and quotient monomial basis of I(points)."""
    if spec.n != points.n:
        raise orders.OrderError("order arity differs from point arity")
    orders.validate_order(spec)
    stats = RunStats()
    t0 = time.perf_counter()
    if variant == "mmm":
        G, B = _bm_mmm(points, spec, stats)
    elif variant == "abbott":
        G, B = _bm_abbott(points, spec, stats)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    stats.wall_time = time.perf_counter() - t0
    return GroebnerResult(G=G, B=B, stats=stats, spec=spec, field=points.field)


def normal_form(f: Polynomial, result: GroebnerResult, points: PointSet) -> Polynomial:
    """The unique representative of [f] supported on the quotient basis.

    Works through evaluations: expresses f(P) in the coordinates of the
    basis evaluation vectors.
    """
    fld = points.field
    acc = EchelonAccumulator(points.m, fld)
    rpolys = basis_combination_engine(result.B, result.spec, points, acc)
    w = [f.evaluate(fld, p) for p in points.points]
    residual, coeffs = acc.reduce(w)
    if any(x != fld.zero for x in residual):
        raise PointSetError("basis does not span the evaluation space")
    return combine([(c, rpolys[i]) for i, c in coeffs.items()], result.spec, fld)


def basis_combination_engine(B, spec, points: PointSet, acc: EchelonAccumulator):
    """Insert the basis evaluation vectors into acc, tracking polynomials.

    Returns per-insertion polynomials r_i, supported on B, with r_i(P) equal
    to the inserted residual vectors; any vector expressed over the originals
    by ``acc.reduce`` therefore lifts to the B-supported combination
    sum(coeffs[i] * r_i).
    """
    fld = points.field
    rpolys = []
    for b in B:
        v = [evaluate_monomial(fld, b, p) for p in points.points]
        residual, coeffs = acc.reduce(v)
        rp = _make_poly(b, coeffs, rpolys, spec, fld)
        acc.insert(residual)
        rpolys.append(rp)
    return rpolys
