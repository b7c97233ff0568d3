"""Polynomials as ordered term lists over an exact field."""

from __future__ import annotations

from . import orders


class Polynomial:
    """Terms (coeff, exponent tuple), strictly descending in the active order.

    Instances are built through ``from_dict`` so the invariant (no zero
    coefficients, strictly decreasing monomials) always holds.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple(terms)

    @classmethod
    def from_dict(cls, coeffs: dict, spec, field):
        terms = [
            (c, m) for m, c in coeffs.items() if c != field.zero
        ]
        terms.sort(key=lambda t: orders.order_vector(spec, t[1]), reverse=True)
        return cls(terms)

    @classmethod
    def monomial(cls, exps, field):
        return cls([(field.one, tuple(exps))])

    def is_zero(self):
        return not self.terms

    @property
    def leading_monomial(self):
        return self.terms[0][1]

    @property
    def leading_coeff(self):
        return self.terms[0][0]

    def coeff_dict(self):
        return {m: c for c, m in self.terms}

    def evaluate(self, field, point):
        acc = field.zero
        for c, m in self.terms:
            v = c
            for e, x in zip(m, point):
                for _ in range(e):
                    v = field.mul(v, x)
            acc = field.add(acc, v)
        return acc

    def map_monomials(self, fn, spec, field):
        """Reindex every monomial through fn and re-sort under spec."""
        return Polynomial.from_dict({fn(m): c for c, m in self.terms}, spec, field)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^{list(m)}" for c, m in self.terms)


def combine(parts, spec, field):
    """Sum of (scalar, Polynomial) pairs."""
    acc = {}
    for scalar, poly in parts:
        for c, m in poly.terms:
            add = field.mul(scalar, c)
            cur = acc.get(m)
            acc[m] = add if cur is None else field.add(cur, add)
    return Polynomial.from_dict(acc, spec, field)
