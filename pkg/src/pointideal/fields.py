"""Exact coefficient fields: the rationals and prime fields Z_p.

Elements are plain Python values (``fractions.Fraction`` for the rationals,
canonical residues ``int`` in ``[0, p)`` for prime fields), so equality is
bit-for-bit after canonicalization and everything hashes.  The field objects
only bundle the operations.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(Exception):
    pass


class DivisionByZero(FieldError):
    pass


class NotPrime(FieldError):
    pass


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(p: int) -> bool:
    """Miller-Rabin; deterministic for p < 2**64 with the fixed base set."""
    if p < 2:
        return False
    for q in _MR_BASES:
        if p % q == 0:
            return p == q
    d = p - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of arbitrary-precision rationals."""

    kind = "rational"

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, k: int):
        return Fraction(k)

    def parse(self, text: str):
        """Parse "a/b" or a plain decimal integer."""
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational literal {text!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"

    def to_descriptor(self) -> dict:
        return {"type": "rational"}


class PrimeField:
    """Z_p for a prime p below 2**63."""

    kind = "prime"

    def __init__(self, p: int):
        if p < 2:
            raise NotPrime(f"modulus {p} < 2")
        if p >= 1 << 63:
            raise FieldError(f"modulus {p} exceeds 63 bits")
        if not is_probable_prime(p):
            raise NotPrime(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, k: int):
        return k % self.p

    def parse(self, text: str):
        try:
            return int(text.strip(), 10) % self.p
        except ValueError as exc:
            raise ValueError(f"bad integer literal {text!r}") from exc

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def to_descriptor(self) -> dict:
        return {"type": "prime", "p": self.p}


QQ = RationalField()


def field_from_descriptor(desc: dict):
    """Build a field from the {"type": ...} descriptor used in point files."""
    kind = desc.get("type")
    if kind == "rational":
        return RationalField()
    if kind == "prime":
        if "p" not in desc:
            raise ValueError("prime field descriptor needs 'p'")
        return PrimeField(int(desc["p"]))
    raise ValueError(f"unknown field type {kind!r}")
