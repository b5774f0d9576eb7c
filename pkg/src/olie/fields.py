"""Exact scalar arithmetic over the two supported coefficient fields.

Scalars are plain Python values: `fractions.Fraction` over the rationals
(always reduced, positive denominator, so equality is structural) and
`int` residues in ``[0, p)`` over GF(p).  A field object supplies the
operations; containers (vectors, matrices, algebras) carry the field.

Text encoding: rationals print as ``a`` or ``a/b`` with an optional
leading ``-``; prime-field elements print as the decimal residue.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, ParseError, UnsupportedCharacteristic

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for anything we will ever meet
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rationals; scalars are Fraction values."""

    char = 0
    tag = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        """Accept int, Fraction or text and return a canonical scalar."""
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

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
            raise DivisionByZero("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in Q")
        return a / b

    def is_zero(self, a):
        return a == 0

    def parse(self, text):
        text = text.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational scalar {text!r}: {exc}") from None

    def format(self, a):
        return str(a)

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """GF(p) for a prime p >= 5; scalars are ints in [0, p)."""

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise UnsupportedCharacteristic(f"GF({p}): modulus must be prime")
        if p < 5:
            raise UnsupportedCharacteristic(
                f"GF({p}): characteristic 2 and 3 are not supported"
            )
        self.p = p
        self.char = p
        self.tag = f"GF{p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise DivisionByZero(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

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
            raise DivisionByZero(f"inverse of zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a % self.p == 0

    def parse(self, text):
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return self.div(int(num) % self.p, int(den) % self.p)
            return int(text) % self.p
        except ValueError as exc:
            raise ParseError(f"bad GF({self.p}) scalar {text!r}: {exc}") from None

    def format(self, a):
        return str(a % self.p)

    def to_json(self):
        return {"GF": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj):
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"GF"}:
        return PrimeField(obj["GF"])
    raise ParseError(f"bad field description {obj!r}")


def field_from_tag(tag: str):
    """Parse a CLI field tag: 'q', 'Q', 'gf5', 'GF7', ..."""
    t = tag.strip().lower()
    if t == "q":
        return QQ
    if t.startswith("gf"):
        try:
            return PrimeField(int(t[2:]))
        except ValueError:
            pass
    raise ParseError(f"bad field tag {tag!r} (expected q or gf<p>)")


def same_field(a, b):
    if a != b:
        raise FieldMismatch(f"mixed fields {a!r} and {b!r}")
    return a
