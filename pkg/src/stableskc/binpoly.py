"""Binary polynomials over Z_2.

A polynomial q_n X^n + ... + q_1 X + q_0 is stored as the integer whose
bit i is q_i, so addition is XOR and equality is integer equality.
"""
from __future__ import annotations

import re
from functools import lru_cache

__all__ = [
    "BinPoly",
    "NEG_INF",
    "add",
    "mul",
    "poly_divmod",
    "is_irreducible",
    "default_modulus",
    "parse_poly",
]

#: Degree of the zero polynomial.  Behaves like -infinity under + and <.
NEG_INF = float("-inf")

MIN_FIELD_DEGREE = 2
MAX_FIELD_DEGREE = 10


class BinPoly:
    """Immutable binary polynomial."""

    __slots__ = ("_bits",)

    def __init__(self, bits: int = 0):
        if isinstance(bits, BinPoly):
            bits = bits._bits
        if not isinstance(bits, int) or isinstance(bits, bool) or bits < 0:
            raise ValueError(f"polynomial bits must be a nonnegative int, got {bits!r}")
        self._bits = bits

    @classmethod
    def from_exponents(cls, exponents) -> BinPoly:
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if bits >> e & 1:
                raise ValueError(f"duplicate exponent {e}")
            bits |= 1 << e
        return cls(bits)

    @property
    def bits(self) -> int:
        return self._bits

    @property
    def degree(self):
        """Largest exponent present; ``NEG_INF`` for the zero polynomial."""
        if self._bits == 0:
            return NEG_INF
        return self._bits.bit_length() - 1

    def exponents(self) -> list[int]:
        """Exponents with coefficient 1, highest first."""
        return [i for i in range(self._bits.bit_length() - 1, -1, -1) if self._bits >> i & 1]

    def is_zero(self) -> bool:
        return self._bits == 0

    def __bool__(self):
        return self._bits != 0

    def __eq__(self, other):
        if isinstance(other, BinPoly):
            return self._bits == other._bits
        return NotImplemented

    def __hash__(self):
        return hash(("BinPoly", self._bits))

    def __add__(self, other):
        if not isinstance(other, BinPoly):
            return NotImplemented
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, BinPoly):
            return NotImplemented
        return mul(self, other)

    def __divmod__(self, other):
        if not isinstance(other, BinPoly):
            return NotImplemented
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __str__(self):
        if self._bits == 0:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else "X" if e == 1 else f"X^{e}")
        return "+".join(terms)

    def __repr__(self):
        return f"BinPoly({self})"

    def hex(self) -> str:
        return f"0x{self._bits:X}"


def add(a: BinPoly, b: BinPoly) -> BinPoly:
    return BinPoly(a.bits ^ b.bits)


def _clmul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def mul(a: BinPoly, b: BinPoly) -> BinPoly:
    return BinPoly(_clmul(a.bits, b.bits))


def _divmod_bits(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length() - 1
    q = 0
    while a and a.bit_length() - 1 >= db:
        shift = a.bit_length() - 1 - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_divmod(a: BinPoly, b: BinPoly) -> tuple[BinPoly, BinPoly]:
    """Return ``(quotient, remainder)`` with ``a == b*quotient + remainder``.

    Raises ZeroDivisionError when ``b`` is zero.
    """
    q, r = _divmod_bits(a.bits, b.bits)
    return BinPoly(q), BinPoly(r)


def is_irreducible(q: BinPoly) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(q)//2."""
    if q.bits < 2:
        raise ValueError(f"irreducibility is undefined for constant polynomial {q}")
    return _is_irreducible_bits(q.bits)


@lru_cache(maxsize=None)
def _is_irreducible_bits(bits: int) -> bool:
    d = bits.bit_length() - 1
    for divisor in range(2, 1 << (d // 2 + 1)):
        if _divmod_bits(bits, divisor)[1] == 0:
            return False
    return True


_PREFERRED_MODULI = {
    2: 0b111,  # X^2+X+1
    3: 0b1011,  # X^3+X+1
    4: 0b10011,  # X^4+X+1
    5: 0b100101,  # X^5+X^2+1
}


@lru_cache(maxsize=None)
def default_modulus(k: int) -> BinPoly:
    """Fixed irreducible polynomial of degree ``k`` for 2 <= k <= 10."""
    if not isinstance(k, int) or not MIN_FIELD_DEGREE <= k <= MAX_FIELD_DEGREE:
        raise ValueError(f"field degree must be in [{MIN_FIELD_DEGREE}, {MAX_FIELD_DEGREE}], got {k!r}")
    if k in _PREFERRED_MODULI:
        return BinPoly(_PREFERRED_MODULI[k])
    for bits in range(1 << k, 1 << (k + 1)):
        if _is_irreducible_bits(bits):
            return BinPoly(bits)
    raise AssertionError(f"no irreducible polynomial of degree {k}")  # pragma: no cover


_TERM = re.compile(r"^(?:X(?:\^(\d+))?|1)$")


def parse_poly(text: str) -> BinPoly:
    """Parse ``"X^3+X+1"``, ``"0"`` or a hex bit form such as ``"0xB"``."""
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial")
    if s.lower().startswith("0x"):
        try:
            return BinPoly(int(s, 16))
        except ValueError:
            raise ValueError(f"bad hexadecimal polynomial {text!r}") from None
    if s == "0":
        return BinPoly(0)
    exponents = []
    for term in s.split("+"):
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"bad term {term!r} in polynomial {text!r}")
        if term == "1":
            exponents.append(0)
        elif m.group(1) is None:
            exponents.append(1)
        else:
            exponents.append(int(m.group(1)))
    try:
        return BinPoly.from_exponents(exponents)
    except ValueError as exc:
        raise ValueError(f"{exc} in polynomial {text!r}") from None
