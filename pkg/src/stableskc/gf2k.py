"""The field GF(2^k) realised as Z_2[X]/(q) for an irreducible q of degree k.

Elements are stored as k-bit integers: bit i is the coefficient of alpha^i,
alpha being the residue class of X.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binpoly import BinPoly, _clmul, _divmod_bits, default_modulus, is_irreducible

__all__ = [
    "FieldCtx",
    "FieldElem",
    "elem_add",
    "elem_mul",
    "elem_inv",
    "elem_degree",
    "all_elements",
]

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class FieldCtx:
    k: int
    modulus: BinPoly

    def __post_init__(self):
        if not isinstance(self.modulus, BinPoly):
            object.__setattr__(self, "modulus", BinPoly(self.modulus))
        if self.k < 2:
            raise ValueError(f"field degree must be at least 2, got {self.k}")
        if self.modulus.degree != self.k:
            raise ValueError(f"modulus {self.modulus} has degree {self.modulus.degree}, expected {self.k}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus} ({self.modulus.hex()}) is reducible")

    @classmethod
    def default(cls, k: int) -> FieldCtx:
        return cls(k, default_modulus(k))

    @classmethod
    def from_modulus(cls, modulus: BinPoly) -> FieldCtx:
        if modulus.bits < 4:
            raise ValueError(f"modulus {modulus} has degree below 2")
        return cls(int(modulus.degree), modulus)

    @property
    def order(self) -> int:
        return 1 << self.k

    def __call__(self, bits: int) -> FieldElem:
        return FieldElem(self, bits)

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    @property
    def alpha(self) -> FieldElem:
        return FieldElem(self, 2)

    def mul_bits(self, a: int, b: int) -> int:
        """Product of two elements given as bit integers."""
        return _divmod_bits(_clmul(a, b), self.modulus.bits)[1]

    def __str__(self):
        return f"GF(2^{self.k}) mod {self.modulus}"


class FieldElem:
    """An element of GF(2^k) bound to its field context."""

    __slots__ = ("ctx", "bits")

    def __init__(self, ctx: FieldCtx, bits: int):
        if not 0 <= bits < ctx.order:
            raise ValueError(f"element bits {bits} out of range for {ctx}")
        self.ctx = ctx
        self.bits = bits

    def _check(self, other):
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected a field element, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ValueError(f"elements of different fields: {self.ctx} vs {other.ctx}")

    def __add__(self, other):
        return elem_add(self, other)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return elem_mul(self, other)

    def __truediv__(self, other):
        return elem_mul(self, elem_inv(other))

    def inverse(self) -> FieldElem:
        return elem_inv(self)

    def degree(self) -> int:
        return elem_degree(self)

    def __bool__(self):
        return self.bits != 0

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.bits))

    def __str__(self):
        if self.bits == 0:
            return "0"
        terms = []
        for i in range(self.bits.bit_length() - 1, -1, -1):
            if self.bits >> i & 1:
                if i == 0:
                    terms.append("1")
                elif i == 1:
                    terms.append("α")
                else:
                    terms.append("α" + str(i).translate(_SUPERSCRIPTS))
        return "+".join(terms)

    def __repr__(self):
        return f"FieldElem({self}, k={self.ctx.k})"


def elem_add(x: FieldElem, y: FieldElem) -> FieldElem:
    """Sum, which in characteristic 2 is also the difference."""
    x._check(y)
    return FieldElem(x.ctx, x.bits ^ y.bits)


def elem_mul(x: FieldElem, y: FieldElem) -> FieldElem:
    x._check(y)
    return FieldElem(x.ctx, x.ctx.mul_bits(x.bits, y.bits))


def elem_inv(x: FieldElem) -> FieldElem:
    """Multiplicative inverse by the extended Euclidean algorithm."""
    if x.bits == 0:
        raise ZeroDivisionError("zero has no inverse")
    # invariant: s*x == r (mod q) for both rows
    r0, r1 = x.ctx.modulus.bits, x.bits
    s0, s1 = 0, 1
    while r1 != 1:
        quot, rem = _divmod_bits(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 ^ _clmul(quot, s1)
    return FieldElem(x.ctx, _divmod_bits(s1, x.ctx.modulus.bits)[1])


def elem_degree(x: FieldElem) -> int:
    if x.bits == 0:
        raise ValueError("the degree of zero is undefined")
    return x.bits.bit_length() - 1


def all_elements(ctx: FieldCtx) -> list[FieldElem]:
    """Every element of the field in ascending bit order: 0, 1, α, α+1, α², ..."""
    return [FieldElem(ctx, b) for b in range(ctx.order)]
