"""GF(2^m) arithmetic and function-table predicates.

Field elements are plain Python ints in [0, q) whose binary digits are the
coefficients of a polynomial over GF(2); the interpretation is fixed by a
:class:`GF2m` context carrying the modulus.  Addition is XOR.  Multiplication
and inversion go through exp/log tables built on a primitive element, so both
are table lookups after construction.

Total functions GF(q) -> GF(q) are stored as value tables of length q
(:class:`FieldFunction`).  The predicates on them (permutation, 2-to-1, oval,
root existence) are exhaustive O(q) or O(q^2) scans; q <= 2^16 keeps this
instant.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "DEFAULT_MODULI",
    "GF2m",
    "FieldFunction",
    "poly_to_str",
    "is_permutation",
    "is_two_to_one",
    "is_oval_polynomial",
    "oval_slope_criterion",
    "has_root_f_plus_x_plus_1",
]

# Default irreducible modulus per extension degree, as coefficient-bit ints.
# Low-weight classics; x (value 2) is primitive for every one of them, and the
# constructor re-verifies both irreducibility and generator order anyway.
DEFAULT_MODULI: dict[int, int] = {
    2: 0b111,                # x^2+x+1
    3: 0b1011,               # x^3+x+1
    4: 0b10011,              # x^4+x+1
    5: 0b100101,             # x^5+x^2+1
    6: 0b1000011,            # x^6+x+1
    7: 0b10000011,           # x^7+x+1
    8: 0b100011101,          # x^8+x^4+x^3+x^2+1
    9: 0b1000010001,         # x^9+x^4+1
    10: 0b10000001001,       # x^10+x^3+1
    11: 0b100000000101,      # x^11+x^2+1
    12: 0b1000001010011,     # x^12+x^6+x^4+x+1
    13: 0b10000000011011,    # x^13+x^4+x^3+x+1
    14: 0b100010001000011,   # x^14+x^10+x^6+x+1
    15: 0b1000000000000011,  # x^15+x+1
    16: 0b10001000000001011, # x^16+x^12+x^3+x+1
}

MAX_M = 16


def poly_to_str(p: int) -> str:
    """Render a GF(2) polynomial int like 0b1011 as 'x^3+x+1'."""
    if p == 0:
        return "0"
    terms = []
    for e in range(p.bit_length() - 1, -1, -1):
        if (p >> e) & 1:
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
    return "+".join(terms)


def _poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of GF(2)[x] division of a by b (b != 0)."""
    db = b.bit_length() - 1
    quo = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        quo ^= 1 << shift
        a ^= b << shift
    return quo, a


def find_factor(p: int) -> int | None:
    """Smallest nontrivial GF(2)[x] factor of p, or None if p is irreducible.

    Trial division by every polynomial of degree 1 .. deg(p)//2.  Exponential
    in the degree, but deg <= 16 keeps the candidate pool tiny.
    """
    deg = p.bit_length() - 1
    for cand in range(2, 1 << (deg // 2 + 1)):
        if _poly_divmod(p, cand)[1] == 0:
            return cand
    return None


class GF2m:
    """The finite field GF(2^m) with a verified irreducible modulus.

    Parameters
    ----------
    m : int
        Extension degree, 2 <= m <= 16.
    modulus : int, optional
        Irreducible polynomial of degree m with constant term 1, encoded as
        an (m+1)-bit int (e.g. 0xB for x^3+x+1).  Defaults per m are in
        ``DEFAULT_MODULI``.

    Raises
    ------
    ValueError
        If m is out of range, or the modulus has wrong degree, even constant
        term, or is reducible (the message names the found root or factor).

    The instance is immutable after construction and safe to share across
    threads; every operation is a pure function of its arguments.
    """

    def __init__(self, m: int, modulus: int | None = None) -> None:
        if not 2 <= m <= MAX_M:
            raise ValueError(f"extension degree m={m} out of supported range [2, {MAX_M}]")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if modulus.bit_length() - 1 != m:
            raise ValueError(
                f"modulus {poly_to_str(modulus)} has degree {modulus.bit_length() - 1}, expected {m}"
            )
        if modulus & 1 == 0:
            raise ValueError(f"reducible modulus {poly_to_str(modulus)}: root x=0")
        factor = find_factor(modulus)
        if factor is not None:
            if factor == 0b11:  # x+1 divides p  <=>  p(1) = 0
                raise ValueError(f"reducible modulus {poly_to_str(modulus)}: root x=1")
            raise ValueError(
                f"reducible modulus {poly_to_str(modulus)}: factor {poly_to_str(factor)}"
            )

        self.m = m
        self.modulus = modulus
        self.q = 1 << m

        self._generator = self._find_generator()
        self._build_tables(self._generator)

    # -- construction helpers -------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Carry-less multiply mod the modulus, no tables (used to build them)."""
        p = 0
        top = self.q
        while b:
            if b & 1:
                p ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return p

    def _order(self, a: int) -> int:
        v, n = a, 1
        while v != 1:
            v = self._mul_raw(v, a)
            n += 1
        return n

    def _find_generator(self) -> int:
        for g in range(2, self.q):
            if self._order(g) == self.q - 1:
                return g
        raise AssertionError("no primitive element found; modulus cannot be irreducible")

    def _build_tables(self, g: int) -> None:
        qm1 = self.q - 1
        exp = np.zeros(2 * qm1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        log[0] = -1  # sentinel, never consulted for the zero element
        v = 1
        for i in range(qm1):
            exp[i] = v
            exp[i + qm1] = v
            log[v] = i
            v = self._mul_raw(v, g)
        if v != 1:
            raise AssertionError("generator order mismatch while building tables")
        self._exp = exp
        self._log = log

    # -- scalar arithmetic ----------------------------------------------------

    @property
    def generator(self) -> int:
        """A fixed primitive element; its powers fill exp/log."""
        return self._generator

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add  # characteristic 2

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises for zero."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse in GF(2^m)")
        return int(self._exp[(self.q - 1) - self._log[a]])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e with integer exponent (negative allowed for nonzero a)."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def alpha_order(self) -> list[int]:
        """The canonical element listing: 0, 1, then the rest ascending."""
        return [0, 1] + [v for v in range(2, self.q)]

    # -- vectorized arithmetic (numpy int arrays of element values) -----------

    def scale_vec(self, a: int, vec: np.ndarray) -> np.ndarray:
        """Elementwise a * vec over the field."""
        if a == 0:
            return np.zeros_like(vec)
        out = self._exp[(self._log[vec] + self._log[a]) % (self.q - 1)]
        return np.where(vec == 0, 0, out)

    def mul_vec(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Elementwise (broadcast) field product of two value arrays."""
        lu = self._log[u]
        lv = self._log[v]
        out = self._exp[(lu + lv) % (self.q - 1)]
        return np.where((u == 0) | (v == 0), 0, out)

    def scale_table(self, vec: np.ndarray) -> np.ndarray:
        """All q scalings of vec, as a (q, len(vec)) uint16 array; row a = a*vec."""
        scalars = np.arange(self.q, dtype=np.int64)
        out = self.mul_vec(scalars[:, None], vec[None, :])
        return out.astype(np.uint16)

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, modulus={poly_to_str(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2m) and (self.m, self.modulus) == (other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.m, self.modulus))


class FieldFunction:
    """A total map GF(q) -> GF(q) stored as a value table of length q."""

    def __init__(self, ctx: GF2m, table: Sequence[int]) -> None:
        table = tuple(int(v) for v in table)
        if len(table) != ctx.q:
            raise ValueError(f"table length {len(table)} != q={ctx.q}")
        if any(not 0 <= v < ctx.q for v in table):
            raise ValueError("table contains values outside the field")
        self.ctx = ctx
        self.table = table

    @classmethod
    def from_callable(cls, ctx: GF2m, fn: Callable[[int], int]) -> "FieldFunction":
        return cls(ctx, [fn(x) for x in ctx.elements()])

    @classmethod
    def from_exponent(cls, ctx: GF2m, e: int) -> "FieldFunction":
        """The monomial x^e."""
        return cls(ctx, [ctx.pow(x, e) for x in ctx.elements()])

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __repr__(self) -> str:
        return f"FieldFunction(q={self.ctx.q}, table={self.table[:8]}...)"


def is_permutation(f: FieldFunction) -> bool:
    """True iff the value table is a bijection of GF(q)."""
    return len(set(f.table)) == f.ctx.q


def is_two_to_one(f: FieldFunction) -> bool:
    """True iff every attained value has exactly two preimages."""
    return all(n == 2 for n in Counter(f.table).values())


def is_oval_polynomial(f: FieldFunction) -> bool:
    """True iff f(0)=0, f is a permutation, and f(x)+ux is 2-to-1 for all u != 0."""
    ctx = f.ctx
    if f.table[0] != 0 or not is_permutation(f):
        return False
    for u in ctx.nonzero_elements():
        fu = Counter(f.table[x] ^ ctx.mul(u, x) for x in ctx.elements())
        if any(n != 2 for n in fu.values()):
            return False
    return True


def oval_slope_criterion(f: FieldFunction) -> bool:
    """Independent oval test via secant slopes: f a permutation with
    (f(x)+f(y))/(x+y) != (f(x)+f(z))/(x+z) for pairwise distinct x, y, z,
    checked exhaustively through the per-x slope sets.

    Slopes are invariant under adding a constant to f, so the f(0)=0
    normalization that the oval notion carries must be checked here too;
    without it every translate of an oval function would slip through.
    """
    ctx = f.ctx
    if f.table[0] != 0 or not is_permutation(f):
        return False
    for x in ctx.elements():
        seen = set()
        for y in ctx.elements():
            if y == x:
                continue
            slope = ctx.div(f.table[x] ^ f.table[y], x ^ y)
            if slope in seen:
                return False
            seen.add(slope)
    return True


def has_root_f_plus_x_plus_1(f: FieldFunction) -> bool:
    """True iff some x in GF(q) satisfies f(x) + x + 1 = 0."""
    return any(f.table[x] ^ x ^ 1 == 0 for x in f.ctx.elements())
