"""Arithmetic in the tower GF(2^k) < GF(2^m), m = 2k.

Elements are plain Python ints holding the coefficient vector in the
polynomial basis: bit i is the coefficient of x^i. Vectorised helpers take
and return numpy integer arrays in the same encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from . import gf2
from .errors import (
    DivisionByZero,
    NoncubeUnavailable,
    NonPrimitiveModulus,
    NotInSubfield,
    UnsupportedDegree,
)

# Lexicographically smallest primitive polynomial of each even degree.
DEFAULT_MODULI = {
    2: 0x7,
    4: 0x13,
    6: 0x43,
    8: 0x11D,
    10: 0x409,
    12: 0x1053,
    14: 0x402B,
    16: 0x1002D,
    18: 0x40027,
    20: 0x100009,
    22: 0x400003,
    24: 0x100001B,
    26: 0x4000047,
    28: 0x10000009,
    30: 0x40000053,
    32: 0x1000000AF,
}

TABLE_THRESHOLD = 22
MAX_K = 16


def elem_hex(x: int) -> str:
    return format(int(x), "x")


def parse_hex(s: str) -> int:
    s = s.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    return int(s, 16)


def load_moduli_config(path) -> dict[int, int]:
    """Read modulus overrides from a text file.

    One override per line, ``<m> <hex modulus>``; ``#`` starts a comment.
    Example line for x^6+x+1: ``6 43``.
    """
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace("=", " ").split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected '<m> <hex>'")
        out[int(parts[0])] = parse_hex(parts[1])
    return out


def _prime_factors(n: int) -> list[int]:
    fs, p = [], 2
    while p * p <= n:
        if n % p == 0:
            fs.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        fs.append(n)
    return fs


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a: int, modulus: int) -> int:
    dm = modulus.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= modulus << (a.bit_length() - 1 - dm)
    return a


def _x_power_mod(e: int, modulus: int) -> int:
    r, b = 1, polymod(2, modulus)
    while e:
        if e & 1:
            r = polymod(clmul(r, b), modulus)
        b = polymod(clmul(b, b), modulus)
        e >>= 1
    return r


def is_primitive(modulus: int) -> bool:
    m = modulus.bit_length() - 1
    if m < 1 or not modulus & 1:
        return False
    n = (1 << m) - 1
    if _x_power_mod(n, modulus) != 1:
        return False
    return all(_x_power_mod(n // p, modulus) != 1 for p in _prime_factors(n))


@dataclass(frozen=True)
class FieldSpec:
    k: int
    m: int
    modulus: int

    def __post_init__(self):
        if self.m != 2 * self.k:
            raise UnsupportedDegree(f"m={self.m} is not 2k for k={self.k}")
        if self.modulus.bit_length() - 1 != self.m or not self.modulus & 1:
            raise NonPrimitiveModulus(
                f"modulus 0x{self.modulus:x} must have degree {self.m} and constant term 1"
            )


class FieldCtx:
    """Immutable arithmetic context for GF(2^m) with its subfield GF(2^k).

    Log/antilog tables are built when m <= ``table_threshold``; otherwise
    multiplication falls back to carry-less products with reduction.
    """

    def __init__(self, spec: FieldSpec, table_threshold: int = TABLE_THRESHOLD):
        self.spec = spec
        self.k = spec.k
        self.m = spec.m
        self.modulus = spec.modulus
        self.size = 1 << self.m
        self.n = self.size - 1
        self.sub_order = (1 << self.k) - 1
        if not is_primitive(self.modulus):
            raise NonPrimitiveModulus(f"0x{self.modulus:x} is not primitive")

        self.has_tables = self.m <= table_threshold
        self.exp = self.log = None
        if self.has_tables:
            self.exp = self._powers_clmul(0, self.n).astype(np.int64)
            log = np.full(self.size, -1, dtype=np.int64)
            log[self.exp] = np.arange(self.n, dtype=np.int64)
            self.log = log
            self.exp.setflags(write=False)
            self.log.setflags(write=False)

        self.alpha = 2 if self.m > 1 else 1
        self.beta = self.pow(self.alpha, (1 << self.k) + 1)
        self.trace_mask = sum(self.trace_m_conj(1 << i) << i for i in range(self.m))
        self.trace_k_mask = self._subfield_trace_mask()
        self.gram_cols = tuple(
            sum(self.trace_m(self.mul(1 << i, 1 << j)) << i for i in range(self.m))
            for j in range(self.m)
        )
        self.r = self._pick_noncube() if self.k % 2 else None

    def __repr__(self):
        return f"FieldCtx(k={self.k}, m={self.m}, modulus=0x{self.modulus:x})"

    # -- scalar arithmetic ------------------------------------------------

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul_clmul(self, x: int, y: int) -> int:
        return polymod(clmul(x, y), self.modulus)

    def mul_table(self, x: int, y: int) -> int:
        if not x or not y:
            return 0
        return int(self.exp[(self.log[x] + self.log[y]) % self.n])

    def mul(self, x: int, y: int) -> int:
        if self.has_tables:
            return self.mul_table(x, y)
        return self.mul_clmul(x, y)

    def pow(self, x: int, e: int) -> int:
        """x^e; negative e allowed for x != 0, 0^0 = 1."""
        if x == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        e %= self.n
        if self.has_tables:
            return int(self.exp[(int(self.log[x]) * e) % self.n])
        return self._pow_clmul(x, e)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of 0")
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def frob(self, x: int, j: int) -> int:
        """x^(2^j)."""
        j %= self.m
        for _ in range(j):
            x = self.mul(x, x)
        return x

    def const(self, c: int) -> int:
        """Field image of an integer constant: (c mod 2) times the identity."""
        return c & 1

    # -- traces ---------------------------------------------------------------

    def trace_m_conj(self, x: int) -> int:
        """Tr_m(x) as the sum of the m conjugates x^(2^i)."""
        t, y = 0, x
        for _ in range(self.m):
            t ^= y
            y = self.mul(y, y)
        assert t in (0, 1)
        return t

    def trace_m(self, x: int) -> int:
        return gf2.parity(x & self.trace_mask)

    def is_subfield(self, x: int) -> bool:
        return self.frob(x, self.k) == x

    def trace_k_m(self, x: int) -> int:
        """Relative trace x + x^(2^k) onto GF(2^k)."""
        return x ^ self.frob(x, self.k)

    def trace_k_conj(self, x: int) -> int:
        if not self.is_subfield(x):
            raise NotInSubfield(f"{elem_hex(x)} is not in GF(2^{self.k})")
        t, y = 0, x
        for _ in range(self.k):
            t ^= y
            y = self.mul(y, y)
        return t

    def trace_k(self, x: int) -> int:
        if not self.is_subfield(x):
            raise NotInSubfield(f"{elem_hex(x)} is not in GF(2^{self.k})")
        return gf2.parity(x & self.trace_k_mask)

    def subfield_ops(self, x: int) -> dict:
        sub = self.is_subfield(x)
        return {
            "is_subfield": sub,
            "trace_k": self.trace_k(x) if sub else None,
            "trace_k_m": self.trace_k_m(x),
        }

    def _subfield_trace_mask(self) -> int:
        # Tr_k(w) = Tr_m(lam * w) on GF(2^k) whenever Tr_k^m(lam) = 1.
        cols = [self.trace_k_m(1 << j) for j in range(self.m)]
        lam = gf2.solve(cols, 1)
        assert lam is not None
        return sum(self.trace_m(self.mul(lam, 1 << i)) << i for i in range(self.m))

    # -- cubes ----------------------------------------------------------------

    def is_cube(self, x: int) -> bool:
        if x == 0:
            return True
        if self.n % 3:
            return True
        return self.pow(x, self.n // 3) == 1

    def _pick_noncube(self) -> int:
        r = self.pow(self.alpha, (1 << self.k) - 1)
        if self.pow(r, (1 << self.k) + 1) != 1 or self.is_cube(r):
            raise NoncubeUnavailable(f"alpha^(2^k-1) failed the noncube check in {self!r}")
        return r

    def pick_noncube_r(self) -> int:
        if self.r is None:
            raise NoncubeUnavailable("a noncube r with r^(2^k+1)=1 exists only for odd k")
        return self.r

    # -- element collections --------------------------------------------------

    @cached_property
    def subfield(self) -> np.ndarray:
        """GF(2^k) as an array: index 0 holds 0, index t+1 holds beta^t."""
        out = np.zeros(self.sub_order + 1, dtype=np.int64)
        if self.has_tables:
            out[1:] = self.exp[np.arange(self.sub_order, dtype=np.int64) * ((1 << self.k) + 1)]
        else:
            out[1:] = self._powers_clmul(0, self.sub_order, base=self.beta)
        return out

    @cached_property
    def trace_k_beta(self) -> np.ndarray:
        """Tr_k(beta^t) for t in [0, 2^k - 1)."""
        return self.vtrace_k(self.subfield[1:]).astype(np.int8)

    @cached_property
    def norm_class(self) -> np.ndarray:
        """For each x != 0 the t with x^(2^k+1) = beta^t; entry 0 is unused."""
        out = np.zeros(self.size, dtype=np.uint16 if self.k <= 16 else np.uint32)
        if self.has_tables:
            out[1:] = self.log[1:] % self.sub_order
            return out
        chunk = 1 << 20
        for start in range(0, self.n, chunk):
            count = min(chunk, self.n - start)
            pos = self._powers_clmul(start, count).astype(np.int64)
            out[pos] = np.arange(start, start + count) % self.sub_order
        return out

    def all_powers(self) -> np.ndarray:
        """alpha^t for t in [0, 2^m - 1)."""
        if self.has_tables:
            return self.exp
        return self._powers_clmul(0, self.n).astype(np.int64)

    def _powers_clmul(self, start: int, count: int, base: int = 2) -> np.ndarray:
        """base^(start + i) for i in [0, count), without log tables."""
        block = min(count, 4096)
        out = np.empty(count, dtype=np.uint64)
        x = self._pow_clmul(base, start)
        for i in range(block):
            out[i] = x
            x = self.mul_clmul(x, base)
        step = self._pow_clmul(base, block)
        cur = out[:block]
        pos = block
        while pos < count:
            cur = self._vmul_const_clmul(cur, step)
            take = min(block, count - pos)
            out[pos : pos + take] = cur[:take]
            pos += take
        return out

    def _pow_clmul(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul_clmul(r, x)
            x = self.mul_clmul(x, x)
            e >>= 1
        return r

    # -- vectorised arithmetic ------------------------------------------------

    def _vreduce(self, r: np.ndarray) -> np.ndarray:
        mod = np.uint64(self.modulus)
        for bit in range(2 * self.m - 2, self.m - 1, -1):
            hit = (r >> np.uint64(bit)) & np.uint64(1)
            r ^= hit * (mod << np.uint64(bit - self.m))
        return r

    def _vmul_const_clmul(self, x: np.ndarray, c: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.uint64)
        r = np.zeros_like(x)
        for i in range(c.bit_length()):
            if c >> i & 1:
                r ^= x << np.uint64(i)
        return self._vreduce(r)

    def vmul_clmul(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.uint64)
        y = np.asarray(y, dtype=np.uint64)
        x, y = np.broadcast_arrays(x, y)
        r = np.zeros(x.shape, dtype=np.uint64)
        for i in range(self.m):
            r ^= ((y >> np.uint64(i)) & np.uint64(1)) * (x << np.uint64(i))
        return self._vreduce(r).astype(np.int64)

    def vmul(self, x, y) -> np.ndarray:
        if not self.has_tables:
            return self.vmul_clmul(x, y)
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        lx, ly = self.log[x], self.log[y]
        out = self.exp[(lx + ly) % self.n]
        return np.where((lx < 0) | (ly < 0), 0, out)

    def vpow(self, x, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        zero = x == 0
        if e < 0 and zero.any():
            raise DivisionByZero("0 raised to a negative power")
        if e == 0:
            return np.ones_like(x)
        ee = e % self.n
        if self.has_tables:
            out = self.exp[(self.log[np.where(zero, 1, x)] * ee) % self.n]
        else:
            out = np.ones_like(x)
            base = x.copy()
            while ee:
                if ee & 1:
                    out = self.vmul_clmul(out, base)
                base = self.vmul_clmul(base, base)
                ee >>= 1
        return np.where(zero, 0, out)

    def vfrob(self, x, j: int) -> np.ndarray:
        return self.vpow(x, 1 << (j % self.m)) if j % self.m else np.asarray(x, dtype=np.int64)

    def vtrace_m(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        return (np.bitwise_count(x & self.trace_mask) & 1).astype(np.int8)

    def vtrace_k(self, x) -> np.ndarray:
        """Tr_k on an array of subfield elements (not checked)."""
        x = np.asarray(x, dtype=np.int64)
        return (np.bitwise_count(x & self.trace_k_mask) & 1).astype(np.int8)

    def walsh_index(self, a) -> np.ndarray:
        """u(a) with <u(a), x> = Tr_m(a x) under the bitwise inner product."""
        a = np.asarray(a, dtype=np.int64)
        u = np.zeros_like(a)
        for j, col in enumerate(self.gram_cols):
            u |= (np.bitwise_count(a & col) & 1).astype(np.int64) << j
        return u

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)


def build_field(
    k: int,
    modulus: int | None = None,
    *,
    table_threshold: int = TABLE_THRESHOLD,
    overrides: dict[int, int] | None = None,
) -> FieldCtx:
    if not isinstance(k, int) or not 1 <= k <= MAX_K:
        raise UnsupportedDegree(f"k={k} outside [1, {MAX_K}]")
    m = 2 * k
    if modulus is None:
        modulus = (overrides or {}).get(m, DEFAULT_MODULI[m])
    if modulus.bit_length() - 1 != m:
        raise UnsupportedDegree(f"modulus 0x{modulus:x} does not have degree {m}")
    return FieldCtx(FieldSpec(k=k, m=m, modulus=modulus), table_threshold=table_threshold)


def arith(ctx: FieldCtx, op: str, *operands) -> int:
    if op == "add":
        return ctx.add(*operands)
    if op == "mul":
        return ctx.mul(*operands)
    if op == "inv":
        return ctx.inv(*operands)
    if op == "pow":
        return ctx.pow(*operands)
    raise ValueError(f"unknown op {op!r}")

