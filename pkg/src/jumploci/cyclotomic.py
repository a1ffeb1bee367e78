"""Exact arithmetic in the cyclotomic field Q[u]/Φ_m(u)."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        _trim(a)
    return _trim(q), a


def _psub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, r = _pdivmod(num, [Fraction(x) for x in cyclotomic_poly(d)])
            assert not r
    return tuple(int(x) for x in num)


class Cyclotomic:
    """Element of Q(ζ_m), stored as a reduced polynomial in u = ζ_m."""

    __slots__ = ("m", "c")

    def __init__(self, m: int, coeffs=()):
        self.m = m
        phi = cyclotomic_poly(m)
        c = _trim([Fraction(x) for x in coeffs])
        if len(c) >= len(phi):
            _, c = _pdivmod(c, [Fraction(x) for x in phi])
        self.c = tuple(c)

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> "Cyclotomic":
        power %= m
        return cls(m, [0] * power + [1])

    def _lift(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.m != self.m:
                raise ValueError("cyclotomic fields differ")
            return other
        return Cyclotomic(self.m, [other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.c), len(o.c))
        a = list(self.c) + [0] * (n - len(self.c))
        b = list(o.c) + [0] * (n - len(o.c))
        return Cyclotomic(self.m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-x for x in self.c])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            return Cyclotomic(self.m, [x * other for x in self.c])
        o = self._lift(other)
        return Cyclotomic(self.m, _pmul(list(self.c), list(o.c)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return (1 / self) ** (-k)
        out = Cyclotomic(self.m, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "Cyclotomic":
        if not self.c:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: s*self + t*phi = 1
        r0, r1 = [Fraction(x) for x in cyclotomic_poly(self.m)], list(self.c)
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        # r0 is a nonzero constant
        return Cyclotomic(self.m, [x / r0[0] for x in s0])

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return Cyclotomic(self.m, [x / Fraction(other) for x in self.c])

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            return self.m == other.m and self.c == other.c
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.c
            return self.c == (Fraction(other),)
        return NotImplemented

    def __hash__(self):
        if len(self.c) <= 1:
            return hash(self.c[0] if self.c else 0)
        return hash((self.m, self.c))

    def is_rational(self) -> bool:
        return len(self.c) <= 1

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for i, x in enumerate(self.c):
            if x == 0:
                continue
            mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if mono:
                parts.append(f"{x}*{mono}" if x != 1 else mono)
            else:
                parts.append(str(x))
        return " + ".join(parts)

    def __repr__(self):
        return f"Cyclotomic({self.m}, {[str(x) for x in self.c]})"
