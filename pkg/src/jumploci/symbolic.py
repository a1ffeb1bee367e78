"""Exact multivariate (Laurent) polynomials over the rationals.

A :class:`LaurentPoly` is an immutable map from integer exponent vectors to
nonzero coefficients.  Coefficients are Python ints, :class:`fractions.Fraction`
or :class:`jumploci.cyclotomic.Cyclotomic` (for computations over a cyclotomic
field); integer inputs stay integer-exact.

Ordinary polynomials are Laurent polynomials whose exponents are all
non-negative, so one class serves both rings.
"""
from __future__ import annotations

import ast
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

Exps = tuple[int, ...]


class BudgetExceeded(RuntimeError):
    """A configured computation budget (support size, point count, ...) was hit."""


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, bool):
        return int(c)
    return c


def _is_zero(c) -> bool:
    return c == 0


def deglex_key(e: Exps):
    """Sort key for the global monomial order: total degree, then lex."""
    return (sum(e), e)


class LaurentPoly:
    __slots__ = ("nvars", "terms", "names", "_hash")

    def __init__(self, terms: Mapping[Exps, object] | None = None, nvars: int = 0,
                 names: Sequence[str] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not have length {nvars}")
                if not _is_zero(c):
                    clean[tuple(e)] = _norm_coeff(c)
        self.nvars = nvars
        self.terms = clean
        self.names = tuple(names) if names is not None else None
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, nvars: int, names=None) -> "LaurentPoly":
        return cls({}, nvars, names)

    @classmethod
    def const(cls, c, nvars: int, names=None) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars, names)

    @classmethod
    def var(cls, i: int, nvars: int, names=None, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = power
        return cls({tuple(e): 1}, nvars, names)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1, names=None) -> "LaurentPoly":
        return cls({tuple(exps): coeff}, len(exps), names)

    def _new(self, terms) -> "LaurentPoly":
        return LaurentPoly(terms, self.nvars, self.names)

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("ring mismatch: %d vs %d variables" % (self.nvars, other.nvars))
            return other
        return LaurentPoly.const(other, self.nvars, self.names)

    # -- basic predicates ---------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self.terms for x in e)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if _is_zero(other):
                return self.zero(self.nvars, self.names)
            return self._new({e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            return LaurentPoly({tuple(-x * (-k) for x in e): Fraction(1) / c ** (-k)},
                               self.nvars, self.names)
        result = LaurentPoly.const(1, self.nvars, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            q = exact_quotient(self, other)
            if q is None:
                raise ArithmeticError("division is not exact")
            return q
        return self._new({e: _div(c, other) for e, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if self.is_zero():
            return _is_zero(other)
        return self.is_constant() and self.constant_term() == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- structure ----------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exps, object]]:
        """Terms in decreasing global monomial order."""
        return sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Exps, object]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=deglex_key)
        return e, self.terms[e]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_total_degree(self) -> int:
        return min(sum(e) for e in self.terms)

    def degree_in(self, i: int) -> int:
        return max(e[i] for e in self.terms) if self.terms else -1

    def used_variables(self) -> list[int]:
        return [i for i in range(self.nvars) if any(e[i] for e in self.terms)]

    def min_exponents(self) -> Exps:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        return self._new({tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def clear_monomial(self) -> "LaurentPoly":
        """Multiply by the unique monomial making exponents >= 0 with minimum 0."""
        m = self.min_exponents()
        return self.shift([-x for x in m])

    def homogeneous_part(self, d: int) -> "LaurentPoly":
        return self._new({e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficients(self):
        return list(self.terms.values())

    def with_names(self, names) -> "LaurentPoly":
        return LaurentPoly(self.terms, self.nvars, names)

    def map_coefficients(self, fn) -> "LaurentPoly":
        return self._new({e: fn(c) for e, c in self.terms.items()})

    def bar(self) -> "LaurentPoly":
        """Image under the involution t_i -> t_i^{-1}."""
        return self._new({tuple(-x for x in e): c for e, c in self.terms.items()})

    def derivative(self, i: int) -> "LaurentPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return self._new(out)

    def embed(self, nvars: int, positions: Sequence[int], names=None) -> "LaurentPoly":
        """Re-home into a ring with ``nvars`` variables; variable i goes to positions[i]."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * nvars
            for i, x in enumerate(e):
                f[positions[i]] += x
            out[tuple(f)] = c
        return LaurentPoly(out, nvars, names)

    def substitute(self, images: Sequence["LaurentPoly"]) -> "LaurentPoly":
        """Ring substitution t_i -> images[i] (all images share one ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        names = images[0].names if images else None
        powers: dict[tuple[int, int], LaurentPoly] = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        out = LaurentPoly.zero(target, names)
        for e, c in self.terms.items():
            term = LaurentPoly.const(c, target, names)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def evaluate(self, point: Sequence, p: int | None = None):
        """Evaluate exactly at ``point``; with ``p`` set, work in the prime field F_p."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        if p is None:
            total = 0
            for e, c in self.terms.items():
                v = c
                for x, k in zip(point, e):
                    if k < 0:
                        if x == 0:
                            raise ZeroDivisionError("negative exponent at a zero coordinate")
                        v = v * Fraction(1) / (Fraction(x) ** (-k))
                    elif k:
                        v = v * x ** k
                total = total + v
            return _norm_coeff(total)
        total = 0
        for e, c in self.terms.items():
            v = coeff_mod_p(c, p)
            for x, k in zip(point, e):
                if k < 0:
                    if x % p == 0:
                        raise ZeroDivisionError("negative exponent at a zero coordinate")
                    v = v * pow(x, k, p) % p
                elif k:
                    v = v * pow(x, k, p) % p
            total = (total + v) % p
        return total

    def at_one(self):
        return self.evaluate([1] * self.nvars)

    # -- display / serialization --------------------------------------
    def var_names(self) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        return tuple(f"t{i + 1}" for i in range(self.nvars))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r}, nvars={self.nvars})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": _coeff_str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], nvars: int, names=None) -> "LaurentPoly":
        terms: dict = {}
        for item in data:
            e = tuple(int(x) for x in item["exponents"])
            terms[e] = terms.get(e, 0) + Fraction(str(item["coeff"]))
        return cls(terms, nvars, names)


def _div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _coeff_str(c) -> str:
    if isinstance(c, (int, Fraction)):
        f = Fraction(c)
        return f"{f.numerator}/{f.denominator}"
    return str(c)


def coeff_mod_p(c, p: int) -> int:
    if isinstance(c, int):
        return c % p
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"denominator divisible by {p}")
        return c.numerator * pow(c.denominator, -1, p) % p
    raise TypeError(f"cannot reduce coefficient {c!r} modulo {p}")


def format_poly(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    names = f.var_names()
    parts = []
    for e, c in f.sorted_terms():
        mono = "*".join(
            (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
        )
        if isinstance(c, (int, Fraction)):
            neg = c < 0
            a = -c if neg else c
            if mono:
                cs = "" if a == 1 else f"{a}*"
                body = cs + mono
            else:
                body = str(a)
            parts.append(("- " if neg else "+ ") + body)
        else:
            body = f"({c})" + (f"*{mono}" if mono else "")
            parts.append("+ " + body)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


# ---------------------------------------------------------------------------
# parsing


def parse_poly(text: str, names: Sequence[str]) -> LaurentPoly:
    """Parse an arithmetic expression in the given variable names.

    Supports ``+ - * / ** ^`` with integer exponents (negative allowed for
    Laurent monomials), rational constants and parentheses.
    """
    names = tuple(names)
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None

    def ev(node) -> LaurentPoly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return LaurentPoly.const(node.value, n, names)
        if isinstance(node, ast.Name):
            if node.id not in index:
                raise ValueError(f"unknown variable {node.id!r}")
            return LaurentPoly.var(index[node.id], n, names)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                k = _int_literal(node.right)
                return ev(node.left) ** k
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.is_constant() and not b.is_zero():
                    return a * (Fraction(1) / Fraction(b.constant_term()))
                return a * b ** -1
        raise ValueError(f"unsupported syntax in polynomial: {ast.dump(node)}")

    return ev(tree)


def _int_literal(node) -> int:
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_int_literal(node.operand)
    raise ValueError("exponents must be integer literals")


def variables(names: Sequence[str]) -> list[LaurentPoly]:
    names = tuple(names)
    return [LaurentPoly.var(i, len(names), names) for i in range(len(names))]


def t_names(n: int) -> tuple[str, ...]:
    return tuple(f"t{i + 1}" for i in range(n))


def x_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


# ---------------------------------------------------------------------------
# units and normal forms


def leading_sign(c) -> int:
    if isinstance(c, (int, Fraction)):
        return 1 if c > 0 else -1
    return 1


def unit_normalize(f: LaurentPoly) -> LaurentPoly:
    """Canonical representative of the orbit of ``f`` under ±monomial units.

    Exponents are shifted so each variable's minimum exponent is 0 and the
    sign is chosen so the leading coefficient (global order) is positive.
    For non-rational coefficient fields the leading coefficient is made 1.
    """
    if f.is_zero():
        return f
    g = f.clear_monomial()
    _, c = g.leading_term()
    if isinstance(c, (int, Fraction)):
        return g if c > 0 else -g
    return g * (1 / c)


def associated(f: LaurentPoly, g: LaurentPoly) -> bool:
    """f ≐ g: equal up to multiplication by ±monomials."""
    return unit_normalize(f) == unit_normalize(g)


def is_unit(f: LaurentPoly) -> bool:
    """Units of the Laurent ring over a field: nonzero constant times a monomial."""
    return f.is_monomial()


def symmetric(f: LaurentPoly) -> bool:
    return associated(f, f.bar())


# ---------------------------------------------------------------------------
# division and gcd


def exact_quotient(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """Return q with f = q*g if g divides f in the Laurent ring, else None."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    mf, mg = f.min_exponents(), g.min_exponents()
    fp = f.shift([-x for x in mf])
    gp = g.shift([-x for x in mg])
    q = _poly_exact_quotient(fp, gp)
    if q is None:
        return None
    return q.shift([a - b for a, b in zip(mf, mg)])


def _poly_exact_quotient(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    lg, cg = g.leading_term()
    if len(g.terms) == 1:
        out = {}
        for e, c in f.terms.items():
            d = tuple(a - b for a, b in zip(e, lg))
            if min(d, default=0) < 0:
                return None
            out[d] = _div(c, cg)
        return f._new(out)
    rem = dict(f.terms)
    quot = {}
    gterms = list(g.terms.items())
    while rem:
        lf = max(rem, key=deglex_key)
        d = tuple(a - b for a, b in zip(lf, lg))
        if min(d, default=0) < 0:
            return None
        coef = _norm_coeff(_div(rem[lf], cg))
        quot[d] = coef
        for e, c in gterms:
            k = tuple(a + b for a, b in zip(e, d))
            v = rem.get(k, 0) - coef * c
            if _is_zero(v):
                rem.pop(k, None)
            else:
                rem[k] = v
    return f._new(quot)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    """Divisibility in the Laurent ring (monomials are units)."""
    return exact_quotient(f, g) is not None


def poly_quotient(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """Exact quotient in the ordinary polynomial ring (monomials are not units)."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    return _poly_exact_quotient(f, g)


def _integer_content(f: LaurentPoly):
    """Rational content: gcd of numerators over lcm of denominators (sign +)."""
    num = 0
    den = 1
    for c in f.terms.values():
        if not isinstance(c, (int, Fraction)):
            return 1
        c = Fraction(c)
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator)
    if num == 0:
        return 0
    return Fraction(num, den)


def primitive_over_z(f: LaurentPoly) -> LaurentPoly:
    """Scale to coprime integer coefficients with positive leading coefficient."""
    if f.is_zero():
        return f
    c = _integer_content(f)
    _, lc = f.leading_term()
    if not isinstance(lc, (int, Fraction)):
        return f * (1 / lc)
    g = f * (Fraction(1) / c)
    return g if leading_sign(lc) > 0 else -g


def _normalize_gcd(f: LaurentPoly) -> LaurentPoly:
    return primitive_over_z(f)


def _coeffs_in(f: LaurentPoly, v: int) -> dict[int, LaurentPoly]:
    """View f as a univariate polynomial in variable v (coefficients free of v)."""
    out: dict[int, dict] = {}
    for e, c in f.terms.items():
        k = e[v]
        rest = e[:v] + (0,) + e[v + 1:]
        out.setdefault(k, {})[rest] = c
    return {k: f._new(t) for k, t in out.items()}


def _from_coeffs(cs: Mapping[int, LaurentPoly], v: int, template: LaurentPoly) -> LaurentPoly:
    out = {}
    for k, p in cs.items():
        for e, c in p.terms.items():
            f = list(e)
            f[v] = k
            out[tuple(f)] = c
    return template._new(out)


def _content_in(f: LaurentPoly, v: int) -> LaurentPoly:
    cs = list(_coeffs_in(f, v).values())
    cs.sort(key=len)
    g = cs[0]
    for c in cs[1:]:
        if g.is_constant():
            break
        g = _poly_gcd(g, c)
    return _normalize_gcd(g)


def _prem(a: LaurentPoly, b: LaurentPoly, v: int) -> LaurentPoly:
    """Pseudo-remainder of a by b with respect to variable v."""
    bc = _coeffs_in(b, v)
    db = max(bc)
    lb = bc[db]
    r = a
    while not r.is_zero():
        rc = _coeffs_in(r, v)
        dr = max(rc)
        if dr < db:
            break
        lr = rc[dr]
        mono = LaurentPoly.var(v, a.nvars, a.names, dr - db) if dr > db else 1
        r = r * lb - b * lr * mono
    return r


def _dehomogenize(f: LaurentPoly, v: int) -> LaurentPoly:
    out: dict = {}
    for e, c in f.terms.items():
        k = e[:v] + (0,) + e[v + 1:]
        out[k] = out.get(k, 0) + c
    return f._new({e: c for e, c in out.items() if not _is_zero(c)})


def _homogenize(f: LaurentPoly, v: int) -> LaurentPoly:
    d = f.total_degree()
    return f._new({e[:v] + (d - sum(e),) + e[v + 1:]: c for e, c in f.terms.items()})


def _poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """GCD of honest polynomials, normalized to be primitive over Z."""
    if f.is_zero():
        return _normalize_gcd(g)
    if g.is_zero():
        return _normalize_gcd(f)
    if f.is_constant() or g.is_constant():
        return LaurentPoly.const(1, f.nvars, f.names)
    # monomial factors first: they are cheap and common
    mf, mg = f.min_exponents(), g.min_exponents()
    common = tuple(min(a, b) for a, b in zip(mf, mg))
    if any(mf) or any(mg):
        h = _poly_gcd(f.shift([-x for x in mf]), g.shift([-x for x in mg]))
        return h.shift(common)
    if len(f) > len(g):
        f, g = g, f
    if _poly_exact_quotient(g, f) is not None:
        return _normalize_gcd(f)
    used = sorted(set(f.used_variables()) | set(g.used_variables()))
    if len(used) >= 2 and f.is_homogeneous() and g.is_homogeneous():
        # no monomial factors remain, so the gcd is the homogenization of the
        # gcd with one variable set to 1
        return _normalize_gcd(_homogenize(_poly_gcd(_dehomogenize(f, used[-1]),
                                                    _dehomogenize(g, used[-1])), used[-1]))
    v = used[-1]
    if f.degree_in(v) <= 0:
        return _poly_gcd(f, _content_in(g, v))
    if g.degree_in(v) <= 0:
        return _poly_gcd(g, _content_in(f, v))
    cf, cg = _content_in(f, v), _content_in(g, v)
    c = _poly_gcd(cf, cg)
    a = _poly_exact_quotient(f, cf)
    b = _poly_exact_quotient(g, cg)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while not b.is_zero() and b.degree_in(v) > 0:
        r = _prem(a, b, v)
        a = b
        if r.is_zero():
            b = r
        else:
            b = primitive_over_z(_poly_exact_quotient(r, _content_in(r, v)))
    if b.is_zero():
        h = _poly_exact_quotient(a, _content_in(a, v))
    else:
        h = LaurentPoly.const(1, f.nvars, f.names)
    return _normalize_gcd(c * h)


def gcd_multi(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """GCD of two Laurent polynomials, unique up to units.

    Inputs are cleared to polynomials first.  Over the rationals the result
    carries the integer content gcd of the inputs, so integral data keeps its
    integral gcd; the result is unit-normalized.
    """
    if f.nvars != g.nvars:
        raise ValueError("ring mismatch")
    if f.is_zero() and g.is_zero():
        return f
    if f.is_zero():
        return unit_normalize(g)
    if g.is_zero():
        return unit_normalize(f)
    fp, gp = f.clear_monomial(), g.clear_monomial()
    h = _poly_gcd(fp, gp)
    cf, cg = _integer_content(fp), _integer_content(gp)
    if isinstance(cf, Fraction) and isinstance(cg, Fraction):
        num = math.gcd(cf.numerator, cg.numerator)
        den = cf.denominator * cg.denominator // math.gcd(cf.denominator, cg.denominator)
        h = h * Fraction(num, den)
    return unit_normalize(h)


def gcd_list(polys: Iterable[LaurentPoly], nvars: int | None = None) -> LaurentPoly:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        if nvars is None:
            raise ValueError("need nvars for an empty gcd")
        return LaurentPoly.zero(nvars)
    polys.sort(key=len)
    g = unit_normalize(polys[0])
    for p in polys[1:]:
        if g.is_constant() and _integer_content(g) in (0, 1):
            break
        if exact_quotient(p, g) is not None and _integer_content(g) == 1:
            continue
        g = gcd_multi(g, p)
    return g


def squarefree_part(f: LaurentPoly) -> LaurentPoly:
    """Product of the distinct irreducible factors of f (characteristic 0)."""
    if f.is_zero():
        return f
    g = f.clear_monomial()
    h = g
    for i in g.used_variables():
        h = gcd_multi(h, g.derivative(i))
        if h.is_constant():
            break
    q = exact_quotient(g, h)
    return unit_normalize(primitive_over_z(q))


# ---------------------------------------------------------------------------
# tangent-cone helpers


def shift_to_origin(f: LaurentPoly, names: Sequence[str] | None = None) -> LaurentPoly:
    """Return g(x) = f(x_1 + 1, ..., x_n + 1) after clearing f to a polynomial."""
    f = f.clear_monomial()
    n = f.nvars
    terms = dict(f.terms)
    for v in range(n):
        out: dict = {}
        for e, c in terms.items():
            k = e[v]
            if k == 0:
                out[e] = out.get(e, 0) + c
                continue
            for j in range(k + 1):
                f2 = e[:v] + (j,) + e[v + 1:]
                out[f2] = out.get(f2, 0) + c * math.comb(k, j)
        terms = {e: c for e, c in out.items() if not _is_zero(c)}
    return LaurentPoly(terms, n, tuple(names) if names else x_names(n))


def initial_form(g: LaurentPoly) -> LaurentPoly:
    """Homogeneous component of lowest total degree."""
    if g.is_zero():
        raise ValueError("the zero polynomial has no initial form")
    return g.homogeneous_part(g.min_total_degree())


def content_gcd(values: Iterable[int]) -> int:
    return reduce(math.gcd, values, 0)


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """GCD in the ordinary polynomial ring: monomial factors are kept.

    The result is primitive over Z with positive leading coefficient.
    """
    if not (f.is_polynomial() and g.is_polynomial()):
        raise ValueError("poly_gcd needs ordinary polynomials")
    if f.is_zero() and g.is_zero():
        return f
    return _poly_gcd(f, g)


def squarefree_poly(f: LaurentPoly) -> LaurentPoly:
    """Square-free part in the ordinary polynomial ring (keeps variable factors)."""
    if f.is_zero():
        return f
    h = f
    for i in f.used_variables():
        h = poly_gcd(h, f.derivative(i))
        if h.is_constant():
            break
    return primitive_over_z(_poly_exact_quotient(f, h))
