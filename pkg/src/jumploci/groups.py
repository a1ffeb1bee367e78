"""Finitely presented groups: Fox calculus, abelianization, Alexander invariants."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations_with_replacement, product
from typing import Mapping, Sequence

from .cyclotomic import Cyclotomic
from .ideals.matrices import Ideal, PolyMatrix, fitting_ideal
from .ideals.varieties import (TORUS, IdentityPoint, TorsionTranslate,
                               VarietyDescription, ZeroSet, describe)
from .linalg import SparseSpan
from .symbolic import (LaurentPoly, gcd_list, poly_quotient, primitive_over_z, t_names,
                       unit_normalize)

Word = tuple[int, ...]  # letters ±(j+1) for generator j


class PresentationError(ValueError):
    pass


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for a in word:
        if a == 0:
            raise PresentationError("letter 0 is not a generator")
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def invert(word: Sequence[int]) -> Word:
    return tuple(-a for a in reversed(word))


def parse_word(text: str, names: Sequence[str]) -> Word:
    """Parse 'xyXY', 'x y^-1 z^2' or 'a1 b1 A1 B1'.

    A generator name denotes itself; the same name with its first letter
    swapped to upper case denotes the inverse.  An optional '^k' follows.
    """
    names = list(names)
    lookup: dict[str, int] = {}
    for j, nm in enumerate(names):
        lookup[nm] = j + 1
        inv = nm[0].swapcase() + nm[1:]
        if inv != nm and inv not in names:
            lookup[inv] = -(j + 1)
    tokens = sorted(lookup, key=len, reverse=True)
    s = text.replace(" ", "").replace("*", "").replace("·", "")
    out: list[int] = []
    pos = 0
    if s in ("", "1", "e"):
        return ()
    while pos < len(s):
        for tok in tokens:
            if s.startswith(tok, pos):
                letter = lookup[tok]
                pos += len(tok)
                break
        else:
            raise PresentationError(f"cannot parse word {text!r} at position {pos}")
        power = 1
        m = re.match(r"\^\(?(-?\d+)\)?", s[pos:])
        if m:
            power = int(m.group(1))
            pos += m.end()
        piece = [letter] * abs(power) if power >= 0 else [-letter] * abs(power)
        out.extend(piece)
    return free_reduce(out)


def format_word(word: Word, names: Sequence[str]) -> str:
    if not word:
        return "1"
    parts = []
    for a in word:
        nm = names[abs(a) - 1]
        parts.append(nm if a > 0 else nm[0].swapcase() + nm[1:])
    return "".join(parts) if all(len(n) == 1 for n in names) else " ".join(parts)


def commutator(u: Word, v: Word) -> Word:
    return free_reduce(u + v + invert(u) + invert(v))


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    label: str = ""

    @classmethod
    def build(cls, generators: Sequence[str], relators: Sequence, label: str = ""
              ) -> "GroupPresentation":
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise PresentationError("duplicate generator names")
        rels = []
        for r in relators:
            w = parse_word(r, gens) if isinstance(r, str) else free_reduce(r)
            if any(abs(a) > len(gens) for a in w):
                raise PresentationError(f"relator {r!r} uses an unknown generator")
            rels.append(w)
        return cls(gens, tuple(rels), label)

    @classmethod
    def from_json(cls, data: Mapping) -> "GroupPresentation":
        try:
            return cls.build(data["generators"], data.get("relators", []), data.get("label", ""))
        except KeyError as exc:
            raise PresentationError(f"presentation is missing {exc}") from None

    def to_json(self) -> dict:
        d = {"generators": list(self.generators),
             "relators": [format_word(r, self.generators) for r in self.relators]}
        if self.label:
            d["label"] = self.label
        return d

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def exponent_matrix(self) -> list[list[int]]:
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for a in r:
                row[abs(a) - 1] += 1 if a > 0 else -1
            rows.append(row)
        return rows

    @cached_property
    def abelianization(self) -> "AbelianizationData":
        return abelianize(self)


# -- Fox calculus in the free group ring -------------------------------------------


def fox_derivative(word: Sequence[int], j: int) -> dict[Word, int]:
    """∂w/∂x_j in Z[F] as {reduced word: coefficient} (j is 0-based)."""
    out: dict[Word, int] = {}
    prefix: list[int] = []
    for a in word:
        if abs(a) == j + 1:
            if a > 0:
                key = free_reduce(prefix)
                out[key] = out.get(key, 0) + 1
            else:
                key = free_reduce(prefix + [a])
                out[key] = out.get(key, 0) - 1
        prefix.append(a)
    return {k: v for k, v in out.items() if v}


def group_ring_mul(a: Mapping[Word, int], b: Mapping[Word, int]) -> dict[Word, int]:
    out: dict[Word, int] = {}
    for u, c in a.items():
        for v, d in b.items():
            k = free_reduce(u + v)
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


def group_ring_add(a: Mapping[Word, int], b: Mapping[Word, int], sign: int = 1) -> dict[Word, int]:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


# -- Smith normal form -------------------------------------------------------------


@dataclass
class SmithForm:
    """U·A·V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...."""

    U: list[list[int]]
    V: list[list[int]]
    D: list[list[int]]
    diagonal: list[int]

    def verify(self, a: Sequence[Sequence[int]]) -> bool:
        uav = _imatmul(_imatmul(self.U, a), self.V)
        if uav != self.D:
            return False
        if abs(_idet(self.U)) != 1 or abs(_idet(self.V)) != 1:
            return False
        nz = [d for d in self.diagonal if d]
        return all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _imatmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def _idet(m) -> int:
    n = len(m)
    a = [[Fraction(x) for x in r] for r in m]
    d = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return int(d)


def smith_normal_form(a: Sequence[Sequence[int]], ncols: int | None = None) -> SmithForm:
    rows = len(a)
    cols = len(a[0]) if a else (ncols or 0)
    m = [list(map(int, r)) for r in a]
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, f):  # row dst += f * row src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for r in m:
            r[dst] += f * r[src]
        for r in v:
            r[dst] += f * r[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if m[i][j] % m[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if m[t][t] < 0:
            m[t] = [-x for x in m[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diag = [m[i][i] for i in range(min(rows, cols))]
    return SmithForm(u, v, m, diag)


def _column_hermite(basis: list[list[int]], m: int) -> list[list[int]]:
    """Column-echelon Z-basis of the lattice spanned by the given vectors in Z^m."""
    vecs = [list(b) for b in basis]
    out = []
    row = 0
    while vecs and row < m:
        live = [b for b in vecs if b[row]]
        dead = [b for b in vecs if not b[row]]
        if not live:
            row += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda b: abs(b[row]))
            piv = live[0]
            nxt = [piv]
            for b in live[1:]:
                q = b[row] // piv[row]
                r = [x - q * y for x, y in zip(b, piv)]
                (nxt if r[row] else dead).append(r)
            live = nxt
        piv = live[0]
        if piv[row] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        vecs = [b for b in dead if any(b)]
        row += 1
    # reduce entries above the pivots
    for k, piv in enumerate(out):
        prow = next(i for i, x in enumerate(piv) if x)
        for l in range(k):
            q = out[l][prow] // piv[prow]
            if q:
                out[l] = [x - q * y for x, y in zip(out[l], piv)]
    return out


@dataclass
class AbelianizationData:
    free_rank: int
    torsion: tuple[int, ...]
    free_projection: list[list[int]]  # m x n: generator j -> row j
    torsion_projection: list[list[int]]  # m x len(torsion), entries mod the orders
    smith: SmithForm

    def image(self, word: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        free = [0] * self.free_rank
        tors = [0] * len(self.torsion)
        for a in word:
            s = 1 if a > 0 else -1
            j = abs(a) - 1
            for i in range(self.free_rank):
                free[i] += s * self.free_projection[j][i]
            for i in range(len(self.torsion)):
                tors[i] += s * self.torsion_projection[j][i]
        return tuple(free), tuple(t % d for t, d in zip(tors, self.torsion))

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion),
                "free_projection": self.free_projection,
                "torsion_projection": self.torsion_projection}


def abelianize(p: GroupPresentation) -> AbelianizationData:
    m = p.ngens
    a = p.exponent_matrix()
    snf = smith_normal_form(a, m)
    if not snf.verify(a):
        raise ArithmeticError("Smith normal form certificate failed")
    diag = snf.diagonal
    r = sum(1 for d in diag if d)
    # kernel of the exponent matrix: the last m - r columns of V
    kernel = [[snf.V[i][j] for i in range(m)] for j in range(r, m)]
    basis = _column_hermite(kernel, m)
    n = len(basis)
    free = [[basis[k][j] for k in range(n)] for j in range(m)]
    tors_idx = [i for i in range(r) if diag[i] > 1]
    torsion = tuple(diag[i] for i in tors_idx)
    tproj = [[snf.V[j][i] % diag[i] for i in tors_idx] for j in range(m)]
    return AbelianizationData(n, torsion, free, tproj, snf)


# -- Alexander matrices --------------------------------------------------------------


def character_order(character: Sequence[int], orders: Sequence[int]) -> int:
    out = 1
    for c, d in zip(character, orders):
        k = d // math.gcd(c % d, d)
        out = out * k // math.gcd(out, k)
    return out


def _scalar(character: Sequence[int], orders: Sequence[int], tors: Sequence[int], field: int):
    """ρ(torsion element) as an element of Q(ζ_field) (or ±1 as an int)."""
    if field <= 2:
        total = sum(Fraction(c * t, d) for c, t, d in zip(character, tors, orders))
        return 1 if total.denominator == 1 else -1
    power = 0
    for c, t, d in zip(character, tors, orders):
        power += c * t * (field // d)
    return Cyclotomic.zeta(field, power)


def alexander_matrix(p: GroupPresentation, character: Sequence[int] | None = None) -> PolyMatrix:
    """s x m matrix of abelianized Fox derivatives, optionally twisted by a torsion character."""
    ab = p.abelianization
    n = ab.free_rank
    names = t_names(n)
    orders = ab.torsion
    character = tuple(character) if character is not None else (0,) * len(orders)
    if len(character) != len(orders):
        raise ValueError(f"character needs {len(orders)} entries")
    fld = character_order(character, orders)
    if fld > 2:
        fld = reduce(lambda x, y: x * y // math.gcd(x, y), orders, 1)
    zero = LaurentPoly.zero(n, names)
    rows = []
    for r in p.relators:
        row = [zero] * p.ngens
        terms: list[dict] = [dict() for _ in range(p.ngens)]
        prefix: list[int] = []
        for a in r:
            j = abs(a) - 1
            if a > 0:
                key = ab.image(prefix)
                sign = 1
            else:
                key = ab.image(prefix + [a])
                sign = -1
            free, tors = key
            c = _scalar(character, orders, tors, fld) * sign
            terms[j][free] = terms[j].get(free, 0) + c
            prefix.append(a)
        for j in range(p.ngens):
            row[j] = LaurentPoly(terms[j], n, names)
        rows.append(row)
    mat = PolyMatrix(rows, n, names)
    mat.cols = p.ngens
    return mat


def fox_identity_holds(p: GroupPresentation) -> bool:
    """Σ_j (∂r/∂x_j)^ab (t(x_j) − 1) = 0 for every relator."""
    ab = p.abelianization
    mat = alexander_matrix(p)
    n = ab.free_rank
    for i in range(mat.rows):
        acc = LaurentPoly.zero(n)
        for j in range(p.ngens):
            xj = LaurentPoly.monomial(ab.image([j + 1])[0]) if n else LaurentPoly.const(1, 0)
            acc = acc + mat[i, j] * (xj - 1)
        if not acc.is_zero():
            return False
    return True


def elementary_ideal(p: GroupPresentation, k: int, character: Sequence[int] | None = None) -> Ideal:
    """E_k of the Alexander module (m generators, so E_k = I_{m−k})."""
    return fitting_ideal(alexander_matrix(p, character), k, p.ngens)


def alexander_polynomial(p: GroupPresentation, k: int = 0) -> LaurentPoly:
    """Δ^k = gcd of E_{k+1} over Q, unit-normalized (0 when E_{k+1} = 0).

    The integer content is dropped, so Δ is only defined up to rational scalars.
    """
    n = p.abelianization.free_rank
    ideal = elementary_ideal(p, k + 1)
    g = gcd_list(ideal.generators, n)
    if not g.is_zero():
        g = unit_normalize(primitive_over_z(g))
    return g.with_names(t_names(n))


def torsion_characters(p: GroupPresentation) -> list[tuple[int, ...]]:
    orders = p.abelianization.torsion
    return [c for c in product(*[range(d) for d in orders]) if any(c)]


def _locus(ideal: Ideal, n: int) -> VarietyDescription:
    gens = list(ideal.generators)
    if not gens:
        return VarietyDescription.full(TORUS, n)
    if all(_rational(g) for g in gens):
        return describe([_rationalize(g) for g in gens], n, TORUS)
    if any(g.is_monomial() for g in gens):
        return VarietyDescription.empty(TORUS, n)
    return VarietyDescription.of(TORUS, n, [ZeroSet(tuple(gens))])


def _rational(g: LaurentPoly) -> bool:
    return all(not isinstance(c, Cyclotomic) or c.is_rational() for c in g.terms.values())


def _rationalize(g: LaurentPoly) -> LaurentPoly:
    return g.map_coefficients(lambda c: c.c[0] if isinstance(c, Cyclotomic) and c.c else
                              (0 if isinstance(c, Cyclotomic) else c))


def char_variety_deg1(p: GroupPresentation, k: int = 1, torsion: bool = False
                      ) -> VarietyDescription:
    """V^1_k: V(E_k) on the identity component with {1} iff b_1 ≥ k.

    With ``torsion`` the loci on the other components of the character group
    are added as torsion-translated components.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    ab = p.abelianization
    n = ab.free_rank
    names = t_names(n)
    if k == 0:
        return VarietyDescription.full(TORUS, n, names)
    base = _locus(elementary_ideal(p, k), n)
    comps = [c for c in base.components if not isinstance(c, IdentityPoint)]
    if n >= k:
        comps.append(IdentityPoint())
    if torsion:
        for ch in torsion_characters(p):
            loc = _locus(elementary_ideal(p, k, ch), n)
            if not loc.is_empty():
                comps.append(TorsionTranslate(ch, ab.torsion, loc))
    return VarietyDescription.of(TORUS, n, comps, names)


def alexander_variety(p: GroupPresentation, k: int = 1) -> VarietyDescription:
    """Z^1_k: V(Δ^{k−1}) ∪ {1} on the identity component (as used for k = 1)."""
    n = p.abelianization.free_rank
    d = alexander_polynomial(p, k - 1)
    if d.is_zero():
        return VarietyDescription.full(TORUS, n, t_names(n))
    return describe([d], n, TORUS, t_names(n)).with_identity()


# -- McMullen-type containments --------------------------------------------------------


def _in_ideal(target: LaurentPoly, gens: Sequence[LaurentPoly], degree: int = 2) -> bool:
    """Certified membership of target in (gens) via a bounded Macaulay matrix.

    Searches for target = Σ q_i g_i with monomial multipliers of degree ≤ degree
    (after clearing denominators); True is a proof, False means no certificate.
    """
    if target.is_zero():
        return True
    gens = [g.clear_monomial() for g in gens if not g.is_zero()]
    if not gens:
        return False
    tgt = target.clear_monomial()
    n = target.nvars
    mults = [tuple(sum(1 for v in combo if v == i) for i in range(n))
             for d in range(degree + 1) for combo in combinations_with_replacement(range(n), d)]
    span = SparseSpan()
    for g in gens:
        for e in mults:
            span.add((g * LaurentPoly.monomial(e)).terms)
    for shift in mults:
        if (tgt * LaurentPoly.monomial(shift)).terms in span:
            return True
    return False


@dataclass
class McMullenReport:
    delta: LaurentPoly
    e1_in_delta_aug: bool | None
    aug_sq_delta_in_e1: bool | None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"delta": str(self.delta), "E1 ⊆ Δ·I": self.e1_in_delta_aug,
                "I²·Δ ⊆ E1": self.aug_sq_delta_in_e1, "notes": self.notes}


def mcmullen_check(p: GroupPresentation, degree: int = 2) -> McMullenReport:
    """Check E_1 ⊆ Δ·I and I²·(Δ) ⊆ E_1 (I the augmentation ideal)."""
    n = p.abelianization.free_rank
    e1 = elementary_ideal(p, 1)
    delta = alexander_polynomial(p, 0)
    notes = []
    if delta.is_zero():
        return McMullenReport(delta, e1.is_zero(), True, ["Δ = 0"])
    if n <= 1:
        notes.append("the comparison applies to b_1 ≥ 2")
        return McMullenReport(delta, None, None, notes)
    sub = True
    for g in e1.generators:
        q = poly_quotient(g.clear_monomial(), delta.clear_monomial())
        if q is None or q.at_one() != 0:
            sub = False
    ts = [LaurentPoly.var(i, n) for i in range(n)]
    sup = True
    for i in range(n):
        for j in range(i, n):
            target = (ts[i] - 1) * (ts[j] - 1) * delta
            if not _in_ideal(target, e1.generators, degree):
                sup = False
                notes.append(f"no bounded certificate for (t{i + 1}−1)(t{j + 1}−1)Δ ∈ E_1")
    return McMullenReport(delta, sub, sup, notes)


# -- Seifert fibered spaces --------------------------------------------------------------


def seifert_presentation(g: int, b: int, pairs: Sequence[tuple[int, int]] = ()
                         ) -> tuple[GroupPresentation, Fraction]:
    """Presentation with h central and the orbifold Euler number e = −(b + Σ β/α)."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    for a, bb in pairs:
        if a < 2 or math.gcd(a, bb) != 1:
            raise ValueError(f"invalid Seifert pair ({a}, {bb})")
    names = [v for i in range(1, g + 1) for v in (f"x{i}", f"y{i}")]
    names += [f"z{i}" for i in range(1, len(pairs) + 1)] + ["h"]
    idx = {nm: k + 1 for k, nm in enumerate(names)}
    h = idx["h"]
    rels: list[Word] = []
    for nm in names[:-1]:
        rels.append(commutator((idx[nm],), (h,)))
    long: list[int] = []
    for i in range(1, g + 1):
        long += list(commutator((idx[f"x{i}"],), (idx[f"y{i}"],)))
    long += [idx[f"z{i}"] for i in range(1, len(pairs) + 1)]
    long += [-h] * b if b >= 0 else [h] * (-b)
    rels.append(free_reduce(long))
    for i, (a, bb) in enumerate(pairs, start=1):
        z = idx[f"z{i}"]
        rels.append(free_reduce([z] * a + ([h] * bb if bb >= 0 else [-h] * (-bb))))
    e = -(Fraction(b) + sum((Fraction(bb, a) for a, bb in pairs), Fraction(0)))
    label = f"Seifert(g={g}, b={b}, {list(pairs)})"
    return GroupPresentation(tuple(names), tuple(rels), label), e


__all__ = [
    "GroupPresentation", "PresentationError", "AbelianizationData", "SmithForm",
    "parse_word", "format_word", "free_reduce", "invert", "commutator", "fox_derivative",
    "group_ring_mul", "group_ring_add", "smith_normal_form", "abelianize", "alexander_matrix",
    "fox_identity_holds", "elementary_ideal", "alexander_polynomial", "char_variety_deg1",
    "alexander_variety", "torsion_characters", "character_order", "mcmullen_check",
    "McMullenReport", "seifert_presentation",
]
