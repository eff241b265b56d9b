"""Exact construction of the deformative Schroedinger-Virasoro Lie algebras.

The family is indexed by a sector s in {0, 1/2} and a rational deformation
parameter lam, with an optional central charge generator c.  The basis
consists of Virasoro generators L_n, current generators M_n, half-shifted
generators Y_{s+n} and (optionally) c.  All degrees are stored doubled, so
the integer grading (s = 0) and the half-integer grading (s = 1/2) share
one integer representation.

Every coefficient is an exact ``fractions.Fraction``; all values here are
immutable after construction and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Union

__all__ = [
    "AlgebraParams",
    "BasisIndex",
    "Element",
    "InvalidIndexError",
    "JacobiReport",
    "Window",
    "C",
    "L",
    "M",
    "Y",
    "bracket",
    "bracket_basis",
    "center_in_window",
    "check_jacobi",
    "degree_of",
    "rat",
]

Rational = Union[int, str, Fraction]

HALF = Fraction(1, 2)


def rat(x: Rational) -> Fraction:
    """Coerce an int, a string like '-5/3' or a Fraction to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact rational: {x!r}")


class InvalidIndexError(ValueError):
    """A basis index is malformed or violates the Y-parity rule for s."""


class BasisIndex(NamedTuple):
    """A generator tag with a doubled degree.

    kind is one of 'L', 'M', 'Y', 'c'.  The actual degree is dd/2.  Tuple
    ordering gives the canonical order: kind L < M < Y < c, then degree.
    """

    kind: str
    dd: int

    @property
    def degree(self) -> Fraction:
        return Fraction(self.dd, 2)

    def label(self) -> str:
        if self.kind == "c":
            return "c"
        if self.dd % 2 == 0:
            return f"{self.kind}[{self.dd // 2}]"
        return f"{self.kind}[{self.dd}/2]"

    def __str__(self) -> str:  # pragma: no cover - repr helper
        return self.label()


def L(n: int) -> BasisIndex:
    return BasisIndex("L", 2 * n)


def M(n: int) -> BasisIndex:
    return BasisIndex("M", 2 * n)


def Y(q: Rational) -> BasisIndex:
    """Y generator of degree q; q may be an integer or a half-integer."""
    q = rat(q) if not isinstance(q, Fraction) else q
    dd = q * 2
    if dd.denominator != 1:
        raise InvalidIndexError(f"Y degree must be integer or half-integer: {q}")
    return BasisIndex("Y", int(dd))


C = BasisIndex("c", 0)

_KINDS = ("L", "M", "Y", "c")


def check_index(idx: BasisIndex, s2: Optional[int] = None) -> None:
    """Validate an index; with s2 = 2s given, also check the Y parity."""
    if idx.kind not in _KINDS:
        raise InvalidIndexError(f"unknown generator kind {idx.kind!r}")
    if idx.kind in ("L", "M") and idx.dd % 2 != 0:
        raise InvalidIndexError(f"{idx.kind} index must have integer degree: {idx}")
    if idx.kind == "c" and idx.dd != 0:
        raise InvalidIndexError("c carries degree 0 only")
    if s2 is not None and idx.kind == "Y" and idx.dd % 2 != s2 % 2:
        raise InvalidIndexError(
            f"Y index {idx.label()} has the wrong parity for s={Fraction(s2, 2)}"
        )


@dataclass(frozen=True)
class AlgebraParams:
    """Selects one algebra of the family: the pair (s, lam) plus the
    central switch (when False, c is set to zero and dropped everywhere)."""

    s: Fraction
    lam: Fraction
    central: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", rat(self.s))
        object.__setattr__(self, "lam", rat(self.lam))
        if self.s not in (Fraction(0), HALF):
            raise ValueError(f"s must be 0 or 1/2, got {self.s}")

    @property
    def s2(self) -> int:
        """2s as an int; the Y parity class of doubled degrees."""
        return int(self.s * 2)

    def describe(self) -> str:
        c = "central" if self.central else "centerless"
        return f"s={self.s}, lambda={self.lam}, {c}"


class Element:
    """A finitely supported exact-rational vector over basis indices.

    Canonical form: no stored coefficient is zero, so equality is plain
    coefficient comparison.  Treated as immutable after construction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[dict] = None) -> None:
        clean: dict[BasisIndex, Fraction] = {}
        if terms:
            for idx, coeff in terms.items():
                coeff = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
                if coeff:
                    clean[idx] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def basis(cls, idx: BasisIndex) -> "Element":
        return cls({idx: Fraction(1)})

    def coeff(self, idx: BasisIndex) -> Fraction:
        return self.terms.get(idx, Fraction(0))

    def items(self) -> Iterator[tuple[BasisIndex, Fraction]]:
        return iter(self.terms.items())

    def support(self) -> list[BasisIndex]:
        return sorted(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Element") -> "Element":
        out = dict(self.terms)
        for idx, coeff in other.terms.items():
            new = out.get(idx, 0) + coeff
            if new:
                out[idx] = new
            else:
                out.pop(idx, None)
        return Element(out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element({idx: -coeff for idx, coeff in self.terms.items()})

    def scaled(self, factor: Rational) -> "Element":
        factor = rat(factor)
        if not factor:
            return Element()
        return Element({idx: coeff * factor for idx, coeff in self.terms.items()})

    def __mul__(self, factor: Rational) -> "Element":
        return self.scaled(factor)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_terms(sorted(self.terms.items()), tensor=False)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Element({self})"


def format_coeff(coeff: Fraction) -> str:
    return str(coeff)


def format_terms(items, tensor: bool) -> str:
    """Shared canonical printer for element and tensor literals.

    Elements print as ``-4*L[0] - 1/2*c`` (no spaces around ``*``, unit
    coefficients elided); tensor terms keep an explicit coefficient with
    spaces, e.g. ``1 * L[0] (x) L[1]``.
    """
    if not items:
        return "0"
    parts: list[str] = []
    for key, coeff in items:
        if tensor:
            gens = " (x) ".join(idx.label() for idx in key)
            body = f"{format_coeff(abs(coeff))} * {gens}"
        else:
            mag = abs(coeff)
            body = key.label() if mag == 1 else f"{format_coeff(mag)}*{key.label()}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# The bracket
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bracket_basis(
    a: BasisIndex, b: BasisIndex, p: AlgebraParams
) -> tuple[tuple[BasisIndex, Fraction], ...]:
    """Bracket of two basis generators as a tuple of (index, coefficient).

    The table is total: generator pairs without a listed product return
    the empty tuple rather than raising.  Only the stated products are
    non-vanishing:

        [L_n, L_m]     = (m - n) L_{m+n} + (m^3 - m)/12 delta_{m+n,0} c
        [L_n, M_m]     = (m - lam*n) M_{m+n}
        [L_n, Y_q]     = (q - (lam+1)/2 * n) Y_{q+n}
        [Y_q, Y_r]     = (r - q) M_{q+r}   (index sum lands on an M degree)

    plus the antisymmetric flips; anything involving c is zero.  When
    central is off the c coefficient is dropped.
    """
    check_index(a, p.s2)
    check_index(b, p.s2)
    if a.kind == "c" or b.kind == "c":
        return ()
    sign = 1
    if (a.kind, b.kind) in (("M", "L"), ("Y", "L")):
        a, b, sign = b, a, -1
    ka, kb = a.kind, b.kind
    out: list[tuple[BasisIndex, Fraction]] = []
    if ka == "L" and kb == "L":
        n, m = a.dd // 2, b.dd // 2
        coeff = Fraction(m - n)
        if coeff:
            out.append((BasisIndex("L", a.dd + b.dd), sign * coeff))
        if p.central and m + n == 0:
            cc = Fraction(m**3 - m, 12)
            if cc:
                out.append((C, sign * cc))
    elif ka == "L" and kb == "M":
        n, m = a.dd // 2, b.dd // 2
        coeff = m - p.lam * n
        if coeff:
            out.append((BasisIndex("M", a.dd + b.dd), sign * coeff))
    elif ka == "L" and kb == "Y":
        n = a.dd // 2
        coeff = Fraction(b.dd, 2) - (p.lam + 1) / 2 * n
        if coeff:
            out.append((BasisIndex("Y", a.dd + b.dd), sign * coeff))
    elif ka == "Y" and kb == "Y":
        coeff = Fraction(b.dd - a.dd, 2)
        if coeff:
            out.append((BasisIndex("M", a.dd + b.dd), sign * coeff))
    return tuple(out)


def bracket(x: Element, y: Element, p: AlgebraParams) -> Element:
    """Bilinear extension of the generator bracket table."""
    out: dict[BasisIndex, Fraction] = {}
    for ia, ca in x.terms.items():
        for ib, cb in y.terms.items():
            scale = ca * cb
            for idx, coeff in bracket_basis(ia, ib, p):
                new = out.get(idx, 0) + scale * coeff
                if new:
                    out[idx] = new
                else:
                    out.pop(idx, None)
    return Element(out)


def degree_of(x: Element) -> Union[Fraction, str]:
    """Common degree of a homogeneous element.

    Returns the Fraction degree, the marker 'inhomogeneous' for mixed
    support, or 'any' for the zero element.
    """
    degrees = {idx.dd for idx in x.terms}
    if not degrees:
        return "any"
    if len(degrees) > 1:
        return "inhomogeneous"
    return Fraction(degrees.pop(), 2)


# ---------------------------------------------------------------------------
# Degree windows
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Window:
    """A symmetric-ish doubled-degree interval [lo, hi] with lo <= 0 <= hi.

    Every finite computation is bounded by such a window; an index is in
    the window iff lo <= dd <= hi.
    """

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if not (self.lo <= 0 <= self.hi):
            raise ValueError(f"window must contain 0: [{self.lo}, {self.hi}]")

    @classmethod
    def symmetric(cls, bound: int) -> "Window":
        return cls(-bound, bound)

    def contains_dd(self, dd: int) -> bool:
        return self.lo <= dd <= self.hi

    def contains(self, idx: BasisIndex) -> bool:
        return self.lo <= idx.dd <= self.hi

    def interior(self) -> "Window":
        """The inner half-window, bounds halved toward zero."""
        return Window(-((-self.lo) // 2), self.hi // 2)

    def indices_at(self, dd: int, p: AlgebraParams) -> list[BasisIndex]:
        """All basis indices of doubled degree dd inside the window."""
        if not self.contains_dd(dd):
            return []
        out = []
        if dd % 2 == 0:
            out.append(BasisIndex("L", dd))
            out.append(BasisIndex("M", dd))
        if dd % 2 == p.s2 % 2:
            out.append(BasisIndex("Y", dd))
        if dd == 0 and p.central:
            out.append(C)
        return sorted(out)

    def basis_indices(self, p: AlgebraParams) -> list[BasisIndex]:
        """All window generators, in canonical order."""
        out = []
        for dd in range(self.lo, self.hi + 1):
            out.extend(self.indices_at(dd, p))
        return sorted(out)


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------

@dataclass
class JacobiReport:
    params: AlgebraParams
    window: Window
    checked: int
    failures: list  # (x, y, z, residual Element)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_jacobi(p: AlgebraParams, w: Window, bracket_fn=None) -> JacobiReport:
    """Exact Jacobi check over all in-window generator triples.

    A triple is checked when all pairwise sums and the triple sum of
    doubled degrees stay in the window, so every intermediate product is
    representable.  bracket_fn may replace the bracket (the negative
    controls in the test suite corrupt it deliberately).
    """
    brk = bracket_fn or (lambda x, y: bracket(x, y, p))
    gens = w.basis_indices(p)
    checked = 0
    failures = []
    for i, gx in enumerate(gens):
        ex = Element.basis(gx)
        for j in range(i + 1, len(gens)):
            gy = gens[j]
            if not w.contains_dd(gx.dd + gy.dd):
                continue
            ey = Element.basis(gy)
            for k in range(j + 1, len(gens)):
                gz = gens[k]
                if not (
                    w.contains_dd(gy.dd + gz.dd)
                    and w.contains_dd(gx.dd + gz.dd)
                    and w.contains_dd(gx.dd + gy.dd + gz.dd)
                ):
                    continue
                ez = Element.basis(gz)
                res = (
                    brk(brk(ex, ey), ez)
                    + brk(brk(ey, ez), ex)
                    + brk(brk(ez, ex), ey)
                )
                checked += 1
                if res:
                    failures.append((gx, gy, gz, res))
    return JacobiReport(p, w, checked, failures)


def center_in_window(p: AlgebraParams, w: Window) -> list[Element]:
    """Basis of the window-supported vectors killed by every in-window
    generator.  Products are evaluated exactly wherever they land, so no
    spurious boundary survivors appear."""
    from . import linalg

    indices = w.basis_indices(p)
    pos = {idx: i for i, idx in enumerate(indices)}
    ech = linalg.RowEchelon()
    # Row space of the adjoint-action constraints; kernel = window center.
    gens = indices
    rows: dict[tuple[BasisIndex, BasisIndex], dict[int, Fraction]] = {}
    for g in gens:
        for v in indices:
            for idx, coeff in bracket_basis(g, v, p):
                cell = rows.setdefault((g, idx), {})
                cell[pos[v]] = cell.get(pos[v], Fraction(0)) + coeff
    for key in sorted(rows):
        ech.insert(linalg.int_row(rows[key]))
    basis = []
    for vec in ech.kernel_basis(len(indices)):
        basis.append(Element({indices[i]: c for i, c in vec.items()}))
    return basis
