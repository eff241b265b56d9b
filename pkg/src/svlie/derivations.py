"""Derivations of the algebra with values in itself or its tensor square.

A derivation is stored extensionally: a table of values at every window
generator.  Closed-form rules exist only inside the named constructors,
which cover the known degree-zero families for each deformation case.
Verification, inner derivations and the homogeneous degree decomposition
are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from .algebra import (
    AlgebraParams,
    BasisIndex,
    Element,
    Window,
    bracket,
    bracket_basis,
    center_in_window,
    rat,
)
from .tensors import Tensor2, diag_action

__all__ = [
    "CatalogCaseError",
    "DeferredCaseError",
    "DerivationReport",
    "DerivationTable",
    "case_label",
    "catalog",
    "catalog_basis",
    "homogeneous_component",
    "inner",
    "is_derivation",
    "table_from_json",
    "table_to_json",
]

ALGEBRA = "algebra"
TENSOR = "tensor-square"

Value = Union[Element, Tensor2]


class CatalogCaseError(ValueError):
    """Requested constructors do not exist for the given case row."""


class DeferredCaseError(CatalogCaseError):
    """The case row is known but handled elsewhere; no constructors here."""


def _zero(target: str) -> Value:
    return Element.zero() if target == ALGEBRA else Tensor2.zero()


@dataclass
class DerivationTable:
    """A degree-homogeneous linear rule on a window of generators.

    values maps in-window generators to elements (algebra target) or
    two-tensors (tensor-square target); absent entries mean zero.  degree
    may be None for raw rules that have not been decomposed yet.
    """

    target: str
    degree: Optional[Fraction]
    window: Window
    values: dict[BasisIndex, Value] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self) -> None:
        if self.target not in (ALGEBRA, TENSOR):
            raise ValueError(f"unknown target {self.target!r}")
        self.values = {g: v for g, v in self.values.items() if v}

    def value(self, g: BasisIndex) -> Value:
        return self.values.get(g, _zero(self.target))

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "DerivationTable") -> "DerivationTable":
        if (self.target, self.window) != (other.target, other.window):
            raise ValueError("tables live on different targets or windows")
        degree = self.degree if self.degree == other.degree else None
        vals = dict(self.values)
        for g, v in other.values.items():
            vals[g] = vals[g] + v if g in vals else v
        return DerivationTable(self.target, degree, self.window, vals)

    def scaled(self, factor) -> "DerivationTable":
        factor = rat(factor)
        return DerivationTable(
            self.target,
            self.degree,
            self.window,
            {g: v.scaled(factor) for g, v in self.values.items()},
            self.name,
        )

    def check_homogeneous(self) -> None:
        """Raise unless every value sits in degree (deg g + degree)."""
        if self.degree is None:
            raise ValueError("table has no declared degree")
        shift = int(self.degree * 2)
        for g, val in self.values.items():
            keys = val.terms.keys()
            for key in keys:
                dd = key.dd if isinstance(key, BasisIndex) else sum(i.dd for i in key)
                if dd != g.dd + shift:
                    raise ValueError(
                        f"value at {g.label()} leaves degree {g.degree + self.degree}"
                    )


@dataclass
class DerivationReport:
    table: DerivationTable
    params: AlgebraParams
    checked: int
    skipped: int
    violations: list  # (g, h, lhs, rhs)

    @property
    def ok(self) -> bool:
        return not self.violations

    def witness(self):
        return self.violations[0] if self.violations else None


def _act(g: BasisIndex, val: Value, p: AlgebraParams) -> Value:
    if isinstance(val, Tensor2):
        return diag_action(Element.basis(g), val, p)
    return bracket(Element.basis(g), val, p)


def _support_in_window(val: Value, w: Window) -> bool:
    for key in val.terms:
        if isinstance(key, BasisIndex):
            if not w.contains(key):
                return False
        else:
            if not all(w.contains(i) for i in key):
                return False
    return True


def is_derivation(D: DerivationTable, p: AlgebraParams) -> DerivationReport:
    """Check the derivation identity on every admissible generator pair.

    A pair (g, h) is admissible when the bracket components stay in the
    window and both action results are window-supported; boundary pairs
    are skipped, never guessed.
    """
    w = D.window
    gens = w.basis_indices(p)
    checked = skipped = 0
    violations = []
    for i, g in enumerate(gens):
        for j in range(i + 1, len(gens)):
            h = gens[j]
            br = bracket_basis(g, h, p)
            if any(not w.contains(e) for e, _ in br):
                skipped += 1
                continue
            rhs_g = _act(g, D.value(h), p)
            rhs_h = _act(h, D.value(g), p)
            if not (_support_in_window(rhs_g, w) and _support_in_window(rhs_h, w)):
                skipped += 1
                continue
            lhs = _zero(D.target)
            for e, coeff in br:
                lhs = lhs + D.value(e).scaled(coeff)
            rhs = rhs_g - rhs_h
            checked += 1
            if lhs != rhs:
                violations.append((g, h, lhs, rhs))
    return DerivationReport(D, p, checked, skipped, violations)


def inner(v: Value, p: AlgebraParams, w: Window) -> DerivationTable:
    """The inner derivation g -> g . v for a homogeneous v."""
    if isinstance(v, Tensor2):
        target = TENSOR
        degrees = {i.dd + j.dd for (i, j) in v.terms}
    else:
        target = ALGEBRA
        degrees = {i.dd for i in v.terms}
    if len(degrees) > 1:
        raise ValueError("inner derivation needs a homogeneous element")
    shift = degrees.pop() if degrees else 0
    values = {}
    for g in w.basis_indices(p):
        val = _act(g, v, p)
        if val:
            values[g] = val
    return DerivationTable(target, Fraction(shift, 2), w, values, name="inner")


# ---------------------------------------------------------------------------
# Named degree-zero constructors
# ---------------------------------------------------------------------------
#
# Each case row of the family carries a small basis of outer degree-zero
# derivations, written here by what the rule does:
#
#   ideal_scale       M_n -> 2 M_n,  Y_q -> Y_q
#   l_to_m_<weight>   L_n -> weight(n) M_n
#   y_to_m_<weight>   Y_n -> weight(n) M_n   (integer sector only)
#
# Tensor-square versions put a window-central leg on either side of the
# same values; their span is what the degree-zero tensor cohomology
# reproduces.

def _w_one(n: int) -> Fraction:
    return Fraction(1)


def _w_n(n: int) -> Fraction:
    return Fraction(n)


def _w_n2(n: int) -> Fraction:
    return Fraction(n * n)


def _w_n3(n: int) -> Fraction:
    return Fraction(n**3)


def _w_n2_minus_n(n: int) -> Fraction:
    return Fraction(n * n - n)


@dataclass(frozen=True)
class _Member:
    name: str
    source: str  # 'L', 'Y' or 'ideal'
    weight: Callable[[int], Fraction]

    def element_value(self, g: BasisIndex) -> Element:
        if self.source == "ideal":
            if g.kind == "M":
                return Element({g: Fraction(2)})
            if g.kind == "Y":
                return Element.basis(g)
            return Element.zero()
        if self.source == "L" and g.kind == "L":
            coeff = self.weight(g.dd // 2)
            return Element({BasisIndex("M", g.dd): coeff})
        if self.source == "Y" and g.kind == "Y":
            # integer sector only; Y and M then share doubled degrees
            coeff = self.weight(g.dd // 2)
            return Element({BasisIndex("M", g.dd): coeff})
        return Element.zero()


_IDEAL_SCALE = _Member("ideal_scale", "ideal", _w_one)

_CASE_MEMBERS: dict[tuple[int, object], list[_Member]] = {
    # s = 1/2 rows, keyed by the deformation parameter
    (1, Fraction(0)): [
        _IDEAL_SCALE,
        _Member("l_to_m_1", "L", _w_one),
        _Member("l_to_m_n", "L", _w_n),
    ],
    (1, Fraction(-1)): [_IDEAL_SCALE, _Member("l_to_m_n2_minus_n", "L", _w_n2_minus_n)],
    (1, Fraction(-2)): [_IDEAL_SCALE, _Member("l_to_m_n3", "L", _w_n3)],
    (1, "generic"): [_IDEAL_SCALE],
    # s = 0 rows
    (0, Fraction(0)): [
        _IDEAL_SCALE,
        _Member("l_to_m_1", "L", _w_one),
        _Member("l_to_m_n", "L", _w_n),
    ],
    (0, Fraction(-1)): [
        _IDEAL_SCALE,
        _Member("l_to_m_n2", "L", _w_n2),
        _Member("y_to_m_n", "Y", _w_n),
    ],
    (0, Fraction(-2)): [_IDEAL_SCALE, _Member("l_to_m_n3", "L", _w_n3)],
    (0, Fraction(1)): [_IDEAL_SCALE, _Member("y_to_m_1", "Y", _w_one)],
    (0, "generic"): [_IDEAL_SCALE],
}

_SPECIAL = {0: {Fraction(0), Fraction(1), Fraction(-1), Fraction(-2), Fraction(-3)},
            1: {Fraction(0), Fraction(-1), Fraction(-2)}}


def case_label(p: AlgebraParams) -> object:
    """The case row key for (s, lam): the special value or 'generic'."""
    return p.lam if p.lam in _SPECIAL[p.s2] else "generic"


def _case_members(p: AlgebraParams, target: str) -> list[_Member]:
    key = (p.s2, case_label(p))
    if key == (0, Fraction(-3)):
        raise DeferredCaseError(
            "the integer sector at deformation -3 is a deferred case"
        )
    if target == TENSOR and key == (1, Fraction(0)):
        raise DeferredCaseError(
            "tensor-square constructors at s=1/2, lambda=0 are a deferred case"
        )
    return _CASE_MEMBERS[key]


def _algebra_table(member: _Member, w: Window, p: AlgebraParams) -> dict[BasisIndex, Element]:
    values = {}
    for g in w.basis_indices(p):
        val = member.element_value(g)
        if val:
            values[g] = val
    return values


def _tensorize(values: Mapping[BasisIndex, Element], leg: Element, side: str) -> dict:
    out = {}
    for g, val in values.items():
        terms = {}
        for idx, coeff in val.terms.items():
            for z, cz in leg.terms.items():
                key = (z, idx) if side == "left" else (idx, z)
                terms[key] = terms.get(key, Fraction(0)) + coeff * cz
        t = Tensor2(terms)
        if t:
            out[g] = t
    return out


def _tensor_family(members: list[_Member], p: AlgebraParams, w: Window) -> list[DerivationTable]:
    legs = center_in_window(p, w)
    tables = []
    for member in members:
        base = _algebra_table(member, w, p)
        for side in ("left", "right"):
            for leg in legs:
                vals = _tensorize(base, leg, side)
                tables.append(
                    DerivationTable(TENSOR, Fraction(0), w, vals,
                                    name=f"{member.name}|{side}|{leg}")
                )
    return tables


def catalog_basis(p: AlgebraParams, target: str, w: Window) -> list[DerivationTable]:
    """The full unit-parameter family for the case row of p.

    Algebra target: one table per member.  Tensor target: one table per
    (member, side, window-central leg); the length of this list is the
    machine-derived parameter count used as the dimension oracle.
    """
    members = _case_members(p, target)
    if target == ALGEBRA:
        return [
            DerivationTable(ALGEBRA, Fraction(0), w, _algebra_table(member, w, p),
                            name=member.name)
            for member in members
        ]
    return _tensor_family(members, p, w)


def tensorized_algebra_family(p: AlgebraParams, w: Window) -> list[DerivationTable]:
    """Center-legged tensor versions of the algebra-target family.

    Unlike the tensor catalog this skips the deferred-case gate; the
    center-tensor identity check compares against exactly this span.
    """
    return _tensor_family(_case_members(p, ALGEBRA), p, w)


def catalog(
    p: AlgebraParams,
    target: str,
    w: Window,
    params: Optional[Mapping[str, object]] = None,
) -> list[DerivationTable]:
    """Named constructors for the case row selected by p.

    With params=None, emit the unit basis family.  Otherwise params maps
    member names (algebra target) to rational coefficients, or keys
    '<member>_left'/'<member>_right' (tensor target) to central Elements
    that fold the scalar and the center leg together.  Unknown keys raise
    CatalogCaseError, so requesting a constructor under the wrong
    deformation parameter fails loudly.
    """
    if params is None:
        return catalog_basis(p, target, w)
    members = {m.name: m for m in _case_members(p, target)}
    if target == ALGEBRA:
        allowed = set(members)
    else:
        allowed = {f"{n}_{side}" for n in members for side in ("left", "right")}
    unknown = sorted(set(params) - allowed)
    if unknown:
        raise CatalogCaseError(
            f"no constructor {unknown[0]!r} for the case {p.describe()}; "
            f"allowed: {sorted(allowed)}"
        )
    combined: Optional[DerivationTable] = None
    for key, value in sorted(params.items()):
        if target == ALGEBRA:
            member = members[key]
            piece = DerivationTable(
                ALGEBRA, Fraction(0), w, _algebra_table(member, w, p), name=key
            ).scaled(rat(value))
        else:
            name, side = key.rsplit("_", 1)
            if not isinstance(value, Element):
                raise CatalogCaseError(f"{key} takes a central Element leg")
            base = _algebra_table(members[name], w, p)
            piece = DerivationTable(
                TENSOR, Fraction(0), w, _tensorize(base, value, side), name=key
            )
        combined = piece if combined is None else combined + piece
    assert combined is not None
    combined.name = "+".join(sorted(params))
    return [combined]


def homogeneous_component(D: DerivationTable, alpha: Fraction) -> DerivationTable:
    """Extract the degree-alpha part of each value of a raw rule."""
    alpha = rat(alpha)
    shift = alpha * 2
    values = {}
    for g, val in D.values.items():
        want = g.dd + shift
        kept = {}
        for key, coeff in val.terms.items():
            dd = key.dd if isinstance(key, BasisIndex) else sum(i.dd for i in key)
            if dd == want:
                kept[key] = coeff
        if kept:
            values[g] = type(val)(kept)
    return DerivationTable(D.target, alpha, D.window, values, name=D.name)


def support_degrees(D: DerivationTable) -> set[Fraction]:
    """All degree shifts present in a raw rule's values."""
    out = set()
    for g, val in D.values.items():
        for key in val.terms:
            dd = key.dd if isinstance(key, BasisIndex) else sum(i.dd for i in key)
            out.add(Fraction(dd - g.dd, 2))
    return out


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def table_to_json(D: DerivationTable) -> str:
    payload = {
        "target": D.target,
        "degree": None if D.degree is None else str(D.degree),
        "window": [D.window.lo, D.window.hi],
        "values": [
            {"gen": g.label(), "value": str(D.value(g))}
            for g in sorted(D.values)
        ],
    }
    if D.name:
        payload["name"] = D.name
    return json.dumps(payload, indent=2)


def table_from_json(text: str) -> DerivationTable:
    from .literals import parse_element, parse_tensor2

    payload = json.loads(text)
    target = payload["target"]
    degree = None if payload.get("degree") is None else rat(payload["degree"])
    lo, hi = payload["window"]
    window = Window(lo, hi)
    values = {}
    for entry in payload["values"]:
        gen = parse_element(entry["gen"])
        (g,) = gen.support()
        if target == ALGEBRA:
            values[g] = parse_element(entry["value"])
        else:
            values[g] = parse_tensor2(entry["value"])
    return DerivationTable(target, degree, window, values, payload.get("name", ""))
