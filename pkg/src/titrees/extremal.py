"""Dispatchers for the maximum-Wiener TI tree of a given order.

Given an order n, decide which construction applies (keyed on
perfect-square membership of a handful of expressions in n), build it,
and attach a machine-checked certificate: the dispatcher always
recomputes direct transmissions of the built tree and verifies the TI
property, the predicted Wiener value, and (where a spectrum generator
exists) the offset multiset.  It never trusts the closed forms alone.

Verdicts:

* ``solved``      - a unique extremal tree is constructed and certified;
* ``no-ti-tree``  - no TI tree of that order exists at all;
* ``unresolved``  - the order falls in the known-open regime
  (even n >= 30 with 4n-7 a perfect square, or with 4n-15 and 4n-7 both
  non-square and 8n-15 a perfect square).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import families, formulas
from .errors import (
    DichotomyViolated,
    NotTI,
    ParityError,
    PreconditionFailed,
    TitreesError,
    VerificationFailed,
)
from .families import FamilySpec, Starlike, VariantCaterpillar
from .formulas import SpectrumOffsets, integer_sqrt, is_perfect_square, squares_among
from .tree import Tree, transmissions_linear


@dataclass(frozen=True)
class ExtremalOutcome:
    order: int
    verdict: str  # "solved" | "no-ti-tree" | "unresolved"
    case_label: Optional[str] = None
    reason: Optional[str] = None
    spec: Optional[FamilySpec] = None
    predicted_wiener: Optional[int] = None
    direct_wiener: Optional[int] = None
    is_ti: Optional[bool] = None
    certificate: Optional[SpectrumOffsets] = None

    def to_json_dict(self) -> dict:
        out = {"order": self.order, "verdict": self.verdict}
        if self.case_label is not None:
            out["case"] = self.case_label
        if self.reason is not None:
            out["reason"] = self.reason
        if self.spec is not None:
            out["spec"] = families.format_spec(self.spec)
            out["predicted_wiener"] = self.predicted_wiener
            out["direct_wiener"] = self.direct_wiener
            out["ti"] = self.is_ti
            out["certificate_offsets"] = list(self.certificate.offsets)
        return out


def odd_case_predicates(n: int) -> dict[str, bool]:
    """The four mutually exclusive square-membership cases for odd n >= 7."""
    a, b = is_perfect_square(n - 2), is_perfect_square(n - 1)
    c, d = is_perfect_square(2 * n - 6), is_perfect_square(2 * n - 2)
    return {
        "odd-i": not a and not b,
        "odd-ii": (a or b) and not c and not d,
        "odd-iii": a and (c or d),
        "odd-iv": b and c,
    }


def even_secondary_squares(n: int) -> list[int]:
    """For 4n - 15 square: the three discriminants deciding case ii vs iii."""
    k = (integer_sqrt(4 * n - 15) - 1) // 2
    return [8 * k * k + 17, 8 * k * k + 8 * k + 9, 8 * k * k + 16 * k + 9]


def even_case_predicates(n: int) -> dict[str, bool]:
    """The four cases for even orders outside the special and unresolved sets."""
    p15 = is_perfect_square(4 * n - 15)
    p7 = is_perfect_square(4 * n - 7)
    p23 = is_perfect_square(8 * n - 23)
    p15b = is_perfect_square(8 * n - 15)
    secondary = bool(squares_among(even_secondary_squares(n))) if p15 else False
    return {
        "even-i": not (p15 or p7 or p23 or p15b),
        "even-ii": p15 and not secondary,
        "even-iii": p15 and secondary,
        "even-iv": not p15 and not p7 and p23,
    }


_SPECIAL_EVEN: dict[int, FamilySpec] = {
    14: VariantCaterpillar(9, ((3, 1), (5, 1), (5, 3))),
    22: VariantCaterpillar(17, ((11, 2), (13, 3))),
    24: VariantCaterpillar(21, ((11, 2), (12, 1))),
}

_CASE_SPECTRUM = {
    "odd-ii": "odd-case-ii",
    "odd-iii": "odd-case-iii",
    "odd-iv": "odd-case-iv",
    "even-i": "even-case-i",
    "even-ii": "even-case-ii",
    "even-iii": "even-case-iii",
    "even-iv": "even-case-iv",
}

_CASE_CLOSED_FORM = {
    "odd-ii": "odd-case-ii",
    "odd-iii": "odd-case-iii",
    "odd-iv": "odd-case-iv",
    "even-ii": "even-case-ii",
    "even-iii": "even-case-iii",
    "even-iv": "even-case-iv",
}


def _direct_offsets(tr: list[int]) -> list[int]:
    base = min(tr)
    return sorted(x - base for x in tr)


def _certify(n: int, case_label: str, spec: FamilySpec, predicted: int) -> ExtremalOutcome:
    """Build the construction and check every claim directly."""
    tree = families.build_tree(spec)
    if tree.n != n:
        raise VerificationFailed(f"{case_label}: built order {tree.n} != {n}")
    tr = transmissions_linear(tree)
    direct_w = sum(tr) // 2
    is_ti = len(set(tr)) == len(tr) and n > 1
    offsets = _direct_offsets(tr)

    gen_name = _CASE_SPECTRUM.get(case_label)
    if gen_name is not None:
        cert = formulas.SPECTRA[gen_name].offsets(n)
        if list(cert.offsets) != offsets:
            raise VerificationFailed(
                f"{case_label} at n = {n}: spectrum generator disagrees with direct offsets"
            )
        cert = SpectrumOffsets(cert.offsets, {**cert.params, "source": gen_name})
    else:
        cert = SpectrumOffsets(tuple(offsets), {"source": "direct"})

    if not is_ti:
        raise VerificationFailed(f"{case_label} at n = {n}: constructed tree is not TI")
    if direct_w != predicted:
        raise VerificationFailed(
            f"{case_label} at n = {n}: direct Wiener {direct_w} != predicted {predicted}"
        )
    return ExtremalOutcome(
        order=n,
        verdict="solved",
        case_label=case_label,
        spec=spec,
        predicted_wiener=predicted,
        direct_wiener=direct_w,
        is_ti=is_ti,
        certificate=cert,
    )


def odd_extremal(n: int) -> ExtremalOutcome:
    """Extremal outcome for odd orders (solved for every odd n >= 7)."""
    if n % 2 == 0:
        raise ParityError(f"odd dispatcher called with even n = {n}")
    if n < 1:
        raise PreconditionFailed(f"order must be >= 1, got {n}")
    if n < 7:
        return ExtremalOutcome(n, "no-ti-tree", reason="no TI tree of odd order below 7")

    flags = odd_case_predicates(n)
    if sum(flags.values()) != 1:
        raise TitreesError(f"internal: odd case predicates not exclusive at n = {n}: {flags}")
    case = next(label for label, hit in flags.items() if hit)

    if case == "odd-i":
        spec = Starlike(((n - 1) // 2, (n - 3) // 2, 1))
        predicted = formulas.wiener_branching(n, [[(n - 1) // 2, (n - 3) // 2, 1]])
    else:
        cf = formulas.CLOSED_FORMS[_CASE_CLOSED_FORM[case]]
        spec = cf.family(n)
        predicted = cf.wiener(n)
    return _certify(n, case, spec, predicted)


def even_extremal(n: int) -> ExtremalOutcome:
    """Extremal outcome for even orders; may be unresolved for n >= 30."""
    if n % 2 == 1:
        raise ParityError(f"even dispatcher called with odd n = {n}")
    if n < 2:
        raise PreconditionFailed(f"order must be >= 2, got {n}")
    if n < 14:
        return ExtremalOutcome(n, "no-ti-tree", reason="no TI tree of even order below 14")

    if n in _SPECIAL_EVEN:
        spec = _SPECIAL_EVEN[n]
        predicted = formulas.family_wiener_by_branching(spec)
        return _certify(n, f"even-special-{n}", spec, predicted)

    if is_perfect_square(4 * n - 7):
        return ExtremalOutcome(
            n, "unresolved", reason=f"4n - 7 = {4 * n - 7} is a perfect square"
        )
    if not is_perfect_square(4 * n - 15) and is_perfect_square(8 * n - 15):
        return ExtremalOutcome(
            n, "unresolved", reason=f"8n - 15 = {8 * n - 15} is a perfect square"
        )

    flags = even_case_predicates(n)
    if sum(flags.values()) != 1:
        raise TitreesError(f"internal: even case predicates not exclusive at n = {n}: {flags}")
    case = next(label for label, hit in flags.items() if hit)

    if case == "even-i":
        spec = Starlike((n // 2 - 1, n // 2 - 2, 2))
        predicted = formulas.wiener_branching(n, [[n // 2 - 1, n // 2 - 2, 2]])
    else:
        cf = formulas.CLOSED_FORMS[_CASE_CLOSED_FORM[case]]
        spec = cf.family(n)
        predicted = cf.wiener(n)
    return _certify(n, case, spec, predicted)


def extremal(n: int) -> ExtremalOutcome:
    return odd_extremal(n) if n % 2 else even_extremal(n)


@dataclass(frozen=True)
class TICondition:
    holds: bool
    reason: str


def ti_condition(case_label: str, n: int) -> TICondition:
    """Evaluate the exact square-membership characterization of the TI
    property for the named construction; agrees with the direct check."""

    def check_empty(values: list[int]) -> TICondition:
        hits = squares_among(values)
        if hits:
            return TICondition(False, f"perfect squares found: {hits}")
        return TICondition(True, f"none of {values} is a perfect square")

    if case_label in ("odd-i", "odd-ii", "odd-iii", "odd-iv"):
        if n % 2 == 0:
            raise PreconditionFailed(f"{case_label} needs odd n, got {n}")
    elif case_label in ("even-i", "even-ii", "even-iii", "even-iv"):
        if n % 2 == 1:
            raise PreconditionFailed(f"{case_label} needs even n, got {n}")
    else:
        raise PreconditionFailed(f"unknown case label {case_label!r}")

    if case_label == "odd-i":
        if n < 5:
            raise PreconditionFailed(f"odd-i needs n >= 5, got {n}")
        return check_empty([n - 2, n - 1])
    if case_label == "odd-ii":
        if n < 7:
            raise PreconditionFailed(f"odd-ii needs n >= 7, got {n}")
        return check_empty([n - 4, n, 2 * n - 6, 2 * n - 2])
    if case_label == "odd-iii":
        if n < 11 or not is_perfect_square(n - 2):
            raise PreconditionFailed(f"odd-iii needs n >= 11 with n - 2 square, got {n}")
        return TICondition(True, "always TI when n - 2 is a perfect square")
    if case_label == "odd-iv":
        if n < 17 or not is_perfect_square(n - 1):
            raise PreconditionFailed(f"odd-iv needs n >= 17 with n - 1 square, got {n}")
        return TICondition(True, "always TI when n - 1 is a perfect square")
    if case_label == "even-i":
        if n < 14:
            raise PreconditionFailed(f"even-i needs n >= 14, got {n}")
        return check_empty([4 * n - 15, 4 * n - 7, 8 * n - 23, 8 * n - 15])
    if case_label in ("even-ii", "even-iii"):
        if n < 14 or not is_perfect_square(4 * n - 15):
            raise PreconditionFailed(f"{case_label} needs n >= 14 with 4n - 15 square, got {n}")
        k = (integer_sqrt(4 * n - 15) - 1) // 2
        if case_label == "even-ii":
            return check_empty(even_secondary_squares(n))
        return check_empty([8 * k * k - 8 * k + 25, 8 * k * k + 9, 8 * k * k + 16 * k + 1])
    # even-iv
    if n < 14 or not is_perfect_square(8 * n - 23):
        raise PreconditionFailed(f"even-iv needs n >= 14 with 8n - 23 square, got {n}")
    if is_perfect_square(4 * n - 15) or is_perfect_square(4 * n - 7):
        raise PreconditionFailed(
            f"even-iv needs 4n - 15 and 4n - 7 both non-square, got {n}"
        )
    return TICondition(True, "always TI when 8n - 23 is a perfect square")


@dataclass(frozen=True)
class DichotomyResult:
    order: int
    case_ii_ti: bool
    case_iii_ti: bool
    chosen: str  # "even-ii" or "even-iii"
    chosen_spec: FamilySpec


def square_dichotomy(n: int) -> DichotomyResult:
    """For even n >= 34 with 4n - 15 square: direct-check the case-ii and
    case-iii constructions; at least one must be TI."""
    if n % 2 == 1 or n < 34 or not is_perfect_square(4 * n - 15):
        raise PreconditionFailed(
            f"square dichotomy needs even n >= 34 with 4n - 15 square, got {n}"
        )
    flags = {}
    specs = {}
    for name in ("even-case-ii", "even-case-iii"):
        spec = formulas.CLOSED_FORMS[name].family(n)
        tr = transmissions_linear(families.build_tree(spec))
        flags[name] = len(set(tr)) == len(tr)
        specs[name] = spec
    if not (flags["even-case-ii"] or flags["even-case-iii"]):
        raise DichotomyViolated(
            f"neither case-ii nor case-iii construction is TI at n = {n}"
        )
    chosen = "even-ii" if flags["even-case-ii"] else "even-iii"
    return DichotomyResult(
        n,
        flags["even-case-ii"],
        flags["even-case-iii"],
        chosen,
        specs["even-case-ii" if chosen == "even-ii" else "even-case-iii"],
    )


def classify_type(t: Tree) -> str:
    """Type of a TI tree of odd order, by the decomposition at its
    minimum-transmission vertex: 'A' (leaf plus components of sizes
    (n-1)/2 and (n-3)/2), 'B' (pendent 2-path plus (n-1)/2 and (n-5)/2),
    or 'other'."""
    n = t.n
    if n % 2 == 0:
        raise ParityError(f"type classification is defined for odd orders, got n = {n}")
    tr = transmissions_linear(t)
    if n <= 1 or len(set(tr)) != n:
        raise NotTI("type classification needs a TI tree")
    v = min(range(n), key=tr.__getitem__)
    if t.degree(v) != 3:
        return "other"
    from .tree import decompose_at

    sizes = decompose_at(t, v)
    if sizes == sorted(((n - 1) // 2, (n - 3) // 2, 1), reverse=True):
        return "A"
    if sizes == sorted(((n - 1) // 2, (n - 5) // 2, 2), reverse=True):
        return "B"
    return "other"
