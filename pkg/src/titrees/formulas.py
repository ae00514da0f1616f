"""Exact-integer closed forms and transmission-spectrum generators.

Every operation here is pure integer arithmetic: square roots only occur
under a proven perfect-square precondition and are taken with
``math.isqrt``; divisions are checked for exactness and a failure raises
``NonIntegerResult`` (a bug signal, not a user error).

Two registries tie each formula to the tree construction it describes:

* ``CLOSED_FORMS``: name -> closed-form Wiener value + matching family spec
* ``SPECTRA``: name -> transmission offsets (relative to the designated
  branching vertex) + matching family spec

so sweeps can check `closed form == branching formula == direct BFS` and
`generated offsets == direct offsets` over every valid order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import families
from .errors import InconsistentSizes, NonIntegerResult, PreconditionFailed
from .families import FamilySpec, OrdinaryCaterpillar, Starlike, VariantCaterpillar


def integer_sqrt(m: int) -> int:
    """Floor of the square root, exact integer arithmetic."""
    if m < 0:
        raise PreconditionFailed(f"integer_sqrt of negative {m}")
    return math.isqrt(m)


def is_perfect_square(m: int) -> bool:
    if m < 0:
        return False
    r = math.isqrt(m)
    return r * r == m


def squares_among(values) -> list[int]:
    """The perfect squares in ``values`` (ordered as given)."""
    return [m for m in values if is_perfect_square(m)]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegerResult(f"{num} not divisible by {den}")
    return q


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionFailed(msg)


def wiener_path(n: int) -> int:
    """Wiener index of the path, the maximum over all order-n trees: C(n+1, 3)."""
    _require(n >= 1, f"path order must be >= 1, got {n}")
    return (n + 1) * n * (n - 1) // 6


def wiener_fusion(w1: int, w2: int, n1: int, n2: int, tr1: int, tr2: int) -> int:
    """Wiener index after identifying a vertex of each part:
    w1 + w2 + (n1 - 1) * tr2 + (n2 - 1) * tr1."""
    for name, val in (("w1", w1), ("w2", w2), ("n1", n1), ("n2", n2), ("tr1", tr1), ("tr2", tr2)):
        _require(val >= 0, f"{name} must be non-negative, got {val}")
    return w1 + w2 + (n1 - 1) * tr2 + (n2 - 1) * tr1


def wiener_branching(n: int, branch_sizes) -> int:
    """Wiener index from the component sizes at every branching vertex:
    C(n+1, 3) minus, per branching vertex, the sum of products of component
    -size triples."""
    total = wiener_path(n)
    for sizes in branch_sizes:
        sizes = list(sizes)
        if len(sizes) < 3:
            raise InconsistentSizes(f"branching vertex needs >= 3 components, got {sizes}")
        if any(not isinstance(s, int) or s < 1 for s in sizes):
            raise InconsistentSizes(f"component sizes must be positive integers: {sizes}")
        if sum(sizes) != n - 1:
            raise InconsistentSizes(
                f"component sizes {sizes} sum to {sum(sizes)}, expected n - 1 = {n - 1}"
            )
        e1 = e2 = e3 = 0
        for s in sizes:
            e3 += e2 * s
            e2 += e1 * s
            e1 += s
        total -= e3
    return total


# closed-form Wiener values, one per construction


def _odd(n: int, n_min: int, name: str) -> None:
    _require(n % 2 == 1 and n >= n_min, f"{name} needs odd n >= {n_min}, got {n}")


def _even(n: int, n_min: int, name: str) -> None:
    _require(n % 2 == 0 and n >= n_min, f"{name} needs even n >= {n_min}, got {n}")


def odd_case_ii_wiener(n: int) -> int:
    _odd(n, 7, "odd-case-ii")
    return _exact_div(n**3 - 3 * n**2 + 17 * n - 15, 6)


def odd_s3_wiener(n: int) -> int:
    _odd(n, 9, "odd-s3")
    return _exact_div(2 * n**3 - 9 * n**2 + 70 * n - 63, 12)


def odd_case_iii_wiener(n: int) -> int:
    _odd(n, 11, "odd-case-iii")
    _require(is_perfect_square(n - 2), f"odd-case-iii needs n - 2 a perfect square, got n = {n}")
    return _exact_div(n**3 - 3 * n**2 + 17 * n - 6 * integer_sqrt(n - 2) - 21, 6)


def odd_case_iv_wiener(n: int) -> int:
    _odd(n, 17, "odd-case-iv")
    _require(is_perfect_square(n - 1), f"odd-case-iv needs n - 1 a perfect square, got n = {n}")
    return _exact_div(n**3 - 3 * n**2 + 17 * n - 6 * integer_sqrt(n - 1) - 15, 6)


def even_s4_wiener(n: int) -> int:
    _even(n, 14, "even-s4")
    return _exact_div(n**3 - 6 * n**2 + 59 * n - 96, 6)


def even_aux_cat_wiener(n: int) -> int:
    _even(n, 14, "even-aux-cat")
    return _exact_div(n**3 - 6 * n**2 + 41 * n - 36, 6)


def _k_from_4n15(n: int, name: str) -> int:
    _require(is_perfect_square(4 * n - 15), f"{name} needs 4n - 15 a perfect square, got n = {n}")
    return (integer_sqrt(4 * n - 15) - 1) // 2


def even_case_ii_wiener(n: int) -> int:
    _even(n, 14, "even-case-ii")
    _k_from_4n15(n, "even-case-ii")
    return _exact_div(2 * n**3 - 9 * n**2 + 58 * n - 102 - 6 * integer_sqrt(4 * n - 15), 12)


def even_case_iii_wiener(n: int) -> int:
    _even(n, 14, "even-case-iii")
    _k_from_4n15(n, "even-case-iii")
    return _exact_div(2 * n**3 - 9 * n**2 + 58 * n - 78 - 18 * integer_sqrt(4 * n - 15), 12)


def even_double_b2_wiener(n: int) -> int:
    _even(n, 14, "even-double-b2")
    _k_from_4n15(n, "even-double-b2")
    return _exact_div(n**3 - 6 * n**2 + 47 * n - 96, 6)


def _derive_k_ell(n: int, name: str, disc: Callable[[int], int],
                  k: Optional[int], ell: Optional[int]) -> tuple[int, int]:
    dk = _k_from_4n15(n, name)
    d = disc(dk)
    _require(is_perfect_square(d), f"{name} needs {d} a perfect square (k = {dk})")
    dell = (integer_sqrt(d) - 3) // 2
    if k is not None and k != dk:
        raise PreconditionFailed(f"{name}: k = {k} does not match derived k = {dk}")
    if ell is not None and ell != dell:
        raise PreconditionFailed(f"{name}: ell = {ell} does not match derived ell = {dell}")
    return dk, dell


def even_case3a_wiener(n: int, k: Optional[int] = None, ell: Optional[int] = None) -> int:
    _even(n, 14, "even-case3a")
    k, ell = _derive_k_ell(n, "even-case3a", lambda k: 8 * k * k + 17, k, ell)
    return _exact_div(n**3 - 6 * n**2 + 47 * n - 90 - 18 * k - 6 * ell, 6)


def even_case3b_wiener(n: int, k: Optional[int] = None, ell: Optional[int] = None) -> int:
    _even(n, 14, "even-case3b")
    k, ell = _derive_k_ell(n, "even-case3b", lambda k: 8 * k * k + 8 * k + 9, k, ell)
    return _exact_div(n**3 - 6 * n**2 + 47 * n - 102 - 6 * k - 6 * ell, 6)


def even_case3c_wiener(n: int, k: Optional[int] = None, ell: Optional[int] = None) -> int:
    _even(n, 14, "even-case3c")
    k, ell = _derive_k_ell(n, "even-case3c", lambda k: 8 * k * k + 16 * k + 9, k, ell)
    return _exact_div(n**3 - 6 * n**2 + 47 * n - 102 + 6 * k - 6 * ell, 6)


def even_case_iv_wiener(n: int) -> int:
    _even(n, 14, "even-case-iv")
    _require(is_perfect_square(8 * n - 23), f"even-case-iv needs 8n - 23 a perfect square, got n = {n}")
    return _exact_div(2 * n**3 - 9 * n**2 + 70 * n - 126 - 6 * integer_sqrt(8 * n - 23), 12)


# transmission spectra, as offsets from the designated branching vertex


@dataclass(frozen=True)
class SpectrumOffsets:
    """Multiset of transmissions minus the base transmission of the
    designated branching vertex; repeats witness a non-TI construction."""

    offsets: tuple[int, ...]  # sorted, with repeats kept
    params: dict = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.offsets)

    @property
    def is_distinct(self) -> bool:
        return len(set(self.offsets)) == len(self.offsets)


def _spectrum(raw, **params) -> SpectrumOffsets:
    return SpectrumOffsets(tuple(sorted(raw)), dict(params))


def spectrum_odd_ii(n: int) -> SpectrumOffsets:
    _odd(n, 7, "spectrum odd-case-ii")
    raw = [0, n - 4, 2 * n - 6]
    raw += [i * i for i in range(1, (n - 1) // 2 + 1)]
    raw += [j * (j + 4) for j in range(1, (n - 5) // 2 + 1)]
    return _spectrum(raw)


def spectrum_odd_iii(n: int) -> SpectrumOffsets:
    _odd(n, 11, "spectrum odd-case-iii")
    _require(is_perfect_square(n - 2), f"spectrum odd-case-iii needs n - 2 square, got n = {n}")
    k = integer_sqrt(n - 2)
    raw = [0, k * k, 2 * k * k - 2 * k + 1]
    raw += [i * (i + 2) for i in range(1, (n - 3) // 2 + 1)]
    raw += [j * j for j in range(1, k)]
    raw += [j * (j + 2) - 2 * k + 2 for j in range(k, (n - 3) // 2 + 1)]
    return _spectrum(raw, k=k)


def spectrum_odd_iv(n: int) -> SpectrumOffsets:
    _odd(n, 17, "spectrum odd-case-iv")
    _require(is_perfect_square(n - 1), f"spectrum odd-case-iv needs n - 1 square, got n = {n}")
    k = integer_sqrt(n - 1)
    raw = [0, k * k - 1, 2 * k * k - 2 * k - 1]
    raw += [i * i for i in range(1, (n - 1) // 2 + 1)]
    raw += [j * (j + 2) for j in range(1, k - 1)]
    raw += [j * (j + 4) - 2 * k + 4 for j in range(k - 1, (n - 5) // 2 + 1)]
    return _spectrum(raw, k=k)


def spectrum_even_i(n: int) -> SpectrumOffsets:
    _even(n, 14, "spectrum even-case-i")
    raw = [0, n - 4, 2 * n - 6]
    raw += [x * x + 3 * x for x in range(1, n // 2 - 1)]
    raw += [y * y + y for y in range(1, n // 2)]
    return _spectrum(raw)


def spectrum_even_ii(n: int) -> SpectrumOffsets:
    _even(n, 14, "spectrum even-case-ii")
    k = _k_from_4n15(n, "spectrum even-case-ii")
    raw = [0, k * k + k, 2 * k * k + 2 * k + 2, 2 * k * k + 2]
    raw += [i * (i + 3) for i in range(1, n // 2 - 1)]
    raw += [j * (j + 1) for j in range(1, k)]
    raw += [j * (j + 3) - 2 * k + 2 for j in range(k, n // 2 - 1)]
    return _spectrum(raw, k=k)


def spectrum_even_iii(n: int) -> SpectrumOffsets:
    _even(n, 14, "spectrum even-case-iii")
    k = _k_from_4n15(n, "spectrum even-case-iii")
    raw = [0, k * k + k, 2 * k * k + 2 * k + 2, 2 * k * k - 2 * k + 4]
    raw += [i * (i + 3) for i in range(1, n // 2 - 1)]
    raw += [j * (j + 1) for j in range(1, k - 1)]
    raw += [j * (j + 3) - 2 * k + 4 for j in range(k - 1, n // 2 - 1)]
    return _spectrum(raw, k=k)


def spectrum_even_iv(n: int) -> SpectrumOffsets:
    _even(n, 14, "spectrum even-case-iv")
    _require(is_perfect_square(8 * n - 23), f"spectrum even-case-iv needs 8n - 23 square, got n = {n}")
    k = (integer_sqrt(8 * n - 23) - 1) // 2
    raw = [0, (k * k + k - 2) // 2, k * k + k, (3 * k * k - k + 2) // 2]
    raw += [i * (i + 3) for i in range(1, n // 2 - 1)]
    raw += [j * (j + 1) for j in range(1, k)]
    raw += [j * (j + 3) - 2 * k + 2 for j in range(k, n // 2 - 1)]
    return _spectrum(raw, k=k)


# registries binding formulas to their constructions


def _ps_4n15(n: int) -> bool:
    return is_perfect_square(4 * n - 15)


def _family_odd_case_ii(n: int) -> FamilySpec:
    return Starlike(((n - 1) // 2, (n - 5) // 2, 2))


def _family_odd_s3(n: int) -> FamilySpec:
    return Starlike(((n - 1) // 2, (n - 7) // 2, 3))


def _family_odd_case_iii(n: int) -> FamilySpec:
    k = integer_sqrt(n - 2)
    return OrdinaryCaterpillar(n - 2, ((n - 1) // 2, (n - 3) // 2 + k))


def _family_odd_case_iv(n: int) -> FamilySpec:
    k = integer_sqrt(n - 1)
    return OrdinaryCaterpillar(n - 2, ((n + 1) // 2, (n - 3) // 2 + k))


def _family_even_i(n: int) -> FamilySpec:
    return Starlike((n // 2 - 1, n // 2 - 2, 2))


def _family_even_s4(n: int) -> FamilySpec:
    return Starlike((n // 2 - 1, n // 2 - 4, 4))


def _family_even_aux_cat(n: int) -> FamilySpec:
    return VariantCaterpillar(n - 4, ((n // 2 - 2, 3), (n // 2 - 1, 1)))


def _family_even_case_ii(n: int) -> FamilySpec:
    k = _k_from_4n15(n, "even-case-ii")
    return VariantCaterpillar(n - 3, ((n // 2 - 1, 2), (n // 2 + k - 2, 1)))


def _family_even_case_iii(n: int) -> FamilySpec:
    k = _k_from_4n15(n, "even-case-iii")
    return VariantCaterpillar(n - 3, ((n // 2 - 1, 2), (n // 2 + k - 3, 1)))


def _family_even_double_b2(n: int) -> FamilySpec:
    k = _k_from_4n15(n, "even-double-b2")
    return VariantCaterpillar(n - 4, ((n // 2 - 1, 2), (n // 2 + k - 2, 2)))


def _family_even_case3a(n: int) -> FamilySpec:
    k, ell = _derive_k_ell(n, "even-case3a", lambda k: 8 * k * k + 17, None, None)
    return VariantCaterpillar(
        n - 4, ((n // 2 - 2, 2), (n // 2 + k - 3, 1), (n // 2 - ell - 1, 1))
    )


def _family_even_case3b(n: int) -> FamilySpec:
    k, ell = _derive_k_ell(n, "even-case3b", lambda k: 8 * k * k + 8 * k + 9, None, None)
    return VariantCaterpillar(
        n - 4, ((n // 2 - 1, 2), (n // 2 + k - 2, 1), (n // 2 + ell - 2, 1))
    )


def _family_even_case3c(n: int) -> FamilySpec:
    k, ell = _derive_k_ell(n, "even-case3c", lambda k: 8 * k * k + 16 * k + 9, None, None)
    return VariantCaterpillar(
        n - 4, ((n // 2 - 1, 2), (n // 2 + k - 2, 1), (n // 2 + ell - 2, 1))
    )


def _family_even_case_iv(n: int) -> FamilySpec:
    k = (integer_sqrt(8 * n - 23) - 1) // 2
    return VariantCaterpillar(n - 3, ((n // 2 - 1, 2), (n // 2 + k - 2, 1)))


@dataclass(frozen=True)
class ClosedForm:
    name: str
    wiener: Callable[[int], int]
    family: Callable[[int], FamilySpec]
    valid: Callable[[int], bool]
    params: Optional[Callable[[int], dict]] = None  # derived k / ell, for audit

    def valid_orders(self, n_max: int) -> list[int]:
        return [n for n in range(1, n_max + 1) if self.valid(n)]


def _params_sqrt(expr: Callable[[int], int]):
    return lambda n: {"k": integer_sqrt(expr(n))}


def _params_k_4n15(n: int) -> dict:
    return {"k": (integer_sqrt(4 * n - 15) - 1) // 2}


def _params_k_ell(disc: Callable[[int], int]):
    def inner(n: int) -> dict:
        k, ell = _derive_k_ell(n, "params", disc, None, None)
        return {"k": k, "ell": ell}

    return inner


@dataclass(frozen=True)
class SpectrumGenerator:
    name: str
    offsets: Callable[[int], SpectrumOffsets]
    family: Callable[[int], FamilySpec]
    valid: Callable[[int], bool]

    def valid_orders(self, n_max: int) -> list[int]:
        return [n for n in range(1, n_max + 1) if self.valid(n)]


def _registry(entries):
    return {e.name: e for e in entries}


CLOSED_FORMS = _registry([
    ClosedForm("odd-case-ii", odd_case_ii_wiener, _family_odd_case_ii,
               lambda n: n % 2 == 1 and n >= 7),
    ClosedForm("odd-s3", odd_s3_wiener, _family_odd_s3,
               lambda n: n % 2 == 1 and n >= 9),
    ClosedForm("odd-case-iii", odd_case_iii_wiener, _family_odd_case_iii,
               lambda n: n % 2 == 1 and n >= 11 and is_perfect_square(n - 2),
               _params_sqrt(lambda n: n - 2)),
    ClosedForm("odd-case-iv", odd_case_iv_wiener, _family_odd_case_iv,
               lambda n: n % 2 == 1 and n >= 17 and is_perfect_square(n - 1),
               _params_sqrt(lambda n: n - 1)),
    ClosedForm("even-s4", even_s4_wiener, _family_even_s4,
               lambda n: n % 2 == 0 and n >= 14),
    ClosedForm("even-aux-cat", even_aux_cat_wiener, _family_even_aux_cat,
               lambda n: n % 2 == 0 and n >= 14),
    ClosedForm("even-case-ii", even_case_ii_wiener, _family_even_case_ii,
               lambda n: n % 2 == 0 and n >= 14 and _ps_4n15(n), _params_k_4n15),
    ClosedForm("even-case-iii", even_case_iii_wiener, _family_even_case_iii,
               lambda n: n % 2 == 0 and n >= 14 and _ps_4n15(n), _params_k_4n15),
    ClosedForm("even-double-b2", even_double_b2_wiener, _family_even_double_b2,
               lambda n: n % 2 == 0 and n >= 14 and _ps_4n15(n), _params_k_4n15),
    ClosedForm("even-case3a", even_case3a_wiener, _family_even_case3a,
               lambda n: n % 2 == 0 and n >= 14 and _ps_4n15(n)
               and is_perfect_square(8 * ((integer_sqrt(4 * n - 15) - 1) // 2) ** 2 + 17),
               _params_k_ell(lambda k: 8 * k * k + 17)),
    ClosedForm("even-case3b", even_case3b_wiener, _family_even_case3b,
               lambda n: n % 2 == 0 and n >= 14 and _ps_4n15(n)
               and is_perfect_square(
                   8 * ((integer_sqrt(4 * n - 15) - 1) // 2) ** 2
                   + 8 * ((integer_sqrt(4 * n - 15) - 1) // 2) + 9),
               _params_k_ell(lambda k: 8 * k * k + 8 * k + 9)),
    ClosedForm("even-case3c", even_case3c_wiener, _family_even_case3c,
               lambda n: n % 2 == 0 and n >= 14 and _ps_4n15(n)
               and is_perfect_square(
                   8 * ((integer_sqrt(4 * n - 15) - 1) // 2) ** 2
                   + 16 * ((integer_sqrt(4 * n - 15) - 1) // 2) + 9),
               _params_k_ell(lambda k: 8 * k * k + 16 * k + 9)),
    ClosedForm("even-case-iv", even_case_iv_wiener, _family_even_case_iv,
               lambda n: n % 2 == 0 and n >= 14 and is_perfect_square(8 * n - 23),
               lambda n: {"k": (integer_sqrt(8 * n - 23) - 1) // 2}),
])


SPECTRA = _registry([
    SpectrumGenerator("odd-case-ii", spectrum_odd_ii, _family_odd_case_ii,
                      CLOSED_FORMS["odd-case-ii"].valid),
    SpectrumGenerator("odd-case-iii", spectrum_odd_iii, _family_odd_case_iii,
                      CLOSED_FORMS["odd-case-iii"].valid),
    SpectrumGenerator("odd-case-iv", spectrum_odd_iv, _family_odd_case_iv,
                      CLOSED_FORMS["odd-case-iv"].valid),
    SpectrumGenerator("even-case-i", spectrum_even_i, _family_even_i,
                      lambda n: n % 2 == 0 and n >= 14),
    SpectrumGenerator("even-case-ii", spectrum_even_ii, _family_even_case_ii,
                      CLOSED_FORMS["even-case-ii"].valid),
    SpectrumGenerator("even-case-iii", spectrum_even_iii, _family_even_case_iii,
                      CLOSED_FORMS["even-case-iii"].valid),
    SpectrumGenerator("even-case-iv", spectrum_even_iv, _family_even_case_iv,
                      CLOSED_FORMS["even-case-iv"].valid),
])


def branch_decomposition(tree) -> list[list[int]]:
    """Component-size lists at every branching vertex, ready for
    :func:`wiener_branching`."""
    from .tree import branching_vertices, decompose_at

    return [decompose_at(tree, w) for w in sorted(branching_vertices(tree))]


def family_wiener_by_branching(spec: FamilySpec) -> int:
    """Branching-formula Wiener of a built family tree (independent of the
    closed forms above)."""
    tree = families.build_tree(spec)
    return wiener_branching(tree.n, branch_decomposition(tree))
