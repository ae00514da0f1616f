"""Constructors for the named tree families: paths, starlike trees, and
ordinary / variant caterpillars.

Each family has a symbolic spec (validated dataclass), a deterministic
builder producing a labeled :class:`~titrees.tree.Tree` plus a map from
family coordinates to vertex labels, and a bijective text syntax used by
the CLI::

    P(7)                    path on 7 vertices
    S(3,2,1)                starlike, pendent paths of lengths 3, 2, 1
    C(9; 5,7)               spine P_9, one extra leaf at v_5 and at v_7
    CV(9; 3:1, 5:1, 5:3)    spine P_9, pendent paths of the given lengths

Labeling is spine first (v_1..v_n in order), then attachment arms in
declaration order with vertices placed outward, so builds are reproducible
byte-for-byte.  Variant caterpillars may repeat a spine position (two arms
hanging at the same vertex); ordinary caterpillars keep positions distinct.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import BadFamilyParams, ParseError
from .tree import Tree


@dataclass(frozen=True)
class Path:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BadFamilyParams(f"path order must be a positive integer, got {self.n!r}")


@dataclass(frozen=True)
class Starlike:
    arms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "arms", tuple(self.arms))
        if len(self.arms) < 3:
            raise BadFamilyParams(f"starlike tree needs k >= 3 pendent paths, got {len(self.arms)}")
        for a in self.arms:
            if not isinstance(a, int) or a < 1:
                raise BadFamilyParams(f"pendent path lengths must be integers >= 1, got {a!r}")


@dataclass(frozen=True)
class OrdinaryCaterpillar:
    spine: int
    positions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "positions", tuple(self.positions))
        _check_spine(self.spine, self.positions)
        if len(set(self.positions)) != len(self.positions):
            raise BadFamilyParams(f"ordinary caterpillar positions must be distinct: {self.positions}")


@dataclass(frozen=True)
class VariantCaterpillar:
    spine: int
    attachments: tuple[tuple[int, int], ...]  # (spine position, pendent path length)

    def __post_init__(self):
        object.__setattr__(self, "attachments", tuple((int(a), int(b)) for a, b in self.attachments))
        _check_spine(self.spine, [a for a, _ in self.attachments])
        lengths = [b for _, b in self.attachments]
        if any(b < 1 for b in lengths):
            raise BadFamilyParams(f"pendent path lengths must be >= 1: {lengths}")
        if max(lengths) < 2:
            raise BadFamilyParams("variant caterpillar needs max pendent path length >= 2")
        # Repeated positions are allowed: two arms may hang at the same spine vertex.


def _check_spine(spine, positions):
    if not isinstance(spine, int) or spine < 3:
        raise BadFamilyParams(f"caterpillar spine must have >= 3 vertices, got {spine!r}")
    if len(positions) < 2:
        raise BadFamilyParams(f"caterpillar needs k >= 2 attachments, got {len(positions)}")
    for a in positions:
        if not isinstance(a, int) or not (2 <= a <= spine - 1):
            raise BadFamilyParams(f"attachment position {a!r} outside 2..{spine - 1}")


FamilySpec = Union[Path, Starlike, OrdinaryCaterpillar, VariantCaterpillar]


def order_of(spec: FamilySpec) -> int:
    """Predicted order of the built tree."""
    if isinstance(spec, Path):
        return spec.n
    if isinstance(spec, Starlike):
        return 1 + sum(spec.arms)
    if isinstance(spec, OrdinaryCaterpillar):
        return spec.spine + len(spec.positions)
    if isinstance(spec, VariantCaterpillar):
        return spec.spine + sum(b for _, b in spec.attachments)
    raise BadFamilyParams(f"not a family spec: {spec!r}")


class Built(NamedTuple):
    tree: Tree
    labels: dict[str, int]  # "v3" -> spine vertex, "arm2.1" -> first vertex of arm 2


def build(spec: FamilySpec) -> Built:
    """Construct the labeled tree for a family spec."""
    edges: list[tuple[int, int]] = []
    labels: dict[str, int] = {}

    def spine_path(length: int) -> None:
        for i in range(length):
            labels[f"v{i + 1}"] = i
            if i:
                edges.append((i - 1, i))

    def arm(idx: int, anchor: int, length: int, next_label: int) -> int:
        prev = anchor
        for j in range(1, length + 1):
            labels[f"arm{idx}.{j}"] = next_label
            edges.append((prev, next_label))
            prev = next_label
            next_label += 1
        return next_label

    if isinstance(spec, Path):
        spine_path(spec.n)
    elif isinstance(spec, Starlike):
        labels["center"] = 0
        nxt = 1
        for i, a in enumerate(spec.arms, start=1):
            nxt = arm(i, 0, a, nxt)
    elif isinstance(spec, OrdinaryCaterpillar):
        spine_path(spec.spine)
        nxt = spec.spine
        for i, a in enumerate(spec.positions, start=1):
            nxt = arm(i, a - 1, 1, nxt)
    elif isinstance(spec, VariantCaterpillar):
        spine_path(spec.spine)
        nxt = spec.spine
        for i, (a, b) in enumerate(spec.attachments, start=1):
            nxt = arm(i, a - 1, b, nxt)
    else:
        raise BadFamilyParams(f"not a family spec: {spec!r}")

    n = order_of(spec)
    tree = Tree(n, edges)
    return Built(tree, labels)


def build_tree(spec: FamilySpec) -> Tree:
    return build(spec).tree


# text syntax


def format_spec(spec: FamilySpec) -> str:
    if isinstance(spec, Path):
        return f"P({spec.n})"
    if isinstance(spec, Starlike):
        return "S(" + ",".join(map(str, spec.arms)) + ")"
    if isinstance(spec, OrdinaryCaterpillar):
        return f"C({spec.spine}; " + ",".join(map(str, spec.positions)) + ")"
    if isinstance(spec, VariantCaterpillar):
        return f"CV({spec.spine}; " + ",".join(f"{a}:{b}" for a, b in spec.attachments) + ")"
    raise BadFamilyParams(f"not a family spec: {spec!r}")


_HEAD_RE = re.compile(r"\s*(CV|C|S|P)\s*\(")


def _parse_int(token: str, text: str, hint: int) -> int:
    token = token.strip()
    if not re.fullmatch(r"-?\d+", token):
        pos = text.find(token.strip() or ",", hint)
        raise ParseError(f"expected an integer, got {token!r}", max(pos, 0))
    return int(token)


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI family-spec syntax; inverse of :func:`format_spec`.

    Any failure surfaces as ParseError, including family constraints the
    parsed parameters violate (direct constructors raise BadFamilyParams).
    """
    try:
        return _parse_spec(text)
    except BadFamilyParams as exc:
        raise ParseError(str(exc), 0) from exc


def _parse_spec(text: str) -> FamilySpec:
    m = _HEAD_RE.match(text)
    if not m:
        raise ParseError("expected one of P(...), S(...), C(...; ...), CV(...; ...)", 0)
    rest = text[m.end():]
    stripped = rest.rstrip()
    if not stripped.endswith(")") or rest[len(stripped):].strip():
        raise ParseError("expected closing parenthesis", len(text.rstrip()) - 1)
    body = stripped[:-1]
    kind = m.group(1)
    at = m.end()

    if kind == "P":
        return Path(_parse_int(body, text, at))
    if kind == "S":
        arms = [_parse_int(tok, text, at) for tok in body.split(",")]
        return Starlike(tuple(arms))

    if ";" not in body:
        raise ParseError("caterpillar syntax needs ';' between spine and attachments", at)
    head, tail = body.split(";", 1)
    spine = _parse_int(head, text, at)
    at = text.find(";", at) + 1
    if kind == "C":
        positions = [_parse_int(tok, text, at) for tok in tail.split(",")]
        return OrdinaryCaterpillar(spine, tuple(positions))
    pairs = []
    for tok in tail.split(","):
        if ":" not in tok:
            raise ParseError(f"expected position:length, got {tok.strip()!r}", text.find(tok.strip() or ",", at))
        a, b = tok.split(":", 1)
        pairs.append((_parse_int(a, text, at), _parse_int(b, text, at)))
    return VariantCaterpillar(spine, tuple(pairs))
