"""Irreducible root systems and their Weyl group constants (rank, order, classes).

Each system is realized with exact integer coordinates in a standard ambient
lattice; systems whose textbook realization uses half-integers (E and F
families) are scaled by 2, which changes nothing about the Weyl group.  The
full root set is generated as the closure of the simple roots under the
simple reflections, and group elements are represented as permutations of
the root list.

Group orders come from the product of the invariant degrees.  Class counts:

* A_n: partitions of n+1 (cycle types of the symmetric group S_{n+1});
* B_n, C_n: pairs of partitions (a, b) with |a| + |b| = n (signed cycle
  types);
* D_n: pairs (a, b) with |a| + |b| = n and b having an even number of
  parts, counting pairs with b empty and a consisting of even parts twice
  (such classes split in the index-2 subgroup);
* exceptional types: fixed table (G2: 6, F4: 25, E6: 25, E7: 60, E8: 112).

A brute-force enumeration oracle (closure of the simple reflections, orbit
partition under conjugation) cross-checks every table entry small enough to
enumerate; the cap keeps E7/E8 out of its reach by default.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ResourceLimitError

#: Largest group order the enumeration oracle will attempt by default.
DEFAULT_ENUMERATION_CAP = 10**6

_EXCEPTIONAL_CLASS_COUNTS = {("G", 2): 6, ("F", 4): 25, ("E", 6): 25, ("E", 7): 60, ("E", 8): 112}
_EXCEPTIONAL_DEGREES = {
    ("G", 2): (2, 6),
    ("F", 4): (2, 6, 8, 12),
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
}


@dataclass(frozen=True)
class RootSystemType:
    """An irreducible type: family letter plus rank, validated as a pair."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        valid = (
            (fam == "A" and n >= 1)
            or (fam in ("B", "C") and n >= 2)
            or (fam == "D" and n >= 4)
            or (fam == "E" and n in (6, 7, 8))
            or (fam == "F" and n == 4)
            or (fam == "G" and n == 2)
        )
        if not valid:
            raise ValueError(f"invalid irreducible type {fam}{n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(text: str | RootSystemType) -> RootSystemType:
    """Parse labels like 'A1', 'D4', 'E8' (case-insensitive)."""
    if isinstance(text, RootSystemType):
        return text
    match = re.fullmatch(r"([A-Ga-g])\s*_?\s*(\d+)", text.strip())
    if not match:
        raise ValueError(f"cannot parse root-system type {text!r}")
    return RootSystemType(match.group(1).upper(), int(match.group(2)))


@dataclass(frozen=True)
class RootSystemData:
    """A realized root system with its Weyl constants."""

    type: RootSystemType
    roots: tuple[tuple[int, ...], ...]
    simple_roots: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    w: int
    c: int

    @property
    def d(self) -> int:
        return self.type.rank


class GroupConstants(NamedTuple):
    d: int
    w: int
    c: int
    t: int


# ---------------------------------------------------------------------------
# combinatorics for class counts

@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """Number of partitions of n (p(0) = 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def _partitions_with_exact_parts(n: int) -> list[list[int]]:
    """counts[k][j] = partitions of k into exactly j parts, for k <= n."""
    counts = [[0] * (n + 1) for _ in range(n + 1)]
    counts[0][0] = 1
    # recurrence: partitions of k into exactly j parts = (with a part 1) + (all parts >= 2)
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            counts[k][j] = counts[k - 1][j - 1] + (counts[k - j][j] if k - j >= 0 else 0)
    return counts


def class_count(rst_type: RootSystemType) -> int:
    """Number of conjugacy classes of the Weyl group of the given type."""
    fam, n = rst_type.family, rst_type.rank
    if fam == "A":
        return partition_count(n + 1)
    if fam in ("B", "C"):
        return sum(partition_count(k) * partition_count(n - k) for k in range(n + 1))
    if fam == "D":
        exact = _partitions_with_exact_parts(n)
        total = 0
        for k in range(n + 1):
            for j in range(0, k + 1, 2):
                total += exact[k][j] * partition_count(n - k)
        split_extra = partition_count(n // 2) if n % 2 == 0 else 0
        return total + split_extra
    return _EXCEPTIONAL_CLASS_COUNTS[(fam, n)]


def invariant_degrees(rst_type: RootSystemType) -> tuple[int, ...]:
    """Degrees of the basic invariants; their product is the group order."""
    fam, n = rst_type.family, rst_type.rank
    if fam == "A":
        return tuple(range(2, n + 2))
    if fam in ("B", "C"):
        return tuple(range(2, 2 * n + 1, 2))
    if fam == "D":
        return tuple(range(2, 2 * n - 1, 2)) + (n,)
    return _EXCEPTIONAL_DEGREES[(fam, n)]


def weyl_order(rst_type: RootSystemType) -> int:
    order = 1
    for deg in invariant_degrees(rst_type):
        order *= deg
    return order


def expected_root_count(rst_type: RootSystemType) -> int:
    fam, n = rst_type.family, rst_type.rank
    if fam == "A":
        return n * (n + 1)
    if fam in ("B", "C"):
        return 2 * n * n
    if fam == "D":
        return 2 * n * (n - 1)
    return {("G", 2): 12, ("F", 4): 48, ("E", 6): 72, ("E", 7): 126, ("E", 8): 240}[(fam, n)]


# ---------------------------------------------------------------------------
# realization

def _simple_root_vectors(rst_type: RootSystemType) -> list[tuple[int, ...]]:
    fam, n = rst_type.family, rst_type.rank
    if fam == "A":
        dim = n + 1
        alphas = []
        for i in range(n):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            alphas.append(v)
    elif fam in ("B", "C", "D"):
        dim = n
        alphas = []
        for i in range(n - 1):
            v = [0] * dim
            v[i], v[i + 1] = 1, -1
            alphas.append(v)
        last = [0] * dim
        if fam == "B":
            last[n - 1] = 1
        elif fam == "C":
            last[n - 1] = 2
        else:
            last[n - 2] = last[n - 1] = 1
        alphas.append(last)
    elif fam == "G":
        alphas = [[1, -1, 0], [-2, 1, 1]]
    elif fam == "F":
        # standard realization scaled by 2
        alphas = [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]]
    else:  # E6/E7/E8: leading part of the E8 simple roots, scaled by 2
        alphas = [[1, -1, -1, -1, -1, -1, -1, 1], [2, 2, 0, 0, 0, 0, 0, 0]]
        for i in range(1, n - 1):
            v = [0] * 8
            v[i - 1], v[i] = -2, 2
            alphas.append(v)
    return [tuple(a) for a in alphas]


def _dot(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(x, y))


def _reflect(x: tuple[int, ...], alpha: tuple[int, ...], alpha_norm: int) -> tuple[int, ...]:
    q, rem = divmod(2 * _dot(x, alpha), alpha_norm)
    if rem:
        raise ArithmeticError(f"non-integral Cartan pairing for {x} against {alpha}")
    return tuple(xi - q * ai for xi, ai in zip(x, alpha))


def build_root_system(rst_type: RootSystemType | str) -> RootSystemData:
    """Realize the root system and collect its Weyl constants.

    Roots are the closure of the simple roots under the simple reflections,
    frozen in lexicographic order for determinism.
    """
    rst_type = parse_type(rst_type)
    alphas = _simple_root_vectors(rst_type)
    norms = [_dot(a, a) for a in alphas]
    roots: set[tuple[int, ...]] = set(alphas)
    frontier = list(alphas)
    while frontier:
        fresh = []
        for x in frontier:
            for alpha, norm in zip(alphas, norms):
                y = _reflect(x, alpha, norm)
                if y not in roots:
                    roots.add(y)
                    fresh.append(y)
        frontier = fresh
    ordered = tuple(sorted(roots))
    if len(ordered) != expected_root_count(rst_type):
        raise AssertionError(
            f"{rst_type}: generated {len(ordered)} roots, "
            f"expected {expected_root_count(rst_type)}"
        )
    return RootSystemData(
        type=rst_type,
        roots=ordered,
        simple_roots=tuple(alphas),
        degrees=invariant_degrees(rst_type),
        w=weyl_order(rst_type),
        c=class_count(rst_type),
    )


def constants_for_group(rst_type: RootSystemType | str) -> GroupConstants:
    """(rank d, Weyl order w, class count c, splitting degree t = w)."""
    rst_type = parse_type(rst_type)
    w = weyl_order(rst_type)
    return GroupConstants(d=rst_type.rank, w=w, c=class_count(rst_type), t=w)


# ---------------------------------------------------------------------------
# enumeration oracle

def _as_data(system: RootSystemData | RootSystemType | str) -> RootSystemData:
    if isinstance(system, RootSystemData):
        return system
    return build_root_system(system)


def simple_reflection_perms(data: RootSystemData) -> list[tuple[int, ...]]:
    """The simple reflections as permutations of the root list."""
    index = {root: i for i, root in enumerate(data.roots)}
    perms = []
    for alpha in data.simple_roots:
        norm = _dot(alpha, alpha)
        perms.append(tuple(index[_reflect(r, alpha, norm)] for r in data.roots))
    return perms


def _perm_dtype(nroots: int):
    return np.uint8 if nroots <= 255 else np.uint16


def _enumerate_arrays(data: RootSystemData, cap: int):
    """BFS closure of the simple reflections under composition.

    Returns (elements array of shape (w, nroots), index dict keyed by row
    bytes, generator arrays).  Deterministic: candidates of each level are
    deduplicated in sorted order.
    """
    if data.w > cap:
        raise ResourceLimitError(
            f"{data.type}: group order {data.w} exceeds the enumeration cap {cap}; "
            "use the table constants from constants_for_group"
        )
    nroots = len(data.roots)
    dtype = _perm_dtype(nroots)
    gens = [np.array(g, dtype=dtype) for g in simple_reflection_perms(data)]
    identity = np.arange(nroots, dtype=dtype)
    elements = [identity]
    index = {identity.tobytes(): 0}
    frontier = identity[np.newaxis, :]
    while frontier.shape[0]:
        candidates = np.concatenate([frontier[:, g] for g in gens], axis=0)
        unique = np.unique(candidates, axis=0)
        fresh = []
        for row in unique:
            key = row.tobytes()
            if key not in index:
                index[key] = len(elements)
                elements.append(row)
                fresh.append(row)
        frontier = (
            np.stack(fresh) if fresh else np.empty((0, nroots), dtype=dtype)
        )
    stacked = np.stack(elements)
    if stacked.shape[0] != data.w:
        raise AssertionError(
            f"{data.type}: enumerated {stacked.shape[0]} elements, expected w = {data.w}"
        )
    return stacked, index, gens


def enumerate_weyl_group(
    system: RootSystemData | RootSystemType | str, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[tuple[int, ...]]:
    """All Weyl group elements as permutations of the root list (oracle).

    Raises ResourceLimitError when the group order exceeds ``cap``.
    """
    data = _as_data(system)
    stacked, _, _ = _enumerate_arrays(data, cap)
    return [tuple(int(v) for v in row) for row in stacked]


def conjugacy_class_count(
    elements: Sequence[Sequence[int]],
    generators: Sequence[Sequence[int]] | None = None,
) -> int:
    """Number of conjugation orbits of the listed group elements.

    Orbits are taken under conjugation by ``generators`` (default: all the
    elements, correct but slow); passing a generating set gives the true
    class count at a fraction of the cost.
    """
    arr = np.asarray(elements)
    dtype = _perm_dtype(arr.shape[1])
    arr = arr.astype(dtype)
    index = {row.tobytes(): i for i, row in enumerate(arr)}
    gen_arrs = (
        [np.asarray(g, dtype=dtype) for g in generators]
        if generators is not None
        else list(arr)
    )
    inverses = []
    for g in gen_arrs:
        inv = np.empty_like(g)
        inv[g] = np.arange(len(g), dtype=dtype)
        inverses.append(inv)
    assigned = np.zeros(arr.shape[0], dtype=bool)
    classes = 0
    for seed in range(arr.shape[0]):
        if assigned[seed]:
            continue
        classes += 1
        assigned[seed] = True
        frontier = [seed]
        while frontier:
            block = arr[frontier]
            fresh = []
            for g, ginv in zip(gen_arrs, inverses):
                conjugates = ginv[block[:, g]]
                for row in conjugates:
                    j = index[row.tobytes()]
                    if not assigned[j]:
                        assigned[j] = True
                        fresh.append(j)
            frontier = fresh
    return classes


def enumerated_constants(
    system: RootSystemData | RootSystemType | str, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[int, int]:
    """(group order, class count) measured by brute force, for cross-checking."""
    data = _as_data(system)
    stacked, index, gens = _enumerate_arrays(data, cap)
    inverses = []
    for g in gens:
        inv = np.empty_like(g)
        inv[g] = np.arange(len(g), dtype=g.dtype)
        inverses.append(inv)
    assigned = np.zeros(stacked.shape[0], dtype=bool)
    classes = 0
    for seed in range(stacked.shape[0]):
        if assigned[seed]:
            continue
        classes += 1
        assigned[seed] = True
        frontier = [seed]
        while frontier:
            block = stacked[frontier]
            fresh = []
            for g, ginv in zip(gens, inverses):
                conjugates = ginv[block[:, g]]
                for row in conjugates:
                    j = index[row.tobytes()]
                    if not assigned[j]:
                        assigned[j] = True
                        fresh.append(j)
            frontier = fresh
    return stacked.shape[0], classes
