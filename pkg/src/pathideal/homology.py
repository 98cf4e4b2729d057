"""Exact reduced simplicial homology over Q and GF(p), Hochster-formula
Betti tables, Cohen-Macaulay and sequentially-Cohen-Macaulay tests.

Conventions (they matter for the degenerate corners of Hochster's sum):

* the augmented chain complex carries the empty face in degree -1, so the
  complex {{}} has reduced homology k in degree -1;
* the void complex (no faces at all) has zero homology everywhere;
* Betti tables for an ideal I follow
  beta_{i,j}(I) = sum over |Y| = j of dim H~_{j-i-2}(restriction of the
  Stanley-Reisner complex to Y), and the table of the quotient R/I is the
  ideal table shifted by one in homological degree with beta_{0,0} = 1.

Every homology computation asserts that consecutive boundary maps compose
to zero and that the Euler characteristic matches the alternating face
count minus one.  All arithmetic is exact.

Subset sums, island homology, and Cohen-Macaulay link checks are pure and
order-independent; the module-level caches are keyed by canonical
relabelings, so concurrent or repeated use only changes speed, never
results.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

from .bits import bit_index, iter_bits, submasks, to_mask
from .errors import BoundExceededError
from .ideals import SquarefreeIdeal
from .linalg import sparse_rank
from .simplicial import Complex, make_complex

DEFAULT_HOCHSTER_MAX_N = 14
DEFAULT_SR_MAX_N = 16
MAX_N_ENV_VAR = "PATHIDEAL_MAX_N"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Either the rationals (p is None) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


QQ = Field(None)


def gf(p: int) -> Field:
    return Field(p)


DEFAULT_FIELDS = (QQ, gf(2), gf(3), gf(5))

# counters for the exactness checks performed alongside every homology run
assertion_stats = {"boundary_squared": 0, "euler": 0}


def hochster_max_n(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(MAX_N_ENV_VAR)
    return int(env) if env else DEFAULT_HOCHSTER_MAX_N


def _sign(k: int) -> int:
    return -1 if k & 1 else 1


def _homology_from_faces(faces, p: int | None) -> dict[int, int]:
    """Reduced homology dimensions of a complex given as the set of its
    face bitmasks (closed under subsets; 0 is the empty face).  Keys run
    from -1 to the dimension; zero entries are omitted."""
    if not faces:
        return {}
    by_dim: dict[int, list[int]] = {}
    for m in faces:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    top = max(by_dim)
    for k in by_dim:
        by_dim[k].sort()
    index = {k: {m: i for i, m in enumerate(by_dim[k])} for k in by_dim}

    # column lists: for each k-face, its boundary as (row in dim k-1, sign)
    cols: dict[int, list[list[tuple[int, int]]]] = {}
    for k in range(0, top + 1):
        prev = index[k - 1]
        col_list = []
        for m in by_dim[k]:
            entries = []
            sign = 1
            for b in iter_bits(m):
                entries.append((prev[m ^ (1 << b)], sign))
                sign = -sign
            col_list.append(entries)
        cols[k] = col_list

    for k in range(1, top + 1):
        for col in cols[k]:
            acc: dict[int, int] = {}
            for row_j, s in col:
                for row_i, s2 in cols[k - 1][row_j]:
                    acc[row_i] = acc.get(row_i, 0) + s * s2
            assert all(v == 0 for v in acc.values()), "boundary composed with boundary is nonzero"
        assertion_stats["boundary_squared"] += 1

    ranks = {k: 0 for k in range(top + 2)}
    for k in range(0, top + 1):
        rows: list[dict[int, int]] = [{} for _ in by_dim[k - 1]]
        for j, col in enumerate(cols[k]):
            for i, s in col:
                rows[i][j] = s
        ranks[k] = sparse_rank(rows, p)

    counts = {k: len(by_dim.get(k, ())) for k in range(-1, top + 1)}
    dims = {-1: counts[-1] - ranks[0]}
    for k in range(0, top + 1):
        dims[k] = counts[k] - ranks[k] - ranks[k + 1]

    euler_h = sum(_sign(k) * v for k, v in dims.items())
    euler_f = sum(_sign(k) * counts[k] for k in range(0, top + 1)) - 1
    assert euler_h == euler_f, "Euler characteristic mismatch"
    assertion_stats["euler"] += 1
    return {k: v for k, v in dims.items() if v}


_face_homology_cache: dict = {}


def _canonical_faces(faces) -> tuple:
    """Canonical key for a mask collection: compact the used bits, and
    identify a collection with its mirror image (homology is invariant
    under vertex permutations, and reflections are common here)."""
    union = 0
    for m in faces:
        union |= m
    pos = {b: i for i, b in enumerate(iter_bits(union))}
    width = len(pos)
    forward = sorted(sum(1 << pos[b] for b in iter_bits(m)) for m in faces)
    mirrored = sorted(
        sum(1 << (width - 1 - b) for b in iter_bits(m)) for m in forward
    )
    return tuple(min(forward, mirrored))


def homology_dims_cached(faces, p: int | None) -> dict[int, int]:
    key = (_canonical_faces(faces), p)
    hit = _face_homology_cache.get(key)
    if hit is None:
        hit = _homology_from_faces(faces, p)
        _face_homology_cache[key] = hit
    return hit


def _faces_from_facets(facet_masks) -> set[int]:
    faces: set[int] = set()
    for f in facet_masks:
        faces.update(submasks(f))
    return faces


def _complex_masks(cx: Complex) -> tuple[list[int], dict[int, int]]:
    idx = bit_index(cx.ambient)
    return [to_mask(f, idx) for f in cx.sorted_facets()], idx


def reduced_homology_dims(cx: Complex, field: Field = QQ) -> dict[int, int]:
    """dim H~_i for i = -1 .. dim, computed from boundary-map ranks over the
    given field.  The void complex gives all zeros."""
    if cx.is_void:
        return {}
    masks, _ = _complex_masks(cx)
    return dict(homology_dims_cached(_faces_from_facets(masks), field.p))


def _enumerate_faces(universe_mask: int, gen_masks) -> set[int]:
    """Subsets of the universe containing no generator support."""
    if any(g == 0 for g in gen_masks):
        return set()
    verts = list(iter_bits(universe_mask))
    gens = list(gen_masks)
    faces: set[int] = set()

    def extend(mask: int, start: int) -> None:
        faces.add(mask)
        for i in range(start, len(verts)):
            cand = mask | (1 << verts[i])
            if any(g & cand == g for g in gens):
                continue
            extend(cand, i + 1)

    extend(0, 0)
    return faces


def stanley_reisner_complex(ideal: SquarefreeIdeal, max_n: int = DEFAULT_SR_MAX_N) -> Complex:
    """Faces are the subsets of the ambient universe containing no
    generator's support; returned in facet representation."""
    universe = sorted(ideal.ambient)
    n = len(universe)
    if n > max_n:
        raise BoundExceededError(f"{n} vertices exceeds the Stanley-Reisner bound {max_n}")
    idx = bit_index(ideal.ambient)
    gens = [to_mask(g, idx) for g in ideal.gens]
    faces = _enumerate_faces((1 << n) - 1, gens)
    facets = []
    for m in faces:
        if any((m | (1 << b)) in faces for b in range(n) if not m >> b & 1):
            continue
        facets.append(frozenset(universe[b] for b in iter_bits(m)))
    return Complex(ideal.ambient, frozenset(facets))


def restrict(cx: Complex, vertices) -> Complex:
    """Subcomplex of all faces contained in the given vertex set."""
    Y = frozenset(vertices)
    if not Y <= cx.ambient:
        raise ValueError("restriction set must lie inside the ambient universe")
    if cx.is_void:
        return Complex(Y, frozenset())
    return make_complex((f & Y for f in cx.facets), ambient=Y)


@dataclass
class BettiTable:
    """Graded Betti numbers as a sparse (i, j) -> count map, tagged with the
    subject (ideal or quotient) and the coefficient field."""

    entries: dict = dc_field(default_factory=dict)
    subject: str = "ideal"
    field: Field = QQ

    def value(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def as_quotient(self) -> "BettiTable":
        if self.subject == "quotient":
            return BettiTable(dict(self.entries), "quotient", self.field)
        shifted = {(i + 1, j): v for (i, j), v in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(shifted, "quotient", self.field)

    def as_ideal(self) -> "BettiTable":
        if self.subject == "ideal":
            return BettiTable(dict(self.entries), "ideal", self.field)
        entries = {(i - 1, j): v for (i, j), v in self.entries.items() if (i, j) != (0, 0)}
        return BettiTable(entries, "ideal", self.field)

    def to_jsonable(self) -> dict:
        return {
            "subject": self.subject,
            "field": str(self.field),
            "entries": [
                {"i": i, "j": j, "value": v}
                for (i, j), v in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "BettiTable":
        fld = QQ if data["field"] == "Q" else gf(int(data["field"][3:-1]))
        entries = {(e["i"], e["j"]): e["value"] for e in data["entries"]}
        return cls(entries, data["subject"], fld)


def pd_from_betti(table: BettiTable) -> int:
    """Largest homological degree with a nonzero entry.  Conventions for the
    zero ideal: pd(I) = -1 and pd(R/I) = 0."""
    if not table.entries:
        return -1 if table.subject == "ideal" else 0
    return max(i for i, _ in table.entries)


_island_cache: dict = {}


def _island_key(island_mask: int, island_gens) -> tuple:
    pos = {b: i for i, b in enumerate(iter_bits(island_mask))}
    remapped = frozenset(sum(1 << pos[b] for b in iter_bits(g)) for g in island_gens)
    return (len(pos), remapped)


def _merge_islands(gens_in: list[int]) -> list[tuple[int, list[int]]]:
    islands: list[tuple[int, list[int]]] = []
    for g in gens_in:
        hits = [i for i, (mask, _) in enumerate(islands) if mask & g]
        if not hits:
            islands.append((g, [g]))
        else:
            mask, members = g, [g]
            for i in hits:
                mask |= islands[i][0]
                members.extend(islands[i][1])
            islands = [isl for i, isl in enumerate(islands) if i not in hits]
            islands.append((mask, members))
    return islands


def _join_dims(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    """Reduced homology of a simplicial join over a field:
    H~_k(A * B) = sum over i + j = k - 1 of H~_i(A) (x) H~_j(B)."""
    out: dict[int, int] = {}
    for i, va in a.items():
        for j, vb in b.items():
            k = i + j + 1
            out[k] = out.get(k, 0) + va * vb
    return out


def betti_tables_hochster(
    ideal: SquarefreeIdeal,
    fields=DEFAULT_FIELDS,
    max_n: int | None = None,
) -> dict[Field, BettiTable]:
    """Hochster's formula, evaluated for several fields in one sweep.

    Subsets Y with a vertex not covered by any generator inside Y restrict
    to cones and are skipped.  The remaining restriction splits as a join
    over the connected pieces of its generators, so homology is computed
    per piece (with caching) and convolved.
    """
    bound = hochster_max_n(max_n)
    universe = sorted(ideal.ambient)
    n = len(universe)
    if n > bound:
        raise BoundExceededError(f"{n} vertices exceeds the Hochster bound {bound}")
    fields = tuple(fields)
    tables = {f: BettiTable({}, "ideal", f) for f in fields}
    if ideal.is_zero:
        return tables
    idx = bit_index(ideal.ambient)
    gens = [to_mask(g, idx) for g in ideal.gens]

    for Y in range(1 << n):
        gens_in = [g for g in gens if g & Y == g]
        covered = 0
        for g in gens_in:
            covered |= g
        if covered != Y:
            continue
        islands = _merge_islands(gens_in)
        keys = [_island_key(mask, members) for mask, members in islands]
        for f in fields:
            missing = [
                (i, k) for i, k in enumerate(keys) if (k, f.p) not in _island_cache
            ]
            for i, k in missing:
                mask, members = islands[i]
                faces = _enumerate_faces(mask, members)
                _island_cache[(k, f.p)] = _homology_from_faces(faces, f.p)
            dims = {-1: 1}
            for k in keys:
                dims = _join_dims(dims, _island_cache[(k, f.p)])
                if not dims:
                    break
            j = Y.bit_count()
            entries = tables[f].entries
            for deg, d in dims.items():
                i = j - deg - 2
                if i >= 0 and d:
                    entries[(i, j)] = entries.get((i, j), 0) + d
    return tables


def betti_table_hochster(
    ideal: SquarefreeIdeal, field: Field = QQ, max_n: int | None = None
) -> BettiTable:
    return betti_tables_hochster(ideal, (field,), max_n)[field]


def char_independence_report(
    ideal: SquarefreeIdeal, fields=DEFAULT_FIELDS, max_n: int | None = None
) -> tuple[bool, list]:
    """Compare Betti tables across fields; returns (all agree, differing
    entries as (field_a, field_b, i, j, value_a, value_b))."""
    fields = tuple(fields)
    tables = betti_tables_hochster(ideal, fields, max_n)
    base = tables[fields[0]]
    diffs = []
    for f in fields[1:]:
        other = tables[f]
        for key in sorted(set(base.entries) | set(other.entries)):
            va, vb = base.entries.get(key, 0), other.entries.get(key, 0)
            if va != vb:
                diffs.append((fields[0], f, key[0], key[1], va, vb))
    return (not diffs, diffs)


def _reisner_cm(faces: set[int], p: int | None) -> bool:
    """Reisner's criterion on a face set: for every face s (including the
    empty one), H~_i(link(s)) = 0 for all i below the link dimension."""
    if not faces:
        return True
    links: dict[int, list[int]] = {}
    for tau in faces:
        for sigma in submasks(tau):
            links.setdefault(sigma, []).append(tau & ~sigma)
    for sigma, link_faces in links.items():
        link_dim = max(m.bit_count() for m in link_faces) - 1
        if link_dim <= 0:
            continue  # nothing below the top dimension to check
        dims = homology_dims_cached(set(link_faces), p)
        if any(deg < link_dim and d for deg, d in dims.items()):
            return False
    return True


_pure_link_cache: dict = {}


def _pure_homology_from_tops(tops: list[int], p: int | None) -> dict[int, int]:
    """Homology of the pure complex generated by the given top faces,
    cached on a canonical relabeling of the tops so that the face closure
    is only expanded on a miss."""
    key = (_canonical_faces(tops), p)
    hit = _pure_link_cache.get(key)
    if hit is None:
        faces: set[int] = set()
        for m in tops:
            faces.update(submasks(m))
        hit = _homology_from_faces(faces, p)
        _pure_link_cache[key] = hit
    return hit


def _edges_connected(edge_masks: list[int]) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edge_masks:
        bits = list(iter_bits(e))
        for b in bits:
            parent.setdefault(b, b)
        anchor = find(bits[0])
        for b in bits[1:]:
            parent[find(b)] = anchor
            anchor = find(anchor)
    roots = {find(b) for b in parent}
    return len(roots) <= 1


def _reisner_cm_pure(top_faces: list[int], p: int | None) -> bool:
    """Reisner's criterion for the pure complex generated by equal-sized
    top faces.  Links in a pure complex are pure, so a link whose top faces
    share a vertex is a cone and passes vacuously; a one-dimensional link
    only needs connectivity; the remaining links need their homology."""
    if not top_faces:
        return True
    size = top_faces[0].bit_count()
    link_tops: dict[int, list[int]] = {}
    for F in top_faces:
        for sigma in submasks(F):
            link_tops.setdefault(sigma, []).append(F & ~sigma)
    for sigma, tops in link_tops.items():
        link_dim = size - sigma.bit_count() - 1
        if link_dim <= 0:
            continue
        apex = tops[0]
        for m in tops[1:]:
            apex &= m
            if not apex:
                break
        if apex:
            continue
        if link_dim == 1:
            if not _edges_connected(tops):
                return False
            continue
        dims = _pure_homology_from_tops(tops, p)
        if any(deg < link_dim and d for deg, d in dims.items()):
            return False
    return True


def is_cohen_macaulay(cx: Complex, field: Field = QQ) -> bool:
    """Reisner's criterion over the given field."""
    if cx.is_void:
        return True
    masks, _ = _complex_masks(cx)
    return _reisner_cm(_faces_from_facets(masks), field.p)


def is_sequentially_cm(
    ideal: SquarefreeIdeal, field: Field = QQ, max_n: int = DEFAULT_SR_MAX_N
) -> bool:
    """Sequential Cohen-Macaulayness of R/I via the skeleton criterion:
    every pure i-skeleton of the Stanley-Reisner complex of I must be
    Cohen-Macaulay over the field."""
    if ideal.is_zero:
        return True
    universe = sorted(ideal.ambient)
    n = len(universe)
    if n > max_n:
        raise BoundExceededError(f"{n} vertices exceeds the bound {max_n}")
    idx = bit_index(ideal.ambient)
    gens = [to_mask(g, idx) for g in ideal.gens]
    faces = _enumerate_faces((1 << n) - 1, gens)
    if not faces:
        return True
    top = max(m.bit_count() for m in faces) - 1
    for i in range(top, -1, -1):
        generators = [m for m in faces if m.bit_count() == i + 1]
        if not _reisner_cm_pure(generators, field.p):
            return False
    return True


def clear_caches() -> None:
    _face_homology_cache.clear()
    _island_cache.clear()
    _pure_link_cache.clear()
