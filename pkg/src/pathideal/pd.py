"""Projective dimension of path-ideal quotients by three routes.

* a closed form when the tree is a line graph;
* a leaf-split recursion, valid when the facet complex is
  properly-connected at every step;
* the Hochster-table route, which works unconditionally within bounds.

All values refer to pd(R/I) for the quotient.  The recursion on forests
uses variable-disjoint additivity: pd of a quotient by a sum of ideals in
disjoint variables is the sum of the component quotient pds (the Koszul
tensor argument), with components carrying the zero ideal contributing 0.
Vertex deletion can disconnect a tree, so this forest extension is what
makes the recursion total; cross-validate it against the Hochster route
with ``pd_auto(..., verify=True)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .homology import Field, QQ, betti_table_hochster, pd_from_betti
from .ideals import SquarefreeIdeal, ideal_intersect, ideal_sum
from .simplicial import facet_complex, is_properly_connected
from .trees import Forest, RootedTree, TreeOrForest, component_trees, delete_vertices, enumerate_paths, path_ideal


class NotProperlyConnectedError(RuntimeError):
    """The facet complex failed the properly-connected precondition."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"facet complex is not properly-connected, witness pair {pair}")


def pd_line_closed_form(n: int, t: int) -> int:
    """pd(R/I_t(L_n)) for the line graph on n vertices.

    With n = d (mod t+1): 2(n-d)/(t+1) when 0 <= d <= t-1, and
    (2n-(t-1))/(t+1) when d = t.  Values of n below t give the zero ideal.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    if n < t:
        return 0
    d = n % (t + 1)
    if d == t:
        return (2 * n - (t - 1)) // (t + 1)
    return 2 * (n - d) // (t + 1)


def leaf_generator(tree: RootedTree, t: int) -> tuple[int, ...]:
    """A generator path ending at a leaf of the tree: the chain of t
    vertices above a deepest vertex, smallest id on ties.  A deepest vertex
    always works since its level is at least t-1."""
    paths = enumerate_paths(tree, t)
    if not paths:
        raise ValueError("the path ideal is zero; no generator to pick")
    deepest = max(tree.level(p[-1]) for p in paths)
    return min(p for p in paths if tree.level(p[-1]) == deepest)


@dataclass(frozen=True)
class SplittingData:
    """The data of a leaf split at generator path w.

    off_path collects, over all facets meeting the path's facet in t-1
    vertices, the vertices outside the path; removed is its union with the
    facet.  minus_leaf and minus_zone are the forests left after deleting
    the path's final vertex, respectively the whole removed zone.
    """

    path: tuple
    facet: frozenset
    off_path: frozenset
    removed: frozenset
    minus_leaf: Forest
    minus_zone: Forest

    @property
    def off_path_count(self) -> int:
        return len(self.off_path)


def splitting_data(tree: RootedTree, t: int, path: tuple | None = None) -> SplittingData:
    if path is None:
        path = leaf_generator(tree, t)
    path = tuple(path)
    last = path[-1]
    if tree.degree(last) != 1:
        raise ValueError(f"splitting path must end at a leaf; vertex {last} has degree {tree.degree(last)}")
    facet = frozenset(path)
    facets = [frozenset(p) for p in enumerate_paths(tree, t)]
    if facet not in facets:
        raise ValueError("the given path is not a generator")
    off_path: set[int] = set()
    for other in facets:
        if other != facet and len(other & facet) == t - 1:
            off_path |= other - facet
    removed = frozenset(off_path) | facet
    return SplittingData(
        path=path,
        facet=facet,
        off_path=frozenset(off_path),
        removed=removed,
        minus_leaf=delete_vertices(tree, {last}),
        minus_zone=delete_vertices(tree, removed),
    )


def _ahu_key(tree: RootedTree) -> tuple:
    """Canonical encoding of the rooted shape; path ideals of isomorphic
    rooted trees differ only by relabeling, so pd may be memoized on it."""

    def encode(v: int) -> tuple:
        return tuple(sorted(encode(c) for c in tree.children[v]))

    return encode(tree.root)


@dataclass
class RecursionStep:
    tree_vertices: tuple
    path: tuple
    off_path: tuple
    removed: tuple


def _pd_forest(forest_or_tree: TreeOrForest, t: int, memo: dict, trace: list | None, stats: dict) -> int:
    comps = [c for c in component_trees(forest_or_tree) if c.height() >= t - 1]
    if len(comps) > 1:
        stats["forest_splits"] = stats.get("forest_splits", 0) + 1
    return sum(_pd_tree(c, t, memo, trace, stats) for c in comps)


def _pd_tree(tree: RootedTree, t: int, memo: dict, trace: list | None, stats: dict) -> int:
    key = (_ahu_key(tree), t)
    if key in memo:
        return memo[key]
    ok, pair = is_properly_connected(facet_complex(path_ideal(tree, t)))
    if not ok:
        raise NotProperlyConnectedError(pair)
    sd = splitting_data(tree, t)
    if trace is not None:
        trace.append(
            RecursionStep(
                tree_vertices=tuple(tree.vertices),
                path=sd.path,
                off_path=tuple(sorted(sd.off_path)),
                removed=tuple(sorted(sd.removed)),
            )
        )
    value = max(
        _pd_forest(sd.minus_leaf, t, memo, trace, stats),
        _pd_forest(sd.minus_zone, t, memo, trace, stats) + sd.off_path_count + 1,
    )
    memo[key] = value
    return value


def pd_recursive(g: TreeOrForest, t: int, trace: list | None = None) -> int:
    """pd(R/I_t) by leaf splitting.  Raises NotProperlyConnectedError as
    soon as any component along the recursion fails the precondition; the
    caller should then fall back to the Hochster route."""
    stats: dict = {}
    return _pd_forest(g, t, {}, trace, stats)


def pd_quotient_hochster(
    ideal: SquarefreeIdeal, field: Field = QQ, max_n: int | None = None
) -> int:
    return pd_from_betti(betti_table_hochster(ideal, field, max_n).as_quotient())


def verify_betti_splitting(
    J: SquarefreeIdeal, K: SquarefreeIdeal, field: Field = QQ, max_n: int | None = None
) -> bool:
    """Entrywise check of
    beta_{i,j}(J+K) = beta_{i,j}(J) + beta_{i,j}(K) + beta_{i-1,j}(J cap K)
    with all four tables computed over the given field."""
    if J.gens & K.gens:
        raise ValueError("the generator sets must be disjoint")
    ambient = J.ambient | K.ambient
    J2, K2 = J.with_ambient(ambient), K.with_ambient(ambient)
    total = ideal_sum(J2, K2)
    jk = ideal_intersect(J2, K2)
    t_total = betti_table_hochster(total, field, max_n)
    t_j = betti_table_hochster(J2, field, max_n)
    t_k = betti_table_hochster(K2, field, max_n)
    t_jk = betti_table_hochster(jk, field, max_n)
    keys = set(t_total.entries) | set(t_j.entries) | set(t_k.entries)
    keys |= {(i + 1, j) for i, j in t_jk.entries}
    for i, j in keys:
        expected = t_j.value(i, j) + t_k.value(i, j) + t_jk.value(i - 1, j)
        if t_total.value(i, j) != expected:
            return False
    return True


def is_line(tree: RootedTree) -> bool:
    """A line graph directed away from one end: every vertex has at most
    one child."""
    return all(len(c) <= 1 for c in tree.children.values())


@dataclass
class PdReport:
    value: int
    method: str
    values: dict = dc_field(default_factory=dict)
    trace: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)


def pd_auto(
    g: TreeOrForest,
    t: int,
    field: Field = QQ,
    method: str = "auto",
    verify: bool = False,
    max_n: int | None = None,
) -> PdReport:
    """Dispatch: closed form for line graphs, leaf-split recursion for
    properly-connected complexes, Hochster tables otherwise.  With
    ``verify`` every applicable method runs and must agree."""
    comps = component_trees(g)
    ideal = path_ideal(g, t)
    report = PdReport(value=0, method="zero")
    if ideal.is_zero:
        report.values["zero"] = 0
        if method in ("closed-form", "recursion", "hochster"):
            report.method = method
        return report

    values: dict[str, int] = {}
    notes: list[str] = []
    trace: list = []

    line_n = comps[0].n if len(comps) == 1 and is_line(comps[0]) else None

    def run(name: str) -> int:
        if name == "closed-form":
            if line_n is None:
                raise ValueError("closed form applies only to a single line graph")
            return pd_line_closed_form(line_n, t)
        if name == "recursion":
            return pd_recursive(g, t, trace=trace)
        if name == "hochster":
            return pd_quotient_hochster(ideal, field, max_n)
        raise ValueError(f"unknown method {name!r}")

    if method != "auto":
        value = run(method)
        values[method] = value
        chosen = method
    else:
        order = (["closed-form"] if line_n is not None else []) + ["recursion", "hochster"]
        chosen = None
        for name in order:
            try:
                values[name] = run(name)
                chosen = name
                break
            except NotProperlyConnectedError as exc:
                notes.append(f"recursion inapplicable: {exc}")
        if chosen is None:
            raise RuntimeError("no projective-dimension method applied")
        value = values[chosen]

    if verify:
        if line_n is not None and "closed-form" not in values:
            values["closed-form"] = run("closed-form")
        if "recursion" not in values:
            try:
                values["recursion"] = run("recursion")
            except NotProperlyConnectedError as exc:
                notes.append(f"recursion inapplicable: {exc}")
        if "hochster" not in values:
            values["hochster"] = run("hochster")
        if len(set(values.values())) > 1:
            raise RuntimeError(f"projective-dimension methods disagree: {values}")
        # sample alternative leaf-ending generators and re-run the recursion
        if "recursion" in values and len(comps) == 1:
            tree = comps[0]
            alternatives = [
                p for p in enumerate_paths(tree, t) if tree.degree(p[-1]) == 1
            ]
            for alt in alternatives:
                alt_value = _pd_with_first_split(tree, t, alt)
                if alt_value is not None and alt_value != values["recursion"]:
                    raise RuntimeError(
                        f"recursion value depends on the split choice: {alt} gives {alt_value}"
                    )

    return PdReport(value=value, method=chosen, values=values, trace=trace, notes=notes)


def _pd_with_first_split(tree: RootedTree, t: int, path: tuple) -> int | None:
    """Recursion value with a prescribed first split; None when some step
    fails the properly-connected precondition."""
    try:
        ok, pair = is_properly_connected(facet_complex(path_ideal(tree, t)))
        if not ok:
            return None
        sd = splitting_data(tree, t, path)
        stats: dict = {}
        memo: dict = {}
        return max(
            _pd_forest(sd.minus_leaf, t, memo, None, stats),
            _pd_forest(sd.minus_zone, t, memo, None, stats) + sd.off_path_count + 1,
        )
    except NotProperlyConnectedError:
        return None
