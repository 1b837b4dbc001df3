"""Aggregate verification of every structural property on one map."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import matroids, selections


def _fmt_set(s):
    return "{%s}" % ",".join(str(e) for e in sorted(s))


def _fmt_witness(witness):
    if witness is None:
        return ""
    f1, f2, x = witness
    return "F1=%s F2=%s x=%s" % (_fmt_set(f1), _fmt_set(f2), x)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    """Deterministic summary of one map and its theorem checks."""

    map_name: str
    n_edges: int
    n_vertices: int
    n_faces: int
    euler_characteristic: int
    orientable: bool
    gamma_size: int
    k_size: int
    lower_rank: int
    upper_rank: int
    checks: list = field(default_factory=list)

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def render(self):
        lines = [
            "map %s: m=%d |V|=%d |V*|=%d chi=%d orientable=%s"
            % (self.map_name, self.n_edges, self.n_vertices, self.n_faces,
               self.euler_characteristic, self.orientable),
            "families: |F_gamma|=%d |F_K|=%d ranks: lower=%d upper=%d"
            % (self.gamma_size, self.k_size, self.lower_rank, self.upper_rank),
        ]
        for c in self.checks:
            line = "%s %s" % ("PASS" if c.passed else "FAIL", c.name)
            if c.detail and not c.passed:
                line += "  [%s]" % c.detail
            lines.append(line)
        return "\n".join(lines) + "\n"


def verify_map(cmap, max_edges=selections.MAX_ENUM_EDGES):
    """Run every structural check against one map and build a Report."""
    f_gamma = selections.enumerate_feasible_gamma(cmap, max_edges=max_edges)
    f_k = selections.enumerate_feasible_k(cmap, max_edges=max_edges)
    checks = []

    def add(name, passed, detail=""):
        checks.append(CheckResult(name, bool(passed), detail))

    sel, swaps, initial = selections.find_hamiltonian(cmap, with_stats=True)
    add("gamma-nonempty", len(f_gamma) > 0, "no fully black Hamiltonian cycle found")
    add("gamma-contains-swap-search-result", sel.greens in f_gamma,
        "swap search produced %s" % _fmt_set(sel.greens))
    add("swap-search-within-bound",
        selections.is_fully_black_hamiltonian(cmap, sel) and swaps <= max(initial - 1, 0),
        "%d swaps from %d components" % (swaps, initial))

    ok, witness = matroids.check_symmetric_exchange(f_gamma)
    add("gamma-symmetric-exchange", ok, _fmt_witness(witness))
    ok, witness = matroids.check_symmetric_exchange(f_k)
    add("k-symmetric-exchange", ok, _fmt_witness(witness))
    add("gamma-subfamily-of-k", f_gamma.is_subfamily_of(f_k))

    lower = matroids.lower_matroid(f_gamma)
    upper = matroids.upper_matroid(f_gamma)
    trees = matroids.spanning_tree_bases(cmap.underlying_graph())
    cotrees = matroids.cotree_bases(cmap.dual_graph())
    add("lower-is-cycle-matroid", lower.bases == trees,
        "lower=%s trees=%s" % (lower.bases, trees))
    add("upper-is-cocycle-matroid", upper.bases == cotrees,
        "upper=%s cotrees=%s" % (upper.bases, cotrees))
    ok, witness = matroids.check_basis_exchange(lower.bases)
    add("lower-basis-exchange", ok, _fmt_witness(witness))
    ok, witness = matroids.check_basis_exchange(upper.bases)
    add("upper-basis-exchange", ok, _fmt_witness(witness))

    add("k-matroids-match-gamma",
        matroids.lower_matroid(f_k).bases == lower.bases
        and matroids.upper_matroid(f_k).bases == upper.bases)
    add("rank-gap-is-2-minus-chi", matroids.rank_gap_check(cmap, f_gamma),
        "gap=%d chi=%d" % (upper.rank - lower.rank, cmap.euler_characteristic()))

    parities = {len(s) % 2 for s in f_gamma}
    if cmap.is_orientable():
        add("parity-uniform-when-orientable", len(parities) == 1,
            "cardinalities %s" % f_gamma.cardinalities())
    else:
        add("both-parities-when-nonorientable", len(parities) == 2,
            "cardinalities %s" % f_gamma.cardinalities())

    return Report(
        map_name=cmap.name,
        n_edges=cmap.n_edges,
        n_vertices=len(cmap.vertex_cycles),
        n_faces=len(cmap.face_cycles),
        euler_characteristic=cmap.euler_characteristic(),
        orientable=cmap.is_orientable(),
        gamma_size=len(f_gamma),
        k_size=len(f_k),
        lower_rank=lower.rank,
        upper_rank=upper.rank,
        checks=checks,
    )
