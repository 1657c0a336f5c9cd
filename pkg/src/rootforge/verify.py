"""Replay and assert every computation the library is certified against.

Each check records a name, the expected and computed values, a pass flag,
and a short pointer to the computation it replays.  The overall report
passes only when every check passes.  Check groups:

* roots: root counts and positivity partition.
* lemma31: the coroot push-through pipeline and its reflection chain
  (group key kept stable for the --only filter).
* admissible: the {0,1,2} dominant-entry filter.
* chains: inclusion chains of su(2,2) in e6(-14) and their Weyl equivalence.
* catalog: table validation across all supported families.
* filters: tube/rank enumeration and the rank-sum simplicity bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import catalog, pisys, wdd
from .errors import RootForgeError
from .rootsys import family_system


@dataclass
class Check:
    group: str
    name: str
    expected: str
    actual: str
    passed: bool
    source: str

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        out = f"[{tag}] {self.group}/{self.name}: expected {self.expected}, got {self.actual}"
        if not self.passed:
            out += f"  ({self.source})"
        return out


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, group: str, name: str, expected, actual, source: str) -> None:
        exp, act = str(expected), str(actual)
        self.checks.append(
            Check(group=group, name=name, expected=exp, actual=act,
                  passed=exp == act, source=source)
        )

    def add_flag(self, group: str, name: str, ok: bool, detail: str, source: str) -> None:
        self.checks.append(
            Check(group=group, name=name, expected="ok",
                  actual="ok" if ok else detail, passed=ok, source=source)
        )

    def to_dict(self) -> dict:
        return {
            "overall": "pass" if self.overall else "fail",
            "checks": [
                {
                    "group": c.group,
                    "name": c.name,
                    "expected": c.expected,
                    "actual": c.actual,
                    "passed": c.passed,
                    "source": c.source,
                }
                for c in self.checks
            ],
        }


GROUPS = ("roots", "lemma31", "admissible", "chains", "catalog", "filters")

E6_BETA1 = (0, 1, 2, 2, 1, 1)
E6_BETA2 = (0, 0, 1, 1, 1, 1)
E6_GAMMA = (1, 2, 3, 2, 1, 2)
R3_ROOT = (0, 1, 2, 1, 0, 1)

# the four chain routes, outermost to innermost, with the composed
# generator sets displayed alongside each route
CHAIN_ROUTES = {
    ("e6(-14)", "su(2,4)", "su(2,3)", "su(2,2)"): [
        {E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)},
        {E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)},
        {E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)},
    ],
    ("e6(-14)", "so*(10)", "su(2,3)", "su(2,2)"): [
        {(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0), E6_BETA2},
        {E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)},
        {E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)},
    ],
    ("e6(-14)", "so(8,2)", "su(2,2)"): [
        {(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)},
        {R3_ROOT, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)},
    ],
    ("e6(-14)", "so(8,2)", "so(6,2)", "su(2,2)"): [
        {(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1)},
        {(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 1, 1, 0, 1)},
        {R3_ROOT, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)},
    ],
}

PIPELINE_REPLAY = [
    ((2,), (-2, 4, -3, 3, 0, 0)),
    ((3, 1), (2, -1, 3, 0, 0, -3)),
    ((6, 2), (1, 1, -1, 0, 0, 3)),
    ((3,), (1, 0, 1, -1, 0, 2)),
    ((4,), (1, 0, 0, 1, -1, 2)),
    ((5,), (1, 0, 0, 0, 1, 2)),
]


def _check_roots(report: VerificationReport) -> None:
    for family, rank, expected in (
        ("E", 6, 72), ("E", 7, 126),
        ("A", 1, 2), ("A", 3, 12), ("A", 5, 30),
        ("D", 4, 24), ("D", 5, 40),
    ):
        sys = family_system(family, rank)
        report.add("roots", f"{family}{rank} count", expected, len(sys.roots),
                   "reflection closure vs closed-form count")
    for family, rank in (("E", 6), ("E", 7)):
        sys = family_system(family, rank)
        report.add("roots", f"{family}{rank} positive half",
                   len(sys.roots) // 2, len(sys.positive_roots),
                   "positivity partitions the root set in half")


def _check_pipeline(report: VerificationReport) -> None:
    e6 = family_system("E", 6)
    h_sub = wdd.decompose_diagonal((3, -1, -3, 1))
    report.add("lemma31", "diagonal decomposition", (3, 2, -1),
               tuple(int(x) for x in h_sub.coords),
               "partial sums over positional type-A coroots")
    basis = (E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0))
    emb = wdd.embedding_from_basis(e6, basis)
    h_amb = wdd.push_coroot(emb, h_sub)
    report.add("lemma31", "pushed coroot", (2, 2, 6, 6, 3, 3),
               tuple(int(x) for x in h_amb.coords),
               "linear extension over the su(2,2) chain basis")
    w = wdd.weights_of(h_amb)
    report.add("lemma31", "weights", (2, -4, 1, 3, 0, 0),
               tuple(int(x) for x in w.weights),
               "weights on the simple nodes")
    current = w
    for step, (nodes, expected) in enumerate(PIPELINE_REPLAY, start=1):
        for node in nodes:
            current = wdd.reflect_weights(current, node - 1)
        report.add("lemma31", f"replay step {step}", expected,
                   tuple(int(x) for x in current.weights),
                   "reflection chain replay")
    dom, _word = wdd.dominate(w)
    report.add("lemma31", "dominant endpoint", (1, 0, 0, 0, 1, 2),
               tuple(int(x) for x in dom.weights),
               "library dominantization endpoint")


def _check_admissible(report: VerificationReport) -> None:
    e6 = family_system("E", 6)
    w = wdd.WeightedDiagram(system=e6, weights=tuple(Fraction(x) for x in (1, 0, 0, 0, 1, 2)))
    report.add("admissible", "unit diagram", True, wdd.sl2_admissible(w),
               "dominant entries lie in {0,1,2}")
    w2 = wdd.scale(w, 2)
    report.add("admissible", "doubled diagram", False, wdd.sl2_admissible(w2),
               "entry 4 falls outside {0,1,2}")


def _check_chains(report: VerificationReport) -> None:
    e6 = family_system("E", 6)
    chains = catalog.inclusion_chains("su(2,2)", "e6(-14)", 3)
    by_route = {}
    for c in chains:
        key = tuple(str(n) for n in c.names)
        by_route.setdefault(key, []).append(c)
    for route, step_sets in CHAIN_ROUTES.items():
        found = by_route.get(route, [])
        report.add("chains", " > ".join(route) + " found once", 1, len(found),
                   "chain route present exactly once")
        if len(found) == 1:
            got = [tuple(sorted(step.generators)) for step in found[0].steps]
            want = [tuple(sorted(s)) for s in step_sets]
            report.add("chains", " > ".join(route) + " systems", want, got,
                       "composed generator sets per step")
    # Weyl equivalence of the two bottom subsystems, with a checked witness
    top = pisys.span_subsystem(e6, (E6_BETA1, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)))
    bottom = pisys.span_subsystem(e6, (R3_ROOT, (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0)))
    word = pisys.weyl_equivalent(e6, bottom, top)
    report.add_flag("chains", "bottom systems Weyl-equivalent", word is not None,
                    "no word found", "breadth-first witness search")
    direct = ((0, 0, 0, 1, 1, 0),)
    mapped = pisys.apply_word(e6, direct, tuple(bottom.roots))
    report.add_flag("chains", "single reflection witness accepted",
                    mapped == top.roots, "reflection did not map the systems",
                    "one non-simple reflection maps one system onto the other")


def _check_catalog(report: VerificationReport) -> None:
    scans: list[tuple[str, str]] = []
    for p in range(1, 8):
        for q in range(p, 8):
            if p + q <= 8:
                scans.append((f"su({p},{q})", "su table"))
    for p in (4, 5, 6):
        scans.append((f"so*({2 * p})", "so* table"))
    for p in (6, 8):
        scans.append((f"so({p},2)", "so table"))
    scans.append(("e6(-14)", "e6 table"))
    scans.append(("e7(-25)", "e7 table"))
    for name, src in scans:
        try:
            rows = catalog.maximal_hermitian_regular_subalgebras(name)
            report.add_flag("catalog", f"{name} rows valid ({len(rows)})", True, "", src)
        except RootForgeError as e:
            report.add_flag("catalog", f"{name} rows valid", False, str(e), src)
    try:
        rows = catalog.maximal_hermitian_regular_subalgebras("e6(-14)")
        names = sorted(str(r.name) for r in rows)
        report.add("catalog", "e6(-14) table names",
                   sorted(["su(1,5)+su(1,1)", "su(1,2)+su(1,2)", "su(2,4)", "so*(10)", "so(8,2)"]),
                   names, "five rows of the e6 table")
        rows7 = catalog.maximal_hermitian_regular_subalgebras("e7(-25)")
        report.add("catalog", "e7(-25) table size", 7, len(rows7), "seven rows of the e7 table")
    except RootForgeError as e:
        report.add_flag("catalog", "exceptional tables", False, str(e), "table instantiation")


def _check_filters(report: VerificationReport) -> None:
    names = catalog.tube_rank_filter(3)
    got = sorted(str(n) for n in names if str(n) != "su(1,1)")
    expected = sorted(["su(2,2)", "su(3,3)", "so*(8)", "so*(12)", "sp(4,R)", "sp(6,R)", "so(n,2)"])
    report.add("filters", "tube rank three list", expected, got,
               "seven tube-type candidates of rank at most three")
    report.add("filters", "sp factors rank two", [(1,), (1, 1), (2,)],
               catalog.sp_factor_candidates(2), "three factor multisets")
    report.add("filters", "sp factors rank three",
               [(1,), (1, 1), (1, 1, 1), (2,), (2, 1), (3,)],
               catalog.sp_factor_candidates(3), "six factor multisets")
    simple_ok = catalog.rank_sum_bound(["su(2,2)"], "e7(-25)", 2)
    pair_bad = catalog.rank_sum_bound(["su(2,2)", "su(2,2)"], "e7(-25)", 2)
    report.add("filters", "rank sum simple factor", True, simple_ok,
               "one rank-two factor fits in rank three")
    report.add("filters", "rank sum two factors", False, pair_bad,
               "two rank-two factors exceed rank three")


_RUNNERS = {
    "roots": _check_roots,
    "lemma31": _check_pipeline,
    "admissible": _check_admissible,
    "chains": _check_chains,
    "catalog": _check_catalog,
    "filters": _check_filters,
}


def run_verification(only: str | None = None) -> VerificationReport:
    report = VerificationReport()
    if only is not None and only not in _RUNNERS:
        raise RootForgeError(f"unknown check group {only!r}; choose from {GROUPS}")
    for group in GROUPS:
        if only is None or group == only:
            _RUNNERS[group](report)
    return report
