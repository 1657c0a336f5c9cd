"""Dynkin Pi-systems, generated subroot systems, and Weyl equivalence.

A Pi-system is a linearly independent set of roots no two of which differ
by a root; it seeds a subroot system via integer-span intersection with the
ambient root set.  Linear algebra is exact rational throughout (Fraction),
and span membership additionally demands an integral solution.

The Weyl-equivalence search is a breadth-first walk of simple reflections
acting on canonicalized root sets.  Exploration order is the node index
order, so witness words are reproducible; every witness is re-applied and
checked before it is returned.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DifferenceIsRoot,
    LinearlyDependent,
    RootForgeError,
    SearchBudgetExceeded,
)
from .hermitian import HermitianMarking, RootClass, classify_root
from .rootsys import Root, RootSystem, is_positive, reflect, simple_reflect

WeylWord = tuple[Root, ...]

BFS_BUDGET_ENV = "ROOTFORGE_BFS_BUDGET"
BFS_BUDGET_DEFAULT = 3_000_000


@dataclass(frozen=True)
class PiSystem:
    """A validated Pi-system: use check_pi_system to construct."""

    system: RootSystem
    generators: tuple[Root, ...]


@dataclass(frozen=True)
class SubrootSystem:
    """roots = span_Z(basis) intersected with the ambient root set."""

    system: RootSystem
    roots: frozenset[Root]
    basis: tuple[Root, ...]


def _rational_solve(columns: list[Root], target) -> tuple[Fraction, ...] | None:
    """Solve sum x_k columns[k] = target exactly; None when inconsistent.

    Columns are assumed linearly independent, so a solution is unique.
    """
    n = len(target)
    k = len(columns)
    m = [[Fraction(columns[c][r]) for c in range(k)] + [Fraction(target[r])] for r in range(n)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(k):
        p = next((r for r in range(row, n) if m[r][col] != 0), None)
        if p is None:
            continue
        m[row], m[p] = m[p], m[row]
        pv = m[row][col]
        m[row] = [x / pv for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots.append((row, col))
        row += 1
    for r in range(row, n):
        if m[r][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for r, c in pivots:
        sol[c] = m[r][k]
    return tuple(sol)


def _dependency_witness(vectors: list[Root]) -> tuple[Fraction, ...] | None:
    """A nonzero rational combination summing to zero, or None if independent."""
    k = len(vectors)
    for drop in range(k):
        rest = vectors[:drop] + vectors[drop + 1:]
        sol = _rational_solve(rest, vectors[drop])
        if sol is not None:
            witness = list(sol[:drop]) + [Fraction(-1)] + list(sol[drop:])
            return tuple(witness)
    return None


def check_pi_system(system: RootSystem, generators) -> PiSystem:
    """Validate the two Pi-system conditions, with structured failures.

    Linear independence is checked first, so a set violating both
    conditions reports LinearlyDependent with its witness combination.
    """
    gens = tuple(system.require_root(g) for g in generators)
    if len(set(gens)) != len(gens):
        dup = next(g for i, g in enumerate(gens) if g in gens[:i])
        raise LinearlyDependent((dup,))
    witness = _dependency_witness(list(gens))
    if witness is not None:
        raise LinearlyDependent(witness)
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            diff = tuple(x - y for x, y in zip(a, b))
            if diff in system.roots:
                raise DifferenceIsRoot(a, b)
    return PiSystem(system=system, generators=gens)


def _det_inverse(m: list[list[int]]):
    """Exact determinant and inverse of a small integer matrix."""
    k = len(m)
    a = [[Fraction(m[i][j]) for j in range(k)] + [Fraction(int(i == j)) for j in range(k)]
         for i in range(k)]
    det = Fraction(1)
    for col in range(k):
        p = next((r for r in range(col, k) if a[r][col] != 0), None)
        if p is None:
            return Fraction(0), None
        if p != col:
            a[col], a[p] = a[p], a[col]
            det = -det
        det *= a[col][col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(k):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [row[k:] for row in a]
    return det, inv


def integer_membership_solver(gens: list[Root]):
    """Map a vector to its integer coordinates over ``gens``, or None.

    One-time pivot analysis turns each membership test into integer
    arithmetic: solve on a full-rank row subset by the adjugate, check
    divisibility, then verify against the whole matrix.
    """
    k = len(gens)
    n = len(gens[0])
    work = [[Fraction(gens[c][r]) for c in range(k)] for r in range(n)]
    rows: list[int] = []
    used = [False] * n
    for c in range(k):
        p = next((r for r in range(n) if not used[r] and work[r][c] != 0), None)
        if p is None:
            raise LinearlyDependent(tuple())
        rows.append(p)
        used[p] = True
        for r in range(n):
            if r != p and work[r][c] != 0:
                f = work[r][c] / work[p][c]
                work[r] = [a - f * b for a, b in zip(work[r], work[p])]
    square = [[gens[c][r] for c in range(k)] for r in rows]
    det, inv = _det_inverse(square)
    deti = int(det)
    adj = [[int(det * inv[i][j]) for j in range(k)] for i in range(k)]

    def solve(vec) -> tuple[int, ...] | None:
        sub = [vec[r] for r in rows]
        coords = []
        for i in range(k):
            num = sum(adj[i][j] * sub[j] for j in range(k))
            q, rem = divmod(num, deti)
            if rem:
                return None
            coords.append(q)
        for r in range(n):
            if sum(gens[c][r] * coords[c] for c in range(k)) != vec[r]:
                return None
        return tuple(coords)

    return solve


def generate(pi: PiSystem) -> SubrootSystem:
    """Integer span of the generators intersected with the ambient roots."""
    system = pi.system
    gens = list(pi.generators)
    if not gens:
        return SubrootSystem(system=system, roots=frozenset(), basis=())
    solve = integer_membership_solver(gens)
    members = {r for r in system.roots if solve(r) is not None}
    return SubrootSystem(system=system, roots=frozenset(members), basis=pi.generators)


def span_subsystem(system: RootSystem, generators) -> SubrootSystem:
    """generate() for a raw generator list, validating the Pi conditions."""
    return generate(check_pi_system(system, generators))


def positive_basis(sub: SubrootSystem) -> tuple[Root, ...]:
    """Simple roots of the subsystem with respect to ambient positivity.

    These are the ambient-positive members not expressible as a sum of two
    ambient-positive members; they form a basis and regenerate the subsystem.
    """
    if not sub.roots:
        raise RootForgeError("positive_basis of an empty subsystem")
    pos = sorted(r for r in sub.roots if is_positive(r))
    pos_set = set(pos)
    simple = []
    for r in pos:
        decomposable = any(
            tuple(x - y for x, y in zip(r, s)) in pos_set
            for s in pos
            if s != r and all(a >= b for a, b in zip(r, s))
        )
        if not decomposable:
            simple.append(r)
    return tuple(sorted(simple, key=lambda r: (sum(r), r)))


def rebase_hermitian(m: HermitianMarking, sub: SubrootSystem):
    """Positive basis plus compact/noncompact marks per basis element.

    The basis diagram never has two noncompact nodes in one connected
    component; that property is re-checked here rather than trusted.
    """
    basis = positive_basis(sub)
    marks = tuple(classify_root(m, b) for b in basis)
    system = m.system
    n = len(basis)
    adj = [[system.inner(basis[i], basis[j]) != 0 for j in range(n)] for i in range(n)]
    seen = [False] * n
    for s in range(n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and adj[i][j] and not seen[j]:
                    seen[j] = True
                    comp.append(j)
                    stack.append(j)
        nc = sum(1 for i in comp if marks[i] is not RootClass.COMPACT)
        if nc > 1:
            raise RootForgeError(
                "internal: rebased component with two noncompact roots"
            )
    return basis, marks


def apply_word(system: RootSystem, word, roots) -> frozenset[Root]:
    """Apply reflections left-to-right to a collection of roots."""
    out = {system.require_root(r) for r in roots}
    for w in word:
        out = {reflect(system, w, r) for r in out}
    return frozenset(out)


def apply_word_to_root(system: RootSystem, word, root) -> Root:
    """Apply reflections left-to-right to a single root."""
    current = system.require_root(root)
    for w in word:
        current = reflect(system, w, current)
    return current


def _bfs_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BFS_BUDGET_ENV)
    return int(env) if env else BFS_BUDGET_DEFAULT


def weyl_equivalent(
    system: RootSystem,
    a: SubrootSystem,
    b: SubrootSystem,
    budget: int | None = None,
) -> WeylWord | None:
    """A word w of simple reflections with w(a.roots) = b.roots, or None.

    Breadth-first over the orbit of a.roots under simple reflections; ties
    broken by node index, states canonicalized as sorted tuples.  Raises
    SearchBudgetExceeded if the orbit walk passes the configured budget.
    """
    start = tuple(sorted(a.roots))
    goal = tuple(sorted(b.roots))
    if start == goal:
        return ()
    if len(start) != len(goal):
        return None
    limit = _bfs_budget(budget)
    n = system.rank
    parents: dict[tuple, tuple | None] = {start: None}
    queue = [start]
    head = 0
    found = None
    while head < len(queue) and found is None:
        state = queue[head]
        head += 1
        for i in range(n):
            nxt = tuple(sorted(simple_reflect(system, i, r) for r in state))
            if nxt in parents:
                continue
            parents[nxt] = (state, i)
            if len(parents) > limit:
                raise SearchBudgetExceeded(len(parents))
            if nxt == goal:
                found = nxt
                break
            queue.append(nxt)
    if found is None:
        return None
    rev = []
    cur = found
    while parents[cur] is not None:
        prev, i = parents[cur]
        rev.append(i)
        cur = prev
    word = tuple(system.simple(i) for i in reversed(rev))
    if apply_word(system, word, tuple(a.roots)) != b.roots:
        raise RootForgeError("internal: witness word failed verification")
    return word
