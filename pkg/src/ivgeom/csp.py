"""Interval constraint store with a worklist propagation engine.

Variables are dense integer ids, each owning one interval domain.  The two
primitive constraints are Sum (x + y = z) and Prod (x * y = z); each has a
domain reduction operator (DRO) that intersects the domains with what the
other two imply, never removing a real solution.  ``Csp.propagate`` runs
the classic fixpoint loop: keep an active set of constraints, apply a
DRO, stop on an empty domain, re-activate every constraint watching a
variable whose domain changed.

Linear forms (sum of coefficient * variable terms) decompose into these
primitives via auxiliary variables; interval coefficients are ordinary
variables whose initial domain is the coefficient, so propagation may
narrow them like anything else.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .interval import EMPTY, WHOLE, Interval, add, div_rel, intersect, mul, sub

DEFAULT_MAX_DRO = 10**6

# A constraint is not re-activated for a domain change whose relative
# width reduction is below this floor; skipping a reduction never removes
# solutions, it only stops asymptotic crawls short of the iteration cap.
RELATIVE_SHRINK_FLOOR = 1e-15


@dataclass(frozen=True, slots=True)
class Sum:
    """x + y = z"""

    x: int
    y: int
    z: int

    @property
    def vars(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True, slots=True)
class Prod:
    """x * y = z"""

    x: int
    y: int
    z: int

    @property
    def vars(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


Constraint = Sum | Prod


class PropagationStatus(Enum):
    CONSISTENT = "consistent"
    EMPTY = "empty"
    CAP_EXCEEDED = "cap_exceeded"


@dataclass(frozen=True, slots=True)
class PropagationResult:
    status: PropagationStatus
    steps: int  # DRO applications performed


def _assign(domains: list[Interval], var: int, value: Interval, changed: set[int]) -> None:
    # Intersect on write so a constraint mentioning the same variable
    # twice composes soundly.
    new = intersect(domains[var], value)
    if new != domains[var]:
        domains[var] = new
        changed.add(var)


def shrink_sum(domains: list[Interval], c: Sum) -> set[int]:
    """Apply the Sum DRO; returns the ids whose domains shrank.

    All three updates evaluate against the domains as they were before the
    call:  X' = X n (Z - Y),  Y' = Y n (Z - X),  Z' = Z n (X + Y).
    """
    x, y, z = domains[c.x], domains[c.y], domains[c.z]
    changed: set[int] = set()
    _assign(domains, c.x, sub(z, y), changed)
    _assign(domains, c.y, sub(z, x), changed)
    _assign(domains, c.z, add(x, y), changed)
    return changed


def shrink_prod(domains: list[Interval], c: Prod) -> set[int]:
    """Apply the Prod DRO; returns the ids whose domains shrank.

    Sequential form with already-updated domains:
    X' = X n (Z rel/ Y),  Y' = Y n (Z rel/ X'),  Z' = Z n (X' * Y').
    Relational division keeps every factor with a witness multiplier, so
    no (x, y, z) with x * y = z inside the old domains is lost.
    """
    changed: set[int] = set()
    _assign(domains, c.x, div_rel(domains[c.z], domains[c.y]), changed)
    _assign(domains, c.y, div_rel(domains[c.z], domains[c.x]), changed)
    _assign(domains, c.z, mul(domains[c.x], domains[c.y]), changed)
    return changed


def shrink(domains: list[Interval], c: Constraint) -> set[int]:
    if isinstance(c, Sum):
        return shrink_sum(domains, c)
    return shrink_prod(domains, c)


def _significant(old: Interval, new: Interval) -> bool:
    """Did the domain shrink enough to justify waking its constraints?"""
    if new.is_empty:
        return True
    wo = old.width()
    if wo == 0.0:
        return False
    wn = new.width()
    if not (wo < float("inf")):
        return True  # any reduction of an unbounded domain is news
    return (wo - wn) > RELATIVE_SHRINK_FLOOR * wo


class Csp:
    """A store of interval domains plus Sum/Prod constraints."""

    def __init__(self) -> None:
        self.domains: list[Interval] = []
        self.constraints: list[Constraint] = []
        self.var_index: list[list[int]] = []  # var id -> constraint indices

    def new_var(self, domain: Interval = WHOLE) -> int:
        self.domains.append(domain)
        self.var_index.append([])
        return len(self.domains) - 1

    def constant(self, value: Interval) -> int:
        """Constants are variables whose initial domain is the constant."""
        return self.new_var(value)

    def add(self, c: Constraint) -> None:
        n = len(self.domains)
        for v in c.vars:
            if not 0 <= v < n:
                raise ValueError(f"constraint mentions unknown variable {v}")
        idx = len(self.constraints)
        self.constraints.append(c)
        for v in set(c.vars):
            self.var_index[v].append(idx)

    @property
    def failed(self) -> bool:
        return any(d.is_empty for d in self.domains)

    def propagate(self, max_dro: int | None = None) -> PropagationResult:
        """Run DROs to fixpoint, to an empty domain, or to the safety cap.

        Domains are narrowed in place.  On CAP_EXCEEDED the store is still
        sound (every reduction so far preserved all solutions), just not
        necessarily at fixpoint.
        """
        cap = DEFAULT_MAX_DRO if max_dro is None else max_dro
        if self.failed:
            return PropagationResult(PropagationStatus.EMPTY, 0)
        domains = self.domains
        queue: deque[int] = deque(range(len(self.constraints)))
        queued = [True] * len(self.constraints)
        steps = 0
        while queue:
            if steps >= cap:
                return PropagationResult(PropagationStatus.CAP_EXCEEDED, steps)
            ci = queue.popleft()
            queued[ci] = False
            c = self.constraints[ci]
            before = {v: domains[v] for v in c.vars}
            steps += 1
            changed = shrink(domains, c)
            if any(domains[v].is_empty for v in changed):
                return PropagationResult(PropagationStatus.EMPTY, steps)
            for v in changed:
                if not _significant(before[v], domains[v]):
                    continue
                # the applied constraint itself re-enters when it watches v
                for cj in self.var_index[v]:
                    if not queued[cj]:
                        queued[cj] = True
                        queue.append(cj)
        return PropagationResult(PropagationStatus.CONSISTENT, steps)

    def dump(self) -> str:
        """Debug listing, one ``var<i> = [lo, hi]`` line per variable."""
        return "\n".join(f"var{i} = {d}" for i, d in enumerate(self.domains))


def decompose_linear(
    csp: Csp,
    terms: Sequence[tuple[Interval, int]],
    rhs: Interval,
) -> int:
    """Decompose sum(coeff_i * var_i) = rhs into Sum/Prod primitives.

    Each term gets a coefficient variable fixed to its interval and a Prod
    for the partial product; a left fold of Sum constraints accumulates the
    total, and the final accumulator's domain is intersected with ``rhs``.
    Returns the accumulator's variable id.
    """
    if not terms:
        raise ValueError("decompose_linear needs at least one term")
    acc: int | None = None
    for coeff, var in terms:
        cvar = csp.constant(coeff)
        tvar = csp.new_var(WHOLE)
        csp.add(Prod(cvar, var, tvar))
        if acc is None:
            acc = tvar
        else:
            svar = csp.new_var(WHOLE)
            csp.add(Sum(acc, tvar, svar))
            acc = svar
    assert acc is not None
    csp.domains[acc] = intersect(csp.domains[acc], rhs)
    return acc
