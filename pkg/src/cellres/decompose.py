"""Irredundant irreducible decompositions and associated primes.

Three routes produce the same (unique) decomposition:

* ``decompose_scarf`` reads components off the ghosted Scarf facets,
  for generic ideals;
* ``decompose_minimal`` reads them off the facet labels of a minimal
  cellular resolution, for Artinian ideals;
* ``decompose_brute`` enumerates candidate exponent vectors directly
  and serves as the independent oracle for the other two.

Every result is verified on the spot: the components intersect back to
the ideal and none can be dropped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from cellres.complexes import VERTEX_CAP, LabeledComplex
from cellres.errors import (
    CapExceededError,
    NotArtinianError,
    NotGenericError,
    NotMinimalError,
    NotResolutionError,
    VerificationError,
)
from cellres.monomial import IrreducibleIdeal, MonomialIdeal, unit_ideal
from cellres.resolution import build_complex, is_minimal, is_resolution
from cellres.scarf import scarf_pairs

CANDIDATE_CAP = 10 ** 6

METHOD_SCARF = "scarf"
METHOD_MINIMAL = "minimal_resolution"
METHOD_BRUTE = "brute_force"


@dataclass(frozen=True)
class Decomposition:
    """An irredundant list of irreducible components, with provenance."""

    ideal: MonomialIdeal
    components: tuple
    method: str

    def intersection(self) -> MonomialIdeal:
        acc = unit_ideal(self.ideal.nvars)
        for c in self.components:
            acc = acc.intersect(c.as_ideal())
        return acc

    def is_irredundant(self) -> bool:
        if self.intersection() != self.ideal:
            return False
        for skip in range(len(self.components)):
            acc = unit_ideal(self.ideal.nvars)
            for i, c in enumerate(self.components):
                if i != skip:
                    acc = acc.intersect(c.as_ideal())
            if acc == self.ideal:
                return False
        return True

    def verify(self):
        if self.intersection() != self.ideal:
            raise VerificationError(f"{self.method}: components do not intersect to the ideal")
        if not self.is_irredundant():
            raise VerificationError(f"{self.method}: decomposition is redundant")


def decompose_scarf(M: MonomialIdeal, D: int | None = None,
                    cap: int = VERTEX_CAP) -> Decomposition:
    """Components from the ghosted Scarf facets; generic ideals only."""
    if not M.is_generic():
        raise NotGenericError("Scarf decomposition requires a generic ideal")
    components = tuple(sorted(p.annihilator() for p in scarf_pairs(M, D, cap)))
    if len(set(components)) != len(components):
        raise VerificationError("scarf: repeated component")
    dec = Decomposition(M, components, METHOD_SCARF)
    dec.verify()
    return dec


def decompose_minimal(M: MonomialIdeal, X: LabeledComplex,
                      cap: int = VERTEX_CAP) -> Decomposition:
    """Components from the facet labels of a minimal resolution of an
    Artinian ideal."""
    if not M.is_artinian():
        raise NotArtinianError("minimal-resolution decomposition needs an Artinian ideal")
    if not is_resolution(X, cap):
        raise NotResolutionError("the complex does not support a resolution")
    F = build_complex(X, M)
    if not is_minimal(F):
        raise NotMinimalError("the resolution is not minimal")
    components = tuple(sorted(IrreducibleIdeal(f.label) for f in X.facets()))
    dec = Decomposition(M, components, METHOD_MINIMAL)
    dec.verify()
    return dec


@lru_cache(maxsize=256)
def decompose_brute(M: MonomialIdeal, candidate_cap: int = CANDIDATE_CAP) -> Decomposition:
    """Oracle decomposition by direct enumeration.

    Scan candidate exponent vectors b (with b_i = 0 or b_i a degree some
    generator has in z_i: a component exponent can never be anything
    else, because shrinking the ideal at i must expel a generator), keep
    those whose irreducible ideal contains M, reduce to inclusion-minimal
    ideals, then drop components whose removal keeps the intersection
    equal to M.  Uniqueness of the irredundant decomposition makes the
    result order-independent; the scan order is canonical anyway, and
    the final verification would catch a wrongly narrowed scan loudly.
    """
    M.require_nonzero()
    if M.is_unit():
        return Decomposition(M, (), METHOD_BRUTE)
    n = M.nvars
    gens_exps = [g.exps for g in M.gens]
    value_sets = [sorted({0} | {g[i] for g in gens_exps if g[i] > 0}) for i in range(n)]
    total = 1
    for vs in value_sets:
        total *= len(vs)
    if total > candidate_cap:
        raise CapExceededError(f"{total} candidate vectors exceeds the cap {candidate_cap}")

    containing = []
    for b in itertools.product(*value_sets):
        if any(b) and all(any(bv and gv >= bv for gv, bv in zip(g, b)) for g in gens_exps):
            containing.append(b)

    def inside(c, b):
        # m^c contained in m^b as ideals
        return all(not cv or (bv and cv >= bv) for cv, bv in zip(c, b))

    minimal = sorted(b for b in containing
                     if not any(c != b and inside(c, b) for c in containing))

    kept = [IrreducibleIdeal(b) for b in minimal]
    for c in list(kept):
        rest = [o for o in kept if o != c]
        acc = unit_ideal(M.nvars)
        for o in rest:
            acc = acc.intersect(o.as_ideal())
        if acc == M:
            kept = rest

    dec = Decomposition(M, tuple(kept), METHOD_BRUTE)
    dec.verify()
    return dec


def associated_primes(M: MonomialIdeal):
    """Supports of the irredundant components, as a set of frozensets."""
    return {frozenset(c.support) for c in decompose_brute(M).components}


def primary_grouping(dec: Decomposition):
    """Intersect components sharing a support; keyed by that support.

    The groups intersect back to the ideal (checked).
    """
    groups = {}
    for c in dec.components:
        groups.setdefault(frozenset(c.support), []).append(c)
    out = {}
    for K in sorted(groups, key=lambda s: (len(s), sorted(s))):
        acc = unit_ideal(dec.ideal.nvars)
        for c in groups[K]:
            acc = acc.intersect(c.as_ideal())
        out[K] = acc
    acc = unit_ideal(dec.ideal.nvars)
    for ideal in out.values():
        acc = acc.intersect(ideal)
    if acc != dec.ideal:
        raise VerificationError("primary groups do not intersect to the ideal")
    return out
