"""Structure bundles layered on a backend, and the generic check harness.

All structures are immutable after construction and operate through small
callables (families indexed by objects).  A family may raise
:class:`~ldlab.backends.MissingWitness` at an index where the required
morphism does not exist (thin backends); checkers record that as a
counterexample of kind "missing" rather than an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .backends import Mor, MissingWitness
from .report import AxiomResult


@dataclass
class Monoidal:
    """Strict monoidal structure: tensor on objects/morphisms plus a unit."""

    backend: object
    tag: str                      # "star" or "par"
    unit: int
    obj: Callable[[int, int], int]
    mor: Callable[[Mor, Mor], Mor]


@dataclass
class Symmetry:
    """Braiding family c[A,B]: A (x) B -> B (x) A for one monoidal structure."""

    mon: Monoidal
    braid: Callable[[int, int], Mor]


@dataclass
class Functor:
    """Endofunctor data; contravariant functors send f: A -> B to F(B) -> F(A)."""

    backend: object
    obj: Callable[[int], int]
    mor: Callable[[Mor], Mor]
    contravariant: bool = False


@dataclass
class Comonad:
    """Comonad with optional monoidal structure for either tensor.

    ``phi``/``phi0`` make the underlying functor monoidal for the star
    tensor, ``psi``/``psi0`` for the par tensor.  Either pair may be None.
    """

    functor: Functor
    delta: Callable[[int], Mor]        # GA -> G^2 A
    eps: Callable[[int], Mor]          # GA -> A
    phi: Optional[Callable[[int, int], Mor]] = None    # GA * GB -> G(A * B)
    phi0: Optional[Callable[[], Mor]] = None           # I -> GI
    psi: Optional[Callable[[int, int], Mor]] = None    # GA <> GB -> G(A <> B)
    psi0: Optional[Callable[[], Mor]] = None           # J -> GJ

    @property
    def backend(self):
        return self.functor.backend

    def G(self, a: int) -> int:
        return self.functor.obj(a)

    def Gm(self, f: Mor) -> Mor:
        return self.functor.mor(f)


@dataclass
class Negation:
    """Negation data: contravariant functors with (co)evaluation families.

    e[A]:  S A * A -> J          n[A]:  I -> A <> S A
    ep[A]: A * S' A -> J         np[A]: I -> S' A <> A
    """

    S: Functor
    Sp: Functor
    e: Callable[[int], Mor]
    n: Callable[[int], Mor]
    ep: Callable[[int], Mor]
    np: Callable[[int], Mor]


@dataclass
class Lindist:
    """Two monoidal structures plus the linear distribution families.

    dl(a, b, c): a * (b <> c) -> (a * b) <> c
    dr(b, c, a): (b <> c) * a -> b <> (c * a)

    ``sym`` is an optional braiding for the par tensor; it is consumed only
    by the bialgebra comonad generator and never assumed by checkers.
    """

    star: Monoidal
    par: Monoidal
    dl: Callable[[int, int, int], Mor]
    dr: Callable[[int, int, int], Mor]
    sym: Optional[Symmetry] = None

    @property
    def backend(self):
        return self.star.backend


@dataclass
class StarAutonomous:
    """Star-autonomous structure: one tensor, two star operations.

    ``w1[A]: A -> S'SA`` and ``w2[A]: SS'A -> A`` witness the equivalence
    S -| S'.  ``eAB(a, b): S(a (x) b) (x) a -> S b`` and
    ``epBA(b, a): b (x) S'(a (x) b) -> S' a`` are the evaluation morphisms
    determining the currying bijection hom(A (x) B, SC) ~ hom(A, S(B (x) C)).
    """

    mon: Monoidal
    S: Functor
    Sp: Functor
    w1: Callable[[int], Mor]
    w2: Callable[[int], Mor]
    eAB: Callable[[int, int], Mor]
    epBA: Callable[[int, int], Mor]

    @property
    def backend(self):
        return self.mon.backend


@dataclass
class NegLift:
    """Lifting transformations nu[A]: SA -> GSGA and nu'[A]: S'A -> GS'GA."""

    nu: Callable[[int], Mor]
    nup: Callable[[int], Mor]


@dataclass(frozen=True)
class Coalgebra:
    """An Eilenberg-Moore object: carrier with coaction gamma: A -> GA."""

    carrier: int
    gamma: Mor

    def key(self):
        return (self.carrier, self.gamma.key())


@dataclass
class Bialgebra:
    """Bialgebra with respect to the par tensor of a symmetric bundle.

    The comultiplication/counit are named d/cu: the comonad built from the
    bialgebra owns the names delta/eps.
    """

    carrier: int
    mul: Mor        # B <> B -> B
    unit: Mor       # J -> B
    d: Mor          # B -> B <> B
    cu: Mor         # B -> J


@dataclass
class HopfAlgebra:
    """Bialgebra for the star-autonomous tensor, plus an antipode."""

    carrier: int
    mul: Mor
    unit: Mor
    d: Mor
    cu: Mor
    antipode: Mor   # H -> H


class StructureMissing(Exception):
    """A check was requested for structure the bundle does not carry."""


class PreconditionFailure(Exception):
    """A construction's precondition check failed; carries the report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class Check:
    """Accumulator for one axiom: equality and existence checks over tuples.

    Thin backends distinguish two failure modes: "missing" (an arrow in one
    of the composites does not exist) versus "mismatch" (parallel witnesses
    differ, impossible on a thin backend but decisive elsewhere).
    """

    def __init__(self, axiom: str):
        self.res = AxiomResult(axiom=axiom)

    def eq(self, at, lhs: Callable[[], Mor], rhs: Callable[[], Mor]) -> bool:
        self.res.checked += 1
        try:
            l = lhs()
        except MissingWitness as m:
            self._fail(at, f"missing (left): {m.description}")
            return False
        try:
            r = rhs()
        except MissingWitness as m:
            self._fail(at, f"missing (right): {m.description}")
            return False
        if l.dom != r.dom or l.cod != r.cod:
            self._fail(at, f"type mismatch: {l.dom}->{l.cod} vs {r.dom}->{r.cod}")
            return False
        if l != r:
            self._fail(at, "mismatch")
            return False
        return True

    def holds(self, at, cond: bool, reason: str = "failed") -> bool:
        self.res.checked += 1
        if not cond:
            self._fail(at, reason)
        return cond

    def exists(self, at, thunk: Callable[[], Mor]) -> bool:
        self.res.checked += 1
        try:
            thunk()
            return True
        except MissingWitness as m:
            self._fail(at, f"missing: {m.description}")
            return False

    def _fail(self, at, reason: str):
        self.res.passed = False
        self.res.counterexamples.append({"at": _at_key(at), "reason": reason})

    def done(self) -> AxiomResult:
        if self.res.checked == 0:
            self.res.vacuous = True
        return self.res


def _at_key(at):
    if isinstance(at, (list, tuple)):
        return list(at)
    return at
