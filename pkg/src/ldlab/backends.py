"""Finite, exactly-decidable category backends.

Three carriers are supported:

* :class:`ThinBackend` -- a poset/quantale carrier: at most one morphism
  between any two objects, given by an order relation.  Diagram checks reduce
  to existence of the required order witnesses.
* :class:`MatrixBackend` -- objects are natural-number dimensions, morphisms
  are matrices over the prime field F_p.  All arithmetic is integer, mod p;
  no floating point anywhere.
* :class:`TableBackend` -- a finite category given by explicit hom sizes,
  identity ids and a composition table.

Objects are plain ints: an index into the carrier (thin/table) or a
dimension (matrix).  Morphisms carry a backend-specific exact payload.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Any

import numpy as np
from scipy import sparse as _sparse

DEFAULT_MAX_ENUM = 10**6

# Above this dimension, identity morphisms and Kronecker products are kept
# sparse; intermediate objects of derived composites can reach dimensions
# where dense storage is impossible while the morphisms stay near-diagonal.
SPARSE_DIM_THRESHOLD = 4096


def max_enum_default() -> int:
    """Enumeration bound; overridable via the LDLAB_MAX_ENUM env var."""
    raw = os.environ.get("LDLAB_MAX_ENUM")
    return int(raw) if raw else DEFAULT_MAX_ENUM


class MissingWitness(Exception):
    """A required morphism does not exist (thin order failure, absent table entry)."""

    def __init__(self, description: str):
        super().__init__(description)
        self.description = description


class CompositionError(Exception):
    """Attempt to compose morphisms whose domain/codomain do not match."""


class ScopeTooLarge(Exception):
    """A hom-set enumeration would exceed the configured bound."""

    def __init__(self, dom: int, cod: int, size: int, bound: int):
        super().__init__(
            f"hom({dom},{cod}) has {size} candidates, exceeding bound {bound}"
        )
        self.size = size
        self.bound = bound


@dataclass
class Mor:
    """A morphism: exact payload plus explicit (co)domain objects.

    Equality is exact and decidable: entrywise for matrices, id equality for
    table morphisms, and trivially true for parallel thin morphisms (payload
    None on both sides).
    """

    dom: int
    cod: int
    payload: Any = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Mor):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        a, b = self.payload, other.payload
        if _sparse.issparse(a) or _sparse.issparse(b):
            if a.shape != b.shape:
                return False
            return (a != b).nnz == 0 if _sparse.issparse(a) and \
                _sparse.issparse(b) else bool(np.array_equal(
                    a.toarray() if _sparse.issparse(a) else a,
                    b.toarray() if _sparse.issparse(b) else b))
        if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
            return isinstance(a, np.ndarray) and isinstance(b, np.ndarray) \
                and a.shape == b.shape and bool(np.array_equal(a, b))
        return a == b

    def __hash__(self):
        return hash(self.key())

    def key(self):
        """Hashable identity, used for set membership and deterministic sorting."""
        p = self.payload
        if _sparse.issparse(p):
            q = p.tocsr()
            p = (q.shape, q.indptr.tobytes(), q.indices.tobytes(),
                 q.data.tobytes())
        elif isinstance(p, np.ndarray):
            p = (p.shape, p.tobytes())
        return (self.dom, self.cod, p)

    def __repr__(self):
        if isinstance(self.payload, np.ndarray):
            return f"Mor({self.dom}->{self.cod}, {self.payload.tolist()})"
        return f"Mor({self.dom}->{self.cod}, {self.payload})"


class ThinBackend:
    """A thin category from an order relation on a finite carrier.

    `leq` is an n x n 0/1 matrix; there is a (unique) morphism a -> b iff
    leq[a][b].  Carrier labels are for display only.
    """

    kind = "thin-quantale"

    def __init__(self, carrier: list[str], leq: list[list[int]]):
        self.carrier = list(carrier)
        n = len(self.carrier)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("leq must be square over the carrier")
        self._leq = [[bool(v) for v in row] for row in leq]

    @property
    def n(self) -> int:
        return len(self.carrier)

    def objects(self) -> list[int]:
        return list(range(self.n))

    def leq(self, a: int, b: int) -> bool:
        return self._leq[a][b]

    def arrow(self, a: int, b: int) -> Mor:
        if not self._leq[a][b]:
            raise MissingWitness(
                f"no witness {self.carrier[a]} <= {self.carrier[b]}"
            )
        return Mor(a, b)

    def identity(self, a: int) -> Mor:
        return self.arrow(a, a)

    def compose(self, g: Mor, f: Mor) -> Mor:
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        return Mor(f.dom, g.cod)

    def hom(self, a: int, b: int, bound: int | None = None) -> list[Mor]:
        return [Mor(a, b)] if self._leq[a][b] else []

    def hom_size(self, a: int, b: int) -> int:
        return 1 if self._leq[a][b] else 0

    def describe(self) -> dict:
        return {"kind": self.kind, "carrier": self.carrier}


class MatrixBackend:
    """Matrices over the prime field F_p; objects are dimensions.

    The backend itself is infinite (any dimension is a valid object); checks
    are run over a declared finite object set carried by the scope.
    """

    kind = "matrix-field"

    def __init__(self, p: int, objects: list[int]):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError(f"p must be prime, got {p}")
        if any(d < 1 for d in objects):
            raise ValueError("dimensions must be >= 1")
        self.p = p
        self._objects = sorted(set(int(d) for d in objects))

    def objects(self) -> list[int]:
        return list(self._objects)

    def mat(self, dom: int, cod: int, array) -> Mor:
        a = np.asarray(array, dtype=np.int64) % self.p
        if a.shape != (cod, dom):
            raise ValueError(f"payload shape {a.shape} != ({cod},{dom})")
        return Mor(dom, cod, a)

    def identity(self, d: int) -> Mor:
        if d > SPARSE_DIM_THRESHOLD:
            return Mor(d, d, _sparse.identity(d, dtype=np.int64, format="csr"))
        return Mor(d, d, np.eye(d, dtype=np.int64))

    def zero(self, dom: int, cod: int) -> Mor:
        return Mor(dom, cod, np.zeros((cod, dom), dtype=np.int64))

    def compose(self, g: Mor, f: Mor) -> Mor:
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        a, b = g.payload, f.payload
        if max(f.dom, f.cod, g.cod) > SPARSE_DIM_THRESHOLD:
            a = a if _sparse.issparse(a) else _sparse.csr_matrix(a)
            b = b if _sparse.issparse(b) else _sparse.csr_matrix(b)
        prod = a @ b
        if _sparse.issparse(prod):
            prod = prod.tocsr()
            prod.data %= self.p
            prod.eliminate_zeros()
            if max(prod.shape) <= SPARSE_DIM_THRESHOLD:
                prod = prod.toarray()
        else:
            prod = np.asarray(prod) % self.p
        return Mor(f.dom, g.cod, prod)

    def kron(self, f: Mor, g: Mor) -> Mor:
        a, b = f.payload, g.payload
        if _sparse.issparse(a) or _sparse.issparse(b) or \
                max(f.dom * g.dom, f.cod * g.cod) > SPARSE_DIM_THRESHOLD:
            out = _sparse.kron(_sparse.csr_matrix(a), _sparse.csr_matrix(b),
                               format="csr")
            out.data %= self.p
            out.eliminate_zeros()
            if max(out.shape) <= SPARSE_DIM_THRESHOLD:
                out = out.toarray()
            return Mor(f.dom * g.dom, f.cod * g.cod, out)
        return Mor(f.dom * g.dom, f.cod * g.cod,
                   np.kron(a, b) % self.p)

    def hom_size(self, dom: int, cod: int) -> int:
        return self.p ** (dom * cod)

    def hom(self, dom: int, cod: int, bound: int | None = None) -> list[Mor]:
        bound = bound if bound is not None else max_enum_default()
        size = self.hom_size(dom, cod)
        if size > bound:
            raise ScopeTooLarge(dom, cod, size, bound)
        out = []
        for entries in itertools.product(range(self.p), repeat=dom * cod):
            a = np.array(entries, dtype=np.int64).reshape(cod, dom)
            out.append(Mor(dom, cod, a))
        return out

    def invert(self, f: Mor) -> Mor:
        """Two-sided inverse mod p via Gauss-Jordan; MissingWitness if singular."""
        if f.dom != f.cod:
            raise MissingWitness(f"non-square morphism {f!r} has no inverse")
        n = f.dom
        a = f.payload.copy() % self.p
        inv = np.eye(n, dtype=np.int64)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r, col] % self.p), None)
            if pivot is None:
                raise MissingWitness(f"singular matrix, no inverse: {f!r}")
            if pivot != col:
                a[[col, pivot]] = a[[pivot, col]]
                inv[[col, pivot]] = inv[[pivot, col]]
            scale = pow(int(a[col, col]), -1, self.p)
            a[col] = (a[col] * scale) % self.p
            inv[col] = (inv[col] * scale) % self.p
            for r in range(n):
                if r != col and a[r, col]:
                    factor = a[r, col]
                    a[r] = (a[r] - factor * a[col]) % self.p
                    inv[r] = (inv[r] - factor * inv[col]) % self.p
        return Mor(n, n, inv)

    def swap(self, a: int, b: int) -> Mor:
        """The symmetry a (x) b -> b (x) a permuting Kronecker factors."""
        m = np.zeros((b * a, a * b), dtype=np.int64)
        for i in range(a):
            for j in range(b):
                m[j * a + i, i * b + j] = 1
        return Mor(a * b, b * a, m)

    def describe(self) -> dict:
        return {"kind": self.kind, "p": self.p, "objects": self._objects}


class TableBackend:
    """A finite category given by explicit tables.

    * ``homs[(a, b)]`` -- number of morphisms a -> b (ids 0..k-1)
    * ``comp[(a, b, c)][g][f]`` -- id of g.f for f: a -> b, g: b -> c
    * ``identities[a]`` -- id of 1_a inside hom(a, a)
    """

    kind = "finite-table"

    def __init__(self, n_objects: int, homs: dict, comp: dict, identities: dict):
        self.n_objects = n_objects
        self.homs = dict(homs)
        self.comp = dict(comp)
        self.identities = dict(identities)

    def objects(self) -> list[int]:
        return list(range(self.n_objects))

    def mor(self, dom: int, cod: int, mid: int) -> Mor:
        k = self.homs.get((dom, cod), 0)
        if not (0 <= mid < k):
            raise MissingWitness(f"no morphism id {mid} in hom({dom},{cod})")
        return Mor(dom, cod, mid)

    def identity(self, a: int) -> Mor:
        if a not in self.identities:
            raise MissingWitness(f"no identity listed for object {a}")
        return Mor(a, a, self.identities[a])

    def compose(self, g: Mor, f: Mor) -> Mor:
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        table = self.comp.get((f.dom, f.cod, g.cod))
        if table is None:
            raise MissingWitness(
                f"no composition table for ({f.dom},{f.cod},{g.cod})"
            )
        return Mor(f.dom, g.cod, table[g.payload][f.payload])

    def hom_size(self, a: int, b: int) -> int:
        return self.homs.get((a, b), 0)

    def hom(self, a: int, b: int, bound: int | None = None) -> list[Mor]:
        return [Mor(a, b, i) for i in range(self.hom_size(a, b))]

    def invert(self, f: Mor) -> Mor:
        for g in self.hom(f.cod, f.dom):
            if self.compose(g, f) == self.identity(f.dom) and \
               self.compose(f, g) == self.identity(f.cod):
                return g
        raise MissingWitness(f"no two-sided inverse for {f!r}")

    def describe(self) -> dict:
        return {"kind": self.kind, "objects": self.n_objects}


def invert(backend, f: Mor) -> Mor:
    """Backend-dispatching two-sided inverse."""
    if isinstance(backend, ThinBackend):
        backend.arrow(f.cod, f.dom)  # raises if the reverse witness is absent
        return Mor(f.cod, f.dom)
    return backend.invert(f)


def seq(backend, *mors: Mor) -> Mor:
    """Compose a path written in diagram order: seq(f, g) is g after f."""
    out = mors[0]
    for m in mors[1:]:
        out = backend.compose(m, out)
    return out


@dataclass(frozen=True)
class Scope:
    """Finite quantifier range for checks, recorded in every report.

    ``objects``: object indices/dimensions to quantify over (None = the
    backend's declared object list).  ``max_enum`` bounds hom-set
    enumerations.  ``samples`` is the number of seeded pseudo-random
    morphisms drawn per hom-set when exhaustive enumeration is infeasible
    (matrix backend naturality checks); thin and table backends are always
    exhaustive.
    """

    objects: tuple | None = None
    max_enum: int | None = None
    samples: int = 3

    def objs(self, backend) -> list[int]:
        if self.objects is not None:
            return list(self.objects)
        return backend.objects()

    def bound(self) -> int:
        return self.max_enum if self.max_enum is not None else max_enum_default()

    def hom_sample(self, backend, dom: int, cod: int) -> list[Mor]:
        """Deterministic generator set for hom(dom, cod)."""
        if not isinstance(backend, MatrixBackend):
            return backend.hom(dom, cod)
        if backend.hom_size(dom, cod) <= self.bound() and \
           backend.hom_size(dom, cod) <= 64:
            return backend.hom(dom, cod)
        rng = np.random.default_rng((dom * 1000003 + cod * 101 + 7) % 2**32)
        out = [backend.zero(dom, cod)]
        if dom == cod:
            out.append(backend.identity(dom))
        for _ in range(self.samples):
            out.append(backend.mat(dom, cod,
                                   rng.integers(0, backend.p, (cod, dom))))
        seen, uniq = set(), []
        for m in out:
            if m.key() not in seen:
                seen.add(m.key())
                uniq.append(m)
        return uniq

    def describe(self, backend=None) -> dict:
        d = {
            "objects": list(self.objects) if self.objects is not None
            else (backend.objects() if backend is not None else None),
            "max_enum": self.bound(),
            "samples": self.samples,
        }
        if backend is not None:
            d["backend"] = backend.describe()
        return d
