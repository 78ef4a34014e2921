"""Finite quandles as dense operation tables.

A quandle is a set with a binary operation x |> y satisfying, for all
x, y, z:

    x |> x = x                      (idempotency)
    y -> x |> y ... each column of the table is a bijection
                                    (right translations invert)
    (x |> y) |> z = (x |> z) |> (y |> z)
                                    (self-distributivity)

Tables are numpy arrays indexed rhd[x, y] = x |> y over elements 0..n-1.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import Automorphism, FiniteGroup

INNER_GROUP_CAP = 64
INNER_CLOSURE_CAP = 1_000_000


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the three-axiom scan, with a witness for each failure.

    Witnesses: idempotency gives the offending x; right invertibility gives
    (y, x1, x2) with x1 |> y = x2 |> y; distributivity gives the triple
    (x, y, z) where the two sides differ.
    """

    idempotent: bool
    right_invertible: bool
    self_distributive: bool
    idempotency_witness: int | None = None
    invertibility_witness: tuple | None = None
    distributivity_witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.idempotent and self.right_invertible and self.self_distributive


def _coerce_table(table) -> np.ndarray:
    arr = np.asarray(table)
    if arr.dtype == object or arr.ndim != 2:
        raise ValueError("operation table must be a rectangular array of integers")
    if arr.shape[0] != arr.shape[1]:
        raise ValueError(f"operation table must be square, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("operation table must not be empty")
    arr = arr.astype(np.int64, copy=False)
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise ValueError(f"table entries must lie in 0..{n - 1}")
    return arr


def verify_quandle_axioms(table) -> AxiomReport:
    """Exhaustively scan a candidate table against the three quandle axioms."""
    rhd = _coerce_table(table)
    n = rhd.shape[0]
    idx = np.arange(n)

    diag = rhd[idx, idx]
    idem_ok = bool((diag == idx).all())
    idem_wit = None
    if not idem_ok:
        idem_wit = int(np.nonzero(diag != idx)[0][0])

    inv_ok = bool((np.sort(rhd, axis=0) == idx[:, None]).all())
    inv_wit = None
    if not inv_ok:
        for y in range(n):
            col = rhd[:, y]
            counts = np.bincount(col, minlength=n)
            dup = np.nonzero(counts > 1)[0]
            if dup.size:
                x1, x2 = np.nonzero(col == dup[0])[0][:2]
                inv_wit = (int(y), int(x1), int(x2))
                break

    lhs = rhd[rhd, :]                       # lhs[x,y,z] = (x|>y) |> z
    rhs = rhd[rhd[:, None, :], rhd[None, :, :]]   # rhs[x,y,z] = (x|>z) |> (y|>z)
    dist_ok = bool((lhs == rhs).all())
    dist_wit = None
    if not dist_ok:
        x, y, z = np.argwhere(lhs != rhs)[0]
        dist_wit = (int(x), int(y), int(z))

    return AxiomReport(
        idempotent=idem_ok,
        right_invertible=inv_ok,
        self_distributive=dist_ok,
        idempotency_witness=idem_wit,
        invertibility_witness=inv_wit,
        distributivity_witness=dist_wit,
    )


class AxiomViolation(ValueError):
    """Raised when a table offered as a quandle fails an axiom."""

    def __init__(self, report: AxiomReport, label: str = "table"):
        self.report = report
        bits = []
        if not report.idempotent:
            bits.append(f"idempotency fails at x={report.idempotency_witness}")
        if not report.right_invertible:
            y, x1, x2 = report.invertibility_witness
            bits.append(f"column {y} repeats: {x1}|>{y} == {x2}|>{y}")
        if not report.self_distributive:
            bits.append(f"self-distributivity fails at {report.distributivity_witness}")
        super().__init__(f"{label} is not a quandle: " + "; ".join(bits))


class Quandle:
    """A finite quandle: validated operation table plus display names."""

    def __init__(self, rhd, label: str = "Q", element_names=None, provenance=None):
        table = _coerce_table(rhd)
        report = verify_quandle_axioms(table)
        if not report.ok:
            raise AxiomViolation(report, label)
        self.rhd = table
        self.order = int(table.shape[0])
        self.label = label
        if element_names is None:
            element_names = [str(i) for i in range(self.order)]
        if len(element_names) != self.order or len(set(element_names)) != self.order:
            raise ValueError("element names must be distinct and match the order")
        self.element_names = [str(s) for s in element_names]
        self.provenance = dict(provenance) if provenance else {"family": "raw"}

    def op(self, x: int, y: int) -> int:
        return int(self.rhd[x, y])

    def name(self, x: int) -> str:
        return self.element_names[x]

    def index_of(self, name: str) -> int:
        try:
            return self.element_names.index(name)
        except ValueError:
            raise ValueError(f"{self.label} has no element named {name!r}") from None

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Quandle({self.label}, order={self.order})"


# -- constructors ----------------------------------------------------------


def trivial_quandle(n: int) -> Quandle:
    """x |> y = x for all y."""
    if n < 1:
        raise ValueError("trivial quandle needs n >= 1")
    rhd = np.repeat(np.arange(n)[:, None], n, axis=1)
    return Quandle(rhd, label=f"T{n}", provenance={"family": "trivial", "n": n})


def conjugation_quandle(g: FiniteGroup) -> Quandle:
    """x |> y = y^-1 x y on the underlying set of g."""
    idx = np.arange(g.order)
    left = g.mul[g.inv[idx][None, :], idx[:, None]]   # left[x, y] = y^-1 x
    rhd = g.mul[left, idx[None, :]]
    return Quandle(
        rhd,
        label=f"Conj({g.label})",
        element_names=g.element_names,
        provenance={"family": "conj", "group": g.label},
    )


def core_quandle(g: FiniteGroup) -> Quandle:
    """x |> y = y x^-1 y."""
    idx = np.arange(g.order)
    yx = g.mul[idx[None, :], g.inv[idx][:, None]]     # yx[x, y] = y x^-1
    rhd = g.mul[yx, idx[None, :]]
    return Quandle(
        rhd,
        label=f"Core({g.label})",
        element_names=g.element_names,
        provenance={"family": "core", "group": g.label},
    )


def dihedral_quandle(n: int) -> Quandle:
    """Residues mod n with a |> b = 2b - a."""
    if n < 1:
        raise ValueError("dihedral quandle needs n >= 1")
    idx = np.arange(n)
    rhd = (2 * idx[None, :] - idx[:, None]) % n
    return Quandle(rhd, label=f"R{n}", provenance={"family": "dihedral", "n": n})


def alexander_quandle(g: FiniteGroup, t: Automorphism) -> Quandle:
    """x |> y = t(x) + y - t(y) on an abelian group."""
    if not g.is_abelian():
        raise ValueError("Alexander quandles need an abelian group")
    if t.group is not g:
        raise ValueError("automorphism belongs to a different group")
    tx = t.mapping
    rhd = g.mul[g.mul[tx[:, None], np.arange(g.order)[None, :]], g.inv[tx][None, :]]
    return Quandle(
        rhd,
        label=f"Alex({g.label})",
        element_names=g.element_names,
        provenance={
            "family": "alexander",
            "group": g.label,
            "automorphism": [int(v) for v in t.mapping],
        },
    )


def generalized_alexander_quandle(g: FiniteGroup, phi: Automorphism) -> Quandle:
    """x |> y = phi(x y^-1) y on any group, abelian or not."""
    if phi.group is not g:
        raise ValueError("automorphism belongs to a different group")
    idx = np.arange(g.order)
    xyinv = g.mul[idx[:, None], g.inv[idx][None, :]]
    rhd = g.mul[phi.mapping[xyinv], idx[None, :]]
    return Quandle(
        rhd,
        label=f"GAlex({g.label})",
        element_names=g.element_names,
        provenance={
            "family": "gen_alexander",
            "group": g.label,
            "automorphism": [int(v) for v in phi.mapping],
        },
    )


# -- translations and the inner action --------------------------------------


class RightTranslation:
    """The map x -> x |> b for a fixed b; always a quandle automorphism."""

    def __init__(self, quandle: Quandle, b: int):
        if not 0 <= b < quandle.order:
            raise ValueError("translation element out of range")
        self.quandle = quandle
        self.b = b
        self.perm = quandle.rhd[:, b].copy()
        rhd = quandle.rhd
        lhs = self.perm[rhd]
        rhs = rhd[self.perm[:, None], self.perm[None, :]]
        if not (lhs == rhs).all():
            x, y = np.argwhere(lhs != rhs)[0]
            raise AssertionError(
                f"right translation by {b} is not an automorphism at ({x}, {y})"
            )

    def __call__(self, x: int) -> int:
        return int(self.perm[x])

    def as_tuple(self) -> tuple:
        return tuple(int(v) for v in self.perm)

    def order(self) -> int:
        power = self.perm
        ident = np.arange(self.perm.size)
        k = 1
        while not (power == ident).all():
            power = self.perm[power]
            k += 1
        return k

    def __repr__(self) -> str:
        return f"RightTranslation({self.quandle.label}, b={self.b})"


def right_translation(q: Quandle, b: int) -> RightTranslation:
    return RightTranslation(q, b)


class PermGroup:
    """A permutation group on 0..degree-1, stored as the full member set."""

    def __init__(self, degree: int, members, generators=None):
        self.degree = degree
        self.members = tuple(sorted({tuple(int(v) for v in p) for p in members}))
        self.generators = tuple(tuple(int(v) for v in p) for p in (generators or ()))
        ident = tuple(range(degree))
        if ident not in set(self.members):
            raise ValueError("permutation group must contain the identity")

    @property
    def order(self) -> int:
        return len(self.members)

    def orbit(self, x: int) -> tuple:
        return tuple(sorted({p[x] for p in self.members}))

    def orbits(self) -> list[tuple]:
        seen, out = set(), []
        for x in range(self.degree):
            if x in seen:
                continue
            orb = self.orbit(x)
            seen.update(orb)
            out.append(orb)
        return out

    def __contains__(self, perm) -> bool:
        return tuple(int(v) for v in perm) in set(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"


def inner_group(q: Quandle, cap: int = INNER_GROUP_CAP,
                closure_cap: int = INNER_CLOSURE_CAP) -> PermGroup:
    """Group generated by all right translations, closed under composition.

    Worklist closure over composition; inverses come for free in a finite
    setting.  closure_cap bounds the member count as a safety net.
    """
    if q.order > cap:
        raise ValueError(f"inner group computation capped at order <= {cap}")
    gens = []
    seen_gen = set()
    for b in range(q.order):
        p = tuple(int(v) for v in q.rhd[:, b])
        if p not in seen_gen:
            seen_gen.add(p)
            gens.append(p)
    ident = tuple(range(q.order))
    members = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for gph in gens:
                comp = tuple(gph[v] for v in p)
                if comp not in members:
                    members.add(comp)
                    nxt.append(comp)
                    if len(members) > closure_cap:
                        raise ValueError("inner group closure exceeded the safety cap")
        frontier = nxt
    return PermGroup(q.order, members, generators=gens)


def forward_orbit(q: Quandle, x: int) -> tuple:
    """All elements reachable from x by repeatedly applying |> (any operand)."""
    if not 0 <= x < q.order:
        raise ValueError("element out of range")
    seen = np.zeros(q.order, dtype=bool)
    seen[x] = True
    frontier = [x]
    while frontier:
        nxt = []
        for u in frontier:
            for v in q.rhd[u]:
                v = int(v)
                if not seen[v]:
                    seen[v] = True
                    nxt.append(v)
        frontier = nxt
    return tuple(int(v) for v in np.nonzero(seen)[0])


def is_involutory(q: Quandle) -> bool:
    """True when (x |> y) |> y = x for all x, y."""
    idx = np.arange(q.order)
    twice = q.rhd[q.rhd, idx[None, :]]
    return bool((twice == idx[:, None]).all())


# -- serialization -----------------------------------------------------------


def quandle_to_json(q: Quandle) -> dict:
    """Plain-dict form: order, names, row-major table, provenance."""
    return {
        "order": q.order,
        "names": list(q.element_names),
        "rhd": [int(v) for v in q.rhd.ravel()],
        "provenance": dict(q.provenance),
    }


def quandle_from_json(obj: dict) -> Quandle:
    """Rebuild a quandle from its dict form (table is re-verified)."""
    if not isinstance(obj, dict):
        raise ValueError("quandle JSON must be an object")
    for key in ("order", "names", "rhd"):
        if key not in obj:
            raise ValueError(f"quandle JSON missing key {key!r}")
    n = int(obj["order"])
    flat = list(obj["rhd"])
    if len(flat) != n * n:
        raise ValueError(f"rhd must hold {n * n} entries, got {len(flat)}")
    table = np.array(flat, dtype=np.int64).reshape(n, n)
    names = [str(s) for s in obj["names"]]
    prov = obj.get("provenance") or {"family": "raw"}
    label = str(prov.get("label", prov.get("family", "raw")))
    return Quandle(table, label=label, element_names=names, provenance=prov)
