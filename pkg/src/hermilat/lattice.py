"""Finite bounded lattices carrying an arbitrary unary operation x -> x'.

The unary table is stored as given; whether it is antitone, involutive or an
orthocomplementation is something :func:`check_laws` decides, never an
assumption of the constructor.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .caps import check_cap
from .errors import (
    CongruenceCap,
    NotAHom,
    NotALattice,
    NotPolarityCML,
    PrimeIncompatibleCongruence,
    SizeCap,
)

ALL_LAWS = ("modular", "arguesian", "galois", "polarity", "involution", "ortho", "complemented")
LAW_ALIASES = {
    "mil": ("galois", "modular", "involution"),
    "cmil": ("galois", "modular", "involution", "complemented"),
    "mol": ("galois", "modular", "involution", "complemented", "ortho"),
    "polarity-cml": ("modular", "complemented", "galois", "polarity"),
    "all": ALL_LAWS,
}


class FiniteGaloisLattice:
    """Indexed finite lattice with join/meet tables and a unary table."""

    def __init__(self, leq, join, meet, prime, zero, one, labels=None, parent_index=None):
        self.leq = np.asarray(leq, dtype=bool)
        self.join = np.asarray(join, dtype=np.int64)
        self.meet = np.asarray(meet, dtype=np.int64)
        self.prime = np.asarray(prime, dtype=np.int64)
        self.zero = int(zero)
        self.one = int(one)
        self.size = len(self.prime)
        self.labels = list(labels) if labels is not None else [str(i) for i in range(self.size)]
        self.parent_index = tuple(parent_index) if parent_index is not None else None

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_order(cls, leq, prime, labels=None, parent_index=None):
        """Build join and meet tables from a partial order, validating it is a lattice."""
        leq = np.asarray(leq, dtype=bool)
        m = len(leq)
        check_cap("lattice_size", m, SizeCap)
        if m == 0:
            raise NotALattice("empty order")
        if not leq.diagonal().all():
            raise NotALattice("order is not reflexive")
        if (leq & leq.T & ~np.eye(m, dtype=bool)).any():
            raise NotALattice("order is not antisymmetric")
        if ((leq.astype(np.int64) @ leq.astype(np.int64) > 0) & ~leq).any():
            raise NotALattice("order is not transitive")
        join = _bound_table(leq)
        meet = _bound_table(leq.T)
        zero = int(np.flatnonzero(leq.all(axis=1))[0]) if leq.all(axis=1).any() else None
        one = int(np.flatnonzero(leq.all(axis=0))[0]) if leq.all(axis=0).any() else None
        if zero is None or one is None:
            raise NotALattice("order has no bounds")
        return cls(leq, join, meet, prime, zero, one, labels, parent_index)

    @classmethod
    def from_covers(cls, m, covers, prime, labels=None):
        leq = np.eye(m, dtype=bool)
        for i, j in covers:
            leq[i, j] = True
        # transitive closure by repeated squaring
        while True:
            nxt = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
            if (nxt == leq).all():
                break
            leq = nxt
        return cls.from_order(leq, prime, labels)

    @classmethod
    def from_join_table(cls, join, prime, labels=None, parent_index=None):
        join = np.asarray(join, dtype=np.int64)
        m = len(join)
        leq = join == np.arange(m)[None, :]
        lat = cls.from_order(leq, prime, labels, parent_index)
        if not (lat.join == join).all():
            raise NotALattice("join table disagrees with its own order")
        return lat

    # -- structure --------------------------------------------------------
    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteGaloisLattice(size={self.size})"

    def structure_key(self):
        """Hashable fingerprint of the underlying lattice (ignores x')."""
        return (self.size, self.join.tobytes(), self.meet.tobytes())

    def key(self):
        return self.structure_key() + (self.prime.tobytes(),)

    def strict_order(self):
        return self.leq & ~np.eye(self.size, dtype=bool)

    def covers(self):
        s = self.strict_order().astype(np.int64)
        between = (s @ s) > 0
        c = self.strict_order() & ~between
        return [tuple(map(int, ij)) for ij in zip(*np.nonzero(c))]

    def atoms(self):
        return [j for i, j in self.covers() if i == self.zero]

    def coatoms(self):
        return [i for i, j in self.covers() if j == self.one]

    def heights(self):
        """Length of the longest chain from 0 to each element."""
        order = sorted(range(self.size), key=lambda i: int(self.leq[:, i].sum()))
        h = [0] * self.size
        below = {j: [] for j in range(self.size)}
        for i, j in self.covers():
            below[j].append(i)
        for j in order:
            h[j] = max((h[i] + 1 for i in below[j]), default=0)
        return h

    def dimension(self):
        return self.heights()[self.one]

    def is_atomic(self):
        """Every element is the join of the atoms below it."""
        atoms = self.atoms()
        for x in range(self.size):
            acc = self.zero
            for p in atoms:
                if self.leq[p, x]:
                    acc = int(self.join[acc, p])
            if acc != x:
                return False
        return True

    def to_json(self):
        return {
            "elements": list(self.labels),
            "covers": [list(c) for c in self.covers()],
            "prime": [int(x) for x in self.prime],
            "zero": self.zero,
            "one": self.one,
        }


def _bound_table(leq):
    """Least-upper-bound table for the order ``leq`` (use leq.T for meets)."""
    m = len(leq)
    upcount = leq.sum(axis=1)
    table = np.empty((m, m), dtype=np.int64)
    for i in range(m):
        ub = leq[i][None, :] & leq  # row j: common upper bounds of i and j
        score = np.where(ub, upcount[None, :], -1)
        best = score.argmax(axis=1)
        if (score.max(axis=1) < 0).any():
            raise NotALattice(f"element {i} lacks a common upper bound")
        ok = (~ub | leq[best]).all(axis=1)
        if not ok.all():
            j = int(np.flatnonzero(~ok)[0])
            raise NotALattice(f"no least upper bound for ({i}, {j})")
        table[i] = best
    return table


# -- law checking -----------------------------------------------------------

@dataclass
class LawResult:
    law: str
    passed: bool
    witness: tuple = None
    mode: str = "exhaustive"
    checked: int = 0
    seed: int = None

    def to_json(self):
        return {
            "law": self.law,
            "passed": self.passed,
            "witness": None if self.witness is None else [int(x) for x in self.witness],
            "mode": self.mode,
            "checked": int(self.checked),
            "seed": self.seed,
        }


def expand_laws(laws):
    out = []
    for law in laws:
        for name in LAW_ALIASES.get(law, (law,)):
            if name not in ALL_LAWS:
                raise ValueError(f"unknown law {name!r}")
            if name not in out:
                out.append(name)
    return out


def check_laws(L, laws=ALL_LAWS, seed=0, arguesian_samples=10**6, arguesian_exhaustive_limit=10**9):
    """Evaluate the named laws; returns ``{law: LawResult}``.

    The Arguesian identity is checked on all 6-tuples when m^6 does not
    exceed ``arguesian_exhaustive_limit`` and on ``arguesian_samples``
    seeded random tuples otherwise.
    """
    out = {}
    for law in expand_laws(laws):
        if law == "arguesian":
            out[law] = check_arguesian(L, seed, arguesian_samples, arguesian_exhaustive_limit)
        else:
            out[law] = _CHECKERS[law](L)
    return out


def check_modular(L):
    J, M, leq = L.join, L.meet, L.leq
    m = L.size
    idx = np.arange(m)
    for a in range(m):
        cs = idx[leq[:, a]]  # c <= a
        lhs = M[a][J[:, cs]]  # rows b, cols c
        rhs = J[M[a][:, None], cs[None, :]]
        bad = lhs != rhs
        if bad.any():
            b, ci = map(int, np.argwhere(bad)[0])
            return LawResult("modular", False, (a, b, int(cs[ci])), checked=m**3)
    return LawResult("modular", True, checked=m**3)


def _arguesian_ok(J, M, leq, a0, a1, a2, b0, b1, b2):
    lhs = M[M[J[a0, b0], J[a1, b1]], J[a2, b2]]
    c0 = M[J[a1, a2], J[b1, b2]]
    c1 = M[J[a0, a2], J[b0, b2]]
    c2 = M[J[a0, a1], J[b0, b1]]
    c = M[c2, J[c0, c1]]
    rhs = J[M[a0, J[a1, c]], M[b0, J[b1, c]]]
    return leq[lhs, rhs]


def check_arguesian(L, seed=0, samples=10**6, exhaustive_limit=10**9):
    """(a0+b0)(a1+b1)(a2+b2) <= a0(a1+c) + b0(b1+c) with c = c2(c0+c1)."""
    J, M, leq = L.join, L.meet, L.leq
    m = L.size
    if m**6 <= exhaustive_limit:
        # loop over a prefix so each vectorised block stays near 1e6 tuples
        fixed = 0
        while m ** (6 - fixed) > 2_000_000 and fixed < 6:
            fixed += 1
        rest = 6 - fixed
        grids = np.meshgrid(*([np.arange(m)] * rest), indexing="ij", sparse=True)
        for prefix in np.ndindex(*([m] * fixed)):
            args = list(prefix) + list(grids)
            ok = _arguesian_ok(J, M, leq, *args)
            if not ok.all():
                tail = np.unravel_index(int(np.flatnonzero(~np.broadcast_to(ok, (m,) * rest))[0]), (m,) * rest)
                return LawResult("arguesian", False, tuple(prefix) + tuple(map(int, tail)), checked=m**6)
        return LawResult("arguesian", True, checked=m**6)
    rng = np.random.default_rng(seed)
    done = 0
    while done < samples:
        k = min(1_000_000, samples - done)
        t = rng.integers(0, m, size=(6, k))
        ok = _arguesian_ok(J, M, leq, *t)
        if not ok.all():
            i = int(np.flatnonzero(~ok)[0])
            return LawResult("arguesian", False, tuple(int(x) for x in t[:, i]), "sampled", done + i + 1, seed)
        done += k
    return LawResult("arguesian", True, mode="sampled", checked=samples, seed=seed)


def check_galois(L):
    P, leq = L.prime, L.leq
    if P[L.one] != L.zero:
        return LawResult("galois", False, (L.one,), checked=L.size**2)
    A = leq[:, P]  # A[x, y]: x <= y'
    bad = A & ~A.T
    if bad.any():
        x, y = map(int, np.argwhere(bad)[0])
        return LawResult("galois", False, (x, y), checked=L.size**2)
    return LawResult("galois", True, checked=L.size**2)


def check_polarity(L):
    g = check_galois(L)
    if not g.passed:
        return LawResult("polarity", False, g.witness, checked=g.checked)
    coatoms = set(L.coatoms())
    for p in L.atoms():
        if int(L.prime[p]) not in coatoms:
            return LawResult("polarity", False, (p,), checked=L.size)
    return LawResult("polarity", True, checked=L.size)


def check_involution(L):
    P = L.prime
    bad = np.flatnonzero(P[P] != np.arange(L.size))
    if len(bad):
        return LawResult("involution", False, (int(bad[0]),), checked=L.size)
    return LawResult("involution", True, checked=L.size)


def check_ortho(L):
    vals = L.meet[np.arange(L.size), L.prime]
    bad = np.flatnonzero(vals != L.zero)
    if len(bad):
        return LawResult("ortho", False, (int(bad[0]),), checked=L.size)
    return LawResult("ortho", True, checked=L.size)


def check_complemented(L):
    comp = (L.join == L.one) & (L.meet == L.zero)
    bad = np.flatnonzero(~comp.any(axis=1))
    if len(bad):
        return LawResult("complemented", False, (int(bad[0]),), checked=L.size**2)
    return LawResult("complemented", True, checked=L.size**2)


_CHECKERS = {
    "modular": check_modular,
    "galois": check_galois,
    "polarity": check_polarity,
    "involution": check_involution,
    "ortho": check_ortho,
    "complemented": check_complemented,
}


# -- congruences ------------------------------------------------------------

@dataclass(frozen=True)
class Congruence:
    """Partition of element indices; ``labels[i]`` is the least index in i's block."""

    labels: tuple

    def related(self, a, b):
        return self.labels[a] == self.labels[b]

    def blocks(self):
        out = {}
        for i, r in enumerate(self.labels):
            out.setdefault(r, []).append(i)
        return [out[r] for r in sorted(out)]

    def is_identity(self):
        return all(r == i for i, r in enumerate(self.labels))

    def is_total(self):
        return len(set(self.labels)) == 1

    def __le__(self, other):
        return all(other.labels[i] == other.labels[r] for i, r in enumerate(self.labels))

    def to_json(self):
        return {"blocks": self.blocks()}


def _canon(parent):
    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    roots = [find(i) for i in range(len(parent))]
    least = {}
    for i, r in enumerate(roots):
        least.setdefault(r, i)
    return Congruence(tuple(least[r] for r in roots))


def generate_congruence(L, pairs, base=None):
    """Least lattice congruence containing ``base`` and the given pairs."""
    m = L.size
    J = L.join.tolist()
    M = L.meet.tolist()
    parent = list(base.labels) if base is not None else list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    work = list(pairs)
    while work:
        a, b = work.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        parent[max(ra, rb)] = min(ra, rb)
        Ja, Jb, Ma, Mb = J[a], J[b], M[a], M[b]
        for z in range(m):
            work.append((Ja[z], Jb[z]))
            work.append((Ma[z], Mb[z]))
    return _canon(parent)


def identity_congruence(L):
    return Congruence(tuple(range(L.size)))


def total_congruence(L):
    return Congruence((0,) * L.size)


def congruence_join(L, a, b):
    pairs = [(i, r) for i, r in enumerate(b.labels) if i != r]
    return generate_congruence(L, pairs, base=a)


def is_congruence(L, theta):
    lab = np.asarray(theta.labels)
    rep = lab  # each element is related to its block representative
    for T in (L.join, L.meet):
        if not (lab[T] == lab[T[rep]]).all():
            return False
    return True


def prime_compatible(L, theta):
    lab = np.asarray(theta.labels)
    return bool((lab[L.prime] == lab[L.prime[lab]]).all())


@dataclass
class CongruenceReport:
    all: list
    monolith: object
    simple: bool
    sdi: bool
    strict_sdi: bool
    strict_simple: bool

    def to_json(self):
        return {
            "count": len(self.all),
            "congruences": [c.to_json() for c in self.all],
            "monolith": None if self.monolith is None else self.monolith.to_json(),
            "simple": self.simple,
            "sdi": self.sdi,
            "strict_sdi": self.strict_sdi,
            "strict_simple": self.strict_simple,
        }


def principal_congruences(L):
    """Principal congruences of covering pairs; every congruence is a join of these."""
    seen = {}
    for a, b in L.covers():
        th = generate_congruence(L, [(a, b)])
        seen.setdefault(th.labels, th)
    return list(seen.values())


def congruences(L, force_cap=False):
    check_cap("congruence_size", L.size, CongruenceCap, force=force_cap)
    delta = identity_congruence(L)
    gens = principal_congruences(L)
    found = {delta.labels: delta}
    frontier = [delta]
    while frontier:
        nxt = []
        for th in frontier:
            for g in gens:
                j = congruence_join(L, th, g)
                if j.labels not in found:
                    found[j.labels] = j
                    nxt.append(j)
        frontier = nxt
    allc = sorted(found.values(), key=lambda c: (len(c.blocks()) * -1, c.labels))
    nontrivial = [c for c in allc if not c.is_identity()]
    minimal = [c for c in nontrivial if not any(d is not c and d <= c for d in nontrivial)]
    monolith = minimal[0] if len(minimal) == 1 else None
    simple = L.size >= 2 and len(allc) == 2
    sdi = monolith is not None
    return CongruenceReport(
        all=allc,
        monolith=monolith,
        simple=simple,
        sdi=sdi,
        strict_sdi=sdi and prime_compatible(L, monolith),
        strict_simple=simple,
    )


def prime_image_congruence(L, theta):
    """theta' : a theta' b iff a' theta b'."""
    lab = np.asarray(theta.labels)
    img = lab[L.prime]
    parent = list(range(L.size))
    first = {}
    for i, v in enumerate(img.tolist()):
        if v in first:
            parent[i] = first[v]
        else:
            first[v] = i
    return _canon(parent)


# -- derived lattices -------------------------------------------------------

def quotient(L, theta):
    if not is_congruence(L, theta):
        raise ValueError("partition is not a lattice congruence")
    if not prime_compatible(L, theta):
        raise PrimeIncompatibleCongruence("a theta b does not imply a' theta b'")
    reps = sorted(set(theta.labels))
    pos = {r: i for i, r in enumerate(reps)}
    lab = theta.labels
    k = len(reps)
    join = [[pos[lab[int(L.join[a, b])]] for b in reps] for a in reps]
    prime = [pos[lab[int(L.prime[a])]] for a in reps]
    labels = ["[" + L.labels[r] + "]" for r in reps]
    Q = FiniteGaloisLattice.from_join_table(join, prime, labels)
    assert Q.size == k
    return Q


def canonical_map(L, theta):
    reps = sorted(set(theta.labels))
    pos = {r: i for i, r in enumerate(reps)}
    return [pos[theta.labels[i]] for i in range(L.size)]


def product(lattices, force_cap=False):
    sizes = [L.size for L in lattices]
    total = int(np.prod(sizes)) if sizes else 1
    check_cap("lattice_size", total, SizeCap, force=force_cap)
    tuples = list(np.ndindex(*sizes)) if sizes else [()]
    index = {t: i for i, t in enumerate(tuples)}
    join = np.empty((total, total), dtype=np.int64)
    meet = np.empty((total, total), dtype=np.int64)
    leq = np.ones((total, total), dtype=bool)
    comps = np.array(tuples, dtype=np.int64).reshape(total, len(sizes))
    # mixed radix strides, first component most significant
    strides = [int(np.prod(sizes[i + 1:])) for i in range(len(sizes))]
    jidx = np.zeros((total, total), dtype=np.int64)
    midx = np.zeros((total, total), dtype=np.int64)
    for c, (L, st) in enumerate(zip(lattices, strides)):
        x = comps[:, c]
        jidx += L.join[x[:, None], x[None, :]] * st
        midx += L.meet[x[:, None], x[None, :]] * st
        leq &= L.leq[x[:, None], x[None, :]]
    join[:] = jidx
    meet[:] = midx
    prime = np.zeros(total, dtype=np.int64)
    for c, (L, st) in enumerate(zip(lattices, strides)):
        prime += L.prime[comps[:, c]] * st
    zero = index[tuple(L.zero for L in lattices)]
    one = index[tuple(L.one for L in lattices)]
    labels = ["(" + ",".join(L.labels[i] for L, i in zip(lattices, t)) + ")" for t in tuples]
    return FiniteGaloisLattice(leq, join, meet, prime, zero, one, labels)


def product_projection(lattices, c):
    """Map of the c-th coordinate projection from product(lattices)."""
    sizes = [L.size for L in lattices]
    return [int(t[c]) for t in np.ndindex(*sizes)]


def sublattice(L, elements):
    """The sublattice on ``elements`` (must be closed under join, meet and ')."""
    elements = sorted(set(int(e) for e in elements))
    pos = {e: i for i, e in enumerate(elements)}
    try:
        join = [[pos[int(L.join[a, b])] for b in elements] for a in elements]
        meet = [[pos[int(L.meet[a, b])] for b in elements] for a in elements]
        prime = [pos[int(L.prime[a])] for a in elements]
    except KeyError as exc:
        raise ValueError(f"subset not closed: {exc}") from None
    leq = L.leq[np.ix_(elements, elements)]
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    return FiniteGaloisLattice(
        leq, join, meet, prime, bottoms[0], tops[0], [L.labels[e] for e in elements], parent_index=elements
    )


def galois_closure_set(L, generators):
    """Least subset containing the generators and 0, closed under +, . and '."""
    S = set(int(g) for g in generators) | {L.zero}
    J, M, P = L.join.tolist(), L.meet.tolist(), L.prime.tolist()
    frontier = list(S)
    while frontier:
        new = set()
        for x in frontier:
            cand = [P[x]]
            for y in S:
                cand.append(J[x][y])
                cand.append(M[x][y])
            for c in cand:
                if c not in S:
                    new.add(c)
        S |= new
        frontier = list(new)
    return sorted(S)


def galois_closure(L, generators):
    return sublattice(L, galois_closure_set(L, generators))


def l_f(L):
    """Elements of finite height together with their primes (all of L when L is finite)."""
    res = check_laws(L, ("polarity-cml",))
    if not all(r.passed for r in res.values()):
        failed = [k for k, r in res.items() if not r.passed]
        raise NotPolarityCML(f"not a polarity CML: {failed} fail")
    h = L.heights()
    finite = [x for x in range(L.size) if h[x] < float("inf")]
    members = set(finite) | {int(L.prime[x]) for x in finite}
    return sublattice(L, members)


# -- homomorphisms ----------------------------------------------------------

@dataclass
class LatticeHom:
    source: FiniteGaloisLattice
    target: FiniteGaloisLattice
    mapping: list


def hom_violation(phi, galois=False):
    S, T = phi.source, phi.target
    f = np.asarray(phi.mapping, dtype=np.int64)
    if len(f) != S.size:
        return ("arity",)
    if f[S.zero] != T.zero:
        return ("zero",)
    if f[S.one] != T.one:
        return ("one",)
    for name, a, b in (("join", S.join, T.join), ("meet", S.meet, T.meet)):
        bad = f[a] != b[f[:, None], f[None, :]]
        if bad.any():
            x, y = map(int, np.argwhere(bad)[0])
            return (name, x, y)
    if galois:
        bad = np.flatnonzero(f[S.prime] != T.prime[f])
        if len(bad):
            return ("prime", int(bad[0]))
    return None


def hom_kernel(phi):
    first, labels = {}, []
    for i, v in enumerate(phi.mapping):
        labels.append(first.setdefault(int(v), i))
    return Congruence(tuple(labels))


def hom_tools(phi):
    """Report on a lattice homomorphism; raises :class:`NotAHom` with a witness otherwise."""
    w = hom_violation(phi)
    if w is not None:
        raise NotAHom(f"map is not a lattice homomorphism: {w}", w)
    kern = hom_kernel(phi)
    return {
        "is_hom": True,
        "is_galois_hom": hom_violation(phi, galois=True) is None,
        "kernel": kern,
        "injective": kern.is_identity(),
    }


def faithful_family(phis):
    """True iff the kernels of the maps intersect to the identity congruence."""
    if not phis:
        return False
    m = phis[0].source.size
    sig = {}
    for i in range(m):
        key = tuple(int(phi.mapping[i]) for phi in phis)
        if key in sig:
            return False
        sig[key] = i
    return True


def is_isomorphism(phi, galois=True):
    f = list(phi.mapping)
    return (
        len(set(f)) == phi.source.size == phi.target.size
        and hom_violation(phi, galois=galois) is None
    )


def find_isomorphism(A, B, galois=True):
    """Backtracking search for a (Galois) lattice isomorphism A -> B."""
    if A.size != B.size:
        return None
    ha, hb = A.heights(), B.heights()
    ua, ub = A.leq.sum(axis=1), B.leq.sum(axis=1)
    cand = {x: [y for y in range(B.size) if hb[y] == ha[x] and ub[y] == ua[x]] for x in range(A.size)}
    order = sorted(range(A.size), key=lambda x: len(cand[x]))
    f = [None] * A.size
    used = set()

    def consistent(x, y):
        for z in range(A.size):
            w = f[z]
            if w is None:
                continue
            if bool(A.leq[x, z]) != bool(B.leq[y, w]) or bool(A.leq[z, x]) != bool(B.leq[w, y]):
                return False
            if galois and ((A.prime[x] == z) != (B.prime[y] == w)):
                return False
        return True

    def go(i):
        if i == len(order):
            return True
        x = order[i]
        for y in cand[x]:
            if y not in used and consistent(x, y):
                f[x] = y
                used.add(y)
                if go(i + 1):
                    return True
                f[x] = None
                used.discard(y)
        return False

    if go(0):
        phi = LatticeHom(A, B, f)
        if is_isomorphism(phi, galois):
            return phi
    return None


# -- small named lattices ---------------------------------------------------

def chain(k, prime=None):
    leq = np.array([[i <= j for j in range(k)] for i in range(k)])
    prime = prime if prime is not None else [k - 1 - i for i in range(k)]
    return FiniteGaloisLattice.from_order(leq, prime)


def m_n(n, prime=None):
    """The modular lattice M_n: 0, n pairwise incomparable atoms, 1 (indices 0..n+1)."""
    m = n + 2
    leq = np.eye(m, dtype=bool)
    leq[0, :] = True
    leq[:, m - 1] = True
    if prime is None:
        prime = [m - 1] + list(range(1, n + 1)) + [0]
    return FiniteGaloisLattice.from_order(leq, prime, ["0"] + [f"a{i}" for i in range(1, n + 1)] + ["1"])


def pentagon(prime=None):
    """N_5 = {0 < a < c < 1, 0 < b < 1} with indices 0, a, b, c, 1."""
    rel = {(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)}
    L = FiniteGaloisLattice.from_covers(5, rel, prime or [4, 2, 3, 2, 0], ["0", "a", "b", "c", "1"])
    return L


def non_polarity_example():
    """The 4-element complemented modular lattice with x' = 0 for x != 0 and 0' = 1."""
    return m_n(2, prime=[3, 0, 0, 0])


def all_subsets_upto(m, k):
    for r in range(k + 1):
        yield from combinations(range(m), r)
