"""Exhaustive generation of structures up to isomorphism at small sizes.

Semilattice search backtracks over join-table cells with forced-cell
propagation and incremental associativity checks; mosaic search assigns
nonempty subsets to hyperoperation cells (diagonals first) with the axiom
propagators pruning as soon as enough cells are known. Both searches pin
the distinguished element (bottom / neutral) at index 0, which loses no
isomorphism classes, and deduplicate via canonical forms before emitting
in canonical-form order.

Canonicalization is brute-force permutation minimization restricted to
permutations that fix the distinguished element at 0 and respect an
isomorphism-invariant partition of the remaining elements.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .axioms import check_bjoin, check_lmosaic
from .core import (
    MAX_CARRIER,
    BJoinSemilattice,
    Carrier,
    LMosaic,
    contains,
    full_set,
    members,
)

DEFAULT_BJOIN_BOUND = 7
DEFAULT_LMOSAIC_BOUND = 4

#: Environment variable overriding both enumeration bounds.
BOUND_ENV_VAR = "HYPERKIT_MAX_N"

#: Axioms the mosaic search can enforce during backtracking. Weak
#: neutrality and nonemptiness are always built in.
SEARCH_AXIOMS = frozenset(
    {"comm", "lm1_e", "lm1_id", "lm2", "lm3", "lm4", "reversibility"}
)

Structure = Union[BJoinSemilattice, LMosaic]


def _env_bound() -> Optional[int]:
    raw = os.environ.get(BOUND_ENV_VAR)
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BOUND_ENV_VAR} must be an integer, got {raw!r}") from None
    if not 1 <= value <= MAX_CARRIER:
        raise ValueError(f"{BOUND_ENV_VAR} must be in 1..{MAX_CARRIER}, got {value}")
    return value


def bjoin_bound() -> int:
    """Largest size enumerate_bjoin accepts."""
    override = _env_bound()
    return DEFAULT_BJOIN_BOUND if override is None else override


def lmosaic_bound() -> int:
    """Largest size enumerate_lmosaic accepts."""
    override = _env_bound()
    return DEFAULT_LMOSAIC_BOUND if override is None else override


# --- canonical forms ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Byte string identifying a structure's isomorphism class."""

    data: bytes

    def digest(self, length: int = 10) -> str:
        return hashlib.sha1(self.data).hexdigest()[:length]


def relabel_bjoin(s: BJoinSemilattice, perm: Sequence[int]) -> BJoinSemilattice:
    """Apply a carrier permutation (old index -> new index)."""
    n = s.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    table = tuple(
        tuple(perm[s.join[inv[x]][inv[y]]] for y in range(n)) for x in range(n)
    )
    labels = None
    if s.carrier.labels is not None:
        labels = tuple(s.carrier.labels[inv[x]] for x in range(n))
    return BJoinSemilattice(Carrier(n, labels), table, perm[s.bot])


def _relabel_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for z in members(mask):
        out |= 1 << perm[z]
    return out


def relabel_lmosaic(m: LMosaic, perm: Sequence[int]) -> LMosaic:
    """Apply a carrier permutation (old index -> new index)."""
    n = m.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    table = tuple(
        tuple(_relabel_mask(m.hyp[inv[x]][inv[y]], perm) for y in range(n))
        for x in range(n)
    )
    rho = tuple(perm[m.rho[inv[x]]] for x in range(n))
    labels = None
    if m.carrier.labels is not None:
        labels = tuple(m.carrier.labels[inv[x]] for x in range(n))
    return LMosaic(Carrier(n, labels), table, perm[m.e], rho)


def _bjoin_invariant(s: BJoinSemilattice, x: int) -> tuple:
    n = s.n
    j = s.join
    down = sum(1 for z in range(n) if j[z][x] == x)
    up = sum(1 for z in range(n) if j[z][x] == z)
    row = tuple(sorted(sum(1 for w in range(n) if j[w][v] == v) for v in j[x]))
    return (down, up, row)


def _lmosaic_invariant(m: LMosaic, x: int) -> tuple:
    n = m.n
    diag = m.hyp[x][x]
    above = sum(1 for z in range(n) if contains(m.hyp[z][z], x))
    row = tuple(sorted(cell.bit_count() for cell in m.hyp[x]))
    return (diag.bit_count(), above, row, int(m.rho[x] == x))


def _pinned_perms(n: int, pinned: int, invariant) -> Iterator[Tuple[int, ...]]:
    """Permutations sending pinned -> 0, grouped by the invariant partition.

    Elements with distinct invariants can never be exchanged by an
    isomorphism, so scanning only block-respecting relabelings still yields
    one identical representative per isomorphism class.
    """
    groups: Dict[tuple, List[int]] = {}
    for x in range(n):
        if x != pinned:
            groups.setdefault(invariant(x), []).append(x)
    blocks = [groups[key] for key in sorted(groups)]
    ranges = []
    start = 1
    for block in blocks:
        ranges.append(range(start, start + len(block)))
        start += len(block)
    for parts in product(*(permutations(r) for r in ranges)):
        perm = [0] * n
        for block, part in zip(blocks, parts):
            for old, new in zip(block, part):
                perm[old] = new
        yield tuple(perm)


def _bjoin_payload(s: BJoinSemilattice, perm: Sequence[int]) -> bytes:
    n = s.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    out = bytearray()
    for x in range(n):
        row = s.join[inv[x]]
        for y in range(n):
            out.append(perm[row[inv[y]]])
    return bytes(out)


def _lmosaic_payload(m: LMosaic, perm: Sequence[int]) -> bytes:
    n = m.n
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    out = bytearray()
    for x in range(n):
        out.append(perm[m.rho[inv[x]]])
    for x in range(n):
        row = m.hyp[inv[x]]
        for y in range(n):
            out += _relabel_mask(row[inv[y]], perm).to_bytes(8, "little")
    return bytes(out)


def _canonicalize(s: Structure) -> Tuple[CanonicalForm, Structure]:
    if isinstance(s, BJoinSemilattice):
        kind, pinned, payload, invariant = (
            b"B", s.bot, _bjoin_payload, lambda x: _bjoin_invariant(s, x),
        )
    else:
        kind, pinned, payload, invariant = (
            b"M", s.e, _lmosaic_payload, lambda x: _lmosaic_invariant(s, x),
        )
    best = None
    best_perm = None
    for perm in _pinned_perms(s.n, pinned, invariant):
        data = payload(s, perm)
        if best is None or data < best:
            best, best_perm = data, perm
    relabel = relabel_bjoin if isinstance(s, BJoinSemilattice) else relabel_lmosaic
    form = CanonicalForm(kind + bytes([s.n]) + best)
    return form, relabel(s, best_perm)


def canonical_form(s: Structure) -> CanonicalForm:
    """Representative bytes: equal forms iff the structures are isomorphic."""
    return _canonicalize(s)[0]


def is_isomorphic(a: Structure, b: Structure) -> Optional[Tuple[int, ...]]:
    """A carrier permutation mapping a onto b, or None.

    The permutation sends a's distinguished element to b's and, for mosaics,
    commutes with the reversibility maps.
    """
    if type(a) is not type(b):
        raise ValueError("structures must be of the same kind")
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} vs {b.n}")
    if isinstance(a, BJoinSemilattice):
        for perm in permutations(range(a.n)):
            if perm[a.bot] != b.bot:
                continue
            if relabel_bjoin(a, perm).join == b.join:
                return perm
        return None
    for perm in permutations(range(a.n)):
        if perm[a.e] != b.e:
            continue
        image = relabel_lmosaic(a, perm)
        if image.hyp == b.hyp and image.rho == b.rho:
            return perm
    return None


# --- semilattice enumeration -------------------------------------------------

def _search_bjoin(n: int) -> Iterator[BJoinSemilattice]:
    """All join tables on 0..n-1 with bottom 0, one labeled table at a time.

    Cells are assigned column by column so the table on 0..k is complete
    before element k+1 enters; commutativity and idempotence are built in,
    absorption consequences are propagated, and associativity is re-checked
    over all currently decidable triples after every assignment.
    """
    carrier = Carrier(n)
    if n == 1:
        yield BJoinSemilattice(carrier, ((0,),), 0)
        return

    t = [[-1] * n for _ in range(n)]
    for x in range(n):
        t[0][x] = t[x][0] = x
        t[x][x] = x
    cells = [(x, y) for y in range(2, n) for x in range(1, y)]

    def set_cell(a: int, b: int, v: int, trail: list) -> bool:
        cur = t[a][b]
        if cur >= 0:
            return cur == v
        t[a][b] = t[b][a] = v
        trail.append((a, b))
        return True

    def assign(x: int, y: int, v: int, trail: list) -> bool:
        if not set_cell(x, y, v, trail):
            return False
        qi = len(trail) - 1
        while qi < len(trail):
            a, b = trail[qi]
            qi += 1
            w = t[a][b]
            # a v (a v b) = (a v a) v b = a v b, likewise on the right
            if not set_cell(a, w, w, trail) or not set_cell(b, w, w, trail):
                return False
        return True

    def assoc_ok() -> bool:
        rng = range(n)
        for a in rng:
            ta = t[a]
            for b in rng:
                ab = ta[b]
                if ab < 0:
                    continue
                tab = t[ab]
                tb = t[b]
                for c in rng:
                    left = tab[c]
                    if left < 0:
                        continue
                    bc = tb[c]
                    if bc < 0:
                        continue
                    right = ta[bc]
                    if 0 <= right != left:
                        return False
        return True

    def undo(trail: list) -> None:
        while trail:
            a, b = trail.pop()
            t[a][b] = t[b][a] = -1

    def search(i: int) -> Iterator[BJoinSemilattice]:
        if i == len(cells):
            s = BJoinSemilattice(carrier, tuple(tuple(row) for row in t), 0)
            if check_bjoin(s).ok:
                yield s
            return
        x, y = cells[i]
        if t[x][y] >= 0:
            yield from search(i + 1)
            return
        for v in range(n):
            # x v y = v forces x v v = v and y v v = v
            if 0 <= t[x][v] != v or 0 <= t[y][v] != v:
                continue
            trail: list = []
            if assign(x, y, v, trail) and assoc_ok():
                yield from search(i + 1)
            undo(trail)

    yield from search(0)


def enumerate_bjoin(n: int) -> Iterator[BJoinSemilattice]:
    """One bounded join-semilattice per isomorphism class of size n."""
    bound = bjoin_bound()
    if not 1 <= n <= bound:
        raise ValueError(f"size must be in 1..{bound}, got {n}")
    return _enumerate_bjoin(n)


def _enumerate_bjoin(n: int) -> Iterator[BJoinSemilattice]:
    reps: Dict[CanonicalForm, BJoinSemilattice] = {}
    for s in _search_bjoin(n):
        form, canon = _canonicalize(s)
        reps.setdefault(form, canon)
    for form in sorted(reps):
        yield reps[form]


# --- mosaic enumeration ------------------------------------------------------

def _subsets_ordered(n: int) -> List[int]:
    """Nonempty subsets, ascending by cardinality then lexicographically."""
    return sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), members(m)))


def involutions(n: int) -> List[Tuple[int, ...]]:
    """All self-inverse carrier maps, lexicographically ordered."""
    return [
        p for p in permutations(range(n))
        if all(p[p[x]] == x for x in range(n))
    ]


def search_lmosaics(
    n: int,
    rho: Optional[Sequence[int]] = None,
    enforced: Optional[frozenset] = None,
) -> Iterator[LMosaic]:
    """Backtracking stream of tables satisfying the enforced axioms.

    Neutral element pinned at 0, weak neutrality and nonemptiness always
    built in; `enforced` selects which of SEARCH_AXIOMS prune the search
    (all by default). Emits raw labeled tables in deterministic order;
    deduplication is the caller's business.
    """
    rho = tuple(range(n)) if rho is None else tuple(rho)
    enforced = SEARCH_AXIOMS if enforced is None else frozenset(enforced)
    unknown = enforced - SEARCH_AXIOMS
    if unknown:
        raise ValueError(f"unknown axioms: {sorted(unknown)}")
    return _search_lmosaics(n, rho, enforced)


def _search_lmosaics(
    n: int, rho: Tuple[int, ...], enforced: frozenset
) -> Iterator[LMosaic]:
    carrier = Carrier(n)
    all_mask = full_set(n)
    subsets = _subsets_ordered(n)
    commutative = "comm" in enforced

    diag = [(x, x) for x in range(n)]
    if commutative:
        off = [(x, y) for x in range(n) for y in range(x + 1, n)]
    else:
        off = [(x, y) for x in range(n) for y in range(n) if x != y]
    cells = diag + off

    hyp: List[List[Optional[int]]] = [[None] * n for _ in range(n)]

    def required(x: int, y: int) -> int:
        req = 0
        if x == y:
            if "lm1_e" in enforced:
                req |= 1
            if "lm1_id" in enforced:
                req |= 1 << x
        if x == 0:
            req |= 1 << y
        if y == 0:
            req |= 1 << x
        return req

    def allowed(x: int, y: int) -> int:
        if "lm2" not in enforced:
            return all_mask
        # any assigned diagonal containing both x and y bounds the cell
        allow = all_mask
        for w in range(n):
            dw = hyp[w][w]
            if dw is not None and contains(dw, x) and contains(dw, y):
                allow &= dw
        return allow

    def consistent() -> bool:
        rng = range(n)
        if "lm4" in enforced:
            for x in rng:
                for y in rng:
                    cell = hyp[x][y]
                    if cell is None:
                        continue
                    confirmed = potential = 0
                    for z in members(cell):
                        dz = hyp[z][z]
                        if dz is None:
                            potential += 1
                        elif contains(dz, x) and contains(dz, y):
                            confirmed += 1
                            if confirmed > 1:
                                return False
                    if confirmed + potential == 0:
                        return False
        if "lm2" in enforced:
            for w in rng:
                dw = hyp[w][w]
                if dw is None:
                    continue
                mem = members(dw)
                for a in mem:
                    for b in mem:
                        cell = hyp[a][b]
                        if cell is not None and cell & ~dw:
                            return False
        if "reversibility" in enforced:
            for x in rng:
                for y in rng:
                    cell = hyp[x][y]
                    if cell is None:
                        continue
                    for z in members(cell):
                        c1 = hyp[z][rho[y]]
                        if c1 is not None and not contains(c1, x):
                            return False
                        c2 = hyp[rho[x]][z]
                        if c2 is not None and not contains(c2, y):
                            return False
        if "lm3" in enforced:
            for x in rng:
                for y in rng:
                    cell = hyp[x][y]
                    if cell is None:
                        continue
                    right = left = 0
                    ready = True
                    for w in members(cell):
                        xw = hyp[x][w]
                        wy = hyp[w][y]
                        if xw is None or wy is None:
                            ready = False
                            break
                        right |= xw
                        left |= wy
                    if ready and right & left & ~cell:
                        return False
        return True

    def place(x: int, y: int, value: Optional[int]) -> None:
        hyp[x][y] = value
        if commutative:
            hyp[y][x] = value

    def search(i: int) -> Iterator[LMosaic]:
        if i == len(cells):
            yield LMosaic(carrier, tuple(tuple(row) for row in hyp), 0, rho)
            return
        x, y = cells[i]
        req = required(x, y)
        allow = allowed(x, y)
        if req & ~allow:
            return
        for cand in subsets:
            if cand & ~allow or req & ~cand:
                continue
            place(x, y, cand)
            if consistent():
                yield from search(i + 1)
        place(x, y, None)

    yield from search(0)


def enumerate_lmosaic(n: int, general_rho: bool = False) -> Iterator[LMosaic]:
    """One L-mosaic per isomorphism class of size n.

    Searches the identity reversibility map by default; with general_rho
    every involutive map is searched, which at these sizes serves to confirm
    the non-identity strata are empty rather than to find anything new.
    """
    bound = lmosaic_bound()
    if not 1 <= n <= bound:
        raise ValueError(f"size must be in 1..{bound}, got {n}")
    return _enumerate_lmosaic(n, general_rho)


def _enumerate_lmosaic(n: int, general_rho: bool) -> Iterator[LMosaic]:
    rhos = involutions(n) if general_rho else [tuple(range(n))]
    reps: Dict[CanonicalForm, LMosaic] = {}
    for rho in rhos:
        for m in search_lmosaics(n, rho=rho):
            if not check_lmosaic(m).ok:
                raise RuntimeError(
                    "mosaic search emitted a structure failing its own axioms; "
                    "this is a bug, not bad input"
                )
            form, canon = _canonicalize(m)
            reps.setdefault(form, canon)
    for form in sorted(reps):
        yield reps[form]
