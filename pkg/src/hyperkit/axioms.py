"""Per-axiom verification for semilattices, mosaics and L-mosaics.

Every check is a deterministic brute-force scan; a failed verdict carries the
lexicographically first falsifying tuple so it can be replayed. Witness
entries are element indices, with set-valued parts given as ascending index
tuples. The axiom forms live in small named predicates so a variant reading
(e.g. a different reversibility shape) can be swapped without touching the
checkers' callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import BJoinSemilattice, LMosaic, contains, members, set_mul

#: L-mosaic axioms eligible for ablation, in verdict order.
LMOSAIC_AXIOMS = ("comm", "lm1_e", "lm1_id", "lm2", "lm3", "lm4")
#: Base mosaic axioms; "reversibility" is ablatable, weak neutrality is not.
MOSAIC_AXIOMS = ("nonempty", "neutrality", "reversibility")


@dataclass(frozen=True)
class Verdict:
    axiom: str
    passed: bool
    witness: Optional[tuple] = None

    def __post_init__(self) -> None:
        if self.passed == (self.witness is not None):
            raise ValueError("witness present iff the verdict failed")

    def __str__(self) -> str:
        if self.passed:
            return f"{self.axiom}: pass"
        return f"{self.axiom}: FAIL witness={self.witness}"


@dataclass(frozen=True)
class CheckReport:
    verdicts: Tuple[Verdict, ...]

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> Tuple[Verdict, ...]:
        return tuple(v for v in self.verdicts if not v.passed)

    def verdict(self, axiom: str) -> Verdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    def __str__(self) -> str:
        return "\n".join(str(v) for v in self.verdicts)

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "verdicts": [
                {
                    "axiom": v.axiom,
                    "pass": v.passed,
                    "witness": _witness_json(v.witness),
                }
                for v in self.verdicts
            ],
        }


def _witness_json(witness: Optional[tuple]):
    if witness is None:
        return None
    return [list(part) if isinstance(part, tuple) else part for part in witness]


class AxiomError(ValueError):
    """An operation refused to run because a required check failed."""

    def __init__(self, message: str, report: CheckReport):
        super().__init__(f"{message}\n{report}")
        self.report = report


# --- bounded join-semilattice ---------------------------------------------

def check_bjoin(s: BJoinSemilattice) -> CheckReport:
    """All seven semilattice axioms, each with a replayable witness.

    Closure and bottom membership hold for any shape-valid table and are
    reported as trivially true.
    """
    n = s.n
    j = s.join
    verdicts = [Verdict("closed", True), ]

    witness = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if j[j[x][y]][z] != j[x][j[y][z]]:
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    verdicts.append(Verdict("assoc", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if j[x][y] != j[y][x]:
                witness = (x, y)
                break
        if witness:
            break
    verdicts.append(Verdict("comm", witness is None, witness))

    witness = None
    for x in range(n):
        if j[x][x] != x:
            witness = (x,)
            break
    verdicts.append(Verdict("idem", witness is None, witness))

    verdicts.append(Verdict("bot_in", True))

    witness = None
    for x in range(n):
        if j[s.bot][x] != x:
            witness = (x,)
            break
    verdicts.append(Verdict("bot_left", witness is None, witness))

    witness = None
    for x in range(n):
        if j[x][s.bot] != x:
            witness = (x,)
            break
    verdicts.append(Verdict("bot_right", witness is None, witness))

    return CheckReport(tuple(verdicts))


# --- mosaic axiom predicates ------------------------------------------------

def neutral_at(m: LMosaic, x: int, strict: bool) -> bool:
    """Weak: x is a member of e(+)x and x(+)e. Strict: both cells are {x}."""
    if strict:
        return m.hyp[m.e][x] == 1 << x and m.hyp[x][m.e] == 1 << x
    return contains(m.hyp[m.e][x], x) and contains(m.hyp[x][m.e], x)


def reversible_at(m: LMosaic, x: int, y: int, z: int) -> bool:
    """z in x(+)y implies x in z(+)rho(y) and y in rho(x)(+)z."""
    if not contains(m.hyp[x][y], z):
        return True
    return contains(m.hyp[z][m.rho[y]], x) and contains(m.hyp[m.rho[x]][z], y)


# --- L-mosaic axiom predicates ----------------------------------------------

def comm_at(m: LMosaic, x: int, y: int) -> bool:
    return m.hyp[x][y] == m.hyp[y][x]


def lm1_e_at(m: LMosaic, x: int) -> bool:
    return contains(m.hyp[x][x], m.e)


def lm1_id_at(m: LMosaic, x: int) -> bool:
    return contains(m.hyp[x][x], x)


def lm2_at(m: LMosaic, x: int) -> bool:
    diag = m.hyp[x][x]
    return set_mul(m, diag, diag) == diag


def lm3_at(m: LMosaic, x: int, y: int) -> bool:
    cell = m.hyp[x][y]
    right = 0
    left = 0
    for w in members(cell):
        right |= m.hyp[x][w]
        left |= m.hyp[w][y]
    return right & left & ~cell == 0


def lm4_witnesses(m: LMosaic, x: int, y: int) -> Tuple[int, ...]:
    """All z with z in x(+)y, x in z(+)z and y in z(+)z, ascending."""
    cell = m.hyp[x][y]
    return tuple(
        z for z in members(cell)
        if contains(m.hyp[z][z], x) and contains(m.hyp[z][z], y)
    )


# --- mosaic / L-mosaic checkers ---------------------------------------------

def check_mosaic(m: LMosaic, strict_neutral: bool = False) -> CheckReport:
    """Nonemptiness, neutrality of e, and the reversibility of rho."""
    n = m.n
    verdicts = [Verdict("nonempty", True), ]

    witness = None
    for x in range(n):
        if not neutral_at(m, x, strict_neutral):
            witness = (x,)
            break
    verdicts.append(Verdict("neutrality", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not reversible_at(m, x, y, z):
                    witness = (x, y, z)
                    break
            if witness:
                break
        if witness:
            break
    verdicts.append(Verdict("reversibility", witness is None, witness))

    return CheckReport(tuple(verdicts))


def check_lmosaic(m: LMosaic, strict_neutral: bool = False) -> CheckReport:
    """Mosaic checks followed by the six L-mosaic axioms.

    Verdict order and names are stable: nonempty, neutrality, reversibility,
    comm, lm1_e, lm1_id, lm2, lm3, lm4.
    """
    n = m.n
    verdicts = list(check_mosaic(m, strict_neutral).verdicts)

    witness = None
    for x in range(n):
        for y in range(n):
            if not comm_at(m, x, y):
                witness = (x, y)
                break
        if witness:
            break
    verdicts.append(Verdict("comm", witness is None, witness))

    for name, pred in (("lm1_e", lm1_e_at), ("lm1_id", lm1_id_at), ("lm2", lm2_at)):
        witness = None
        for x in range(n):
            if not pred(m, x):
                witness = (x,)
                break
        verdicts.append(Verdict(name, witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            if not lm3_at(m, x, y):
                witness = (x, y)
                break
        if witness:
            break
    verdicts.append(Verdict("lm3", witness is None, witness))

    witness = None
    for x in range(n):
        for y in range(n):
            zs = lm4_witnesses(m, x, y)
            if len(zs) != 1:
                witness = (x, y, zs)
                break
        if witness:
            break
    verdicts.append(Verdict("lm4", witness is None, witness))

    return CheckReport(tuple(verdicts))
