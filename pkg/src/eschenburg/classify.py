"""Exhaustive enumeration and classification of Eschenburg spaces.

The search enumerates all free parameter vectors in the positively
curved normal form k1 >= k2 > l1 >= l2 >= l3 = 0 with r <= R, then
groups them:

  coarse          r, s, sigma agree up to a simultaneous sign flip
  homotopy        ... and s22 agrees (same flip)
  tangential      ... and p1 agrees (flip-insensitive)
  homeomorphism   ... and s2 agrees (same flip)

Under the normal form, with L = l1 + l2,

    r = k1^2 + k1 k2 + k2^2 - (k1 + k2) L + l1 l2
      = k1(k1 - l1) + k2(k2 - l2) + (k1 - l1)(k2 - l2) >= 3,

and dr/dk1 = 2 k1 + k2 - L > 0, dr/dk2 = k1 + 2 k2 - L > 0 throughout
the region, so the loops below may cut off as soon as r exceeds R
without missing vectors.  The innermost admissible corner is
k1 = k2 = l1 + 1, l2 = l1, where r = 2 l1 + 3; this bounds l1.

The expensive Kreck-Stolz evaluation is performed only for members of
coarse families of size >= 2.  A family containing a condition-C failure
cannot be refined further and is reported as undecided; class counts are
then reported as [min, max] intervals over all consistent completions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import permutations

from eschenburg.arith import RationalModZ
from eschenburg.kreck_stolz import KreckStolzResult, kreck_stolz
from eschenburg.spaces import (
    BasicInvariants,
    OrientedTuple,
    ParameterVector,
    basic_invariants,
    canonical_sign_form,
    is_free_action,
    satisfies_standard_form,
)

COARSE = "coarse"
HOMOTOPY = "homotopy"
TANGENTIAL = "tangential"
HOMEOMORPHISM = "homeomorphism"
LEVELS = (COARSE, HOMOTOPY, TANGENTIAL, HOMEOMORPHISM)


@dataclass(frozen=True)
class SpaceRecord:
    """One enumerated space: parameters, cheap invariants, optional KS data."""

    pv: ParameterVector
    inv: BasicInvariants
    ks: KreckStolzResult | None = None

    @property
    def sort_key(self):
        return (self.inv.r, self.pv.as_tuple())

    def oriented_tuple(self) -> OrientedTuple:
        s22 = s2 = None
        if self.ks is not None and self.ks.condition_c:
            s22, s2 = self.ks.s22, self.ks.s2
        return OrientedTuple(
            r=self.inv.r, s=self.inv.s, sigma=self.inv.sigma,
            p1=self.inv.p1, s22=s22, s2=s2,
        )


def r_of_standard_form(k1: int, k2: int, l1: int, l2: int) -> int:
    """Closed form of |sigma2(k) - sigma2(l)| under the normal form."""
    return k1 * k1 + k1 * k2 + k2 * k2 - (k1 + k2) * (l1 + l2) + l1 * l2


def enumerate_parameter_vectors(rmax: int, r_lo: int = 1, r_hi: int | None = None):
    """Yield all free normal-form vectors with r <= rmax, optionally
    restricted to r_lo <= r <= r_hi (for sharding).

    Deterministic order: ascending (l1, l2, k2, k1).  Exhaustiveness rests
    on the loop-bound monotonicity derived in the module docstring and is
    cross-checked against an independent brute force in the test suite.
    """
    if rmax < 1:
        raise ValueError("rmax must be >= 1")
    hi = rmax if r_hi is None else min(r_hi, rmax)
    gcd = math.gcd
    l1 = 0
    while 2 * l1 + 3 <= rmax:
        for l2 in range(0, l1 + 1):
            L = l1 + l2
            ll = l1 * l2
            k2 = l1 + 1
            while 3 * k2 * k2 - 2 * k2 * L + ll <= rmax:
                k1 = k2
                while True:
                    r = k1 * k1 + k1 * k2 + k2 * k2 - (k1 + k2) * L + ll
                    if r > rmax:
                        break
                    if r_lo <= r <= hi:
                        k3 = L - k1 - k2
                        if (
                            gcd(k1 - l1, k2 - l2) == 1
                            and gcd(k1 - l2, k2 - l1) == 1
                            and gcd(k1 - l1, k2) == 1
                            and gcd(k1, k2 - l1) == 1
                            and gcd(k1 - l2, k2) == 1
                            and gcd(k1, k2 - l2) == 1
                        ):
                            yield ParameterVector(k1, k2, k3, l1, l2, 0)
                    k1 += 1
                k2 += 1
        l1 += 1


def brute_force_vectors(rmax: int) -> set[ParameterVector]:
    """Independent naive enumerator used as the exhaustiveness oracle.

    Scans the full box 0 <= l2 <= l1 < k2 <= k1 <= rmax (any normal-form
    vector with r <= rmax has k1 <= r - 2 <= rmax, since
    r = k1(k1-l1) + k2(k2-l2) + (k1-l1)(k2-l2) >= k1 + 2), recomputes r
    from the raw sigma polynomials, and applies the full six-permutation
    freeness test.  No loop cutoffs, no shared code with the fast path
    beyond the ParameterVector container.
    """
    found = set()
    for l1 in range(0, rmax + 1):
        for l2 in range(0, l1 + 1):
            for k2 in range(l1 + 1, rmax + 1):
                for k1 in range(k2, rmax + 1):
                    k3 = l1 + l2 - k1 - k2
                    s2k = k1 * k2 + k2 * k3 + k1 * k3
                    s2l = l1 * l2
                    if abs(s2k - s2l) > rmax:
                        continue
                    pv = ParameterVector(k1, k2, k3, l1, l2, 0)
                    ok = True
                    for lp in permutations((l1, l2, 0)):
                        if math.gcd(k1 - lp[0], k2 - lp[1]) != 1:
                            ok = False
                            break
                    if ok:
                        found.add(pv)
    return found


@dataclass
class Family:
    """A maximal set of >= 2 vectors sharing a level key up to flips."""

    level: str
    key: OrientedTuple
    members: list[SpaceRecord]
    undecided: bool = False

    def __post_init__(self):
        self.members = sorted(self.members, key=lambda m: m.sort_key)

    @property
    def r(self) -> int:
        return self.key.r

    def member_vectors(self) -> list[tuple[int, ...]]:
        return [m.pv.as_tuple() for m in self.members]

    def sort_key(self):
        return (self.r, _key_tuple(self.key), self.member_vectors())


def _key_tuple(t: OrientedTuple):
    def q(x: RationalModZ | None):
        return None if x is None else (x.numerator, x.denominator)

    return (t.r, t.s.value, t.sigma.value, q(t.s22), t.p1, q(t.s2))


def _level_key(rec_tuple: OrientedTuple, level: str):
    """Canonical grouping key of an oriented tuple at a level."""
    t = rec_tuple
    if level == COARSE:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=0)
    elif level == HOMOTOPY:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=0, s22=t.s22)
    elif level == TANGENTIAL:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=t.p1, s22=t.s22)
    elif level == HOMEOMORPHISM:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=t.p1, s22=t.s22, s2=t.s2)
    else:
        raise ValueError(f"unknown level {level}")
    return _key_tuple(canonical_sign_form(t))


@dataclass
class LevelCount:
    """Number of classes at one level, as an interval [min, max]."""

    min: int = 0
    max: int = 0

    def __iadd__(self, other):
        self.min += other.min
        self.max += other.max
        return self

    @property
    def exact(self) -> int | None:
        return self.min if self.min == self.max else None


@dataclass
class ClassificationReport:
    rmax: int
    n_vectors: int = 0
    counts: dict = field(default_factory=dict)
    families: dict = field(default_factory=lambda: {lv: [] for lv in LEVELS})
    undecided: list = field(default_factory=list)

    def pairs(self, kind: str) -> list[tuple[SpaceRecord, SpaceRecord]]:
        return extract_pairs(self, kind)


def _group_by(records, keyfun):
    groups: dict = {}
    for rec in records:
        groups.setdefault(keyfun(rec), []).append(rec)
    return groups


def _representative_key(members: list[SpaceRecord], level: str) -> OrientedTuple:
    """Canonical level key of a group, built from its first member."""
    t = members[0].oriented_tuple()
    if level == COARSE:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=0)
    elif level == HOMOTOPY:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=0, s22=t.s22)
    elif level == TANGENTIAL:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=t.p1, s22=t.s22)
    else:
        t = OrientedTuple(r=t.r, s=t.s, sigma=t.sigma, p1=t.p1, s22=t.s22, s2=t.s2)
    return canonical_sign_form(t)


def classify_records(records: list[SpaceRecord], rmax: int) -> ClassificationReport:
    """Run the grouping pipeline over enumerated records.

    Records need not carry Kreck-Stolz data yet; it is filled in lazily
    for members of coarse families only.
    """
    report = ClassificationReport(rmax=rmax)
    report.n_vectors = len(records)
    counts = {lv: LevelCount() for lv in LEVELS}

    by_r = _group_by(records, lambda rec: rec.inv.r)
    for r in sorted(by_r):
        _classify_r_group(sorted(by_r[r], key=lambda m: m.sort_key), report, counts)

    for lv in LEVELS:
        report.families[lv].sort(key=Family.sort_key)
    report.undecided.sort(key=Family.sort_key)
    report.counts = counts
    _check_monotone(counts)
    return report


def _check_monotone(counts):
    h, t, m = counts[HOMOTOPY], counts[TANGENTIAL], counts[HOMEOMORPHISM]
    if not (h.min <= t.min and h.max <= t.max and t.min <= m.min and t.max <= m.max):
        raise AssertionError(f"class counts not monotone: {counts}")


def _with_ks(rec: SpaceRecord) -> SpaceRecord:
    if rec.ks is not None:
        return rec
    return SpaceRecord(pv=rec.pv, inv=rec.inv, ks=kreck_stolz(rec.pv))


def _classify_r_group(records, report: ClassificationReport, counts) -> None:
    coarse_groups = _group_by(records, lambda m: _level_key(m.oriented_tuple(), COARSE))
    for ckey in sorted(coarse_groups):
        members = coarse_groups[ckey]
        exact = LevelCount(1, 1)
        if len(members) == 1:
            # no comparison needed at any level; one class throughout
            for lv in LEVELS:
                counts[lv] += exact
            continue
        counts[COARSE] += exact
        members = [_with_ks(m) for m in members]
        family = Family(level=COARSE, key=_representative_key(members, COARSE),
                        members=members)
        report.families[COARSE].append(family)
        decided = [m for m in members if m.ks.condition_c]
        failing = [m for m in members if not m.ks.condition_c]
        if failing:
            family.undecided = True
            report.undecided.append(
                Family(level=COARSE, key=family.key, members=members, undecided=True)
            )
            _count_undecided(decided, failing, counts)
            continue
        _refine_decided(members, report, counts)


def _refine_decided(members, report, counts) -> None:
    """Exact refinement of a fully decided coarse family."""
    hom_groups = _group_by(members, lambda m: _level_key(m.oriented_tuple(), HOMOTOPY))
    counts[HOMOTOPY] += LevelCount(len(hom_groups), len(hom_groups))
    n_tan = n_homeo = 0
    for hkey in sorted(hom_groups):
        hmembers = hom_groups[hkey]
        if len(hmembers) >= 2:
            report.families[HOMOTOPY].append(
                Family(HOMOTOPY, _representative_key(hmembers, HOMOTOPY), hmembers)
            )
        tan_groups = _group_by(
            hmembers, lambda m: _level_key(m.oriented_tuple(), TANGENTIAL)
        )
        n_tan += len(tan_groups)
        for tkey in sorted(tan_groups):
            tmembers = tan_groups[tkey]
            if len(tmembers) >= 2:
                report.families[TANGENTIAL].append(
                    Family(TANGENTIAL, _representative_key(tmembers, TANGENTIAL), tmembers)
                )
            homeo_groups = _group_by(
                tmembers, lambda m: _level_key(m.oriented_tuple(), HOMEOMORPHISM)
            )
            n_homeo += len(homeo_groups)
            for okey in sorted(homeo_groups):
                omembers = homeo_groups[okey]
                if len(omembers) >= 2:
                    report.families[HOMEOMORPHISM].append(
                        Family(
                            HOMEOMORPHISM,
                            _representative_key(omembers, HOMEOMORPHISM),
                            omembers,
                        )
                    )
    counts[TANGENTIAL] += LevelCount(n_tan, n_tan)
    counts[HOMEOMORPHISM] += LevelCount(n_homeo, n_homeo)


def _count_undecided(decided, failing, counts) -> None:
    """Interval counts for a coarse family with condition-C failures.

    A failing member's s22/s2 are unknown, so at the homotopy level it
    may merge with any class of the family (minimum) or stand alone
    (maximum).  At levels that include p1, merging additionally needs a
    matching p1.
    """
    n_fail = len(failing)
    if decided:
        hom = len(_group_by(
            decided, lambda m: _level_key(m.oriented_tuple(), HOMOTOPY)
        ))
        tan_groups = _group_by(
            decided, lambda m: _level_key(m.oriented_tuple(), TANGENTIAL)
        )
        homeo_groups = _group_by(
            decided, lambda m: _level_key(m.oriented_tuple(), HOMEOMORPHISM)
        )
        tan, homeo = len(tan_groups), len(homeo_groups)
        decided_p1 = {m.inv.p1 for m in decided}
    else:
        hom = tan = homeo = 0
        decided_p1 = set()
    counts[HOMOTOPY] += LevelCount(max(1, hom), hom + n_fail)
    orphan_p1 = len({m.inv.p1 for m in failing} - decided_p1)
    counts[TANGENTIAL] += LevelCount(tan + orphan_p1, tan + n_fail)
    counts[HOMEOMORPHISM] += LevelCount(homeo + orphan_p1, homeo + n_fail)


HOMOTOPY_NOT_TANGENTIAL = "HomotopyNotTangential"
TANGENTIAL_NOT_HOMEO = "TangentialNotHomeo"
HOMEOMORPHIC = "Homeomorphic"
PAIR_KINDS = (HOMOTOPY_NOT_TANGENTIAL, TANGENTIAL_NOT_HOMEO, HOMEOMORPHIC)


def extract_pairs(report: ClassificationReport, kind: str):
    """Unordered member pairs witnessing a phenomenon, in deterministic order.

    HomotopyNotTangential: pairs within a homotopy family separated at the
    tangential level; TangentialNotHomeo: pairs within a tangential family
    separated at the homeomorphism level; Homeomorphic: pairs within a
    homeomorphism family.  Undecided families contribute nothing.
    """
    if kind == HOMOTOPY_NOT_TANGENTIAL:
        families, next_level = report.families[HOMOTOPY], TANGENTIAL
    elif kind == TANGENTIAL_NOT_HOMEO:
        families, next_level = report.families[TANGENTIAL], HOMEOMORPHISM
    elif kind == HOMEOMORPHIC:
        families, next_level = report.families[HOMEOMORPHISM], None
    else:
        raise ValueError(f"unknown pair kind {kind}")
    pairs = []
    for fam in families:
        for i, a in enumerate(fam.members):
            for b in fam.members[i + 1:]:
                if next_level is None or (
                    _level_key(a.oriented_tuple(), next_level)
                    != _level_key(b.oriented_tuple(), next_level)
                ):
                    pairs.append((a, b))
    pairs.sort(key=lambda p: (p[0].sort_key, p[1].sort_key))
    return pairs


def make_record(pv: ParameterVector, with_ks: bool = False) -> SpaceRecord:
    """Build a SpaceRecord for one vector (validates freeness)."""
    if not is_free_action(pv):
        raise ValueError(f"action is not free for {pv}")
    rec = SpaceRecord(pv=pv, inv=basic_invariants(pv))
    if with_ks:
        rec = _with_ks(rec)
    return rec


def classify_vectors(pvs, rmax: int | None = None) -> ClassificationReport:
    """Point evaluation: run the pipeline on an explicit list of vectors."""
    records = [make_record(pv) for pv in pvs]
    if rmax is None:
        rmax = max((rec.inv.r for rec in records), default=1)
    return classify_records(records, rmax)


def search(rmax: int, r_lo: int = 1, r_hi: int | None = None) -> ClassificationReport:
    """Enumerate all normal-form vectors with r <= rmax and classify them."""
    records = [
        SpaceRecord(pv=pv, inv=basic_invariants(pv))
        for pv in enumerate_parameter_vectors(rmax, r_lo, r_hi)
    ]
    for rec in records:
        if not satisfies_standard_form(rec.pv):
            raise AssertionError(f"enumerator produced non-standard vector {rec.pv}")
    return classify_records(records, rmax)
