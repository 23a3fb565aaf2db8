"""PDA constructions from subspace geometry and block designs.

Each family builds a TripleSystem whose conditions are then verified and
completed by the generic machinery in triples.py, never assumed here.  The
*_parameters functions evaluate the matching closed forms (exact rationals)
for any of the three orientations so measured arrays can be checked against
them.

Families (ids are the CLI tokens):
  pg              t-, m-, and (m+t)-dimensional subspaces of F_q^k
  config          points and blocks of a (v_r, b_k)-configuration
  tdesign-a       two copies of the t0-subsets of a t-(v,k,1) design, small t
  tdesign-b       complementary t1- and t2-subsets (t1 + t2 = k), large t
  tdesign-lambda  flagged subsets (subset, containing block), any lambda
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .designs import (Design, blocks_containing, certify_configuration,
                      certify_t_design, from_reference, lambda_s)
from .gf import FieldSpec
from .pda import Pda
from .subspaces import enumerate_subspaces, gaussian_binomial
from .triples import (ConditionError, TripleSystem, complete_matching,
                      orientations, triple_to_pda)

FAMILIES = ("pg", "config", "tdesign-a", "tdesign-b", "tdesign-lambda")


@dataclass(frozen=True)
class ConstructionSpec:
    """One construction instance: a family, its parameters, and an orientation."""

    family: str
    orientation: int = 1
    q: int | None = None
    k: int | None = None
    m: int | None = None
    t: int | None = None
    design: Design | str | None = None
    t0: int | None = None
    t1: int | None = None
    t2: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; have {FAMILIES}")
        if self.orientation not in (1, 2, 3):
            raise ValueError(f"orientation must be 1, 2, or 3, got {self.orientation}")
        needed = {
            "pg": ("q", "k", "m", "t"),
            "config": ("design",),
            "tdesign-a": ("design", "t0"),
            "tdesign-b": ("design", "t1", "t2"),
            "tdesign-lambda": ("design", "t0", "t1", "t2"),
        }[self.family]
        for name in needed:
            if getattr(self, name) is None:
                raise ValueError(f"family {self.family} needs --{name}")

    def resolved_design(self) -> Design:
        if isinstance(self.design, Design):
            return self.design
        return from_reference(self.design)

    def label(self) -> str:
        if self.family == "pg":
            return f"q={self.q},k={self.k},m={self.m},t={self.t}"
        if isinstance(self.design, str):
            ref = self.design
        else:
            d = self.design
            if d.t_params:
                t, v, k, lam = d.t_params
                ref = f"{t}-({v},{k},{lam})"
            elif d.config_params:
                v, r, b, k = d.config_params
                ref = f"({v}_{r},{b}_{k})"
            else:
                ref = f"v={d.v},b={d.b}"
        extra = "".join(f",t{i}={val}" for i, val in ((0, self.t0), (1, self.t1), (2, self.t2))
                        if val is not None)
        return f"design={ref}{extra}"


@dataclass(frozen=True)
class ParameterRow:
    """Closed-form scheme parameters for one construction and orientation."""

    family: str
    label: str
    orientation: int
    k: int  # users
    f: int  # rows
    q: int  # stars per column
    s: int  # symbols
    mn: Fraction
    rate: Fraction
    r_star: Fraction | None
    f_mn: int | None
    admissible: bool
    note: str = ""

    @property
    def ratio(self) -> Fraction | None:
        if self.r_star:
            return self.rate / self.r_star
        return None


def _row(family: str, label: str, orientation: int, k: int, f: int, q: int, s: int) -> ParameterRow:
    mn = Fraction(q, f)
    rate = Fraction(s, f)
    admissible = k >= 1 and s >= 1 and 0 < q < f
    note = "" if admissible else f"Q={q} outside 1..{f - 1}"
    r_star = f_mn = None
    if 0 <= mn <= 1:
        r_star, f_mn = mn_baseline(k, mn)
    return ParameterRow(family, label, orientation, k, f, q, s, mn, rate,
                        r_star, f_mn, admissible, note)


# --- hypothesis checks ----------------------------------------------------


def _check_pg(q: int, k: int, m: int, t: int) -> FieldSpec:
    field = FieldSpec.for_order(q)
    if m < 1 or t < 1 or m + t > k:
        raise ValueError(f"need m >= 1, t >= 1, m + t <= k; got m={m}, t={t}, k={k}")
    return field


def _configuration_of(design: Design) -> tuple[int, int, int, int]:
    """Derive and certify (v, r, b, k) for a design used as a configuration."""
    if design.config_params is not None:
        v, r, b, k = design.config_params
    else:
        sizes = {len(blk) for blk in design.blocks}
        if len(sizes) != 1:
            raise ValueError(f"block sizes not uniform: {sorted(sizes)}")
        k = sizes.pop()
        reps = [0] * design.v
        for blk in design.blocks:
            for p in blk:
                reps[p] += 1
        if len(set(reps)) != 1:
            raise ValueError("replication not uniform across points")
        v, r, b = design.v, reps[0], design.b
    cert = certify_configuration(design, v, r, b, k)
    if not cert:
        raise ValueError(f"not a ({v}_{r},{b}_{k})-configuration: "
                         f"{cert.condition} at {cert.witness}")
    return v, r, b, k


def _t_design_of(design: Design) -> tuple[int, int, int, int]:
    if design.t_params is None:
        raise ValueError("design carries no t-design parameters")
    t, v, k, lam = design.t_params
    cert = certify_t_design(design, t, v, k, lam)
    if not cert:
        raise ValueError(f"not a {t}-({v},{k},{lam}) design: "
                         f"{cert.condition} at {cert.witness}")
    return t, v, k, lam


def _check_tdesign_a(t: int, k: int, lam: int, t0: int):
    if lam != 1:
        raise ValueError(f"this family needs lambda = 1, got {lam}")
    if 2 * t > k + 2:
        raise ValueError(f"needs t <= k/2 + 1; got t={t}, k={k}")
    if not (1 <= t0 <= t - 1 and 2 * t0 >= t):
        raise ValueError(f"needs t/2 <= t0 <= t - 1; got t0={t0}, t={t}")


def _check_tdesign_b(t: int, k: int, lam: int, t1: int, t2: int):
    if lam != 1:
        raise ValueError(f"this family needs lambda = 1, got {lam}")
    if t1 < 1 or t2 < 1 or t1 + t2 != k:
        raise ValueError(f"needs t1, t2 >= 1 with t1 + t2 = k; got t1={t1}, t2={t2}, k={k}")
    if max(t1, t2) >= t:
        raise ValueError(f"needs max(t1, t2) < t; got t1={t1}, t2={t2}, t={t}")


def _check_tdesign_lambda(t: int, k: int, t0: int, t1: int, t2: int):
    if t1 < 1 or t2 < 1 or t0 != t1 + t2:
        raise ValueError(f"needs t1, t2 >= 1 with t0 = t1 + t2; got {t0}, {t1}, {t2}")
    if t0 > t:
        raise ValueError(f"needs t0 <= t; got t0={t0}, t={t}")


# --- triple builders ------------------------------------------------------


def pg_triple(q: int, k: int, m: int, t: int) -> TripleSystem:
    """Rows = t-dim, symbols = m-dim, columns = (m+t)-dim subspaces of F_q^k.

    A row and symbol are incident when the subspaces meet trivially; rows and
    symbols are incident to the columns containing them.
    """
    field = _check_pg(q, k, m, t)
    xs = enumerate_subspaces(field, k, t)
    ys = enumerate_subspaces(field, k, m)
    zs = enumerate_subspaces(field, k, m + t)
    vx = [x.vectors() for x in xs]
    vy = [y.vectors() for y in ys]
    vz = [z.vectors() for z in zs]
    c_xy = tuple(tuple(1 if len(a & b) == 1 else 0 for b in vy) for a in vx)
    c_xz = tuple(tuple(1 if a <= c else 0 for c in vz) for a in vx)
    c_yz = tuple(tuple(1 if b <= c else 0 for c in vz) for b in vy)
    return TripleSystem(tuple(xs), tuple(ys), tuple(zs), c_xy, c_xz, c_yz)


def configuration_triple(design: Design) -> TripleSystem:
    """Rows and symbols are both the point set; columns are the blocks.

    Distinct points are incident when some block holds both.
    """
    v, r, b, k = _configuration_of(design)
    in_block = set()
    for blk in design.blocks:
        in_block.update(itertools.combinations(blk, 2))
    c_xy = tuple(tuple(1 if x != y and (min(x, y), max(x, y)) in in_block else 0
                       for y in range(v)) for x in range(v))
    blocksets = [set(blk) for blk in design.blocks]
    member = tuple(tuple(1 if x in blk else 0 for blk in blocksets)
                   for x in range(v))
    return TripleSystem(tuple(range(v)), tuple(range(v)),
                        tuple(range(b)), c_xy, member, member)


def tdesign_a_triple(design: Design, t0: int) -> TripleSystem:
    """Rows and symbols are the t0-subsets of the points of a t-(v,k,1) design.

    Two subsets are incident when they are disjoint and some block covers
    their union (a single map probe: the union's first t points determine the
    only candidate block).
    """
    t, v, k, lam = _t_design_of(design)
    _check_tdesign_a(t, k, lam, t0)
    subsets = list(itertools.combinations(range(v), t0))
    index = {sub: i for i, sub in enumerate(subsets)}
    block_of = {}
    for i, blk in enumerate(design.blocks):
        for sub in itertools.combinations(blk, t):
            block_of[sub] = i
    blocksets = [set(blk) for blk in design.blocks]

    def covered(u: tuple) -> bool:
        i = block_of.get(u[:t])
        return i is not None and set(u) <= blocksets[i]

    n = len(subsets)
    c_xy = [[0] * n for _ in range(n)]
    for xi, x in enumerate(subsets):
        xset = set(x)
        for yi, y in enumerate(subsets):
            if xset.isdisjoint(y) and covered(tuple(sorted(x + y))):
                c_xy[xi][yi] = 1
    member = [[0] * design.b for _ in range(n)]
    for i, blk in enumerate(design.blocks):
        for sub in itertools.combinations(blk, t0):
            member[index[sub]][i] = 1
    labels = tuple(subsets)
    member = tuple(tuple(r) for r in member)
    return TripleSystem(labels, labels, tuple(range(design.b)),
                        tuple(tuple(r) for r in c_xy), member, member)


def tdesign_b_triple(design: Design, t1: int, t2: int) -> TripleSystem:
    """Rows are t1-subsets, symbols t2-subsets, with t1 + t2 = k.

    A row and symbol are incident when disjoint with their union a block
    (which is then the unique column containing both).
    """
    t, v, k, lam = _t_design_of(design)
    _check_tdesign_b(t, k, lam, t1, t2)
    xs = list(itertools.combinations(range(v), t1))
    ys = list(itertools.combinations(range(v), t2))
    block_index = {blk: i for i, blk in enumerate(design.blocks)}
    c_xy = tuple(tuple(1 if set(x).isdisjoint(y) and tuple(sorted(x + y)) in block_index
                       else 0 for y in ys) for x in xs)

    def membership(subsets, size):
        idx = {sub: i for i, sub in enumerate(subsets)}
        mat = [[0] * design.b for _ in subsets]
        for i, blk in enumerate(design.blocks):
            for sub in itertools.combinations(blk, size):
                mat[idx[sub]][i] = 1
        return tuple(tuple(r) for r in mat)

    return TripleSystem(tuple(xs), tuple(ys), tuple(range(design.b)),
                        c_xy, membership(xs, t1), membership(ys, t2))


def tdesign_lambda_triple(design: Design, t0: int, t1: int, t2: int) -> TripleSystem:
    """Flagged variant for any lambda: labels are (subset, block index) pairs.

    Rows carry t1-subsets, symbols t2-subsets, columns t0-subsets, each paired
    with a containing block; incidence requires equal blocks plus disjointness
    (row/symbol) or containment (against columns).
    """
    t, v, k, lam = _t_design_of(design)
    _check_tdesign_lambda(t, k, t0, t1, t2)

    def flags(size):
        return [(sub, bi) for sub in itertools.combinations(range(v), size)
                for bi in blocks_containing(design, sub)]

    xs, ys, zs = flags(t1), flags(t2), flags(t0)
    c_xy = tuple(tuple(1 if b1 == b2 and set(a1).isdisjoint(a2) else 0
                       for (a2, b2) in ys) for (a1, b1) in xs)
    c_xz = tuple(tuple(1 if b1 == b0 and set(a1) <= set(a0) else 0
                       for (a0, b0) in zs) for (a1, b1) in xs)
    c_yz = tuple(tuple(1 if b2 == b0 and set(a2) <= set(a0) else 0
                       for (a0, b0) in zs) for (a2, b2) in ys)
    return TripleSystem(tuple(xs), tuple(ys), tuple(zs), c_xy, c_xz, c_yz)


# --- closed-form parameter rows ------------------------------------------


def pg_parameters(q: int, k: int, m: int, t: int, orientation: int) -> ParameterRow:
    _check_pg(q, k, m, t)
    label = f"q={q},k={k},m={m},t={t}"
    d_x = gaussian_binomial(k - t, m, q)
    if orientation == 1:
        kk, f = gaussian_binomial(k, t, q), gaussian_binomial(k, m, q)
        qq, s = f - d_x, gaussian_binomial(k, m + t, q)
    elif orientation == 2:
        kk, f = gaussian_binomial(k, t, q), gaussian_binomial(k, m + t, q)
        qq, s = f - d_x, gaussian_binomial(k, m, q)
    else:
        kk, f = gaussian_binomial(k, m + t, q), gaussian_binomial(k, t, q)
        qq, s = f - gaussian_binomial(m + t, t, q), gaussian_binomial(k, m, q)
    return _row("pg", label, orientation, kk, f, qq, s)


def configuration_parameters(v: int, r: int, b: int, k: int,
                             orientation: int, label: str = "") -> ParameterRow:
    if b * k != v * r:
        raise ValueError(f"inconsistent configuration counts: bk={b * k}, vr={v * r}")
    label = label or f"({v}_{r},{b}_{k})"
    if orientation == 1:
        kk, f, qq, s = v, v, v - r, b
    elif orientation == 2:
        kk, f, qq, s = v, b, b - r, v
    else:
        kk, f, qq, s = b, v, v - k, v
    return _row("config", label, orientation, kk, f, qq, s)


def tdesign_a_parameters(t: int, v: int, k: int, t0: int,
                         orientation: int, label: str = "") -> ParameterRow:
    _check_tdesign_a(t, k, 1, t0)
    label = label or f"{t}-({v},{k},1),t0={t0}"
    b = lambda_s(t, v, k, 1, 0)
    cover = lambda_s(t, v, k, 1, t0)
    n = comb(v, t0)
    if orientation == 1:
        kk, f, qq, s = n, n, n - cover, b
    elif orientation == 2:
        kk, f, qq, s = n, b, b - cover, n
    else:
        kk, f, qq, s = b, n, n - comb(k, t0), n
    return _row("tdesign-a", label, orientation, kk, f, qq, s)


def tdesign_b_parameters(t: int, v: int, k: int, t1: int, t2: int,
                         orientation: int, label: str = "") -> ParameterRow:
    _check_tdesign_b(t, k, 1, t1, t2)
    label = label or f"{t}-({v},{k},1),t1={t1},t2={t2}"
    b = lambda_s(t, v, k, 1, 0)
    cover = lambda_s(t, v, k, 1, t1)
    if orientation == 1:
        kk, f, qq, s = comb(v, t1), comb(v, t2), comb(v, t2) - cover, b
    elif orientation == 2:
        kk, f, qq, s = comb(v, t1), b, b - cover, comb(v, t2)
    else:
        kk, f, qq, s = b, comb(v, t1), comb(v, t1) - comb(k, t1), comb(v, t2)
    return _row("tdesign-b", label, orientation, kk, f, qq, s)


def tdesign_lambda_parameters(t: int, v: int, k: int, lam: int, t0: int, t1: int, t2: int,
                              orientation: int, label: str = "") -> ParameterRow:
    _check_tdesign_lambda(t, k, t0, t1, t2)
    label = label or f"{t}-({v},{k},{lam}),t0={t0},t1={t1},t2={t2}"
    nx = comb(v, t1) * lambda_s(t, v, k, lam, t1)
    ny = comb(v, t2) * lambda_s(t, v, k, lam, t2)
    nz = comb(v, t0) * lambda_s(t, v, k, lam, t0)
    d_x = comb(k - t1, t2)
    d_z = comb(t0, t1)
    if orientation == 1:
        kk, f, qq, s = nx, ny, ny - d_x, nz
    elif orientation == 2:
        kk, f, qq, s = nx, nz, nz - d_x, ny
    else:
        kk, f, qq, s = nz, nx, nx - d_z, ny
    return _row("tdesign-lambda", label, orientation, kk, f, qq, s)


# --- baselines ------------------------------------------------------------


def mn_baseline(k_users: int, mn: Fraction) -> tuple[Fraction, int | None]:
    """Benchmark rate K(1 - M/N)/(1 + K M/N) and, when K*M/N is an integer,
    the benchmark subpacketization C(K, K*M/N)."""
    mn = Fraction(mn)
    if k_users < 1 or not 0 <= mn <= 1:
        raise ValueError(f"need K >= 1 and 0 <= M/N <= 1, got K={k_users}, M/N={mn}")
    r_star = Fraction(k_users * (1 - mn), 1 + k_users * mn)
    cached = k_users * mn
    f_star = comb(k_users, int(cached)) if cached.denominator == 1 else None
    return r_star, f_star


def configuration_rate_bound(v: int, r: int, k: int) -> tuple[Fraction, Fraction]:
    """Orientation-1 rate r/k of a configuration next to the benchmark-derived
    lower bound r^2/(v - 1 + r); the two coincide exactly for a BIBD."""
    return Fraction(r, k), Fraction(r * r, v - 1 + r)


def bibd_rate_identity(v: int, k: int) -> tuple[Fraction, Fraction]:
    """For a (v,k,1)-BIBD: rate r/k and the bound, which must agree."""
    r = Fraction(v - 1, k - 1)
    if r.denominator != 1:
        raise ValueError(f"no (v,k,1)-BIBD: r = {r} is not an integer")
    b = Fraction(v * int(r), k)
    if b.denominator != 1:
        raise ValueError(f"no (v,k,1)-BIBD: b = {b} is not an integer")
    rate, bound = configuration_rate_bound(v, int(r), k)
    if rate != bound:
        raise AssertionError(f"rate identity broken at (v={v}, k={k})")
    return rate, bound


# --- spec-driven dispatch -------------------------------------------------


def build_triple(spec: ConstructionSpec) -> TripleSystem:
    if spec.family == "pg":
        return pg_triple(spec.q, spec.k, spec.m, spec.t)
    design = spec.resolved_design()
    if spec.family == "config":
        return configuration_triple(design)
    if spec.family == "tdesign-a":
        return tdesign_a_triple(design, spec.t0)
    if spec.family == "tdesign-b":
        return tdesign_b_triple(design, spec.t1, spec.t2)
    return tdesign_lambda_triple(design, spec.t0, spec.t1, spec.t2)


def closed_form_row(spec: ConstructionSpec) -> ParameterRow:
    label = spec.label()
    if spec.family == "pg":
        return pg_parameters(spec.q, spec.k, spec.m, spec.t, spec.orientation)
    design = spec.resolved_design()
    if spec.family == "config":
        v, r, b, k = _configuration_of(design)
        return configuration_parameters(v, r, b, k, spec.orientation, label)
    t, v, k, lam = _t_design_of(design)
    if spec.family == "tdesign-a":
        return tdesign_a_parameters(t, v, k, spec.t0, spec.orientation, label)
    if spec.family == "tdesign-b":
        return tdesign_b_parameters(t, v, k, spec.t1, spec.t2, spec.orientation, label)
    return tdesign_lambda_parameters(t, v, k, lam, spec.t0, spec.t1, spec.t2,
                                     spec.orientation, label)


def construct_pda(spec: ConstructionSpec) -> Pda:
    """Full pipeline: build the triple, complete it, orient it, emit the array."""
    matched = complete_matching(build_triple(spec))
    oriented = orientations(matched)[spec.orientation - 1]
    try:
        return triple_to_pda(oriented)
    except ConditionError:
        raise
    except ValueError as exc:
        raise ValueError(f"orientation {spec.orientation} of {spec.family} "
                         f"({spec.label()}) is inadmissible: {exc}") from None
