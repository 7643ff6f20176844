"""Standard harmonic cycle and cocycle, with the identities tying them together.

Two routes are provided for each.  The enumeration route sums
w(C_U) C_U over all cycletrees (c(C_U*) C_U* over dual cycletrees).  The
kernel route takes the primitive generator h of ker Laplacian_i and
rescales it so that z . lambda = w(z) k_i holds for one cycle z.  Both
are exact; the certificate checks they agree.

Orientation: winding numbers are multiplied by the global sign that makes
the leading nonzero coefficient of lambda positive, and cutting numbers
by the sign that does the same for lambda*.  With that choice lambda and
lambda* point the same way.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .complex import Chain, ChainComplex, adjoin_virtual_cell
from .cycletrees import CycletreeSummary, enumerate_cycletrees, enumerate_dual_cycletrees
from .errors import ConditionError
from .forests import DEFAULT_CAP, dual_tree_number, tree_number
from .homology import HomologySummary, cohomology, homology_of_maps, reduced_homology, relative_homology
from .linalg import IntMatrix, dot, kernel_basis
from .winding import DeterminantForm, cutting_form, winding_form


def require_unicycle(X: ChainComplex, i: int) -> tuple[HomologySummary, HomologySummary, HomologySummary]:
    """Return (H_{i-1}, H_i, H_{i+1}) or raise if their ranks are not (0, 1, 0)."""
    hs = tuple(reduced_homology(X, j) for j in (i - 1, i, i + 1))
    ranks = tuple(h.rank for h in hs)
    if ranks != (0, 1, 0):
        want = (0, 1, 0)
        bad = [f"rk H̃_{j} = {r} ≠ {w}" for j, r, w in zip((i - 1, i, i + 1), ranks, want) if r != w]
        raise ConditionError(
            f"unicycle condition fails in dimension {i}: " + "; ".join(bad)
            + f" (ranks H~_{i - 1}, H~_{i}, H~_{i + 1} = {ranks[0]}, {ranks[1]}, {ranks[2]})")
    return hs


def _leading_sign(v: Sequence) -> int:
    for x in v:
        if x:
            return 1 if x > 0 else -1
    return 0


def _harmonic_generator(X: ChainComplex, i: int) -> tuple[int, ...]:
    K = kernel_basis(X.laplacian(i))
    if len(K) != 1:
        raise ConditionError(f"harmonic space in dimension {i} has dimension {len(K)}, expected 1")
    return K[0]


def _rescale(h: Sequence[int], form: DeterminantForm, number: int, dim: int) -> Chain:
    for z in form.basis:
        wz = form(z)
        if wz:
            break
    else:
        raise RuntimeError("internal error: no basis (co)cycle with nonzero determinant form")
    s = dot(z, h)
    if s == 0:
        raise RuntimeError("internal error: harmonic generator orthogonal to a non-trivial class")
    scale = Fraction(wz * number, s)
    lam = Chain(dim, tuple(scale * x for x in h)).scale(1)
    if not lam.is_integral():
        raise RuntimeError(f"internal error: rescaled harmonic vector is not integral: {lam.coeffs}")
    return Chain(dim, lam.as_ints())


def _brute(parts: list[CycletreeSummary], form: DeterminantForm, n: int, dim: int) -> Chain:
    acc = [0] * n
    for U in parts:
        if U.content:
            w = form(U.cycle_part)
            if w:
                for k, a in enumerate(U.cycle_part):
                    acc[k] += w * a
    return Chain(dim, tuple(acc))


def _oriented(v: Chain) -> Chain:
    return -v if _leading_sign(v) < 0 else v


@lru_cache(maxsize=256)
def _raw_fast(X: ChainComplex, i: int, dual: bool) -> Chain:
    require_unicycle(X, i)
    h = _harmonic_generator(X, i)
    if dual:
        return _rescale(h, cutting_form(X, i), dual_tree_number(X, i), i)
    return _rescale(h, winding_form(X, i), tree_number(X, i), i)


def orientation(X: ChainComplex, i: int, dual: bool = False) -> int:
    """Global sign applied to raw winding (cutting) numbers."""
    return _leading_sign(_raw_fast(X, i, dual))


def winding_number(X: ChainComplex, i: int, z: Chain | Sequence[int]) -> int:
    """w(z) for an integer i-cycle, oriented so lambda leads positive.

    When the unicycle condition fails but rk H_i = 1, the raw (basis
    dependent) sign is returned.
    """
    raw = winding_form(X, i)(z)
    try:
        return orientation(X, i) * raw
    except ConditionError:
        return raw


def cutting_number(X: ChainComplex, i: int, z: Chain | Sequence[int]) -> int:
    """c(z) for an integer i-cocycle, oriented so lambda* leads positive."""
    raw = cutting_form(X, i)(z)
    try:
        return orientation(X, i, dual=True) * raw
    except ConditionError:
        return raw


def standard_harmonic_cycle_bruteforce(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> Chain:
    require_unicycle(X, i)
    lam = _brute(enumerate_cycletrees(X, i, cap), winding_form(X, i), X.size(i), i)
    return _oriented(lam)


def standard_harmonic_cycle_fast(X: ChainComplex, i: int) -> Chain:
    return _oriented(_raw_fast(X, i, False))


def standard_harmonic_cocycle_bruteforce(X: ChainComplex, i: int, cap: int = DEFAULT_CAP) -> Chain:
    require_unicycle(X, i)
    lam = _brute(enumerate_dual_cycletrees(X, i, cap), cutting_form(X, i), X.size(i), i)
    return _oriented(lam)


def standard_harmonic_cocycle_fast(X: ChainComplex, i: int) -> Chain:
    return _oriented(_raw_fast(X, i, True))


def _by_mode(brute, fast, X, i, mode, cap):
    if mode == "fast":
        return fast(X, i)
    if mode == "brute":
        return brute(X, i, cap)
    if mode == "both":
        a, b = brute(X, i, cap), fast(X, i)
        if a != b:
            raise RuntimeError(f"routes disagree: enumeration {a.coeffs} vs kernel {b.coeffs}")
        return a
    raise ValueError(f"unknown mode {mode!r}")


def standard_harmonic_cycle(X: ChainComplex, i: int, mode: str = "fast", cap: int = DEFAULT_CAP) -> Chain:
    return _by_mode(standard_harmonic_cycle_bruteforce, standard_harmonic_cycle_fast, X, i, mode, cap)


def standard_harmonic_cocycle(X: ChainComplex, i: int, mode: str = "fast", cap: int = DEFAULT_CAP) -> Chain:
    return _by_mode(standard_harmonic_cocycle_bruteforce, standard_harmonic_cocycle_fast, X, i, mode, cap)


def rational_winding(X: ChainComplex, i: int, z: Chain | Sequence) -> Fraction:
    """z . lambda / k_i for any i-chain z."""
    lam = standard_harmonic_cycle_fast(X, i)
    return Fraction(dot(tuple(z), lam.coeffs)) / tree_number(X, i)


def rational_cutting(X: ChainComplex, i: int, z: Chain | Sequence) -> Fraction:
    """z . lambda* / k^i for any i-chain z."""
    lam = standard_harmonic_cocycle_fast(X, i)
    return Fraction(dot(tuple(z), lam.coeffs)) / dual_tree_number(X, i)


@dataclass(frozen=True)
class HomologyCheck:
    number: int               # w(z) or c(z)
    homology: HomologySummary  # of X with the virtual cell attached
    exact_sequence_ok: bool | None = None

    @property
    def ok(self) -> bool:
        return abs(self.number) == self.homology.weight and self.exact_sequence_ok is not False


def winding_homology_check(X: ChainComplex, i: int, z: Chain | Sequence[int],
                           cycletree: CycletreeSummary | None = None) -> HomologyCheck:
    """Compare |w(z)| with |H_i(X + e)| where e is a virtual (i+1)-cell bounding z.

    With a cycletree U (and z = C_U) also check
    wt(U) |w(C_U / gcd)| = |H_i(X, U)| |H_{i-1}(X)|, or both sides infinite.
    """
    coeffs = z.as_ints() if isinstance(z, Chain) else tuple(int(x) for x in z)
    w = winding_number(X, i, coeffs)
    Xe = adjoin_virtual_cell(X, i + 1, Chain(i, coeffs))
    h = reduced_homology(Xe, i)
    seq = None
    if cycletree is not None:
        rel = relative_homology(X, cycletree.selection, i)
        below = reduced_homology(X, i - 1)
        if w:
            wp = winding_number(X, i, cycletree.primitive_part)
            seq = rel.is_finite and cycletree.weight * abs(wp) == rel.order * below.order
        else:
            seq = not rel.is_finite
    return HomologyCheck(w, h, seq)


def cutting_homology_check(X: ChainComplex, i: int, z: Chain | Sequence[int]) -> HomologyCheck:
    """Compare |c(z)| with |H^i(X + e)| where e is a virtual (i-1)-cell with coboundary z."""
    coeffs = z.as_ints() if isinstance(z, Chain) else tuple(int(x) for x in z)
    c = cutting_number(X, i, coeffs)
    incoming = X.coboundary(i - 1).hstack(IntMatrix.from_columns([coeffs], X.size(i)))
    h = homology_of_maps(incoming, X.coboundary(i), i)
    return HomologyCheck(c, h)


@dataclass
class HarmonicCertificate:
    dim: int
    lam: Chain
    lam_star: Chain
    k: int
    k_dual: int
    h_below: int
    h_above: int
    ratio_sign: int
    residuals: dict[str, Fraction] = field(default_factory=dict)
    fingerprint: str = ""
    mode: str = "both"

    @property
    def ok(self) -> bool:
        return all(r == 0 for r in self.residuals.values())

    @property
    def normalized(self) -> Chain:
        return self.lam.scale(Fraction(1, self.h_below))

    def to_dict(self) -> dict:
        s = _jsonable
        return {
            "dim": s(self.dim),
            "lambda": [s(a) for a in self.lam],
            "lambda_star": [s(a) for a in self.lam_star],
            "k_i": s(self.k),
            "k^i": s(self.k_dual),
            "order_H_below": s(self.h_below),
            "order_H_above": s(self.h_above),
            "ratio_sign": s(self.ratio_sign),
            "residuals": {k: s(v) for k, v in sorted(self.residuals.items())},
            "basis_fingerprint": self.fingerprint,
            "mode": self.mode,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _jsonable(x) -> str:
    return str(Fraction(x))


def _abs_sum(values) -> Fraction:
    return sum((abs(Fraction(v)) for v in values), Fraction(0))


def build_certificate(X: ChainComplex, i: int, mode: str = "both", cap: int = DEFAULT_CAP,
                      energy_samples: int = 100, seed: int = 0) -> HarmonicCertificate:
    """Compute lambda, lambda*, k_i, k^i and the residual of every identity.

    ``mode`` selects how lambda and lambda* are obtained ("fast", "brute",
    "both").  Identities summing over (dual) cycletrees are only evaluated
    when enumeration is allowed, i.e. in "brute" and "both" modes.
    """
    hs = require_unicycle(X, i)
    h_below = hs[0].order
    h_above = cohomology(X, i + 1).order
    k = tree_number(X, i)
    kd = dual_tree_number(X, i)
    wf = winding_form(X, i)
    cf = cutting_form(X, i)
    ow = orientation(X, i)
    oc = orientation(X, i, dual=True)

    res: dict[str, Fraction] = {}
    if mode == "both":
        lam_b = standard_harmonic_cycle_bruteforce(X, i, cap)
        lam = standard_harmonic_cycle_fast(X, i)
        lstar_b = standard_harmonic_cocycle_bruteforce(X, i, cap)
        lstar = standard_harmonic_cocycle_fast(X, i)
        res["routes_agree_cycle"] = _abs_sum(a - b for a, b in zip(lam_b, lam))
        res["routes_agree_cocycle"] = _abs_sum(a - b for a, b in zip(lstar_b, lstar))
    else:
        lam = standard_harmonic_cycle(X, i, mode, cap)
        lstar = standard_harmonic_cocycle(X, i, mode, cap)

    L = X.laplacian(i)
    res["harmonic_cycle"] = _abs_sum(L.apply(lam.coeffs))
    res["harmonic_cocycle"] = _abs_sum(L.apply(lstar.coeffs))
    res["inner_cycle_basis"] = _abs_sum(dot(z, lam.coeffs) - ow * wf(z) * k for z in wf.basis)
    res["inner_cocycle_basis"] = _abs_sum(dot(x, lstar.coeffs) - oc * cf(x) * kd for x in cf.basis)

    ll = lam.dot(lam)
    ss = lstar.dot(lstar)
    res["norm_cycle"] = Fraction(ll - kd * k * h_below ** 2)
    res["norm_cocycle"] = Fraction(ss - kd * k * h_above ** 2)
    nbar = lam.scale(Fraction(1, h_below))
    res["normalized_norm"] = Fraction(nbar.dot(nbar)) - k * kd

    j0 = lam.support[0]
    sign = 1 if (lam[j0] > 0) == (lstar[j0] > 0) else -1
    res["cycle_cocycle_ratio"] = _abs_sum(Fraction(a, h_below) - sign * Fraction(b, h_above)
                                          for a, b in zip(lam, lstar))

    if mode in ("both", "brute"):
        wsum = sum(wf(U.cycle_part) ** 2 for U in enumerate_cycletrees(X, i, cap) if U.content)
        csum = sum(cf(U.cycle_part) ** 2 for U in enumerate_dual_cycletrees(X, i, cap) if U.content)
        res["norm_vs_winding_sum"] = Fraction(ll - k * wsum)
        res["winding_sum_vs_dual_trees"] = Fraction(wsum - kd * h_below ** 2)
        res["norm_vs_cutting_sum"] = Fraction(ss - kd * csum)
        res["tree_number_vs_cutting_sum"] = Fraction(k) - Fraction(csum, h_above ** 2)

    if energy_samples:
        rng = random.Random(seed)
        up = X.boundary(i + 1)
        bad = 0
        for _ in range(energy_samples):
            y = [rng.randint(-3, 3) for _ in range(up.ncols)]
            b = up.apply(y)
            x = [a + c for a, c in zip(lam, b)]
            gap = dot(x, x) - ll
            if gap < 0 or (gap == 0) != (not any(b)):
                bad += 1
        res["energy_minimality_violations"] = Fraction(bad)

    return HarmonicCertificate(
        dim=i, lam=lam, lam_star=lstar, k=k, k_dual=kd, h_below=h_below, h_above=h_above,
        ratio_sign=sign, residuals=res, fingerprint=f"{wf.fingerprint}:{cf.fingerprint}", mode=mode)
