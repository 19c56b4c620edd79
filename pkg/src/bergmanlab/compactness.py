"""Compactness diagnostics for Hankel-operator products on A^2(Omega).

Two independent numerical signatures are computed: decay (or not) of the
Gram functional along weakly-null test sequences, and growth (or not) of the
near-top eigenvalue count of nested finite sections.  Verdicts are
deterministic functions of the recorded data with the thresholds below.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NoBoundaryDisk, NotHarmonicOnDisk, TaylorTailTooLarge
from .moments import MomentTable
from .sections import (
    OperatorSection,
    hankel_pairing,
    hankel_product_section,
    project_symbol,
    symbol_inner,
    symbol_inner_error,
)
from .shadow import BoundaryDisk, detect_boundary_disks
from .symbols import MonomialSymbol

# Verdict thresholds (artifact conventions, echoed into every report).
VERDICT_ATOL = 1e-12          # below this the functional counts as identically zero
DECAY_FRACTION = 0.05         # tail below this fraction of the peak => decays
BOUNDED_FRACTION = 0.5        # tail above this fraction of the peak => bounded away
LIMIT_FIT_WINDOW = 0.5        # fraction of the sequence used for the limit fit

DECAYS = "decays_to_zero"
BOUNDED = "bounded_away_from_zero"
INCONCLUSIVE = "inconclusive"

CLASS_HOLOMORPHIC = "holomorphic"
CLASS_NONHOLOMORPHIC = "antiholomorphic_or_mixed_nonholomorphic"
CLASS_NOT_HARMONIC = "not_harmonic"


@dataclass(frozen=True)
class DiskSymbolProfile:
    """A symbol restricted to a boundary disk, aggregated per exponent pair."""

    disk: BoundaryDisk
    restricted: tuple[tuple[complex, int, int], ...]
    classification: str


def classify_symbol_on_disks(
    symbol: MonomialSymbol, disks: list[BoundaryDisk]
) -> list[DiskSymbolProfile]:
    """Classify the restriction of a symbol to each boundary disk.

    The representative base point is the positive real one (w0 or z0 equal to
    the base modulus); rotation invariance of the moments makes the computed
    functionals independent of this choice for the supported symbol class.
    """
    out = []
    for disk in disks:
        if disk.orientation == "horizontal":
            restricted = symbol.restrict_horizontal(disk.base_modulus)
        else:
            restricted = symbol.restrict_vertical(disk.base_modulus)
        if any(a > 0 and b > 0 for _, a, b in restricted):
            cls = CLASS_NOT_HARMONIC
        elif all(b == 0 for _, _, b in restricted):
            cls = CLASS_HOLOMORPHIC
        else:
            cls = CLASS_NONHOLOMORPHIC
        out.append(DiskSymbolProfile(disk=disk, restricted=restricted, classification=cls))
    return out


def _require_harmonic_on_disks(table: MomentTable, *symbols: MonomialSymbol):
    disks = detect_boundary_disks(table.shadow)
    profiles = []
    for symbol in symbols:
        profs = classify_symbol_on_disks(symbol, disks)
        for prof in profs:
            if prof.classification == CLASS_NOT_HARMONIC:
                raise NotHarmonicOnDisk(
                    f"symbol {symbol.describe()} is not harmonic on the "
                    f"{prof.disk.orientation} boundary disk"
                )
        profiles.append(profs)
    return disks, profiles


def sequence_verdict(magnitudes: list[float]) -> tuple[str, dict]:
    """Deterministic decay/bounded verdict for a functional magnitude sequence.

    Tiers: identically-zero tolerance, then the last-quarter window against
    the peak, then a least-squares limit extrapolated from the last half
    (|v_m| ~ L + A/(m+1)) compared against the same fractions.
    """
    vmax = max(magnitudes)
    details: dict = {
        "atol": VERDICT_ATOL,
        "decay_fraction": DECAY_FRACTION,
        "bounded_fraction": BOUNDED_FRACTION,
        "peak": vmax,
    }
    if vmax <= VERDICT_ATOL:
        details["rule"] = "peak_below_atol"
        return DECAYS, details
    n = len(magnitudes)
    window = magnitudes[-max(n // 4, 1):]
    details["last_quarter_min"] = min(window)
    details["last_quarter_max"] = max(window)
    if min(window) > BOUNDED_FRACTION * vmax:
        details["rule"] = "last_quarter_above_bounded_fraction"
        return BOUNDED, details
    if max(window) < DECAY_FRACTION * vmax:
        details["rule"] = "last_quarter_below_decay_fraction"
        return DECAYS, details
    half = magnitudes[-max(int(n * LIMIT_FIT_WINDOW), 2):]
    idx0 = n - len(half)
    x = np.array([1.0 / (idx0 + k + 1.0) for k in range(len(half))])
    design = np.vstack([x, np.ones_like(x)]).T
    slope, intercept = np.linalg.lstsq(design, np.array(half), rcond=None)[0]
    details["limit_estimate"] = float(intercept)
    details["limit_slope"] = float(slope)
    if abs(intercept) < DECAY_FRACTION * vmax:
        details["rule"] = "extrapolated_limit_below_decay_fraction"
        return DECAYS, details
    if intercept > BOUNDED_FRACTION * vmax:
        details["rule"] = "extrapolated_limit_above_bounded_fraction"
        return BOUNDED, details
    details["rule"] = "no_tier_matched"
    return INCONCLUSIVE, details


@dataclass(frozen=True)
class RayFunctionalResult:
    m_values: tuple[int, ...]
    values: tuple[complex, ...]
    error_bounds: tuple[float, ...]
    verdict: str
    verdict_details: dict
    witness_sup: tuple[float, ...]


def monomial_ray_functional(
    table: MomentTable,
    phi: MonomialSymbol,
    psi: MonomialSymbol,
    f1: MonomialSymbol,
    f2: MonomialSymbol,
    m_max: int,
    jobs: int = 1,
) -> RayFunctionalResult:
    """Gram functional along the normalized monomial ray h_m = w^m / ||w^m||.

    v_m = <H_phi(f1 h_m), H_psi(f2 h_m)>, evaluated exactly through moments;
    the weak-null witness sup{|h_m|} on |w| <= y_max/2 is reported with it.
    """
    if m_max < 8:
        raise ValueError("m_max must be at least 8")
    _require_harmonic_on_disks(table, phi, psi)

    def one(m: int):
        ray = MonomialSymbol.monomial(1.0, c=m)
        u = phi * f1 * ray
        v = psi * f2 * ray
        pu = project_symbol(table, u)
        pv = project_symbol(table, v)
        gram = symbol_inner(table, u, v) - symbol_inner(table, pu, pv)
        gram_err = symbol_inner_error(table, u, v) + symbol_inner_error(table, pu, pv)
        norm_sq, norm_err = table.moment_with_error(0, 2 * m)
        value = gram / norm_sq
        err = gram_err / norm_sq + abs(value) * norm_err / norm_sq
        witness = (0.5 * table.shadow.y_max) ** m / math.sqrt(norm_sq)
        return value, err, witness

    results = _parallel_map(one, range(m_max + 1), jobs)
    values = tuple(r[0] for r in results)
    errors = tuple(r[1] for r in results)
    witness = tuple(r[2] for r in results)
    verdict, details = sequence_verdict([abs(v) for v in values])
    return RayFunctionalResult(
        m_values=tuple(range(m_max + 1)),
        values=values,
        error_bounds=errors,
        verdict=verdict,
        verdict_details=details,
        witness_sup=witness,
    )


def _parallel_map(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- singular test sequence g_j = a_j / w^{alpha_j} ---------------------------


def half_plane_mass(radius: float, alpha: float) -> float:
    """int_H |w|^{-2 alpha} dV over the disk H of the given radius tangent to
    the real axis at 0 from below; finite exactly for alpha < 3/2 and blowing
    up logarithmically as alpha -> 1 from the left of the unit-exponent case.

    Closed form: (2R)^{2-2a} / (2-2a) * sqrt(pi) * Gamma((3-2a)/2) / Gamma(2-a).
    """
    if alpha >= 1.5:
        raise ValueError("mass integral diverges for alpha >= 3/2")
    p = 2.0 - 2.0 * alpha
    log_angular = 0.5 * math.log(math.pi) + math.lgamma(0.5 * (p + 1.0)) - math.lgamma(
        0.5 * p + 1.0
    )
    return (2.0 * radius) ** p / p * math.exp(log_angular)


@dataclass(frozen=True)
class SingularSequenceElement:
    alpha: float
    a_normalizer: float          # normalizer of the ideal (untruncated) element
    taylor_tail: float           # L2 mass fraction missed by the truncation
    coeffs: tuple[complex, ...]  # unit-norm truncated expansion about the centroid


def singular_sequence_element(
    radius: float, alpha: float, taylor_degree: int, tail_tol: float = 1e-3
) -> SingularSequenceElement:
    """Truncated, exactly renormalized element a / w^alpha of the test family.

    The base disk H sits tangent to the real axis at the boundary-disk point,
    centroid c = -i radius; the principal branch of w^{-alpha} is holomorphic
    on the lower half plane.  The degree-d Taylor polynomial about c is
    renormalized to unit A^2(H) norm, so the reported functional is exactly
    the functional of the reported element; the discarded mass fraction is
    recorded and gate-checked against tail_tol.
    """
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")
    a_ideal = 1.0 / math.sqrt(half_plane_mass(radius, alpha))
    # b_k = a * binom(-alpha, k) * c^{-alpha-k} with c = radius * e^{-i pi/2}
    coeffs = []
    binom = 1.0
    norm_sq_partial = 0.0
    for k in range(taylor_degree + 1):
        if k > 0:
            binom *= (-alpha - (k - 1)) / k
        real_factor = a_ideal * binom * radius ** (-alpha - k)
        phase = cmath.exp(1j * math.pi * (alpha + k) / 2.0)
        b_k = real_factor * phase
        coeffs.append(b_k)
        norm_sq_partial += abs(b_k) ** 2 * math.pi * radius ** (2 * k + 2) / (k + 1)
    tail = math.sqrt(max(1.0 - norm_sq_partial, 0.0))
    if tail > tail_tol:
        raise TaylorTailTooLarge(
            f"degree {taylor_degree} expansion misses {tail:.3e} of the unit mass "
            f"(tolerance {tail_tol:.1e}) at alpha = {alpha}"
        )
    scale = 1.0 / math.sqrt(norm_sq_partial)
    unit_coeffs = tuple(b * scale for b in coeffs)
    return SingularSequenceElement(
        alpha=alpha,
        a_normalizer=a_ideal,
        taylor_tail=tail,
        coeffs=unit_coeffs,
    )


def _witness_sup_far(coeffs: tuple[complex, ...], radius: float, delta: float) -> float:
    """Sampled sup |g(w')| over the part of closure(H) with |w'| >= delta.

    |g| is subharmonic, so the sup sits on the region boundary: the outer
    circle of H away from the tangent point, plus the arc |w'| = delta in H.
    """
    c = -1j * radius
    arr = np.asarray(coeffs)
    theta = np.linspace(0.0, 2.0 * math.pi, 1441)
    outer = c + radius * np.exp(1j * theta)
    outer_v = outer[np.abs(outer) >= delta] - c
    inner = delta * np.exp(1j * np.linspace(-math.pi, 0.0, 1441))
    inner_v = inner[np.abs(inner - c) <= radius + 1e-12] - c
    sup = 0.0
    for pts in (outer_v, inner_v):
        if len(pts):
            vals = np.polynomial.polynomial.polyval(pts, arr)
            sup = max(sup, float(np.max(np.abs(vals))))
    return sup


def _witness_sup_compact(coeffs: tuple[complex, ...], radius: float) -> float:
    """Sampled sup |g| over the inner compact |w' - c| <= radius/2.

    This is the half-radius disk around the centroid, where the expansion
    has a geometric tail and the payload tracks the ideal element closely.
    """
    arr = np.asarray(coeffs)
    pts = 0.5 * radius * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 1441))
    vals = np.polynomial.polynomial.polyval(pts, arr)
    return float(np.max(np.abs(vals)))


@dataclass(frozen=True)
class SingularSequenceResult:
    alphas: tuple[float, ...]
    values: tuple[complex, ...]
    a_normalizers: tuple[float, ...]
    taylor_tails: tuple[float, ...]
    witness_ideal: tuple[float, ...]    # closed form a_j delta^-alpha, ideal element
    witness_payload: tuple[float, ...]  # sampled sup of the payload, |w| >= delta
    witness_compact: tuple[float, ...]  # sampled sup of the payload, inner compact
    taylor_degree: int
    verdict: str
    verdict_details: dict


def singular_sequence_functional(
    table: MomentTable,
    phi: MonomialSymbol,
    psi: MonomialSymbol,
    f1: MonomialSymbol,
    f2: MonomialSymbol,
    alphas: list[float],
    taylor_degree: int,
    tail_tol: float = 1e-3,
    jobs: int = 1,
) -> SingularSequenceResult:
    """Gram functional along the singular family g_j = a_j / w^{alpha_j}.

    Requires a horizontal boundary disk.  The domain is rotated so the disk's
    representative base point moves to the tangent configuration (w -> -i w,
    which leaves the shadow and hence all moments unchanged), and each g_j is
    carried by its truncated unit-norm expansion about the centroid of the
    base disk H.
    """
    disks = detect_boundary_disks(table.shadow)
    if not any(d.orientation == "horizontal" for d in disks):
        raise NoBoundaryDisk("singular test family needs a horizontal boundary disk")
    _require_harmonic_on_disks(table, phi, psi)
    radius = table.shadow.y_max
    rot = -1j  # w-coordinate rotation placing the base point at the tangent point
    phi_r = phi.rotate_w(rot)
    psi_r = psi.rotate_w(rot)
    delta = radius / 4.0

    def one(alpha: float):
        elem = singular_sequence_element(radius, alpha, taylor_degree, tail_tol)
        payload = MonomialSymbol.from_terms(
            [(b, 0, 0, k, 0) for k, b in enumerate(elem.coeffs)]
        )
        value = hankel_pairing(table, phi_r, f1 * payload, psi_r, f2 * payload)
        # The ideal element a / w^alpha decreases in |w|, so its sup over
        # |w| >= delta is attained on |w| = delta, in closed form.
        ideal = elem.a_normalizer * delta ** (-alpha)
        far = _witness_sup_far(elem.coeffs, radius, delta)
        compact = _witness_sup_compact(elem.coeffs, radius)
        return value, elem, ideal, far, compact

    results = _parallel_map(one, list(alphas), jobs)
    values = tuple(r[0] for r in results)
    verdict, details = sequence_verdict([abs(v) for v in values])
    return SingularSequenceResult(
        alphas=tuple(float(a) for a in alphas),
        values=values,
        a_normalizers=tuple(r[1].a_normalizer for r in results),
        taylor_tails=tuple(r[1].taylor_tail for r in results),
        witness_ideal=tuple(r[2] for r in results),
        witness_payload=tuple(r[3] for r in results),
        witness_compact=tuple(r[4] for r in results),
        taylor_degree=taylor_degree,
        verdict=verdict,
        verdict_details=details,
    )


# -- slice decomposition of the Gram functional -------------------------------


@dataclass(frozen=True)
class SliceDecompositionResult:
    lhs: complex
    slice_term: complex
    cross_term: complex
    residual: float
    error_bound: float


def _slice_gram_field(u_terms, v_terms):
    """Slice Gram <H phi f1, H psi f2>_{Delta_w} as terms c * w^p wbar^q * r^e.

    u_terms / v_terms are the bi-monomial expansions of phi*f1 and psi*f2;
    the disk-level pairing and projections at slice radius r are closed
    forms, leaving polynomial dependence on r.
    """
    field: dict[tuple[int, int, int], complex] = {}

    def add(coeff, p, q, e):
        if coeff != 0:
            key = (p, q, e)
            field[key] = field.get(key, 0.0 + 0.0j) + coeff

    for cu, a1, b1, c1, d1 in u_terms:
        for cv, a2, b2, c2, d2 in v_terms:
            if a1 - b1 != a2 - b2:
                continue
            base = cu * cv.conjugate()
            p, q = c1 + d2, d1 + c2
            k = a1 + b2
            add(base * math.pi / (k + 1), p, q, 2 * k + 2)
            if a1 >= b1 and a2 >= b2:
                n = a1 - b1
                kappa = ((n + 1) / (a1 + 1)) * ((n + 1) / (a2 + 1))
                add(
                    -base * kappa * math.pi / (n + 1),
                    p,
                    q,
                    2 * b1 + 2 * b2 + 2 * n + 2,
                )
    return field


def slice_decomposition_residual(
    table: MomentTable,
    phi: MonomialSymbol,
    psi: MonomialSymbol,
    f1: MonomialSymbol,
    f2: MonomialSymbol,
    g: MonomialSymbol,
) -> SliceDecompositionResult:
    """Check the slice decomposition of <H_phi(f1 g), H_psi(f2 g)>_Omega.

    Right side = int_H |g|^2 (slice Gram) dV + the cross pairing of
    H_phi(f1 g) against the slicewise projection P^{Delta_w}(psi f2) times g.
    The left side is a single global moment evaluation, so the two sides
    exercise disjoint reductions.
    """
    if not (f1.is_holomorphic and f2.is_holomorphic and g.is_holomorphic):
        raise ValueError("payloads f1, f2, g must be holomorphic polynomials")
    lhs = hankel_pairing(table, phi, f1 * g, psi, f2 * g)

    u_terms = (phi * f1).terms
    v_terms = (psi * f2).terms
    g_terms = [(cv, c) for cv, _a, _b, c, _d in g.terms]

    field = _slice_gram_field(u_terms, v_terms)
    slice_term = 0.0 + 0.0j
    slice_err = 0.0
    for (p, q, e), coeff in field.items():
        for gm, m in g_terms:
            for gn, n in g_terms:
                pp, qq = p + m, q + n
                if pp != qq:
                    continue
                radial, radial_err = table.radial_moment(e, 2 * pp)
                weight = coeff * gm * gn.conjugate() * 2.0 * math.pi
                slice_term += weight * radial
                slice_err += abs(weight) * radial_err

    # Cross pairing: A = H_phi(f1 g) globally, B = P^{Delta_w}(psi f2) * g.
    u_full = phi * f1 * g
    a_sym = u_full - project_symbol(table, u_full)
    b_field = []
    for cv, a, b, c, d in v_terms:
        if a >= b:
            kappa = (a - b + 1) / (a + 1)
            for gn, n in g_terms:
                b_field.append((cv * kappa * gn, a - b, c + n, d, 2 * b))
    cross_term = 0.0 + 0.0j
    cross_err = 0.0
    for ca, a, b, c, d in a_sym.terms:
        for cb, ze, p, q, e in b_field:
            if a != b + ze or c + q != d + p:
                continue
            radial, radial_err = table.radial_moment(2 * a + 2 + e, c + d + p + q)
            weight = ca * cb.conjugate() * 2.0 * math.pi**2 / (a + 1)
            cross_term += weight * radial
            cross_err += abs(weight) * radial_err

    rhs = slice_term + cross_term
    lhs_err = symbol_inner_error(table, u_full, psi * f2 * g)
    return SliceDecompositionResult(
        lhs=lhs,
        slice_term=slice_term,
        cross_term=cross_term,
        residual=abs(lhs - rhs),
        error_bound=lhs_err + slice_err + cross_err,
    )


# -- spectral tail diagnostic --------------------------------------------------


@dataclass(frozen=True)
class SpectralTailResult:
    truncations: tuple[tuple[int, int], ...]
    spectra: tuple[tuple[float, ...], ...]
    threshold: float
    counts_above: tuple[int, ...]
    rank_tracks: dict
    verdict: str
    verdict_details: dict


def singular_tail_diagnostic(
    sections: list[OperatorSection],
    ranks: tuple[int, ...] = (5, 10, 20),
) -> SpectralTailResult:
    """Compact / non-compact signature from nested Hermitian sections.

    Non-compact: the count of eigenvalues above tau = max/2 grows with the
    w-truncation at a stable per-degree rate.  Compact: the count stops
    growing between the two largest truncations and the fixed-rank
    eigenvalues have stabilized while decaying along the rank list.  (For
    nested Hermitian sections fixed-rank eigenvalues are non-decreasing in
    the truncation by interlacing, so decay must be read along ranks, not
    along truncations.)
    """
    if len(sections) < 2:
        raise ValueError("need at least two nested truncations")
    index_sets = [set(s.index_map) for s in sections]
    for small, large in zip(index_sets, index_sets[1:]):
        if not small < large:
            raise ValueError("sections must be strictly nested")
    spectra = [tuple(float(v) for v in s.eigenvalues()) for s in sections]
    truncs = tuple((s.n_z, s.n_w) for s in sections)
    lam_max = max(spectra[-1])
    details: dict = {"lambda_max": lam_max, "atol": VERDICT_ATOL}
    if lam_max <= VERDICT_ATOL:
        return SpectralTailResult(
            truncations=truncs,
            spectra=tuple(spectra),
            threshold=0.0,
            counts_above=tuple(0 for _ in spectra),
            rank_tracks={},
            verdict=DECAYS,
            verdict_details={**details, "rule": "zero_operator"},
        )
    tau = 0.5 * lam_max
    counts = tuple(sum(1 for v in spec if v > tau) for spec in spectra)
    tracks = {
        k: tuple(spec[k - 1] if len(spec) >= k else None for spec in spectra)
        for k in ranks
    }
    details.update({"threshold": tau, "counts": counts})

    growing = all(b > a for a, b in zip(counts, counts[1:]))
    rate_first = counts[0] / (truncs[0][1] + 1)
    rate_last = counts[-1] / (truncs[-1][1] + 1)
    details.update({"rate_first": rate_first, "rate_last": rate_last})
    if growing and rate_last >= 0.5 * rate_first and rate_last > 0:
        return SpectralTailResult(
            truncations=truncs,
            spectra=tuple(spectra),
            threshold=tau,
            counts_above=counts,
            rank_tracks=tracks,
            verdict=BOUNDED,
            verdict_details={**details, "rule": "count_grows_with_truncation"},
        )

    stabilized = counts[-1] == counts[-2]
    usable = [k for k in ranks if len(spectra[-1]) >= k and len(spectra[-2]) >= k]
    rank_stable = all(
        abs(spectra[-1][k - 1] - spectra[-2][k - 1]) <= 0.05 * lam_max for k in usable
    )
    rank_decay = True
    if len(usable) >= 2:
        seq = [spectra[-1][k - 1] for k in usable]
        rank_decay = all(b <= a + 1e-15 for a, b in zip(seq, seq[1:])) and seq[-1] <= 0.75 * seq[0]
    if stabilized and rank_stable and rank_decay:
        return SpectralTailResult(
            truncations=truncs,
            spectra=tuple(spectra),
            threshold=tau,
            counts_above=counts,
            rank_tracks=tracks,
            verdict=DECAYS,
            verdict_details={**details, "rule": "count_stabilized_rank_decay"},
        )
    return SpectralTailResult(
        truncations=truncs,
        spectra=tuple(spectra),
        threshold=tau,
        counts_above=counts,
        rank_tracks=tracks,
        verdict=INCONCLUSIVE,
        verdict_details={**details, "rule": "no_tier_matched"},
    )


# -- the dichotomy experiment ---------------------------------------------------

PREDICT_COMPACT = "compact"
PREDICT_NONCOMPACT = "non_compact"


@dataclass(frozen=True)
class DichotomyResult:
    prediction: str
    prediction_basis: str
    disk_profiles_phi: tuple[DiskSymbolProfile, ...]
    disk_profiles_psi: tuple[DiskSymbolProfile, ...]
    ray: RayFunctionalResult
    spectral: SpectralTailResult
    verdict: str
    agreement: bool


def dichotomy_experiment(
    table: MomentTable,
    phi: MonomialSymbol,
    psi: MonomialSymbol,
    f1: MonomialSymbol | None = None,
    f2: MonomialSymbol | None = None,
    m_max: int = 32,
    n_z: int = 4,
    n_w_list: tuple[int, ...] = (6, 12, 18),
    jobs: int = 1,
) -> DichotomyResult:
    """Compare the two numerical signatures against the symbol-level prediction.

    Prediction: non-compact when some boundary disk carries non-holomorphic
    restrictions of both symbols; compact otherwise (certain for the bidisk's
    dichotomy and for domains with no boundary disk, exploratory elsewhere).
    Both diagnostics must concur, otherwise the verdict is inconclusive.
    """
    one = MonomialSymbol.monomial(1.0)
    f1 = one if f1 is None else f1
    f2 = one if f2 is None else f2
    disks, (prof_phi, prof_psi) = _require_harmonic_on_disks(table, phi, psi)
    both_bad = any(
        p.classification != CLASS_HOLOMORPHIC and q.classification != CLASS_HOLOMORPHIC
        for p, q in zip(prof_phi, prof_psi)
    )
    if not disks:
        prediction, basis = PREDICT_COMPACT, "no_boundary_disk"
    elif both_bad:
        prediction, basis = PREDICT_NONCOMPACT, "necessity_on_boundary_disk"
    elif table.shadow.kind == "bidisk":
        prediction, basis = PREDICT_COMPACT, "bidisk_dichotomy"
    else:
        prediction, basis = PREDICT_COMPACT, "exploratory_sufficiency"
    ray = monomial_ray_functional(table, phi, psi, f1, f2, m_max, jobs=jobs)
    sections = [
        hankel_product_section(table, psi, phi, n_z, n_w) for n_w in n_w_list
    ]
    spectral = singular_tail_diagnostic(sections)
    if ray.verdict == spectral.verdict and ray.verdict != INCONCLUSIVE:
        verdict = ray.verdict
    else:
        verdict = INCONCLUSIVE
    agreement = (prediction == PREDICT_NONCOMPACT and verdict == BOUNDED) or (
        prediction == PREDICT_COMPACT and verdict == DECAYS
    )
    return DichotomyResult(
        prediction=prediction,
        prediction_basis=basis,
        disk_profiles_phi=tuple(prof_phi),
        disk_profiles_psi=tuple(prof_psi),
        ray=ray,
        spectral=spectral,
        verdict=verdict,
        agreement=agreement,
    )
