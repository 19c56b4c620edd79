"""Shadow geometry of complete Reinhardt domains in C^2.

A bounded complete Reinhardt domain is determined by its absolute shadow
Z = {(|z|, |w|)} in the closed first quadrant.  Everything downstream
(slices, moments, boundary disks) only needs the horizontal slice-radius
profile y -> r_h(y), so that profile is the stored representation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptyDomain, NonConvexShadow, NonMonotoneProfile, OutOfRange

PROFILE_TOL = 1e-9       # certification tolerance for monotonicity/concavity
DISK_RADIUS_TOL = 1e-9   # slice radii below this do not count as disks
CERT_GRID = 1000         # grid size for the construction-time certification

KNOWN_KINDS = ("bidisk", "ball", "intersection", "sampled")

# Radius of the ball in the two-domain intersection example used throughout:
# the bidisk cut by a ball just large enough to leave flat boundary pieces.
INTERSECTION_PRESET_RADIUS = (1.0 + math.sqrt(2.0)) / 2.0


@dataclass(frozen=True, eq=False)
class ShadowRegion:
    """First-quadrant shadow of a complete Reinhardt domain in C^2.

    kind      -- one of bidisk / ball / intersection / sampled
    params    -- named closed-form parameters, or the sampled (y, r) nodes
    y_max     -- sup |w| over the domain
    x_max     -- sup |z| over the domain, equal to profile(0)
    """

    kind: str
    params: tuple
    y_max: float
    x_max: float
    _nodes: tuple = field(default=(), repr=False)

    def profile(self, y: float) -> float:
        """Horizontal slice radius r_h(y); non-increasing and concave."""
        if self.kind == "bidisk":
            return self.params[0]
        if self.kind == "ball":
            (radius,) = self.params
            return math.sqrt(max(radius * radius - y * y, 0.0))
        if self.kind == "intersection":
            r_z, _r_w, radius = self.params
            return min(r_z, math.sqrt(max(radius * radius - y * y, 0.0)))
        ys, rs = self._nodes
        return float(np.interp(y, ys, rs))

    def breakpoints(self) -> tuple[float, ...]:
        """Interior y where the profile loses smoothness (corner locations)."""
        if self.kind == "intersection":
            r_z, _r_w, radius = self.params
            y_split = math.sqrt(max(radius * radius - r_z * r_z, 0.0))
            if 0.0 < y_split < self.y_max:
                return (y_split,)
            return ()
        if self.kind == "sampled":
            ys, _ = self._nodes
            return tuple(float(y) for y in ys if 0.0 < y < self.y_max)
        return ()

    def describe(self) -> dict:
        if self.kind == "sampled":
            ys, rs = self._nodes
            spec = {"kind": "sampled", "points": [[float(a), float(b)] for a, b in zip(ys, rs)]}
        elif self.kind == "bidisk":
            spec = {"kind": "bidisk", "r_z": self.params[0], "r_w": self.params[1]}
        elif self.kind == "ball":
            spec = {"kind": "ball", "R": self.params[0]}
        else:
            spec = {
                "kind": "intersection",
                "r_z": self.params[0],
                "r_w": self.params[1],
                "R": self.params[2],
            }
        spec["y_max"] = self.y_max
        spec["x_max"] = self.x_max
        return spec


@dataclass(frozen=True)
class BoundaryDisk:
    """Representative analytic disk in the boundary, horizontal or vertical.

    base_modulus is |w_0| for a horizontal disk {(z, w_0): |z| < radius} and
    |z_0| for a vertical one; the full family is the rotation orbit of the
    representative.
    """

    orientation: str       # "horizontal" | "vertical"
    base_modulus: float
    radius: float

    def __post_init__(self):
        if self.orientation not in ("horizontal", "vertical"):
            raise ValueError(f"bad orientation {self.orientation!r}")
        if self.radius <= 0.0:
            raise ValueError("boundary disk must have positive radius")


def _certify(profile, y_max: float) -> None:
    ys = np.linspace(0.0, y_max, CERT_GRID)
    vals = np.array([profile(y) for y in ys])
    if np.any(vals < -PROFILE_TOL):
        raise NonMonotoneProfile("profile takes negative values")
    diffs = np.diff(vals)
    if np.any(diffs > PROFILE_TOL):
        k = int(np.argmax(diffs))
        raise NonMonotoneProfile(
            f"profile increases near y = {ys[k]:.6g} (delta {diffs[k]:.3e})"
        )
    mid = np.array([profile(0.5 * (a + b)) for a, b in zip(ys[:-2], ys[2:])])
    chords = 0.5 * (vals[:-2] + vals[2:])
    defect = chords - mid
    if np.any(defect > PROFILE_TOL):
        k = int(np.argmax(defect))
        raise NonConvexShadow(
            f"midpoint concavity fails near y = {ys[k + 1]:.6g} (defect {defect[k]:.3e})"
        )


def build_shadow(spec: dict) -> ShadowRegion:
    """Build and certify a ShadowRegion from a domain specification mapping.

    Supported kinds:
      {"kind": "bidisk", "r_z": a, "r_w": b}
      {"kind": "ball", "R": R}
      {"kind": "intersection", "r_z": a, "r_w": b, "R": R}
      {"kind": "sampled", "points": [[y0, r0], [y1, r1], ...]}
    """
    kind = spec.get("kind")
    if kind == "bidisk":
        r_z, r_w = float(spec.get("r_z", 1.0)), float(spec.get("r_w", 1.0))
        if r_z <= 0.0 or r_w <= 0.0:
            raise EmptyDomain(f"bidisk radii must be positive, got ({r_z}, {r_w})")
        region = ShadowRegion("bidisk", (r_z, r_w), y_max=r_w, x_max=r_z)
    elif kind == "ball":
        radius = float(spec.get("R", 1.0))
        if radius <= 0.0:
            raise EmptyDomain(f"ball radius must be positive, got {radius}")
        region = ShadowRegion("ball", (radius,), y_max=radius, x_max=radius)
    elif kind == "intersection":
        r_z = float(spec.get("r_z", 1.0))
        r_w = float(spec.get("r_w", 1.0))
        radius = float(spec.get("R", INTERSECTION_PRESET_RADIUS))
        if min(r_z, r_w, radius) <= 0.0:
            raise EmptyDomain("intersection parameters must be positive")
        region = ShadowRegion(
            "intersection",
            (r_z, r_w, radius),
            y_max=min(r_w, radius),
            x_max=min(r_z, radius),
        )
    elif kind == "sampled":
        points = spec.get("points")
        if not points or len(points) < 2:
            raise EmptyDomain("sampled profile needs at least two (y, r) points")
        pts = sorted((float(y), float(r)) for y, r in points)
        ys = tuple(p[0] for p in pts)
        rs = tuple(p[1] for p in pts)
        if ys[0] != 0.0:
            raise EmptyDomain("sampled profile must start at y = 0")
        if ys[-1] <= 0.0 or rs[0] <= 0.0:
            raise EmptyDomain("sampled profile has empty extent")
        region = ShadowRegion(
            "sampled",
            tuple(pts),
            y_max=ys[-1],
            x_max=rs[0],
            _nodes=(np.array(ys), np.array(rs)),
        )
    else:
        raise EmptyDomain(f"unknown domain kind {kind!r}")
    _certify(region.profile, region.y_max)
    return region


def slice_radius(shadow: ShadowRegion, y: float) -> float:
    """Radius of the horizontal slice disk at |w| = y.

    At y = y_max this is the one-sided limit of the profile, which equals the
    radius of the top boundary disk when one exists.
    """
    if y < -1e-12 or y > shadow.y_max + 1e-12:
        raise OutOfRange(f"y = {y} outside [0, {shadow.y_max}]")
    return shadow.profile(min(max(y, 0.0), shadow.y_max))


def vertical_slice_radius(shadow: ShadowRegion, x: float) -> float:
    """Radius of the vertical slice disk at |z| = x: sup{y : r_h(y) >= x}.

    Named kinds use the closed-form transposed profile; pointwise inversion
    of a strictly convex profile in doubles cannot resolve radii near the
    disk tolerance (the float plateau of sqrt(R^2 - y^2) at y = 0 is already
    ~1e-8 wide), so bisection is reserved for sampled profiles.
    """
    if x < -1e-12 or x > shadow.x_max + 1e-12:
        raise OutOfRange(f"x = {x} outside [0, {shadow.x_max}]")
    x = min(max(x, 0.0), shadow.x_max)
    if shadow.kind == "bidisk":
        return shadow.params[1]
    if shadow.kind == "ball":
        (radius,) = shadow.params
        return math.sqrt(max(radius * radius - x * x, 0.0))
    if shadow.kind == "intersection":
        _r_z, r_w, radius = shadow.params
        return min(r_w, math.sqrt(max(radius * radius - x * x, 0.0)))
    x_eff = x - 1e-12
    if shadow.profile(shadow.y_max) >= x_eff:
        return shadow.y_max
    lo, hi = 0.0, shadow.y_max
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if shadow.profile(mid) >= x_eff:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def detect_boundary_disks(shadow: ShadowRegion) -> list[BoundaryDisk]:
    """Representative boundary disks, at most one horizontal and one vertical.

    A horizontal disk exists iff the top slice radius r_h(y_max) stays above
    DISK_RADIUS_TOL; the vertical case is symmetric under swapping the axes.
    """
    disks: list[BoundaryDisk] = []
    top = shadow.profile(shadow.y_max)
    if top > DISK_RADIUS_TOL:
        disks.append(BoundaryDisk("horizontal", shadow.y_max, top))
    side = vertical_slice_radius(shadow, shadow.x_max)
    if side > DISK_RADIUS_TOL:
        disks.append(BoundaryDisk("vertical", shadow.x_max, side))
    return disks


@dataclass(frozen=True)
class SliceLimitReport:
    """Slice radii along an approach sequence plus the limit comparison."""

    y_values: tuple[float, ...]
    radii: tuple[float, ...]
    target_y: float
    target_radius: float
    errors: tuple[float, ...]
    limit_estimate: float
    rate_estimate: float | None
    passed: bool


def slice_limit_experiment(
    shadow: ShadowRegion,
    y0: float,
    approach: list[float],
    tol_abs: float = 1e-9,
) -> SliceLimitReport:
    """Check that slice radii along an approach sequence converge to r_h(y0).

    Passes when the error sequence is non-increasing over its second half and
    either ends below tol_abs or has decayed to <= 1/4 of its initial value.
    """
    if not approach:
        raise OutOfRange("approach sequence is empty")
    target = slice_radius(shadow, y0)
    radii = tuple(slice_radius(shadow, y) for y in approach)
    errors = tuple(abs(r - target) for r in radii)
    half = len(errors) // 2
    tail = errors[half:]
    monotone = all(tail[i + 1] <= tail[i] + 1e-15 for i in range(len(tail) - 1))
    decayed = errors[-1] <= max(tol_abs, 0.25 * max(errors[0], tol_abs))
    rate = None
    dists = [abs(y - y0) for y in approach]
    pairs = [(d, e) for d, e in zip(dists, errors) if d > 0 and e > 0]
    if len(pairs) >= 2:
        ld = np.log([p[0] for p in pairs])
        le = np.log([p[1] for p in pairs])
        rate = float(np.polyfit(ld, le, 1)[0])
    return SliceLimitReport(
        y_values=tuple(float(y) for y in approach),
        radii=radii,
        target_y=y0,
        target_radius=target,
        errors=errors,
        limit_estimate=radii[-1],
        rate_estimate=rate,
        passed=bool(monotone and decayed),
    )
