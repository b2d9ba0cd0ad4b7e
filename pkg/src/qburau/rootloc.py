"""Complex root localization for the numerator/denominator polynomials of
q-rationals, sampling of the singular set, and the annulus consistency
report.

The kernel is Aberth-Ehrlich simultaneous iteration with a short Newton
polish, on double-precision copies of the exact integer coefficients.
Initial guesses use fixed pseudo-random phases so runs are deterministic.
"""
from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass

import numpy as np

from .cfrac import enumerate_fractions
from .qrational import q_deform
from .braid import qmod_generator

SEED = 1717
MAX_ITER = 200
POLISH_STEPS = 3
RESIDUAL_TOL = 1e-10

INNER_PROVEN = 3 - 2 * math.sqrt(2)       # 0.171572875254...
OUTER_PROVEN = 3 + 2 * math.sqrt(2)       # 5.828427124746...
INNER_CONJ = (3 - math.sqrt(5)) / 2       # 0.381966011250...
OUTER_CONJ = (3 + math.sqrt(5)) / 2       # 2.618033988750...


class NoConvergence(ArithmeticError):
    """Iteration cap reached with residual above tolerance."""


def _horner(coeffs, z):
    """Vectorized Horner evaluation; coeffs ascending, z an ndarray."""
    acc = np.zeros_like(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc


def _residuals(coeffs, z):
    """|p(z)| scaled by max|coeff| * (deg+1) * max(1,|z|)^deg.

    The magnitude factor keeps the test meaningful for roots outside the
    unit circle, where double-precision evaluation of p itself carries
    roundoff proportional to |z|^deg; for roots inside the closed unit
    disk this reduces to plain leading-coefficient scaling.
    """
    deg = len(coeffs) - 1
    scale = np.max(np.abs(coeffs)) * len(coeffs) \
        * np.maximum(1.0, np.abs(z)) ** deg
    return np.abs(_horner(coeffs, z)) / scale


def roots(p, tol=RESIDUAL_TOL):
    """All roots of p with q^low stripped, multiplicities by repetition.

    Aberth-Ehrlich simultaneous iteration, then a short Newton polish.
    Each root satisfies |p(z)| <= tol * max|coeff| * (deg+1) *
    max(1,|z|)^deg; raises NoConvergence otherwise.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root set")
    # strip the monomial factor; scale coefficients into float range
    scale = max(abs(c) for c in p.coeffs)
    coeffs = np.array([c / scale for c in p.coeffs], dtype=complex)
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    dcoeffs = coeffs[1:] * np.arange(1, deg + 1)
    # initial guesses on a circle, deterministic pseudo-random phases
    radius = max(abs(c / coeffs[-1]) for c in coeffs[:-1]) ** (1.0 / deg)
    rng = random.Random(SEED)
    phases = np.array([(k + rng.random()) / deg for k in range(deg)])
    z = radius * np.exp(2j * math.pi * phases)
    for _ in range(MAX_ITER):
        pv = _horner(coeffs, z)
        dv = _horner(dcoeffs, z)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        rep = np.sum(1.0 / diff, axis=1)
        denom = 1.0 - newton * rep
        denom = np.where(denom == 0, 1.0, denom)
        step = newton / denom
        z = z - step
        if np.max(np.abs(step)) < 1e-14 * (1.0 + np.max(np.abs(z))):
            break
    for _ in range(POLISH_STEPS):
        dv = _horner(dcoeffs, z)
        safe = dv != 0
        z = np.where(safe, z - _horner(coeffs, z) / np.where(safe, dv, 1), z)
    if np.any(_residuals(coeffs, z) > tol):
        raise NoConvergence("root residual above %.1e for %s" % (tol, p))
    return sorted((complex(w) for w in z), key=lambda w: (w.real, w.imag))


@dataclass(frozen=True)
class RootRecord:
    frac: object            # Frac
    part: str               # "num" or "den"
    root: complex
    residual: float

    @property
    def modulus(self):
        return abs(self.root)


@dataclass
class SigmaSample:
    max_den: int
    records: list
    min_modulus: float
    max_modulus: float


def sigma_sample(max_den, tol=RESIDUAL_TOL):
    """Roots of num and den of the q-analog of every enumerated fraction.

    Denominator roots are the sampled members of the singular set; the
    numerator roots join them for the annulus check.
    """
    if max_den < 2:
        raise ValueError("max_den must be >= 2")
    records = []
    for frac in enumerate_fractions(max_den):
        qr = q_deform(frac)
        for part, poly in (("num", qr.num), ("den", qr.den)):
            if len(poly.coeffs) <= 1:
                continue
            try:
                zs = roots(poly, tol)
            except NoConvergence as exc:
                raise NoConvergence("fraction %s (%s): %s" % (frac, part, exc))
            scale = max(abs(c) for c in poly.coeffs)
            cs = np.array([c / scale for c in poly.coeffs], dtype=complex)
            for z in zs:
                res = float(_residuals(cs, np.array([z]))[0])
                records.append(RootRecord(frac, part, z, res))
    records.sort(key=lambda rec: (rec.frac.s, rec.frac.r, rec.part,
                                  rec.root.real, rec.root.imag))
    moduli = [rec.modulus for rec in records]
    return SigmaSample(max_den, records, min(moduli), max(moduli))


@dataclass
class AnnulusReport:
    proven_violations: list
    min_modulus: float
    max_modulus: float
    conjecture_consistent: bool


def annulus_check(sample, tol=1e-6):
    """Check the sample against the proven open annulus (3-2*sqrt2,
    3+2*sqrt2); report consistency with the conjectural sharp annulus
    [(3-sqrt5)/2, (3+sqrt5)/2]."""
    violations = [rec for rec in sample.records
                  if rec.modulus <= INNER_PROVEN - tol
                  or rec.modulus >= OUTER_PROVEN + tol]
    conj_ok = all(INNER_CONJ - tol <= rec.modulus <= OUTER_CONJ + tol
                  for rec in sample.records)
    return AnnulusReport(violations, sample.min_modulus,
                         sample.max_modulus, conj_ok)


def rl_power_roots(m, tol=RESIDUAL_TOL):
    """Roots of the four entries of (R_q L_q)^m with their distance to the
    circle |q| = (3-sqrt5)/2.  Returns (records, min_distance); records are
    (entry_label, root, distance)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    mat = (qmod_generator("R") * qmod_generator("L")) ** m
    out = []
    for label, poly in zip("abcd", mat.entries()):
        if poly.is_zero() or len(poly.coeffs) <= 1:
            continue
        for z in roots(poly, tol):
            out.append((label, z, abs(abs(z) - INNER_CONJ)))
    min_dist = min(d for _, _, d in out) if out else float("inf")
    return out, min_dist


def write_sigma_csv(sample, path):
    """CSV columns: r,s,part,root_re,root_im,modulus,residual."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["r", "s", "part", "root_re", "root_im",
                         "modulus", "residual"])
        for rec in sample.records:
            writer.writerow([rec.frac.r, rec.frac.s, rec.part,
                             "%.12g" % rec.root.real, "%.12g" % rec.root.imag,
                             "%.12g" % rec.modulus, "%.3e" % rec.residual])


def sigma_json(sample):
    return {
        "max_den": sample.max_den,
        "min_modulus": sample.min_modulus,
        "max_modulus": sample.max_modulus,
        "records": [
            {"r": rec.frac.r, "s": rec.frac.s, "part": rec.part,
             "root": [rec.root.real, rec.root.imag],
             "modulus": rec.modulus, "residual": rec.residual}
            for rec in sample.records
        ],
    }
