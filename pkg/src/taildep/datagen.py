"""Seeded generators for two-component heavy-tailed angular mixtures.

The model draws a Bernoulli switch B, an on-cone angle
Theta1 = a + (b - a) Z with Z ~ Beta(p, q), an off-cone angle Theta2
uniform on [0, 1] \\ [a, b], and Pareto radii R1 (heavy, on-cone) and
R2 (lighter, off-cone), then sets

    X = B R1 Theta1 + (1 - B) R2 Theta2
    Y = B R1 (1 - Theta1) + (1 - B) R2 (1 - Theta2).

Randomness comes from the counter-based Philox generator. Each model
component (B, Z, R1, R2, Theta2) draws from its own substream derived
from (seed, component index), so changing one parameter never perturbs
the draws of the others.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from taildep.tail_core import AngularCone, BivariateSample

# substream indices for the five model components
_SUB_BERNOULLI = 0
_SUB_Z = 1
_SUB_R_MAIN = 2
_SUB_R_HIDDEN = 3
_SUB_THETA_OFF = 4


def stream(*entropy: int) -> np.random.Generator:
    """Philox generator keyed by a tuple of nonnegative integers."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


@dataclass(frozen=True)
class MixtureSpec:
    """Parameters of the two-component angular mixture."""

    alpha_main: float
    alpha_hidden: float
    cone: AngularCone
    z_p: float
    z_q: float
    mix_prob: float

    def __post_init__(self) -> None:
        if self.alpha_main <= 0 or self.alpha_hidden <= 0:
            raise ValueError("Pareto indices must be positive")
        if self.alpha_hidden < self.alpha_main:
            raise ValueError("off-cone tail must be at least as light as the on-cone tail")
        if self.z_p <= 0 or self.z_q <= 0:
            raise ValueError("Beta shapes must be positive")
        if not (0.0 < self.mix_prob <= 1.0):
            raise ValueError("mix_prob must lie in (0, 1]")
        if self.mix_prob < 1.0 and self.cone.is_full:
            raise ValueError("off-cone component requires a proper cone [a, b]")

    @property
    def theta1_mean(self) -> float:
        """Analytic mean of the on-cone angle a + (b - a) Z."""
        z_mean = self.z_p / (self.z_p + self.z_q)
        return self.cone.a + (self.cone.b - self.cone.a) * z_mean

    @property
    def theta1_var(self) -> float:
        """Analytic variance of the on-cone angle."""
        p, q = self.z_p, self.z_q
        z_var = p * q / ((p + q) ** 2 * (p + q + 1.0))
        return (self.cone.b - self.cone.a) ** 2 * z_var


EXAMPLE1_SPEC = MixtureSpec(
    alpha_main=2.0, alpha_hidden=4.0, cone=AngularCone(0.25, 0.75),
    z_p=0.05, z_q=0.1, mix_prob=0.5,
)
EXAMPLE2_SPEC = MixtureSpec(
    alpha_main=2.0, alpha_hidden=4.0, cone=AngularCone(0.25, 0.75),
    z_p=1.0, z_q=2.0, mix_prob=0.5,
)


def pareto(alpha: float, size: int, gen: np.random.Generator) -> np.ndarray:
    """Standard Pareto draws with P(R > x) = x^(-alpha), x >= 1."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    u = gen.random(size)
    return (1.0 - u) ** (-1.0 / alpha)


def sample_beta(p: float, q: float, size: int, gen: np.random.Generator) -> np.ndarray:
    """Beta(p, q) draws via the ratio of two gamma variates.

    Valid for all shapes, including p, q < 1. The rare joint underflow
    of both gamma draws is redrawn.
    """
    if p <= 0 or q <= 0:
        raise ValueError(f"shapes must be positive, got p={p}, q={q}")
    g1 = gen.standard_gamma(p, size)
    g2 = gen.standard_gamma(q, size)
    total = g1 + g2
    bad = total == 0.0
    while np.any(bad):
        idx = np.flatnonzero(bad)
        g1[idx] = gen.standard_gamma(p, idx.size)
        g2[idx] = gen.standard_gamma(q, idx.size)
        total = g1 + g2
        bad = total == 0.0
    return g1 / total


def uniform_off_cone(cone: AngularCone, size: int, gen: np.random.Generator) -> np.ndarray:
    """Uniform draws on [0, a) union (b, 1], pieces weighted by length."""
    left = cone.a
    right = 1.0 - cone.b
    total = left + right
    if total <= 0.0:
        raise ValueError("cone [0, 1] leaves no angular complement to draw from")
    v = gen.random(size) * total
    return np.where(v < left, v, cone.b + (v - left))


def generate(spec: MixtureSpec, n: int, seed: int) -> BivariateSample:
    """Draw n iid points from the mixture, deterministically per seed."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    on_cone = stream(seed, _SUB_BERNOULLI).random(n) < spec.mix_prob
    z = sample_beta(spec.z_p, spec.z_q, n, stream(seed, _SUB_Z))
    theta1 = spec.cone.a + (spec.cone.b - spec.cone.a) * z
    r1 = pareto(spec.alpha_main, n, stream(seed, _SUB_R_MAIN))
    if spec.mix_prob < 1.0:
        r2 = pareto(spec.alpha_hidden, n, stream(seed, _SUB_R_HIDDEN))
        theta2 = uniform_off_cone(spec.cone, n, stream(seed, _SUB_THETA_OFF))
    else:
        r2 = np.zeros(n)
        theta2 = np.zeros(n)
    r = np.where(on_cone, r1, r2)
    theta = np.where(on_cone, theta1, theta2)
    return BivariateSample(r * theta, r * (1.0 - theta))


def example1(n: int, seed: int) -> BivariateSample:
    """Bimodal angular mixture: Z ~ Beta(0.05, 0.1) on cone [0.25, 0.75]."""
    return generate(EXAMPLE1_SPEC, n, seed)


def example2(n: int, seed: int) -> BivariateSample:
    """Low-spread angular mixture: Z ~ Beta(1, 2) on cone [0.25, 0.75]."""
    return generate(EXAMPLE2_SPEC, n, seed)
