"""Tempered jump kernel: model parameters, densities, and boundary tails.

The jump measure in one dimension is ``C_alpha e^(-lam|y|) |y|^(-1-alpha) dy``
with ``C_alpha = 1/(2|Gamma(-alpha)|)``; ``lam = 0`` selects the pure stable
law. Everything here is a pure function of its arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import upper_incomplete_gamma

__all__ = [
    "DriftSpec",
    "ModelParams",
    "c_alpha",
    "c_alpha_radial",
    "levy_density",
    "exp_power_tail",
    "tail_w",
    "pv_odd_moment",
]


@dataclass(frozen=True)
class DriftSpec:
    """Drift field restricted to the solver-supported presets.

    ``zero`` is f(x) = 0, ``linear`` is f(x) = k*x and ``cubic`` is
    f(x) = a*x + b*x**3.  All presets are odd, which the symmetric
    schemes rely on.
    """

    preset: str = "zero"
    coefficients: tuple[float, ...] = ()

    _PRESETS = {"zero": 0, "linear": 1, "cubic": 2}

    def __post_init__(self):
        if self.preset not in self._PRESETS:
            raise ValueError(f"unknown drift preset {self.preset!r}")
        want = self._PRESETS[self.preset]
        if len(self.coefficients) != want:
            raise ValueError(
                f"drift preset {self.preset!r} takes {want} coefficient(s), "
                f"got {self.coefficients!r}"
            )
        if not all(math.isfinite(c) for c in self.coefficients):
            raise ValueError("drift coefficients must be finite")

    @classmethod
    def zero(cls) -> "DriftSpec":
        return cls("zero", ())

    @classmethod
    def linear(cls, k: float) -> "DriftSpec":
        return cls("linear", (float(k),))

    @classmethod
    def cubic(cls, a: float, b: float) -> "DriftSpec":
        return cls("cubic", (float(a), float(b)))

    @classmethod
    def parse(cls, text: str) -> "DriftSpec":
        """Parse CLI syntax: ``zero``, ``linear:K`` or ``cubic:A,B``."""
        name, _, payload = text.partition(":")
        name = name.strip()
        if name == "zero":
            if payload:
                raise ValueError("drift preset 'zero' takes no coefficients")
            return cls.zero()
        try:
            coeffs = tuple(float(p) for p in payload.split(",")) if payload else ()
        except ValueError as exc:
            raise ValueError(f"bad drift coefficients in {text!r}") from exc
        return cls(name, coeffs)

    def describe(self) -> str:
        if self.preset == "zero":
            return "zero"
        return self.preset + ":" + ",".join(repr(c) for c in self.coefficients)

    @property
    def is_zero(self) -> bool:
        return self.preset == "zero" or all(c == 0.0 for c in self.coefficients)

    def __call__(self, x):
        if self.preset == "zero":
            return np.zeros_like(np.asarray(x, dtype=float)) if np.ndim(x) else 0.0
        if self.preset == "linear":
            return self.coefficients[0] * x
        a, b = self.coefficients
        return a * x + b * x**3


@dataclass(frozen=True)
class ModelParams:
    """Full description of one exit-time problem.

    alpha      stable index in (0,1) or (1,2)
    lam        tempering rate >= 0 (0 gives the untempered stable law)
    intensity  jump-measure multiplier (the noise intensity; default 1)
    diffusion  Brownian coefficient d >= 0
    drift      drift field preset
    half_width domain half width L; the 1D domain is (-L, L)
    """

    alpha: float
    lam: float = 0.0
    intensity: float = 1.0
    diffusion: float = 0.0
    drift: DriftSpec = field(default_factory=DriftSpec.zero)
    half_width: float = 1.0

    def __post_init__(self):
        if not (0.0 < self.alpha < 2.0) or self.alpha == 1.0:
            raise ValueError(f"alpha must lie in (0,1) or (1,2), got {self.alpha!r}")
        if not (self.lam >= 0.0 and math.isfinite(self.lam)):
            raise ValueError(f"lam must be finite and >= 0, got {self.lam!r}")
        if not (self.intensity > 0.0 and math.isfinite(self.intensity)):
            raise ValueError(f"intensity must be positive, got {self.intensity!r}")
        if not (self.diffusion >= 0.0 and math.isfinite(self.diffusion)):
            raise ValueError(f"diffusion must be >= 0, got {self.diffusion!r}")
        if not (self.half_width > 0.0 and math.isfinite(self.half_width)):
            raise ValueError(f"half_width must be positive, got {self.half_width!r}")
        if not isinstance(self.drift, DriftSpec):
            raise TypeError("drift must be a DriftSpec")


def c_alpha(alpha: float) -> float:
    """Jump-measure normalization 1/(2|Gamma(-alpha)|) for the 1D kernel."""
    if not (0.0 < alpha < 2.0) or alpha == 1.0:
        raise ValueError(f"alpha must lie in (0,1) or (1,2), got {alpha!r}")
    return 1.0 / (2.0 * abs(math.gamma(-alpha)))


def c_alpha_radial(alpha: float) -> float:
    """Normalization 1/(2 pi |Gamma(-alpha)|) of the isotropic 2D kernel."""
    return c_alpha(alpha) / math.pi


def levy_density(y, params: ModelParams):
    """Density of the tempered jump measure at y != 0 (without intensity)."""
    y = np.asarray(y, dtype=float)
    if np.any(y == 0.0):
        raise ValueError("the jump density is singular at y = 0")
    a = np.abs(y)
    out = c_alpha(params.alpha) * np.exp(-params.lam * a) * a ** (-1.0 - params.alpha)
    return float(out) if out.ndim == 0 else out


def exp_power_tail(w: float, alpha: float, lam: float) -> float:
    """Tail mass integral ``int_w^inf e^(-lam t) t^(-1-alpha) dt`` for w > 0."""
    if not (w > 0.0):
        raise ValueError(f"lower limit must be positive, got {w!r}")
    if lam == 0.0:
        return w ** (-alpha) / alpha
    return lam**alpha * upper_incomplete_gamma(-alpha, lam * w)


def tail_w(x: float, side: str, params: ModelParams) -> float:
    """Boundary tail coefficient of the 1D scheme.

    ``side='left'`` gives the mass of jumps past the left boundary,
    ``int_{L+x}^inf e^(-lam y) y^(-1-alpha) dy``; ``side='right'`` mirrors it
    with distance L - x.  Requires |x| < L.
    """
    L = params.half_width
    if not (abs(x) < L):
        raise ValueError(f"x must lie strictly inside (-{L}, {L}), got {x!r}")
    if side == "left":
        dist = L + x
    elif side == "right":
        dist = L - x
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return exp_power_tail(dist, params.alpha, params.lam)


def pv_odd_moment(m: float, alpha: float, lam: float, L: float) -> float:
    """Leftover first moment of the principal-value compensator.

    ``int_{L-m}^{L+m} e^(-lam y) y^(-alpha) dy`` for 0 <= m < L: the part of
    the odd compensator integral that survives after the symmetric window
    cancels.
    """
    if not (0.0 <= m < L):
        raise ValueError(f"m must lie in [0, L), got {m!r}")
    if m == 0.0:
        return 0.0
    if lam == 0.0:
        return ((L + m) ** (1.0 - alpha) - (L - m) ** (1.0 - alpha)) / (1.0 - alpha)
    return lam ** (alpha - 1.0) * (
        upper_incomplete_gamma(1.0 - alpha, lam * (L - m))
        - upper_incomplete_gamma(1.0 - alpha, lam * (L + m))
    )
