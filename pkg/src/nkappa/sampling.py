"""Seeded sample points in the upper half-plane."""

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

DEFAULT_REGION = (-3.0, 3.0, 0.5, 2.0)


@dataclass(frozen=True)
class SamplePlan:
    """Where and how many points to draw.

    ``region`` is ``(re_min, re_max, im_min, im_max)`` and must lie strictly
    above the real axis.  Points closer than ``exclusion_radius`` to any
    excluded value (typically a spectrum) are rejected and redrawn.
    """

    count: int = 10
    seed: int = 0
    region: tuple = DEFAULT_REGION
    exclusion_radius: float = 1e-3

    def __post_init__(self):
        if self.count < 1:
            raise ValidationError("sample count must be at least 1", "sample_plan")
        re0, re1, im0, im1 = self.region
        if not (im0 > 0 and im1 >= im0 and re1 >= re0):
            raise ValidationError("region must be a rectangle in the open upper half-plane",
                                  "sample_plan")

    def points(self, exclude=()):
        return sample_points(self.count, self.seed, self.region, exclude, self.exclusion_radius)


def sample_points(count, seed=0, region=DEFAULT_REGION, exclude=(), radius=1e-3):
    """Draw ``count`` points uniformly from ``region``, avoiding ``exclude``."""
    rng = np.random.default_rng(seed)
    exclude = np.asarray(list(exclude), dtype=complex)
    re0, re1, im0, im1 = region
    out = []
    while len(out) < count:
        z = complex(rng.uniform(re0, re1), rng.uniform(im0, im1))
        if exclude.size and np.min(np.abs(exclude - z)) < radius:
            continue
        out.append(z)
    return np.array(out, dtype=complex)
