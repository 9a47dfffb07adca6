"""Active versus passive comparison over a grid of frame pairs."""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from moving_planes.config import Settings, get_settings
from moving_planes.core.exceptions import DegenerateDirectionError
from moving_planes.core.kinematics import compose_frames, passive_direction, passive_rapidity
from moving_planes.core.models import (
    OrientedFrame,
    SweepRow,
    SweepSpec,
    UnitVector2,
    Velocity,
)

logger = logging.getLogger(__name__)


class SweepService:
    """Tabulate omega, Omega, |v_w| and |u_vw| for a = e1, b at angle theta."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def row(self, phi: float, rho: float, theta: float) -> SweepRow:
        """
        Compare the active and passive routes for one parameter point.

        Coincident frames have no passive direction; the row then reports
        Omega = 0 and u_vw = 0. Near-light frames moving apart may give
        |u_vw| = 1 after rounding while Omega stays finite.
        """
        j = OrientedFrame.positive(UnitVector2(v1=1.0, v2=0.0), phi)
        k = OrientedFrame.positive(UnitVector2.from_angle(theta), rho)
        composition = compose_frames(j, k, self.settings.tolerance)
        vw_norm = math.tanh(composition.omega)

        try:
            uv, uw = Velocity.from_vector(j.velocity), Velocity.from_vector(k.velocity)
            d = passive_direction(uv, j.phi, uw, k.phi, self.settings.degenerate_epsilon)
            passive_omega = passive_rapidity(uv, uw, d)
            uvw_norm = abs(math.tanh(passive_omega))
        except DegenerateDirectionError:
            passive_omega, uvw_norm = 0.0, 0.0

        return SweepRow(
            phi=phi,
            rho=rho,
            theta_ab=theta,
            omega=composition.omega,
            passive_omega=passive_omega,
            vw_norm=vw_norm,
            uvw_norm=uvw_norm,
            active_passive_gap=abs(vw_norm - uvw_norm),
        )

    def run(self, spec: SweepSpec, workers: int = 1) -> list[SweepRow]:
        """All rows of the grid in phi-major order, whatever the worker count."""
        points = spec.grid()
        logger.info(f"Sweeping {len(points)} points with {workers} worker(s)")

        if workers <= 1:
            return [self.row(*point) for point in points]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda point: self.row(*point), points))


def get_sweep_service() -> SweepService:
    """Get a sweep service instance."""
    return SweepService()
