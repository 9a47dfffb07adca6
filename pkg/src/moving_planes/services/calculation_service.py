"""Service for the single-shot calculations behind the CLI subcommands."""

import logging
import math
from typing import Optional

from moving_planes.config import Settings, get_settings
from moving_planes.core import kinematics, spacetime
from moving_planes.core.ga2 import classify_zero_scalar, vector_exp
from moving_planes.core.matrix_rep import matrix_of, matrix_of_f
from moving_planes.core.models import (
    ClassifyReport,
    ComposeReport,
    DualReport,
    G2Multivector,
    G12Multivector,
    Mat2,
    Mat2Complexified,
    OrientedFrame,
    PassiveReport,
    UnitVector2,
    Velocity,
    ZeroScalarClass,
)
from moving_planes.core.transforms import active_boost, classify_unit_minus_one

logger = logging.getLogger(__name__)


class CalculationService:
    """Compose frames, boost, classify and represent elements."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def compose(self, j: OrientedFrame, k: OrientedFrame) -> ComposeReport:
        """
        Compose two frames through G2 and again through G12.

        The G12 route places the observer at u = g0 and the frames at
        v = psi(j), w = psi(k); the discrepancy is the largest difference
        between the two routes.
        """
        tol = self.settings.tolerance
        composition = kinematics.compose_frames(j, k, tol)

        u = spacetime.to_vector(spacetime.GAMMA0)
        v = spacetime.psi(j.bivector(), tol)
        w = spacetime.psi(k.bivector(), tol)
        recomputed = spacetime.recompute_composition(u, v, w, tol)

        discrepancy = max(
            abs(recomputed.v_dot_w - composition.cosh_omega),
            abs(recomputed.v_dot_w - spacetime.mink_inner(v, w)),
            recomputed.vw.max_abs_diff(spacetime.embed_even(composition.vw)),
        )
        logger.info(f"Composed frames: omega={composition.omega!r}, discrepancy={discrepancy!r}")

        return ComposeReport(
            j=j,
            k=k,
            composition=composition,
            spacetime=recomputed,
            discrepancy=discrepancy,
        )

    def passive(self, j: OrientedFrame, k: OrientedFrame) -> PassiveReport:
        """Passive boost taking frame j to frame k, with round-trip residuals."""
        uv = Velocity.from_vector(j.velocity)
        uw = Velocity.from_vector(k.velocity)
        boost = kinematics.passive_boost_factor(
            uv, j.phi, uw, k.phi, self.settings.degenerate_epsilon
        )
        recovered = kinematics.velocity_add(uv, boost.uvw, boost.direction, boost.omega)

        sandwich = kinematics.compose_passive(j.a, j.phi, boost.direction, boost.omega)
        target = vector_exp(k.a, k.phi)
        scale = max(1.0, target.max_abs())

        return PassiveReport(
            uv=uv,
            uw=uw,
            boost=boost,
            recovered_uw=recovered,
            cosh_rho=kinematics.composed_cosh(j.phi, boost.omega, uv, boost.uvw),
            sandwich_residual=sandwich.max_abs_diff(target) / scale,
            round_trip_residual=max(abs(recovered.v1 - uw.v1), abs(recovered.v2 - uw.v2)),
        )

    def boost(
        self,
        target: G2Multivector,
        direction: UnitVector2,
        phi: float,
        passive: bool = False,
    ) -> G2Multivector:
        """Active boost e^{-phi a/2} x e^{phi a/2} or passive e^{phi d/2} x e^{phi d/2}."""
        if passive:
            return kinematics.apply_passive_boost(target, direction, phi)
        return active_boost(target, direction, phi)

    def classify(self, element: G2Multivector) -> ClassifyReport:
        """Zero-scalar class; unit relative bivectors also get their frame."""
        tol = self.settings.tolerance
        kind = classify_zero_scalar(element, tol)
        square = element.square_zero_scalar

        frame = None
        if kind is ZeroScalarClass.RELATIVE_BIVECTOR and math.isclose(
            square, -1.0, rel_tol=0.0, abs_tol=self.settings.scaled_tolerance(element.max_abs())
        ):
            frame = classify_unit_minus_one(element, tol)

        return ClassifyReport(
            element=element,
            square=square,
            zero_scalar_class=kind,
            frame=frame,
            velocity=frame.velocity if frame else None,
        )

    def dual(self, element: G2Multivector) -> DualReport:
        """psi(h) for a positively oriented unit bivector h."""
        tol = self.settings.tolerance
        vector = spacetime.psi(element, tol)
        u = spacetime.to_vector(spacetime.GAMMA0)
        return DualReport(
            element=element,
            vector=vector,
            causal_class=spacetime.causal_class(vector, tol),
            frame=classify_unit_minus_one(element, tol),
            relative_velocity=spacetime.relative_velocity_bivector(u, vector, tol),
        )

    def matrix(self, element: G2Multivector | G12Multivector) -> Mat2 | Mat2Complexified:
        if isinstance(element, G12Multivector):
            return matrix_of_f(element)
        return matrix_of(element)


def get_calculation_service() -> CalculationService:
    """Get a calculation service instance."""
    return CalculationService()
