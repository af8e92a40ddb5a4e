import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circleskin.geom import Circle, GeometryError, norm2, vec
from circleskin.minkowski import envelope_points_from_hermite, is_space_like, lift
from circleskin.reconstruct import ApexAtInfinity, construct_apex, reconstruct_tangent

coords = st.floats(-20, 20, allow_nan=False)
radii = st.floats(0.1, 8, allow_nan=False)
angles = st.floats(0, 2 * np.pi, allow_nan=False)
z_fracs = st.floats(-0.9, 0.9, allow_nan=False)

UNIT = Circle.from_xyr(0, 0, 1)


def space_like_unit(theta, frac):
    phi = frac * np.pi / 4
    return np.array(
        [np.cos(phi) * np.cos(theta), np.cos(phi) * np.sin(theta), np.sin(phi)]
    )


class TestConstructApex:
    def test_symmetric_chord(self):
        # chord x = -0.5 on the unit circle; foot (-0.5, 0) inverts to (-2, 0)
        s = construct_apex(UNIT, vec(-0.5, np.sqrt(3) / 2), vec(-0.5, -np.sqrt(3) / 2))
        assert np.allclose(s, [-2, 0], atol=1e-12)

    def test_apex_is_piercing_point_of_tangent_line(self):
        # oracle: for touching points generated from a known tangent t, the
        # apex is where the spatial line P + lam * t meets z = 0
        t = np.array([1.0, 0.2, 0.5])
        t /= np.linalg.norm(t)
        p = lift(UNIT)
        qp, qm = envelope_points_from_hermite(p, t)
        s = construct_apex(UNIT, qp, qm)
        expected = p[:2] - (p[2] / t[2]) * t[:2]
        assert np.allclose(s, expected, atol=1e-9)
        assert np.allclose(expected, [-2, -0.4], atol=1e-9)

    def test_diametral_raises(self):
        with pytest.raises(ApexAtInfinity):
            construct_apex(UNIT, vec(0, 1), vec(0, -1))


class TestReconstructTangent:
    def test_symmetric_case(self):
        rec = reconstruct_tangent(
            UNIT, vec(-0.5, np.sqrt(3) / 2), vec(-0.5, -np.sqrt(3) / 2)
        )
        assert not rec.degenerate
        assert np.allclose(rec.tangent, np.array([2, 0, 1]) / np.sqrt(5), atol=1e-12)

    def test_degenerate_diametral(self):
        rec = reconstruct_tangent(UNIT, vec(0, 1), vec(0, -1))
        assert rec.degenerate
        assert rec.apex is None
        assert np.allclose(rec.tangent, [1, 0, 0])

    def test_points_off_circle_raise(self):
        with pytest.raises(GeometryError, match="touching points"):
            reconstruct_tangent(UNIT, vec(0, 2), vec(0, -1))

    @given(coords, coords, radii, angles, z_fracs)
    @settings(max_examples=300)
    def test_round_trip(self, x, y, r, theta, frac):
        c = Circle.from_xyr(x, y, r)
        t = space_like_unit(theta, frac)
        qp, qm = envelope_points_from_hermite(lift(c), t)
        if norm2(qp - qm) < 1e-6 * r:
            return
        rec = reconstruct_tangent(c, qp, qm)
        # the apex sits at distance ~r/|t_z|, so conditioning (and the
        # achievable accuracy) degrades as the tangent approaches diametral
        tol = max(1e-8, 1e-13 / max(abs(t[2]), 1e-13))
        assert np.max(np.abs(rec.tangent - t)) < tol
        assert is_space_like(rec.tangent)
        assert np.linalg.norm(rec.tangent) == pytest.approx(1.0, abs=1e-12)

    @given(coords, coords, radii, angles, z_fracs)
    @settings(max_examples=100)
    def test_apex_on_tangent_line(self, x, y, r, theta, frac):
        c = Circle.from_xyr(x, y, r)
        t = space_like_unit(theta, frac)
        if abs(t[2]) < 1e-3:
            return  # nearly diametral, apex far away
        qp, qm = envelope_points_from_hermite(lift(c), t)
        rec = reconstruct_tangent(c, qp, qm)
        assert not rec.degenerate
        p = lift(c)
        lam = -p[2] / rec.tangent[2]
        pierce = p + lam * rec.tangent
        assert abs(pierce[2]) < 1e-12
        assert np.allclose(pierce[:2], rec.apex, atol=1e-9 * max(1, abs(lam)))

    @given(coords, coords, radii, angles, z_fracs, angles)
    @settings(max_examples=100)
    def test_rotation_equivariance(self, x, y, r, theta, frac, rot):
        c = Circle.from_xyr(x, y, r)
        t = space_like_unit(theta, frac)
        if abs(t[2]) < 1e-5:
            return  # near-diametral: apex conditioning dominates
        qp, qm = envelope_points_from_hermite(lift(c), t)
        if norm2(qp - qm) < 1e-6 * r:
            return
        m = np.array([[np.cos(rot), -np.sin(rot)], [np.sin(rot), np.cos(rot)]])
        c2 = Circle(m @ c.center, r)
        rec = reconstruct_tangent(c, qp, qm)
        rec2 = reconstruct_tangent(c2, m @ qp, m @ qm)
        assert np.allclose(rec2.tangent[:2], m @ rec.tangent[:2], atol=1e-9)
        assert rec2.tangent[2] == pytest.approx(rec.tangent[2], abs=1e-9)
