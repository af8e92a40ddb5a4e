import numpy as np
import pytest

from circleskin.geom import Circle, GeometryError, norm2, vec
from circleskin.pipeline import (
    MODE_BASELINE,
    MODE_INVERSE,
    SkinConfig,
    catmull_rom_tangents,
    skin,
)
from circleskin.planner import AdmissibilityError


def circles(*xyr):
    return [Circle.from_xyr(*c) for c in xyr]

# admissible chain where baseline Catmull-Rom tangents push a touching
# point into the overlapping neighbor while the planner keeps it outside
BASELINE_FAILURE = ((0, 0, 1), (2, 0, 0.9), (2.6, 0.8, 0.9))


class TestConfig:
    def test_rejects_unknown_mode(self):
        with pytest.raises(GeometryError, match="mode"):
            SkinConfig(mode="fancy")

    def test_rejects_unknown_spine(self):
        with pytest.raises(GeometryError, match="spine"):
            SkinConfig(spine="quartic")

    def test_rejects_bad_lambda(self):
        with pytest.raises(GeometryError):
            SkinConfig(lam=0.0)


class TestCatmullRom:
    def test_interior_tangent(self):
        pts = [vec(0, 0), vec(1, 1), vec(2, 0)]
        ts = catmull_rom_tangents([np.append(p, 0.0) for p in pts], 1.0)
        assert np.allclose(ts[1], [2, 0, 0])

    def test_lambda_scales(self):
        pts = [np.array([0, 0, 1.0]), np.array([2, 0, 1.0]), np.array([4, 0, 1.0])]
        ts = catmull_rom_tangents(pts, 0.5)
        assert np.allclose(ts[1], [2, 0, 0])
        assert np.allclose(ts[0], [1, 0, 0])

    def test_two_points_one_sided(self):
        ts = catmull_rom_tangents([np.array([0, 0, 1.0]), np.array([2, 0, 2.0])], 0.5)
        assert np.allclose(ts[0], [1, 0, 0.5])
        assert np.allclose(ts[1], [1, 0, 0.5])


class TestStraightChains:
    def test_equal_pair_exact_lines(self):
        res = skin(circles((0, 0, 1), (4, 0, 1)))
        assert np.max(np.abs(res.left_skin[0][:, 1] - 1.0)) < 1e-9
        assert np.max(np.abs(res.right_skin[0][:, 1] + 1.0)) < 1e-9
        assert res.left_skin[0][0, 0] == pytest.approx(0.0, abs=1e-9)
        assert res.left_skin[0][-1, 0] == pytest.approx(4.0, abs=1e-9)

    def test_collinear_triplet_g1_exact(self):
        res = skin(circles((0, 0, 1), (3, 0, 1), (6, 0, 1)))
        for joints in (res.left_joints, res.right_joints):
            assert len(joints) == 1
            assert joints[0].g1
            assert joints[0].angle == pytest.approx(0.0, abs=1e-9)
            assert joints[0].position_gap == pytest.approx(0.0, abs=1e-9)

    def test_straight_mat_samples(self):
        res = skin(circles((0, 0, 1), (4, 0, 1)), SkinConfig(samples=5))
        assert np.allclose(res.mat_samples[0][:, 2], 1.0, atol=1e-9)
        assert np.allclose(res.mat_samples[0][:, 1], 0.0, atol=1e-9)


class TestGeneralChains:
    CHAIN = ((0, 0, 1), (2, 0.4, 0.9), (4.2, 0, 1.1), (6.4, -0.6, 0.8))

    def test_joints_are_g1(self):
        res = skin(circles(*self.CHAIN))
        for joints in (res.left_joints, res.right_joints):
            assert all(j.g1 for j in joints)

    def test_ph_spine_joints_are_g1(self):
        res = skin(circles(*self.CHAIN), SkinConfig(spine="ph"))
        for joints in (res.left_joints, res.right_joints):
            assert all(j.g1 for j in joints)

    def test_skin_starts_and_ends_on_planned_points(self):
        res = skin(circles(*self.CHAIN))
        plan = res.touch_plan
        assert norm2(res.left_skin[0][0] - plan[0].w_plus) < 1e-9
        assert norm2(res.left_skin[-1][-1] - plan[-1].w_plus) < 1e-9
        assert norm2(res.right_skin[0][0] - plan[0].w_minus) < 1e-9

    def test_offsets_row_shapes(self):
        res = skin(circles(*self.CHAIN), SkinConfig(offsets=(0.3, 0.5), samples=16))
        assert [row["d"] for row in res.offsets] == [0.3, 0.5]
        for row in res.offsets:
            assert len(row["left"]) == len(self.CHAIN) - 1
            assert all(a.shape == (16, 2) for a in row["left"])

    def test_determinism(self):
        cfg = SkinConfig(spine="ph", offsets=(0.3,))
        a = skin(circles(*self.CHAIN), cfg)
        b = skin(circles(*self.CHAIN), cfg)
        for pa, pb in zip(a.left_skin, b.left_skin):
            assert np.array_equal(pa, pb)
        for pa, pb in zip(a.right_skin, b.right_skin):
            assert np.array_equal(pa, pb)

    def test_rigid_motion_equivariance(self):
        ang = 0.85
        m = np.array([[np.cos(ang), -np.sin(ang)], [np.sin(ang), np.cos(ang)]])
        shift = vec(3.0, -2.0)
        base = circles(*self.CHAIN)
        moved = [Circle(m @ c.center + shift, c.radius) for c in base]
        ra = skin(base)
        rb = skin(moved)
        for pa, pb in zip(ra.left_skin, rb.left_skin):
            assert np.max(np.abs(pb - (pa @ m.T + shift))) < 1e-7
        for pa, pb in zip(ra.right_skin, rb.right_skin):
            assert np.max(np.abs(pb - (pa @ m.T + shift))) < 1e-7


class TestValidation:
    def test_inadmissible_raises_with_report(self):
        with pytest.raises(AdmissibilityError) as exc:
            skin(circles((0, 0, 2), (1, 0, 1), (2, 0, 2)))
        assert not exc.value.report.ok

    def test_validation_can_be_disabled(self):
        cs = circles((0, 0, 1), (2, 1.5, 1), (4, 0, 1), (1.5, -0.5, 1))
        res = skin(cs, SkinConfig(validate=False))
        assert not res.admissibility.ok
        assert len(res.left_skin) == 3


class TestBaselineMode:
    def test_baseline_flags_touchpoint_inside_disk(self):
        res = skin(circles(*BASELINE_FAILURE), SkinConfig(mode=MODE_BASELINE))
        kinds = [d.kind for d in res.diagnostics]
        assert "touchpoint_inside_disk" in kinds
        diag = next(d for d in res.diagnostics if d.kind == "touchpoint_inside_disk")
        assert diag.circle is not None and diag.neighbor is not None
        assert diag.point is not None

    def test_inverse_mode_is_clean_on_same_input(self):
        res = skin(circles(*BASELINE_FAILURE), SkinConfig(mode=MODE_INVERSE))
        assert res.diagnostics == []

    def test_partial_result_on_non_space_like_tangent(self):
        # steep radius growth makes a baseline tangent time-like; the pipeline
        # should keep the healthy segments and report the bad circle
        cs = circles((0, 0, 0.1), (1, 0, 1.5), (4, 0, 1.5), (5, 0, 0.1))
        res = skin(cs, SkinConfig(mode=MODE_BASELINE, lam=1.0, validate=False))
        kinds = [d.kind for d in res.diagnostics]
        assert "tangent_unusable" in kinds
        assert any(seg is None for seg in res.left_skin)
        assert any(seg is not None for seg in res.left_skin)

    def test_baseline_straight_chain_matches_inverse(self):
        cs = circles((0, 0, 1), (3, 0, 1), (6, 0, 1))
        ra = skin(cs, SkinConfig(mode=MODE_BASELINE))
        rb = skin(cs, SkinConfig(mode=MODE_INVERSE))
        for pa, pb in zip(ra.left_skin, rb.left_skin):
            assert np.max(np.abs(pa - pb)) < 1e-9
