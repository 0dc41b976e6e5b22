from fractions import Fraction

import pytest

import wallcross as wc
from wallcross import BallConfig, ValidationError

CP2 = wc.blow_up(0)
P = wc.product()


def F(x):
    return Fraction(x)


class TestBallConfig:
    def test_coercion(self):
        cfg = BallConfig(("1/2", 1))
        assert cfg.capacities == (F("1/2"), F(1))
        assert cfg.ray_mode is False

    def test_rejects_bad_input(self):
        with pytest.raises(ValidationError):
            BallConfig(())
        with pytest.raises(ValidationError):
            BallConfig((F(1), F(0)))
        with pytest.raises(ValidationError):
            BallConfig((F(-1),))


class TestBlowupClass:
    def test_plane_single_ball(self):
        u = wc.from_areas(CP2, (1,))
        target, u_c = wc.blowup_class(CP2, u, BallConfig((F("1/3"),)))
        assert target == wc.blow_up(1)
        assert wc.areas(target, u_c) == (1, F("1/3"))

    def test_product_first_ball_is_absorbed(self):
        u = wc.from_areas(P, (2, 1))
        target, u_c = wc.blowup_class(P, u, BallConfig((F("1/2"), F("1/3"))))
        assert target == wc.blow_up(3)
        assert wc.areas(target, u_c) == (F("5/2"), F("3/2"), F("1/2"), F("1/3"))

    def test_violated_exceptional_is_named(self):
        u = wc.from_areas(CP2, (1,))
        with pytest.raises(ValidationError) as exc:
            wc.blowup_class(CP2, u, BallConfig((F("3/5"), F("3/5"))))
        assert "H-E_1-E_2" in str(exc.value)
        assert "-1/5" in str(exc.value)

    def test_volume_overflow(self):
        u = wc.from_areas(CP2, (1,))
        with pytest.raises(ValidationError) as exc:
            wc.blowup_class(CP2, u, BallConfig((F(1),)))
        assert "capacities too large" in str(exc.value)

    def test_blow_up_cap(self):
        u8 = wc.from_areas(wc.blow_up(8), (4,) + (1,) * 8)
        with pytest.raises(ValidationError):
            wc.blowup_class(wc.blow_up(8), u8, BallConfig((F("1/2"),) * 2))
        with pytest.raises(ValidationError):
            wc.blowup_class(P, wc.from_areas(P, (2, 1)), BallConfig((F("1/9"),) * 9))

    def test_nine_fold_target_skips_scan_without_box(self):
        u8 = wc.from_areas(wc.blow_up(8), (4,) + (1,) * 8)
        target, u_c = wc.blowup_class(wc.blow_up(8), u8, BallConfig((F("1/2"),)))
        assert target.k == 9
        assert wc.areas(target, u_c)[-1] == F("1/2")


class TestCriticalCapacities:
    def test_requires_ray_mode(self):
        u = wc.from_areas(CP2, (1,))
        with pytest.raises(ValidationError):
            wc.critical_capacities(CP2, u, BallConfig((F(1),)))

    def test_plane_one_ball(self):
        u = wc.from_areas(CP2, (1,))
        prof = wc.critical_capacities(CP2, u, BallConfig((F(1),), ray_mode=True))
        assert prof.target == wc.blow_up(1)
        assert prof.u_start.coords == (1, 0)
        assert prof.direction.coords == (0, 1)
        assert prof.c_max == 1
        assert prof.c_max_source == "fiber-class bound (H-E_1); volume bound"
        assert prof.critical_values == ()
        # -H+2E_1 flips at 1/2 but is only a square -3 candidate
        assert [(f.wall_class.coords, f.value) for f in prof.flagged] == [
            ((-1, 2), F("1/2"))
        ]
        [iv] = prof.intervals
        assert (iv.lower, iv.upper) == (0, 1)
        assert iv.forward
        assert iv.certification == wc.CANDIDATE_TIER

    def test_plane_two_equal_balls(self):
        u = wc.from_areas(CP2, (1,))
        prof = wc.critical_capacities(
            CP2, u, BallConfig((F(1), F(1)), ray_mode=True)
        )
        assert prof.c_max == 1
        assert prof.c_max_source == (
            "fiber-class bound (H-E_1); fiber-class bound (H-E_2)"
        )
        assert prof.critical_values == (F("1/2"),)
        [wall] = prof.walls
        assert wall.value == F("1/2")
        assert [a.coords for a in wall.classes] == [(1, -1, -1)]
        # three uncertified companions flip exactly at the wall, so both
        # intervals keep the certified tier
        assert {f.value for f in prof.flagged} == {F("1/2")}
        assert len(prof.flagged) == 3
        first, second = prof.intervals
        assert (first.lower, first.upper, first.forward) == (0, F("1/2"), True)
        assert first.certification == wc.CERTIFIED_TIER
        assert (second.lower, second.upper, second.forward) == (F("1/2"), 1, False)
        assert second.certification == wc.CERTIFIED_TIER
        assert any("irrational" in n for n in prof.notes)

    def test_product_one_ball(self):
        u = wc.from_areas(P, (1, 1))
        prof = wc.critical_capacities(P, u, BallConfig((F(1),), ray_mode=True))
        assert prof.target == wc.blow_up(2)
        assert prof.u_start.coords == (2, -1, -1)
        assert prof.direction.coords == (1, -1, -1)
        assert prof.c_max == 4
        assert prof.c_max_source == "canonical-pairing bound"
        assert prof.critical_values == (F(1),)
        [wall] = prof.walls
        assert [a.coords for a in wall.classes] == [(0, 0, 1), (0, 1, 0)]
        assert [(f.wall_class.coords, f.value) for f in prof.flagged] == [
            ((0, -2, 0), F(1)),
            ((0, 0, -2), F(1)),
        ]
        first, second = prof.intervals
        assert (first.lower, first.upper, first.forward) == (0, 1, True)
        assert (second.lower, second.upper, second.forward) == (1, 4, False)
        assert first.certification == wc.CERTIFIED_TIER

    def test_flag_depth_follows_bounds(self):
        u = wc.from_areas(CP2, (1,))
        deep = wc.critical_capacities(
            CP2,
            u,
            BallConfig((F(1),), ray_mode=True),
            bounds=wc.EnumerationBounds(square_min=-7),
        )
        # deeper candidates flip later: -2H+3E_1 at 2/3, -3H+4E_1 at 3/4
        assert [(f.wall_class.coords, f.value) for f in deep.flagged] == [
            ((-1, 2), F("1/2")),
            ((-2, 3), F("2/3")),
            ((-3, 4), F("3/4")),
        ]
