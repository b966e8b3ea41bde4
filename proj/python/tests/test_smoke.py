import math

import pytest

import hullborne as hb


def test_obj_round_trip():
    mesh = hb.primitive("box 1 2 0.5")
    text = hb.serialize_obj(mesh)
    again = hb.parse_obj(text)
    assert again.total_volume() == pytest.approx(1.0, rel=1e-12)


def test_convex_hull_cube():
    pts = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    pts.append((0.5, 0.5, 0.5))
    verts, faces, volume = hb.convex_hull(pts)
    assert len(verts) == 8
    assert len(faces) == 12
    assert volume == pytest.approx(1.0, rel=1e-12)


def test_degenerate_hull_raises():
    with pytest.raises(hb.DegenerateHullError):
        hb.convex_hull([(0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0)])


def test_submerged_volume_half_cube():
    cube = hb.primitive("box 1 1 1")
    r = hb.submerged_volume(cube, level=0.0)
    assert r["volume"] == pytest.approx(0.5, rel=1e-9)
    assert r["centroid"][2] == pytest.approx(-0.25, rel=1e-6)
    sliced = hb.submerged_volume(cube, level=0.0, method="sliced")
    assert sliced["volume"] == pytest.approx(0.5, rel=0.005)


def test_buoyant_force():
    assert hb.buoyant_force(0.001) == pytest.approx(9.81, rel=1e-12)
    with pytest.raises(ValueError):
        hb.buoyant_force(-1.0)


def test_volume_draft_curve_monotone():
    sphere = hb.primitive("icosphere 0.5 3")
    curve = hb.volume_draft_curve(sphere, n_levels=20)
    volumes = [v for _, v in curve]
    assert volumes == sorted(volumes)
    assert volumes[-1] == pytest.approx(4 * math.pi * 0.5**3 / 3, rel=0.02)


def test_simulate_settles_at_half_draft():
    cube = hb.primitive("box 0.2 0.2 0.2")
    rows = hb.simulate(
        cube,
        mass=4.0,
        position=(0.0, 0.0, 0.15),
        linear_damping=60.0,
        inertia_spec="box 0.2 0.2 0.2",
    )
    assert len(rows) == 500
    draft = 0.1 - rows[-1]["cog"][2]
    assert draft == pytest.approx(0.1, rel=0.02)
