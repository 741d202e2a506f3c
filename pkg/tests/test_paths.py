import numpy as np
import pytest

from triphase import paths
from triphase.errors import PathNotClosedError, PathTooShortError

SQUARE = [
    [0.0, 0.0, 0.0, 0.5],
    [1.0, 0.0, 0.0, 0.5],
    [1.0, 0.7, 0.0, 0.5],
    [0.0, 0.7, 0.0, 0.5],
    [0.0, 0.0, 0.0, 0.5],
]


def test_position_interpolates_linearly():
    path = paths.from_keyframes(SQUARE, closed=True)
    assert path.n_legs == 4
    assert np.allclose(path.position(0.0), SQUARE[0])
    assert np.allclose(path.position(1.0), SQUARE[-1])
    assert np.allclose(path.position(0.125), [0.5, 0.0, 0.0, 0.5])
    mid = path.position([0.25, 0.75])
    assert mid.shape == (2, 4)
    assert np.allclose(mid[0], SQUARE[1])


def test_velocity_right_leg_at_corners():
    path = paths.from_keyframes(SQUARE, closed=True)
    v = path.velocity(0.25)
    assert np.allclose(v, [0.0, 0.7 / 0.25, 0.0, 0.0])
    assert np.allclose(path.leg_velocity(0), [4.0, 0.0, 0.0, 0.0])
    assert np.allclose(path.velocity(0.10), path.leg_velocity(0))
    assert np.allclose(path.velocity(0.99), path.leg_velocity(3))


def test_wrap_closed_versus_open():
    loop = paths.from_keyframes(SQUARE, closed=True)
    assert loop.wrap(1.25) == pytest.approx(0.25)
    assert loop.wrap(-0.25) == pytest.approx(0.75)
    segment = paths.from_keyframes(SQUARE[:2])
    assert segment.wrap(1.25) == pytest.approx(1.25)


def test_closure_modulo_two_pi_accepted():
    loop = paths.from_keyframes(
        [[0.0, 0.2, 0.0, 0.5], [2 * np.pi, 0.2, 0.0, 0.5]], closed=True
    )
    assert loop.closed
    assert loop.n_legs == 1


def test_closure_rejected_when_endpoints_differ():
    with pytest.raises(PathNotClosedError):
        paths.from_keyframes([[0.0, 0.0, 0.0, 0.5], [0.3, 0.0, 0.0, 0.5]], closed=True)


def test_too_few_keyframes():
    with pytest.raises(PathTooShortError):
        paths.from_keyframes([[0.0, 0.0, 0.0, 0.5]])


def test_keyframe_shape_enforced():
    with pytest.raises(ValueError):
        paths.from_keyframes([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]])


def test_ts_validation():
    frames = np.asarray(SQUARE[:3])
    with pytest.raises(ValueError):
        paths.from_keyframes(frames, ts=[0.0, 0.5])
    with pytest.raises(ValueError):
        paths.from_keyframes(frames, ts=[0.0, 0.6, 0.5])
    with pytest.raises(ValueError):
        paths.from_keyframes(frames, ts=[0.1, 0.5, 1.0])
    custom = paths.from_keyframes(frames, ts=[0.0, 0.9, 1.0])
    assert np.allclose(custom.leg_velocity(1), (frames[2] - frames[1]) / 0.1)


def test_coordinate_circle_layout():
    loop = paths.coordinate_circle("gamma", center=(0.1, 0.2, 0.3, 0.4), winding=-2)
    assert loop.closed
    assert loop.n_legs == 1
    assert np.allclose(loop.keyframes[0], [0.1, 0.2, 0.3, 0.4])
    assert np.allclose(loop.keyframes[1], [0.1, 0.2, 0.3 - 4 * np.pi, 0.4])
    assert np.allclose(loop.velocity(0.5), [0.0, 0.0, -4 * np.pi, 0.0])


def test_coordinate_circle_rejects_bad_arguments():
    with pytest.raises(ValueError):
        paths.coordinate_circle("delta")
    with pytest.raises(ValueError):
        paths.coordinate_circle("alpha", winding=0)
    with pytest.raises(ValueError):
        paths.coordinate_circle("alpha", center=(0.0, 0.0, 0.0))
