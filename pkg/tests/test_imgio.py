import numpy as np
import pytest

from sorshade.imgio import read_pfm, read_png, write_pfm, write_png


def test_pfm_roundtrip_single_channel(tmp_path):
    rng = np.random.default_rng(0)
    data = rng.uniform(0, 4, (7, 5)).astype(np.float32).astype(np.float64)
    p = tmp_path / "a.pfm"
    write_pfm(p, data)
    back = read_pfm(p)
    np.testing.assert_array_equal(back, data)


def test_pfm_roundtrip_three_channel(tmp_path):
    rng = np.random.default_rng(1)
    data = rng.uniform(-2, 2, (4, 6, 3)).astype(np.float32).astype(np.float64)
    p = tmp_path / "b.pfm"
    write_pfm(p, data)
    np.testing.assert_array_equal(read_pfm(p), data)


def test_pfm_header_is_little_endian(tmp_path):
    p = tmp_path / "c.pfm"
    write_pfm(p, np.zeros((2, 3)))
    with open(p, "rb") as f:
        assert f.readline().strip() == b"Pf"
        assert f.readline().split() == [b"3", b"2"]
        assert float(f.readline()) < 0  # negative scale == little endian


def test_pfm_rejects_bad_shapes(tmp_path):
    with pytest.raises(ValueError):
        write_pfm(tmp_path / "x.pfm", np.zeros((2, 2, 4)))


def test_png_roundtrip_rgb(tmp_path):
    rng = np.random.default_rng(2)
    data = rng.integers(0, 256, (5, 9, 3)).astype(np.float64) / 255.0
    p = tmp_path / "a.png"
    write_png(p, data)
    np.testing.assert_allclose(read_png(p), data, atol=1e-12)


def test_png_roundtrip_grayscale(tmp_path):
    data = np.linspace(0, 1, 16).reshape(4, 4)
    p = tmp_path / "g.png"
    write_png(p, data)
    back = read_png(p)
    assert back.shape == (4, 4)
    assert np.max(np.abs(back - data)) <= 0.5 / 255 + 1e-12


def test_png_bytes_deterministic(tmp_path):
    data = np.random.default_rng(3).uniform(0, 1, (8, 8, 3))
    p1, p2 = tmp_path / "d1.png", tmp_path / "d2.png"
    write_png(p1, data)
    write_png(p2, data)
    assert p1.read_bytes() == p2.read_bytes()
