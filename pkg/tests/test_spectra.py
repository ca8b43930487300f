import csv
import io

import numpy as np
import pytest

from sincconv.sincquad import build_A
from sincconv.spectra import (
    SpectrumReport,
    contraction_sweep,
    spectrum_A,
    spectrum_im1,
    write_eigenvalues_csv,
    write_summary_csv,
)
from sincconv.transform import Interval, make_grid

IV = Interval(0.0, 2.0)
D = {"se": 3.14, "de": 1.57}


def test_im1_small_orders():
    r = spectrum_im1(1)
    assert r.eigenvalues.shape == (1,) and r.min_real_part == 0.5 and r.spectral_radius == 0.5
    assert spectrum_im1(3).min_real_part > 0
    assert spectrum_im1(257).min_real_part > 0
    with pytest.raises(ValueError):
        spectrum_im1(0)


def test_im1_positive_real_part_check():
    for m in range(1, 258, 8):
        assert spectrum_im1(m).min_real_part > 0, m


@pytest.mark.parametrize("kind", ["se", "de"])
def test_contraction_strictly_decreasing(kind):
    reports = contraction_sweep(kind, IV, D[kind], [64, 4, 16])
    assert [r.n for r in reports] == [4, 16, 64]
    radii = [r.spectral_radius for r in reports]
    assert radii[0] > radii[1] > radii[2] > 0
    assert radii[2] < radii[0] / 2
    assert all(r.kind == kind and r.m == 2 * r.n + 1 for r in reports)


def test_sweep_parallel_matches_serial():
    a = contraction_sweep("de", IV, 1.57, [4, 8, 12], workers=1)
    b = contraction_sweep("de", IV, 1.57, [12, 8, 4], workers=3)
    for x, y in zip(a, b):
        assert x.n == y.n and np.array_equal(x.eigenvalues, y.eigenvalues)


@pytest.mark.parametrize("kind", ["se", "de"])
@pytest.mark.parametrize("L", [2.0, 0.5, 3.0])
def test_scale_covariance(kind, L):
    n = 10
    A = build_A(make_grid(kind, IV, D[kind], n)).A
    AL = build_A(make_grid(kind, Interval(0.0, 2.0 * L), D[kind], n)).A
    assert np.max(np.abs(AL - L * A)) <= 1e-13 * np.max(np.abs(L * A))
    lam = np.sort_complex(spectrum_A(kind, IV, D[kind], n).eigenvalues * L)
    lamL = np.sort_complex(spectrum_A(kind, Interval(0.0, 2.0 * L), D[kind], n).eigenvalues)
    assert np.max(np.abs(lam - lamL)) <= 1e-13 * np.max(np.abs(lam))


@pytest.mark.parametrize("kind", ["se", "de"])
def test_spectrum_conjugate_paired(kind):
    lam = spectrum_A(kind, IV, D[kind], 9).eigenvalues
    assert np.allclose(np.sort_complex(lam), np.sort_complex(np.conj(lam)), atol=1e-12)


def test_csv_writers_round_trip():
    reports = [spectrum_im1(3), spectrum_A("se", IV, 3.14, 2)]
    buf = io.StringIO()
    write_eigenvalues_csv(reports, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == ["kind", "m", "n", "re", "im"]
    assert len(rows) == 1 + 3 + 5
    assert rows[1][0] == "im1" and rows[1][2] == ""
    back = np.array([complex(float(r[3]), float(r[4])) for r in rows[1:4]])
    assert np.array_equal(back, reports[0].eigenvalues)
    buf = io.StringIO()
    write_summary_csv(reports, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == ["kind", "n", "m", "spectral_radius", "min_real_part"]
    assert rows[2][:3] == ["se", "2", "5"]
    assert float(rows[2][3]) == reports[1].spectral_radius


def test_report_properties():
    r = SpectrumReport(2, "im1", np.array([1 + 2j, -0.5 + 0j]))
    assert r.spectral_radius == pytest.approx(abs(1 + 2j)) and r.min_real_part == -0.5
