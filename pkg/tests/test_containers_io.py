import numpy as np
import pytest

from majorana.fields import GridSpec, MajoranaField, PauliField, random_majorana_field
from majorana.hankel import SphericalField, SphericalModeField, SphericalQuadSpec
from majorana.io import load_field, load_json, load_mode_field, save_field, save_json


def test_majorana_field_shape_validation():
    g = GridSpec(4, 2.0)
    with pytest.raises(ValueError):
        MajoranaField(g, np.zeros((4, 4, 4, 2)))
    with pytest.raises(ValueError):
        MajoranaField(g, np.zeros((4, 4, 4, 4)), domain="fourier")


def test_pauli_field_shape_validation():
    g = GridSpec(4, 2.0)
    with pytest.raises(ValueError):
        PauliField(g, np.zeros((4, 4, 4, 4), dtype=complex))


def test_field_norm_weights():
    g = GridSpec(4, 2.0)
    vals = np.zeros(g.shape + (4,))
    vals[0, 0, 0, 0] = 1.0
    f = MajoranaField(g, vals)
    assert abs(f.norm() - np.sqrt(g.cell_volume)) < 1e-15
    fm = MajoranaField(g, vals, "momentum")
    assert abs(fm.norm() - np.sqrt(g.momentum_cell)) < 1e-15


def test_random_field_reproducible():
    g = GridSpec(4, 2.0)
    a = random_majorana_field(g, 9)
    b = random_majorana_field(g, 9)
    assert np.array_equal(a.values, b.values)


def test_spherical_containers_validate():
    q = SphericalQuadSpec(5.0, 8, 8, 12, 2)
    with pytest.raises(ValueError):
        SphericalField(q, np.zeros((1, 2, 3, 4)))
    with pytest.raises(ValueError):
        SphericalModeField(q, np.zeros((3, 8, 4)))


def test_load_field_rejects_wrong_kind(tmp_path):
    path = tmp_path / "junk.dat"
    path.write_text('{"kind": "something_else"}\n')
    with pytest.raises(ValueError):
        load_field(path)
    with pytest.raises(ValueError):
        load_mode_field(path)


def test_save_field_momentum_domain_roundtrip(tmp_path):
    from majorana.fourier import majorana_fourier

    g = GridSpec(4, 3.0)
    fm = majorana_fourier(random_majorana_field(g, 3), 1.0)
    save_field(tmp_path / "m.dat", fm, mass=1.0)
    loaded, mass = load_field(tmp_path / "m.dat")
    assert loaded.domain == "momentum"
    assert np.array_equal(loaded.values, fm.values)


def test_json_helpers(tmp_path):
    payload = {"b": 2, "a": [1, 2, 3]}
    save_json(tmp_path / "x.json", payload)
    assert load_json(tmp_path / "x.json") == payload
