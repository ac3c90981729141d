import cmath
import json

import pytest

import strata_lab as sl


def test_surface_basics(data_dir):
    s = sl.Surface.load(str(data_dir / "octagon_h2.json"))
    assert s.validate() == []
    assert s.genus() == 2
    assert s.stratum() == {"genus": 2, "orders": [4], "name": "Q_2(4)"}
    assert s.is_translation()
    assert s.is_square()
    assert len(s.cycle_basis()) == 4
    assert s.parity_vector() == "0000"
    back = sl.Surface.from_json(s.to_json())
    assert json.loads(back.to_json()) == json.loads(s.to_json())


def test_nonsquare_fixture(data_dir):
    s = sl.Surface.load(str(data_dir / "hexagons_q2_2_2.json"))
    assert not s.is_square()
    assert s.parity_vector() != "0000"
    alpha, beta = s.symplectic_basis()
    for i, a in enumerate(alpha):
        for j, b in enumerate(beta):
            assert s.intersection(a, b) == (1 if i == j else 0)
    cover = s.double_cover()
    assert cover["connected"]
    assert len(cover["projection"]) == 2 * s.num_polygons


def test_errors_carry_codes(data_dir):
    with pytest.raises(sl.StrataError) as info:
        sl.Surface.load(str(data_dir / "pillowcase.json")).stratum()
    assert info.value.code == "unsupported_stratum"
    with pytest.raises(sl.StrataError) as info:
        sl.Surface.load(str(data_dir / "octagons_q1_1_1_1.json")).parity_vector()
    assert info.value.code == "odd_stratum"
    with pytest.raises(sl.StrataError):
        sl.orbit("00")


def test_orbits_and_twists():
    assert sl.orbit("10") == ["01", "10", "11"]
    assert len(sl.orbit("1000")) == 15
    assert sl.twist_action("11", "01") == "01"
    assert sl.sympl("1100", "0010") == 1


def test_component_tables():
    assert sl.qd_components(2, [6, -1, -1]) == {"kind": "exactly", "n": 2, "theorem": "Thm 2.2"}
    assert sl.q_components_over_teich(3, [8]) == {"kind": "at_least", "n": 63, "theorem": "Thm 4.5"}
    assert sl.q_components_over_teich(3, [3, 5])["kind"] == "unknown"


def test_torus():
    assert abs(sl.weierstrass_p(0.5 + 0.5j, 1j)) < 1e-9
    e1, e2, e3 = sl.halfperiod_values(1j)
    assert abs(e1 + e2 + e3) < 1e-8
    assert sl.winding_ga(1j, "none", "alpha")["ga"] == 1
    assert sl.winding_ga(1 + 1j, "none", "alpha")["ga"] == 0
    assert sorted(sl.component_ga_vectors(2j)) == ["01", "10", "11"]
    assert sl.twist_consistency_check()


def test_run_cli():
    code, text = sl.run_cli(["orbit", "--genus", "2", "--seed", "1000"])
    assert code == 0
    assert json.loads(text)["orbit_size"] == 15
