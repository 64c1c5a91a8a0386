import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from ymwaves.constraints import build_family_i, build_family_ii, build_family_iii, classify
from ymwaves.fields import AnsatzParams, SpacetimePoint
from ymwaves.observables import (
    EnergyProfile,
    energy_closed_form,
    energy_density,
    energy_profile,
    mean_energy_closed_form,
    node_locations,
    point_at_phase,
    poynting,
    time_averaged_electric,
)
from ymwaves.su2 import rotated_coeffs


def family_ii_solution(k=1.0, alpha4=1.0, lam=0.0, g=1.0, eta=1, xi=1):
    return classify(build_family_ii(k, alpha4, lam=lam, g=g, eta=eta, xi=xi))


def test_family_ii_density_extremes():
    sol = family_ii_solution()
    p = sol.params()
    assert energy_density(p, point_at_phase(p, math.pi)) == pytest.approx(1.0)
    assert energy_closed_form(sol, math.pi) == pytest.approx(1.0)
    assert energy_density(p, point_at_phase(p, 0.0)) < 1e-25
    assert energy_closed_form(sol, 0.0) == 0.0


def test_family_ii_opposite_signs_swap_node():
    sol = family_ii_solution(eta=1, xi=-1)
    p = sol.params()
    assert energy_density(p, point_at_phase(p, math.pi)) < 1e-25
    assert energy_density(p, point_at_phase(p, 0.0)) == pytest.approx(1.0)


def test_family_i_density_matches_closed_form():
    sol = classify(build_family_i(k=1.3, alpha4=0.7, lam=0.4, g=0.9))
    p = sol.params()
    for th in np.linspace(0.0, 2.0 * math.pi, 17):
        want = (1.3 * 0.7) ** 2 * math.cos(th) ** 2
        assert energy_closed_form(sol, th) == pytest.approx(want, abs=1e-12)
        assert energy_density(p, point_at_phase(p, th)) == pytest.approx(want, abs=1e-12)


def test_family_iii_density_vanishes():
    sol = classify(build_family_iii(k=2.0, omega=3.0, alpha4=1.5, lam=0.8, g=1.0))
    p = sol.params()
    for th in (0.0, 1.0, 2.5):
        assert energy_density(p, point_at_phase(p, th)) < 1e-28
    with pytest.raises(ValueError):
        energy_closed_form(sol, 0.0)
    with pytest.raises(ValueError):
        mean_energy_closed_form(sol)
    with pytest.raises(ValueError):
        node_locations(sol)


def test_kappa_scaling_and_validation():
    sol = family_ii_solution()
    p = sol.params()
    s = point_at_phase(p, 2.0)
    assert energy_density(p, s, kappa=0.5) == 2.0 * energy_density(p, s)
    with pytest.raises(ValueError):
        energy_density(p, s, kappa=0.0)
    with pytest.raises(ValueError):
        poynting(p, s, kappa=-1.0)


def test_mean_density_closed_form():
    sol = family_ii_solution(k=2.0, alpha4=0.9)
    prof = energy_profile(sol, n_samples=128)
    sampled_mean = sum(prof.densities) / len(prof.densities)
    assert mean_energy_closed_form(sol) == pytest.approx(2.0 ** 2 * 0.9 ** 2 / 2.0)
    # uniform phase sampling of a trigonometric polynomial is exact
    assert sampled_mean == pytest.approx(mean_energy_closed_form(sol), abs=1e-10)
    sol_i = classify(build_family_i(k=2.0, alpha4=0.9, lam=0.0, g=1.0))
    prof_i = energy_profile(sol_i, n_samples=128)
    assert sum(prof_i.densities) / 128 == pytest.approx(mean_energy_closed_form(sol_i), abs=1e-10)


def test_poynting_flux_equals_density():
    # B_x = -E_y makes the flux purely longitudinal with |S| = energy density
    for sol in (family_ii_solution(k=1.7, alpha4=1.1, lam=0.5, eta=-1, xi=1),
                classify(build_family_i(k=1.7, alpha4=1.1, lam=0.5, g=1.0))):
        p = sol.params()
        for th in (0.4, 1.9, 4.4):
            s = point_at_phase(p, th)
            sx, sy, sz = poynting(p, s)
            assert sx == 0.0 and sy == 0.0
            assert sz >= 0.0
            assert sz == pytest.approx(energy_density(p, s), abs=1e-13)


def test_poynting_vanishes_for_family_iii():
    p = build_family_iii(k=1.0, omega=2.0, alpha4=1.0, lam=0.3, g=1.0)
    assert poynting(p, SpacetimePoint(t=0.3, y=0.5, z=1.1)) == (0.0, 0.0, 0.0)


def test_time_averaged_electric_family_ii():
    # oscillatory parts of E_y average out, the constant -xi eta (k a4/2) Sy survives
    p = build_family_ii(k=2.0, alpha4=1.0, lam=0.0, g=1.0, eta=1, xi=1)
    avg = time_averaged_electric(p, y=0.0)
    ax, ay, az = rotated_coeffs(avg.ey, p.lam, 0.0)
    assert ay == pytest.approx(-1.0, abs=1e-12)
    assert abs(ax) < 1e-12 and abs(az) < 1e-12
    assert avg.ex.norm() < 1e-12 and avg.ez.norm() < 1e-12


def test_time_averaged_electric_rotated_background():
    p = build_family_ii(k=2.0, alpha4=1.0, lam=0.4, g=1.0, eta=1, xi=-1)
    avg = time_averaged_electric(p, y=0.7)
    _, ay, az = rotated_coeffs(avg.ey, p.lam, 0.7)
    assert ay == pytest.approx(1.0, abs=1e-12)  # sign flips with xi
    assert abs(az) < 1e-12


def test_time_averaged_electric_zero_cases():
    p1 = build_family_i(k=1.5, alpha4=0.8, lam=0.2, g=1.0)
    assert time_averaged_electric(p1, y=0.3).norm() < 1e-12
    p3 = build_family_iii(k=1.0, omega=2.0, alpha4=1.0, lam=0.2, g=1.0)
    assert time_averaged_electric(p3, y=0.3).norm() < 1e-14


def test_time_averaged_electric_validation():
    static = AnsatzParams(alpha4=1.0, k=1.0, omega=0.0)
    with pytest.raises(ValueError):
        time_averaged_electric(static, y=0.0)
    p = build_family_i(k=1.0, alpha4=1.0, lam=0.0, g=1.0)
    with pytest.raises(ValueError):
        time_averaged_electric(p, y=0.0, n_samples=3)


@pytest.mark.parametrize("eta,xi,want", [(1, 1, [0.0]), (-1, -1, [0.0]),
                                         (1, -1, [math.pi]), (-1, 1, [math.pi])])
def test_node_locations_family_ii(eta, xi, want):
    sol = family_ii_solution(eta=eta, xi=xi)
    assert node_locations(sol) == want


def test_node_locations_family_i():
    sol = classify(build_family_i(k=1.0, alpha4=1.0, lam=0.0, g=1.0))
    assert node_locations(sol) == [0.5 * math.pi, 1.5 * math.pi]


def test_nodes_minimize_the_density():
    for sol in (classify(build_family_i(k=1.0, alpha4=1.0, lam=0.0, g=1.0)),
                family_ii_solution(eta=1, xi=-1)):
        p = sol.params()
        for node in node_locations(sol):
            assert energy_density(p, point_at_phase(p, node)) < 1e-25
            res = minimize_scalar(
                lambda th: energy_density(p, point_at_phase(p, th)),
                bounds=(node - 1.0, node + 1.0), method="bounded",
                options={"xatol": 1e-10})
            assert abs(res.x - node) < 1e-4  # density is quadratic at the node
            assert res.fun < 1e-15


def test_energy_profile_contents():
    sol = family_ii_solution(k=1.0, alpha4=2.0)
    prof = energy_profile(sol, n_samples=64)
    assert isinstance(prof, EnergyProfile)
    assert len(prof.thetas) == len(prof.densities) == len(prof.closed_forms) == 64
    assert prof.kappa == 0.25
    assert all(d >= 0.0 for d in prof.densities)
    diffs = [abs(d - c) for d, c in zip(prof.densities, prof.closed_forms)]
    assert max(diffs) < 1e-12
    doubled = energy_profile(sol, n_samples=64, kappa=0.5)
    assert all(b == 2.0 * a for a, b in zip(prof.densities, doubled.densities))
    with pytest.raises(ValueError):
        energy_profile(sol, n_samples=1)


def test_density_is_phase_periodic():
    p = build_family_ii(k=1.3, alpha4=0.9, lam=0.2, g=1.1, eta=-1, xi=-1)
    for th in (0.7, 2.9):
        a = energy_density(p, point_at_phase(p, th))
        b = energy_density(p, point_at_phase(p, th + 2.0 * math.pi))
        assert b == pytest.approx(a, rel=1e-10)


def test_point_at_phase_routes():
    p = build_family_i(k=2.0, alpha4=1.0, lam=0.0, g=1.0)
    s = point_at_phase(p, 1.3, y=0.4)
    assert s.z == pytest.approx(0.65) and s.t == 0.0 and s.y == 0.4
    static_k = AnsatzParams(alpha4=1.0, k=0.0, omega=2.0)
    s2 = point_at_phase(static_k, 1.3)
    assert s2.t == pytest.approx(-0.65) and s2.z == 0.0
    assert static_k.phase(s2) == pytest.approx(1.3)
    with pytest.raises(ValueError):
        point_at_phase(AnsatzParams(k=0.0, omega=0.0), 1.0)
