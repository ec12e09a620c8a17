import itertools

import numpy as np
import pytest

from mubpy.entanglement import classify_set
from mubpy.globals import InvalidArgumentError
from mubpy.globals import UnsupportedDimensionError
from mubpy.matrix_core import ExactBasis
from mubpy.matrix_core import unbiased_deviation
from mubpy.wocjan_beth import families_are_compatible
from mubpy.wocjan_beth import fourier_phases
from mubpy.wocjan_beth import IncidentFamily
from mubpy.wocjan_beth import IncidentVector
from mubpy.wocjan_beth import lift
from mubpy.wocjan_beth import mols_families
from mubpy.wocjan_beth import natural_families
from mubpy.wocjan_beth import PhaseVector
from mubpy.wocjan_beth import wocjan_beth_mubs


def test_incident_vector():
    v = IncidentVector(2, [3, 0])
    assert v.support == (0, 3)
    assert v.vector().tolist() == [1, 0, 0, 1]
    with pytest.raises(InvalidArgumentError):
        IncidentVector(2, [0])
    with pytest.raises(InvalidArgumentError):
        IncidentVector(2, [0, 4])


def test_incident_family_must_partition():
    with pytest.raises(InvalidArgumentError):
        IncidentFamily(2, [IncidentVector(2, [0, 1]), IncidentVector(2, [1, 2])])
    with pytest.raises(InvalidArgumentError):
        IncidentFamily(2, [IncidentVector(2, [0, 1])])


def test_phase_vector_modulus():
    assert PhaseVector([1, 1j, -1]).dim == 3
    with pytest.raises(InvalidArgumentError):
        PhaseVector([1, 0.5])


def test_natural_families_qubit():
    rows, columns = natural_families(2)
    assert [v.support for v in rows.members] == [(0, 1), (2, 3)]
    assert [v.support for v in columns.members] == [(0, 2), (1, 3)]
    with pytest.raises(InvalidArgumentError):
        natural_families(1)


def test_mols_families_qubit():
    families = mols_families(2)
    assert len(families) == 1
    assert families[0].name == 'mols k=1'
    assert [v.support for v in families[0].members] == [(0, 3), (1, 2)]
    with pytest.raises(UnsupportedDimensionError):
        mols_families(4)


@pytest.mark.parametrize("d", [2, 3, 5])
def test_families_pairwise_compatible(d):
    families = natural_families(d) + mols_families(d)
    assert len(families) == d + 1
    for first, second in itertools.combinations(families, 2):
        assert families_are_compatible(first, second)
    assert not families_are_compatible(families[0], families[0])


def test_lift_example():
    state = lift(PhaseVector([1, -1]), IncidentVector(2, [0, 3]))
    assert np.allclose(state, np.array([1, 0, 0, -1]) / np.sqrt(2))
    with pytest.raises(InvalidArgumentError):
        lift(PhaseVector([1, 1, 1]), IncidentVector(2, [0, 3]))


def test_fourier_phases_are_orthogonal():
    h = np.array([x.entries for x in fourier_phases(5)])
    assert np.allclose(h.conj() @ h.T, 5 * np.eye(5))


@pytest.mark.parametrize("d", [2, 3, 5])
def test_wocjan_beth_mubs(d):
    mubs = wocjan_beth_mubs(d)
    assert len(mubs) == d + 1
    assert mubs.dim == d * d
    assert mubs.labels[:2] == ['rows', 'columns']
    assert mubs.provenance['method'] == 'wocjan-beth'
    assert all(isinstance(b, ExactBasis) for b in mubs)
    for first, second in itertools.combinations(mubs, 2):
        assert unbiased_deviation(first, second) < 1e-10


@pytest.mark.parametrize("d", [2, 3, 5])
def test_wocjan_beth_entanglement(d):
    profile = classify_set(wocjan_beth_mubs(d), (d, d))
    assert (profile.n_product, profile.n_maximal, profile.n_mixed) == (2, d - 1, 0)


def test_wocjan_beth_custom_phases():
    phases = [PhaseVector(h.entries * np.exp(0.3j * k))
              for k, h in enumerate(fourier_phases(3))]
    mubs = wocjan_beth_mubs(3, phases)
    assert not mubs.exact
    for first, second in itertools.combinations(mubs, 2):
        assert unbiased_deviation(first, second) < 1e-10


def test_wocjan_beth_errors():
    with pytest.raises(InvalidArgumentError):
        wocjan_beth_mubs(3, [PhaseVector([1, 1, 1])] * 3)
    with pytest.raises(InvalidArgumentError):
        wocjan_beth_mubs(3, fourier_phases(2))
    with pytest.raises(UnsupportedDimensionError):
        wocjan_beth_mubs(4)
