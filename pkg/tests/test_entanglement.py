import numpy as np
import pytest

from mubpy.composite_mubs import three_qubit_set
from mubpy.composite_mubs import two_qubit_complete_set
from mubpy.composite_mubs import two_qudit_complete_set
from mubpy.entanglement import admissible_pattern
from mubpy.entanglement import as_bipartition
from mubpy.entanglement import Bipartition
from mubpy.entanglement import classify_purity
from mubpy.entanglement import classify_set
from mubpy.entanglement import conservation_value
from mubpy.entanglement import entanglement_sum
from mubpy.entanglement import haar_average_purity
from mubpy.entanglement import lubkin_purity
from mubpy.entanglement import purity_budget
from mubpy.entanglement import reduced_density
from mubpy.entanglement import reduced_purity
from mubpy.globals import BasisClass
from mubpy.globals import InvalidArgumentError
from mubpy.globals import StateClass
from mubpy.product_structure import product_mub_set


BELL = np.array([1, 0, 0, 1]) / np.sqrt(2)


def test_bipartition():
    split = Bipartition(2, 3)
    assert str(split) == '2x3'
    assert split.dim == 6
    assert split.d_min == 2
    assert split.embedding(4) == (1, 1)
    assert as_bipartition([2, 3]) == split
    assert hash(as_bipartition((2, 3))) == hash(split)
    with pytest.raises(InvalidArgumentError):
        Bipartition(0, 3)
    with pytest.raises(InvalidArgumentError):
        split.coefficients(np.ones(4))


def test_reduced_purity_examples():
    assert reduced_purity(BELL, (2, 2)) == pytest.approx(0.5)
    product = np.kron([1, 0], [1, 1]) / np.sqrt(2)
    assert reduced_purity(product, (2, 2)) == pytest.approx(1.0)
    ghz_like = np.zeros(6)
    ghz_like[[0, 4]] = 1 / np.sqrt(2)
    assert reduced_purity(ghz_like, (2, 3)) == pytest.approx(0.5)


def test_reduced_purity_rejects_non_unit():
    with pytest.raises(InvalidArgumentError):
        reduced_purity(np.array([1, 0, 0, 1]), (2, 2))


def test_reduced_density_sides_agree():
    rng = np.random.default_rng(11)
    state = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    state /= np.linalg.norm(state)
    rho_a = reduced_density(state, (2, 3), 'A')
    rho_b = reduced_density(state, (2, 3), 'B')
    assert rho_a.shape == (2, 2)
    assert rho_b.shape == (3, 3)
    assert np.trace(rho_a).real == pytest.approx(1.0)
    purity_a = np.trace(rho_a @ rho_a).real
    purity_b = np.trace(rho_b @ rho_b).real
    assert purity_a == pytest.approx(purity_b)
    assert purity_a == pytest.approx(reduced_purity(state, (2, 3)))
    with pytest.raises(InvalidArgumentError):
        reduced_density(state, (2, 3), 'C')


def test_classify_purity():
    assert classify_purity(1.0, (2, 2)) == StateClass.product
    assert classify_purity(0.5, (2, 2)) == StateClass.maximal
    assert classify_purity(0.75, (2, 2)) == StateClass.partial
    assert classify_purity(0.5 + 1e-8, (2, 3)) == StateClass.maximal


@pytest.mark.parametrize("split, value", [((2, 2), 16), ((3, 3), 54), ((5, 5), 250),
                                          ((2, 4), 48), ((4, 2), 48)])
def test_conservation_value(split, value):
    assert conservation_value(split) == value


@pytest.mark.parametrize("split, value", [((2, 2), 0.8), ((2, 3), 5 / 7), ((1, 4), 1.0)])
def test_lubkin_purity(split, value):
    assert lubkin_purity(split) == pytest.approx(value)


@pytest.mark.parametrize("mubs, split", [(two_qubit_complete_set(), (2, 2)),
                                         (two_qudit_complete_set(3, 2), (3, 3)),
                                         (two_qudit_complete_set(5), (5, 5)),
                                         (three_qubit_set(), (2, 4)),
                                         (three_qubit_set(), (4, 2))])
def test_entanglement_sum_is_conserved(mubs, split):
    assert entanglement_sum(mubs, split) == pytest.approx(conservation_value(split))


@pytest.mark.parametrize("part", [(0,), (1,), (2,), (0, 2)])
def test_three_qubit_single_qubit_cuts(part):
    split = Bipartition.from_factors((2, 2, 2), part)
    profile = classify_set(three_qubit_set(), split)
    assert (profile.n_product, profile.n_maximal, profile.n_mixed) == (3, 6, 0)
    assert profile.total == pytest.approx(48.0)
    assert profile.reference == 48


def test_bipartition_from_factors():
    middle = Bipartition.from_factors((2, 2, 2), (1,))
    assert (middle.d_a, middle.d_b) == (2, 4)
    assert str(middle) == '2x2x2:1'
    assert middle != Bipartition(2, 4)
    # |010> has the middle qubit set and the others clear
    assert middle.embedding(2) == (1, 0)
    assert middle.embedding(5) == (0, 3)
    assert Bipartition.from_factors((2, 4), (0,)) == Bipartition(2, 4)
    assert str(Bipartition.from_factors((3, 3), (0,))) == '3x3'
    assert as_bipartition(([2, 2, 2], [1])) == middle
    state = np.kron(np.kron([1, 0], np.array([1, 1]) / np.sqrt(2)), [0, 1])
    assert reduced_purity(state, middle) == pytest.approx(1.0)
    assert reduced_purity(np.kron(BELL, [1, 0]), middle) == pytest.approx(0.5)


@pytest.mark.parametrize("factors, part", [((2, 2, 2), ()), ((2, 2, 2), (0, 1, 2)),
                                          ((2, 2, 2), (3,)), ((2, 2, 2), (1, 1)),
                                          ((2, 0), (0,))])
def test_bipartition_from_factors_rejects(factors, part):
    with pytest.raises(InvalidArgumentError):
        Bipartition.from_factors(factors, part)


def test_bipartition_rejects_bad_order():
    with pytest.raises(InvalidArgumentError):
        Bipartition(2, 2, [0, 1, 1, 3])


def test_entanglement_sum_dimension_mismatch():
    with pytest.raises(InvalidArgumentError):
        entanglement_sum(two_qubit_complete_set(), (2, 3))


@pytest.mark.parametrize("mubs, split, counts", [
    (two_qudit_complete_set(3, 2), (3, 3), (4, 6, 0)),
    (two_qubit_complete_set(), (2, 2), (3, 2, 0)),
    (product_mub_set(2, 3), (2, 3), (3, 0, 0)),
    (three_qubit_set(), (2, 4), (3, 6, 0)),
    (two_qudit_complete_set(5), (5, 5), (6, 20, 0)),
])
def test_classify_set_counts(mubs, split, counts):
    profile = classify_set(mubs, split)
    assert (profile.n_product, profile.n_maximal, profile.n_mixed) == counts
    assert profile.total == pytest.approx(entanglement_sum(mubs, split))


def test_profile_tables():
    profile = classify_set(two_qubit_complete_set(), (2, 2))
    assert list(profile.frame.columns) == ['basis', 'state', 'purity', 'state_class']
    assert len(profile.frame) == 20
    assert profile.reference == 16
    assert profile.basis_classes['P a0b1'] == BasisClass.maximal
    assert profile.basis_classes['standard'] == BasisClass.product
    summary = profile.summary()
    assert summary['basis'].tolist() == two_qubit_complete_set().labels
    assert summary['basis_class'].tolist() == ['product', 'product', 'product',
                                               'maximal', 'maximal']
    assert summary['sum'].sum() == pytest.approx(16.0)


def test_rest_maximal_after_product_bases():
    assert classify_set(two_qubit_complete_set(), (2, 2)).rest_maximal is True
    assert classify_set(two_qudit_complete_set(3, 2), (3, 3)).rest_maximal is True
    assert classify_set(product_mub_set(2, 3), (2, 3)).rest_maximal is None


def test_purity_budget():
    assert purity_budget((3, 3), 4) == pytest.approx(1 / 3)
    assert purity_budget((2, 2), 3) == pytest.approx(0.5)
    assert purity_budget((2, 2), 0) == pytest.approx(0.8)
    with pytest.raises(InvalidArgumentError):
        purity_budget((3, 3), 10)
    with pytest.raises(InvalidArgumentError):
        purity_budget((3, 3), -1)


@pytest.mark.parametrize("split, n_product, n_maximal, expected", [
    ((2, 2), 3, 2, True),
    ((3, 3), 4, 6, True),
    ((2, 2), 3, 1, False),
    ((2, 2), 1, 4, False),
    ((2, 2), 5, 0, False),
])
def test_admissible_pattern(split, n_product, n_maximal, expected):
    assert admissible_pattern(split, n_product, n_maximal) is expected


def test_admissible_pattern_rejects_overfull():
    with pytest.raises(InvalidArgumentError):
        admissible_pattern((2, 2), 4, 2)


@pytest.mark.parametrize("split", [(2, 2), (2, 3)])
def test_haar_average_matches_lubkin(split):
    estimate = haar_average_purity(split, 100000, seed=5, batch_size=10000)
    assert estimate.samples == 100000
    assert estimate.stderr > 0
    assert abs(estimate.mean - lubkin_purity(split)) < 3 * estimate.stderr


def test_haar_average_independent_of_workers():
    first = haar_average_purity((2, 2), 3000, seed=9, n_jobs=1, batch_size=1000)
    second = haar_average_purity((2, 2), 3000, seed=9, n_jobs=2, batch_size=1000)
    assert first.mean == pytest.approx(second.mean, abs=1e-15)
    assert first.stderr == pytest.approx(second.stderr, abs=1e-15)


def test_haar_average_trivial_split():
    estimate = haar_average_purity((1, 4), 200, seed=0)
    assert estimate.mean == pytest.approx(1.0)


def test_haar_average_needs_samples():
    with pytest.raises(InvalidArgumentError):
        haar_average_purity((2, 2), 99, seed=0)
