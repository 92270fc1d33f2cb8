import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from extshift import CombinatorialShift, ExteriorShift, SimplicialComplex, UniformHypergraph
from extshift.estimators import check_field, check_hypergraph, check_permutation
from extshift.fields import GF, QQ
from extshift.permutations import Permutation, longest_element

C4 = UniformHypergraph([(1, 3), (1, 4), (2, 3), (2, 4)])
SHIFTED = UniformHypergraph([(1, 2), (1, 3), (1, 4), (2, 3)])


def test_get_params_and_clone():
    est = ExteriorShift(method="deterministic", field="2")
    params = est.get_params()
    assert params["method"] == "deterministic" and params["field"] == "2"
    est2 = clone(est).set_params(engine="eager")
    assert est2.engine == "eager" and est.engine == "lazy"


def test_fit_transform():
    out = ExteriorShift(random_state=0).fit_transform([C4, SHIFTED])
    assert out == [SHIFTED, SHIFTED]


def test_single_sample_and_results():
    est = ExteriorShift(method="las-vegas", field="2^3", random_state=1).fit()
    (T,) = est.transform(C4)
    assert T == SHIFTED
    assert est.results_[0].certified


def test_partial_shift():
    est = ExteriorShift(method="deterministic", perm="2 3 4 1", field=2).fit()
    assert est.transform([C4])[0] == UniformHypergraph([(1, 2), (1, 3), (1, 4), (2, 4)])


def test_complexes():
    K = SimplicialComplex([(1, 2), (2, 3), (1, 3)])
    (L,) = ExteriorShift(method="deterministic").fit_transform([K])
    assert L == K


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ExteriorShift().transform([C4])
    with pytest.raises(NotFittedError):
        CombinatorialShift().transform([C4])


@pytest.mark.parametrize("kwargs", [
    {"method": "magic"}, {"engine": "fast"}, {"samples": 0}, {"max_rounds": 0}, {"field": "6"},
    {"method": "combinatorial"},
])
def test_invalid_params(kwargs):
    with pytest.raises(ValueError):
        ExteriorShift(**kwargs).fit()


def test_pipeline():
    pipe = make_pipeline(CombinatorialShift(pair=(3, 4)), ExteriorShift(method="deterministic"))
    assert pipe.fit_transform([C4]) == [SHIFTED]


def test_combinatorial_shift_estimator():
    assert CombinatorialShift(pair=(4, 3)).fit().transform([UniformHypergraph([(1, 4)])]) == [
        UniformHypergraph([(1, 3)], n=4)
    ]
    with pytest.raises(ValueError):
        CombinatorialShift(pair=(2, 2)).fit()


def test_validation_helpers():
    assert check_field("q") == QQ and check_field(3) == GF(3) and check_field(None) == QQ
    with pytest.raises(ValueError):
        check_field("x")
    assert check_hypergraph([(1, 2), (2, 3)]).n == 3
    assert check_hypergraph(C4, n=6).n == 6
    with pytest.raises(TypeError):
        check_hypergraph(SimplicialComplex([(1, 2)]))
    with pytest.raises(TypeError):
        check_hypergraph(5)
    assert check_permutation(None, 4) == longest_element(4)
    assert check_permutation("2 1", 3) == Permutation([2, 1, 3])
    assert check_permutation([2, 1], 2) == Permutation([2, 1])
    with pytest.raises(ValueError):
        check_permutation(Permutation([2, 1]), 3)
