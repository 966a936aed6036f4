import pytest

import anclab
from anclab import BaselineScheme, CompactScheme, create_scheme, label
from anclab.services.scheme.forest import gen_forest, is_ancestor_oracle


def test_label_helper():
    assert label([0, 1], 2).as_dict() == {1: 15, 2: 1}


def test_create_scheme():
    assert isinstance(create_scheme(100, 4), CompactScheme)
    assert isinstance(create_scheme(100, 4, scheme="baseline"), BaselineScheme)
    with pytest.raises(ValueError):
        create_scheme(100, 4, scheme="other")


@pytest.mark.parametrize("name", sorted(anclab.SCHEMES))
def test_schemes_agree_with_oracle(name):
    F = gen_forest(120, 5, seed=4)
    scheme = anclab.SCHEMES[name](120, 5)
    labels = scheme.label(F)
    assert scheme.observed_bits(labels) <= scheme.label_bits()
    for u in F.nodes():
        for v in range(1, 121, 5):
            assert scheme.is_ancestor(labels[u], labels[v]) == is_ancestor_oracle(F, u, v)


def test_version():
    assert anclab.get_version() == anclab.__version__
