import pytest
from hypothesis import given, settings, strategies as st

from a22crystal.adjoint import INFINITY, AdjointElem, LambdaSpec, LimitElem
from a22crystal.crystal import AffineElem, ResourceLimitError, graph_equal
from a22crystal.energy import H_affine
from a22crystal.paths import (
    Path,
    PathConditionError,
    ground_path,
    multiplicity_table,
    path_component,
    path_e,
    path_eps,
    path_f,
    path_phi,
    path_violations,
    path_wt,
)
from a22crystal.weights import ALPHA0, pair

LAM = LambdaSpec(4, 1)


def A(x, y, m, l=4):
    return AffineElem(AdjointElem(x, y, l), m)


def test_ground_paths():
    assert ground_path(LAM).entries == ()
    assert ground_path(LAM).entry(5) == A(1, 1, 0)
    assert ground_path(LambdaSpec(4, 0)).entry(0) == A(0, 0, 0)
    assert ground_path(INFINITY).entry(3) == AffineElem(LimitElem(0, 0), 0)
    assert path_wt(ground_path(LAM)) == LAM.weight


def test_tail_is_trimmed():
    p = Path(LAM, (A(2, 1, -1), A(1, 1, 0), A(1, 1, 0)))
    assert p.entries == (A(2, 1, -1),)


def test_first_lowering_steps():
    p = path_f(0, ground_path(LambdaSpec(4, 0)))
    assert p.entries == (A(1, 0, -1),)
    assert path_e(1, ground_path(LambdaSpec(4, 0))) is None
    assert path_e(0, ground_path(LambdaSpec(4, 0))) is None


def test_ground_statistics():
    g = ground_path(LAM)
    assert (path_eps(0, g), path_phi(0, g)) == (0, pair(0, LAM.weight))
    assert (path_eps(1, g), path_phi(1, g)) == (0, 1)


def test_violations_detected():
    assert path_violations(Path(LAM, (A(1, 1, 1),)))
    bad = Path(LAM, (A(0, 4, -3),))
    assert H_affine(A(1, 1, 0), A(0, 4, -3)) == 1
    assert not path_violations(Path(LAM, (A(0, 4, -2),)))
    assert path_violations(bad)


def test_component_depth_zero():
    g = path_component(LAM, 0)
    assert list(g.nodes) == ["ground"]
    assert not g.edges


def test_level_one_depth_two():
    from a22crystal.verify import wall_graph

    lam = LambdaSpec(1, 0)
    g = path_component(lam, 2)
    w = wall_graph(lam, 2)
    assert len(g.nodes) == len(w.nodes)
    assert len(g.edges) == len(w.edges)


def test_weight_multiplicities():
    t = multiplicity_table(LAM, 1)
    assert t[LAM.weight] == 1
    assert t[LAM.weight - ALPHA0] == 1


def test_path_json_roundtrip():
    p = path_f(1, path_f(0, ground_path(LAM)))
    data = p.to_json()
    assert data["lambda"] == {"l": 4, "a": 1}
    assert all(set(e) == {"x", "y", "m"} for e in data["entries"])
    assert Path.from_json(data) == p
    q = path_f(0, ground_path(INFINITY))
    assert Path.from_json(q.to_json()) == q


@pytest.mark.parametrize("lam", [LambdaSpec(1, 0), LambdaSpec(3, 1), LAM, INFINITY])
def test_margin_stability(lam):
    a = path_component(lam, 5, "down", margin=2)
    b = path_component(lam, 5, "down", margin=4)
    assert graph_equal(a, b)[0]


@pytest.mark.parametrize("lam", [LambdaSpec(2, 0), LambdaSpec(3, 1), LAM])
def test_forget_grades_onto_classical_component(lam):
    aff = path_component(lam, 5)
    cl = path_component(lam, 5, affine=False)
    image = {p.forget_grades().key() for p in aff.nodes.values()}
    assert image == set(cl.nodes)
    # distinct affine paths stay distinct after forgetting grades
    assert len(image) == len(aff.nodes)


def test_jobs_do_not_change_the_graph():
    a = path_component(LAM, 4, jobs=1)
    b = path_component(LAM, 4, jobs=2)
    assert a.to_json() == b.to_json()


def test_node_cap():
    with pytest.raises(ResourceLimitError):
        path_component(LAM, 8, cap=10)


def test_path_condition_error_is_value_error():
    assert issubclass(PathConditionError, ValueError)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([LambdaSpec(1, 0), LambdaSpec(2, 1), LAM, INFINITY]),
    st.lists(st.tuples(st.sampled_from("EF"), st.sampled_from([0, 1])), max_size=8),
)
def test_random_words(lam, word):
    p = ground_path(lam)
    for kind, i in word:
        q = (path_f if kind == "F" else path_e)(i, p)
        if q is None:
            continue
        assert not path_violations(q)
        assert (path_e if kind == "F" else path_f)(i, q) == p
        p = q
    for i in (0, 1):
        assert pair(i, path_wt(p)) == path_phi(i, p) - path_eps(i, p)


def _principal_series(n_max):
    # prod over n = 1, 5 mod 6 of 1/(1 - q^n)
    c = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        if n % 6 in (1, 5):
            for k in range(n, n_max + 1):
                c[k] += c[k - n]
    return c


def test_level_one_principal_character():
    from collections import Counter

    from a22crystal.verify import wall_graph

    d = 12
    want = _principal_series(d)
    for g in (path_component(LambdaSpec(1, 0), d), wall_graph(LambdaSpec(1, 0), d)):
        by_depth = Counter(n["depth"] for n in g.to_json()["nodes"])
        assert [by_depth[k] for k in range(d + 1)] == want


def test_infinity_principal_character():
    from collections import Counter

    from a22crystal.verify import wall_graph

    # principal degree j of the positive part has dimension 1 + [j = +-1 mod 6]
    d = 8
    c = [1] + [0] * d
    for j in range(1, d + 1):
        for _ in range(1 + (j % 6 in (1, 5))):
            for k in range(j, d + 1):
                c[k] += c[k - j]
    for g in (path_component(INFINITY, d), wall_graph(INFINITY, d)):
        by_depth = Counter(n["depth"] for n in g.to_json()["nodes"])
        assert [by_depth[k] for k in range(d + 1)] == c
