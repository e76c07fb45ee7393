from bistable import ZeroOneMatrix
from bistable import laws
from bistable.generators import SplitMix64
from bistable.structure import block_triangular_form, is_alpha_stable


def test_runs_are_reproducible():
    a = laws.run_suite("laws", seed=5, count=20, max_n=4, names=["structure.decomposition"])
    b = laws.run_suite("laws", seed=5, count=20, max_n=4, names=["structure.decomposition"])
    assert a.passed and [r.cases for r in a.results] == [r.cases for r in b.results] == [20]


def test_every_law_runs_at_tiny_sizes():
    result = laws.run_suite("all", seed=2, count=5, max_n=2)
    assert result.passed, result.summary()
    assert {r.suite for r in result.results} == {"laws", "oracle"}


def test_laws_needing_order_two_are_skipped_at_max_n_one():
    result = laws.run_suite("laws", count=5, max_n=1)
    skipped = [r for r in result.results if any("skipped" in n for n in r.notes)]
    assert skipped and all(r.passed for r in result.results)


def test_crash_inside_a_law_is_reported(monkeypatch):
    def boom(ctx):
        raise RuntimeError("broken law")

    monkeypatch.setitem(laws.LAWS, "boom", laws.Law("boom", "laws", boom))
    result = laws.run_suite("laws", count=1, max_n=2, names=["boom"])
    assert not result.passed
    assert "RuntimeError: broken law" in result.summary()


def test_random_alpha_stable():
    rng = SplitMix64(4)
    for n in range(2, 10):
        x = laws.random_alpha_stable(n, rng)
        assert is_alpha_stable(x)
        assert min(block_triangular_form(x).block_sizes) >= 2


def test_closure_failures_on_known_pairs():
    c3 = ZeroOneMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    assert laws.closure_failures(c3, c3) == []
    assert laws.closure_failures(ZeroOneMatrix.identity(2), ZeroOneMatrix.ones(2)) == []
    assert laws.decomposition_failures(ZeroOneMatrix.identity(3)) == []


def test_unknown_suite_is_rejected():
    try:
        laws.run_suite("nope")
    except ValueError:
        return
    raise AssertionError("expected ValueError")
