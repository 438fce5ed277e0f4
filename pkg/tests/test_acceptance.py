"""Acceptance suite: every headline claim at its stated corpus size.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to watch them
stream).  The sizes come from the default :class:`CorpusSpec`: exhaustive
connected graphs through n = 6, three hundred seeded random graphs on 7 and
8 vertices, two hundred sampled instances per interval formula, and the
stated pair counts for the product theorems.  Every comparison is exact set
or integer equality; the only tolerated outcome is zero mismatches.
"""

import pytest

from wtoll.convexity import wth, wtn
from wtoll.graphs import (
    Graph,
    complete_graph,
    random_connected_graph,
    random_tree,
    star_graph,
    two_clique_bridge,
)
from wtoll.intervals import IntervalKind, toll_interval, weakly_toll_interval
from wtoll.oracle import oracle_interval
from wtoll.verify import CorpusSpec, interval_corpus, run_check, summarize


@pytest.fixture(scope="module")
def spec():
    return CorpusSpec()


def _report(number, name, summary, extra=""):
    tail = f" ({extra})" if extra else ""
    status = "PASS" if summary.mismatches == 0 else "FAIL"
    print(
        f"ACCEPTANCE {number:>2} {name}: {status} "
        f"[{summary.matches} match / {summary.mismatches} mismatch / "
        f"{summary.skipped} skipped]{tail}"
    )
    assert summary.mismatches == 0, summary.mismatch_verdicts[:3]


def test_criterion_01_interval_engines_equal_oracle(spec):
    corpus = interval_corpus(spec)
    randoms = [d for d, _ in corpus if d["source"] == "random"]
    assert len(randoms) == 300
    assert {g.n for d, g in corpus if d["source"] == "random"} == {7, 8}
    verdicts = []
    for check in ("wt-interval-oracle", "swt-interval-oracle", "toll-interval-oracle"):
        verdicts.extend(run_check(check, spec))
    _report(1, "interval engines equal stabilised walk oracle", summarize(verdicts),
            f"{len(corpus)} graphs, all pairs, 3 kinds")


def test_criterion_02_worked_examples(spec):
    claw = star_graph(3)
    assert len(weakly_toll_interval(claw, 1, 2)) == 4
    assert len(toll_interval(claw, 1, 2)) == 3
    assert weakly_toll_interval(claw, 1, 2) == oracle_interval(
        claw, 1, 2, IntervalKind.WEAKLY_TOLL
    )

    for n in range(3, 7):
        assert wtn(complete_graph(n))[0] == n, f"wtn(K_{n})"

    for seed in range(50):
        tree = random_tree(4 + seed % 7, 6000 + seed)
        assert wtn(tree)[0] == 2, f"tree seed {seed}"

    assert wtn(two_clique_bridge(3))[0] == 4
    assert wtn(two_clique_bridge(4))[0] == 6

    for seed in range(50):
        base = random_connected_graph(4 + seed % 4, 0.5, 7000 + seed)
        n = base.n
        edges = base.edges() + [(0, n), (1, n + 1)]
        leafy = Graph.from_edge_list(n + 2, edges)
        assert wtn(leafy)[0] == 2, f"two-leaf graph seed {seed}"

    print(
        "ACCEPTANCE  2 worked examples: PASS "
        "[claw intervals, wtn(K_n)=n, 50 trees, clique bridges, 50 two-leaf graphs]"
    )


def test_criterion_03_extension_and_decomposition(spec):
    verdicts = run_check("neighbor-extension", spec)
    verdicts += run_check("max-interval-decomposition", spec)
    _report(3, "neighbour extension and maximum-interval decomposition",
            summarize(verdicts), "complete graphs skipped: no non-adjacent pairs")


def test_criterion_04_wtn_exceeds_two_criterion(spec):
    _report(4, "wtn > 2 iff all maximum pairs miss a neighbour",
            summarize(run_check("wtn-exceeds-two-criterion", spec)))


def test_criterion_05_lexicographic_interval_formulas(spec):
    verdicts = run_check("lex-same-layer-interval", spec)
    verdicts += run_check("lex-cross-layer-interval", spec)
    summary = summarize(verdicts)
    applicable = summary.matches + summary.mismatches
    assert applicable >= 400, "need at least 200 applicable instances per formula"
    _report(5, "lexicographic interval formulas", summary, f"{applicable} applicable")


def test_criterion_06_lexicographic_numbers(spec):
    wtn_verdicts = run_check("lex-wtn-dichotomy", spec)
    wth_verdicts = run_check("lex-hull-number", spec)
    assert len(wtn_verdicts) >= 30 and len(wth_verdicts) >= 30
    factor_numbers = {v.instance["wtn_h"] for v in wtn_verdicts}
    assert 2 in factor_numbers and 4 in factor_numbers  # forced P3 and clique bridge
    assert {v.predicted for v in wtn_verdicts} == {2, 3}
    assert {v.predicted for v in wth_verdicts} == {2}
    _report(6, "lexicographic wtn dichotomy and hull number",
            summarize(wtn_verdicts + wth_verdicts), "both branches exercised")


def test_criterion_07_corona_interval_formulas(spec):
    verdicts = []
    for check in (
        "corona-same-copy-interval",
        "corona-cross-copy-interval",
        "corona-base-pair-interval",
        "corona-mixed-pair-interval",
        "corona-base-restriction",
    ):
        batch = run_check(check, spec)
        assert len(batch) >= 200, check
        verdicts.extend(batch)
    adjacent_cases = [v for v in verdicts if v.note == "adjacent-base-pair"]
    same_base = [v for v in verdicts if v.note == "same-base"]
    assert adjacent_cases and same_base
    assert all(v.status == "match" for v in adjacent_cases)
    _report(7, "corona interval formulas", summarize(verdicts),
            f"{len(adjacent_cases)} adjacent-base extension cases, all matching")


def test_criterion_08_corona_numbers(spec):
    wtn_verdicts = run_check("corona-wtn-dichotomy", spec)
    wth_verdicts = run_check("corona-hull-number", spec)
    gen_verdicts = run_check("generalized-corona-wtn", spec)
    assert len(wtn_verdicts) >= 30 and len(wth_verdicts) >= 30
    assert len(gen_verdicts) >= 10
    assert {v.predicted for v in wtn_verdicts} == {2, 3}
    assert {str(v.predicted) for v in gen_verdicts} == {"2", "<= 3"}
    _report(8, "corona wtn dichotomy, hull number, generalized corona",
            summarize(wtn_verdicts + wth_verdicts + gen_verdicts))


def test_criterion_09_cartesian_and_strong(spec):
    cart = run_check("cartesian-wtn", spec)
    strong = run_check("strong-wtn-bound", spec)
    assert len(cart) >= 20 and len(strong) >= 20
    _report(9, "Cartesian wtn = 2 and strong wtn <= 3", summarize(cart + strong))


def test_criterion_10_convexity_chain(spec):
    verdicts = run_check("convexity-chain", spec)
    subsets = sum(v.instance["subsets"] for v in verdicts)
    _report(10, "convexity chain over all subsets, n <= 5", summarize(verdicts),
            f"{subsets} subsets")


def test_criterion_11_hull_axioms_and_wth_bound(spec):
    axioms = run_check("hull-closure-axioms", spec)
    assert len(axioms) >= 1000
    bound = run_check("wth-le-wtn", spec)
    _report(11, "hull closure axioms and wth <= wtn", summarize(axioms + bound),
            f"{len(axioms)} hull instances, {len(bound)} corpus graphs")
