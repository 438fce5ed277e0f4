"""Corpus-driven verification: every closed-form rule against the engines,
and every engine against the walk oracle.

A check takes a :class:`CorpusSpec` and returns :class:`Verdict` records;
identical specs (seeds included) produce byte-identical reports.  Mismatches
never abort a run: the suite always completes and reports everything it
found.  Timing is kept out of the machine-readable reports so they stay
reproducible; it is available on the in-memory verdicts and in the printed
summary.
"""

from __future__ import annotations

import itertools
import json
import random
import time
import zlib
from dataclasses import dataclass, field, fields
from pathlib import Path

from . import closed_forms
from .convexity import (
    check_max_interval_decomposition,
    check_wtn_exceeds_two_criterion,
    hull,
    is_convex,
    wth,
    wtn,
)
from .graphs import (
    Graph,
    VertexSet,
    encode_graph6,
    path_graph,
    random_connected_graph,
    two_clique_bridge,
)
from .intervals import (
    IntervalKind,
    interval,
    semi_weakly_toll_interval,
    toll_interval,
    weakly_toll_interval,
)
from .oracle import oracle_interval
from .products import cartesian, corona, generalized_corona, lexicographic, strong


class InfeasibleCorpusError(ValueError):
    """Raised instead of silently truncating an oversized corpus request."""


EXHAUSTIVE_LIMIT = 6  # canonical enumeration beyond this is refused


@dataclass(frozen=True)
class CorpusSpec:
    """Sizes, seeds and counts driving the verification corpus."""

    seed: int = 20240817
    exhaustive_max_n: int = 6
    random_graph_count: int = 300
    random_graph_sizes: tuple[int, ...] = (7, 8)
    edge_probabilities: tuple[float, ...] = (0.25, 0.4, 0.6)
    budget_extra: int = 2
    factor_min_n: int = 3
    factor_max_n: int = 5
    lex_interval_instances: int = 200
    corona_interval_instances: int = 200
    lex_pair_count: int = 30
    corona_pair_count: int = 30
    generalized_corona_instances: int = 10
    cartesian_pair_count: int = 20
    strong_pair_count: int = 20
    convexity_chain_max_n: int = 5
    hull_axiom_instances: int = 1000

    def __post_init__(self):
        if self.exhaustive_max_n > EXHAUSTIVE_LIMIT:
            raise InfeasibleCorpusError(
                f"exhaustive enumeration capped at n={EXHAUSTIVE_LIMIT}; "
                f"requested {self.exhaustive_max_n}"
            )
        if max(self.random_graph_sizes, default=0) > 10:
            raise InfeasibleCorpusError("oracle cross-checks are limited to 10-vertex graphs")
        if self.factor_max_n > 7:
            raise InfeasibleCorpusError("factor sampling is limited to 7-vertex graphs")
        if self.budget_extra < 0:
            raise InfeasibleCorpusError("budget extra must be non-negative")

    @classmethod
    def from_file(cls, path: str | Path) -> "CorpusSpec":
        """Flat ``key = value`` text; '#' starts a comment; tuples are
        comma-separated."""
        values = {}
        names = {f.name: f for f in fields(cls)}
        for raw in Path(path).read_text().splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"malformed config line {raw!r}")
            key, _, text = (part.strip() for part in line.partition("="))
            if key not in names:
                raise ValueError(f"unknown config key {key!r}")
            if key == "edge_probabilities":
                values[key] = tuple(float(tok) for tok in text.split(","))
            elif key == "random_graph_sizes":
                values[key] = tuple(int(tok) for tok in text.split(","))
            else:
                values[key] = int(text)
        return cls(**values)

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class Verdict:
    """One check on one instance: what was predicted, what was observed."""

    check: str
    instance: dict
    predicted: object
    observed: object
    status: str  # "match" | "mismatch" | "skipped"
    reason: str = ""
    note: str = ""
    runtime: float = field(default=0.0, compare=False)

    def to_json(self) -> str:
        payload = {
            "check": self.check,
            "instance": self.instance,
            "predicted": self.predicted,
            "observed": self.observed,
            "status": self.status,
            "reason": self.reason,
            "note": self.note,
        }
        return json.dumps(payload, sort_keys=True)


def _vs(vertex_set: VertexSet) -> list[int]:
    return sorted(vertex_set)


def _rng(spec: CorpusSpec, check_id: str) -> random.Random:
    return random.Random(spec.seed * 0x9E3779B1 + zlib.crc32(check_id.encode()))


# -- exhaustive connected graphs, one per isomorphism class ----------------


def _canonical_edges(n: int, edges: frozenset[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    best = None
    for perm in itertools.permutations(range(n)):
        mapped = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or mapped < best:
            best = mapped
    return best


_CONNECTED_CACHE: dict[int, list[tuple[tuple[int, int], ...]]] = {}


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on exactly n vertices, one per isomorphism class.

    Grown by attaching a new vertex to every nonempty subset of each smaller
    graph (every connected graph has a removable non-cut vertex, so nothing
    is missed) and de-duplicated by canonical form.
    """
    if n < 1:
        raise ValueError("vertex count must be positive")
    if n > EXHAUSTIVE_LIMIT:
        raise InfeasibleCorpusError(
            f"exhaustive enumeration capped at n={EXHAUSTIVE_LIMIT}; requested {n}"
        )
    if n not in _CONNECTED_CACHE:
        if n == 1:
            _CONNECTED_CACHE[1] = [()]
        else:
            seen = set()
            for smaller in connected_graphs(n - 1):
                base = frozenset(smaller.edges())
                for bits in range(1, 1 << (n - 1)):
                    attach = [v for v in range(n - 1) if bits >> v & 1]
                    edges = base | {(v, n - 1) for v in attach}
                    seen.add(_canonical_edges(n, edges))
            _CONNECTED_CACHE[n] = sorted(seen, key=lambda e: (len(e), e))
    return [Graph.from_edge_list(n, edges) for edges in _CONNECTED_CACHE[n]]


_CORPUS_CACHE: dict[CorpusSpec, list[tuple[dict, Graph]]] = {}


def interval_corpus(spec: CorpusSpec) -> list[tuple[dict, Graph]]:
    """The criterion corpus: exhaustive small graphs plus seeded random ones."""
    if spec not in _CORPUS_CACHE:
        items: list[tuple[dict, Graph]] = []
        for n in range(2, spec.exhaustive_max_n + 1):
            for g in connected_graphs(n):
                items.append(({"graph6": encode_graph6(g), "source": "exhaustive"}, g))
        sizes = spec.random_graph_sizes
        probs = spec.edge_probabilities
        for i in range(spec.random_graph_count):
            n = sizes[i % len(sizes)]
            p = probs[i % len(probs)]
            seed = spec.seed * 1_000_003 + i
            g = random_connected_graph(n, p, seed)
            items.append(
                ({"graph6": encode_graph6(g), "source": "random", "seed": seed}, g)
            )
        _CORPUS_CACHE[spec] = items
    return _CORPUS_CACHE[spec]


def _sample_factor(rng: random.Random, spec: CorpusSpec, allow_complete: bool = False) -> Graph:
    while True:
        n = rng.randint(spec.factor_min_n, spec.factor_max_n)
        p = rng.choice((0.3, 0.45, 0.6))
        g = random_connected_graph(n, p, rng.randrange(1 << 30))
        if allow_complete or not g.is_complete():
            return g


def _sample_non_adjacent_pair(rng: random.Random, g: Graph) -> tuple[int, int]:
    pairs = [
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.adjacent(u, v)
    ]
    return rng.choice(pairs)


# -- engine vs oracle --------------------------------------------------------

_ENGINES = {
    IntervalKind.WEAKLY_TOLL: weakly_toll_interval,
    IntervalKind.SEMI_WEAKLY_TOLL: semi_weakly_toll_interval,
    IntervalKind.TOLL: toll_interval,
}


def _make_interval_oracle_check(check_id: str, kind: IntervalKind):
    def run(spec: CorpusSpec) -> list[Verdict]:
        engine = _ENGINES[kind]
        verdicts = []
        for descriptor, g in interval_corpus(spec):
            start = time.perf_counter()
            pairs = (
                [(u, v) for u in range(g.n) for v in range(g.n) if u != v]
                if kind is IntervalKind.SEMI_WEAKLY_TOLL
                else [(u, v) for u in range(g.n) for v in range(u + 1, g.n)]
            )
            failure = None
            for u, v in pairs:
                fast = engine(g, u, v)
                slow = oracle_interval(g, u, v, kind, 2 * g.n + spec.budget_extra)
                stable = oracle_interval(g, u, v, kind, 2 * g.n)
                if fast != slow or stable != slow:
                    failure = {
                        "pair": [u, v],
                        "engine": _vs(fast),
                        "oracle": _vs(slow),
                        "oracle_at_2n": _vs(stable),
                    }
                    break
            verdicts.append(
                Verdict(
                    check=check_id,
                    instance={**descriptor, "pairs": len(pairs)},
                    predicted="engine equals stabilised oracle on every pair",
                    observed="agreed" if failure is None else failure,
                    status="match" if failure is None else "mismatch",
                    runtime=time.perf_counter() - start,
                )
            )
        return verdicts

    return run


# -- structural lemma checks on the corpus ----------------------------------


def _check_neighbor_extension(spec: CorpusSpec) -> list[Verdict]:
    verdicts = []
    for descriptor, g in interval_corpus(spec):
        start = time.perf_counter()
        adj = g.adjacency_masks()
        failure = None
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.adjacent(u, v):
                    continue
                wt = weakly_toll_interval(g, u, v)
                interior = wt.mask & ~(1 << u | 1 << v)
                shell = adj[u] | adj[v] | 1 << u | 1 << v
                for x in range(g.n):
                    if shell >> x & 1 or x in wt:
                        continue
                    if adj[x] & interior:
                        failure = {"pair": [u, v], "vertex": x, "interval": _vs(wt)}
                        break
                if failure:
                    break
            if failure:
                break
        verdicts.append(
            Verdict(
                check="neighbor-extension",
                instance=descriptor,
                predicted="interval absorbs outside vertices touching its interior",
                observed="holds" if failure is None else failure,
                status="match" if failure is None else "mismatch",
                runtime=time.perf_counter() - start,
            )
        )
    return verdicts


def _make_corpus_predicate_check(check_id: str, predicate, claim: str):
    def run(spec: CorpusSpec) -> list[Verdict]:
        verdicts = []
        for descriptor, g in interval_corpus(spec):
            start = time.perf_counter()
            if g.is_complete():
                verdicts.append(
                    Verdict(
                        check=check_id,
                        instance=descriptor,
                        predicted=claim,
                        observed=None,
                        status="skipped",
                        reason="complete graph: no non-adjacent pairs",
                        runtime=time.perf_counter() - start,
                    )
                )
                continue
            holds = predicate(g)
            verdicts.append(
                Verdict(
                    check=check_id,
                    instance=descriptor,
                    predicted=claim,
                    observed="holds" if holds else "violated",
                    status="match" if holds else "mismatch",
                    runtime=time.perf_counter() - start,
                )
            )
        return verdicts

    return run


# -- closed forms vs product engine ------------------------------------------


def _interval_verdict(check_id, instance, prediction, product, u, v, start, note=""):
    if not prediction.applicable:
        return Verdict(
            check=check_id,
            instance=instance,
            predicted=None,
            observed=None,
            status="skipped",
            reason=prediction.reason,
            note=note,
            runtime=time.perf_counter() - start,
        )
    engine = weakly_toll_interval(product.graph, u, v)
    match = prediction.vertex_set == engine
    return Verdict(
        check=check_id,
        instance=instance,
        predicted=_vs(prediction.vertex_set),
        observed=_vs(engine),
        status="match" if match else "mismatch",
        note=note,
        runtime=time.perf_counter() - start,
    )


def _check_lex_same_layer(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "lex-same-layer-interval")
    verdicts = []
    for _ in range(spec.lex_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        gv = rng.randrange(g.n)
        h1, h2 = _sample_non_adjacent_pair(rng, h)
        product = lexicographic(g, h)
        prediction = closed_forms.lex_interval_same_layer(g, h, gv, h1, h2)
        instance = {
            "g": encode_graph6(g),
            "h": encode_graph6(h),
            "layer": gv,
            "pair": [h1, h2],
        }
        verdicts.append(
            _interval_verdict(
                "lex-same-layer-interval",
                instance,
                prediction,
                product,
                product.pair_index(gv, h1),
                product.pair_index(gv, h2),
                start,
            )
        )
    return verdicts


def _check_lex_cross_layer(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "lex-cross-layer-interval")
    verdicts = []
    for _ in range(spec.lex_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        g1, g2 = _sample_non_adjacent_pair(rng, g)
        h1, h2 = _sample_non_adjacent_pair(rng, h)
        if rng.random() < 0.5:
            h1, h2 = h2, h1
        product = lexicographic(g, h)
        prediction = closed_forms.lex_interval_cross_layer(g, h, g1, h1, g2, h2)
        instance = {
            "g": encode_graph6(g),
            "h": encode_graph6(h),
            "ends": [[g1, h1], [g2, h2]],
        }
        verdicts.append(
            _interval_verdict(
                "lex-cross-layer-interval",
                instance,
                prediction,
                product,
                product.pair_index(g1, h1),
                product.pair_index(g2, h2),
                start,
            )
        )
    return verdicts


def _number_verdict(check_id, instance, prediction, observed_value, start, note=""):
    if not prediction.applicable:
        return Verdict(
            check=check_id,
            instance=instance,
            predicted=None,
            observed=None,
            status="skipped",
            reason=prediction.reason,
            note=note,
            runtime=time.perf_counter() - start,
        )
    if prediction.target == "wtn-upper-bound":
        match = observed_value <= prediction.value
        predicted = f"<= {prediction.value}"
    else:
        match = observed_value == prediction.value
        predicted = prediction.value
    return Verdict(
        check=check_id,
        instance=instance,
        predicted=predicted,
        observed=observed_value,
        status="match" if match else "mismatch",
        note=note,
        runtime=time.perf_counter() - start,
    )


def _product_pairs(rng, spec, count, forced_second=()):
    """Factor pairs for theorem checks; a few second factors can be pinned."""
    pairs = []
    for h in forced_second:
        pairs.append((_sample_factor(rng, spec), h))
    while len(pairs) < count:
        pairs.append((_sample_factor(rng, spec), _sample_factor(rng, spec)))
    return pairs


def _check_lex_wtn(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "lex-wtn-dichotomy")
    verdicts = []
    forced = (path_graph(3), two_clique_bridge(3))
    for g, h in _product_pairs(rng, spec, spec.lex_pair_count, forced):
        start = time.perf_counter()
        prediction = closed_forms.lex_wtn(g, h)
        observed = wtn(lexicographic(g, h).graph)[0]
        instance = {"g": encode_graph6(g), "h": encode_graph6(h), "wtn_h": wtn(h)[0]}
        verdicts.append(
            _number_verdict("lex-wtn-dichotomy", instance, prediction, observed, start)
        )
    return verdicts


def _check_lex_wth(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "lex-hull-number")
    verdicts = []
    forced = (path_graph(3), two_clique_bridge(3))
    for g, h in _product_pairs(rng, spec, spec.lex_pair_count, forced):
        start = time.perf_counter()
        prediction = closed_forms.lex_wth(g, h)
        observed = wth(lexicographic(g, h).graph)[0]
        instance = {"g": encode_graph6(g), "h": encode_graph6(h)}
        verdicts.append(
            _number_verdict("lex-hull-number", instance, prediction, observed, start)
        )
    return verdicts


def _check_corona_same_copy(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "corona-same-copy-interval")
    verdicts = []
    for _ in range(spec.corona_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        i = rng.randrange(g.n)
        h1, h2 = _sample_non_adjacent_pair(rng, h)
        product = corona(g, h)
        prediction = closed_forms.corona_interval_same_copy(g, h, i, h1, h2)
        instance = {
            "g": encode_graph6(g),
            "h": encode_graph6(h),
            "copy": i,
            "pair": [h1, h2],
        }
        verdicts.append(
            _interval_verdict(
                "corona-same-copy-interval",
                instance,
                prediction,
                product,
                product.copy_index(i, h1),
                product.copy_index(i, h2),
                start,
            )
        )
    return verdicts


def _check_corona_cross_copies(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "corona-cross-copy-interval")
    verdicts = []
    for _ in range(spec.corona_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        i, j = rng.sample(range(g.n), 2)
        k = rng.randrange(h.n)
        l = rng.randrange(h.n)
        product = corona(g, h)
        prediction = closed_forms.corona_interval_cross_copies(g, h, i, k, j, l)
        instance = {
            "g": encode_graph6(g),
            "h": encode_graph6(h),
            "ends": [[i, k], [j, l]],
        }
        verdicts.append(
            _interval_verdict(
                "corona-cross-copy-interval",
                instance,
                prediction,
                product,
                product.copy_index(i, k),
                product.copy_index(j, l),
                start,
            )
        )
    return verdicts


def _check_corona_base_pair(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "corona-base-pair-interval")
    verdicts = []
    for _ in range(spec.corona_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        i, j = rng.sample(range(g.n), 2)
        product = corona(g, h)
        prediction = closed_forms.corona_interval_base_pair(g, h, i, j)
        note = "adjacent-base-pair" if g.adjacent(i, j) else ""
        instance = {"g": encode_graph6(g), "h": encode_graph6(h), "bases": [i, j]}
        verdicts.append(
            _interval_verdict(
                "corona-base-pair-interval",
                instance,
                prediction,
                product,
                product.base_index(i),
                product.base_index(j),
                start,
                note=note,
            )
        )
    return verdicts


def _check_corona_mixed(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "corona-mixed-pair-interval")
    verdicts = []
    for counter in range(spec.corona_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        if counter % 5 == 0:
            i = j = rng.randrange(g.n)
        else:
            i, j = rng.sample(range(g.n), 2)
        k = rng.randrange(h.n)
        product = corona(g, h)
        prediction = closed_forms.corona_interval_mixed(g, h, i, j, k)
        if i == j:
            note = "same-base"
        elif g.adjacent(i, j):
            note = "adjacent-base-pair"
        else:
            note = ""
        instance = {"g": encode_graph6(g), "h": encode_graph6(h), "base": i, "copy": [j, k]}
        verdicts.append(
            _interval_verdict(
                "corona-mixed-pair-interval",
                instance,
                prediction,
                product,
                product.base_index(i),
                product.copy_index(j, k),
                start,
                note=note,
            )
        )
    return verdicts


def _check_corona_base_restriction(spec: CorpusSpec) -> list[Verdict]:
    """The base-pair interval restricted to base vertices equals the factor
    interval (membership transfers both ways for non-adjacent base pairs)."""
    rng = _rng(spec, "corona-base-restriction")
    verdicts = []
    for _ in range(spec.corona_interval_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        i, j = _sample_non_adjacent_pair(rng, g)
        product = corona(g, h)
        inside = weakly_toll_interval(g, i, j)
        product_side = weakly_toll_interval(product.graph, product.base_index(i), product.base_index(j))
        restricted = sorted(
            x for x in range(g.n) if product.base_index(x) in product_side
        )
        instance = {"g": encode_graph6(g), "h": encode_graph6(h), "bases": [i, j]}
        match = restricted == _vs(inside)
        verdicts.append(
            Verdict(
                check="corona-base-restriction",
                instance=instance,
                predicted=_vs(inside),
                observed=restricted,
                status="match" if match else "mismatch",
                runtime=time.perf_counter() - start,
            )
        )
    return verdicts


def _check_corona_wtn(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "corona-wtn-dichotomy")
    verdicts = []
    forced = (path_graph(3), two_clique_bridge(3))
    for g, h in _product_pairs(rng, spec, spec.corona_pair_count, forced):
        start = time.perf_counter()
        prediction = closed_forms.corona_wtn(g, h)
        observed = wtn(corona(g, h).graph)[0]
        instance = {"g": encode_graph6(g), "h": encode_graph6(h), "wtn_h": wtn(h)[0]}
        verdicts.append(
            _number_verdict("corona-wtn-dichotomy", instance, prediction, observed, start)
        )
    return verdicts


def _check_corona_wth(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "corona-hull-number")
    verdicts = []
    forced = (path_graph(3), two_clique_bridge(3))
    for g, h in _product_pairs(rng, spec, spec.corona_pair_count, forced):
        start = time.perf_counter()
        prediction = closed_forms.corona_wth(g, h)
        observed = wth(corona(g, h).graph)[0]
        instance = {"g": encode_graph6(g), "h": encode_graph6(h)}
        verdicts.append(
            _number_verdict("corona-hull-number", instance, prediction, observed, start)
        )
    return verdicts


def _check_generalized_corona(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "generalized-corona-wtn")
    pool = [
        lambda: path_graph(rng.randint(3, 4)),
        lambda: two_clique_bridge(2),
        lambda: Graph.from_edge_list(2, [(0, 1)]),
        lambda: Graph.from_edge_list(3, [(0, 1), (1, 2), (0, 2)]),
        lambda: _sample_factor(rng, spec),
    ]
    verdicts = []
    for counter in range(spec.generalized_corona_instances):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        if counter == 0:
            # pin one instance on the upper-bound branch: the only
            # non-complete attached graph needs more than two vertices
            copies = [two_clique_bridge(3)] + [
                Graph.from_edge_list(2, [(0, 1)]) for _ in range(g.n - 1)
            ]
        else:
            copies = [pool[rng.randrange(len(pool))]() for _ in range(g.n)]
            if all(c.is_complete() for c in copies):
                copies[0] = path_graph(3)
        prediction = closed_forms.generalized_corona_wtn(g, copies)
        observed = wtn(generalized_corona(g, copies).graph)[0]
        instance = {
            "g": encode_graph6(g),
            "copies": [encode_graph6(c) for c in copies],
        }
        verdicts.append(
            _number_verdict("generalized-corona-wtn", instance, prediction, observed, start)
        )
    return verdicts


def _check_cartesian_wtn(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "cartesian-wtn")
    verdicts = []
    for counter in range(spec.cartesian_pair_count):
        start = time.perf_counter()
        # the claim also covers complete factors, so allow them sometimes
        g = _sample_factor(rng, spec, allow_complete=counter % 4 == 0)
        h = _sample_factor(rng, spec, allow_complete=counter % 4 == 1)
        prediction = closed_forms.cartesian_wtn(g, h)
        observed = wtn(cartesian(g, h).graph)[0]
        instance = {"g": encode_graph6(g), "h": encode_graph6(h)}
        verdicts.append(
            _number_verdict("cartesian-wtn", instance, prediction, observed, start)
        )
    return verdicts


def _check_strong_wtn(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "strong-wtn-bound")
    verdicts = []
    for _ in range(spec.strong_pair_count):
        start = time.perf_counter()
        g = _sample_factor(rng, spec)
        h = _sample_factor(rng, spec)
        prediction = closed_forms.strong_wtn_bound(g, h)
        observed = wtn(strong(g, h).graph)[0]
        instance = {"g": encode_graph6(g), "h": encode_graph6(h)}
        verdicts.append(
            _number_verdict("strong-wtn-bound", instance, prediction, observed, start)
        )
    return verdicts


# -- convexity properties ----------------------------------------------------

_CHAIN = (
    IntervalKind.WEAKLY_TOLL,
    IntervalKind.TOLL,
    IntervalKind.MONOPHONIC,
    IntervalKind.GEODESIC,
)


def _check_convexity_chain(spec: CorpusSpec) -> list[Verdict]:
    verdicts = []
    for n in range(2, spec.convexity_chain_max_n + 1):
        for g in connected_graphs(n):
            start = time.perf_counter()
            failure = None
            for bits in range(1 << g.n):
                subset = VertexSet(g.n, bits)
                flags = [is_convex(g, subset, kind) for kind in _CHAIN]
                for pos in range(len(flags) - 1):
                    if flags[pos] and not flags[pos + 1]:
                        failure = {
                            "subset": _vs(subset),
                            "convex_under": _CHAIN[pos].value,
                            "not_convex_under": _CHAIN[pos + 1].value,
                        }
                        break
                if failure:
                    break
            verdicts.append(
                Verdict(
                    check="convexity-chain",
                    instance={"graph6": encode_graph6(g), "subsets": 1 << g.n},
                    predicted="weakly-toll => toll => monophonic => geodesic convexity",
                    observed="holds" if failure is None else failure,
                    status="match" if failure is None else "mismatch",
                    runtime=time.perf_counter() - start,
                )
            )
    return verdicts


def _check_hull_axioms(spec: CorpusSpec) -> list[Verdict]:
    rng = _rng(spec, "hull-closure-axioms")
    kinds = list(IntervalKind)
    verdicts = []
    for counter in range(spec.hull_axiom_instances):
        start = time.perf_counter()
        n = rng.randint(4, 8)
        g = random_connected_graph(n, rng.choice((0.3, 0.5)), rng.randrange(1 << 30))
        kind = kinds[counter % len(kinds)]
        small = VertexSet.from_iterable(n, rng.sample(range(n), rng.randint(1, n - 1)))
        extra = VertexSet.from_iterable(n, rng.sample(range(n), rng.randint(1, n - 1)))
        big = small | extra
        closed = hull(g, small, kind)
        extensive = small <= closed
        idempotent = hull(g, closed, kind) == closed
        monotone = closed <= hull(g, big, kind)
        ok = extensive and idempotent and monotone
        verdicts.append(
            Verdict(
                check="hull-closure-axioms",
                instance={
                    "graph6": encode_graph6(g),
                    "kind": kind.value,
                    "seed_set": _vs(small),
                    "superset": _vs(big),
                },
                predicted="extensive, idempotent, monotone",
                observed="holds"
                if ok
                else {
                    "extensive": extensive,
                    "idempotent": idempotent,
                    "monotone": monotone,
                },
                status="match" if ok else "mismatch",
                runtime=time.perf_counter() - start,
            )
        )
    return verdicts


def _check_wth_le_wtn(spec: CorpusSpec) -> list[Verdict]:
    verdicts = []
    for descriptor, g in interval_corpus(spec):
        start = time.perf_counter()
        interval_number = wtn(g)[0]
        hull_number = wth(g)[0]
        verdicts.append(
            Verdict(
                check="wth-le-wtn",
                instance=descriptor,
                predicted=f"wth <= wtn = {interval_number}",
                observed=hull_number,
                status="match" if hull_number <= interval_number else "mismatch",
                runtime=time.perf_counter() - start,
            )
        )
    return verdicts


# -- registry ---------------------------------------------------------------

CHECKS = {
    "wt-interval-oracle": _make_interval_oracle_check(
        "wt-interval-oracle", IntervalKind.WEAKLY_TOLL
    ),
    "swt-interval-oracle": _make_interval_oracle_check(
        "swt-interval-oracle", IntervalKind.SEMI_WEAKLY_TOLL
    ),
    "toll-interval-oracle": _make_interval_oracle_check(
        "toll-interval-oracle", IntervalKind.TOLL
    ),
    "neighbor-extension": _check_neighbor_extension,
    "max-interval-decomposition": _make_corpus_predicate_check(
        "max-interval-decomposition",
        check_max_interval_decomposition,
        "outside of a maximum interval splits into the two missed neighbourhoods",
    ),
    "wtn-exceeds-two-criterion": _make_corpus_predicate_check(
        "wtn-exceeds-two-criterion",
        check_wtn_exceeds_two_criterion,
        "wtn > 2 iff every maximum pair misses a neighbour",
    ),
    "lex-same-layer-interval": _check_lex_same_layer,
    "lex-cross-layer-interval": _check_lex_cross_layer,
    "lex-wtn-dichotomy": _check_lex_wtn,
    "lex-hull-number": _check_lex_wth,
    "corona-same-copy-interval": _check_corona_same_copy,
    "corona-cross-copy-interval": _check_corona_cross_copies,
    "corona-base-pair-interval": _check_corona_base_pair,
    "corona-mixed-pair-interval": _check_corona_mixed,
    "corona-base-restriction": _check_corona_base_restriction,
    "corona-wtn-dichotomy": _check_corona_wtn,
    "corona-hull-number": _check_corona_wth,
    "generalized-corona-wtn": _check_generalized_corona,
    "cartesian-wtn": _check_cartesian_wtn,
    "strong-wtn-bound": _check_strong_wtn,
    "convexity-chain": _check_convexity_chain,
    "hull-closure-axioms": _check_hull_axioms,
    "wth-le-wtn": _check_wth_le_wtn,
}

SUITES = {
    "all": list(CHECKS),
    "intervals": ["wt-interval-oracle", "swt-interval-oracle", "toll-interval-oracle"],
    "structure": [
        "neighbor-extension",
        "max-interval-decomposition",
        "wtn-exceeds-two-criterion",
    ],
    "lexicographic": [
        "lex-same-layer-interval",
        "lex-cross-layer-interval",
        "lex-wtn-dichotomy",
        "lex-hull-number",
    ],
    "corona": [
        "corona-same-copy-interval",
        "corona-cross-copy-interval",
        "corona-base-pair-interval",
        "corona-mixed-pair-interval",
        "corona-base-restriction",
        "corona-wtn-dichotomy",
        "corona-hull-number",
        "generalized-corona-wtn",
    ],
    "cartesian-strong": ["cartesian-wtn", "strong-wtn-bound"],
    "convexity": ["convexity-chain", "hull-closure-axioms", "wth-le-wtn"],
}


def run_check(check_id: str, spec: CorpusSpec | None = None) -> list[Verdict]:
    if check_id not in CHECKS:
        raise ValueError(f"unknown check {check_id!r}")
    return CHECKS[check_id](spec or CorpusSpec())


def run_suite(name: str, spec: CorpusSpec | None = None) -> list[Verdict]:
    """Run a named suite, or a single check by its id."""
    spec = spec or CorpusSpec()
    if name in SUITES:
        names = SUITES[name]
    elif name in CHECKS:
        names = [name]
    else:
        raise ValueError(f"unknown suite {name!r}")
    verdicts = []
    for check_id in names:
        verdicts.extend(CHECKS[check_id](spec))
    return verdicts


# -- summaries and report files ----------------------------------------------


@dataclass
class Summary:
    total: int
    matches: int
    mismatches: int
    skipped: int
    by_check: dict[str, dict]
    mismatch_verdicts: list[Verdict]
    elapsed: float

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def table(self) -> str:
        lines = [f"{'check':34} {'total':>6} {'match':>6} {'mismatch':>9} {'skipped':>8}"]
        for check_id, row in self.by_check.items():
            lines.append(
                f"{check_id:34} {row['total']:>6} {row['matches']:>6} "
                f"{row['mismatches']:>9} {row['skipped']:>8}"
            )
        lines.append(
            f"{'TOTAL':34} {self.total:>6} {self.matches:>6} "
            f"{self.mismatches:>9} {self.skipped:>8}   [{self.elapsed:.1f}s]"
        )
        return "\n".join(lines)


def summarize(verdicts: list[Verdict]) -> Summary:
    by_check: dict[str, dict] = {}
    mismatches = []
    for verdict in verdicts:
        row = by_check.setdefault(
            verdict.check, {"total": 0, "matches": 0, "mismatches": 0, "skipped": 0}
        )
        row["total"] += 1
        if verdict.status == "match":
            row["matches"] += 1
        elif verdict.status == "mismatch":
            row["mismatches"] += 1
            mismatches.append(verdict)
        else:
            row["skipped"] += 1
    return Summary(
        total=len(verdicts),
        matches=sum(r["matches"] for r in by_check.values()),
        mismatches=len(mismatches),
        skipped=sum(r["skipped"] for r in by_check.values()),
        by_check=by_check,
        mismatch_verdicts=mismatches,
        elapsed=sum(v.runtime for v in verdicts),
    )


def write_jsonl(verdicts: list[Verdict], path: str | Path) -> None:
    Path(path).write_text("".join(v.to_json() + "\n" for v in verdicts))


def write_csv(summary: Summary, path: str | Path) -> None:
    lines = ["check,total,matches,mismatches,skipped"]
    for check_id, row in summary.by_check.items():
        lines.append(
            f"{check_id},{row['total']},{row['matches']},{row['mismatches']},{row['skipped']}"
        )
    Path(path).write_text("\n".join(lines) + "\n")
