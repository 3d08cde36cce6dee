"""Named verification suites over a space, shared by the CLI and tests.

Each suite returns a dict with a ``pass`` flag and a list of checks,
every check carrying a witness on failure.  Whenever an exhaustive sweep
would outgrow its bound the suite falls back to a seeded sample and
records the seed, so failures stay reproducible.
"""

import random
import time

from . import span as span_mod
from . import structure
from .report import jsonify
from .space import check_axioms, quasi_kernel_bruteforce

KEY_LEMMA_EXHAUSTIVE_LIMIT = 500
KEY_LEMMA_SAMPLE = 10_000
SPAN_SWEEP_LIMIT = 2000
SPAN_SAMPLE = 200
MAXIMALITY_SWEEP_LIMIT = 1 << 14

SUITE_NAMES = ("axioms", "vstheorem", "keylemma", "span-oracle", "decomposition")


def _check(name, passed, witness=None, **extra):
    entry = {"name": name, "pass": bool(passed)}
    if witness is not None:
        entry["witness"] = jsonify(witness)
    entry.update(extra)
    return entry


def axioms_suite(space, seed=0, max_size=None):
    report = check_axioms(space)
    checks = [
        _check(name, ok, cx)
        for name, (ok, cx) in report.entries.items()
    ]
    return {"name": "axioms", "pass": report.all_pass, "checks": checks}


def vstheorem_suite(space, seed=0, max_size=None):
    report = structure.regularity_equivalences(space)
    checks = [
        _check(f"condition_{label}", True, None, value=value)
        for label, value in sorted(report.conditions.items())
    ]
    checks.append(
        _check(
            "all_conditions_agree",
            report.consistent,
            None if report.consistent else report.to_json(),
        )
    )
    return {
        "name": "vstheorem",
        "pass": report.consistent,
        "verdict": report.verdict,
        "checks": checks,
    }


def _slot_pair_hit(coords_v, coords_w, basis_class):
    for i0, t in enumerate(coords_v):
        if t == 0:
            continue
        for j0, tp in enumerate(coords_w):
            if tp and i0 != j0 and basis_class[i0] == basis_class[j0]:
                return True
    return False


def keylemma_suite(space, seed=0, max_size=None):
    """Whenever two quasi-kernel vectors share an induced addition at two
    different basis slots, all their slot additions and their own
    additions must coincide; exhaustive below the pair bound, seeded
    sample above it."""
    qk = space.quasi_kernel()
    qstar = qk.sorted_nonzero()
    basis = span_mod.extract_basis(space)
    basis_class = [space.class_of(b) for b in basis]
    coords = {v: span_mod.coordinates_in_independent_set(space, basis, v) for v in qstar}

    interned = {}
    table_id = {}

    def table_index(v):
        idx = table_id.get(v)
        if idx is None:
            key = tuple(map(tuple, structure._addition_table(space, v)))
            idx = table_id[v] = interned.setdefault(key, len(interned))
        return idx

    # two distinct slots in one class require a class of dimension >= 2
    can_hit = any(len(c.support) >= 2 for c in space.classes)
    limit = KEY_LEMMA_EXHAUSTIVE_LIMIT if max_size is None else min(
        KEY_LEMMA_EXHAUSTIVE_LIMIT, max_size
    )
    exhaustive = len(qk.members) <= limit
    if not can_hit:
        pairs = []
        mode = {"mode": "exhaustive", "pairs": 0}
    elif exhaustive:
        pairs = [
            (v, qstar[j])
            for i, v in enumerate(qstar)
            for j in range(i, len(qstar))
            if _slot_pair_hit(coords[v], coords[qstar[j]], basis_class)
        ]
        mode = {"mode": "exhaustive", "pairs": len(pairs)}
    else:
        rng = random.Random(seed)
        pairs = []
        attempts = 0
        while len(pairs) < KEY_LEMMA_SAMPLE and attempts < KEY_LEMMA_SAMPLE * 20:
            attempts += 1
            v = rng.choice(qstar)
            w = rng.choice(qstar)
            if _slot_pair_hit(coords[v], coords[w], basis_class):
                pairs.append((v, w))
        mode = {"mode": "sampled", "pairs": len(pairs), "seed": seed}

    checks = []
    ok_all = True
    for v, w in pairs:
        # the premise was detected through matching slot classes; the
        # conclusion compares the interned definitional tables
        conclusion = table_index(v) == table_index(w)
        if conclusion:
            ref = table_id[v]
            for coords_vec in (coords[v], coords[w]):
                for slot, theta in enumerate(coords_vec):
                    if theta and table_index(
                        space.scalar_mul(theta, basis[slot])
                    ) != ref:
                        conclusion = False
                        break
                if not conclusion:
                    break
        if not conclusion:
            ok_all = False
            checks.append(_check("shared_addition", False, (v, w)))
            break
    checks.append(_check("all_hypothesis_pairs_share_addition", ok_all, None, **mode))
    return {"name": "keylemma", "pass": ok_all, "checks": checks}


def span_oracle_suite(space, seed=0, max_size=None):
    """span = linear combinations = closure oracle for swept vectors,
    plus the two dimension routes agreeing."""
    limit = SPAN_SWEEP_LIMIT if max_size is None else min(SPAN_SWEEP_LIMIT, max_size)
    vectors = space.vectors()
    if space.size <= limit:
        sweep = vectors
        mode = {"mode": "exhaustive", "vectors": len(sweep)}
    else:
        # every sampled vector costs up to three closures of |span| <= |V|
        # members; size the sample so the suite stays interactive
        per_vector = 3 * space.size * space.field.order
        sample = max(10, min(SPAN_SAMPLE, 30_000_000 // per_vector))
        rng = random.Random(seed)
        sweep = rng.sample(vectors, min(sample, len(vectors)))
        mode = {"mode": "sampled", "vectors": len(sweep), "seed": seed}

    ok_all = True
    witness = None
    for v in sweep:
        members = span_mod.span_of(space, [v]).members
        if members != span_mod.linear_combinations(space, v):
            ok_all, witness = False, ("span_vs_linear_combinations", v)
            break
        if members != span_mod.subspace_closure_oracle(space, [v]):
            ok_all, witness = False, ("span_vs_closure", v)
            break
        span_mod.dim_of_vector(space, v)  # raises on route disagreement
    checks = [_check("span_triple_agreement", ok_all, witness, **mode)]

    pair_ok = True
    pair_witness = None
    rng = random.Random(seed + 1)
    candidates = [v for v in vectors if v != space.zero]
    pair_rounds = max(3, min(20, 10_000_000 // max(2 * space.size * space.field.order, 1)))
    for _ in range(min(pair_rounds, len(candidates))):
        gens = rng.sample(candidates, min(2, len(candidates)))
        if span_mod.span_of(space, gens).members != span_mod.subspace_closure_oracle(
            space, gens
        ):
            pair_ok, pair_witness = False, tuple(gens)
            break
    checks.append(
        _check("generator_set_span_vs_closure", pair_ok, pair_witness, seed=seed + 1)
    )
    return {"name": "span-oracle", "pass": ok_all and pair_ok, "checks": checks}


def decomposition_suite(space, seed=0, max_size=None):
    checks = []
    deco = structure.decompose(space)  # verifies splitting internally
    checks.append(_check("direct_sum_split", True, None,
                         components=len(deco.components)))

    reversed_deco = structure.decompose(
        space, enumeration=list(reversed(range(space.n)))
    )
    same = {c.members for c in deco.components} == {
        c.members for c in reversed_deco.components
    }
    checks.append(_check("unique_under_reversed_enumeration", same))

    qk = space.quasi_kernel()
    nonzero_union = set()
    disjoint = True
    for comp in deco.components:
        nz = (comp.members & qk.members) - {space.zero}
        if nonzero_union & nz:
            disjoint = False
        nonzero_union |= nz
    partition_ok = disjoint and nonzero_union == qk.nonzero
    checks.append(_check("quasi_kernel_partition", partition_ok))

    limit = MAXIMALITY_SWEEP_LIMIT if max_size is None else min(
        MAXIMALITY_SWEEP_LIMIT, max_size
    )
    max_ok = True
    max_witness = None
    rng = random.Random(seed)
    for comp in deco.components:
        outsiders = [v for v in space.vectors() if v not in comp.members]
        if space.size > limit and len(outsiders) > SPAN_SAMPLE:
            outsiders = rng.sample(outsiders, SPAN_SAMPLE)
        for m in outsiders:
            if structure.maximality_witness(space, comp, m) is None:
                max_ok, max_witness = False, (comp.class_id, m)
                break
        if not max_ok:
            break
    checks.append(_check("component_maximality", max_ok, max_witness))

    ok = all(c["pass"] for c in checks)
    return {"name": "decomposition", "pass": ok, "checks": checks}


def quasi_kernel_oracle_suite(space, seed=0, max_size=None):
    """Brute-force Q(V) against the closed form; part of `verify all`."""
    brute = quasi_kernel_bruteforce(space)
    closed = space.quasi_kernel()
    same = brute.members == closed.members
    witness = None
    if not same:
        witness = sorted(brute.members ^ closed.members)[:5]
    return {
        "name": "quasi-kernel-oracle",
        "pass": same,
        "checks": [_check("bruteforce_equals_closed_form", same, witness)],
    }


_SUITES = {
    "axioms": axioms_suite,
    "vstheorem": vstheorem_suite,
    "keylemma": keylemma_suite,
    "span-oracle": span_oracle_suite,
    "decomposition": decomposition_suite,
}


def run_suites(space, names, seed=0, max_size=None):
    """Run the selected suites; "all" adds the quasi-kernel oracle."""
    if "all" in names:
        selected = list(SUITE_NAMES) + ["quasi-kernel-oracle"]
    else:
        unknown = [n for n in names if n not in _SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
        selected = list(names)
    suites = []
    for name in selected:
        fn = _SUITES.get(name, quasi_kernel_oracle_suite)
        start = time.perf_counter()
        result = fn(space, seed=seed, max_size=max_size)
        result["elapsed_s"] = round(time.perf_counter() - start, 4)
        suites.append(result)
    return {
        "config": space.to_config(),
        "seed": seed,
        "max_size": max_size,
        "suites": suites,
        "pass": all(s["pass"] for s in suites),
    }
