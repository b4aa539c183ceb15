"""Acceptance criteria, one check per criterion.

Each ``criterion_*`` function returns ``(passed, detail)``. The pytest
wrappers assert on it and record a PASS/FAIL line that ``conftest.py``
prints at the end of the run; ``python3 tests/test_acceptance.py`` prints
the same lines directly.
"""

from __future__ import annotations

import json
import random
import sys
import tempfile
from pathlib import Path

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

from plmorse import fixtures, io  # noqa: E402
from plmorse.cli import main as cli_main  # noqa: E402
from plmorse.correspond import correspondence, verify_correspondence  # noqa: E402
from plmorse.gvf import (  # noqa: E402
    check_relative_perfectness,
    check_weak_morse,
    is_acyclic,
    validate_matching,
)
from plmorse.homology import Field, betti, reduced_betti, relative_betti  # noqa: E402
from plmorse.plcrit import (  # noqa: E402
    Kind,
    banchoff_index,
    classify_all,
    h_classify,
    i_classify,
    l_classify,
    middle_triangle_count,
    w_classify,
    wedge_count,
)
from plmorse.rpbuild import build_rp_gradient, lower_star_fields  # noqa: E402
from plmorse.simplicial import (  # noqa: E402
    closure,
    lower_link,
    lower_star,
    predecessor_level,
    sublevel_complex,
)

from corpus import all_fixtures, id_field, random_field, refine, surfaces  # noqa: E402
from oracles import betti_dense  # noqa: E402

FIXTURES = HERE.parent / "fixtures"
RESULTS: dict[int, tuple[bool, str, str]] = {}

TITLES = {
    1: "saddle of the hexagonal fan",
    2: "four classifier definitions agree",
    3: "projective plane end to end",
    4: "non-RP field is rejected",
    5: "RP construction property suite",
    6: "homology matches dense oracle",
    7: "lower star / lower link identity",
    8: "index sum equals Euler characteristic",
    9: "weak Morse inequalities",
}


def _counts(K, V, sims, dim):
    out = [0] * (dim + 1)
    for s in sims:
        if not V.is_paired(s):
            out[len(s) - 1] += 1
    return out


# -- 1 -----------------------------------------------------------------------

def criterion_1():
    problems = []
    for build in (fixtures.fan, fixtures.fan_sphere):
        K, f = build()
        v = 5
        got = {
            "count": middle_triangle_count(K, f, v),
            "iota": banchoff_index(K, f, v),
            "W": wedge_count(K, f, v),
            "rel": relative_betti(closure(lower_star(K, f, v)), lower_link(K, f, v)).nonzero(),
            "red": reduced_betti(lower_link(K, f, v)).nonzero(),
        }
        want = {"count": 4, "iota": -1, "W": 2, "rel": {1: 1}, "red": {0: 1}}
        if got != want:
            problems.append(f"{build.__name__}: {got}")
        for fn in (i_classify, w_classify, h_classify, l_classify):
            c = fn(K, f, v)
            if c.kind is not Kind.SADDLE or c.index != 1 or c.multiplicities != {1: 1}:
                problems.append(f"{build.__name__}/{fn.__name__}: {c.kind.value} {c.multiplicities}")
    return not problems, "; ".join(problems) or "count 4, iota -1, W 2, rel beta1 1, reduced beta0 1, 4/4 saddle"


# -- 2 -----------------------------------------------------------------------

def criterion_2(runs: int = 200, runs3: int = 40):
    rng = random.Random(2)
    checked, bad = 0, []
    two = {"tetrahedron": fixtures.tetrahedron_boundary(), "torus7": fixtures.torus(7), "rp2": fixtures.rp2()[0]}
    for name, K in two.items():
        for _ in range(runs):
            rep = classify_all(K, random_field(K, rng))
            checked += len(rep.per_vertex)
            if rep.disagreements:
                bad.append((name, rep.disagreements))
    three = {"sphere3": (fixtures.simplex_boundary(4), runs), "torus3": (fixtures.torus3(3), runs3)}
    for name, (K, n) in three.items():
        for _ in range(n):
            rep = classify_all(K, random_field(K, rng))
            checked += len(rep.per_vertex)
            if rep.disagreements:
                bad.append((name, rep.disagreements))
    return not bad, f"{checked} vertex classifications, {len(bad)} functions with disagreements"


# -- 3 -----------------------------------------------------------------------

def criterion_3():
    rp2 = str(FIXTURES / "rp2_6.json")
    doc = io.load_complex(rp2)
    K, f = doc.complex(), doc.field()
    problems = []
    with tempfile.TemporaryDirectory() as tmp:
        field_path = str(Path(tmp) / "rp2.field.json")
        rep_path = str(Path(tmp) / "report.json")
        if cli_main(["build", rp2, "-o", field_path, "-q"]) != 0:
            problems.append("build failed")
        V = io.parse_field(Path(field_path).read_bytes())
        crit = V.critical(K)
        levels = [(len(s) - 1, f.fmax(s)[0]) for s in crit]
        if levels != [(0, 1.0), (1, 4.0), (2, 6.0)]:
            problems.append(f"critical simplices {crit} at {levels}")
        if cli_main(["verify", rp2, field_path, "--field", "gf2", "-o", rep_path, "-q"]) != 0:
            problems.append("verify did not certify")
        cert = json.loads(Path(rep_path).read_text())["certificate"]
        if not cert["relatively_perfect"] or cert["mismatches"]:
            problems.append(f"certificate {cert}")
        if cli_main(["correspond", rp2, field_path, "-o", rep_path, "-q"]) != 0:
            problems.append("correspond failed")
        corr = json.loads(Path(rep_path).read_text())["correspondence"]
    if not corr["bijective"] or len(corr["entries"]) != 3:
        problems.append(f"correspondence {corr}")
    for e in corr["entries"]:
        if len(e["matched"]) != 1 or e["vertex"] not in e["matched"][0]:
            problems.append(f"entry {e}")
    kinds = [h_classify(K, f, e["vertex"]).kind.value for e in corr["entries"]]
    if kinds != ["minimum", "saddle", "maximum"]:
        problems.append(f"kinds {kinds}")
    return not problems, "; ".join(problems) or f"critical {[list(s) for s in crit]} at levels 1, 4, 6; RP; bijective"


# -- 4 -----------------------------------------------------------------------

def criterion_4():
    sphere = str(FIXTURES / "fig2_sphere.json")
    doc = io.load_complex(sphere)
    K, f = doc.complex(), doc.field()
    v = doc.values.index(5.0)
    prev = predecessor_level(f, 5.0)
    beta = relative_betti(sublevel_complex(K, f, 5.0), sublevel_complex(K, f, prev))[0]
    with tempfile.TemporaryDirectory() as tmp:
        rep_path = Path(tmp) / "report.json"
        code = cli_main(["verify", sphere, str(FIXTURES / "fig3c_field.json"), "-o", str(rep_path), "-q"])
        mism = json.loads(rep_path.read_text())["certificate"]["mismatches"]
    hit = [x for x in mism if x["level"] == 5.0 and x["index"] == 0]
    ok = code == 1 and prev == 3.0 and beta == 0 and hit == [{"level": 5.0, "vertex": v, "index": 0, "m": 1, "beta": 0}]
    return ok, f"exit {code}, m0 at 5 = {hit[0]['m'] if hit else '?'}, beta0(K5, K{prev:g}) = {beta}"


# -- 5 -----------------------------------------------------------------------

def criterion_5(runs: int = 100):
    rng = random.Random(5)
    spaces = {
        "S2": fixtures.icosahedron(),
        "T2": fixtures.torus(7),
        "RP2": fixtures.rp2()[0],
        "S3": fixtures.simplex_boundary(4),
    }
    bad = []
    total = 0
    for name, K in spaces.items():
        d = K.dim
        for _ in range(runs):
            f = random_field(K, rng)
            V = build_rp_gradient(K, f)
            total += 1
            if validate_matching(K, V) or not is_acyclic(K, V):
                bad.append(f"{name}: invalid or cyclic")
                continue
            cert = check_relative_perfectness(K, f, V)
            if cert.mismatches or cert.route_disagreements:
                bad.append(f"{name}: {len(cert.mismatches)} mismatches")
            for step in lower_star_fields(K, f):
                if step.link_field is None:
                    continue
                w = _counts(step.link, step.link_field, step.link.simplices(), d - 1)
                wp = _counts(K, step.star_field, lower_star(K, f, step.vertex), d)
                rule = wp[0] == 0 and wp[1] == w[0] - 1 and all(wp[i] == w[i - 1] for i in range(2, d + 1))
                if not rule:
                    bad.append(f"{name}: vertex {step.vertex} counts {w} -> {wp}")
    return not bad, "; ".join(bad[:3]) or f"{total} fields valid, acyclic, RP; per-vertex counts hold"


# -- 6 -----------------------------------------------------------------------

def _small_corpus():
    rng = random.Random(6)
    out = {name: (K, f) for name, (K, f) in all_fixtures().items() if len(K) <= 200}
    out["triangle"] = (fixtures.triangle(), id_field(fixtures.triangle()))
    out["annulus"] = (fixtures.annulus(), id_field(fixtures.annulus()))
    out["fan"] = fixtures.fan()
    out["ramp"] = fixtures.ramp(4)
    for i in range(6):
        K = refine(fixtures.octahedron(), rng, 6)
        out[f"refined{i}"] = (K, random_field(K, rng))
    return {k: v for k, v in out.items() if len(v[0]) <= 200}


def criterion_6():
    bad, pairs = [], 0
    K, _ = fixtures.rp2()
    fields_differ = betti(K, Field.GF2).ranks == (1, 1, 1) and betti(K, Field.RATIONAL).ranks == (1, 0, 0)
    for name, (K, f) in _small_corpus().items():
        subs = [closure([])] + [sublevel_complex(K, f, f[v]) for v in f.order()]
        for field, tag in ((Field.GF2, "gf2"), (Field.RATIONAL, "q")):
            if betti(K, field).ranks != betti_dense(K.as_set(), tag):
                bad.append(f"{name}/{tag}")
            for L in subs:
                want = betti_dense(K.as_set() - L.as_set(), tag)
                got = relative_betti(K, L, field)
                pairs += 1
                if tuple(got[i] for i in range(len(want))) != want:
                    bad.append(f"{name}/{tag} rel {len(L)}")
            for v in K.vertices:
                A, B = closure(lower_star(K, f, v)), lower_link(K, f, v)
                want = betti_dense(A.as_set() - B.as_set(), tag)
                pairs += 1
                if tuple(relative_betti(A, B, field)[i] for i in range(len(want))) != want:
                    bad.append(f"{name}/{tag} star {v}")
    ok = not bad and fields_differ
    return ok, "; ".join(bad[:3]) or f"{pairs} relative pairs agree; RP2 gives (1,1,1) over GF2 and (1,0,0) over Q"


# -- 7 -----------------------------------------------------------------------

def criterion_7():
    bad, n = [], 0
    corpus = dict(all_fixtures())
    corpus["fan"] = fixtures.fan()
    corpus["ramp"] = fixtures.ramp(5)
    for name, (K, f) in corpus.items():
        for field in Field:
            for v in K.vertices:
                rel = relative_betti(closure(lower_star(K, f, v)), lower_link(K, f, v), field)
                red = reduced_betti(lower_link(K, f, v), field)
                n += 1
                if any(rel[i] != red[i - 1] for i in range(K.dim + 1)):
                    bad.append(f"{name} v{v} {field.value}")
    return not bad, "; ".join(bad[:3]) or f"{n} vertex checks"


# -- 8 -----------------------------------------------------------------------

def criterion_8(runs: int = 50):
    rng = random.Random(8)
    bad, n = [], 0
    for name, (K, chi) in surfaces().items():
        if K.euler_characteristic() != chi:
            bad.append(f"{name}: chi {K.euler_characteristic()}")
        for _ in range(runs):
            f = random_field(K, rng)
            total = sum(banchoff_index(K, f, v) for v in K.vertices)
            n += 1
            if total != chi:
                bad.append(f"{name}: sum {total} != {chi}")
    return not bad, "; ".join(bad[:3]) or f"{n} functions; sums 2 (spheres), 0 (torus), 1 (RP2)"


# -- 9 -----------------------------------------------------------------------

def criterion_9(runs: int = 10):
    rng = random.Random(9)
    bad, n = [], 0
    for name, (K, f0) in all_fixtures().items():
        for f in [f0] + [random_field(K, rng) for _ in range(runs)]:
            V = build_rp_gradient(K, f)
            cert = check_relative_perfectness(K, f, V)
            for field in Field:
                rep = check_weak_morse(K, V, field)
                n += 1
                if not rep.holds:
                    bad.append(f"{name}: slack {rep.slack}")
            if cert.is_rp:
                by_levels = [sum(r.beta[i] for r in cert.levels) for i in range(K.dim + 1)]
                if list(check_weak_morse(K, V).m) != by_levels:
                    bad.append(f"{name}: m != sum over levels")
            else:
                bad.append(f"{name}: not RP")
    return not bad, "; ".join(bad[:3]) or f"{n} field/coefficient checks; m = sum of level Betti numbers"


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9,
}


def _check(n: int) -> None:
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, TITLES[n], detail)
    assert ok, f"criterion {n} ({TITLES[n]}): {detail}"


def line(n: int) -> str:
    ok, title, detail = RESULTS[n]
    return f"criterion {n} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


def test_criterion_1_fan_saddle():
    _check(1)


def test_criterion_2_classifier_equivalence():
    _check(2)


def test_criterion_3_projective_plane_end_to_end():
    _check(3)


def test_criterion_4_non_rp_field():
    _check(4)


def test_criterion_5_rp_construction():
    _check(5)


def test_criterion_6_homology_oracle():
    _check(6)


def test_criterion_7_lower_star_identity():
    _check(7)


def test_criterion_8_index_sum():
    _check(8)


def test_criterion_9_weak_morse():
    _check(9)


if __name__ == "__main__":
    failed = 0
    for n in CRITERIA:
        try:
            _check(n)
        except AssertionError:
            failed += 1
        print(line(n))
    sys.exit(1 if failed else 0)
