"""Golden-example checks and the fixed-seed random property suite."""

import json
import random
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from .documents import matrix_from_json
from .exact import Matrix, Poly, min_poly, parse_rational, rank
from .inverses import (
    UInverseSpec,
    complete_inverse,
    core_nilpotent,
    default_n,
    drazin_euclid,
    drazin_formula,
    index,
    is_polynomial_in,
    u_inverse_check,
)
from .sequences import EligibilityError, Psi, complete_seq, drazin_seq, pcf, seq_u_inverse_check

DEFAULT_SEED = 20240917
DEFAULT_COUNT = 500
HORIZON = 12


def random_matrix(rng, max_dim=5, bound=3):
    n = rng.randint(1, max_dim)
    return Matrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])


def random_matrices(seed=DEFAULT_SEED, count=DEFAULT_COUNT):
    rng = random.Random(seed)
    return [random_matrix(rng) for _ in range(count)]


def load_golden(path=None):
    if path is None:
        text = resources.files("drazinkit").joinpath("data/golden_example.json").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return json.loads(text)


def golden_checks(data):
    """Return a list of (name, passed) for the stored worked example."""
    a = matrix_from_json(data["matrix"])
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception:  # a corrupted file must report, not crash
            ok = False
        checks.append((name, ok))

    check("index", lambda: index(a) == data["index"])
    check("rank", lambda: rank(a) == data["rank"])
    check("min_poly", lambda: min_poly(a) == Poly(parse_rational(c) for c in data["min_poly"]))
    for k, m in sorted(data["powers"].items()):
        check(f"power_{k}", lambda k=k, m=m: a ** int(k) == matrix_from_json(m))
    ad = drazin_formula(a)
    ac = complete_inverse(a)
    check("drazin_formula", lambda: ad == matrix_from_json(data["drazin_inverse"]))
    check("drazin_euclid", lambda: drazin_euclid(a) == ad)
    check("complete_inverse", lambda: ac == matrix_from_json(data["complete_inverse"]))
    p = index(a)
    check("complete_axioms", lambda: u_inverse_check(a, ac, UInverseSpec.complete(default_n(p))).verdict)
    check("drazin_axioms", lambda: u_inverse_check(a, ad, UInverseSpec.drazin(default_n(p))).verdict)
    seq = pcf(a)
    check("pcf_impulse", lambda: [(i, v) for i, v in seq.impulse]
          == [(t["i"], matrix_from_json(t["V"])) for t in data["impulse"]])
    check("pcf_geometric", lambda: [(lam, w) for lam, w in seq.geometric]
          == [(parse_rational(t["lambda"]), matrix_from_json(t["W"])) for t in data["geometric"]])
    check("pcf_round_trip", lambda: all(seq(k) == a ** k for k in range(HORIZON + 1)))
    check("complete_seq_at_1", lambda: complete_seq(a)(1) == matrix_from_json(data["complete_inverse"]))
    check("complete_seq_powers", lambda: all(
        complete_seq(a)(k) == ac ** k for k in range(HORIZON + 1)))
    return checks


def property_checks(a):
    """Every algebraic identity the suite asserts, for one matrix.

    Returns (checks, eligible) where checks is a list of (name, passed).
    """
    n = a.dim
    p = index(a)
    nn = default_n(p)
    x = drazin_formula(a)
    v = a @ a @ x
    z = complete_inverse(a)
    eye = Matrix.identity(n)
    drazin_spec = UInverseSpec.drazin(nn)
    complete_spec = UInverseSpec.complete(nn)
    checks = [
        ("route_agreement", drazin_euclid(a) == x),
        ("drazin_axioms", u_inverse_check(a, x, drazin_spec).verdict),
        ("complete_axioms", u_inverse_check(a, z, complete_spec).verdict),
        ("z_construction", z == a + x - v),
        ("v_drazin_of_x", u_inverse_check(x, v, drazin_spec).verdict),
        ("v_powers", all(v ** m == a ** m for m in range(p, p + 5))),
        ("z_power_identity", all(z ** k == a ** k + x ** k - v ** k for k in range(1, 7))),
        ("z_power_inverse", all(
            u_inverse_check(a ** k, z ** k, complete_spec).verdict for k in range(1, 7))),
        ("z_powers_match_x", all(z ** m == x ** m for m in range(p, p + 5))),
        ("v_drazin_of_z", u_inverse_check(z, v, drazin_spec).verdict),
        ("v_complete_of_x", u_inverse_check(x, v, complete_spec).verdict),
        ("a_complete_of_z", u_inverse_check(z, a, complete_spec).verdict),
        ("invertibility", _invertibility(a, x, v, z)),
        ("z_polynomial_in_a", is_polynomial_in(z, a) is not None),
        ("x_polynomial_in_z", is_polynomial_in(x, z) is not None),
        ("drazin_of_drazin", drazin_formula(x) == v),
        ("core_nilpotent", _core_nilpotent_ok(a, p)),
        ("min_poly_annihilates", min_poly(a)(a).is_zero()),
        ("index_is_zero_multiplicity", min_poly(a).low_order() == p),
    ]
    try:
        seq = pcf(a)
    except EligibilityError:
        return checks, False
    cseq = complete_seq(a)
    dseq = drazin_seq(a)
    checks += [
        ("pcf_round_trip", all(seq(k) == a ** k for k in range(HORIZON + 1))),
        ("reciprocal_ratio_powers", all(cseq(k) == z ** k for k in range(HORIZON + 1))),
        ("drazin_seq", dseq(0) == eye and all(dseq(k) == x ** k for k in range(1, HORIZON + 1))),
        ("seq_complete_axioms", seq_u_inverse_check(seq, cseq, complete_spec, HORIZON).verdict),
        ("seq_drazin_axioms", seq_u_inverse_check(seq, dseq, drazin_spec, HORIZON).verdict),
        ("double_theta", seq.theta(Psi.ZERO).theta(Psi.ZERO) == seq.geometric_part()),
        ("complete_from_sequences", cseq == seq + dseq - pcf(v)),
    ]
    return checks, True


def _invertibility(a, x, v, z):
    a_inv = rank(a) == a.dim
    z_inv = rank(z) == z.dim
    if a_inv != z_inv:
        return False
    if not a_inv:
        return True
    inv = a.inverse()
    return z == inv and x == inv and v == a


def _core_nilpotent_ok(a, p):
    s = core_nilpotent(a)
    c, nil = s.core, s.nilpotent
    # p is the exact nilpotency order of N (N = 0 when p = 0)
    order_ok = nil.is_zero() if p == 0 else (nil ** p).is_zero() and not (nil ** (p - 1)).is_zero()
    return (c + nil == a and (c @ nil).is_zero() and (nil @ c).is_zero()
            and order_ok and rank(c) == rank(a ** p) and s.index == p)


def _run_one(a):
    checks, eligible = property_checks(a)
    return [name for name, ok in checks if not ok], eligible


def run_selftest(count=DEFAULT_COUNT, seed=DEFAULT_SEED, golden=None, workers=1):
    """Run both suites and return a summary dict; ``passed`` is the overall verdict."""
    try:
        golden_data = load_golden(golden)
        golden_results = golden_checks(golden_data)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        golden_results = [(f"load: {exc}", False)]
    mats = random_matrices(seed, count)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_one, mats, chunksize=16))
    else:
        outcomes = [_run_one(a) for a in mats]
    failures = [
        {"case": i, "matrix": a.to_strings(), "failed": failed}
        for i, (a, (failed, _)) in enumerate(zip(mats, outcomes)) if failed
    ]
    eligible = sum(1 for _, e in outcomes if e)
    golden_ok = all(ok for _, ok in golden_results)
    return {
        "golden": {name: ok for name, ok in golden_results},
        "properties": {
            "seed": seed,
            "matrices": count,
            "eligible_for_sequence_route": eligible,
            "failures": failures,
        },
        "passed": golden_ok and not failures,
    }
