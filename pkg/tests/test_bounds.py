import math

import numpy as np
import pytest

import numrad.bounds as nb
from numrad.bounds import (
    BoundReport,
    ChainReport,
    FunctionPair,
    HypothesisFailed,
    MatrixContext,
    NotPositiveError,
    catalog_list,
    default_tolerance,
    eval_bound_kit,
    eval_bound_lem1,
    eval_bound_t3,
    eval_bound_t3_printed,
    eval_chain_b0,
    eval_chain_cor,
    eval_chain_sq,
    eval_chain_t1,
    eval_chain_t2,
    eval_functional_chain,
    eval_lemma_norm_sum,
    eval_lemma_pos_diff,
    evaluate,
    identity_pair,
    parse_bound_id,
    power_sqrt_pair,
)
from numrad.linalg import NotHermitianError, operator_norm
from numrad.radius import RadiusConfig

from conftest import random_complex

J = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)

GOLDEN_MID = (3.0 - math.sqrt(5.0)) / 2.0  # corollary middle on J at r = 2

ALL_IDS = [e.bound_id for e in catalog_list()]


def _ctx(a):
    return MatrixContext(a, RadiusConfig())


class TestJordanClosedForms:
    """The 2x2 nilpotent block pins nearly every catalog entry exactly."""

    def test_b0(self):
        rep = eval_chain_b0(J)
        assert rep.terms == pytest.approx((0.5, 0.5, 1.0), abs=1e-9)
        assert not rep.violated

    def test_kit(self):
        rep = eval_bound_kit(J)
        assert rep.lhs == pytest.approx(0.5, abs=1e-9)
        assert rep.rhs == pytest.approx(0.5, abs=1e-9)
        assert not rep.violated

    def test_sq(self):
        rep = eval_chain_sq(J)
        assert rep.terms == pytest.approx((0.25, 0.25, 0.5), abs=1e-9)
        assert not rep.violated

    def test_lem1(self):
        for sign in (1, -1):
            rep = eval_bound_lem1(J, sign)
            assert rep.lhs == pytest.approx(0.5, abs=1e-9)
            assert rep.rhs == pytest.approx(0.5, abs=1e-9)
            assert not rep.violated
        with pytest.raises(ValueError):
            eval_bound_lem1(J, 0)

    def test_t1(self):
        rep = eval_chain_t1(J)
        assert rep.terms == pytest.approx((0.25, 0.25, 0.25), abs=1e-9)
        assert not rep.violated

    def test_t2(self):
        rep = eval_chain_t2(J)
        assert rep.terms == pytest.approx((0.25, 0.25, 0.25), abs=1e-9)
        assert not rep.violated

    def test_t3_equality(self):
        rep = eval_bound_t3(J)
        assert rep.lhs == pytest.approx(0.25, abs=1e-9)
        assert rep.rhs == pytest.approx(0.25, abs=1e-9)
        assert not rep.violated

    def test_t3_printed_violated(self):
        rep = eval_bound_t3_printed(J)
        assert rep.lhs == pytest.approx(0.25, abs=1e-9)
        assert rep.rhs == pytest.approx(0.0, abs=1e-9)
        assert rep.violated
        assert rep.slack == pytest.approx(-0.25, abs=1e-9)

    def test_functional_chain(self):
        rep = eval_functional_chain(J, power_sqrt_pair(2))
        assert rep.terms[0] == pytest.approx(0.25, abs=1e-9)
        assert rep.terms[1] == pytest.approx(GOLDEN_MID, abs=1e-9)
        assert rep.terms[2] == pytest.approx(0.5, abs=1e-9)
        assert not rep.violated

    def test_corollary_chain(self):
        rep = eval_chain_cor(J, 2)
        assert rep.terms[1] == pytest.approx(GOLDEN_MID, abs=1e-9)
        assert not rep.violated


def test_report_invariant_holds_literally(rng):
    reports = []
    for bid in ALL_IDS:
        if bid in ("LEM-SUM", "LEM-POSDIFF"):
            continue
        reports.append(evaluate(bid, J))
    a = random_complex(rng, 4)
    ctx = _ctx(a)
    for bid in ("B0", "KIT", "T2", "T3", "T3-PRINTED", "COR"):
        reports.append(evaluate(bid, ctx))
    for rep in reports:
        links = rep.links if isinstance(rep, ChainReport) else (rep,)
        for link in links:
            assert link.violated == (link.lhs - link.rhs > link.tolerance_used)
            assert link.slack == link.rhs - link.lhs


def test_chain_structure(rng):
    a = random_complex(rng, 3)
    rep = eval_chain_t2(a)
    assert isinstance(rep, ChainReport)
    assert len(rep.terms) == 3
    assert len(rep.links) == 2
    assert [l.bound_id for l in rep.links] == ["T2[0]", "T2[1]"]
    assert rep.links[0].rhs == rep.terms[1]
    assert rep.links[1].lhs == rep.terms[1]


def test_t3_never_looser_than_printed(rng):
    # subtracting the full minimum instead of half of it can only shrink rhs
    for n in (2, 3, 5):
        a = random_complex(rng, n)
        ctx = _ctx(a)
        t3 = eval_bound_t3(ctx)
        printed = eval_bound_t3_printed(ctx)
        assert t3.rhs >= printed.rhs - 1e-12 * max(1.0, abs(t3.rhs))


def test_identity_pair_collapses_to_kit(rng):
    for n in (2, 4):
        a = random_complex(rng, n)
        ctx = _ctx(a)
        chain = eval_functional_chain(ctx, identity_pair())
        kit = eval_bound_kit(ctx)
        scale = max(1.0, kit.rhs)
        assert abs(chain.terms[1] - kit.rhs) < 1e-12 * scale
        assert abs(chain.terms[2] - kit.rhs) < 1e-12 * scale
        assert abs(chain.terms[0] - kit.lhs) < 1e-12 * scale


def test_cor_and_func_middles_agree(rng):
    for r in (2, 3, 4):
        for n in (2, 3, 5):
            a = random_complex(rng, n)
            ctx = _ctx(a)
            cor = eval_chain_cor(ctx, r)
            func = eval_functional_chain(ctx, power_sqrt_pair(r))
            assert cor.terms[1] == pytest.approx(func.terms[1], abs=1e-12 * max(1.0, cor.terms[1]))


def test_hermitian_collapse(rng):
    # for Hermitian A: w = ||A||, KIT and T3 are equalities, T1 middle is ||A||^2/2
    g = random_complex(rng, 5)
    h = 0.5 * (g + g.conj().T)
    ctx = _ctx(h)
    nrm = operator_norm(h)
    kit = eval_bound_kit(ctx)
    assert kit.rhs == pytest.approx(nrm, rel=1e-11)
    assert abs(kit.slack) < 1e-9 * nrm
    t3 = eval_bound_t3(ctx)
    assert abs(t3.slack) < 1e-9 * nrm ** 2
    t1 = eval_chain_t1(ctx)
    assert t1.terms[1] == pytest.approx(0.5 * nrm ** 2, rel=1e-11)
    t2 = eval_chain_t2(ctx)
    assert t2.terms[1] == pytest.approx(math.sqrt(2.0) / 2.0 * nrm ** 2, rel=1e-9)


def test_chains_monotone_on_random(rng):
    for n in (2, 3, 6):
        a = random_complex(rng, n)
        ctx = _ctx(a)
        for bid in ("B0", "SQ", "T1", "T2", "FUNC", "COR"):
            rep = evaluate(bid, ctx)
            assert not rep.violated, (bid, rep.terms)


def test_lemma_norm_sum():
    rep = eval_lemma_norm_sum(J, J)
    # ||2J|| = 2 against sqrt(||2 J*J|| + 2 w(J*J)) = sqrt(2 + 2) = 2
    assert rep.lhs == pytest.approx(2.0, abs=1e-12)
    assert rep.rhs == pytest.approx(2.0, abs=1e-9)
    assert not rep.violated
    with pytest.raises(ValueError):
        eval_lemma_norm_sum(J, np.eye(3, dtype=complex))


def test_lemma_norm_sum_random(rng):
    for n in (2, 4, 6):
        a = random_complex(rng, n)
        b = random_complex(rng, n)
        assert not eval_lemma_norm_sum(a, b).violated


def test_lemma_pos_diff():
    p = np.diag([2.0, 1.0]).astype(complex)
    q = np.diag([1.0, 3.0]).astype(complex)
    rep = eval_lemma_pos_diff(p, q)
    assert rep.lhs == pytest.approx(2.0, abs=1e-12)
    assert rep.rhs == pytest.approx(2.0, abs=1e-12)
    assert not rep.violated


def test_lemma_pos_diff_rejects_indefinite():
    with pytest.raises(NotPositiveError):
        eval_lemma_pos_diff(np.diag([-1.0, 1.0]).astype(complex), np.eye(2, dtype=complex))
    with pytest.raises(NotHermitianError):
        eval_lemma_pos_diff(J, np.eye(2, dtype=complex))


def test_lemma_pos_diff_random_psd(rng):
    for n in (2, 3, 7):
        gp = random_complex(rng, n)
        gq = random_complex(rng, n)
        p = gp.conj().T @ gp
        q = gq.conj().T @ gq
        assert not eval_lemma_pos_diff(0.5 * (p + p.conj().T), 0.5 * (q + q.conj().T)).violated


def test_function_pair_validation():
    with pytest.raises(ValueError):
        FunctionPair(lambda x: x, lambda x: x ** 2, lambda x: x, name="bad-inverse")
    with pytest.raises(ValueError):
        power_sqrt_pair(1.5)


def test_function_pair_hypothesis_check(rng):
    # g = x^2 is convex, so the concavity gate must fire
    bad = FunctionPair(
        f=lambda x: x,
        g=lambda x: x ** 2,
        g_inverse=lambda x: math.sqrt(x) if np.isscalar(x) else np.sqrt(x),
        name="convex-g",
    )
    a = random_complex(rng, 2)
    with pytest.raises(HypothesisFailed):
        eval_functional_chain(a, bad)


def test_parse_bound_id():
    assert parse_bound_id("T2") == ("T2", None)
    assert parse_bound_id("COR:3") == ("COR", 3.0)
    assert parse_bound_id("FUNC:2.5") == ("FUNC", 2.5)
    with pytest.raises(ValueError, match="valid ids"):
        parse_bound_id("NOPE")
    with pytest.raises(ValueError):
        parse_bound_id("T2:3")
    with pytest.raises(ValueError):
        parse_bound_id("COR:abc")
    with pytest.raises(ValueError):
        parse_bound_id("COR:1")


def test_evaluate_dispatch(rng):
    a = random_complex(rng, 3)
    ctx = _ctx(a)
    rep2 = evaluate("COR:2", ctx)
    rep3 = evaluate("COR:3", ctx)
    assert rep2.terms[1] != rep3.terms[1]
    with pytest.raises(ValueError):
        evaluate("LEM-SUM", a)
    with pytest.raises(ValueError):
        evaluate("LEM-POSDIFF", a)


def test_catalog_cased_aliases():
    # the registry-cased names are the same callables, not copies
    assert nb.eval_chain_B0 is nb.eval_chain_b0
    assert nb.eval_bound_KIT is nb.eval_bound_kit
    assert nb.eval_chain_SQ is nb.eval_chain_sq
    assert nb.eval_bound_LEM1 is nb.eval_bound_lem1
    assert nb.eval_chain_T1 is nb.eval_chain_t1
    assert nb.eval_chain_T2 is nb.eval_chain_t2
    assert nb.eval_bound_T3 is nb.eval_bound_t3
    assert nb.eval_bound_T3_printed is nb.eval_bound_t3_printed
    assert nb.eval_chain_COR is nb.eval_chain_cor


def test_catalog_is_complete():
    entries = catalog_list()
    assert len(entries) == 13
    assert ALL_IDS == [
        "B0", "KIT", "SQ", "LEM1+", "LEM1-", "T1", "LEM-SUM", "T2",
        "LEM-POSDIFF", "T3", "T3-PRINTED", "FUNC", "COR",
    ]
    arity = {e.bound_id: e.arity for e in entries}
    assert arity["LEM-SUM"] == 2
    assert arity["LEM-POSDIFF"] == 2
    assert sum(1 for e in entries if e.arity == 1) == 11
    for e in entries:
        assert e.description


def test_default_tolerance():
    assert default_tolerance(0.5) == pytest.approx(1e-9)
    assert default_tolerance(100.0) == pytest.approx(1e-7)
    assert default_tolerance(-200.0, 3.0) == pytest.approx(2e-7)


def test_context_caches_radius(rng):
    a = random_complex(rng, 3)
    ctx = _ctx(a)
    assert ctx.omega is ctx.omega
    assert ctx.abs_left is ctx.abs_left
    # two bounds sharing one context reuse the same enclosure
    b0 = eval_chain_b0(ctx)
    sq = eval_chain_sq(ctx)
    assert b0.terms[1] == pytest.approx(math.sqrt(sq.terms[1]), rel=1e-12)


def test_tolerance_absorbs_enclosure_width(rng):
    # a deliberately loose radius cannot flag a sound bound as violated
    a = random_complex(rng, 4)
    loose = RadiusConfig(grid_points=16, target_width_rel=0.2, max_refinement_iters=0)
    ctx = MatrixContext(a, loose)
    for bid in ("B0", "SQ", "LEM1+", "LEM1-", "T1"):
        rep = evaluate(bid, ctx)
        assert not rep.violated, bid
