from sylow2 import verify


def test_every_planned_claim_is_registered():
    for kind, target in (("A", 14), ("A", 7), ("S", 12), ("B", 3), ("G", 4)):
        for claim, params in verify.plan_claims(kind, target, "full", 1729):
            assert claim in verify._EXPECTED and claim in verify._COMPUTE
            assert params.get("kind") == kind or "k" in params


def test_plan_is_sorted_by_claim_id():
    plan = verify.plan_claims("A", 8, "full", 1729)
    ids = [claim for claim, _ in plan]
    assert ids == sorted(ids)


def test_quick_plan_above_oracle_limit_is_formula_only():
    plan = verify.plan_claims("A", 48, "quick", 1729)
    assert {claim for claim, _ in plan} == {
        "composite/legendre-cross-check",
        "composite/neighbor-ratios",
    }


def test_run_verification_s_kind():
    records = verify.run_verification("S", 12, "full")
    assert all(r.passed for r in records)
    ranks = [r for r in records if r.claim == "composite/rank"]
    assert ranks and ranks[0].computed == 5


def test_run_verification_b_kind():
    records = verify.run_verification("B", 3, "full")
    assert all(r.passed for r in records)
    by_id = {r.claim: r for r in records}
    assert by_id["tree/order-log2"].computed == 7
    assert by_id["tree/derived-matches-predicate"].computed is True


def test_report_document_structure():
    records = verify.run_verification("A", 12, "quick")
    doc = verify.report_to_json("A", 12, "quick", 1729, records)
    assert doc["pass"] is True
    assert doc["summary"]["n"] == 12
    for record in doc["claims"]:
        assert record["passed"] == (record["expected"] == record["computed"])
        assert record["wall_time_s"] >= 0


def test_sign_law_claim_is_seed_stable():
    params = {"kind": "G", "k": 4, "seed": 7, "samples": 300}
    first = verify.run_claim("tree/sign-law-violations", params)
    second = verify.run_claim("tree/sign-law-violations", params)
    assert first.computed == second.computed == 0
