from __future__ import annotations

import pytest

from trimatroid import catalog, harness
from trimatroid.harness import DomainError
from trimatroid.matroid import Matroid
from trimatroid.report import Check, VerificationReport, Witness, parse_report


def statuses(report):
    return [c.status for c in report.checks]


def test_triangle_minor_examples():
    rep = harness.verify_triangle_minors(catalog.get("MK", 5))
    assert rep.ok and statuses(rep)[-1] == "pass"
    w = rep.checks[-1].witnesses[0]
    assert w.get("target") == "MK5"
    rep = harness.verify_triangle_minors(catalog.get("AG23"))
    assert rep.checks[-1].witnesses[0].get("target") == "U2,4"
    rep = harness.verify_triangle_minors(catalog.get("U", 2, 3))
    assert statuses(rep) == ["skip"]


def test_triangle_minor_check_skips_non_simple_input():
    m = Matroid.from_circuits(3, [[0, 1]])
    assert statuses(harness.verify_triangle_minors(m)) == ["skip"]


def test_ternary_check_examples():
    rep = harness.verify_ternary_triangles(catalog.get("AG23"), (3,))
    assert rep.ok and rep.checks[-1].witnesses[0].get("target") == "P7"
    rep = harness.verify_ternary_triangles(catalog.get("TU", 2, 4), (2,))
    w = rep.checks[-1].witnesses[0]
    assert w.kind == "restriction" and w.get("target") == "U2,4"
    rep = harness.verify_ternary_triangles(catalog.get("TW", 3), (2,))
    assert statuses(rep) == ["skip"]


def test_ternary_check_rejects_non_ternary_backends():
    with pytest.raises(DomainError):
        harness.verify_ternary_triangles(catalog.get("W", 3))
    with pytest.raises(DomainError):
        harness.verify_ternary_triangles(catalog.get("F7"))


def test_witnesses_round_trip_through_text():
    rep = harness.run_triangle_minors(seed=1)
    text = rep.structured()
    results = harness.reverify_report(text)
    assert results and all(ok for _, ok in results)


def test_tampered_witness_is_rejected():
    rep = harness.verify_triangle_minors(catalog.get("AG23"))
    w = rep.checks[-1].witnesses[0]
    fields = dict(w.fields)
    # keep one element too many
    fields["delete"] = ",".join(fields["delete"].split(",")[1:])
    assert not harness.reverify_witness(Witness(w.kind, list(fields.items())))
    # contract a second element, dropping the rank below the target's
    fields = dict(w.fields)
    extra = fields["delete"].split(",")
    fields["contract"] = ",".join(sorted({fields["contract"], extra[0]}, key=int))
    fields["delete"] = ",".join(extra[1:])
    assert not harness.reverify_witness(Witness(w.kind, list(fields.items())))


def test_report_format_round_trip():
    rep = VerificationReport("demo", [("seed", "1")])
    c = rep.add(Check("first", "pass", ["a\tnote"]))
    c.witnesses.append(Witness("iso", [("map", "0,1")]))
    rep.add(Check("second", "skip"))
    text = rep.structured()
    assert text.splitlines()[0] == "trimatroid-report\t1"
    assert text.splitlines()[-1] == "overall\tpass\tchecks=2\tpass=1\tfail=0\tskip=1"
    assert parse_report(text).structured() == text
    rep.add(Check("third", "fail"))
    assert rep.status == "fail"


def test_queries():
    ag = catalog.get("AG23")
    assert "min=4 max=4" in harness.cmd_query(ag, "triangles")
    assert "lambda=infinity (3-connected)" in harness.cmd_query(catalog.get("U", 2, 4),
                                                                "connectivity")
    assert "0 circuits" in harness.cmd_query(catalog.get("R10"), "circuits", max_size=3)


def test_corpora_are_deterministic():
    a = [harness.encode_matroid(m) for _, m in harness.binary_triangle_corpus(3)]
    b = [harness.encode_matroid(m) for _, m in harness.binary_triangle_corpus(3)]
    assert a == b and len(a) == 14
