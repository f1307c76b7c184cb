import json

import pytest

from fusionaudit import audit
from fusionaudit.characters import fusion_tensor
from fusionaudit.cli import main
from fusionaudit.groupfile import GroupFileError, load_group

CLAIM_NAMES = [
    "claim3_embedding_exists",
    "setup_group_structure",
    "claim4_h0",
    "claim5_lambda_exists",
    "claim1_chi_irreducible",
    "claim2_constituent_phi",
    "claim6_indicator",
]

Z4_TABLE = """
# cyclic group of order 4
table 4
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
"""

G128_SEMIDIRECT = """
# F2^4 semidirect the quaternion matrix group <A, B>
semidirect-gf2
gen A
0001
0010
0100
1110
gen B
0011
0100
0010
1100
rel A^4
rel B^2*A^-2
rel B^-1*A*B*A
"""


# ---------------------------------------------------------------------------
# verify_claims / AuditReport
# ---------------------------------------------------------------------------

def test_verify_claims_all_pass(cg):
    report = audit.verify_claims(cg=cg)
    assert report.ok
    assert [c.name for c in report.claims] == CLAIM_NAMES
    assert all(c.passed for c in report.claims)


def test_verify_claims_witnesses(cg):
    report = audit.verify_claims(cg=cg)
    by_name = {c.name: c.witness for c in report.claims}
    assert by_name["setup_group_structure"]["order"] == 128
    assert len(by_name["claim4_h0"]["h0"]) == 2
    assert len(by_name["claim5_lambda_exists"]["valid_covectors"]) == 8
    assert by_name["claim1_chi_irreducible"]["degree"] == 8
    assert by_name["claim2_constituent_phi"]["nu2_phi"] == "-1"
    c6 = by_name["claim6_indicator"]
    assert c6["counts"] == [16, 8, 8]
    assert c6["contributions"] == [8, 8, -8]
    assert c6["total"] == 128


def test_verify_all_lambdas(cg):
    report = audit.verify_all_lambdas(cg)
    assert report.ok
    runs = report.extra["lambda_runs"]
    assert len(runs) == 8
    assert all(r["ok"] for r in runs)


def test_report_json_is_deterministic(cg):
    a = audit.verify_claims(cg=cg).to_json()
    b = audit.verify_claims(cg=cg).to_json()
    assert a == b
    parsed = json.loads(a)
    assert parsed["schema"] == audit.SCHEMA_VERSION
    assert parsed["ok"] is True


def test_report_ok_logic():
    report = audit.AuditReport(command="scan", group_label="x")
    assert report.ok
    report.scans["positivity"] = [{"p": 0}]
    assert report.ok  # positivity findings are reported, not failures
    report.scans["odd_rule"] = [{"p": 0}]
    assert not report.ok
    report.scans["odd_rule"] = []
    report.claims.append(audit.ClaimResult("x", False, {}))
    assert not report.ok


def test_report_text_rendering(cg):
    text = audit.verify_claims(cg=cg).to_text()
    assert text.endswith("result: OK\n")
    for name in CLAIM_NAMES:
        assert f"[PASS] {name}" in text


# ---------------------------------------------------------------------------
# Scans
# ---------------------------------------------------------------------------

def test_g128_scans(data, g128_table, g128_fusion):
    pos = audit.positivity_scan(g128_table, g128_fusion)
    assert pos
    ichi = g128_table.row_of(data.chi)
    iphi = g128_table.row_of(data.phi)
    headline = [r for r in pos if (r["p"], r["q"], r["r"]) == (ichi, ichi, iphi)]
    assert len(headline) == 1
    assert headline[0]["N"] == 2
    assert headline[0]["nu_p"] == headline[0]["nu_q"] == 1
    assert headline[0]["nu_r"] == -1
    # every violating multiplicity is even: the odd rule survives
    assert all(r["N"] % 2 == 0 for r in pos)
    assert audit.odd_rule_scan(g128_table, g128_fusion) == []

    wang = audit.wang_scan(g128_table, g128_fusion)
    assert wang
    assert any(r["self_dual"] and r["p"] == ichi for r in wang)


def test_clean_groups_have_empty_scans(q8_table, h16_table):
    for table in (q8_table, h16_table):
        N = fusion_tensor(table)
        assert audit.positivity_scan(table, N) == []
        assert audit.wang_scan(table, N) == []
        assert audit.odd_rule_scan(table, N) == []


def test_scan_report_q8(q8):
    report = audit.scan_report("builtin:q8", q8)
    assert report.ok
    assert report.scans["positivity"] == []
    assert report.extra["degrees"] == [1, 1, 1, 1, 2]
    assert report.extra["indicators"] == [1, 1, 1, 1, -1]


def test_builtin_group_names():
    G, cg = audit.builtin_group("q8")
    assert G.order == 8 and cg is None
    with pytest.raises(ValueError):
        audit.builtin_group("nope")


def test_table_report_methods(cg):
    both = audit.table_report("builtin:g128", cg.group, method="both", cg=cg)
    assert both.ok
    matches = both.extra["constructive_rows"]
    assert len(matches) == 6
    assert all(v is not None for v in matches.values())
    cons = audit.table_report("builtin:g128", cg.group, method="constructive", cg=cg)
    assert len(cons.table["irreducibles"]) == 6
    with pytest.raises(ValueError):
        audit.table_report("builtin:q8", cg.group, method="constructive")
    with pytest.raises(ValueError):
        audit.table_report("builtin:g128", cg.group, method="bogus", cg=cg)


# ---------------------------------------------------------------------------
# Group files
# ---------------------------------------------------------------------------

def test_load_table_dialect():
    G = load_group(Z4_TABLE)
    assert G.order == 4
    assert G.element_order(1) == 4
    assert G.exponent() == 4


def test_load_semidirect_dialect():
    G = load_group(G128_SEMIDIRECT)
    assert G.order == 128
    assert G.exponent() == 4
    assert len(G.conjugacy_classes()) == 23


def test_loaded_g128_scans_like_the_builtin(g128_table):
    from fusionaudit.characters import dixon_table
    G = load_group(G128_SEMIDIRECT)
    table = dixon_table(G)
    # isomorphic but differently indexed, so compare as multisets
    assert table.degrees() == g128_table.degrees()
    assert sorted(table.indicators()) == sorted(g128_table.indicators())
    assert audit.odd_rule_scan(table) == []
    assert len(audit.positivity_scan(table)) == len(audit.positivity_scan(g128_table))


@pytest.mark.parametrize("text,fragment", [
    ("rubbish 4", "unknown format"),
    ("table x", "must be an integer"),
    ("table 2\n0 1\n1 9", "out of range"),
    ("table 2\n0 1\n1 0\n7", "trailing token"),
    ("table 2\n0 1", "unexpected end of file"),
    ("table 2\n1 0\n0 1", "not a group table"),
    ("semidirect-gf2\ngen A\n0001\n0010\n0100\n1110\nrel C^2",
     "unknown generator"),
    ("semidirect-gf2\ngen A\n0001\n0010\n0100\n1110\nrel A^3",
     "does not hold"),
    ("semidirect-gf2\ngen A\n0000\n0010\n0100\n1000", "not invertible"),
    ("semidirect-gf2\ngen A\n0001\n0010\n01x0\n1000", "4 bits of 0/1"),
    ("semidirect-gf2", "no generators"),
])
def test_group_file_errors(text, fragment):
    with pytest.raises(GroupFileError) as exc:
        load_group(text)
    assert fragment in str(exc.value)
    assert str(exc.value).startswith("line ")


def test_group_file_error_line_numbers():
    with pytest.raises(GroupFileError) as exc:
        load_group("table 2\n0 1\n1 9")
    assert exc.value.line == 3


def test_order_cap_enforced():
    with pytest.raises(GroupFileError) as exc:
        load_group(Z4_TABLE, max_order=2)
    assert "exceeds the cap" in str(exc.value)
    with pytest.raises(GroupFileError):
        load_group(G128_SEMIDIRECT, max_order=64)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def test_cli_verify(capsys):
    assert main(["verify"]) == 0
    out = capsys.readouterr()
    assert "result: OK" in out.out
    assert "elapsed:" in out.err
    assert "elapsed:" not in out.out


def test_cli_verify_json_out(tmp_path):
    path = tmp_path / "report.json"
    assert main(["verify", "--report", "json", "--out", str(path)]) == 0
    parsed = json.loads(path.read_text())
    assert parsed["schema"] == audit.SCHEMA_VERSION
    assert parsed["ok"] is True
    assert [c["name"] for c in parsed["claims"]] == CLAIM_NAMES


def test_cli_verify_all_lambdas(tmp_path):
    path = tmp_path / "report.json"
    assert main(["verify", "--all-lambdas", "--report", "json",
                 "--out", str(path)]) == 0
    parsed = json.loads(path.read_text())
    assert len(parsed["lambda_runs"]) == 8


def test_cli_verify_rejects_other_groups():
    with pytest.raises(SystemExit):
        main(["verify", "--group", "builtin:q8"])


def test_cli_scan_builtin(capsys):
    assert main(["scan", "--group", "builtin:q8"]) == 0
    out = capsys.readouterr().out
    assert "positivity violations: 0" in out
    assert main(["scan", "--group", "builtin:g128"]) == 0
    out = capsys.readouterr().out
    assert "odd_rule violations: 0" in out
    assert "positivity violations: 0" not in out


def test_cli_scan_file(tmp_path, capsys):
    path = tmp_path / "z4.grp"
    path.write_text(Z4_TABLE)
    assert main(["scan", "--group", f"file:{path}"]) == 0
    assert "result: OK" in capsys.readouterr().out


def test_cli_table_both(tmp_path):
    path = tmp_path / "table.json"
    assert main(["table", "--table-method", "both", "--report", "json",
                 "--out", str(path)]) == 0
    parsed = json.loads(path.read_text())
    assert len(parsed["table"]["irreducibles"]) == 23
    assert parsed["table"]["dixon_prime"] == 29
    assert sorted(d["degree"] for d in parsed["table"]["irreducibles"]) \
        == [1] * 8 + [2] * 14 + [8]


def test_cli_errors_exit_2(tmp_path, capsys):
    assert main(["scan", "--group", "builtin:nope"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["scan", "--group", "file:/does/not/exist"]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.grp"
    bad.write_text("table 2\n0 1\n1 9\n")
    assert main(["scan", "--group", f"file:{bad}"]) == 2
    assert "line 3" in capsys.readouterr().err
    assert main(["scan", "--group", "q8"]) == 2


def test_cli_json_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["scan", "--group", "builtin:q8", "--report", "json",
                     "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_docs_fixture_matches_live_output(tmp_path):
    import pathlib
    fixture = pathlib.Path(__file__).resolve().parents[1] \
        / "docs" / "examples" / "scan-q8.json"
    out = tmp_path / "live.json"
    assert main(["scan", "--group", "builtin:q8", "--report", "json",
                 "--out", str(out)]) == 0
    assert out.read_text() == fixture.read_text()


def test_docs_example_group_file_loads():
    import pathlib
    path = pathlib.Path(__file__).resolve().parents[1] \
        / "docs" / "examples" / "g128.grp"
    from fusionaudit.groupfile import load_group_file
    G = load_group_file(str(path))
    assert G.order == 128


def test_cli_max_order_cap(tmp_path, capsys):
    path = tmp_path / "z4.grp"
    path.write_text(Z4_TABLE)
    assert main(["scan", "--group", f"file:{path}", "--max-order", "2"]) == 2
    assert "exceeds the cap" in capsys.readouterr().err
