import math

import pytest

from fracschrod import report
from fracschrod.params import Convention
from fracschrod.report import (
    DEFAULT_OUT,
    ENV_OUT,
    PAPER_REFS,
    RunConfig,
    Verdict,
    VerificationRow,
    claim_suite,
    emit_csv,
    emit_json,
    load_run_config,
    parse_csv,
    parse_json,
)


@pytest.fixture(scope="module")
def rows():
    return claim_suite(RunConfig())


def _by_id(rows):
    return {r.claim_id: r for r in rows}


def test_row_count_and_order(rows):
    assert len(rows) >= 20
    ids = [r.claim_id for r in rows]
    assert ids == sorted(ids)
    assert all(r.paper_ref in PAPER_REFS for r in rows)


def test_expected_confirmations(rows):
    got = _by_id(rows)
    for cid in ("box.energy.n1", "box.normalization.n1", "osc.eps.n0", "osc.pn.n3", "ladder.commutator"):
        assert got[cid].verdict is Verdict.CONFIRMED, cid


def test_expected_discrepancies(rows):
    got = _by_id(rows)
    for cid in (
        "free.packet.shift",
        "momentum.osc.n0",
        "momentum.osc.n1",
        "energy.fractionary.n0",
        "energy.fractionary.n1",
        "ladder.destroy_ratio.n1",
        "ladder.adjoint_defect",
    ):
        assert got[cid].verdict is Verdict.DISCREPANT, cid
    assert got["free.xi_constant"].verdict is Verdict.FORMULA_ONLY


def test_row_validation():
    with pytest.raises(ValueError):
        VerificationRow("x", "Eq. (999)", 1.0, 1.0, 0.1)
    with pytest.raises(ValueError):
        VerificationRow("x", "Eq. (34)", None, 1.0, 0.1)
    with pytest.raises(ValueError):
        VerificationRow("x", "Eq. (34)", 1.0, 1.0, -1.0)


def test_row_deviation():
    r = VerificationRow("x", "Eq. (34)", 2.0, 1.5, 0.4)
    assert r.deviation == 0.5
    assert r.relative_deviation == 0.25
    assert r.verdict is Verdict.DISCREPANT
    assert VerificationRow("x", "Eq. (34)", 0.0, 0.0, 0.0).verdict is Verdict.CONFIRMED


def test_csv_round_trip(rows):
    cfg = RunConfig()
    text = emit_csv(rows, cfg)
    meta, back = parse_csv(text)
    assert meta == cfg.as_dict()
    assert [(r.claim_id, r.verdict) for r in back] == [(r.claim_id, r.verdict) for r in rows]
    for a, b in zip(rows, back):
        assert a.paper_value == b.paper_value
        assert a.oracle_value == b.oracle_value
    assert emit_csv(back, cfg) == text


def test_json_round_trip(rows):
    text = emit_json(rows, RunConfig())
    _, back = parse_json(text)
    assert emit_json(back, RunConfig()) == text


def test_csv_detects_tampering(rows):
    text = emit_csv(rows, RunConfig())
    bad = text.replace(",Confirmed,", ",Discrepant,", 1)
    with pytest.raises(ValueError):
        parse_csv(bad)


def test_deterministic():
    a = emit_csv(claim_suite(), RunConfig())
    b = emit_csv(claim_suite(), RunConfig())
    assert a == b


def test_tolerance_override():
    cfg = load_run_config(overrides={"tol.free.packet.shift": "1.0"}, environ={})
    row = _by_id(claim_suite(cfg))["free.packet.shift"]
    assert row.tolerance == 1.0
    assert row.verdict is Verdict.CONFIRMED
    assert cfg.as_dict()["tol.free.packet.shift"] == "1"


def test_out_dir_precedence(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("out = from-file\nB = m/sqrt8\nconvention = eq8\n")
    assert load_run_config(environ={}).out_dir.name == DEFAULT_OUT
    assert load_run_config(path, environ={}).out_dir.name == "from-file"
    assert load_run_config(path, environ={ENV_OUT: "from-env"}).out_dir.name == "from-env"
    assert load_run_config(path, out="flag", environ={ENV_OUT: "from-env"}).out_dir.name == "flag"
    cfg = load_run_config(path, environ={})
    assert cfg.params.B == pytest.approx(1 / math.sqrt(8))
    assert cfg.convention is Convention.EQ8_CONSISTENT


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError):
        load_run_config(overrides={"mass": "1"}, environ={})
    with pytest.raises(ValueError):
        load_run_config(overrides={"grid_points": "4"}, environ={})


def test_config_echoed(rows):
    text = emit_csv(rows, RunConfig())
    header = [ln for ln in text.splitlines() if ln.startswith("#")]
    assert "# convention = paper" in header
    assert any(ln.startswith("# B = ") for ln in header)
    assert text.splitlines()[len(header)] == ",".join(report.CSV_COLUMNS)


def test_required_reference_coverage(rows):
    confirmed = {r.paper_ref for r in rows if r.verdict is Verdict.CONFIRMED}
    discrepant = {r.paper_ref for r in rows if r.verdict is Verdict.DISCREPANT}
    for ref in ("Eq. (34)", "Eq. (40)", "Eq. (49)", "Eq. (55)", "Eq. (56)", "Eq. (57)", "Eq. (58)", "Eq. (61)", "Eq. (67)"):
        assert ref in confirmed, ref
    for ref in ("Eq. (23)", "Eq. (54)", "Eq. (72)", "Eq. (76)"):
        assert ref in discrepant, ref
