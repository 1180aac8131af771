import json

import pytest

from seqmin.cli import main
from seqmin.lfsr import verify_identity
from seqmin.poly import PairedPoly, Poly
from seqmin.ring import GF2, GFp


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_minpoly_text(capsys):
    code, out, _ = run_cli(capsys, "minpoly", "--seq", "0,1,1,0,0,1,0,1")
    assert code == 0
    assert "mu = x^4 + x^2 + x" in out
    assert "LC = 4" in out


def test_minpoly_json_monic(capsys):
    code, out, _ = run_cli(
        capsys, "minpoly", "--ring", "gfp:5", "--seq", "2,4", "--monic", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["verified"]
    assert data["mu"][-1] == 1


def test_mr_json_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "mr", "--seq", "1,0,1,1,0,1", "--json")
    assert code == 0
    data = json.loads(out)
    dom = GF2()
    mu = PairedPoly(Poly(dom, data["mu"]), Poly(dom, data["mu2"]))
    bez = PairedPoly(*(Poly(dom, c) for c in data["bez_numu"]))
    assert verify_identity(bez, mu, data["nabla"])
    assert data["lc_profile"] == [1, 1, 2, 2, 2, 2]
    assert data["verified"]


def test_mr_trace(capsys):
    code, out, _ = run_cli(capsys, "mr", "--seq", "0,1,1", "--trace")
    assert code == 0
    assert "j | delta" in out
    assert out.count("\n") >= 5


def test_bezout_text(capsys):
    code, out, _ = run_cli(
        capsys, "bezout", "--u", "1,0,0,1", "--u2", "1,0,1", "--oracle",
        "--count-mults",
    )
    assert code == 0
    assert "g     = x + 1" in out
    assert "mults =" in out
    assert "verified: True" in out


def test_bezout_json_gfp(capsys):
    code, out, _ = run_cli(
        capsys, "bezout", "--ring", "gfp:5", "--u", "1,2,1", "--u2", "1,1",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    dom = GFp(5)
    f = Poly(dom, data["f"][0])
    f2 = Poly(dom, data["f"][1])
    u = Poly(dom, [1, 2, 1])
    u2 = Poly(dom, [1, 1])
    assert f * u + f2 * u2 == Poly(dom, data["g"])


def test_bezout_oracle_needs_field(capsys):
    code, _, err = run_cli(
        capsys, "bezout", "--ring", "int", "--u", "0,1", "--u2", "1", "--oracle"
    )
    assert code == 2
    assert "field" in err


def test_plcp_sequence(capsys):
    code, out, _ = run_cli(capsys, "plcp", "--seq", "1,1,0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["is_plcp"] and data["profile"] == [1, 1, 2]
    code, out, _ = run_cli(capsys, "plcp", "--seq", "0,1")
    assert code == 0
    assert "PLCP: False" in out


def test_plcp_exhaustive(capsys):
    code, out, _ = run_cli(capsys, "plcp", "--exhaustive", "6", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["equivalent"] and data["plcp_count"] == 8


def test_plcp_requires_an_input(capsys):
    code, _, err = run_cli(capsys, "plcp")
    assert code == 2
    assert "required" in err


def test_annihilator_text(capsys):
    code, out, _ = run_cli(
        capsys, "annihilator", "--seq", "0,1,1,0,0,1,0,1", "--oracle"
    )
    assert code == 0
    assert "degree    = 5" in out
    assert "oracle agreement: True" in out


def test_annihilator_extend_json(capsys):
    code, out, _ = run_cli(
        capsys, "annihilator", "--seq", "0,1,1,0,0,1,0,1", "--extend", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["s_next"] == 0
    assert data["mu_bullet"][0] == [1, 1, 0, 0, 0, 1]


def test_reverse_lc(capsys):
    code, out, _ = run_cli(capsys, "reverse-lc", "--seq", "1,1,0,0")
    assert code == 0
    assert "reversed LC = 3" in out
    code, out, _ = run_cli(
        capsys, "reverse-lc", "--seq", "1,1,0,0", "--classify", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data == {"lc": 2, "rev_lc": 3, "verified": True}


def test_bench_small(capsys):
    code, out, _ = run_cli(
        capsys, "bench", "--sizes", "256,512,1024", "--count-mults", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert len(data["rows"]) == 3
    assert all(r["mults"] > 0 for r in data["rows"])
    assert isinstance(data["alpha"], float)


def test_exit_code_on_bad_input(capsys):
    code, _, err = run_cli(capsys, "minpoly", "--seq", "")
    assert code == 2
    assert "error:" in err
    code, _, _ = run_cli(capsys, "minpoly", "--ring", "gfp:4", "--seq", "1")
    assert code == 2
    code, _, _ = run_cli(capsys, "nonsense")
    assert code == 2


def test_epsilon_flag(capsys):
    code, out, _ = run_cli(
        capsys, "minpoly", "--ring", "int", "--seq", "3", "--epsilon", "1"
    )
    assert code == 0
    assert "x - 3" in out
