import json
import os

from mapgerm.cli import EXIT_OK, EXIT_REJECTED, EXIT_USAGE, main


def write_germ(tmp_path, doc, name="germ.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


CROSSCAP = {"name": "crosscap", "components": ["x", "y^2", "x*y"]}
NOT_FD = {"components": ["x", "y^2", "y^3"]}
TRIVIAL_FAMILY = {
    "parameter": "t",
    "components": ["x", "y^2", "x*y + t*y^3"],
}


class TestInvariantsCommand:
    def test_crosscap_text(self, tmp_path, capsys):
        code = main(["invariants", write_germ(tmp_path, CROSSCAP)])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "C (cross-caps)" in out
        assert "m0 (multiplicity)" in out

    def test_crosscap_json(self, tmp_path, capsys):
        code = main(["invariants", write_germ(tmp_path, CROSSCAP), "--json"])
        captured = capsys.readouterr()
        assert code == EXIT_OK
        doc = json.loads(captured.out)
        assert doc["C"] == 1
        assert doc["T"] == 0
        assert doc["m0"] == 2
        assert doc["finitely_determined_proxy"] is True
        # canonical form: re-serialization is byte-identical
        assert json.dumps(doc, indent=2, sort_keys=False) == captured.out.rstrip("\n")

    def test_rejection_exit_code(self, tmp_path, capsys):
        code = main(["invariants", write_germ(tmp_path, NOT_FD), "--json"])
        captured = capsys.readouterr()
        assert code == EXIT_REJECTED
        doc = json.loads(captured.out)
        assert doc["finitely_determined_proxy"] is False
        assert "rejected" in captured.err

    def test_missing_file(self, tmp_path, capsys):
        code = main(["invariants", str(tmp_path / "absent.json")])
        assert code == EXIT_USAGE
        assert "no such file" in capsys.readouterr().err

    def test_parse_error_offset_reported(self, tmp_path, capsys):
        bad = {"components": ["x", "y^2", "x y"]}
        code = main(["invariants", write_germ(tmp_path, bad)])
        err = capsys.readouterr().err
        assert code == EXIT_USAGE
        assert "component 2" in err
        assert "byte" in err

    def test_cache_round_trip(self, tmp_path, capsys):
        path = write_germ(tmp_path, CROSSCAP)
        cache = str(tmp_path / "cache")
        code1 = main(["invariants", path, "--json", "--cache-dir", cache])
        out1 = capsys.readouterr().out
        assert code1 == EXIT_OK
        assert os.listdir(cache)
        code2 = main(["invariants", path, "--json", "--cache-dir", cache])
        out2 = capsys.readouterr().out
        assert code2 == EXIT_OK
        assert out1 == out2

    def test_config_file_and_flag_priority(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"truncation_ceiling": 32, "seed": 5}))
        code = main(
            [
                "invariants",
                write_germ(tmp_path, CROSSCAP),
                "--json",
                "--config",
                str(cfg),
                "--seed",
                "11",
            ]
        )
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["m0"] == 2


class TestFamilyCommand:
    def test_trivial_family(self, tmp_path, capsys):
        code = main(["family", write_germ(tmp_path, TRIVIAL_FAMILY), "--json"])
        captured = capsys.readouterr()
        assert code == EXIT_OK
        doc = json.loads(captured.out)
        v = doc["verdicts"]
        assert v["mu_constant"] is True
        assert v["topologically_trivial"] is True
        assert v["whitney_equisingular"] is True
        assert v["bilipschitz_trivial"] is True
        assert v["excellent"] is True
        assert len(doc["equivalent_conditions"]) == 4

    def test_family_text_output(self, tmp_path, capsys):
        code = main(["family", write_germ(tmp_path, TRIVIAL_FAMILY)])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "mu-constant: yes" in out
        assert "generic fiber:" in out

    def test_plain_germ_rejected_by_family(self, tmp_path, capsys):
        code = main(["family", write_germ(tmp_path, CROSSCAP)])
        assert code == EXIT_USAGE
        assert "not an unfolding" in capsys.readouterr().err

    def test_not_finitely_determined_family(self, tmp_path, capsys):
        doc = {"parameter": "t", "components": ["x", "y^2", "t*y^3"]}
        code = main(["family", write_germ(tmp_path, doc)])
        assert code == EXIT_REJECTED
        assert "rejected" in capsys.readouterr().err

    def test_custom_samples(self, tmp_path, capsys):
        code = main(
            [
                "family",
                write_germ(tmp_path, TRIVIAL_FAMILY),
                "--json",
                "--samples",
                "2,-1/3",
            ]
        )
        doc = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert [s["t"] for s in doc["samples"]] == ["2", "-1/3"]


class TestCatalogCommand:
    def test_list(self, capsys):
        code = main(["catalog", "list"])
        out = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        assert "crosscap" in out
        assert "H2" in out
        assert "family-mu-constant" in out

    def test_show(self, capsys):
        code = main(["catalog", "show", "S1"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert json.loads(out)["components"] == ["x", "y^2", "y^3 + x^2*y"]

    def test_show_unknown(self, capsys):
        code = main(["catalog", "show", "nope"])
        assert code == EXIT_USAGE

    def test_show_needs_name(self, capsys):
        code = main(["catalog", "show"])
        assert code == EXIT_USAGE

    def test_selftest(self, capsys):
        code = main(["catalog", "selftest"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        for line in out.strip().splitlines():
            assert line.endswith(": PASS"), line


class TestUsage:
    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE
