from __future__ import annotations

import io
import json

import pytest

from pcodes import formats
from pcodes.cli import main
from pcodes.words import BinaryCode


def test_pcc_roundtrip(hamming7):
    text = formats.pcc_to_string([hamming7, BinaryCode(7, [0, 127])])
    codes = formats.parse_pcc(text)
    assert codes == [hamming7, BinaryCode(7, [0, 127])]
    assert formats.pcc_to_string(codes) == text


def test_pcc_hamming15_line_count(hamming15):
    text = formats.pcc_to_string([hamming15])
    assert len(text.strip().splitlines()) == 2049


def test_pcc_rejects_malformed():
    with pytest.raises(formats.FormatError):
        formats.parse_pcc("PCC1 n=3\n0110\n")  # wrong length
    with pytest.raises(formats.FormatError):
        formats.parse_pcc("PCC1 n=3\n011\n001\n")  # unsorted
    with pytest.raises(formats.FormatError):
        formats.parse_pcc("PCC1 n=3\n011\n011\n")  # duplicate
    with pytest.raises(formats.FormatError):
        formats.parse_pcc("011\n")  # no header
    with pytest.raises(formats.FormatError):
        formats.parse_pcc("PCC1 n=3\n01x\n")
    with pytest.raises(formats.FormatError) as err:
        formats.parse_pcc("PCC1 n=3\n# fine\n0110\n")
    assert "line 3" in str(err.value)


def test_pcc_comments_and_blank_lines(hamming7):
    text = "# catalog\n\n" + formats.pcc_to_string([hamming7]) + "\n# trailing\n"
    assert formats.parse_pcc(text) == [hamming7]


def test_mpc_roundtrip():
    from pcodes.mixedcodes import MixedCode

    code = MixedCode((4, 2, 2), [(0, 0, 0), (3, 1, 0)])
    buf = io.StringIO()
    formats.write_mpc([code], buf)
    assert formats.parse_mpc(buf.getvalue()) == [code]


def test_scrun_roundtrip():
    digests = ["ab" * 32, "cd" * 32]
    buf = io.StringIO()
    formats.write_scrun(digests, buf)
    assert formats.parse_scrun(buf.getvalue()) == digests
    with pytest.raises(formats.FormatError):
        formats.parse_scrun("nope\n")


def test_design_roundtrip():
    blocks = [(1, 2, 3), (4, 5, 6)]
    buf = io.StringIO()
    formats.write_design(7, blocks, "STS", buf)
    kind, v, parsed = formats.parse_design(buf.getvalue())
    assert (kind, v, parsed) == ("STS", 7, blocks)


# -- CLI ---------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_gen_invariants(tmp_path, capsys):
    code, out = run_cli(capsys, "gen", "hamming", "--m", "4")
    assert code == 0
    path = tmp_path / "h15.pcc"
    path.write_text(out)
    code, out = run_cli(capsys, "invariants", str(path))
    assert code == 0
    data = dict(line.split("\t") for line in out.strip().splitlines())
    assert data["rank"] == "11"
    assert data["kernel_size"] == "2048"
    assert data["perfect"] == "True"


def test_cli_equiv_exit_codes(tmp_path, capsys):
    h7 = formats.pcc_to_string([__import__("pcodes.gf2", fromlist=["hamming_code"]).hamming_code(3)])
    a = tmp_path / "a.pcc"
    b = tmp_path / "b.pcc"
    a.write_text(h7)
    codes = formats.parse_pcc(h7)
    shifted = codes[0].translate(5)
    b.write_text(formats.pcc_to_string([shifted]))
    code, out = run_cli(capsys, "equiv", str(a), str(b))
    assert code == 0 and "True" in out
    c = tmp_path / "c.pcc"
    c.write_text(formats.pcc_to_string([BinaryCode(7, range(16))]))
    code, out = run_cli(capsys, "equiv", str(a), str(c))
    assert code == 1 and "False" in out


def test_cli_oa_check_json(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h15.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(4)]))
    code, out = run_cli(capsys, "--format", "json", "oa-check", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["strength"] == 7

    code, out_tsv = run_cli(capsys, "oa-check", str(path))
    rows = dict(line.split("\t") for line in out_tsv.strip().splitlines())
    assert rows["strength"] == str(data["strength"])
    assert rows["transform"] == data["transform"]


def test_cli_components_and_switch(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h15.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(4)]))
    code, out = run_cli(capsys, "components", str(path), "--coord", "15", "--sizes-only")
    assert code == 0 and out.strip().endswith(",".join(["128"] * 16))
    code, out = run_cli(capsys, "switch", str(path), "--coord", "15", "--component", "0")
    assert code == 0
    switched = formats.parse_pcc(out)[0]
    assert len(switched) == 2048 and switched != hamming_code(4)


def test_cli_enumerate_perfect(capsys):
    code, out = run_cli(capsys, "enumerate-perfect", "--n", "7", "--count-only")
    assert code == 0
    data = dict(line.split("\t") for line in out.strip().splitlines())
    assert data["count"] == "240" and data["containing_zero"] == "30"
    code, out = run_cli(capsys, "enumerate-perfect", "--n", "3")
    assert code == 0
    assert len(formats.parse_pcc(out)) == 4


def test_cli_embed(tmp_path, capsys, size10_code):
    from pcodes.gf2 import hamming_code

    sub = tmp_path / "sub.pcc"
    host = tmp_path / "host.pcc"
    sub.write_text(formats.pcc_to_string([BinaryCode(4, [0, 0b1110])]))
    host.write_text(formats.pcc_to_string([hamming_code(3)]))
    code, out = run_cli(capsys, "embed", str(sub), str(host))
    assert code == 0 and "found" in out
    sub.write_text(formats.pcc_to_string([size10_code]))
    host.write_text(formats.pcc_to_string([hamming_code(4)]))
    code, out = run_cli(capsys, "embed", str(sub), str(host))
    assert code == 1 and "absent" in out


def test_cli_sts_and_stset(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h7.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(3)]))
    code, out = run_cli(capsys, "sts", str(path))
    assert code == 0 and out.startswith("STS v=7")
    assert len(out.strip().splitlines()) == 8
    code, out = run_cli(capsys, "st-set", str(path), "--alpha")
    data = dict(line.split("\t") for line in out.strip().splitlines())
    assert data["st_size"] == "7"


def test_cli_clp(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h7.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(3)]))
    code, out = run_cli(capsys, "clp", str(path))
    assert code == 0
    assert out.strip().split("\t")[1] == "1,1,2,2,4,8,16"


def test_cli_aut(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h7.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(3)]))
    code, out = run_cli(capsys, "aut", str(path))
    assert code == 0
    data = dict(line.split("\t") for line in out.strip().splitlines())
    assert data["aut_order"] == "2688"
    assert data["sym_order"] == "168"
    assert data["codeword_orbits"] == "16^1"
    assert data["fixed_coordinates"] == "0"


def test_cli_mixed_compress(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h15.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(4)]))
    code, out = run_cli(capsys, "mixed", "compress", str(path), "--t", "5")
    assert code == 0
    mixed = formats.parse_mpc(out)[0]
    assert mixed.alphabet == (4, 4, 4, 4, 4)
    assert len(mixed) == 64


def test_cli_mixed_verify(tmp_path, capsys):
    from pcodes.gf2 import hamming_code
    from pcodes.mixedcodes import disjoint_kernel_triples, quaternary_compress

    h15 = hamming_code(4)
    mixed = quaternary_compress(h15, disjoint_kernel_triples(h15, 1)[0])
    path = tmp_path / "m.mpc"
    buf = io.StringIO()
    formats.write_mpc([mixed], buf)
    path.write_text(buf.getvalue())
    code, out = run_cli(capsys, "mixed", "verify", str(path))
    assert code == 0 and "True" in out


def test_cli_catalog_stats(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "cat.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(3)]))
    code, out = run_cli(capsys, "catalog-stats", str(path), "--table", "rank-kernel")
    assert code == 0
    assert out.strip() == "4/16\t1"
    code, out = run_cli(capsys, "--format", "json", "catalog-stats", str(path),
                        "--table", "rank-kernel")
    data = json.loads(out)
    assert data["rows"] == [["4/16", 1]]


def test_report_tables_singleton_catalog(hamming7):
    from pcodes.reports import report

    assert report([hamming7], "rank-kernel").rows == [("4/16", 1)]
    assert report([hamming7], "aut-orders").rows == [("2688", 1)]
    assert report([hamming7], "sym-fixed").rows == [("0", 1)]
    assert report([hamming7], "st-sizes").rows == [("1", 1)]
    assert report([hamming7], "independence").rows == [("4", 1)]
    assert report([hamming7], "clp").rows == [("1,1,2,2,4,8,16", 1)]
    comp = report([hamming7], "components")
    assert sum(c for _, c in comp.rows) == 7
    occ = report([hamming7], "sts-occurrence")
    assert len(occ.rows) == 1 and occ.rows[0][1] == 1
    labeled = report([hamming7], "sts-occurrence",
                     sts_index_map={occ.rows[0][0]: "fano"})
    assert labeled.rows == [("fano", 1)]


def test_catalog_cache_roundtrip(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "cat.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(3)]))
    code, first = run_cli(capsys, "catalog-stats", str(path), "--table", "independence")
    assert code == 0
    cache = path.with_suffix(".pcc.invcache.json")
    assert cache.exists()
    payload = json.loads(cache.read_text())
    assert payload["records"]["0"]["independence"] == 4
    code, second = run_cli(capsys, "catalog-stats", str(path), "--table", "independence")
    assert second == first
    # a changed catalog invalidates the cache
    path.write_text(formats.pcc_to_string([hamming_code(2)]))
    code, third = run_cli(capsys, "catalog-stats", str(path), "--table", "independence")
    assert code == 0
    assert json.loads(cache.read_text())["digest"] != payload["digest"]


def test_cli_usage_errors(capsys, tmp_path):
    assert main(["invariants", str(tmp_path / "missing.pcc")]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["gen", "nonsense", "--m", "4"])
    assert exc.value.code == 2


def test_cli_class_bfs_resume(tmp_path, capsys):
    from pcodes.gf2 import hamming_code

    path = tmp_path / "h7.pcc"
    path.write_text(formats.pcc_to_string([hamming_code(3)]))
    state = tmp_path / "run.scrun"
    code, out = run_cli(capsys, "class-bfs", str(path), "--state", str(state))
    assert code == 0
    data = dict(line.split("\t") for line in out.strip().splitlines())
    assert data["classes"] == "1"
    digests = formats.parse_scrun(state.read_text())
    assert len(digests) == 1
    code, out = run_cli(capsys, "class-bfs", str(path), "--resume", str(state))
    assert code == 0
    data = dict(line.split("\t") for line in out.strip().splitlines())
    assert data["classes"] == "1"
