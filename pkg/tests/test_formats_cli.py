"""File-format round trips and end-to-end runs of the command line."""

import json

from tatekit import cli
from tatekit.errors import InvalidPresentation
from tatekit.exactlin import AbelianInvariants
from tatekit.formats import (
    parse_complex,
    parse_module,
    render_browder,
    render_complex,
    render_module,
    render_row_table,
)
from tatekit.gallery import lens_complex, product_complex, random_free_complex
from tatekit.groupring import ElementaryAbelianGroup
from tatekit.modpres import trivial_module
from tatekit.resolve import syzygy
from tatekit.surgery import BrowderReport, dimension_rows


def test_complex_round_trip_is_bit_exact():
    for p, r in [(2, 1), (3, 1), (2, 2)]:
        g = ElementaryAbelianGroup(p, r)
        for seed in range(3):
            c = random_free_complex(g, [2, 3, 2], seed)
            text = render_complex(c)
            again = render_complex(parse_complex(text))
            assert text == again, (p, r, seed)


def test_complex_round_trip_preserves_the_data():
    c = product_complex(2, [1, 1])
    d = parse_complex(render_complex(c))
    assert d.group.p == 2 and d.group.r == 2
    assert [d.rank(i) for i in range(3)] == [1, 2, 1]
    for i in (1, 2):
        assert d.differential(i).entries == c.differential(i).entries


def test_parse_complex_rejects_malformed_text():
    good = render_complex(lens_complex(2, 1))
    cases = [
        "deg 0 rank 1",  # no group header
        "group 2\ndeg 0 rank 1",  # short header
        "group 4 1\ndeg 0 rank 1",  # composite order
        "group 2 1\ndeg 0 rank 1\ndeg 0 rank 2",  # duplicate degree
        "group 2 1\ndeg 0 rank -1",  # negative rank
        "group 2 1\ndeg 0 rank 1\nd 1\n1 1",  # d without a source degree
        good + "\nextra",  # trailing garbage
        good.replace("-1 1", "-1 1 1"),  # wrong entry width
    ]
    for text in cases:
        try:
            parse_complex(text)
        except ValueError:
            pass
        else:
            raise AssertionError(f"parse accepted: {text!r}")


def test_parse_complex_ignores_comments_and_blanks():
    text = render_complex(lens_complex(2, 2))
    noisy = "# a sphere\n\n" + text.replace("\n", "\n# noise\n", 1)
    assert render_complex(parse_complex(noisy)) == text


def test_module_round_trip():
    g = ElementaryAbelianGroup(2, 2)
    m = syzygy(trivial_module(g), 1)
    text = render_module(m)
    m2 = parse_module(text, g)
    assert m2.gens == m.gens
    assert m2.relations.data == m.relations.data
    assert [a.data for a in m2.actions] == [a.data for a in m.actions]
    assert render_module(m2) == text


def test_parse_module_trivial_literal():
    g = ElementaryAbelianGroup(3, 2)
    m = parse_module("trivial", g)
    assert m.gens == 1
    assert m.invariants().free_rank == 1


def test_parse_module_validates_the_presentation():
    g = ElementaryAbelianGroup(2, 1)
    # action of order 3 over a p = 2 group
    text = "gens 1\nrelations 0\naction 1\n-1"
    m = parse_module(text, g)
    assert m.actions[0].data == [[-1]]
    bad = "gens 2\nrelations 0\naction 1\n0 -1\n1 -1"
    try:
        parse_module(bad, g)
    except InvalidPresentation:
        pass
    else:
        raise AssertionError("expected InvalidPresentation for an order-3 action")


def test_render_browder_failure_branch():
    report = BrowderReport(8, [(1, AbelianInvariants((3,), 0), 3)], 3, False)
    text = render_browder(report)
    assert "DOES NOT DIVIDE" in text
    assert "group order 8" in text
    assert "H_1" in text


def test_render_row_table_pinned_example():
    assert render_row_table(dimension_rows(2, [3, 2])) == "{3,2},{5}\n"


def test_cli_rows_pinned_output(capsys):
    assert cli.main(["rows", "--dims", "3,2"]) == 0
    assert capsys.readouterr().out == "{3,2},{5}\n"
    assert cli.main(["rows", "--dims", "3,2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["separated"] is True
    assert data["rows"] == {"1": [2, 3], "2": [5]}
    assert data["schedule"] == [
        {"sources": [2], "target": 3},
        {"sources": [5], "target": 6},
    ]


def test_cli_tate_pinned_output(capsys):
    code = cli.main(
        ["tate", "--p", "2", "--r", "2", "--module", "trivial", "--deg", "0..0"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "Ĥ^0 = Z/4" in out


def test_cli_tate_handles_negative_ranges(capsys):
    code = cli.main(
        ["tate", "--p", "3", "--r", "1", "--module", "trivial", "--deg", "-2..1"]
    )
    assert code == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 4
    assert lines[0].startswith("Ĥ^-2")


def _gen(tmp_path, capsys, args, name):
    """Run a gen subcommand and catch its stdout in a file, the way a
    shell redirect would."""
    assert cli.main(["gen"] + args) == 0
    path = tmp_path / name
    path.write_text(capsys.readouterr().out)
    return path


def test_cli_gen_homology_browder_pipeline(tmp_path, capsys):
    path = _gen(tmp_path, capsys, ["product", "--p", "2", "--ks", "1,1"],
                "torus.cx")
    assert cli.main(["homology", "--in", str(path), "--deg", "0..2"]) == 0
    out = capsys.readouterr().out
    assert "H_1 = Z^2" in out
    assert cli.main(["browder", "--in", str(path)]) == 0
    out = capsys.readouterr().out
    assert "product 4 DIVIDES group order 4" in out


def test_cli_browder_json(tmp_path, capsys):
    path = _gen(tmp_path, capsys, ["lens", "--p", "3", "--k", "2"], "c.cx")
    assert cli.main(["browder", "--in", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["group_order"] == 3
    assert data["divides"] is True
    assert data["product"] % 3 == 0
    assert [row["degree"] for row in data["rows"]] == [1, 2, 3]


def test_cli_glue_writes_a_parseable_complex(tmp_path, capsys):
    src = _gen(tmp_path, capsys, ["lens", "--p", "2", "--k", "2"], "in.cx")
    dst = tmp_path / "out.cx"
    assert cli.main(["glue", "--in", str(src), "--m", "0", "--n", "1",
                     "--out", str(dst)]) == 0
    out = capsys.readouterr().out
    assert "verdict ok" in out
    glued = parse_complex(dst.read_text())
    assert cli.main(["homology", "--in", str(dst), "--deg", "0..0"]) == 0
    h0 = capsys.readouterr().out
    assert "H_0 = 0" in h0
    assert glued.group.p == 2


def test_cli_gluerows_schedule(tmp_path, capsys):
    src = _gen(tmp_path, capsys, ["lens", "--p", "2", "--k", "2"], "in.cx")
    code = cli.main(["gluerows", "--in", str(src), "--schedule", "2->3;1->3"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("verdict ok") == 2


def test_cli_syzygy_emits_module_format(tmp_path, capsys):
    assert cli.main(["syzygy", "--p", "2", "--r", "2", "--module", "trivial",
                     "--n", "1"]) == 0
    out = capsys.readouterr().out
    g = ElementaryAbelianGroup(2, 2)
    m = parse_module(out, g)
    assert m.gens == syzygy(trivial_module(g), 1).gens


def test_cli_exponents(capsys):
    code = cli.main(
        ["exponents", "--p", "2", "--r", "1", "--module", "trivial",
         "--deg", "1..4"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "H^2" in out and "exponent 2" in out


def test_cli_error_exits(tmp_path, capsys):
    # missing file
    assert cli.main(["homology", "--in", str(tmp_path / "nope.cx"),
                     "--deg", "0..1"]) == 2
    assert "error:" in capsys.readouterr().err
    # malformed range
    assert cli.main(["tate", "--p", "2", "--r", "1", "--module", "trivial",
                     "--deg", "1..x"]) == 2
    assert "error:" in capsys.readouterr().err
    # malformed module file
    bad = tmp_path / "bad.mod"
    bad.write_text("gens x")
    assert cli.main(["tate", "--p", "2", "--r", "1", "--module", str(bad),
                     "--deg", "0..0"]) == 2
    assert "error:" in capsys.readouterr().err
    # glue across a homology gap
    torus = _gen(tmp_path, capsys, ["product", "--p", "2", "--ks", "1,1"],
                 "t.cx")
    assert cli.main(["glue", "--in", str(torus), "--m", "0", "--n", "2"]) == 2
    assert "blocking" in capsys.readouterr().err


def test_cli_browder_failure_exit_code(tmp_path, capsys, monkeypatch):
    path = _gen(tmp_path, capsys, ["lens", "--p", "2", "--k", "1"], "c.cx")

    def fake(complex_):
        return BrowderReport(2, [], 1, False)

    monkeypatch.setattr(cli, "browder_check", fake)
    assert cli.main(["browder", "--in", str(path)]) == 3
    assert "DOES NOT DIVIDE" in capsys.readouterr().out


def test_cli_gen_random_round_trip(tmp_path, capsys):
    path = _gen(tmp_path, capsys, ["random", "--p", "3", "--r", "1",
                                   "--ranks", "2,2,1", "--seed", "5"], "r.cx")
    g = ElementaryAbelianGroup(3, 1)
    want = render_complex(random_free_complex(g, [2, 2, 1], 5))
    assert path.read_text() == want
