import pytest

from ldcodes import path_counting
from ldcodes.cli import main

P10 = "10 9\n" + "".join(f"{i} {i + 1}\n" for i in range(1, 10))


@pytest.fixture
def p10(tmp_path):
    f = tmp_path / "path10.graph"
    f.write_text(P10)
    return str(f)


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def test_gamma(run, p10):
    assert run("gamma", p10) == (0, "gamma=4\n", "")


def test_gamma_human(run, p10):
    assert run("--output", "human", "gamma", p10)[1] == "location-domination number: 4\n"


def test_enumerate(run, p10):
    assert run("enumerate", p10) == (0, "gamma=4\ncount=1\ncode=2,4,7,9\n", "")


def test_enumerate_max_report(run, tmp_path):
    f = tmp_path / "p7"
    f.write_text("7 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n")
    code, out, _ = run("enumerate", str(f), "--max-report", "1")
    assert out == "gamma=3\ncount=3\ncode=1,4,6\n"


def test_forced_both(run, p10):
    assert run("forced", p10, "--method", "both") == (0, "forced=2,4,7,9\nagreement=yes\n", "")


@pytest.mark.parametrize("method", ["oracle", "characterization"])
def test_forced_single(run, p10, method):
    assert run("forced", p10, "--method", method)[1] == "forced=2,4,7,9\n"


def test_void(run, p10):
    assert run("void", p10) == (0, "void=1,3,5,6,8,10\n", "")


COLOUR_P10 = """\
# colour graph: vertices 0..10 (0 is auxiliary), 16 edges
0 1 colour=2
0 2 colour=2
0 4 colour=4
0 5 colour=4
0 6 colour=7
0 7 colour=7
0 9 colour=9
0 10 colour=9
1 2 colour=2
1 3 colour=4
3 5 colour=2
4 5 colour=4
6 7 colour=7
6 8 colour=9
8 10 colour=7
9 10 colour=9
"""


def test_colour_graph(run, p10):
    assert run("colour-graph", p10, "--code", "2,4,7,9") == (0, COLOUR_P10, "")


def test_colour_graph_verify(run, p10):
    code, out, _ = run("colour-graph", p10, "--code", "2,4,7,9", "--verify", "--two-edge-subgraph", "forced")
    assert code == 0
    tail = out[len(COLOUR_P10):].splitlines()
    assert tail == [f"check_{c}=pass" for c in ("i", "ii", "iii", "iv", "v", "vi", "vii", "viii")] + [
        "h_colours=2,4,7,9",
        "h_vertices=7",
        "h_edges=8",
        "h_components=1",
        "h_bipartite=True",
        "h_cactus=True",
        "h_bound=tight",
    ]


def test_colour_graph_rejects_non_code(run, p10):
    code, out, err = run("colour-graph", p10, "--code", "2,4")
    assert code == 2 and "not an LD-code" in err


def test_count_paths(run):
    code, out, _ = run("count-paths", "--n-max", "12", "--verify-brute", "12")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n=1 recurrence=1 closed=- brute=1"
    assert lines[8] == "n=9 recurrence=8 closed=8 brute=8"
    assert lines[11] == "n=12 recurrence=4 closed=4 brute=4"
    assert lines[-1] == "agreement=yes"


def test_count_paths_without_brute(run):
    code, out, _ = run("count-paths", "--n-max", "6")
    assert out.splitlines()[5] == "n=6 recurrence=8 closed=8 brute=-"


def test_gen_path(run):
    assert run("gen", "path", "3") == (0, "3 2\n1 2\n2 3\n", "")


def test_gen_broom_to_file(run, tmp_path):
    f = tmp_path / "b.graph"
    assert run("gen", "broom", "2", "2", "-o", str(f))[0] == 0
    assert f.read_text() == "4 3\n1 2\n2 3\n2 4\n"


@pytest.mark.parametrize("fam, params, header", [
    ("cycle", ["4"], "4 4"),
    ("star", ["3"], "4 3"),
    ("voidext", ["2"], "5 4"),
])
def test_gen_families(run, fam, params, header):
    assert run("gen", fam, *params)[1].splitlines()[0] == header


@pytest.fixture
def cnf(tmp_path):
    f = tmp_path / "f.cnf"
    f.write_text("p cnf 2 1\n1 2 -1 0\n")
    return str(f)


def test_gen_reduction(run, cnf):
    out = run("gen", "reduction", cnf)[1].splitlines()
    assert out[:4] == ["# 1 x_1", "# 2 xbar_1", "# 3 a_1", "# 4 b_1"]
    assert out[11:13] == ["# 12 w", "# 13 v"]
    assert out[13] == "13 15"


def test_verify_reduction(run, cnf):
    code, out, _ = run("verify-reduction", cnf)
    assert code == 0
    assert out.splitlines()[:6] == [
        "satisfiable=True", "gamma=6", "expected_gamma=6", "count=56", "w_forced=False", "v_void=False",
    ]


def test_verify_reduction_unsat(run, tmp_path):
    f = tmp_path / "u.cnf"
    f.write_text("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")
    code, out, _ = run("verify-reduction", str(f))
    assert code == 0 and "w_forced=True\nv_void=True\n" in out


def test_check_bounds(run, p10):
    code, out, _ = run("check-bounds", p10)
    assert code == 0
    assert out == (
        "n=10\ngamma=4\nk=4\nforced=2,4,7,9\nslack_two_thirds=0\nslack_two_fifths=0\n"
        "slack_gamma=3\ntight_two_thirds=True\ntight_two_fifths=True\nbounds=hold\n"
    )


def test_reproduce_only_paths(run, monkeypatch):
    monkeypatch.setenv("LD_SEED", "7")
    code, out, _ = run("reproduce-all", "--only", "paths")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "seed=7"
    assert [l.split()[1] for l in lines[1:5]] == ["1", "2", "3", "4"]
    assert all(l.startswith("[PASS]") for l in lines[1:5])
    assert lines[5:] == ["passed=4", "failed=0"]


def test_reproduce_mutation_fails(run, monkeypatch):
    bad = dict(path_counting.BASE_CASES)
    bad[(5, 2)] = 5
    monkeypatch.setattr(path_counting, "BASE_CASES", bad)
    code, out, _ = run("reproduce-all", "--only", "4", "--seed", "1")
    assert code == 1
    assert out.splitlines()[1].startswith("[FAIL]  4")


@pytest.mark.parametrize("argv", [
    [],
    ["gamma"],
    ["nonsense"],
    ["forced", "x", "--method", "magic"],
    ["count-paths"],
])
def test_usage_errors(run, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["gamma", "/nonexistent/file"],
    ["gen", "path"],
    ["gen", "cycle", "2"],
    ["reproduce-all", "--only", "bogus"],
    ["count-paths", "--n-max", "5", "--verify-brute", "30"],
])
def test_input_errors(run, argv):
    assert run(*argv)[0] == 2


def test_bad_graph_file(run, tmp_path):
    f = tmp_path / "bad"
    f.write_text("3 2\n1 2\n")
    code, _, err = run("gamma", str(f))
    assert code == 2 and err.startswith("ld gamma: error:")
