import json

from dimatch.cli import RunConfig, emit_graph, parse_graph, run
from dimatch.patterns import make_named, cycle, K4, S115

P6_TEXT = "6 5\n0 1\n1 2\n2 3\n3 4\n4 5\n"


def test_parse_roundtrip():
    g = parse_graph(P6_TEXT)
    assert emit_graph(g) == P6_TEXT


def test_parse_comments_and_blanks():
    text = "# a path\n\n3 2\n0 1\n# middle\n1 2\n"
    g = parse_graph(text)
    assert g.n == 3 and g.m == 2


def test_parse_errors_carry_line_numbers():
    code, out = run(RunConfig("solve"), text="3 2\n0 1\nwat\n")
    assert code == 2 and ":3:" in out
    code, out = run(RunConfig("solve"), text="3 5\n0 1\n")
    assert code == 2 and "announces" in out
    code, out = run(RunConfig("solve"), text="3 1\n0 0\n")
    assert code == 2 and "self-loop" in out


def test_solve_p6():
    code, out = run(RunConfig("solve"), text=P6_TEXT)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "DIM 2" and len(lines) == 3


def test_solve_c5_none():
    g = make_named(cycle(5))
    code, out = run(RunConfig("solve"), text=emit_graph(g))
    assert code == 1 and out.startswith("NONE")


def test_solve_k4_reason():
    g = make_named(K4)
    code, out = run(RunConfig("solve"), text=emit_graph(g))
    assert code == 1 and "K4" in out


def test_solve_json_shape():
    code, out = run(RunConfig("solve", fmt="json"), text=P6_TEXT)
    assert code == 0
    obj = json.loads(out)
    assert obj["mode"] == "solve" and obj["n"] == 6 and obj["m"] == 5
    assert obj["result"] == "found" and len(obj["edges"]) == 2
    assert "stats" in obj


def test_solve_xy_flag():
    cfg = RunConfig("solve", xy=(1, 2))
    code, out = run(cfg, text=P6_TEXT)
    assert code == 0 and out.splitlines()[0] == "DIM 2"
    cfg = RunConfig("solve", xy=(2, 3))
    code, out = run(cfg, text=P6_TEXT)
    assert code == 1 and out == "NONE"


def test_oracle_mode():
    code, out = run(RunConfig("oracle"), text=P6_TEXT)
    assert code == 0 and out.splitlines()[0] == "DIM 2"
    g = make_named(cycle(4))
    code, out = run(RunConfig("oracle"), text=emit_graph(g))
    assert code == 1 and out == "NONE"


def test_compare_mode():
    code, out = run(RunConfig("compare"), text=P6_TEXT)
    assert code == 0 and out.startswith("AGREE")
    g = make_named(cycle(5))
    code, out = run(RunConfig("compare"), text=emit_graph(g))
    assert code == 0 and out == "AGREE NONE"


def test_check_mode():
    code, out = run(RunConfig("check-s115"), text=P6_TEXT)
    assert code == 0 and out == "S115-FREE"
    g = make_named(S115)
    code, out = run(RunConfig("check-s115"), text=emit_graph(g))
    assert code == 3 and out.startswith("S115 WITNESS")


def test_generate_roundtrip_byte_identical():
    cfg = RunConfig("generate", n=12, p=0.2, seed=5, count=3)
    code, out = run(cfg)
    assert code == 0
    blocks = [b for b in out.split("\n\n") if b.strip()]
    assert len(blocks) == 3
    for block in blocks:
        g = parse_graph(block)
        assert emit_graph(g).rstrip("\n") == block.rstrip("\n")


def test_generate_deterministic():
    cfg = RunConfig("generate", n=10, p=0.3, seed=9, count=2)
    assert run(cfg) == run(cfg)


def test_compare_many_random_s115_free():
    for seed in range(25):
        gen = RunConfig("generate", n=12, p=0.25, seed=200 + seed, count=1)
        _, text = run(gen)
        code, out = run(RunConfig("compare"), text=text)
        assert code == 0, out


HV_TEXT = "22 25\n" + "\n".join(
    f"{u} {v}" for (u, v) in
    [(0, 1), (0, 2), (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 8), (3, 9),
     (4, 10), (4, 11), (5, 12), (5, 13), (6, 14), (6, 15), (7, 16), (7, 17),
     (8, 18), (9, 21), (10, 19), (12, 20), (14, 21), (18, 19), (19, 20),
     (20, 21)]) + "\n"


def test_solve_hypothesis_violation_exit_code():
    code, out = run(RunConfig("solve"), text=HV_TEXT)
    assert code == 3 and out.startswith("UNKNOWN")


def test_solve_strict_prints_witness():
    code, out = run(RunConfig("solve", strict=True), text=HV_TEXT)
    assert code == 3 and "witness:" in out


def test_solve_fallback_uses_oracle():
    code, out = run(RunConfig("solve", fallback=True), text=HV_TEXT)
    assert code == 1 and out.startswith("NONE")


def test_compare_unknown_on_violation():
    code, out = run(RunConfig("compare"), text=HV_TEXT)
    assert code == 3 and "UNKNOWN" in out and "NONE" in out
