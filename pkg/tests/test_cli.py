import json

import numpy as np
import pytest

from zoned import fixture
from zoned.cli import (
    EXIT_CAP,
    EXIT_INPUT,
    EXIT_NO_CONVERGENCE,
    EXIT_OK,
    EXIT_ORDER,
    EXIT_RENDER,
    EXIT_VERIFY_FAILED,
    main,
)


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


@pytest.fixture
def three_point_files(tmp_path):
    space = write(tmp_path / "space.json", {
        "kind": "line-points", "params": {"coords": [-1, 0, 1]},
    })
    sites = write(tmp_path / "sites.json", {"sites": [[0], [2]]})
    return space, sites, tmp_path


def test_compute_order2_variant_r(three_point_files):
    space, sites, tmp = three_point_files
    out = tmp / "result.json"
    code = main(["compute", "--space", space, "--sites", sites,
                 "--mode", "order2", "--variant", "R", "--out", str(out)])
    assert code == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["components"] == [[0], [1, 2]]
    assert doc["kind"] == "zone"


def test_compute_interval_double(tmp_path):
    space = write(tmp_path / "space.json", {
        "kind": "line-points",
        "params": {"start": -3, "stop": 3, "step": "1/100"},
    })
    sites = write(tmp_path / "sites.json", {"sites": [
        {"loci": [{"type": "coord", "value": -3}]},
        {"loci": [{"type": "coord", "value": 3}]},
    ]})
    out = tmp_path / "result.json"
    code = main(["compute", "--space", space, "--sites", sites,
                 "--mode", "double", "--direction", "ascending", "--out", str(out)])
    assert code == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["components"][0] == list(range(0, 201))
    assert doc["components"][1] == list(range(400, 601))


def test_compute_order2_requires_two_groups(tmp_path):
    space = write(tmp_path / "space.json", {
        "kind": "line-points", "params": {"coords": [0, 1, 2, 3]},
    })
    sites = write(tmp_path / "sites.json", {"sites": [[0], [1], [3]]})
    code = main(["compute", "--space", space, "--sites", sites,
                 "--mode", "order2", "--out", str(tmp_path / "r.json")])
    assert code == EXIT_ORDER


def test_compute_game(three_point_files):
    space, sites, tmp = three_point_files
    out = tmp / "game.json"
    code = main(["compute", "--space", space, "--sites", sites,
                 "--mode", "game", "--policy", "sweep", "--out", str(out)])
    assert code == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["stable"] is True
    assert doc["components"] in ([[0], [1, 2]], [[0, 1], [2]])


def test_compute_game_non_convergence(three_point_files):
    space, sites, tmp = three_point_files
    code = main(["compute", "--space", space, "--sites", sites,
                 "--mode", "game", "--max-moves", "0",
                 "--out", str(tmp / "g.json")])
    assert code == EXIT_NO_CONVERGENCE


def test_verify_pass_fail_and_replay(three_point_files):
    space, sites, tmp = three_point_files
    good = write(tmp / "good.json", {"components": [[0], [1, 2]]})
    assert main(["verify", "--space", space, "--sites", sites,
                 "--candidate", good, "--kind", "zone"]) == EXIT_OK
    bad = write(tmp / "bad.json", {"components": [[0], [2]]})
    assert main(["verify", "--space", space, "--sites", sites,
                 "--candidate", bad, "--kind", "zone"]) == EXIT_VERIFY_FAILED
    # the same pair is a double zone diagram, so the double check passes
    assert main(["verify", "--space", space, "--sites", sites,
                 "--candidate", bad, "--kind", "double"]) == EXIT_OK
    # replay: computed output re-verifies with the same exit status
    out = tmp / "replay.json"
    main(["compute", "--space", space, "--sites", sites,
          "--mode", "order2", "--variant", "S", "--out", str(out)])
    assert main(["verify", "--space", space, "--sites", sites,
                 "--candidate", str(out), "--kind", "zone"]) == EXIT_OK


def test_uniq_reports(three_point_files, capsys):
    space, sites, tmp = three_point_files
    code = main(["uniq", "--space", space, "--sites", sites,
                 "--effort", "with-brute-force"])
    assert code == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["zone_count"] == 2
    assert doc["conditions"]["a"] is False


def test_uniq_cap_exceeded(three_point_files):
    space, sites, _ = three_point_files
    assert main(["uniq", "--space", space, "--sites", sites,
                 "--effort", "with-brute-force", "--cap", "3"]) == EXIT_CAP


def test_bad_json_reports_location(tmp_path, capsys):
    bad = tmp_path / "space.json"
    bad.write_text('{"kind": "line-points",')
    sites = write(tmp_path / "sites.json", {"sites": [[0], [1]]})
    code = main(["compute", "--space", str(bad), "--sites", str(sites),
                 "--mode", "double", "--out", str(tmp_path / "r.json")])
    assert code == EXIT_INPUT
    assert "line 1" in capsys.readouterr().err


def test_invalid_space_rejected(tmp_path):
    space = write(tmp_path / "space.json", {
        "kind": "finite-matrix", "params": {"entries": [[5, 1], [1, 0]]},
    })
    sites = write(tmp_path / "sites.json", {"sites": [[0], [1]]})
    code = main(["compute", "--space", space, "--sites", sites,
                 "--mode", "double", "--out", str(tmp_path / "r.json")])
    assert code == EXIT_INPUT


def test_missing_file(tmp_path):
    sites = write(tmp_path / "sites.json", {"sites": [[0], [1]]})
    assert main(["compute", "--space", str(tmp_path / "nope.json"),
                 "--sites", sites, "--mode", "double",
                 "--out", str(tmp_path / "r.json")]) == EXIT_INPUT


def test_render_rings_and_determinism(tmp_path):
    fx = fixture("rings")
    from zoned import iterate_double_zone
    from zoned.serialize import result_to_dict

    result = iterate_double_zone(fx.space, fx.sites)
    doc = result_to_dict(fx.space, fx.sites, result)
    res_path = write(tmp_path / "rings.json", doc)
    img1, img2 = tmp_path / "a.ppm", tmp_path / "b.ppm"
    assert main(["render", "--result", res_path, "--out", str(img1)]) == EXIT_OK
    assert main(["render", "--result", res_path, "--out", str(img2)]) == EXIT_OK
    blob = img1.read_bytes()
    assert blob == img2.read_bytes()
    assert blob.startswith(b"P6\n35 35\n255\n")
    pixels = np.frombuffer(blob.split(b"255\n", 1)[1], dtype=np.uint8).reshape(35, 35, 3)
    # region bands around the origin row: blue band, red-orange band, white gaps
    assert (pixels != 255).any(axis=2).sum() > 600


def test_render_without_neutral_cells_has_no_white(tmp_path):
    from zoned import grid2d_space, iterate_double_zone
    from zoned.serialize import resolve_sites, result_to_dict

    space = grid2d_space(0, 3, 0, 0, 1, "l1")
    sites = resolve_sites(space, [[0], [3]])
    result = iterate_double_zone(space, sites, "descending")
    doc = result_to_dict(space, sites, result)
    out = tmp_path / "strip.ppm"
    assert main(["render", "--result", str(write(tmp_path / "r.json", doc)),
                 "--out", str(out)]) == EXIT_OK
    blob = out.read_bytes()
    pixels = np.frombuffer(blob.split(b"255\n", 1)[1], dtype=np.uint8)
    assert not (pixels.reshape(-1, 3) == (255, 255, 255)).all(axis=1).any()


def test_render_needs_grid(three_point_files, tmp_path):
    space, sites, tmp = three_point_files
    out = tmp / "res.json"
    main(["compute", "--space", space, "--sites", sites,
          "--mode", "double", "--out", str(out)])
    assert main(["render", "--result", str(out),
                 "--out", str(tmp_path / "img.ppm")]) == EXIT_RENDER
