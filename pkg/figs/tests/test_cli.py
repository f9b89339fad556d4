from billiard_figs.cli import main


def test_list_recipes(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "entry-angles" in out
    assert "efficiency" in out


def test_render_single_and_all(artifact_dir, tmp_path, capsys):
    assert main(["render", "--recipe", "thermostat-law",
                 "--in", str(artifact_dir), "--out", str(tmp_path / "one")]) == 0
    assert (tmp_path / "one" / "thermostat-law.png").is_file()
    assert main(["render", "--recipe", "all",
                 "--in", str(artifact_dir), "--out", str(tmp_path / "all")]) == 0
    assert (tmp_path / "all" / "efficiency.svg").is_file()


def test_empty_input_dir_fails_nonzero(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    rc = main(["render", "--recipe", "entry-angles", "--in", str(empty), "--out", str(tmp_path / "o")])
    assert rc == 1
    out = tmp_path / "o"
    assert not out.exists() or not any(out.iterdir())


def test_unknown_recipe_fails(artifact_dir, tmp_path):
    assert main(["render", "--recipe", "bogus", "--in", str(artifact_dir), "--out", str(tmp_path)]) == 1
