import pytest

from optprune.errors import ParseError, ValidationError
from optprune.manifest import load_catalog, load_manifest

MINIMAL = """
inputs = []

[target]
name = "demo"
source_root = "src"
guard_header = "removeoption.h"
build_cmd = "cc -o {OUT} {DEFINES} demo.c"
run_cmd_template = "{BIN} {FLAGS} -o {OUTPUT} {INPUT}"
rejection_pattern = "not available"

[[options]]
name = "x"
guard = "X_YES"
cli_tokens = ["--x"]

[[presets]]
name = "p"
cli_token = "--preset=p"
used = ["x"]
unused = []
"""


def write(tmp_path, text):
    path = tmp_path / "m.toml"
    path.write_text(text)
    return path


def test_minienc_manifest_loads(minienc_manifest):
    catalog = minienc_manifest.catalog
    assert len(catalog.options) == 6
    assert len(catalog.presets) == 4
    assert {g.id for g in catalog.groups} == {"fastmode", "psymode"}
    assert minienc_manifest.repetitions == 5
    assert minienc_manifest.alpha == 0.05
    assert len(minienc_manifest.inputs) == 3
    assert all(p.exists() for p in minienc_manifest.inputs)
    assert [m.name for m in minienc_manifest.metrics] == ["time-units", "ratio"]


def test_table1_manifest_loads(x264_manifest):
    catalog = x264_manifest.catalog
    assert len(catalog.options) == 10
    assert len(catalog.presets) == 10
    assert len(catalog.groups) == 5


def test_minimal_manifest(tmp_path):
    manifest = load_manifest(write(tmp_path, MINIMAL))
    assert manifest.target.name == "demo"
    assert manifest.repetitions == 5  # default
    assert manifest.alpha == 0.05  # default
    assert load_catalog(write(tmp_path, MINIMAL)).option_names() == ("x",)


def test_malformed_toml(tmp_path):
    with pytest.raises(ParseError):
        load_manifest(write(tmp_path, "[target\nname="))


def test_missing_target_field(tmp_path):
    broken = MINIMAL.replace('build_cmd = "cc -o {OUT} {DEFINES} demo.c"\n', "")
    with pytest.raises(ParseError, match="build_cmd"):
        load_manifest(write(tmp_path, broken))


def test_zero_options_rejected(tmp_path):
    broken = MINIMAL.split("[[options]]")[0]
    with pytest.raises(ValidationError, match="no options"):
        load_manifest(write(tmp_path, broken))


def test_single_member_group_rejected(tmp_path):
    broken = MINIMAL.replace(
        'cli_tokens = ["--x"]', 'cli_tokens = ["--x"]\ngroup = "x"'
    )
    with pytest.raises(ValidationError, match="at least 2"):
        load_manifest(write(tmp_path, broken))


def test_usage_must_cover_all_options(tmp_path):
    broken = MINIMAL.replace('used = ["x"]', "used = []")
    with pytest.raises(ValidationError, match="cover exactly"):
        load_manifest(write(tmp_path, broken))


def test_preset_usage_overlap_rejected(tmp_path):
    broken = MINIMAL.replace('unused = []', 'unused = ["x"]')
    with pytest.raises(ValidationError, match="both used and unused"):
        load_manifest(write(tmp_path, broken))


def test_dangling_preset_option_rejected(tmp_path):
    broken = MINIMAL.replace('used = ["x"]', 'used = ["x", "ghost"]')
    with pytest.raises(ValidationError, match="ghost"):
        load_manifest(write(tmp_path, broken))


def test_misplaced_top_level_keys_rejected(tmp_path):
    # Keys after [target] silently join that table in TOML; the loader
    # must refuse them instead of ignoring inputs/repetitions/alpha.
    broken = MINIMAL.replace("inputs = []\n\n[target]", "[target]\ninputs = []")
    with pytest.raises(ParseError, match="unknown .target. keys"):
        load_manifest(write(tmp_path, broken))


def test_bad_metric_pattern_rejected(tmp_path):
    broken = MINIMAL + '\n[[metrics]]\nname = "m"\nunit = "u"\npattern = "(["\n'
    with pytest.raises(ParseError, match="bad pattern"):
        load_manifest(write(tmp_path, broken))


def test_paths_resolve_relative_to_manifest(tmp_path):
    sub = tmp_path / "nested"
    sub.mkdir()
    manifest = load_manifest(write(sub, MINIMAL))
    assert manifest.target.source_root == sub / "src"
    assert manifest.target.guard_header == sub / "src" / "removeoption.h"
