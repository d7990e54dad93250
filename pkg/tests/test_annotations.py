import pytest

from optprune.annotations import (
    scan_guards,
    verify_coverage,
    verify_header,
)
from optprune.errors import UnbalancedDirective
from optprune.model import AlternativeGroup, OptionCatalog, RuntimeOption


def catalog_for(*guards):
    options = tuple(
        RuntimeOption(f"opt{i}", g, (f"--opt{i}",)) for i, g in enumerate(guards)
    )
    return OptionCatalog(options, (), ())


CABAC_CATALOG = OptionCatalog(
    (
        RuntimeOption("cabac", "CABAC_YES", ("--cabac",), "cabac"),
        RuntimeOption("no-cabac", "CABAC_NO", ("--no-cabac",), "cabac"),
    ),
    (AlternativeGroup("cabac", frozenset({"cabac", "no-cabac"})),),
    (),
)

ENCODER_EXCERPT = """\
/* encoder.c */
#if CABAC_YES //option --cabac
    if( h->param.b_cabac )
        x264_cabac_init( h );
#endif
#if CABAC_YES && CABAC_NO
    else
#endif
#if CABAC_NO //option --no-cabac
        x264_cavlc_init( h );
#endif
"""


class TestScanGuards:
    def test_alternative_pattern_three_regions(self, tmp_path):
        (tmp_path / "encoder.c").write_text(ENCODER_EXCERPT)
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert [r.expression for r in report.regions] == [
            ("CABAC_YES",), ("CABAC_YES", "CABAC_NO"), ("CABAC_NO",),
        ]
        assert report.per_guard_counts == {"CABAC_YES": 2, "CABAC_NO": 2}
        assert [(r.start_line, r.end_line) for r in report.regions] == [
            (2, 5), (6, 8), (9, 11),
        ]
        assert not report.unsupported
        assert not report.unbalanced

    def test_no_directives_empty_report(self, tmp_path):
        (tmp_path / "plain.c").write_text("int main(void) { return 0; }\n")
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert report.regions == []
        assert report.declared_guards_unused == {"CABAC_YES", "CABAC_NO"}

    def test_unterminated_guard_if_raises(self, tmp_path):
        (tmp_path / "bad.c").write_text("#if CABAC_YES\nint x;\n")
        with pytest.raises(UnbalancedDirective, match="bad.c:1"):
            scan_guards(tmp_path, CABAC_CATALOG)

    def test_stray_endif_recorded_not_raised(self, tmp_path):
        (tmp_path / "odd.c").write_text("int x;\n#endif\n")
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert [(str(f), l) for f, l in report.unbalanced] == [("odd.c", 2)]

    def test_nesting_and_non_guard_conditionals(self, tmp_path):
        (tmp_path / "nest.c").write_text(
            "#ifdef _WIN32\n"
            "#if CABAC_YES\n"
            "void f(void);\n"
            "#endif\n"
            "#endif\n"
            "#if 0\n"
            "dead();\n"
            "#endif\n"
        )
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert [(r.start_line, r.end_line) for r in report.regions] == [(2, 4)]

    def test_nested_regions_disjoint_or_nested(self, tmp_path):
        (tmp_path / "n.c").write_text(
            "#if CABAC_YES\n"
            "#if CABAC_NO\n"
            "both();\n"
            "#endif\n"
            "#endif\n"
            "#if CABAC_NO\n"
            "only();\n"
            "#endif\n"
        )
        report = scan_guards(tmp_path, CABAC_CATALOG)
        spans = [(r.start_line, r.end_line) for r in report.regions]
        for a in spans:
            for b in spans:
                if a == b:
                    continue
                nested = (a[0] < b[0] and b[1] < a[1]) or (b[0] < a[0] and a[1] < b[1])
                disjoint = a[1] < b[0] or b[1] < a[0]
                assert nested or disjoint

    def test_undeclared_guard_like_macro_seen(self, tmp_path):
        (tmp_path / "u.c").write_text("#if MBTREE_YES\nx();\n#endif\n")
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert report.undeclared_guards_seen == {"MBTREE_YES"}
        assert report.regions == []

    def test_unsupported_expressions_flagged(self, tmp_path):
        (tmp_path / "e.c").write_text(
            "#if !CABAC_YES\na();\n#endif\n"
            "#if CABAC_YES || CABAC_NO\nb();\n#endif\n"
            "#if defined(CABAC_YES)\nc();\n#endif\n"
            "#ifdef CABAC_NO\nd();\n#endif\n"
        )
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert len(report.unsupported) == 4
        assert report.regions == []

    def test_else_on_guard_region_flagged(self, tmp_path):
        (tmp_path / "e.c").write_text(
            "#if CABAC_YES\na();\n#else\nb();\n#endif\n"
        )
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert any("else" in d.message for d in report.unsupported)

    def test_default_define_block_is_declaration_not_usage(self, tmp_path):
        (tmp_path / "removeoption.h").write_text(
            "#ifndef CABAC_YES\n#define CABAC_YES 1\n#endif\n"
            "#ifndef CABAC_NO\n#define CABAC_NO 1\n#endif\n"
        )
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert report.regions == []
        assert not report.unsupported
        assert report.declared_guards_unused == {"CABAC_YES", "CABAC_NO"}

    def test_order_independence(self, tmp_path):
        (tmp_path / "zz.c").write_text("#if CABAC_NO\nz();\n#endif\n")
        (tmp_path / "aa.c").write_text("#if CABAC_YES\na();\n#endif\n")
        report = scan_guards(tmp_path, CABAC_CATALOG)
        again = scan_guards(tmp_path, CABAC_CATALOG)
        assert report.regions == again.regions
        assert [str(r.file) for r in report.regions] == ["aa.c", "zz.c"]

    def test_line_continuations(self, tmp_path):
        (tmp_path / "c.c").write_text(
            "#if CABAC_YES && \\\n    CABAC_NO\nboth();\n#endif\n"
        )
        report = scan_guards(tmp_path, CABAC_CATALOG)
        assert [r.expression for r in report.regions] == [
            ("CABAC_YES", "CABAC_NO")
        ]


class TestVerifyHeader:
    def write_header(self, tmp_path, text):
        path = tmp_path / "removeoption.h"
        path.write_text(text)
        return path

    def good_header(self, guards):
        return "".join(
            f"#ifndef {g}\n#define {g} 1\n#endif\n" for g in guards
        )

    def test_complete_header_no_defects(self, tmp_path, x264_manifest):
        catalog = x264_manifest.catalog
        path = self.write_header(tmp_path, self.good_header(catalog.guard_macros()))
        assert verify_header(path, catalog) == []

    def test_missing_guard_named(self, tmp_path):
        catalog = catalog_for("CABAC_YES", "CABAC_NO")
        path = self.write_header(
            tmp_path, "#ifndef CABAC_YES\n#define CABAC_YES 1\n#endif\n"
        )
        defects = verify_header(path, catalog)
        assert len(defects) == 1
        assert "CABAC_NO" in defects[0].message

    def test_unconditional_define_not_overridable(self, tmp_path):
        catalog = catalog_for("CABAC_YES")
        path = self.write_header(tmp_path, "#define CABAC_YES 1\n")
        defects = verify_header(path, catalog)
        assert len(defects) == 1
        assert "not overridable" in defects[0].message

    def test_bad_default_value(self, tmp_path):
        catalog = catalog_for("CABAC_YES")
        path = self.write_header(
            tmp_path, "#ifndef CABAC_YES\n#define CABAC_YES 2\n#endif\n"
        )
        defects = verify_header(path, catalog)
        assert any("must be 0 or 1" in d.message for d in defects)

    def test_minienc_header_clean(self, minienc_manifest):
        defects = verify_header(
            minienc_manifest.target.guard_header, minienc_manifest.catalog
        )
        assert defects == []


class TestVerifyCoverage:
    def test_minienc_tree_passes(self, minienc_manifest):
        report = scan_guards(
            minienc_manifest.target.source_root, minienc_manifest.catalog
        )
        verdict = verify_coverage(report, minienc_manifest.catalog)
        assert verdict.passed
        assert str(verdict) == "PASS"

    def test_unused_guard_fails(self, tmp_path):
        catalog = catalog_for("WEIGHTB_YES", "WEIGHTB_NO")
        (tmp_path / "w.c").write_text("#if WEIGHTB_YES\ny();\n#endif\n")
        report = scan_guards(tmp_path, catalog)
        verdict = verify_coverage(report, catalog)
        assert not verdict.passed
        assert verdict.unused_guards == {"WEIGHTB_NO"}
        assert "WEIGHTB_NO" in str(verdict)

    def test_undeclared_guard_fails(self, tmp_path):
        catalog = catalog_for("CABAC_YES")
        (tmp_path / "m.c").write_text(
            "#if CABAC_YES\na();\n#endif\n#if MBTREE_YES\nb();\n#endif\n"
        )
        report = scan_guards(tmp_path, catalog)
        verdict = verify_coverage(report, catalog)
        assert not verdict.passed
        assert verdict.undeclared_guards == {"MBTREE_YES"}

    def test_pass_is_necessary_not_sufficient(self):
        """The compile-fault tree still passes the static check: whether
        annotations capture the whole option is the dynamic oracle's call."""
        from optprune.manifest import load_manifest
        from .conftest import FIXTURES

        manifest = load_manifest(FIXTURES / "minienc-broken-compile.toml")
        report = scan_guards(manifest.target.source_root, manifest.catalog)
        assert verify_coverage(report, manifest.catalog).passed

    def test_combined_else_region_detected_in_minienc(self, minienc_manifest):
        report = scan_guards(
            minienc_manifest.target.source_root, minienc_manifest.catalog
        )
        two_macro = [r for r in report.regions if len(r.expression) == 2]
        assert ("FAST_YES", "FAST_NO") in [r.expression for r in two_macro]
        assert ("PSY_YES", "PSY_NO") in [r.expression for r in two_macro]
