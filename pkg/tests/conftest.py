from __future__ import annotations

from pathlib import Path

import pytest

from optprune.build import BuildArtifact, build_variant
from optprune.manifest import Manifest, load_manifest
from optprune.model import enumerate_scenarios

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"
MANIFESTS = REPO / "manifests"

MINIENC_MANIFEST = FIXTURES / "minienc.toml"
X264_MANIFEST = MANIFESTS / "x264-table1.toml"


@pytest.fixture(scope="session")
def minienc_manifest() -> Manifest:
    return load_manifest(MINIENC_MANIFEST)


@pytest.fixture(scope="session")
def x264_manifest() -> Manifest:
    return load_manifest(X264_MANIFEST)


class Builds:
    """Lazily builds and caches minienc plan binaries for the session."""

    def __init__(self, manifest: Manifest, out_root: Path):
        self.manifest = manifest
        self.out_root = out_root
        self.plans = {p.id: p for p in enumerate_scenarios(manifest.catalog)}
        self._cache: dict[str, BuildArtifact] = {}

    def artifact(self, plan_id: str) -> BuildArtifact:
        if plan_id not in self._cache:
            self._cache[plan_id] = build_variant(
                self.manifest.target, self.plans[plan_id], self.out_root,
                self.manifest.catalog,
            )
        return self._cache[plan_id]


@pytest.fixture(scope="session")
def minienc_builds(minienc_manifest, tmp_path_factory) -> Builds:
    return Builds(minienc_manifest, tmp_path_factory.mktemp("minienc-builds"))
