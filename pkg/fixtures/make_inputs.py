#!/usr/bin/env python3
"""Regenerate the checked-in benchmark inputs (fixed-seed, stable output)."""

import random
from pathlib import Path

HERE = Path(__file__).parent
SIZES = {"v1.bin": 2048, "v2.bin": 3072, "v3.bin": 4096}


def main():
    out_dir = HERE / "inputs"
    out_dir.mkdir(exist_ok=True)
    for name, size in SIZES.items():
        rng = random.Random(f"minienc:{name}")
        data = bytes(rng.randrange(256) for _ in range(size))
        (out_dir / name).write_bytes(data)
        print(f"wrote {out_dir / name} ({size} bytes)")


if __name__ == "__main__":
    main()
