#!/usr/bin/env python3
"""Render the standard diagram set to an output directory."""

import argparse
import os
import sys

sys.path.insert(0, "src")

from cayleycover import svgfig


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--k", type=int, default=3, help="radius for the 2-D tilings")
    args = parser.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    jobs = {
        f"diamond-tiling-k{args.k}.svg": svgfig.diamond_tiling_svg(args.k),
        f"order2-cover-k{args.k}.svg": svgfig.order2_cover_svg(args.k),
        "face-coverage.svg": svgfig.face_coverage_svg(),
    }
    for name, text in jobs.items():
        path = os.path.join(args.out_dir, name)
        with open(path, "w") as fh:
            fh.write(text)
        print(f"wrote {path} ({len(text)} bytes)")


if __name__ == "__main__":
    main()
