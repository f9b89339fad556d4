"""figs command line: render recipes from a directory of CSV artifacts."""

from __future__ import annotations

import argparse
import sys

from billiard_figs.recipes import RECIPES, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="figs", description="Regenerate figures from CSV artifacts.")
    sub = parser.add_subparsers(dest="command", required=True)
    listing = sub.add_parser("list", help="list available recipes")  # noqa: F841
    rend = sub.add_parser("render", help="render one recipe (or all)")
    rend.add_argument("--recipe", required=True, help="recipe id, or 'all'")
    rend.add_argument("--in", dest="in_dir", required=True, help="directory with CSV artifacts")
    rend.add_argument("--out", dest="out_dir", required=True, help="output directory for images")
    rend.add_argument("--skip-missing", action="store_true",
                      help="with 'all': skip recipes whose inputs are absent")
    args = parser.parse_args(argv)

    if args.command == "list":
        for rid, recipe in sorted(RECIPES.items()):
            print(f"{rid:18s} <- {', '.join(recipe.inputs)}")
        return 0

    ids = sorted(RECIPES) if args.recipe == "all" else [args.recipe]
    failures = 0
    rendered = 0
    for rid in ids:
        try:
            paths = render(rid, args.in_dir, args.out_dir)
        except FileNotFoundError as exc:
            if args.recipe == "all" and args.skip_missing:
                print(f"skip {rid}: {exc}")
                continue
            print(f"error: {exc}", file=sys.stderr)
            failures += 1
            continue
        except (KeyError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            failures += 1
            continue
        rendered += 1
        print(f"rendered {rid}: " + ", ".join(str(p) for p in paths))
    if failures:
        return 1
    if rendered == 0:
        print("error: nothing rendered", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
