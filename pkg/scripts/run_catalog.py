#!/usr/bin/env python3
"""Compute and print the invariant reports and family verdicts for every
catalog entry.

Usage: python3 scripts/run_catalog.py [--json]
"""

import argparse
import json
import sys
import time

from mapgerm.catalog import ENTRIES
from mapgerm.cli import render_report_text, render_verdict_text, report_to_json, verdict_to_json
from mapgerm.family import family_verdict
from mapgerm.invariants import invariant_report
from mapgerm.parser import load_germ_spec
from mapgerm.germ import validate_map_germ


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    docs = {}
    for entry in ENTRIES:
        g = validate_map_germ(load_germ_spec(entry.spec))
        start = time.monotonic()
        if entry.kind == "germ":
            result = invariant_report(g)
            doc = report_to_json(result)
            text = render_report_text(result)
        else:
            result = family_verdict(g)
            doc = verdict_to_json(result)
            text = render_verdict_text(result)
        elapsed = time.monotonic() - start
        docs[entry.name] = doc
        if not args.json:
            print(f"=== {entry.name} ({entry.kind}, {elapsed:.2f}s) ===")
            print(text)
            print()
    if args.json:
        print(json.dumps(docs, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
