#!/usr/bin/env python3
"""Download the SNAP ego-Facebook edge list used by the benchmarks.

Fetches facebook_combined.txt.gz from snap.stanford.edu, decompresses
it to data/facebook_combined.txt (or the path given as the first
argument), and sanity-checks the node and edge counts.
"""

import gzip
import sys
import urllib.request
from pathlib import Path

URL = "https://snap.stanford.edu/data/facebook_combined.txt.gz"
DEFAULT_DEST = Path(__file__).resolve().parent.parent / "data" / "facebook_combined.txt"


def main():
    dest = Path(sys.argv[1]) if len(sys.argv) > 1 else DEFAULT_DEST
    dest.parent.mkdir(parents=True, exist_ok=True)
    if dest.exists():
        print(f"{dest} already exists; delete it to re-download")
        return 0
    print(f"downloading {URL} ...")
    with urllib.request.urlopen(URL, timeout=60) as resp:
        payload = gzip.decompress(resp.read())
    dest.write_bytes(payload)

    nodes = set()
    edges = 0
    for line in payload.decode().splitlines():
        if not line or line.startswith("#"):
            continue
        u, v = line.split()
        nodes.update((u, v))
        edges += 1
    print(f"wrote {dest}: {len(nodes)} nodes, {edges} edge lines")
    if len(nodes) != 4039 or edges != 88234:
        print("warning: counts differ from the published 4039 / 88234",
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
