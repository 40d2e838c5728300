#!/usr/bin/env python3
"""Fetch and prepare the eight benchmark datasets for `ordrank benchmark`.

Needs network access. For each dataset this script downloads the raw table
from a public source, applies the standard preparation, and writes
`data/benchmark/<name>.csv` with the feature columns first and the regression
target last, matching the committed `<name>.manifest` files:

  name         rows  features  preparation
  diabetes       43      2     age, base deficit -> C-peptide
  pyrimidines    74     27     QSAR attributes -> activity
  triazines     186     60     QSAR attributes -> activity
  machine       209      6     drops vendor/model and the ERP column
  autompg       392      7     drops rows with missing horsepower, keeps
                               cylinders..origin -> mpg
  boston        506     13     standard housing table -> MEDV
  stocks        950      9     nine company prices -> tenth company
  abalone      4177     10     sex expanded to three 0/1 columns -> rings

Sources: the UCI machine-learning repository for machine, autompg, boston and
abalone; OpenML (pyrim, triazines, stock, diabetes_numeric) for the four
tables that UCI does not host in numeric form. These are the same tables used
by the ordinal-regression benchmark literature; equal-interval discretization
into five categories happens later, inside the benchmark itself.

If a download is blocked, fetch the raw files by hand, drop them into
--raw-dir with the names shown by --list-raw, and rerun; the preparation step
is local.
"""

import argparse
import csv
import io
import json
import sys
import urllib.request
from pathlib import Path

EXPECTED = {
    "diabetes": (43, 2),
    "pyrimidines": (74, 27),
    "triazines": (186, 60),
    "machine": (209, 6),
    "autompg": (392, 7),
    "boston": (506, 13),
    "stocks": (950, 9),
    "abalone": (4177, 10),
}

UCI = "https://archive.ics.uci.edu/ml/machine-learning-databases"
UCI_RAW = {
    "machine": [f"{UCI}/cpu-performance/machine.data"],
    "autompg": [f"{UCI}/auto-mpg/auto-mpg.data"],
    "boston": [f"{UCI}/housing/housing.data", "http://lib.stat.cmu.edu/datasets/boston"],
    "abalone": [f"{UCI}/abalone/abalone.data"],
}
OPENML_NAMES = {
    "diabetes": "diabetes_numeric",
    "pyrimidines": "pyrim",
    "triazines": "triazines",
    "stocks": "stock",
}
RAW_FILENAMES = {
    "machine": "machine.data",
    "autompg": "auto-mpg.data",
    "boston": "housing.data",
    "abalone": "abalone.data",
    "diabetes": "diabetes_numeric.arff",
    "pyrimidines": "pyrim.arff",
    "triazines": "triazines.arff",
    "stocks": "stock.arff",
}


def http_get(url: str) -> str:
    req = urllib.request.Request(url, headers={"User-Agent": "ordrank-fetch/1.0"})
    with urllib.request.urlopen(req, timeout=60) as response:
        return response.read().decode("utf-8", errors="replace")


def fetch_first(urls, raw_path: Path) -> str:
    if raw_path.exists():
        print(f"  using local raw file {raw_path}")
        return raw_path.read_text()
    last_error = None
    for url in urls:
        try:
            print(f"  downloading {url}")
            text = http_get(url)
            raw_path.parent.mkdir(parents=True, exist_ok=True)
            raw_path.write_text(text)
            return text
        except Exception as e:  # noqa: BLE001 - report and try the next mirror
            last_error = e
            print(f"    failed: {e}")
    raise RuntimeError(f"all sources failed (last: {last_error}); "
                       f"download manually to {raw_path}")


def openml_arff(name: str, raw_path: Path) -> str:
    if raw_path.exists():
        print(f"  using local raw file {raw_path}")
        return raw_path.read_text()
    listing = json.loads(http_get(
        f"https://api.openml.org/api/v1/json/data/list/data_name/{name}/limit/1"))
    did = listing["data"]["dataset"][0]["did"]
    description = json.loads(http_get(
        f"https://api.openml.org/api/v1/json/data/{did}"))
    url = description["data_set_description"]["url"]
    print(f"  downloading {url} (OpenML dataset {did})")
    text = http_get(url)
    raw_path.parent.mkdir(parents=True, exist_ok=True)
    raw_path.write_text(text)
    return text


def parse_arff(text: str):
    """Minimal ARFF reader for purely numeric tables."""
    rows = []
    in_data = False
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("%"):
            continue
        if line.lower().startswith("@data"):
            in_data = True
            continue
        if line.startswith("@"):
            continue
        if in_data:
            rows.append([float(cell) for cell in line.split(",")])
    return rows


def prepare_machine(text: str):
    rows = []
    for record in csv.reader(io.StringIO(text)):
        if not record:
            continue
        # vendor, model, MYCT, MMIN, MMAX, CACH, CHMIN, CHMAX, PRP, ERP
        rows.append([float(v) for v in record[2:8]] + [float(record[8])])
    return rows


def prepare_autompg(text: str):
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        body = line.split('"')[0].split()
        # mpg cylinders displacement horsepower weight acceleration year origin
        if "?" in body[:8]:
            continue
        values = [float(v) for v in body[:8]]
        rows.append(values[1:8] + [values[0]])
    return rows


def prepare_boston(text: str):
    # housing.data is 506 rows of 14 whitespace-separated numbers; the CMU
    # mirror wraps each observation over two physical lines after a header.
    numbers = []
    lines = text.splitlines()
    if lines and lines[0].lstrip().startswith(("The Boston house-price",)):
        # CMU format: skip the 22-line header.
        lines = lines[22:]
    for line in lines:
        numbers.extend(float(v) for v in line.split())
    if len(numbers) % 14 != 0:
        raise RuntimeError(f"boston: expected a multiple of 14 values, got {len(numbers)}")
    return [numbers[i:i + 14] for i in range(0, len(numbers), 14)]


def prepare_abalone(text: str):
    rows = []
    for record in csv.reader(io.StringIO(text)):
        if not record:
            continue
        sex = record[0].strip().upper()
        onehot = [1.0 if sex == s else 0.0 for s in ("M", "F", "I")]
        rows.append(onehot + [float(v) for v in record[1:8]] + [float(record[8])])
    return rows


def prepare(name: str, raw_dir: Path):
    raw_path = raw_dir / RAW_FILENAMES[name]
    if name in OPENML_NAMES:
        return parse_arff(openml_arff(OPENML_NAMES[name], raw_path))
    text = fetch_first(UCI_RAW[name], raw_path)
    return {
        "machine": prepare_machine,
        "autompg": prepare_autompg,
        "boston": prepare_boston,
        "abalone": prepare_abalone,
    }[name](text)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    default_out = Path(__file__).resolve().parent.parent / "data" / "benchmark"
    parser.add_argument("--out-dir", type=Path, default=default_out,
                        help="where to write <name>.csv (default: data/benchmark)")
    parser.add_argument("--raw-dir", type=Path, default=default_out / "raw",
                        help="cache of raw downloads / place for manual downloads")
    parser.add_argument("--only", nargs="*", choices=sorted(EXPECTED),
                        help="prepare only these datasets")
    parser.add_argument("--list-raw", action="store_true",
                        help="print the expected raw filenames and exit")
    args = parser.parse_args()

    if args.list_raw:
        for name, filename in RAW_FILENAMES.items():
            print(f"{name}: {args.raw_dir / filename}")
        return 0

    names = args.only if args.only else sorted(EXPECTED)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    failures = []
    for name in names:
        print(f"preparing {name}...")
        try:
            rows = prepare(name, args.raw_dir)
            expected_rows, expected_features = EXPECTED[name]
            if len(rows) != expected_rows or any(len(r) != expected_features + 1 for r in rows):
                raise RuntimeError(
                    f"shape mismatch: got {len(rows)} rows x {len(rows[0]) - 1} features, "
                    f"expected {expected_rows} x {expected_features}")
            out_path = args.out_dir / f"{name}.csv"
            with out_path.open("w") as out:
                for row in rows:
                    out.write(",".join(repr(v) for v in row) + "\n")
            print(f"  wrote {out_path} ({len(rows)} rows)")
        except Exception as e:  # noqa: BLE001
            failures.append(f"{name}: {e}")
            print(f"  FAILED: {e}", file=sys.stderr)

    if failures:
        print("\nnot prepared:", file=sys.stderr)
        for f in failures:
            print(f"  {f}", file=sys.stderr)
        return 1
    print("\nall datasets prepared; run the benchmark or the acceptance suite")
    return 0


if __name__ == "__main__":
    sys.exit(main())
