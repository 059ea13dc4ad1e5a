"""The report path: route table rows, the CSV file, and the two figures."""

import csv
import json
import os

from quasicomm.report import generate_report, witness_rows, write_route_table
from quasicomm.spectrum import spectrum_C


def test_witness_rows_cover_every_target():
    rows = witness_rows(5)
    assert len(rows) == sum(len(spectrum_C(n)) for n in range(1, 6))
    for row in rows:
        assert row["k"] == row["recount"]
        assert row["rule"]
        json.loads(row["params"])
    by_order = {row["n"] for row in rows}
    assert by_order == {1, 2, 3, 4, 5}


def test_write_route_table(tmp_path):
    rows = witness_rows(4)
    path = write_route_table(rows, str(tmp_path / "routes.csv"))
    with open(path, newline="") as fh:
        back = list(csv.DictReader(fh))
    assert len(back) == len(rows)
    assert back[0]["n"] == "1"
    assert set(back[0]) == {"n", "k", "recount", "rule", "params"}


def test_generate_report_files(tmp_path):
    out_dir = tmp_path / "out"
    paths = generate_report(str(out_dir), max_n=6, seed=0)
    assert [os.path.basename(p) for p in paths] == [
        "routes.csv", "coverage.png", "routes.png",
    ]
    for p in paths:
        assert os.path.getsize(p) > 0
    with open(paths[1], "rb") as fh:
        assert fh.read(8) == b"\x89PNG\r\n\x1a\n"
