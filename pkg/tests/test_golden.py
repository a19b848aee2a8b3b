# -*- coding: utf-8 -*-
import json
from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent.parent / "docs" / "golden"


def _cases():
    for path in sorted(GOLDEN_DIR.glob("*.json")):
        doc = json.loads(path.read_text(encoding="utf-8"))
        for i, case in enumerate(doc["cases"]):
            yield pytest.param(case, id=f"{doc['name']}-{i}")


@pytest.mark.parametrize("case", list(_cases()))
def test_golden_case(case, run_cli, contains):
    code, payload, _ = run_cli(*case["argv"])
    assert code == case["exit_code"], payload
    contains(payload, case["expected"])


def test_golden_files_cover_the_worked_examples():
    names = {json.loads(p.read_text(encoding="utf-8"))["name"] for p in GOLDEN_DIR.glob("*.json")}
    assert names == {
        "rank_sequence_filters",
        "bgg_of_an_ideal",
        "cartan_differentials",
        "koszul_three_variables",
        "eagon_northcott_and_strands",
        "submodule_hilbert_functions",
        "twisted_cubic_specialization",
    }
